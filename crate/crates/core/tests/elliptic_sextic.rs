//! The stored Betti table of an elliptic normal sextic against one computed
//! from points on such a curve: a plane cubic embedded by conics.

use apolarkit::apolarity::PointSet;
use apolarkit::constructions::elliptic_sextic_betti;
use apolarkit::resolutions::{graded_betti, GradedQuotient};
use apolarkit::{Field, Fp};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const P: u64 = 32003;

/// Points of `y^2 = x^3 + 3x + 7` mapped to `(x^2, xy, x, y^2, y, 1)`.
fn points_on_sextic(count: usize, seed: u64) -> PointSet<Fp> {
    assert_eq!(P % 4, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts = Vec::new();
    while pts.len() < count {
        let x = Fp::random(&P, &mut rng);
        let rhs = x.pow(3).add(&x.mul(&Fp::new(3, P))).add(&Fp::new(7, P));
        let y = rhs.pow((P + 1) / 4);
        if y.mul(&y) != rhs {
            continue;
        }
        let one = Fp::one(&P);
        pts.push(vec![x.mul(&x), x.mul(&y), x, y.mul(&y), y, one]);
    }
    PointSet::new(&P, pts).unwrap()
}

#[test]
fn elliptic_sextic_table_from_points() {
    // h(k) = 6k for the curve, so 60 points see its ideal up to degree 9
    let z = points_on_sextic(60, 5);
    let a = GradedQuotient::of_points(&z, 8).unwrap();
    assert_eq!(&a.hilbert_function()[..5], &[1, 6, 12, 18, 24]);
    let table = graded_betti(&a, 5, 7).unwrap();
    assert_eq!(table, elliptic_sextic_betti(), "\n{table}");
}
