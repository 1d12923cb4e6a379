//! Power sums of cubes: apolarity of the dual point set against membership
//! in the span of the cubes.

use apolarkit::apolarity::{is_apolar_pointset, is_in_power_span, PointSet};
use apolarkit::constructions::random_power_sum;
use apolarkit::{Field, Fp, Matrix};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> apolarkit::Result<()> {
    let p = 32003;
    for (k, coplanar) in [(6, false), (10, false), (8, true)] {
        let ps = random_power_sum::<Fp>(&p, k, k as u64, coplanar)?;
        let z = PointSet::new(&p, ps.forms.iter().map(|l| l.coeffs().to_vec()).collect())?;
        print!("{k} cubes{}: apolar {}, in span {}", if coplanar { " (4 coplanar)" } else { "" }, is_apolar_pointset(&z, &ps.f)?, is_in_power_span(&z, &ps.f)?);
        if coplanar {
            let first: Vec<Vec<Fp>> = ps.forms[..4].iter().map(|l| l.coeffs().to_vec()).collect();
            print!(", rank of the first four {}", Matrix::from_rows(&p, 6, first)?.rank());
        }
        println!();
    }

    // a random cubic is not a sum of ten cubes of given forms
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let z = PointSet::<Fp>::random(&p, 6, 10, &mut rng);
    let coeffs = (0..56).map(|_| Fp::random(&p, &mut rng)).collect();
    let f = apolarkit::HomogeneousForm::new(&p, apolarkit::Alphabet::X, 6, 3, coeffs)?;
    println!("random cubic against 10 random points: apolar {}, in span {}", is_apolar_pointset(&z, &f)?, is_in_power_span(&z, &f)?);
    Ok(())
}
