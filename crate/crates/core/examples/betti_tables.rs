//! Betti tables from Koszul homology: the apolar ideal of a cubic fourfold
//! and the ideals of nine and ten general points of P^5.

use apolarkit::apolarity::PointSet;
use apolarkit::constructions::{family_f_example, nine_points_betti, ten_points_betti};
use apolarkit::resolutions::{full_betti, graded_betti, GradedQuotient};
use apolarkit::Q;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> apolarkit::Result<()> {
    let f = family_f_example::<Q>(&());
    println!("apolar ideal of {f}");
    print!("{}", full_betti(&GradedQuotient::apolar_algebra(&f)?)?);

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (count, expected) in [(9, nine_points_betti()), (10, ten_points_betti())] {
        let z = PointSet::<Q>::random(&(), 6, count, &mut rng);
        let table = graded_betti(&GradedQuotient::of_points(&z, 8)?, 5, 7)?;
        println!("\n{count} random points (matches reference: {})", table == expected);
        print!("{table}");
    }
    Ok(())
}
