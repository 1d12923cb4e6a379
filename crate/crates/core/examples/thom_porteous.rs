//! Degree of the rank <= 20 locus of M2 measured on random lines over F_101.

use apolarkit::constructions::family_f_example;
use apolarkit::rank_loci::{drop_on_line, random_line};
use apolarkit::resolutions::m2_matrix;
use apolarkit::Fp;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> apolarkit::Result<()> {
    let p = 101;
    let m = m2_matrix(&family_f_example::<Fp>(&p), None)?;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..5 {
        let (a, b) = random_line::<Fp, _>(&p, 6, &mut rng);
        let d = drop_on_line(&m, &a, &b, 20, rng.gen())?;
        println!(
            "degree {} (with multiplicity {}, {} at infinity) after {} rounds; gcd {:?}",
            d.degree,
            d.full_degree,
            d.at_infinity,
            d.rounds,
            d.gcd.coeffs().iter().map(|c| c.value()).collect::<Vec<_>>()
        );
    }
    Ok(())
}
