//! The 35 x 21 matrix of linear second syzygies and its rank at general and
//! at Veronese points.

use apolarkit::constructions::{family_f_example, veronese_point};
use apolarkit::resolutions::m2_matrix;
use apolarkit::{Field, Q};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> apolarkit::Result<()> {
    let f = family_f_example::<Q>(&());
    let m = m2_matrix(&f, None)?;
    println!("M2 is {} x {} in {} variables", m.rows(), m.cols(), m.num_vars());
    println!("first row: {}", (0..4).map(|c| m.entry(0, c).to_string()).collect::<Vec<_>>().join(", "));

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let general: Vec<usize> = (0..5)
        .map(|_| m.rank_at_point(&(0..6).map(|_| Q::random(&(), &mut rng)).collect::<Vec<_>>()))
        .collect::<apolarkit::Result<_>>()?;
    println!("rank at random points: {general:?}");
    let veronese: Vec<usize> = (0..5)
        .map(|_| m.rank_at_point(&veronese_point(&std::array::from_fn(|_| Q::random(&(), &mut rng)))))
        .collect::<apolarkit::Result<_>>()?;
    println!("rank at Veronese points: {veronese:?}");

    // other bases give another matrix with the same ranks
    let other = m2_matrix(&f, Some(11))?;
    let p: Vec<Q> = (0..6).map(|i| Q::from_i64(&(), i + 1)).collect();
    println!("rank at (1,...,6) in both bases: {} {}", m.rank_at_point(&p)?, other.rank_at_point(&p)?);
    Ok(())
}
