//! Exhaustive scan of the first partials of f(1,-1,1,-1,1) over F_5 and F_7.

use apolarkit::apolarity::min_partial_rank_scan;
use apolarkit::constructions::family_f_example;
use apolarkit::Fp;

fn main() -> apolarkit::Result<()> {
    for p in [5, 7] {
        let scan = min_partial_rank_scan(&family_f_example::<Fp>(&p))?;
        let w: Vec<u64> = scan.witness.iter().map(Fp::value).collect();
        println!("F_{p}: minimum rank {} over {} directions, first at {w:?}", scan.min_rank, scan.points_scanned);
    }
    Ok(())
}
