//! The cubic of the scroll example: its apolar ideal, the action of the
//! scroll minors on it, and M2 on the plane x3 = x4 = x5 = 0.

use apolarkit::apolarity::{apolar_action, is_apolar_variety};
use apolarkit::constructions::{conic_points_config, ir_cubic, scroll_minors};
use apolarkit::repro::restrict_to_first_plane;
use apolarkit::resolutions::{full_betti, m2_matrix, GradedQuotient};
use apolarkit::{Field, Q};

fn main() -> apolarkit::Result<()> {
    let f = ir_cubic::<Q>(&());
    println!("f = {f}");
    print!("{}", full_betti(&GradedQuotient::apolar_algebra(&f)?)?);
    println!("apolar to the scroll: {}", is_apolar_variety(&scroll_minors::<Q>(&()), &f)?);
    for q in scroll_minors::<Q>(&()) {
        println!("  ({q}) o f = {}", apolar_action(&q, &f)?);
    }
    let config = conic_points_config::<Q>(&());
    println!("apolar to the conic: {}", is_apolar_variety(&config.conic, &f)?);

    let m = restrict_to_first_plane(&m2_matrix(&f, None)?)?;
    let ranks: Vec<usize> = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 2, 3], [3, -1, 4]]
        .iter()
        .map(|p| m.rank_at_point(&p.map(|x| Q::from_i64(&(), x))))
        .collect::<apolarkit::Result<_>>()?;
    println!("ranks of M2 on the plane: {ranks:?}");
    Ok(())
}
