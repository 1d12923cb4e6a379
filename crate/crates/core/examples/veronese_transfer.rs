//! The maps between ternary sextics and cubics in six variables.

use apolarkit::apolarity::apolar_action;
use apolarkit::constructions::{m_star, s_map, s_map_constant, veronese_ideal_quadrics};
use apolarkit::text::{parse_form, ParseOptions};
use apolarkit::Q;

fn main() -> apolarkit::Result<()> {
    println!("normalization constant c = {}", s_map_constant());
    let a = parse_form::<Q>(&(), "z0+2*z1-z2", ParseOptions::default())?;
    let s = s_map(&a.pow(6)?)?;
    println!("s(a^6) = {s}");
    println!("m*(s(a^6)) = a^6: {}", m_star(&s)? == a.pow(6)?);

    let g = parse_form::<Q>(&(), "z0^6-3*z0^2*z1^3*z2+z1*z2^5+7*z0*z1^4*z2", ParseOptions::default())?;
    let f = s_map(&g)?;
    println!("s(g) = {f}");
    println!("m*(s(g)) = g: {}", m_star(&f)? == g);
    let apolar = veronese_ideal_quadrics::<Q>(&())
        .iter()
        .map(|q| apolar_action(q, &f).map(|r| r.is_zero()))
        .collect::<apolarkit::Result<Vec<_>>>()?;
    println!("each Veronese minor kills s(g): {apolar:?}");
    Ok(())
}
