//! Catalecticant ranks and apolar ideals of a few cubics in six variables.

use apolarkit::apolarity::{apolar_ideal_component, basis_forms, catalecticant, hilbert_function};
use apolarkit::constructions::family_f_example;
use apolarkit::text::{parse_form, ParseOptions};
use apolarkit::{Alphabet, Q};

fn main() -> apolarkit::Result<()> {
    let fermat = parse_form::<Q>(&(), "x0^3+x1^3+x2^3+x3^3+x4^3+x5^3", ParseOptions::default())?;
    let family = family_f_example::<Q>(&());
    let degenerate = parse_form::<Q>(&(), "x0^3+x0*x1^2+x2^3", ParseOptions::default())?;
    for (name, f) in [("Fermat", &fermat), ("f(1,-1,1,-1,1)", &family), ("cone", &degenerate)] {
        println!("{name}: {f}");
        println!("  Hilbert function of the apolar algebra: {:?}", hilbert_function(f)?);
        println!("  rank Cat(1, 2) = {}", catalecticant(f, 1)?.rank());
        let quadrics = basis_forms(&apolar_ideal_component(f, 2)?, Alphabet::Y)?;
        println!("  dim I_f(2) = {}", quadrics.len());
        for q in quadrics.iter().take(4) {
            println!("    {q}");
        }
        if quadrics.len() > 4 {
            println!("    ...");
        }
    }
    Ok(())
}
