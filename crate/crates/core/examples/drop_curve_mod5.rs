//! The plane curve where the restricted M2 drops rank, over F_25, and its
//! singular points.

use apolarkit::constructions::{family_f_example, paper_plane_substitution};
use apolarkit::rank_loci::{
    classify_singularity, descend_to_prime_field, interpolate_drop_curve_on_lines, projective_points,
    singular_points_plane_curve, RankProfile,
};
use apolarkit::repro::reference_curve_mod5;
use apolarkit::resolutions::m2_matrix;
use apolarkit::{Alphabet, Fp2, Fp2Ctx};

fn main() -> apolarkit::Result<()> {
    let ctx = Fp2Ctx::new(5);
    let f = family_f_example::<Fp2>(&ctx);
    let plane: Vec<_> = paper_plane_substitution::<Fp2>(&ctx).into_iter().map(|l| l.with_alphabet(Alphabet::Z)).collect();
    let m = m2_matrix(&f, None)?.restrict(&plane)?;

    let profile = RankProfile::sample(&m, &projective_points::<Fp2>(&ctx, 3)?, 20)?;
    println!("ranks over P^2(F_25): {:?}", profile.histogram());

    let fit = interpolate_drop_curve_on_lines(&m, 20, 9, 2, 400)?;
    println!("curve from {} lines ({} skipped):", fit.lines_used, fit.lines_skipped);
    match descend_to_prime_field(&fit.form) {
        Some(c) => {
            println!("  {c}");
            println!("  proportional to the stored curve: {}", c.is_proportional_to(&reference_curve_mod5()));
        }
        None => println!("  {} (not over F_5)", fit.form),
    }
    for p in singular_points_plane_curve(&fit.form)? {
        let coords: Vec<String> = p.iter().map(ToString::to_string).collect();
        println!("singular point ({}): {}", coords.join(":"), classify_singularity(&fit.form, &p)?);
    }
    Ok(())
}
