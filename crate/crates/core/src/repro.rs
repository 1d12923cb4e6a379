//! Named reproduction cases: each recomputes a published value from scratch
//! and compares it with the stored reference.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::apolarity::{apolar_action, is_apolar_variety, min_partial_rank_scan, PointSet};
use crate::constructions::{
    family_f_example, ir_cubic, nine_points_betti, paper_plane_substitution, scroll_minors, ten_points_betti,
    veronese_ideal_quadrics, veronese_point, CURVE_MOD5,
};
use crate::error::{Error, Result};
use crate::field::{rational_to, Field, Fp, Fp2, Fp2Ctx, Q};
use crate::form::{Alphabet, HomogeneousForm};
use crate::rank_loci::{
    classify_singularity, descend_to_prime_field, drop_on_line, interpolate_drop_curve_on_lines, random_line,
    singular_points_plane_curve, Singularity,
};
use crate::resolutions::{full_betti, generic_cubic_betti, graded_betti, m2_matrix, BettiTable, GradedQuotient, LinearFormMatrix};
use crate::text::{parse_form, ParseOptions};

pub const CASES: [&str; 8] = [
    "betti-generic",
    "points9",
    "points10",
    "lefiniteveronese",
    "ir-example",
    "veronese-rank-drop",
    "thom-porteous",
    "drk3-scan",
];

/// One compared quantity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.to_string(), passed, detail: detail.into() }
    }
}

/// Runs one case by name.
pub fn run_case(name: &str, seed: u64) -> Result<Vec<Check>> {
    match name {
        "betti-generic" => betti_generic(seed),
        "points9" => points_case(9, &nine_points_betti(), seed),
        "points10" => points_case(10, &ten_points_betti(), seed),
        "lefiniteveronese" => lefiniteveronese(seed),
        "ir-example" => ir_example(seed),
        "veronese-rank-drop" => veronese_rank_drop(seed),
        "thom-porteous" => thom_porteous(seed),
        "drk3-scan" => drk3_scan(),
        _ => Err(Error::Precondition(format!("unknown case {name:?}; known cases: {}", CASES.join(", ")))),
    }
}

/// Random cubic over Q with coefficients in `-20..=20`.
pub fn random_cubic(seed: u64) -> HomogeneousForm<Q> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = crate::monomial::count(6, 3);
    HomogeneousForm::new(&(), Alphabet::X, 6, 3, (0..n).map(|_| Q::random(&(), &mut rng)).collect())
        .expect("coefficient count matches")
}

fn table_check(name: &str, got: &BettiTable, want: &BettiTable) -> Check {
    Check::new(name, got == want, if got == want { "matches".to_string() } else { format!("got\n{got}expected\n{want}") })
}

fn betti_generic(seed: u64) -> Result<Vec<Check>> {
    let random = full_betti(&GradedQuotient::apolar_algebra(&random_cubic(seed))?)?;
    let family = full_betti(&GradedQuotient::apolar_algebra(&family_f_example::<Q>(&()))?)?;
    Ok(vec![
        table_check("random cubic", &random, &generic_cubic_betti()),
        table_check("f(1,-1,1,-1,1)", &family, &generic_cubic_betti()),
    ])
}

/// Betti table of `count` random rational points of `P^5` in the window `i <= 5`, `j <= 7`.
pub fn points_betti(count: usize, seed: u64) -> Result<BettiTable> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let z = PointSet::<Q>::random(&(), 6, count, &mut rng);
    graded_betti(&GradedQuotient::of_points(&z, 8)?, 5, 7)
}

fn points_case(count: usize, want: &BettiTable, seed: u64) -> Result<Vec<Check>> {
    (0..3)
        .map(|k| Ok(table_check(&format!("{count} points, seed {}", seed + k), &points_betti(count, seed + k)?, want)))
        .collect()
}

/// Random rational point with small integer coordinates.
fn random_point<R: Rng>(rng: &mut R, n: usize) -> Vec<Q> {
    (0..n).map(|_| Q::random(&(), rng)).collect()
}

/// The drop curve of `M2(f(1,-1,1,-1,1))` on the displayed plane, from the
/// cubic reduced mod 5 and lines over `F_25`.
pub fn plane_drop_curve_mod5(seed: u64) -> Result<HomogeneousForm<Fp2>> {
    let ctx = Fp2Ctx::new(5);
    let f = family_f_example::<Fp2>(&ctx);
    let plane: Vec<HomogeneousForm<Fp2>> =
        paper_plane_substitution::<Fp2>(&ctx).into_iter().map(|l| l.with_alphabet(Alphabet::Z)).collect();
    let m = m2_matrix(&f, None)?.restrict(&plane)?;
    Ok(interpolate_drop_curve_on_lines(&m, 20, 9, seed, 400)?.form)
}

/// The displayed mod-5 curve.
pub fn reference_curve_mod5() -> HomogeneousForm<Fp> {
    parse_form(&5, CURVE_MOD5, ParseOptions::default()).expect("catalog constant parses")
}

fn lefiniteveronese(seed: u64) -> Result<Vec<Check>> {
    let f = family_f_example::<Q>(&());
    let killed = veronese_ideal_quadrics::<Q>(&()).iter().all(|q| apolar_action(q, &f).map(|g| g.is_zero()).unwrap_or(false));
    let betti = full_betti(&GradedQuotient::apolar_algebra(&f)?)?;
    let m = m2_matrix(&f, None)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rank = m.rank_at_point(&random_point(&mut rng, 6))?;
    let curve = plane_drop_curve_mod5(seed)?;
    let base = descend_to_prime_field(&curve);
    let reference = reference_curve_mod5();
    let proportional = base.as_ref().is_some_and(|c| c.is_proportional_to(&reference));
    let sing = singular_points_plane_curve(&curve)?;
    let kinds = sing.iter().map(|p| classify_singularity(&curve, p)).collect::<Result<Vec<_>>>()?;
    let ctx = Fp2Ctx::new(5);
    let expected = [Fp2::zero(&ctx), Fp2::one(&ctx), Fp2::zero(&ctx)];
    let unique_node = sing.len() == 1 && kinds == [Singularity::Node];
    Ok(vec![
        Check::new("minors annihilate f", killed, ""),
        table_check("Betti table", &betti, &generic_cubic_betti()),
        Check::new("M2 is 35x21 of rank 21", (m.rows(), m.cols(), rank) == (35, 21, 21), format!("{}x{} rank {rank}", m.rows(), m.cols())),
        Check::new(
            "degree-9 curve mod 5 proportional to reference",
            proportional,
            match &base {
                Some(c) => format!("computed {c}"),
                None => format!("computed {curve} (not defined over F_5)"),
            },
        ),
        Check::new("unique singular point is a node", unique_node, format!("{} singular point(s): {}", sing.len(), describe_points(&sing, &kinds))),
        Check::new("singular point at (0:1:0)", unique_node && sing[0] == expected, describe_points(&sing, &kinds)),
    ])
}

fn describe_points<F: Field>(pts: &[Vec<F>], kinds: &[Singularity]) -> String {
    pts.iter()
        .zip(kinds)
        .map(|(p, k)| format!("({}) {k}", p.iter().map(ToString::to_string).collect::<Vec<_>>().join(":")))
        .collect::<Vec<_>>()
        .join(", ")
}

/// `M2` restricted to the plane `x3 = x4 = x5 = 0`.
pub fn restrict_to_first_plane<F: Field>(m: &LinearFormMatrix<F>) -> Result<LinearFormMatrix<F>> {
    let ctx = m.ctx();
    let subst: Vec<HomogeneousForm<F>> = (0..6)
        .map(|i| if i < 3 { HomogeneousForm::variable(ctx, Alphabet::Z, 3, i) } else { HomogeneousForm::zero(ctx, Alphabet::Z, 3, 1) })
        .collect();
    m.restrict(&subst)
}

fn ir_example(seed: u64) -> Result<Vec<Check>> {
    let f = ir_cubic::<Q>(&());
    let apolar = is_apolar_variety(&scroll_minors::<Q>(&()), &f)?;
    let betti = full_betti(&GradedQuotient::apolar_algebra(&f)?)?;
    let restricted = restrict_to_first_plane(&m2_matrix(&f, None)?)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ranks = (0..5).map(|_| restricted.rank_at_point(&random_point(&mut rng, 3))).collect::<Result<Vec<_>>>()?;
    Ok(vec![
        Check::new("apolar to the quartic scroll", apolar, ""),
        table_check("Betti table", &betti, &generic_cubic_betti()),
        Check::new("M2 on V(x3,x4,x5) has rank 21", ranks.iter().all(|&r| r == 21), format!("ranks {ranks:?}")),
    ])
}

/// Ranks of `M2(f(1,-1,1,-1,1))` at `count` random rational Veronese points.
pub fn veronese_ranks(count: usize, seed: u64) -> Result<Vec<usize>> {
    let m = m2_matrix(&family_f_example::<Q>(&()), None)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let a: [Q; 3] = std::array::from_fn(|_| Q::random(&(), &mut rng));
            m.rank_at_point(&veronese_point(&a))
        })
        .collect()
}

fn veronese_rank_drop(seed: u64) -> Result<Vec<Check>> {
    let ranks = veronese_ranks(20, seed)?;
    let exact = ranks.iter().filter(|&&r| r == 20).count();
    Ok(vec![
        Check::new("rank <= 20 on the Veronese surface", ranks.iter().all(|&r| r <= 20), format!("ranks {ranks:?}")),
        Check::new("rank exactly 20 at a majority", 2 * exact > ranks.len(), format!("{exact} of {}", ranks.len())),
    ])
}

/// Degrees of the rank-`<= 20` locus of `M2(f(1,-1,1,-1,1))` on `count`
/// random lines over `F_p`.
pub fn thom_porteous_degrees(p: u64, count: usize, seed: u64) -> Result<Vec<usize>> {
    let m = m2_matrix(&family_f_example::<Q>(&()), None)?;
    let m = m.map_field(&p, |x| rational_to::<Fp>(&p, x))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let (a, b) = random_line::<Fp, _>(&p, 6, &mut rng);
            Ok(drop_on_line(&m, &a, &b, 20, rng.gen())?.degree)
        })
        .collect()
}

fn thom_porteous(seed: u64) -> Result<Vec<Check>> {
    let degrees = thom_porteous_degrees(101, 5, seed)?;
    Ok(vec![Check::new("degree 35 - 15*2 + 4 = 9 on lines over F_101", degrees.iter().all(|&d| d == 9), format!("degrees {degrees:?}"))])
}

fn drk3_scan() -> Result<Vec<Check>> {
    let f = family_f_example::<Fp>(&5);
    let scan = min_partial_rank_scan(&f)?;
    Ok(vec![Check::new(
        "no partial of rank <= 3 over F_5",
        scan.min_rank >= 4,
        format!("minimum rank {} over {} points", scan.min_rank, scan.points_scanned),
    )])
}

pub fn checks_to_json(case: &str, checks: &[Check]) -> Value {
    json!({"case": case, "passed": checks.iter().all(|c| c.passed), "checks": checks})
}
