//! Explicit objects: the Veronese surface and its discriminant cubic, the
//! transfer maps between ternary sextics and cubic fourfolds, the apolar
//! family of cubics, the plane section used for the drop curve, the scroll
//! example, power sums and reference Betti tables.
//!
//! Primal forms use the `x` alphabet and operators the `y` alphabet. The
//! coordinates of `P^5` are the entries of a symmetric `3 x 3` matrix,
//!
//! ```text
//! | 0 1 2 |
//! | 1 3 4 |
//! | 2 4 5 |
//! ```
//!
//! so variable `k` corresponds to the pair `(i, j)` of [`SYMMETRIC_PAIRS`].

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::apolarity::{apolar_action, check_characteristic};
use crate::error::{Error, Result};
use crate::field::{same_field, Field, Q};
use crate::form::{Alphabet, HomogeneousForm};
use crate::resolutions::{generic_cubic_betti, BettiTable};
use crate::text::{parse_form, ParseOptions};

/// Variable `k` of `P^5` is the symmetric matrix entry `SYMMETRIC_PAIRS[k]`.
pub const SYMMETRIC_PAIRS: [(usize, usize); 6] = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)];

/// Degree-9 plane curve over `F_5` along which the restricted `M2` of
/// `family_f(1,-1,1,-1,1)` drops rank, in canonical text form.
pub const CURVE_MOD5: &str = concat!(
    "z0^9-2*z0^8*z1+2*z0^7*z1^2+2*z0^7*z1*z2+2*z0^7*z2^2-z0^6*z1^3-2*z0^6*z1^2*z2",
    "-z0^6*z1*z2^2-z0^5*z1^4+z0^5*z1^3*z2+2*z0^5*z1^2*z2^2-2*z0^5*z1*z2^3+z0^5*z2^4",
    "-z0^4*z1^3*z2^2+z0^4*z1^2*z2^3+z0^4*z1*z2^4+z0^4*z2^5-z0^3*z1^6+z0^3*z1^5*z2",
    "-z0^3*z1^4*z2^2+z0^3*z1^3*z2^3+z0^3*z1^2*z2^4-z0^3*z1*z2^5-2*z0^3*z2^6-2*z0^2*z1^7",
    "+2*z0^2*z1^5*z2^2+2*z0^2*z1^4*z2^3+2*z0^2*z1^3*z2^4+2*z0^2*z1^2*z2^5-2*z0^2*z1*z2^6",
    "+z0^2*z2^7-z0*z1^7*z2-z0*z1^6*z2^2-z0*z1^5*z2^3-z0*z1^4*z2^4-z0*z1^3*z2^5",
    "-z0*z1^2*z2^6+z0*z1*z2^7+2*z0*z2^8+z1^7*z2^2-2*z1^6*z2^3+2*z1^5*z2^4-2*z1^4*z2^5",
    "-z1^3*z2^6+2*z1^2*z2^7-z2^9",
);

const VERONESE_MINORS: [&str; 6] =
    ["y0*y3-y1^2", "y0*y5-y2^2", "y3*y5-y4^2", "y0*y4-y1*y2", "y1*y4-y2*y3", "y1*y5-y2*y4"];

const DISCRIMINANT: &str = "y0*y3*y5-y0*y4^2-y1^2*y5+2*y1*y2*y4-y2^2*y3";

/// The five cubics spanning the apolar family, in the order of its parameters.
const FAMILY: [&str; 5] = [
    "2*x2*x4*x5+x1*x5^2",
    "x2*x3^2+2*x1*x3*x4",
    "2*x1*x2*x3+x1^2*x4+2*x0*x3*x4",
    "x2^3+6*x0*x2*x5",
    "x1*x2^2+2*x0*x2*x4+2*x0*x1*x5",
];

const PLANE: [&str; 6] = ["z0+z1+z2", "z0+z1", "z1", "z0", "z0+z2", "z2"];

const IR_CUBIC: &str = concat!(
    "2*x1^2*x2-2*x0*x2^2-2*x1^2*x3-2*x3^2*x4-x0*x1*x5+2*x1*x2*x5",
    "+x2^2*x5+x2*x3*x5+3*x1*x4*x5+x4^2*x5+3*x0*x5^2+x3*x5^2",
);

const SCROLL: [[&str; 4]; 2] = [["y0", "y1", "y3", "y4"], ["y1", "y2", "y4", "y5"]];

const POINTS_MATRIX: [[&str; 6]; 2] = [
    ["y0", "y1", "y3", "y4", "y0+y3+y5", "y1+y2+y4"],
    ["y1", "y2", "y4", "y5", "y1+y3+y4", "y0+y2+y5"],
];

const CONIC: [&str; 4] = ["y0*y2-y1^2", "y3", "y4", "y5"];

fn parse<F: Field>(ctx: &F::Ctx, s: &str) -> HomogeneousForm<F> {
    parse_form(ctx, s, ParseOptions::default()).unwrap_or_else(|e| panic!("catalog constant {s:?}: {e}"))
}

/// The six `2 x 2` minors cutting out the Veronese surface, in the dual alphabet.
pub fn veronese_ideal_quadrics<F: Field>(ctx: &F::Ctx) -> Vec<HomogeneousForm<F>> {
    VERONESE_MINORS.iter().map(|s| parse(ctx, s)).collect()
}

/// `(a0^2, a0 a1, a0 a2, a1^2, a1 a2, a2^2)`.
pub fn veronese_point<F: Field>(a: &[F; 3]) -> Vec<F> {
    SYMMETRIC_PAIRS.iter().map(|&(i, j)| a[i].mul(&a[j])).collect()
}

/// Determinant of the generic symmetric matrix, in the dual alphabet.
pub fn discriminant_cubic<F: Field>(ctx: &F::Ctx) -> HomogeneousForm<F> {
    parse(ctx, DISCRIMINANT)
}

/// `sum_k params[k] * (k-th family cubic)`, a cubic annihilated by every Veronese minor.
pub fn family_f<F: Field>(ctx: &F::Ctx, params: &[F; 5]) -> HomogeneousForm<F> {
    let mut acc = HomogeneousForm::zero(ctx, Alphabet::X, 6, 3);
    for (p, s) in params.iter().zip(FAMILY) {
        acc = acc.add(&parse::<F>(ctx, s).scale(p)).expect("family members share a ring");
    }
    acc
}

/// `family_f(1, -1, 1, -1, 1)`.
pub fn family_f_example<F: Field>(ctx: &F::Ctx) -> HomogeneousForm<F> {
    let (p, m) = (F::one(ctx), F::one(ctx).neg());
    family_f(ctx, &[p.clone(), m.clone(), p.clone(), m, p])
}

/// The plane `P^2 -> P^5` used to slice `M2`, one linear form in `z` per dual variable.
pub fn paper_plane_substitution<F: Field>(ctx: &F::Ctx) -> Vec<HomogeneousForm<F>> {
    PLANE.iter().map(|s| parse(ctx, s)).collect()
}

/// The cubic of the scroll example.
pub fn ir_cubic<F: Field>(ctx: &F::Ctx) -> HomogeneousForm<F> {
    parse(ctx, IR_CUBIC)
}

/// `2 x 2` minors of a two-row matrix of linear forms, columns in lexicographic pairs.
pub fn two_by_two_minors<F: Field>(rows: [&[HomogeneousForm<F>]; 2]) -> Result<Vec<HomogeneousForm<F>>> {
    let [top, bottom] = rows;
    if top.len() != bottom.len() {
        return Err(Error::DimensionMismatch("rows of different length".into()));
    }
    let mut out = Vec::new();
    for a in 0..top.len() {
        for b in a + 1..top.len() {
            out.push(top[a].mul(&bottom[b])?.sub(&top[b].mul(&bottom[a])?)?);
        }
    }
    Ok(out)
}

fn matrix_minors<F: Field, const C: usize>(ctx: &F::Ctx, m: &[[&str; C]; 2]) -> Vec<HomogeneousForm<F>> {
    let rows: Vec<Vec<HomogeneousForm<F>>> = m.iter().map(|r| r.iter().map(|s| parse(ctx, s)).collect()).collect();
    two_by_two_minors([&rows[0], &rows[1]]).expect("catalog matrix is well formed")
}

/// The six `2 x 2` minors of the `2 x 4` scroll matrix.
pub fn scroll_minors<F: Field>(ctx: &F::Ctx) -> Vec<HomogeneousForm<F>> {
    matrix_minors(ctx, &SCROLL)
}

/// Generators attached to the scroll example: the ideal of the plane conic,
/// and the fifteen `2 x 2` minors of the `2 x 6` matrix.
#[derive(Debug, Clone)]
pub struct ConicPointsConfig<F: Field> {
    pub conic: Vec<HomogeneousForm<F>>,
    pub point_minors: Vec<HomogeneousForm<F>>,
}

pub fn conic_points_config<F: Field>(ctx: &F::Ctx) -> ConicPointsConfig<F> {
    ConicPointsConfig { conic: CONIC.iter().map(|s| parse(ctx, s)).collect(), point_minors: matrix_minors(ctx, &POINTS_MATRIX) }
}

/// The image of the dual variable `y_k` under `S^2 W* -> ...`: `w_i w_j` in the `z` alphabet.
fn veronese_quadric<F: Field>(ctx: &F::Ctx, k: usize, off_diagonal_weight: i64) -> HomogeneousForm<F> {
    let (i, j) = SYMMETRIC_PAIRS[k];
    let mut e = vec![0u32; 3];
    e[i] += 1;
    e[j] += 1;
    let w = if i == j { 1 } else { off_diagonal_weight };
    HomogeneousForm::monomial(ctx, Alphabet::Z, &e, F::from_i64(ctx, w))
}

/// Normalization of [`s_map`]: `s(a^6) = (a^2)^3` needs `720 c = 3!`.
pub fn s_map_constant() -> Q {
    Q::from_frac(1, 120)
}

/// `s: S^6 W -> S^3 V`, adjoint to the multiplication map `m: S^3 V* -> S^6 W*`,
/// `y_k -> w_i w_j`: `<D, s(g)> = c <m(D), g>` for every dual cubic `D`.
pub fn s_map<F: Field>(g: &HomogeneousForm<F>) -> Result<HomogeneousForm<F>> {
    if g.num_vars() != 3 || g.degree() != 6 {
        return Err(Error::Precondition(format!(
            "s needs a ternary sextic, got degree {} in {} variables",
            g.degree(),
            g.num_vars()
        )));
    }
    let ctx = g.ctx();
    check_characteristic::<F>(ctx, 6)?;
    let c = F::from_ratio(ctx, s_map_constant().as_ratio())?;
    let images: Vec<HomogeneousForm<F>> = (0..6).map(|k| veronese_quadric(ctx, k, 1)).collect();
    let g = g.clone().with_alphabet(Alphabet::Z);
    let basis = crate::monomial::basis(6, 3);
    let mut coeffs = Vec::with_capacity(basis.len());
    for alpha in basis.iter() {
        let d = HomogeneousForm::monomial(ctx, Alphabet::Y, alpha, F::one(ctx)).compose(&images)?;
        let pairing = apolar_action(&d, &g)?.coeffs()[0].clone();
        let fact: u64 = alpha.iter().map(|&a| (1..=a as u64).product::<u64>()).product();
        let inv = F::from_i64(ctx, fact as i64).inv().expect("characteristic exceeds 3");
        coeffs.push(pairing.mul(&c).mul(&inv));
    }
    HomogeneousForm::new(ctx, Alphabet::X, 6, 3, coeffs)
}

/// `m^*: S^3 V -> S^6 W`, evaluating `f` on the quadratic form of a symmetric
/// matrix: `x_ii -> w_i^2`, `x_ij -> 2 w_i w_j`.
pub fn m_star<F: Field>(f: &HomogeneousForm<F>) -> Result<HomogeneousForm<F>> {
    if f.num_vars() != 6 {
        return Err(Error::VarCountMismatch { expected: 6, got: f.num_vars() });
    }
    let ctx = f.ctx();
    let images: Vec<HomogeneousForm<F>> = (0..6).map(|k| veronese_quadric(ctx, k, 2)).collect();
    f.compose(&images)
}

/// A power sum `f = sum_i w_i l_i^3` with its summands.
#[derive(Debug, Clone)]
pub struct PowerSum<F: Field> {
    pub forms: Vec<HomogeneousForm<F>>,
    pub weights: Vec<F>,
    pub f: HomogeneousForm<F>,
}

/// `sum_i weights[i] * forms[i]^d`.
pub fn power_sum<F: Field>(forms: &[HomogeneousForm<F>], weights: &[F], d: usize) -> Result<HomogeneousForm<F>> {
    let first = forms.first().ok_or_else(|| Error::Precondition("no summands".into()))?;
    if forms.len() != weights.len() {
        return Err(Error::DimensionMismatch("one weight per form".into()));
    }
    let mut acc = HomogeneousForm::zero(first.ctx(), first.alphabet(), first.num_vars(), d);
    for (l, w) in forms.iter().zip(weights) {
        same_field::<F>(first.ctx(), &w.ctx())?;
        acc = acc.add(&l.pow(d)?.scale(w))?;
    }
    Ok(acc)
}

fn nonzero<F: Field, R: Rng>(ctx: &F::Ctx, rng: &mut R) -> F {
    loop {
        let x = F::random(ctx, rng);
        if !x.is_zero() {
            return x;
        }
    }
}

/// `k` random linear forms in six variables with nonzero random weights and
/// their cube combination. With `coplanar`, the first four forms lie in a
/// common three-dimensional space of linear forms.
pub fn random_power_sum<F: Field>(ctx: &F::Ctx, k: usize, seed: u64, coplanar: bool) -> Result<PowerSum<F>> {
    if coplanar && k < 4 {
        return Err(Error::Precondition("the coplanar option needs at least four forms".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random_linear = |rng: &mut ChaCha8Rng| {
        let c: Vec<F> = (0..6).map(|_| F::random(ctx, rng)).collect();
        HomogeneousForm::linear(ctx, Alphabet::X, &c)
    };
    let plane: Vec<HomogeneousForm<F>> = (0..3).map(|_| random_linear(&mut rng)).collect();
    let mut forms = Vec::with_capacity(k);
    while forms.len() < k {
        let l = if coplanar && forms.len() < 4 {
            let mut acc = HomogeneousForm::zero(ctx, Alphabet::X, 6, 1);
            for b in &plane {
                acc = acc.add(&b.scale(&F::random(ctx, &mut rng)))?;
            }
            acc
        } else {
            random_linear(&mut rng)
        };
        if !l.is_zero() && !forms.iter().any(|m: &HomogeneousForm<F>| m.is_proportional_to(&l)) {
            forms.push(l);
        }
    }
    let weights: Vec<F> = (0..k).map(|_| nonzero(ctx, &mut rng)).collect();
    let f = power_sum(&forms, &weights, 3)?;
    Ok(PowerSum { forms, weights, f })
}

/// Betti table of the ideal of nine general points of `P^5`.
pub fn nine_points_betti() -> BettiTable {
    BettiTable::from_rows(&[&[(0, 1)], &[(1, 12), (2, 25), (3, 15)], &[(3, 6), (4, 10), (5, 3)]])
}

/// Betti table of the ideal of ten general points of `P^5`.
pub fn ten_points_betti() -> BettiTable {
    BettiTable::from_rows(&[&[(0, 1)], &[(1, 11), (2, 20), (3, 5)], &[(3, 16), (4, 15), (5, 4)]])
}

/// Betti table of an elliptic normal sextic curve in `P^5` (stored, not recomputed).
pub fn elliptic_sextic_betti() -> BettiTable {
    BettiTable::from_rows(&[&[(0, 1)], &[(1, 9), (2, 16), (3, 9)], &[(4, 1)]])
}

/// Reference tables by name: `generic-cubic`, `points9`, `points10`, `elliptic-sextic`.
pub fn reference_betti(name: &str) -> Option<BettiTable> {
    match name {
        "generic-cubic" => Some(generic_cubic_betti()),
        "points9" => Some(nine_points_betti()),
        "points10" => Some(ten_points_betti()),
        "elliptic-sextic" => Some(elliptic_sextic_betti()),
        _ => None,
    }
}

/// Every catalog constant in text form.
pub fn catalog_json() -> Value {
    let text = |v: Vec<HomogeneousForm<Q>>| v.iter().map(ToString::to_string).collect::<Vec<_>>();
    let family: Vec<String> = FAMILY.iter().map(|s| parse::<Q>(&(), s).to_string()).collect();
    let cfg = conic_points_config::<Q>(&());
    let tables: serde_json::Map<String, Value> = ["generic-cubic", "points9", "points10", "elliptic-sextic"]
        .iter()
        .map(|n| (n.to_string(), reference_betti(n).expect("known name").to_json()))
        .collect();
    json!({
        "veronese_minors": text(veronese_ideal_quadrics(&())),
        "discriminant_cubic": discriminant_cubic::<Q>(&()).to_string(),
        "family_f": {"parameters": ["a", "b", "c", "d", "e"], "members": family},
        "family_f_example": family_f_example::<Q>(&()).to_string(),
        "plane_substitution": text(paper_plane_substitution(&())),
        "ir_cubic": ir_cubic::<Q>(&()).to_string(),
        "scroll_minors": text(scroll_minors(&())),
        "conic_points": {"conic": text(cfg.conic), "point_minors": text(cfg.point_minors)},
        "curve_mod5": CURVE_MOD5,
        "s_map_constant": s_map_constant().to_string(),
        "betti": tables,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;

    fn q(s: &str) -> HomogeneousForm<Q> {
        parse(&(), s)
    }

    #[test]
    fn constants_are_in_canonical_form() {
        for s in VERONESE_MINORS.iter().chain(FAMILY.iter()).chain(PLANE.iter()) {
            let f = q(s);
            assert_eq!(parse::<Q>(&(), &f.to_string()), f);
        }
        let curve = parse_form::<Fp>(&5, CURVE_MOD5, ParseOptions::default()).unwrap();
        assert_eq!(curve.to_string(), CURVE_MOD5);
        assert_eq!(curve.terms().len(), 46);
        assert_eq!(ir_cubic::<Q>(&()).terms().len(), 12);
        assert_eq!(discriminant_cubic::<Q>(&()).to_string(), DISCRIMINANT);
    }

    #[test]
    fn discriminant_is_the_symmetric_determinant() {
        let m = crate::matrix::Matrix::from_fn(&(), 3, 3, |i, j| {
            let k = SYMMETRIC_PAIRS.iter().position(|&p| p == (i.min(j), i.max(j))).unwrap();
            Q::from_frac(k as i64 * k as i64 - 3, 1 + (k % 2) as i64)
        });
        let pt: Vec<Q> = SYMMETRIC_PAIRS
            .iter()
            .map(|&(i, j)| m.get(i, j).clone())
            .collect();
        assert_eq!(discriminant_cubic::<Q>(&()).evaluate(&pt).unwrap(), m.det().unwrap());
    }

    #[test]
    fn plane_substitution_on_a_minor() {
        let minor = q("x0*x3-x1^2");
        let plane: Vec<_> = paper_plane_substitution::<Q>(&()).into_iter().map(|l| l.with_alphabet(Alphabet::Z)).collect();
        let got = minor.substitute(&plane).unwrap();
        assert_eq!(got, q("z0^2+z0*z1+z0*z2").sub(&q("z0^2+2*z0*z1+z1^2")).unwrap());
    }

    #[test]
    fn m_star_inverts_s_on_a_power() {
        let a = q("z0-2*z1+3*z2");
        let g = a.pow(6).unwrap();
        let s = s_map(&g).unwrap();
        let l = HomogeneousForm::linear(&(), Alphabet::X, &veronese_point(&[Q::from_frac(1, 1), Q::from_frac(-2, 1), Q::from_frac(3, 1)]));
        assert_eq!(s, l.pow(3).unwrap());
        assert_eq!(m_star(&s).unwrap(), g);
    }

    #[test]
    fn s_rejects_small_characteristic() {
        let g = parse_form::<Fp>(&5, "z0^6", ParseOptions::default()).unwrap();
        assert!(matches!(s_map(&g), Err(Error::CharacteristicTooSmall { .. })));
    }

    #[test]
    fn scroll_has_six_minors_and_points_matrix_fifteen() {
        assert_eq!(scroll_minors::<Q>(&()).len(), 6);
        let cfg = conic_points_config::<Q>(&());
        assert_eq!(cfg.point_minors.len(), 15);
        assert_eq!(cfg.conic.len(), 4);
    }

    #[test]
    fn catalog_lists_every_constant() {
        let v = catalog_json();
        assert_eq!(v["veronese_minors"].as_array().unwrap().len(), 6);
        assert_eq!(v["betti"]["points10"]["entries"][0], json!([0, 0, 1]));
        assert_eq!(v["s_map_constant"], "1/120");
    }

    #[test]
    fn veronese_minors_annihilate_the_family() {
        let f = family_f(&(), &[Q::from_frac(2, 1), Q::from_frac(-1, 3), Q::from_frac(5, 1), Q::from_frac(1, 1), Q::from_frac(-7, 2)]);
        for m in veronese_ideal_quadrics::<Q>(&()) {
            assert!(apolar_action(&m, &f).unwrap().is_zero(), "{m}");
        }
    }

    #[test]
    fn discriminant_gradient_vanishes_on_the_veronese() {
        let h = discriminant_cubic::<Q>(&());
        let pt = veronese_point(&[Q::from_frac(3, 1), Q::from_frac(-1, 2), Q::from_frac(2, 5)]);
        for v in 0..6 {
            assert!(h.partial(v).evaluate(&pt).unwrap().is_zero());
        }
    }
}
