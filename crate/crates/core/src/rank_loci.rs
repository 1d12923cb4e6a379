//! Loci where a matrix of linear forms drops rank: their degree measured on
//! lines, the defining form of a drop curve in the plane, and singular
//! points of plane curves over finite fields.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::apolarity::{evaluation_matrix, PointSet};
use crate::error::{Error, Result};
use crate::field::{Field, FieldDesc, Fp, Fp2};
use crate::form::{Alphabet, HomogeneousForm};
use crate::matrix::Matrix;
use crate::monomial;
use crate::resolutions::LinearFormMatrix;
use crate::univariate::UniPoly;

/// Minors drawn per round when measuring a line.
pub const SUBSETS_PER_ROUND: usize = 8;
/// Rounds always run before the gcd may be declared stable.
pub const MIN_ROUNDS: usize = 2;
/// Rounds after which an unstable gcd is reported.
pub const MAX_ROUNDS: usize = 8;

/// Ranks of a matrix of linear forms at sample points, against a threshold `t`.
#[derive(Debug, Clone)]
pub struct RankProfile<F: Field> {
    pub rows: usize,
    pub cols: usize,
    pub threshold: usize,
    pub field: FieldDesc,
    pub samples: Vec<(Vec<F>, usize)>,
}

impl<F: Field> RankProfile<F> {
    /// Evaluates the rank at every point, in parallel.
    pub fn sample(m: &LinearFormMatrix<F>, points: &[Vec<F>], threshold: usize) -> Result<Self> {
        let samples = points
            .par_iter()
            .map(|p| Ok((p.clone(), m.rank_at_point(p)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(RankProfile { rows: m.rows(), cols: m.cols(), threshold, field: F::descriptor(m.ctx()), samples })
    }

    /// Points of rank at most the threshold.
    pub fn drop_points(&self) -> Vec<Vec<F>> {
        self.samples.iter().filter(|(_, r)| *r <= self.threshold).map(|(p, _)| p.clone()).collect()
    }

    /// How many samples have each rank, in increasing rank.
    pub fn histogram(&self) -> Vec<(usize, usize)> {
        let mut h = std::collections::BTreeMap::new();
        for (_, r) in &self.samples {
            *h.entry(*r).or_insert(0) += 1;
        }
        h.into_iter().collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "rows": self.rows,
            "cols": self.cols,
            "threshold": self.threshold,
            "field": self.field.to_string(),
            "histogram": self.histogram(),
        })
    }
}

/// Every point of `P^{n-1}` over a finite field, first nonzero coordinate 1.
pub fn projective_points<F: Field>(ctx: &F::Ctx, n: usize) -> Result<Vec<Vec<F>>> {
    let elems = F::elements(ctx).ok_or_else(|| Error::Precondition("point scans need a finite field".into()))?;
    let q = elems.len();
    let mut out = Vec::new();
    for lead in 0..n {
        let free = n - lead - 1;
        for mut code in 0..q.pow(free as u32) {
            let mut v = vec![F::zero(ctx); n];
            v[lead] = F::one(ctx);
            for slot in v.iter_mut().skip(lead + 1) {
                *slot = elems[code % q].clone();
                code /= q;
            }
            out.push(v);
        }
    }
    Ok(out)
}

fn proportional<F: Field>(a: &[F], b: &[F]) -> bool {
    // all 2x2 minors vanish
    (0..a.len()).all(|i| (i + 1..a.len()).all(|j| a[i].mul(&b[j]) == a[j].mul(&b[i])))
}

/// `count` distinct parameters usable as interpolation nodes.
fn nodes<F: Field>(ctx: &F::Ctx, count: usize) -> Result<Vec<F>> {
    match F::elements(ctx) {
        Some(e) if e.len() < count => Err(Error::Precondition(format!(
            "the field has {} elements, {count} interpolation nodes are needed",
            e.len()
        ))),
        Some(e) => Ok(e.into_iter().take(count).collect()),
        None => Ok((0..count as i64).map(|i| F::from_i64(ctx, i)).collect()),
    }
}

/// What the rank-`<= t` locus cuts on the line `{p + s q}`.
#[derive(Debug, Clone)]
pub struct LineDrop<F: Field> {
    /// Monic gcd of the sampled minors in the affine parameter `s`.
    pub gcd: UniPoly<F>,
    /// Multiplicity of the gcd at `q` (the parameter `s = infinity`).
    pub at_infinity: usize,
    /// Number of distinct points, over the algebraic closure, including `q`.
    pub degree: usize,
    /// Degree of the gcd as a binary form, with multiplicities.
    pub full_degree: usize,
    pub rounds: usize,
}

/// Measures the rank-`<= t` locus of `m` on the line through `p` and `q`.
///
/// Each round draws [`SUBSETS_PER_ROUND`] random `(t + 1) x (t + 1)`
/// compressions `L M R` (random combinations of rows, and of columns when
/// there are more than `t + 1`), interpolates each determinant along the
/// line, and folds it into a running gcd. By Cauchy-Binet these are random
/// combinations of the `(t + 1)`-minors, so the stable gcd is the gcd of all
/// of them. The gcd is
/// accepted once a full round leaves it unchanged, after at least
/// [`MIN_ROUNDS`] rounds.
pub fn drop_on_line<F: Field>(m: &LinearFormMatrix<F>, p: &[F], q: &[F], t: usize, seed: u64) -> Result<LineDrop<F>> {
    let ctx = m.ctx();
    if p.len() != m.num_vars() || q.len() != m.num_vars() {
        return Err(Error::VarCountMismatch { expected: m.num_vars(), got: p.len().max(q.len()) });
    }
    if p.iter().all(F::is_zero) || q.iter().all(F::is_zero) || proportional(p, q) {
        return Err(Error::DegenerateLine);
    }
    if m.rows() <= t || m.cols() <= t {
        return Err(Error::Precondition(format!("a {}x{} matrix has rank at most {t} everywhere", m.rows(), m.cols())));
    }
    let size = t + 1;
    let s_nodes = nodes::<F>(ctx, size + 1)?;
    let (mp, mq) = (m.evaluate(p)?, m.evaluate(q)?);
    let at = |s: &F| mp.add(&mq.scale(s)).expect("same shape");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let generic = (0..3).map(|_| at(&F::random(ctx, &mut rng)).rank()).max().unwrap_or(0);
    if generic <= t {
        return Err(Error::LineInsideLocus { rank: generic, threshold: t });
    }
    let mut gcd = UniPoly::zero(ctx);
    let mut at_infinity = usize::MAX;
    let mut last: Option<(UniPoly<F>, usize)> = None;
    for round in 1..=MAX_ROUNDS {
        let picks: Vec<(Matrix<F>, Matrix<F>)> = (0..SUBSETS_PER_ROUND)
            .map(|_| {
                let left = Matrix::random(ctx, size, m.rows(), &mut rng);
                let right = if m.cols() == size { Matrix::identity(ctx, size) } else { Matrix::random(ctx, m.cols(), size, &mut rng) };
                (left, right)
            })
            .collect();
        let dets = picks
            .par_iter()
            .map(|(left, right)| {
                let a = left.mul(&mp)?.mul(right)?;
                let b = left.mul(&mq)?.mul(right)?;
                let pts = s_nodes
                    .iter()
                    .map(|s| Ok((s.clone(), a.add(&b.scale(s))?.det()?)))
                    .collect::<Result<Vec<_>>>()?;
                UniPoly::interpolate(ctx, &pts)
            })
            .collect::<Result<Vec<_>>>()?;
        for d in dets {
            if let Some(deg) = d.degree() {
                at_infinity = at_infinity.min(size - deg);
                gcd = gcd.gcd(&d);
            }
        }
        let state = (gcd.clone(), at_infinity);
        if round >= MIN_ROUNDS && !gcd.is_zero() && last.as_ref() == Some(&state) {
            let affine = gcd.squarefree_part()?.degree().expect("nonzero");
            let full = gcd.degree().expect("nonzero") + at_infinity;
            return Ok(LineDrop {
                degree: affine + usize::from(at_infinity > 0),
                full_degree: full,
                gcd,
                at_infinity,
                rounds: round,
            });
        }
        last = Some(state);
    }
    Err(Error::GcdNotStabilized { rounds: MAX_ROUNDS })
}

/// Number of distinct points in which the line through `p` and `q` meets
/// the rank-`<= t` locus of `m`; see [`drop_on_line`].
pub fn drop_degree_on_line<F: Field>(m: &LinearFormMatrix<F>, p: &[F], q: &[F], t: usize, seed: u64) -> Result<usize> {
    Ok(drop_on_line(m, p, q, t, seed)?.degree)
}

/// Two random non-proportional points.
pub fn random_line<F: Field, R: Rng + ?Sized>(ctx: &F::Ctx, n: usize, rng: &mut R) -> (Vec<F>, Vec<F>) {
    loop {
        let p: Vec<F> = (0..n).map(|_| F::random(ctx, rng)).collect();
        let q: Vec<F> = (0..n).map(|_| F::random(ctx, rng)).collect();
        if !p.iter().all(F::is_zero) && !q.iter().all(F::is_zero) && !proportional(&p, &q) {
            return (p, q);
        }
    }
}

/// The unique (up to scale) form of degree `degree` through `points`.
pub fn form_through_points<F: Field>(ctx: &F::Ctx, points: Vec<Vec<F>>, degree: usize) -> Result<HomogeneousForm<F>> {
    if points.is_empty() {
        return Err(Error::Undersampled { corank: monomial::count(3, degree) });
    }
    let z = PointSet::new(ctx, points)?;
    let kernel = evaluation_matrix(&z, degree).left_kernel();
    match kernel.dim() {
        0 => Err(Error::NoCurve),
        1 => Ok(HomogeneousForm::new(ctx, Alphabet::Z, z.num_vars(), degree, kernel.basis().row(0).to_vec())?.normalized()),
        corank => Err(Error::Undersampled { corank }),
    }
}

/// The drop curve of a matrix of linear forms in three variables from an
/// exhaustive scan of `P^2` over the (finite) field of `m`: every point of
/// rank `<= t` is a condition on a form of degree `degree`, and the
/// conditions must leave exactly one form up to scale.
pub fn interpolate_drop_curve<F: Field>(m: &LinearFormMatrix<F>, t: usize, degree: usize) -> Result<HomogeneousForm<F>> {
    if m.num_vars() != 3 {
        return Err(Error::VarCountMismatch { expected: 3, got: m.num_vars() });
    }
    let points = projective_points::<F>(m.ctx(), 3)?;
    let profile = RankProfile::sample(m, &points, t)?;
    form_through_points(m.ctx(), profile.drop_points(), degree)
}

/// A drop curve recovered from its restrictions to lines.
#[derive(Debug, Clone)]
pub struct LineFit<F: Field> {
    pub form: HomogeneousForm<F>,
    pub lines_used: usize,
    /// Lines whose gcd had the wrong degree and were left out.
    pub lines_skipped: usize,
}

/// Lines beyond the first one-dimensional solution, as a consistency check.
const CONFIRMING_LINES: usize = 3;

/// The drop curve of a matrix of linear forms in three variables,
/// recovered from random lines: on each line the gcd of the minors is the
/// restriction of the curve up to a scalar, which gives `degree` linear
/// conditions on its coefficients.
///
/// Works over fields too small to carry enough rational points of the curve,
/// as long as they have `t + 2` elements. Lines whose gcd does not have
/// degree `degree` (through a base point of the residual minors, say) are
/// skipped.
pub fn interpolate_drop_curve_on_lines<F: Field>(
    m: &LinearFormMatrix<F>,
    t: usize,
    degree: usize,
    seed: u64,
    max_lines: usize,
) -> Result<LineFit<F>> {
    if m.num_vars() != 3 {
        return Err(Error::VarCountMismatch { expected: 3, got: m.num_vars() });
    }
    let ctx = m.ctx();
    let basis = monomial::basis(3, degree);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows: Vec<Vec<F>> = Vec::new();
    let (mut used, mut skipped, mut confirmed) = (0, 0, 0);
    for _ in 0..max_lines {
        let (p, q) = random_line::<F, _>(ctx, 3, &mut rng);
        let drop = match drop_on_line(m, &p, &q, t, rng.gen()) {
            Ok(d) if d.full_degree == degree => d,
            Ok(_) | Err(Error::LineInsideLocus { .. }) => {
                skipped += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        used += 1;
        // restriction of each monomial to the line, as a polynomial in s
        let lin: Vec<UniPoly<F>> = (0..3).map(|i| UniPoly::new(ctx, vec![p[i].clone(), q[i].clone()])).collect();
        let restricted: Vec<Vec<F>> = basis
            .iter()
            .map(|e| {
                let mut acc = UniPoly::one(ctx);
                for (i, &k) in e.iter().enumerate() {
                    for _ in 0..k {
                        acc = acc.mul(&lin[i]);
                    }
                }
                let mut c = acc.coeffs().to_vec();
                c.resize(degree + 1, F::zero(ctx));
                c
            })
            .collect();
        let mut g = drop.gcd.coeffs().to_vec();
        g.resize(degree + 1, F::zero(ctx));
        let j = g.iter().rposition(|x| !x.is_zero()).expect("gcd is nonzero");
        for i in (0..=degree).filter(|&i| i != j) {
            rows.push(restricted.iter().map(|r| r[i].mul(&g[j]).sub(&r[j].mul(&g[i]))).collect());
        }
        let kernel = Matrix::from_rows(ctx, basis.len(), rows.clone())?.kernel();
        match kernel.dim() {
            0 => return Err(Error::NoCurve),
            1 => {
                confirmed += 1;
                if confirmed > CONFIRMING_LINES {
                    let form = HomogeneousForm::new(ctx, Alphabet::Z, 3, degree, kernel.basis().row(0).to_vec())?;
                    return Ok(LineFit { form: form.normalized(), lines_used: used, lines_skipped: skipped });
                }
            }
            _ => {}
        }
    }
    let corank = Matrix::from_rows(ctx, basis.len(), rows)?.kernel().dim();
    Err(Error::Undersampled { corank })
}

/// Points of `P^2` over the (finite) coefficient field where `f` and its three
/// partial derivatives all vanish.
pub fn singular_points_plane_curve<F: Field>(f: &HomogeneousForm<F>) -> Result<Vec<Vec<F>>> {
    if f.num_vars() != 3 {
        return Err(Error::VarCountMismatch { expected: 3, got: f.num_vars() });
    }
    let grad = f.gradient();
    let points = projective_points::<F>(f.ctx(), 3)?;
    let flags = points
        .par_iter()
        .map(|p| {
            if !f.evaluate(p)?.is_zero() {
                return Ok(false);
            }
            for g in &grad {
                if !g.evaluate(p)?.is_zero() {
                    return Ok(false);
                }
            }
            Ok(true)
        })
        .collect::<Result<Vec<bool>>>()?;
    Ok(points.into_iter().zip(flags).filter(|(_, s)| *s).map(|(p, _)| p).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Singularity {
    Smooth,
    Node,
    Worse,
}

impl std::fmt::Display for Singularity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Singularity::Smooth => "smooth",
            Singularity::Node => "node",
            Singularity::Worse => "worse",
        })
    }
}

/// Local type of the plane curve `f = 0` at a point on it.
///
/// In affine coordinates `(u, v)` centered at the point, a nonzero linear
/// term means smooth; otherwise a quadratic term with nonzero discriminant is
/// a node, anything else is worse. Needs characteristic other than 2.
pub fn classify_singularity<F: Field>(f: &HomogeneousForm<F>, point: &[F]) -> Result<Singularity> {
    if f.num_vars() != 3 || point.len() != 3 {
        return Err(Error::VarCountMismatch { expected: 3, got: point.len().min(f.num_vars()) });
    }
    let ctx = f.ctx();
    if F::characteristic(ctx) == 2 {
        return Err(Error::CharacteristicTooSmall { characteristic: 2, degree: 2 });
    }
    let a = point.iter().position(|c| !c.is_zero()).ok_or(Error::NotOnCurve)?;
    let (b, c) = match a {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    // z = point * w + e_b * u + e_c * v, in variables (w, u, v)
    let subst: Vec<HomogeneousForm<F>> = (0..3)
        .map(|i| {
            let mut l = vec![F::zero(ctx); 3];
            l[0] = point[i].clone();
            if i == b {
                l[1] = F::one(ctx);
            }
            if i == c {
                l[2] = F::one(ctx);
            }
            HomogeneousForm::linear(ctx, f.alphabet(), &l)
        })
        .collect();
    let g = f.compose(&subst)?;
    let d = f.degree() as u32;
    let local = |i: u32, j: u32| -> F {
        if i + j > d {
            F::zero(ctx)
        } else {
            g.coeff(&[d - i - j, i, j]).clone()
        }
    };
    if !local(0, 0).is_zero() {
        return Err(Error::NotOnCurve);
    }
    if !local(1, 0).is_zero() || !local(0, 1).is_zero() {
        return Ok(Singularity::Smooth);
    }
    let (qa, qb, qc) = (local(2, 0), local(1, 1), local(0, 2));
    let disc = qb.mul(&qb).sub(&F::from_i64(ctx, 4).mul(&qa).mul(&qc));
    Ok(if disc.is_zero() { Singularity::Worse } else { Singularity::Node })
}

/// The form itself when, after normalization, all its coefficients lie in `F_p`.
pub fn descend_to_prime_field(f: &HomogeneousForm<Fp2>) -> Option<HomogeneousForm<Fp>> {
    let p = f.ctx().p();
    f.normalized()
        .map_field(&p, |x| x.in_base().ok_or(Error::Precondition("coefficient outside F_p".into())))
        .ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp2Ctx;
    use crate::text::{parse_form, ParseOptions};

    fn zf<F: Field>(ctx: &F::Ctx, s: &str) -> HomogeneousForm<F> {
        parse_form(ctx, s, ParseOptions::default()).unwrap()
    }

    fn diag<F: Field>(ctx: &F::Ctx, n: usize, alphabet: Alphabet) -> LinearFormMatrix<F> {
        let entries: Vec<Vec<HomogeneousForm<F>>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        if r == c {
                            HomogeneousForm::variable(ctx, alphabet, n, r)
                        } else {
                            HomogeneousForm::zero(ctx, alphabet, n, 1)
                        }
                    })
                    .collect()
            })
            .collect();
        LinearFormMatrix::from_entries(ctx, &entries).unwrap()
    }

    #[test]
    fn diagonal_two_by_two_meets_a_line_twice() {
        let p = 101;
        let m = diag::<Fp>(&p, 2, Alphabet::Y);
        let a = [Fp::new(3, p), Fp::new(7, p)];
        let b = [Fp::new(-2, p), Fp::new(5, p)];
        let d = drop_on_line(&m, &a, &b, 1, 1).unwrap();
        assert_eq!((d.degree, d.full_degree), (2, 2));
    }

    #[test]
    fn matrix_of_full_rank_everywhere_never_drops() {
        // [x0 A; x1 B] has rank 21 wherever x0 or x1 is nonzero
        let p = 101;
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = Matrix::<Fp>::random_invertible(&p, 21, &mut rng);
        let b = Matrix::<Fp>::random_invertible(&p, 21, &mut rng);
        let zero = Matrix::zeros(&p, 21, 21);
        let coeffs = vec![a.vstack(&zero).unwrap(), zero.vstack(&b).unwrap()];
        let m = LinearFormMatrix::from_coefficients(&p, Alphabet::Y, coeffs).unwrap();
        let (x, y) = random_line::<Fp, _>(&p, 2, &mut rng);
        assert_eq!(drop_degree_on_line(&m, &x, &y, 20, 9).unwrap(), 0);
    }

    #[test]
    fn degenerate_and_contained_lines_are_rejected() {
        let p = 101;
        let m = diag::<Fp>(&p, 2, Alphabet::Y);
        let a = [Fp::new(1, p), Fp::new(2, p)];
        let b = [Fp::new(2, p), Fp::new(4, p)];
        assert!(matches!(drop_on_line(&m, &a, &b, 1, 0), Err(Error::DegenerateLine)));
        // the line x1 = 0 lies in the locus x0 x1 = 0
        let a = [Fp::new(1, p), Fp::new(0, p)];
        let b = [Fp::new(3, p), Fp::new(0, p)];
        assert!(matches!(drop_on_line(&m, &a, &b, 1, 0), Err(Error::DegenerateLine)));
        let b = [Fp::new(0, p), Fp::new(0, p)];
        assert!(matches!(drop_on_line(&m, &a, &b, 1, 0), Err(Error::DegenerateLine)));
        let m3 = diag::<Fp>(&p, 3, Alphabet::Z);
        let a = [Fp::new(1, p), Fp::new(0, p), Fp::new(2, p)];
        let b = [Fp::new(3, p), Fp::new(0, p), Fp::new(1, p)];
        assert!(matches!(drop_on_line(&m3, &a, &b, 2, 0), Err(Error::LineInsideLocus { .. })));
    }

    #[test]
    fn diagonal_three_by_three_gives_the_triangle() {
        let p = 7;
        let m = diag::<Fp>(&p, 3, Alphabet::Z);
        let f = interpolate_drop_curve(&m, 2, 3).unwrap();
        assert!(f.is_proportional_to(&zf(&p, "z0*z1*z2")));
        let fit = interpolate_drop_curve_on_lines(&m, 2, 3, 5, 50).unwrap();
        assert!(fit.form.is_proportional_to(&f));
    }

    #[test]
    fn too_few_points_is_undersampled() {
        let p = 7;
        let m = diag::<Fp>(&p, 3, Alphabet::Z);
        assert!(matches!(interpolate_drop_curve(&m, 2, 4), Err(Error::Undersampled { .. })));
    }

    #[test]
    fn triangle_has_three_nodes() {
        let p = 7;
        let f = zf::<Fp>(&p, "z0*z1*z2");
        let s = singular_points_plane_curve(&f).unwrap();
        assert_eq!(s.len(), 3);
        for pt in &s {
            assert_eq!(classify_singularity(&f, pt).unwrap(), Singularity::Node);
        }
    }

    #[test]
    fn smooth_conic_has_no_singular_points() {
        let f = zf::<Fp>(&7, "z0^2+z1^2+z2^2");
        assert!(singular_points_plane_curve(&f).unwrap().is_empty());
    }

    #[test]
    fn node_and_cusp_are_told_apart() {
        let p = 7;
        let pt = [Fp::new(0, p), Fp::new(1, p), Fp::new(0, p)];
        let node = zf::<Fp>(&p, "z0*z2*z1+z0^3+z2^3");
        assert_eq!(classify_singularity(&node, &pt).unwrap(), Singularity::Node);
        let cusp = zf::<Fp>(&p, "z0^3-z2^2*z1");
        assert_eq!(classify_singularity(&cusp, &pt).unwrap(), Singularity::Worse);
        let line = zf::<Fp>(&p, "z0");
        assert_eq!(classify_singularity(&line, &pt).unwrap(), Singularity::Smooth);
        let off = [Fp::new(1, p), Fp::new(0, p), Fp::new(0, p)];
        assert!(matches!(classify_singularity(&line, &off), Err(Error::NotOnCurve)));
    }

    #[test]
    fn descends_only_base_field_forms() {
        let ctx = Fp2Ctx::new(5);
        let f = zf::<Fp2>(&ctx, "z0^2+2*z1*z2").scale(&Fp2::generator(&ctx));
        assert_eq!(descend_to_prime_field(&f).unwrap(), zf::<Fp>(&5, "z0^2+2*z1*z2"));
        let g = zf::<Fp2>(&ctx, "z0^2").add(&zf::<Fp2>(&ctx, "z1^2").scale(&Fp2::generator(&ctx))).unwrap();
        assert!(descend_to_prime_field(&g).is_none());
    }

    #[test]
    fn projective_plane_over_f25_has_651_points() {
        assert_eq!(projective_points::<Fp2>(&Fp2Ctx::new(5), 3).unwrap().len(), 651);
    }
}
