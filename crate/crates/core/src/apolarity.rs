//! The apolarity action, catalecticants, apolar ideals and point-set tests.
//!
//! A dual form `D(y)` acts on `f(x)` as the differential operator obtained by
//! `y_i -> d/dx_i`. Factorials appear, so every action requires characteristic
//! zero or larger than the degree of `f`.

use rand::Rng;
use rayon::prelude::*;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::{same_field, Field, Fp};
use crate::form::{Alphabet, HomogeneousForm};
use crate::matrix::{Ambient, Matrix, Subspace};
use crate::monomial;

/// Fails unless the characteristic is zero or exceeds `degree`.
pub fn check_characteristic<F: Field>(ctx: &F::Ctx, degree: usize) -> Result<()> {
    let characteristic = F::characteristic(ctx);
    if characteristic != 0 && characteristic <= degree as u64 {
        return Err(Error::CharacteristicTooSmall { characteristic, degree });
    }
    Ok(())
}

/// Shared variable count and field for a pairing of primal and dual forms.
#[derive(Debug, Clone)]
pub struct ApolarityContext<F: Field> {
    ctx: F::Ctx,
    num_vars: usize,
}

impl<F: Field> ApolarityContext<F> {
    pub fn new(ctx: &F::Ctx, num_vars: usize) -> Self {
        ApolarityContext { ctx: ctx.clone(), num_vars }
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    fn admit(&self, form: &HomogeneousForm<F>) -> Result<()> {
        same_field::<F>(&self.ctx, form.ctx())?;
        if form.num_vars() != self.num_vars {
            return Err(Error::VarCountMismatch { expected: self.num_vars, got: form.num_vars() });
        }
        Ok(())
    }

    /// `D o f`.
    pub fn act(&self, d: &HomogeneousForm<F>, f: &HomogeneousForm<F>) -> Result<HomogeneousForm<F>> {
        self.admit(d)?;
        self.admit(f)?;
        apolar_action(d, f)
    }

    /// `<D, f>` for `deg D = deg f`, a scalar.
    pub fn pairing(&self, d: &HomogeneousForm<F>, f: &HomogeneousForm<F>) -> Result<F> {
        if d.degree() != f.degree() {
            return Err(Error::DegreeMismatch { expected: f.degree(), got: d.degree() });
        }
        Ok(self.act(d, f)?.coeffs()[0].clone())
    }
}

fn check_operator<F: Field>(d: &HomogeneousForm<F>, f: &HomogeneousForm<F>) -> Result<()> {
    same_field::<F>(d.ctx(), f.ctx())?;
    if d.num_vars() != f.num_vars() {
        return Err(Error::VarCountMismatch { expected: f.num_vars(), got: d.num_vars() });
    }
    if d.alphabet() != f.alphabet().dual() {
        return Err(Error::AlphabetMismatch(format!(
            "operator in {} cannot act on a form in {}",
            d.alphabet(),
            f.alphabet()
        )));
    }
    if d.degree() > f.degree() {
        return Err(Error::OperatorDegreeTooHigh { operator: d.degree(), form: f.degree() });
    }
    check_characteristic::<F>(f.ctx(), f.degree())
}

/// The form `D o f` of degree `deg f - deg D`.
pub fn apolar_action<F: Field>(d: &HomogeneousForm<F>, f: &HomogeneousForm<F>) -> Result<HomogeneousForm<F>> {
    check_operator(d, f)?;
    let ctx = f.ctx();
    let n = f.num_vars();
    let out_deg = f.degree() - d.degree();
    let mut out = vec![F::zero(ctx); monomial::count(n, out_deg)];
    let fterms = f.terms();
    let mut rest = vec![0u32; n];
    for (a, c) in d.terms() {
        for (e, fc) in &fterms {
            if a.iter().zip(e).any(|(ai, ei)| ai > ei) {
                continue;
            }
            for i in 0..n {
                rest[i] = e[i] - a[i];
            }
            let w = F::from_i64(ctx, monomial::falling_factor(e, &a) as i64);
            let idx = monomial::index_of(&rest);
            out[idx] = out[idx].add(&c.mul(fc).mul(&w));
        }
    }
    HomogeneousForm::new(ctx, f.alphabet(), n, out_deg, out)
}

/// Matrix of `S^k V* -> S^{d-k} V`, `D -> D o f`: row `r` is the image of the
/// `r`-th degree-`k` dual monomial in the degree-`(d-k)` monomial basis.
pub fn catalecticant<F: Field>(f: &HomogeneousForm<F>, k: usize) -> Result<Matrix<F>> {
    let d = f.degree();
    if k > d {
        return Err(Error::OperatorDegreeTooHigh { operator: k, form: d });
    }
    check_characteristic::<F>(f.ctx(), d)?;
    let n = f.num_vars();
    let rows = monomial::basis(n, k);
    let cols = monomial::basis(n, d - k);
    let ctx = f.ctx();
    let mut sum = vec![0u32; n];
    Ok(Matrix::from_fn(ctx, rows.len(), cols.len(), |r, c| {
        for i in 0..n {
            sum[i] = rows[r][i] + cols[c][i];
        }
        let coeff = f.coeff(&sum);
        if coeff.is_zero() {
            return F::zero(ctx);
        }
        coeff.mul(&F::from_i64(ctx, monomial::falling_factor(&sum, &rows[r]) as i64))
    }))
}

/// `I_f(k)`: degree-`k` dual forms annihilating `f` (everything when `k > deg f`).
pub fn apolar_ideal_component<F: Field>(f: &HomogeneousForm<F>, k: usize) -> Result<Subspace<F>> {
    if k > f.degree() {
        check_characteristic::<F>(f.ctx(), f.degree())?;
        return Ok(Subspace::full(f.ctx(), Ambient::graded(f.num_vars(), k)));
    }
    Ok(catalecticant(f, k)?.left_kernel().with_ambient(Ambient::graded(f.num_vars(), k)))
}

/// `P(f)`: the span of the first partial derivatives of `f`.
pub fn partial_space<F: Field>(f: &HomogeneousForm<F>) -> Result<Subspace<F>> {
    if f.degree() == 0 {
        return Err(Error::OperatorDegreeTooHigh { operator: 1, form: 0 });
    }
    let cat = catalecticant(f, 1)?;
    Ok(Subspace::from_matrix(Ambient::graded(f.num_vars(), f.degree() - 1), &cat))
}

/// `Q_f = I_f(2)`.
pub fn q_f<F: Field>(f: &HomogeneousForm<F>) -> Result<Subspace<F>> {
    apolar_ideal_component(f, 2)
}

/// Ranks of `catalecticant(f, k)` for `k = 0..=deg f`: the Hilbert function
/// of the apolar algebra.
pub fn hilbert_function<F: Field>(f: &HomogeneousForm<F>) -> Result<Vec<usize>> {
    (0..=f.degree()).map(|k| Ok(catalecticant(f, k)?.rank())).collect()
}

/// Basis vectors of a subspace of a graded piece, as forms.
pub fn basis_forms<F: Field>(space: &Subspace<F>, alphabet: Alphabet) -> Result<Vec<HomogeneousForm<F>>> {
    let amb = space.ambient();
    if amb.multiplicity != 1 {
        return Err(Error::DimensionMismatch(format!("ambient has multiplicity {}", amb.multiplicity)));
    }
    space
        .basis()
        .row_vecs()
        .into_iter()
        .map(|row| HomogeneousForm::new(space.ctx(), alphabet, amb.num_vars, amb.degree, row))
        .collect()
}

/// Span of a list of forms of one degree, as a subspace of that graded piece.
pub fn span_of<F: Field>(ctx: &F::Ctx, num_vars: usize, degree: usize, forms: &[HomogeneousForm<F>]) -> Result<Subspace<F>> {
    let mut rows = Vec::with_capacity(forms.len());
    for g in forms {
        same_field::<F>(ctx, g.ctx())?;
        if g.num_vars() != num_vars {
            return Err(Error::VarCountMismatch { expected: num_vars, got: g.num_vars() });
        }
        if g.degree() != degree {
            return Err(Error::DegreeMismatch { expected: degree, got: g.degree() });
        }
        rows.push(g.coeffs().to_vec());
    }
    let m = Matrix::from_rows(ctx, monomial::count(num_vars, degree), rows)?;
    Ok(Subspace::from_matrix(Ambient::graded(num_vars, degree), &m))
}

/// Finitely many projective points with coordinates in `F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet<F: Field> {
    ctx: F::Ctx,
    num_vars: usize,
    points: Vec<Vec<F>>,
}

fn normalize<F: Field>(p: &[F]) -> Option<Vec<F>> {
    let inv = p.iter().find(|c| !c.is_zero())?.inv()?;
    Some(p.iter().map(|c| c.mul(&inv)).collect())
}

impl<F: Field> PointSet<F> {
    /// A reduced point set: rejects zero vectors and points equal up to scale.
    pub fn new(ctx: &F::Ctx, points: Vec<Vec<F>>) -> Result<Self> {
        let set = Self::with_duplicates(ctx, points)?;
        let mut seen = std::collections::HashSet::new();
        for (i, p) in set.points.iter().enumerate() {
            if !seen.insert(normalize(p).expect("nonzero checked")) {
                return Err(Error::InvalidPointSet(format!("point {i} repeats an earlier point up to scale")));
            }
        }
        Ok(set)
    }

    /// Like [`PointSet::new`] but keeps repeated points.
    pub fn with_duplicates(ctx: &F::Ctx, points: Vec<Vec<F>>) -> Result<Self> {
        let num_vars = points.first().map(Vec::len).ok_or_else(|| Error::InvalidPointSet("no points".into()))?;
        if num_vars == 0 {
            return Err(Error::InvalidPointSet("points have no coordinates".into()));
        }
        for (i, p) in points.iter().enumerate() {
            if p.len() != num_vars {
                return Err(Error::InvalidPointSet(format!("point {i} has {} coordinates, expected {num_vars}", p.len())));
            }
            for c in p {
                same_field::<F>(ctx, &c.ctx())?;
            }
            if p.iter().all(F::is_zero) {
                return Err(Error::InvalidPointSet(format!("point {i} is the zero vector")));
            }
        }
        Ok(PointSet { ctx: ctx.clone(), num_vars, points })
    }

    /// `count` distinct points with random coordinates.
    pub fn random<R: Rng + ?Sized>(ctx: &F::Ctx, num_vars: usize, count: usize, rng: &mut R) -> Self {
        Self::random_from(ctx, count, rng, |rng| (0..num_vars).map(|_| F::random(ctx, rng)).collect())
    }

    /// `count` distinct points drawn from `sample`.
    pub fn random_from<R: Rng + ?Sized>(
        ctx: &F::Ctx,
        count: usize,
        rng: &mut R,
        mut sample: impl FnMut(&mut R) -> Vec<F>,
    ) -> Self {
        let mut points: Vec<Vec<F>> = Vec::with_capacity(count);
        let mut seen = std::collections::HashSet::new();
        let mut attempts = 0usize;
        while points.len() < count {
            attempts += 1;
            assert!(attempts < 1000 * (count + 1), "could not draw {count} distinct points");
            let p = sample(rng);
            if let Some(key) = normalize(&p) {
                if seen.insert(key) {
                    points.push(p);
                }
            }
        }
        PointSet { ctx: ctx.clone(), num_vars: points[0].len(), points }
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<F>] {
        &self.points
    }

    /// Each point read as the linear form `sum_i p_i v_i`.
    pub fn linear_forms(&self, alphabet: Alphabet) -> Vec<HomogeneousForm<F>> {
        self.points.iter().map(|p| HomogeneousForm::linear(&self.ctx, alphabet, p)).collect()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.points.iter().map(|p| Value::Array(p.iter().map(F::to_json).collect())).collect())
    }

    pub fn from_json(ctx: &F::Ctx, v: &Value) -> Result<Self> {
        let rows = v.as_array().ok_or_else(|| Error::Serialization("point set must be a JSON array".into()))?;
        let points = rows
            .iter()
            .map(|r| {
                r.as_array()
                    .ok_or_else(|| Error::Serialization("each point must be a JSON array".into()))?
                    .iter()
                    .map(|c| F::from_json(ctx, c))
                    .collect::<Result<Vec<F>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ctx, points)
    }
}

/// Evaluation map `S^k V* -> F^Z`: one row per degree-`k` monomial, one
/// column per point.
pub fn evaluation_matrix<F: Field>(z: &PointSet<F>, k: usize) -> Matrix<F> {
    let ctx = z.ctx();
    let basis = monomial::basis(z.num_vars(), k);
    let powers: Vec<Vec<Vec<F>>> = z
        .points()
        .iter()
        .map(|p| {
            p.iter()
                .map(|c| {
                    let mut v = vec![F::one(ctx)];
                    for e in 1..=k {
                        let next = v[e - 1].mul(c);
                        v.push(next);
                    }
                    v
                })
                .collect()
        })
        .collect();
    Matrix::from_fn(ctx, basis.len(), z.len(), |r, c| {
        let mut acc = F::one(ctx);
        for (i, &e) in basis[r].iter().enumerate() {
            if e > 0 {
                acc = acc.mul(&powers[c][i][e as usize]);
            }
        }
        acc
    })
}

/// `I_Z(k)`: degree-`k` dual forms vanishing at every point of `Z`.
pub fn ideal_of_points_component<F: Field>(z: &PointSet<F>, k: usize) -> Subspace<F> {
    evaluation_matrix(z, k).left_kernel().with_ambient(Ambient::graded(z.num_vars(), k))
}

/// Whether `Z` imposes `|Z|` independent conditions on forms of degree `d`.
pub fn imposes_independent_conditions<F: Field>(z: &PointSet<F>, d: usize) -> bool {
    evaluation_matrix(z, d).rank() == z.len()
}

fn check_points_vs_form<F: Field>(z: &PointSet<F>, f: &HomogeneousForm<F>) -> Result<()> {
    same_field::<F>(z.ctx(), f.ctx())?;
    if z.num_vars() != f.num_vars() {
        return Err(Error::VarCountMismatch { expected: f.num_vars(), got: z.num_vars() });
    }
    Ok(())
}

/// `I_Z(d)` annihilates `f`, with `d = deg f`.
pub fn is_apolar_pointset<F: Field>(z: &PointSet<F>, f: &HomogeneousForm<F>) -> Result<bool> {
    check_points_vs_form(z, f)?;
    let dual = f.alphabet().dual();
    for g in basis_forms(&ideal_of_points_component(z, f.degree()), dual)? {
        if !apolar_action(&g, f)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `f` lies in the span of the powers `l_i^d` of the points read as linear forms.
pub fn is_in_power_span<F: Field>(z: &PointSet<F>, f: &HomogeneousForm<F>) -> Result<bool> {
    check_points_vs_form(z, f)?;
    let d = f.degree();
    let powers = z
        .linear_forms(f.alphabet())
        .iter()
        .map(|l| l.pow(d))
        .collect::<Result<Vec<_>>>()?;
    let span = span_of(f.ctx(), f.num_vars(), d, &powers)?;
    Ok(span.contains(f.coeffs()))
}

/// Every form in the ideal generated by `gens` (dual forms) annihilates `f`
/// in degrees up to `deg f`.
///
/// `I_f` is an ideal, so the generated ideal lies in it exactly when each
/// generator of degree at most `deg f` does; this is what gets checked.
pub fn is_apolar_variety<F: Field>(gens: &[HomogeneousForm<F>], f: &HomogeneousForm<F>) -> Result<bool> {
    for g in gens {
        same_field::<F>(g.ctx(), f.ctx())?;
        if g.degree() > f.degree() {
            continue;
        }
        if !apolar_action(g, f)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Result of [`min_partial_rank_scan`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialRankScan {
    pub min_rank: usize,
    /// First direction `u` in scan order attaining the minimum.
    pub witness: Vec<Fp>,
    pub points_scanned: usize,
}

/// Representatives of `P^{n-1}(F_p)` with first nonzero coordinate 1, in a fixed order.
pub fn projective_points_fp(p: u64, n: usize) -> Vec<Vec<Fp>> {
    let mut out = Vec::new();
    for lead in 0..n {
        let free = n - lead - 1;
        let total = (p as usize).pow(free as u32);
        for mut code in 0..total {
            let mut v = vec![Fp::new(0, p); n];
            v[lead] = Fp::new(1, p);
            for slot in v.iter_mut().skip(lead + 1) {
                *slot = Fp::new((code % p as usize) as i64, p);
                code /= p as usize;
            }
            out.push(v);
        }
    }
    out
}

/// Minimum over `u` in `P^{n-1}(F_p)` of the rank of the quadric `d_u f`
/// (the symmetric matrix `sum_i u_i d_i d_j d_k f`), for a cubic `f`.
pub fn min_partial_rank_scan(f: &HomogeneousForm<Fp>) -> Result<PartialRankScan> {
    let p = *f.ctx();
    if !(5..=11).contains(&p) {
        return Err(Error::Precondition(format!("exhaustive scan needs 5 <= p <= 11, got p = {p}")));
    }
    if f.degree() != 3 {
        return Err(Error::DegreeMismatch { expected: 3, got: f.degree() });
    }
    check_characteristic::<Fp>(&p, 3)?;
    let n = f.num_vars();
    // third[i][j][k] = d_i d_j d_k f
    let third: Vec<Vec<Vec<Fp>>> = (0..n)
        .map(|i| {
            let fi = f.partial(i);
            (0..n)
                .map(|j| {
                    let fij = fi.partial(j);
                    (0..n).map(|k| fij.partial(k).coeffs()[0]).collect()
                })
                .collect()
        })
        .collect();
    let points = projective_points_fp(p, n);
    let ranks: Vec<usize> = points
        .par_iter()
        .map(|u| {
            let h = Matrix::from_fn(&p, n, n, |j, k| {
                (0..n).fold(Fp::new(0, p), |acc, i| acc.add(&u[i].mul(&third[i][j][k])))
            });
            h.rank()
        })
        .collect();
    let (best, &min_rank) = ranks
        .iter()
        .enumerate()
        .min_by_key(|&(i, r)| (*r, i))
        .expect("projective space is nonempty");
    Ok(PartialRankScan { min_rank, witness: points[best].clone(), points_scanned: points.len() })
}

/// Whether some nonzero form of degree `d` (in the coordinates of `Z`) is
/// singular at every point of `Z`.
pub fn exists_form_singular_along<F: Field>(z: &PointSet<F>, d: usize) -> Result<bool> {
    if d == 0 {
        return Err(Error::Precondition("degree must be positive".into()));
    }
    let ctx = z.ctx();
    let n = z.num_vars();
    let basis = monomial::basis(n, d);
    // one row per (point, variable): the coefficients of d_i C evaluated at the point
    let rows: Vec<Vec<F>> = z
        .points()
        .iter()
        .flat_map(|pt| {
            let basis = basis.clone();
            (0..n).map(move |i| {
                basis
                    .iter()
                    .map(|e| {
                        if e[i] == 0 {
                            return F::zero(ctx);
                        }
                        let mut acc = F::from_i64(ctx, e[i] as i64);
                        for (v, &ev) in e.iter().enumerate() {
                            let ev = if v == i { ev - 1 } else { ev };
                            acc = acc.mul(&pt[v].pow(ev as u64));
                        }
                        acc
                    })
                    .collect()
            })
        })
        .collect();
    let m = Matrix::from_rows(ctx, basis.len(), rows)?;
    Ok(m.rank() < basis.len())
}

/// [`exists_form_singular_along`] for cubics.
pub fn exists_cubic_singular_along<F: Field>(z: &PointSet<F>) -> Result<bool> {
    exists_form_singular_along(z, 3)
}
