//! Linear first and second syzygies of a space of quadrics, and the matrix `M2`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::betti::{graded_betti, BettiTable};
use super::graded::{GradedIdeal, GradedQuotient};
use super::linear::LinearFormMatrix;
use crate::apolarity::{basis_forms, q_f};
use crate::error::{Error, Result};
use crate::field::{same_field, Field};
use crate::form::{Alphabet, HomogeneousForm};
use crate::matrix::{Ambient, Matrix, Subspace};
use crate::monomial;

/// Multiplies the linear form with coefficients `l` by the form `g`, adding
/// the product into `out` (coefficients of degree `deg g + 1`).
fn add_linear_times<F: Field>(out: &mut [F], l: &[F], g: &HomogeneousForm<F>) {
    let n = l.len();
    let mut e = vec![0u32; n];
    for (mono, c) in g.terms() {
        for (v, lv) in l.iter().enumerate() {
            if lv.is_zero() {
                continue;
            }
            e.copy_from_slice(&mono);
            e[v] += 1;
            let idx = monomial::index_of(&e);
            out[idx] = out[idx].add(&lv.mul(&c));
        }
    }
}

/// The linear strand of a space of quadrics through second syzygies.
#[derive(Debug, Clone)]
pub struct LinearStrand<F: Field> {
    /// Basis `Q_1..Q_s` of the quadrics.
    pub quadrics: Vec<HomogeneousForm<F>>,
    /// Order-1 syzygies: tuples `(l_i)` of linear forms with `sum l_i Q_i = 0`,
    /// coordinates `i * n + v`.
    pub first: Subspace<F>,
    /// Order-2 syzygies: tuples `(m_j)` with `sum m_j S_j = 0` over the basis
    /// `S_j` of `first`, coordinates `j * n + v`.
    pub second: Subspace<F>,
}

/// Betti numbers of `S/(Q)` in the window relevant to the linear strand.
pub fn strand_betti<F: Field>(quadrics: &[HomogeneousForm<F>]) -> Result<BettiTable> {
    let q0 = quadrics.first().ok_or_else(|| Error::Precondition("no quadrics".into()))?;
    let ideal = GradedIdeal::generated_by(q0.ctx(), q0.num_vars(), quadrics, 4)?;
    let a = GradedQuotient::from_ideal(&ideal)?;
    graded_betti(&a, 3, 4)
}

fn check_quadrics<F: Field>(quadrics: &[HomogeneousForm<F>]) -> Result<(F::Ctx, usize)> {
    let q0 = quadrics.first().ok_or_else(|| Error::Precondition("no quadrics".into()))?;
    for q in quadrics {
        same_field::<F>(q0.ctx(), q.ctx())?;
        if q.num_vars() != q0.num_vars() {
            return Err(Error::VarCountMismatch { expected: q0.num_vars(), got: q.num_vars() });
        }
        if q.degree() != 2 {
            return Err(Error::DegreeMismatch { expected: 2, got: q.degree() });
        }
    }
    Ok((q0.ctx().clone(), q0.num_vars()))
}

/// Order-1 linear syzygies: the kernel of `(V*)^s -> S^3 V*`, `(l_i) -> sum l_i Q_i`.
pub fn first_syzygies<F: Field>(quadrics: &[HomogeneousForm<F>]) -> Result<Subspace<F>> {
    let (ctx, n) = check_quadrics(quadrics)?;
    let s = quadrics.len();
    let cubic = monomial::count(n, 3);
    let mut rows = Vec::with_capacity(s * n);
    for q in quadrics {
        for v in 0..n {
            let mut out = vec![F::zero(&ctx); cubic];
            let mut l = vec![F::zero(&ctx); n];
            l[v] = F::one(&ctx);
            add_linear_times(&mut out, &l, q);
            rows.push(out);
        }
    }
    let m = Matrix::from_rows(&ctx, cubic, rows)?;
    Ok(m.left_kernel().with_ambient(Ambient { num_vars: n, degree: 1, multiplicity: s }))
}

/// Order-2 linear syzygies over the rows `S_j` of `first` (tuples of `s`
/// linear forms in `n` variables): the kernel of `(V*)^t -> (S^2 V*)^s`,
/// `(m_j) -> sum m_j S_j`.
pub fn second_syzygies<F: Field>(n: usize, s: usize, first: &Matrix<F>) -> Result<Subspace<F>> {
    if first.cols() != n * s {
        return Err(Error::DimensionMismatch("first syzygies are not tuples of linear forms".into()));
    }
    let ctx = first.ctx().clone();
    let t = first.rows();
    let quad = monomial::count(n, 2);
    let mut rows = Vec::with_capacity(t * n);
    for j in 0..t {
        let syz = first.row(j);
        for v in 0..n {
            // y_v * S_j, block i = y_v * (S_j)_i
            let mut out = vec![F::zero(&ctx); s * quad];
            for i in 0..s {
                let li = HomogeneousForm::linear(&ctx, Alphabet::Y, &syz[i * n..(i + 1) * n]);
                let mut yv = vec![F::zero(&ctx); n];
                yv[v] = F::one(&ctx);
                add_linear_times(&mut out[i * quad..(i + 1) * quad], &yv, &li);
            }
            rows.push(out);
        }
    }
    let m = Matrix::from_rows(&ctx, s * quad, rows)?;
    Ok(m.left_kernel().with_ambient(Ambient { num_vars: n, degree: 1, multiplicity: t }))
}

/// Linear syzygies of order 1 or 2 of the ideal generated by `quadrics`.
///
/// The kernel computed is the corresponding Betti number only when nothing
/// outside the linear strand interferes: order 1 needs `b_{1,3} = 0`, order 2
/// needs `b_{2,4} = 0` for `S/(Q)`. Otherwise this returns
/// [`Error::BettiShape`].
pub fn linear_syzygies<F: Field>(quadrics: &[HomogeneousForm<F>], order: usize) -> Result<Subspace<F>> {
    let betti = strand_betti(quadrics)?;
    let (guard_i, guard_j) = match order {
        1 => (1, 3),
        2 => (2, 4),
        _ => return Err(Error::Precondition(format!("syzygy order must be 1 or 2, got {order}"))),
    };
    if betti.get(guard_i, guard_j) != 0 {
        return Err(Error::BettiShape(format!(
            "b_{{{guard_i},{guard_j}}} = {} makes the naive kernel non-minimal",
            betti.get(guard_i, guard_j)
        )));
    }
    let first = first_syzygies(quadrics)?;
    if order == 1 {
        return Ok(first);
    }
    second_syzygies(first.ambient().num_vars, quadrics.len(), first.basis())
}

/// Builds the full linear strand after checking both guards.
pub fn linear_strand<F: Field>(quadrics: &[HomogeneousForm<F>]) -> Result<LinearStrand<F>> {
    let betti = strand_betti(quadrics)?;
    for (i, j) in [(1, 3), (2, 4)] {
        if betti.get(i, j) != 0 {
            return Err(Error::BettiShape(format!("b_{{{i},{j}}} = {} is nonzero", betti.get(i, j))));
        }
    }
    let first = first_syzygies(quadrics)?;
    let second = second_syzygies(first.ambient().num_vars, quadrics.len(), first.basis())?;
    Ok(LinearStrand { quadrics: quadrics.to_vec(), first, second })
}

/// `m (x) 1_n`: entry `(i * n + v, j * n + v)` is `m(i, j)`.
fn expand<F: Field>(m: &Matrix<F>, n: usize) -> Matrix<F> {
    Matrix::from_fn(m.ctx(), m.rows() * n, m.cols() * n, |r, c| {
        if r % n == c % n {
            m.get(r / n, c / n).clone()
        } else {
            F::zero(m.ctx())
        }
    })
}

/// Betti table of the apolar ideal of a general cubic in six variables.
pub fn generic_cubic_betti() -> BettiTable {
    BettiTable::from_rows(&[
        &[(0, 1)],
        &[(1, 15), (2, 35), (3, 21)],
        &[(3, 21), (4, 35), (5, 15)],
        &[(6, 1)],
    ])
}

/// The `35 x 21` matrix of linear second syzygies of `I_f(2)` for a cubic
/// `f` in six variables with the generic Betti table.
///
/// Entry `(k, c)` is the coefficient `m_k` of the `c`-th second syzygy
/// against the `k`-th first syzygy. The matrix depends on the chosen bases;
/// with `basis_seed`, the bases of first and second syzygies are replaced by
/// random invertible recombinations, which changes the matrix but not its
/// rank at any point.
pub fn m2_matrix<F: Field>(f: &HomogeneousForm<F>, basis_seed: Option<u64>) -> Result<LinearFormMatrix<F>> {
    if f.num_vars() != 6 || f.degree() != 3 {
        return Err(Error::Precondition("M2 is defined for cubics in six variables".into()));
    }
    let ctx = f.ctx().clone();
    let betti = super::betti::full_betti(&GradedQuotient::apolar_algebra(f)?)?;
    if betti != generic_cubic_betti() {
        return Err(Error::BettiShape(format!("apolar ideal is not generic:\n{betti}")));
    }
    let quadrics = basis_forms(&q_f(f)?, f.alphabet().dual())?;
    let s = quadrics.len();
    let first = first_syzygies(&quadrics)?.basis().clone();
    let mut second = second_syzygies(6, s, &first)?.basis().clone();
    if let Some(seed) = basis_seed {
        // S' = G S turns the second syzygies into T' = H T (G^-1 (x) 1); the
        // basis of the quadrics does not enter M2 at all
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = Matrix::random_invertible(&ctx, first.rows(), &mut rng);
        let h = Matrix::random_invertible(&ctx, second.rows(), &mut rng);
        second = h.mul(&second)?.mul(&expand(&g.inverse()?, 6))?;
    }
    let (rows, cols, n) = (first.rows(), second.rows(), 6);
    let coeffs = (0..n)
        .map(|v| Matrix::from_fn(&ctx, rows, cols, |k, c| second.get(c, k * n + v).clone()))
        .collect();
    LinearFormMatrix::from_coefficients(&ctx, f.alphabet().dual(), coeffs)
}
