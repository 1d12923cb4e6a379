//! Dense exact matrices, row reduction, kernels and subspaces.
//!
//! Linear maps are stored in "row image" form throughout the crate: row `r`
//! of the matrix is the image of the `r`-th source basis vector. The kernel
//! of such a map is therefore [`Matrix::left_kernel`].

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{random_prime, same_field, Field, Fp, Q};
use crate::monomial;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<F: Field> {
    ctx: F::Ctx,
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(ctx: &F::Ctx, rows: usize, cols: usize) -> Self {
        Matrix { ctx: ctx.clone(), rows, cols, data: vec![F::zero(ctx); rows * cols] }
    }

    pub fn identity(ctx: &F::Ctx, n: usize) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, F::one(ctx));
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols` and live in `ctx`.
    pub fn from_rows(ctx: &F::Ctx, cols: usize, rows: Vec<Vec<F>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!("row of length {} in a {cols}-column matrix", row.len())));
            }
            for x in &row {
                same_field::<F>(ctx, &x.ctx())?;
            }
            data.extend(row);
        }
        Ok(Matrix { ctx: ctx.clone(), rows: nrows, cols, data })
    }

    pub fn from_fn(ctx: &F::Ctx, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { ctx: ctx.clone(), rows, cols, data }
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.ctx, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        same_field::<F>(&self.ctx, &other.ctx)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(&self.ctx, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let idx = r * other.cols + c;
                        out.data[idx] = out.data[idx].add(&a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_field::<F>(&self.ctx, &other.ctx)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch("matrix sum".into()));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect();
        Ok(Matrix { ctx: self.ctx.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, s: &F) -> Self {
        let data = self.data.iter().map(|a| a.mul(s)).collect();
        Matrix { ctx: self.ctx.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[F]) -> Result<Vec<F>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch(format!("vector of length {} against {} rows", v.len(), self.rows)));
        }
        let mut out = vec![F::zero(&self.ctx); self.cols];
        for (r, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    *o = o.add(&x.mul(a));
                }
            }
        }
        Ok(out)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        same_field::<F>(&self.ctx, &other.ctx)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack with different column counts".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix { ctx: self.ctx.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend_from_slice(self.row(r));
        }
        Matrix { ctx: self.ctx.clone(), rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        Self::from_fn(&self.ctx, self.rows, idx.len(), |r, c| self.get(r, idx[c]).clone())
    }

    /// Applies `f` entrywise into another field.
    pub fn map<G: Field>(&self, ctx: &G::Ctx, f: impl Fn(&F) -> Result<G>) -> Result<Matrix<G>> {
        let data = self.data.iter().map(f).collect::<Result<Vec<G>>>()?;
        Ok(Matrix { ctx: ctx.clone(), rows: self.rows, cols: self.cols, data })
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = self.get(r, c).inv().expect("pivot is nonzero");
            for j in c..cols {
                let v = self.get(r, j).mul(&inv);
                self.set(r, j, v);
            }
            let pivot_row: Vec<F> = self.row(r)[c..].to_vec();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for (off, pv) in pivot_row.iter().enumerate() {
                    if !pv.is_zero() {
                        let j = c + off;
                        let v = self.get(i, j).sub(&factor.mul(pv));
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Rank by forward elimination, first nonzero pivot in each column.
    pub fn rank_gaussian(&self) -> usize {
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for i in r + 1..rows {
                let factor = m.get(i, c).mul(&inv);
                if factor.is_zero() {
                    continue;
                }
                for j in c..cols {
                    let pv = m.get(r, j).clone();
                    if !pv.is_zero() {
                        let v = m.get(i, j).sub(&factor.mul(&pv));
                        m.set(i, j, v);
                    }
                }
            }
            r += 1;
        }
        r
    }

    /// Rank over the matrix's field (fraction-free over the rationals).
    pub fn rank(&self) -> usize {
        F::rank_of(self)
    }

    /// `{ v : M v = 0 }`, as a subspace of `F^cols`.
    pub fn kernel(&self) -> Subspace<F> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![F::zero(&self.ctx); self.cols];
            v[f] = F::one(&self.ctx);
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = r.get(i, f).neg();
            }
            basis.push(v);
        }
        let m = Matrix::from_rows(&self.ctx, self.cols, basis).expect("kernel rows are well formed");
        Subspace::from_matrix(Ambient::plain(self.cols), &m)
    }

    /// `{ v : v M = 0 }`, the kernel of the map whose row images are the rows of `M`.
    pub fn left_kernel(&self) -> Subspace<F> {
        self.transpose().kernel()
    }

    /// Determinant of a square matrix.
    pub fn det(&self) -> Result<F> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
        }
        let mut m = self.clone();
        let n = self.rows;
        let mut det = F::one(&self.ctx);
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(F::zero(&self.ctx));
            };
            if pr != c {
                m.swap_rows(c, pr);
                det = det.neg();
            }
            let piv = m.get(c, c).clone();
            det = det.mul(&piv);
            let inv = piv.inv().expect("pivot is nonzero");
            for i in c + 1..n {
                let factor = m.get(i, c).mul(&inv);
                if factor.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = m.get(i, j).sub(&factor.mul(m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    /// Inverse of a square matrix, from the reduced echelon form of `[M | I]`.
    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Self::from_fn(&self.ctx, n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                F::one(&self.ctx)
            } else {
                F::zero(&self.ctx)
            }
        });
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Precondition("matrix is singular".into()));
        }
        Ok(Self::from_fn(&self.ctx, n, n, |r, c| aug.get(r, n + c).clone()))
    }

    /// A uniformly random matrix.
    pub fn random<R: Rng + ?Sized>(ctx: &F::Ctx, rows: usize, cols: usize, rng: &mut R) -> Self {
        Self::from_fn(ctx, rows, cols, |_, _| F::random(ctx, rng))
    }

    /// A random invertible `n x n` matrix (rejection sampling).
    pub fn random_invertible<R: Rng + ?Sized>(ctx: &F::Ctx, n: usize, rng: &mut R) -> Self {
        loop {
            let m = Self::random(ctx, n, n, rng);
            if m.rank() == n {
                return m;
            }
        }
    }
}

/// Fraction-free (Bareiss) rank of an integer matrix.
pub(crate) fn bareiss_rank(mut m: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let rows = m.len();
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let pivot = m[r][c].clone();
        for i in r + 1..rows {
            let factor = m[i][c].clone();
            for j in c..cols {
                let v = (&pivot * &m[i][j] - &factor * &m[r][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = pivot;
        r += 1;
    }
    r
}

/// Outcome of a modular rank computation for a rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankCertificate {
    pub rank: usize,
    pub primes: Vec<u64>,
    /// `true` when the two modular ranks agreed; otherwise `rank` is the exact rational rank.
    pub agreed: bool,
}

/// Rank of a rational matrix via two random primes above `2^15`.
///
/// Each modular rank is a lower bound for the rational rank; agreement of
/// two independent primes is accepted as the answer. This is probabilistic.
/// On disagreement the exact fraction-free rank is returned.
pub fn rank_two_prime(m: &Matrix<Q>, seed: u64) -> RankCertificate {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut primes = Vec::new();
    let mut ranks = Vec::new();
    while primes.len() < 2 {
        let p = random_prime(&mut rng, 1 << 15, 1 << 30);
        if primes.contains(&p) {
            continue;
        }
        let Ok(mp) = m.map(&p, |x| Fp::from_ratio(&p, x.as_ratio())) else {
            continue;
        };
        primes.push(p);
        ranks.push(mp.rank());
    }
    if ranks[0] == ranks[1] {
        RankCertificate { rank: ranks[0], primes, agreed: true }
    } else {
        RankCertificate { rank: m.rank(), primes, agreed: false }
    }
}

/// The coordinate space a [`Subspace`] lives in: `multiplicity` copies of
/// the degree-`degree` graded piece in `num_vars` variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ambient {
    pub num_vars: usize,
    pub degree: usize,
    pub multiplicity: usize,
}

impl Ambient {
    pub fn graded(num_vars: usize, degree: usize) -> Self {
        Ambient { num_vars, degree, multiplicity: 1 }
    }

    /// `F^dim` viewed as linear forms in `dim` variables.
    pub fn plain(dim: usize) -> Self {
        Ambient { num_vars: dim, degree: 1, multiplicity: 1 }
    }

    pub fn dim(&self) -> usize {
        self.multiplicity * monomial::count(self.num_vars, self.degree)
    }
}

/// A linear subspace stored by its reduced row echelon basis, which makes
/// equal subspaces compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace<F: Field> {
    ambient: Ambient,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    /// Row space of `m`.
    pub fn from_matrix(ambient: Ambient, m: &Matrix<F>) -> Self {
        assert_eq!(ambient.dim(), m.cols(), "ambient dimension must match column count");
        let (r, pivots) = m.rref();
        let basis = r.select_rows(&(0..pivots.len()).collect::<Vec<_>>());
        Subspace { ambient, basis, pivots }
    }

    pub fn zero(ctx: &F::Ctx, ambient: Ambient) -> Self {
        Subspace { ambient, basis: Matrix::zeros(ctx, 0, ambient.dim()), pivots: vec![] }
    }

    pub fn full(ctx: &F::Ctx, ambient: Ambient) -> Self {
        let n = ambient.dim();
        Subspace { ambient, basis: Matrix::identity(ctx, n), pivots: (0..n).collect() }
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ctx(&self) -> &F::Ctx {
        self.basis.ctx()
    }

    /// Basis rows, in reduced echelon form.
    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is not in the span.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        let coords: Vec<F> = self.pivots.iter().map(|&c| v[c].clone()).collect();
        let back = self.basis.vec_mul(&coords).ok()?;
        (back.as_slice() == v).then_some(coords)
    }

    pub fn contains(&self, v: &[F]) -> bool {
        v.len() == self.ambient.dim() && self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace<F>) -> bool {
        (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    /// Same subspace in a different ambient description of equal dimension.
    pub fn with_ambient(mut self, ambient: Ambient) -> Self {
        assert_eq!(ambient.dim(), self.ambient.dim());
        self.ambient = ambient;
        self
    }
}
