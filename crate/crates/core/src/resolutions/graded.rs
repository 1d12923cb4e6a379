//! Graded ideals and their quotient algebras, truncated to finitely many degrees.

use crate::apolarity::{catalecticant, evaluation_matrix, PointSet};
use crate::error::{Error, Result};
use crate::field::{same_field, Field};
use crate::form::{Alphabet, HomogeneousForm};
use crate::matrix::{Ambient, Matrix, Subspace};
use crate::monomial;

/// Multiplies every degree-`k` vector in `rows` (coefficient vectors over the
/// monomial basis) by `y_v`, giving degree-`(k+1)` coefficient vectors.
fn times_variable<F: Field>(ctx: &F::Ctx, n: usize, k: usize, rows: &Matrix<F>, v: usize) -> Matrix<F> {
    let src = monomial::basis(n, k);
    let mut out = Matrix::zeros(ctx, rows.rows(), monomial::count(n, k + 1));
    let mut e = vec![0u32; n];
    for (c, mono) in src.iter().enumerate() {
        e.copy_from_slice(mono);
        e[v] += 1;
        let target = monomial::index_of(&e);
        for r in 0..rows.rows() {
            let x = rows.get(r, c);
            if !x.is_zero() {
                out.set(r, target, x.clone());
            }
        }
    }
    out
}

/// A homogeneous ideal given by its graded pieces `I_0, ..., I_top`.
#[derive(Debug, Clone)]
pub struct GradedIdeal<F: Field> {
    ctx: F::Ctx,
    num_vars: usize,
    pieces: Vec<Subspace<F>>,
}

impl<F: Field> GradedIdeal<F> {
    /// Checks that `y_v I_k` lies in `I_{k+1}` for every variable and degree.
    pub fn new(ctx: &F::Ctx, num_vars: usize, pieces: Vec<Subspace<F>>) -> Result<Self> {
        for (k, piece) in pieces.iter().enumerate() {
            same_field::<F>(ctx, piece.ctx())?;
            if piece.ambient() != Ambient::graded(num_vars, k) {
                return Err(Error::DimensionMismatch(format!("piece {k} does not live in degree {k}")));
            }
        }
        for k in 0..pieces.len().saturating_sub(1) {
            for v in 0..num_vars {
                let moved = times_variable(ctx, num_vars, k, pieces[k].basis(), v);
                for r in 0..moved.rows() {
                    if !pieces[k + 1].contains(moved.row(r)) {
                        return Err(Error::Precondition(format!(
                            "pieces are not an ideal: y{v} times I_{k} leaves I_{}",
                            k + 1
                        )));
                    }
                }
            }
        }
        Ok(GradedIdeal { ctx: ctx.clone(), num_vars, pieces })
    }

    /// The ideal generated by `gens`, through degree `top`.
    pub fn generated_by(ctx: &F::Ctx, num_vars: usize, gens: &[HomogeneousForm<F>], top: usize) -> Result<Self> {
        for g in gens {
            same_field::<F>(ctx, g.ctx())?;
            if g.num_vars() != num_vars {
                return Err(Error::VarCountMismatch { expected: num_vars, got: g.num_vars() });
            }
        }
        let mut pieces: Vec<Subspace<F>> = Vec::with_capacity(top + 1);
        for k in 0..=top {
            let dim = monomial::count(num_vars, k);
            let mut rows: Vec<Vec<F>> = gens.iter().filter(|g| g.degree() == k).map(|g| g.coeffs().to_vec()).collect();
            if k > 0 {
                let prev = &pieces[k - 1];
                for v in 0..num_vars {
                    rows.extend(times_variable(ctx, num_vars, k - 1, prev.basis(), v).row_vecs());
                }
            }
            let m = Matrix::from_rows(ctx, dim, rows)?;
            pieces.push(Subspace::from_matrix(Ambient::graded(num_vars, k), &m));
        }
        Ok(GradedIdeal { ctx: ctx.clone(), num_vars, pieces })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn top(&self) -> usize {
        self.pieces.len() - 1
    }

    pub fn piece(&self, k: usize) -> Result<&Subspace<F>> {
        self.pieces.get(k).ok_or(Error::MissingPiece { degree: k, top: self.top() })
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }
}

/// The graded algebra `A = S/I` in degrees `0..=top`, each piece in its own
/// coordinates, with the multiplication maps by the variables.
///
/// `mult[k][v]` has one row per basis vector of `A_k`, holding the coordinates
/// of its product with `y_v` in `A_{k+1}`.
#[derive(Debug, Clone)]
pub struct GradedQuotient<F: Field> {
    ctx: F::Ctx,
    num_vars: usize,
    dims: Vec<usize>,
    mult: Vec<Vec<Matrix<F>>>,
    vanishes_above: bool,
}

impl<F: Field> GradedQuotient<F> {
    /// Builds the algebra from bases of its pieces, each given as the rows of
    /// a matrix, and a map sending a basis vector of piece `k` to its product
    /// with `y_v` expressed in the coordinates of piece `k + 1`.
    fn assemble(
        ctx: &F::Ctx,
        num_vars: usize,
        pieces: &[Subspace<F>],
        vanishes_above: bool,
        mut times: impl FnMut(usize, &[F], usize) -> Vec<F>,
    ) -> Result<Self> {
        let dims: Vec<usize> = pieces.iter().map(Subspace::dim).collect();
        let mut mult = Vec::with_capacity(pieces.len());
        for k in 0..pieces.len() {
            let next = pieces.get(k + 1);
            let mut per_var = Vec::with_capacity(num_vars);
            for v in 0..num_vars {
                let cols = next.map_or(0, Subspace::dim);
                let mut rows = Vec::with_capacity(dims[k]);
                for r in 0..dims[k] {
                    let image = times(k, pieces[k].basis().row(r), v);
                    let coords = match next {
                        Some(nx) => nx.coordinates(&image).ok_or_else(|| {
                            Error::Precondition(format!("y{v} maps piece {k} outside piece {}", k + 1))
                        })?,
                        None if vanishes_above => {
                            if image.iter().any(|x| !x.is_zero()) {
                                return Err(Error::Precondition(format!("top piece {k} is not annihilated by y{v}")));
                            }
                            vec![]
                        }
                        None => vec![],
                    };
                    rows.push(coords);
                }
                per_var.push(Matrix::from_rows(ctx, cols, rows)?);
            }
            mult.push(per_var);
        }
        Ok(GradedQuotient { ctx: ctx.clone(), num_vars, dims, mult, vanishes_above })
    }

    /// The apolar algebra `S/I_f`, realized as the spaces of partial
    /// derivatives of `f`: `A_k` is spanned by `D o f` for `deg D = k`, and
    /// `y_v` acts by differentiation.
    pub fn apolar_algebra(f: &HomogeneousForm<F>) -> Result<Self> {
        let ctx = f.ctx();
        let n = f.num_vars();
        let d = f.degree();
        let pieces = (0..=d)
            .map(|k| Ok(Subspace::from_matrix(Ambient::graded(n, d - k), &catalecticant(f, k)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::assemble(ctx, n, &pieces, true, |k, row, v| {
            let g = HomogeneousForm::new(ctx, Alphabet::X, n, d - k, row.to_vec()).expect("row has piece length");
            g.partial(v).coeffs().to_vec()
        })
    }

    /// `S/I_Z` for a point set, realized as the spaces of value vectors on `Z`
    /// of forms of each degree; `y_v` multiplies by the `v`-th coordinates.
    pub fn of_points(z: &PointSet<F>, top: usize) -> Result<Self> {
        let ctx = z.ctx();
        let s = z.len();
        let pieces: Vec<Subspace<F>> = (0..=top)
            .map(|k| Subspace::from_matrix(Ambient::plain(s), &evaluation_matrix(z, k)))
            .collect();
        Self::assemble(ctx, z.num_vars(), &pieces, false, |_, row, v| {
            row.iter().zip(z.points()).map(|(x, p)| x.mul(&p[v])).collect()
        })
    }

    /// `S/I` with each piece represented by the standard monomials (non-pivot
    /// columns of the echelon basis of `I_k`).
    pub fn from_ideal(ideal: &GradedIdeal<F>) -> Result<Self> {
        let ctx = ideal.ctx();
        let n = ideal.num_vars();
        // normal form: reduce against the echelon basis, then read standard monomials
        let normal = |k: usize, vec: &mut Vec<F>| {
            let piece = &ideal.pieces[k];
            for (i, &pc) in piece.pivots().iter().enumerate() {
                let c = vec[pc].clone();
                if !c.is_zero() {
                    for (j, b) in piece.basis().row(i).iter().enumerate() {
                        if !b.is_zero() {
                            vec[j] = vec[j].sub(&c.mul(b));
                        }
                    }
                }
            }
        };
        let standard: Vec<Vec<usize>> = ideal
            .pieces
            .iter()
            .map(|p| (0..p.ambient().dim()).filter(|c| !p.pivots().contains(c)).collect())
            .collect();
        let top = ideal.top();
        let mut dims = Vec::with_capacity(top + 1);
        let mut mult = Vec::with_capacity(top + 1);
        for k in 0..=top {
            dims.push(standard[k].len());
            let mut per_var = Vec::with_capacity(n);
            let src = monomial::basis(n, k);
            for v in 0..n {
                let cols = if k < top { standard[k + 1].len() } else { 0 };
                let mut rows = Vec::with_capacity(standard[k].len());
                for &m in &standard[k] {
                    if k == top {
                        rows.push(vec![]);
                        continue;
                    }
                    let mut e = src[m].clone();
                    e[v] += 1;
                    let mut vec = vec![F::zero(ctx); monomial::count(n, k + 1)];
                    vec[monomial::index_of(&e)] = F::one(ctx);
                    normal(k + 1, &mut vec);
                    rows.push(standard[k + 1].iter().map(|&c| vec[c].clone()).collect());
                }
                per_var.push(Matrix::from_rows(ctx, cols, rows)?);
            }
            mult.push(per_var);
        }
        Ok(GradedQuotient { ctx: ctx.clone(), num_vars: n, dims, mult, vanishes_above: false })
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Highest degree stored.
    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    /// Whether every piece above [`GradedQuotient::top`] is zero.
    pub fn vanishes_above(&self) -> bool {
        self.vanishes_above
    }

    /// `dim A_k`.
    pub fn dim(&self, k: usize) -> Result<usize> {
        match self.dims.get(k) {
            Some(&d) => Ok(d),
            None if self.vanishes_above => Ok(0),
            None => Err(Error::MissingPiece { degree: k, top: self.top() }),
        }
    }

    /// Hilbert function in degrees `0..=top`.
    pub fn hilbert_function(&self) -> &[usize] {
        &self.dims
    }

    /// Multiplication `A_k -> A_{k+1}` by `y_v`; needs both pieces.
    pub fn mult(&self, k: usize, v: usize) -> Result<Matrix<F>> {
        if k + 1 > self.top() && !self.vanishes_above {
            return Err(Error::MissingPiece { degree: k + 1, top: self.top() });
        }
        match self.mult.get(k) {
            Some(per_var) => Ok(per_var[v].clone()),
            None => Ok(Matrix::zeros(&self.ctx, 0, 0)),
        }
    }
}
