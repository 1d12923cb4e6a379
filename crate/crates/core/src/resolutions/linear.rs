//! Matrices whose entries are linear forms.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{same_field, Field};
use crate::form::{Alphabet, HomogeneousForm};
use crate::matrix::Matrix;
use crate::text::{parse_form, ParseOptions};

/// `M = sum_v y_v A_v` with constant `rows x cols` matrices `A_v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFormMatrix<F: Field> {
    ctx: F::Ctx,
    alphabet: Alphabet,
    rows: usize,
    cols: usize,
    coeffs: Vec<Matrix<F>>,
}

impl<F: Field> LinearFormMatrix<F> {
    /// From one coefficient matrix per variable.
    pub fn from_coefficients(ctx: &F::Ctx, alphabet: Alphabet, coeffs: Vec<Matrix<F>>) -> Result<Self> {
        let first = coeffs.first().ok_or_else(|| Error::Precondition("no variables".into()))?;
        let (rows, cols) = (first.rows(), first.cols());
        for a in &coeffs {
            same_field::<F>(ctx, a.ctx())?;
            if (a.rows(), a.cols()) != (rows, cols) {
                return Err(Error::DimensionMismatch("coefficient matrices differ in shape".into()));
            }
        }
        Ok(LinearFormMatrix { ctx: ctx.clone(), alphabet, rows, cols, coeffs })
    }

    /// From a grid of linear (or zero) forms sharing a variable count.
    pub fn from_entries(ctx: &F::Ctx, entries: &[Vec<HomogeneousForm<F>>]) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        let first = entries
            .iter()
            .flatten()
            .next()
            .ok_or_else(|| Error::Precondition("empty matrix".into()))?;
        let (n, alphabet) = (first.num_vars(), first.alphabet());
        let mut coeffs = vec![Matrix::zeros(ctx, rows, cols); n];
        for (r, row) in entries.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!("row {r} has {} entries, expected {cols}", row.len())));
            }
            for (c, e) in row.iter().enumerate() {
                same_field::<F>(ctx, e.ctx())?;
                if e.num_vars() != n {
                    return Err(Error::VarCountMismatch { expected: n, got: e.num_vars() });
                }
                match e.degree() {
                    1 => {
                        for (v, x) in e.coeffs().iter().enumerate() {
                            coeffs[v].set(r, c, x.clone());
                        }
                    }
                    0 if e.is_zero() => {}
                    d => return Err(Error::DegreeMismatch { expected: 1, got: d }),
                }
            }
        }
        Ok(LinearFormMatrix { ctx: ctx.clone(), alphabet, rows, cols, coeffs })
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

    pub fn num_vars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// The coefficient matrix of variable `v`.
    pub fn coefficient(&self, v: usize) -> &Matrix<F> {
        &self.coeffs[v]
    }

    pub fn entry(&self, r: usize, c: usize) -> HomogeneousForm<F> {
        let c: Vec<F> = self.coeffs.iter().map(|a| a.get(r, c).clone()).collect();
        HomogeneousForm::linear(&self.ctx, self.alphabet, &c)
    }

    /// The scalar matrix `M(p)`.
    pub fn evaluate(&self, point: &[F]) -> Result<Matrix<F>> {
        if point.len() != self.num_vars() {
            return Err(Error::VarCountMismatch { expected: self.num_vars(), got: point.len() });
        }
        let mut out = Matrix::zeros(&self.ctx, self.rows, self.cols);
        for (a, x) in self.coeffs.iter().zip(point) {
            same_field::<F>(&self.ctx, &x.ctx())?;
            if !x.is_zero() {
                out = out.add(&a.scale(x))?;
            }
        }
        Ok(out)
    }

    pub fn rank_at_point(&self, point: &[F]) -> Result<usize> {
        Ok(self.evaluate(point)?.rank())
    }

    /// Entrywise substitution of variable `v` by the linear form `subst[v]`.
    pub fn restrict(&self, subst: &[HomogeneousForm<F>]) -> Result<LinearFormMatrix<F>> {
        if subst.len() != self.num_vars() {
            return Err(Error::VarCountMismatch { expected: self.num_vars(), got: subst.len() });
        }
        let target = subst.first().ok_or_else(|| Error::Precondition("empty substitution".into()))?;
        let (m, alphabet) = (target.num_vars(), target.alphabet());
        for (index, s) in subst.iter().enumerate() {
            same_field::<F>(&self.ctx, s.ctx())?;
            if s.degree() != 1 {
                return Err(Error::NonLinearSubstituent { index, degree: s.degree() });
            }
            if s.num_vars() != m {
                return Err(Error::VarCountMismatch { expected: m, got: s.num_vars() });
            }
        }
        // new coefficient of z_w is sum_v subst[v]_w A_v
        let coeffs = (0..m)
            .map(|w| {
                let mut acc = Matrix::zeros(&self.ctx, self.rows, self.cols);
                for (v, a) in self.coeffs.iter().enumerate() {
                    let s = &subst[v].coeffs()[w];
                    if !s.is_zero() {
                        acc = acc.add(&a.scale(s))?;
                    }
                }
                Ok(acc)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LinearFormMatrix { ctx: self.ctx.clone(), alphabet, rows: self.rows, cols: self.cols, coeffs })
    }

    /// Coefficientwise image in another field.
    pub fn map_field<G: Field>(&self, ctx: &G::Ctx, f: impl Fn(&F) -> Result<G> + Copy) -> Result<LinearFormMatrix<G>> {
        let coeffs = self.coeffs.iter().map(|a| a.map(ctx, f)).collect::<Result<Vec<_>>>()?;
        Ok(LinearFormMatrix { ctx: ctx.clone(), alphabet: self.alphabet, rows: self.rows, cols: self.cols, coeffs })
    }

    /// `{"rows", "cols", "field", "entries": [[text, ...], ...]}`.
    pub fn to_json(&self) -> Value {
        let entries: Vec<Vec<String>> =
            (0..self.rows).map(|r| (0..self.cols).map(|c| self.entry(r, c).to_string()).collect()).collect();
        json!({
            "rows": self.rows,
            "cols": self.cols,
            "field": F::descriptor(&self.ctx).to_string(),
            "num_vars": self.num_vars(),
            "entries": entries,
        })
    }

    pub fn from_json(ctx: &F::Ctx, v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Serialization(m.to_string());
        let n = v["num_vars"].as_u64().ok_or_else(|| bad("missing num_vars"))? as usize;
        let rows = v["entries"].as_array().ok_or_else(|| bad("missing entries"))?;
        let mut grid = Vec::with_capacity(rows.len());
        let mut alphabet = None;
        for row in rows {
            let row = row.as_array().ok_or_else(|| bad("entries must be arrays"))?;
            let mut out = Vec::with_capacity(row.len());
            for e in row {
                let s = e.as_str().ok_or_else(|| bad("entries must be strings"))?;
                let opts = ParseOptions { alphabet, num_vars: Some(n), degree: Some(1) };
                let form = parse_form::<F>(ctx, s, opts)?;
                if !form.is_zero() {
                    alphabet = Some(form.alphabet());
                }
                out.push(form);
            }
            grid.push(out);
        }
        let mut m = Self::from_entries(ctx, &grid)?;
        if let Some(a) = alphabet {
            m.alphabet = a;
        }
        Ok(m)
    }
}

