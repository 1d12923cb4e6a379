//! Graded Betti numbers from Koszul homology.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::graded::GradedQuotient;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

/// Graded Betti numbers `b_{i,j}`; only nonzero entries are stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "BettiJson", into = "BettiJson")]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), usize>,
}

#[derive(Serialize, Deserialize)]
struct BettiJson {
    entries: Vec<[usize; 3]>,
}

impl From<BettiJson> for BettiTable {
    fn from(j: BettiJson) -> Self {
        BettiTable::from_entries(j.entries.iter().map(|&[i, j, b]| (i, j, b)))
    }
}

impl From<BettiTable> for BettiJson {
    fn from(t: BettiTable) -> Self {
        BettiJson { entries: t.entries().map(|(i, j, b)| [i, j, b]).collect() }
    }
}

impl BettiTable {
    pub fn from_entries(entries: impl IntoIterator<Item = (usize, usize, usize)>) -> Self {
        let mut t = BettiTable::default();
        for (i, j, b) in entries {
            t.set(i, j, b);
        }
        t
    }

    /// Builds a table from its display rows: `rows[r]` lists `(i, b_{i,i+r})`.
    pub fn from_rows(rows: &[&[(usize, usize)]]) -> Self {
        Self::from_entries(
            rows.iter()
                .enumerate()
                .flat_map(|(r, row)| row.iter().map(move |&(i, b)| (i, i + r, b))),
        )
    }

    pub fn set(&mut self, i: usize, j: usize, b: usize) {
        if b == 0 {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), b);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries `(i, j, b_{i,j})` in increasing `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    /// Entries with `i <= max_i` and `j <= max_j`.
    pub fn window(&self, max_i: usize, max_j: usize) -> BettiTable {
        Self::from_entries(self.entries().filter(|&(i, j, _)| i <= max_i && j <= max_j))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("table serializes")
    }

    /// Rows `r = j - i` and columns `i`, with `-` for zero entries.
    pub fn render(&self) -> String {
        let max_i = self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0);
        let max_r = self.entries.keys().map(|&(i, j)| j.saturating_sub(i)).max().unwrap_or(0);
        let width = self.entries.values().map(|b| b.to_string().len()).max().unwrap_or(1).max(max_i.to_string().len());
        let label = max_r.to_string().len() + 1;
        let mut out = format!("{:label$}", "");
        for i in 0..=max_i {
            out.push_str(&format!(" {i:>width$}"));
        }
        out.push('\n');
        for r in 0..=max_r {
            out.push_str(&format!("{:>label$}", format!("{r}:")));
            for i in 0..=max_i {
                let b = self.get(i, i + r);
                let cell = if b == 0 { "-".to_string() } else { b.to_string() };
                out.push_str(&format!(" {cell:>width$}"));
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `i`-element subsets of `0..n` in lexicographic order.
pub(crate) fn subsets(n: usize, i: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for v in start..=n - left {
            cur.push(v);
            go(v + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if i <= n {
        go(0, n, i, &mut Vec::with_capacity(i), &mut out);
    }
    out
}

/// The Koszul differential `L^i (x) A_k -> L^{i-1} (x) A_{k+1}`,
/// `e_J (x) a -> sum_t (-1)^t e_{J \ j_t} (x) y_{j_t} a`.
///
/// Rows are indexed by `(J, b)` as `index(J) * dim A_k + b`, columns likewise.
pub fn koszul_differential<F: Field>(a: &GradedQuotient<F>, i: usize, k: usize) -> Result<Matrix<F>> {
    let n = a.num_vars();
    let src_dim = a.dim(k)?;
    let rows_j = subsets(n, i);
    if i == 0 {
        return Ok(Matrix::zeros(a.ctx(), rows_j.len() * src_dim, 0));
    }
    let dst_dim = a.dim(k + 1)?;
    let cols_j = subsets(n, i - 1);
    let index: std::collections::HashMap<&[usize], usize> =
        cols_j.iter().enumerate().map(|(idx, s)| (s.as_slice(), idx)).collect();
    let mut m = Matrix::zeros(a.ctx(), rows_j.len() * src_dim, cols_j.len() * dst_dim);
    if src_dim == 0 || dst_dim == 0 {
        return Ok(m);
    }
    let mults: Vec<Matrix<F>> = (0..n).map(|v| a.mult(k, v)).collect::<Result<_>>()?;
    for (rj, set) in rows_j.iter().enumerate() {
        for (t, &v) in set.iter().enumerate() {
            let mut rest = set.clone();
            rest.remove(t);
            let cj = index[rest.as_slice()];
            let neg = t % 2 == 1;
            for b in 0..src_dim {
                for c in 0..dst_dim {
                    let x = mults[v].get(b, c);
                    if x.is_zero() {
                        continue;
                    }
                    let val = if neg { x.neg() } else { x.clone() };
                    let (r, col) = (rj * src_dim + b, cj * dst_dim + c);
                    let cur = m.get(r, col).add(&val);
                    m.set(r, col, cur);
                }
            }
        }
    }
    Ok(m)
}

fn binomial(n: usize, k: usize) -> usize {
    crate::monomial::binomial(n, k)
}

/// Betti numbers `b_{i,j}` of `A = S/I` for `i <= max_i`, `j <= max_j`:
/// `b_{i,j} = dim L^i (x) A_{j-i} - rank d_{i,j-i} - rank d_{i+1,j-i-1}`.
///
/// Each cell is independent and evaluated in parallel; the result does not
/// depend on scheduling.
pub fn graded_betti<F: Field>(a: &GradedQuotient<F>, max_i: usize, max_j: usize) -> Result<BettiTable> {
    let n = a.num_vars();
    let max_i = max_i.min(n);
    // d_{i,k} needs A_{k+1}
    for i in 1..=max_i {
        if max_j >= i {
            a.dim(max_j - i + 1)?;
        }
    }
    a.dim(max_j)?;
    let mut ranks_needed: Vec<(usize, usize)> = Vec::new();
    for i in 0..=max_i {
        for j in i..=max_j {
            let k = j - i;
            ranks_needed.push((i, k));
            if k > 0 && i < n {
                ranks_needed.push((i + 1, k - 1));
            }
        }
    }
    ranks_needed.sort_unstable();
    ranks_needed.dedup();
    let ranks: BTreeMap<(usize, usize), usize> = ranks_needed
        .par_iter()
        .map(|&(i, k)| {
            let r = if i == 0 || i > n { 0 } else { koszul_differential(a, i, k)?.rank() };
            Ok(((i, k), r))
        })
        .collect::<Result<_>>()?;
    let mut table = BettiTable::default();
    for i in 0..=max_i {
        for j in i..=max_j {
            let k = j - i;
            let total = binomial(n, i) * a.dim(k)?;
            let out = ranks[&(i, k)];
            let inc = if k > 0 && i < n { ranks[&(i + 1, k - 1)] } else { 0 };
            let b = total
                .checked_sub(out + inc)
                .ok_or_else(|| Error::BettiShape(format!("negative homology at ({i}, {j})")))?;
            table.set(i, j, b);
        }
    }
    Ok(table)
}

/// The smallest window that captures every Betti number of `A`, when `A`
/// vanishes above its top degree: `i <= n`, `j <= top + n`.
pub fn full_betti<F: Field>(a: &GradedQuotient<F>) -> Result<BettiTable> {
    if !a.vanishes_above() {
        return Err(Error::Precondition("the algebra is not finite dimensional; give an explicit window".into()));
    }
    graded_betti(a, a.num_vars(), a.top() + a.num_vars())
}
