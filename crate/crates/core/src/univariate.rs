//! Dense univariate polynomials over a field, enough for restrictions of
//! forms and determinants to lines.

use crate::error::{Error, Result};
use crate::field::Field;

/// `c[0] + c[1] s + ...`, without trailing zeros; the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly<F: Field> {
    ctx: F::Ctx,
    coeffs: Vec<F>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(ctx: &F::Ctx, mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(F::is_zero) {
            coeffs.pop();
        }
        UniPoly { ctx: ctx.clone(), coeffs }
    }

    pub fn zero(ctx: &F::Ctx) -> Self {
        Self::new(ctx, vec![])
    }

    pub fn one(ctx: &F::Ctx) -> Self {
        Self::new(ctx, vec![F::one(ctx)])
    }

    /// `s - a`.
    pub fn linear_root(ctx: &F::Ctx, a: &F) -> Self {
        Self::new(ctx, vec![a.neg(), F::one(ctx)])
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn eval(&self, s: &F) -> F {
        self.coeffs.iter().rev().fold(F::zero(&self.ctx), |acc, c| acc.mul(s).add(c))
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = F::zero(&self.ctx);
        let c = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&z).add(o.coeffs.get(i).unwrap_or(&z)))
            .collect();
        Self::new(&self.ctx, c)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&F::one(&self.ctx).neg()))
    }

    pub fn scale(&self, a: &F) -> Self {
        Self::new(&self.ctx, self.coeffs.iter().map(|c| c.mul(a)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(&self.ctx);
        }
        let mut c = vec![F::zero(&self.ctx); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] = c[i + j].add(&a.mul(b));
            }
        }
        Self::new(&self.ctx, c)
    }

    /// Quotient and remainder; `None` when dividing by zero.
    pub fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        let dl = d.leading()?.inv()?;
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Some((Self::zero(&self.ctx), self.clone()));
        }
        let mut q = vec![F::zero(&self.ctx); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].mul(&dl);
            if !c.is_zero() {
                for (j, b) in d.coeffs.iter().enumerate() {
                    r[k + j] = r[k + j].sub(&c.mul(b));
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        Some((Self::new(&self.ctx, q), Self::new(&self.ctx, r)))
    }

    /// Monic associate; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading().and_then(F::inv) {
            Some(i) => self.scale(&i),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor, with `gcd(0, 0) = 0`.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("b is nonzero").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&F::from_i64(&self.ctx, i as i64)))
            .collect();
        Self::new(&self.ctx, c)
    }

    /// The monic product of the distinct irreducible factors.
    ///
    /// Needs `F` to be perfect: either characteristic zero, or finite so that
    /// `p`-th roots of coefficients exist.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Precondition("the zero polynomial has no squarefree part".into()));
        }
        if self.degree() == Some(0) {
            return Ok(Self::one(&self.ctx));
        }
        let d = self.derivative();
        if d.is_zero() {
            return self.pth_root()?.squarefree_part();
        }
        let g = self.gcd(&d);
        let w = self.div_rem(&g).expect("gcd is nonzero").0;
        // strip from g every factor also found in w; what is left is a p-th power
        let mut rest = g;
        loop {
            let common = w.gcd(&rest);
            if common.degree() == Some(0) {
                break;
            }
            rest = rest.div_rem(&common).expect("nonzero").0;
        }
        let tail = if rest.degree() == Some(0) { Self::one(&self.ctx) } else { rest.pth_root()?.squarefree_part()? };
        Ok(w.mul(&tail).monic())
    }

    /// `h` with `h^p = self`, for a polynomial in `s^p` over a finite field.
    fn pth_root(&self) -> Result<Self> {
        let p = F::characteristic(&self.ctx) as usize;
        let q = F::order(&self.ctx)
            .ok_or_else(|| Error::Precondition("p-th roots need a finite field".into()))?;
        let c = (0..self.coeffs.len())
            .step_by(p)
            .map(|i| self.coeffs[i].pow(q / p as u64))
            .collect();
        Ok(Self::new(&self.ctx, c))
    }

    /// The polynomial of degree `< points.len()` through `(s_i, v_i)`.
    pub fn interpolate(ctx: &F::Ctx, points: &[(F, F)]) -> Result<Self> {
        // Newton divided differences
        let n = points.len();
        let mut dd: Vec<F> = points.iter().map(|(_, v)| v.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                let den = points[i].0.sub(&points[i - level].0);
                let inv = den.inv().ok_or_else(|| Error::Precondition("interpolation nodes repeat".into()))?;
                dd[i] = dd[i].sub(&dd[i - 1]).mul(&inv);
            }
        }
        let mut acc = Self::zero(ctx);
        for i in (0..n).rev() {
            acc = acc.mul(&Self::linear_root(ctx, &points[i].0)).add(&Self::new(ctx, vec![dd[i].clone()]));
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Fp2, Fp2Ctx, Q};

    fn fp(p: u64, c: &[i64]) -> UniPoly<Fp> {
        UniPoly::new(&p, c.iter().map(|&x| Fp::new(x, p)).collect())
    }

    #[test]
    fn division_and_gcd() {
        let a = fp(101, &[-1, 0, 1]);
        let b = fp(101, &[1, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q, fp(101, &[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&fp(101, &[2, 2])), b);
        assert_eq!(fp(101, &[0]).gcd(&fp(101, &[])), fp(101, &[]));
    }

    #[test]
    fn squarefree_in_small_characteristic() {
        // (s-1)^5 (s-2)^2 (s-3) over F_5
        let p = 5;
        let mut f = UniPoly::one(&p);
        for (r, m) in [(1, 5), (2, 2), (3, 1)] {
            for _ in 0..m {
                f = f.mul(&fp(p, &[-r, 1]));
            }
        }
        let want = fp(p, &[-1, 1]).mul(&fp(p, &[-2, 1])).mul(&fp(p, &[-3, 1]));
        assert_eq!(f.squarefree_part().unwrap(), want);
    }

    #[test]
    fn squarefree_over_fp2() {
        let ctx = Fp2Ctx::new(5);
        let g = Fp2::generator(&ctx);
        let l = UniPoly::linear_root(&ctx, &g);
        let f = l.mul(&l).mul(&l).mul(&l).mul(&l);
        assert_eq!(f.squarefree_part().unwrap(), l);
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let f = UniPoly::new(&(), vec![Q::from_frac(1, 2), Q::from_frac(-3, 1), Q::from_frac(0, 1), Q::from_frac(7, 5)]);
        let pts: Vec<(Q, Q)> = (0..5).map(|i| {
            let s = Q::from_frac(i, 1);
            let v = f.eval(&s);
            (s, v)
        }).collect();
        assert_eq!(UniPoly::interpolate(&(), &pts).unwrap(), f);
    }
}
