use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use serde_json::Value;

use super::{mod_pow, Field, FieldDesc, Fp};
use crate::error::{Error, Result};

/// `F_{p^2} = F_p[w]/(w^2 - r)` with `r` the least quadratic non-residue mod `p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp2Ctx {
    p: u64,
    nonresidue: u64,
}

impl Fp2Ctx {
    /// `p` must be an odd prime below `2^31`.
    pub fn new(p: u64) -> Self {
        assert!(p > 2 && super::is_prime(p), "F_p^2 needs an odd prime, got {p}");
        let nonresidue = (2..p).find(|&r| mod_pow(r, (p - 1) / 2, p) == p - 1).expect("odd prime has a non-residue");
        Fp2Ctx { p, nonresidue }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn nonresidue(&self) -> u64 {
        self.nonresidue
    }
}

/// Element `a + b*w` of `F_{p^2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp2 {
    a: u64,
    b: u64,
    ctx: Fp2Ctx,
}

impl Fp2 {
    pub fn new(ctx: &Fp2Ctx, a: i64, b: i64) -> Self {
        let p = ctx.p as i64;
        Fp2 { a: a.rem_euclid(p) as u64, b: b.rem_euclid(p) as u64, ctx: *ctx }
    }

    pub fn from_base(ctx: &Fp2Ctx, x: &Fp) -> Self {
        assert_eq!(x.modulus(), ctx.p, "base field modulus differs");
        Fp2 { a: x.value(), b: 0, ctx: *ctx }
    }

    /// The generator `w`.
    pub fn generator(ctx: &Fp2Ctx) -> Self {
        Fp2 { a: 0, b: 1, ctx: *ctx }
    }

    /// Returns the element as an `F_p` element when it lies in the prime field.
    pub fn in_base(&self) -> Option<Fp> {
        (self.b == 0).then(|| Fp::new(self.a as i64, self.ctx.p))
    }

    /// Frobenius image `x^p`.
    pub fn conjugate(&self) -> Self {
        Fp2 { a: self.a, b: (self.ctx.p - self.b) % self.ctx.p, ctx: self.ctx }
    }

    pub fn parts(&self) -> (u64, u64) {
        (self.a, self.b)
    }

    fn sym(&self, v: u64) -> i64 {
        if v > self.ctx.p / 2 {
            v as i64 - self.ctx.p as i64
        } else {
            v as i64
        }
    }

    fn check(&self, o: &Self) {
        assert_eq!(self.ctx, o.ctx, "mixed F_p^2 contexts");
    }
}

impl fmt::Display for Fp2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = (self.sym(self.a), self.sym(self.b));
        if b == 0 {
            return write!(f, "{a}");
        }
        write!(f, "(")?;
        if a != 0 {
            write!(f, "{a}")?;
            if b > 0 {
                write!(f, "+")?;
            }
        }
        match b {
            1 => write!(f, "w")?,
            -1 => write!(f, "-w")?,
            _ => write!(f, "{b}*w")?,
        }
        write!(f, ")")
    }
}

impl Field for Fp2 {
    type Ctx = Fp2Ctx;

    fn ctx(&self) -> Fp2Ctx {
        self.ctx
    }

    fn descriptor(ctx: &Fp2Ctx) -> FieldDesc {
        FieldDesc::PrimeSquare(ctx.p)
    }

    fn characteristic(ctx: &Fp2Ctx) -> u64 {
        ctx.p
    }

    fn order(ctx: &Fp2Ctx) -> Option<u64> {
        Some(ctx.p * ctx.p)
    }

    fn zero(ctx: &Fp2Ctx) -> Self {
        Fp2 { a: 0, b: 0, ctx: *ctx }
    }

    fn one(ctx: &Fp2Ctx) -> Self {
        Fp2 { a: 1, b: 0, ctx: *ctx }
    }

    fn from_i64(ctx: &Fp2Ctx, n: i64) -> Self {
        Fp2::new(ctx, n, 0)
    }

    fn from_bigint(ctx: &Fp2Ctx, n: &BigInt) -> Self {
        Fp2::from_base(ctx, &Fp::from_bigint(&ctx.p, n))
    }

    fn from_ratio(ctx: &Fp2Ctx, r: &BigRational) -> Result<Self> {
        Ok(Fp2::from_base(ctx, &Fp::from_ratio(&ctx.p, r)?))
    }

    fn from_ext_pair(ctx: &Fp2Ctx, a: &BigRational, b: &BigRational) -> Result<Self> {
        let a = Fp::from_ratio(&ctx.p, a)?;
        let b = Fp::from_ratio(&ctx.p, b)?;
        Ok(Fp2 { a: a.value(), b: b.value(), ctx: *ctx })
    }

    fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    fn is_one(&self) -> bool {
        self.a == 1 && self.b == 0
    }

    fn add(&self, o: &Self) -> Self {
        self.check(o);
        let p = self.ctx.p;
        Fp2 { a: (self.a + o.a) % p, b: (self.b + o.b) % p, ctx: self.ctx }
    }

    fn sub(&self, o: &Self) -> Self {
        self.check(o);
        let p = self.ctx.p;
        Fp2 { a: (self.a + p - o.a) % p, b: (self.b + p - o.b) % p, ctx: self.ctx }
    }

    fn mul(&self, o: &Self) -> Self {
        self.check(o);
        let p = self.ctx.p;
        let bb = self.b * o.b % p;
        let a = (self.a * o.a + bb * self.ctx.nonresidue) % p;
        let b = (self.a * o.b + self.b * o.a) % p;
        Fp2 { a, b, ctx: self.ctx }
    }

    fn neg(&self) -> Self {
        let p = self.ctx.p;
        Fp2 { a: (p - self.a) % p, b: (p - self.b) % p, ctx: self.ctx }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // (a + bw)^-1 = (a - bw) / (a^2 - r b^2)
        let p = self.ctx.p;
        let norm = (self.a * self.a % p + p - self.b * self.b % p * self.ctx.nonresidue % p) % p;
        let ninv = mod_pow(norm, p - 2, p);
        Some(Fp2 { a: self.a * ninv % p, b: (p - self.b) % p * ninv % p, ctx: self.ctx })
    }

    fn is_negative_repr(&self) -> bool {
        self.b == 0 && self.sym(self.a) < 0
    }

    fn random<R: Rng + ?Sized>(ctx: &Fp2Ctx, rng: &mut R) -> Self {
        Fp2 { a: rng.gen_range(0..ctx.p), b: rng.gen_range(0..ctx.p), ctx: *ctx }
    }

    fn elements(ctx: &Fp2Ctx) -> Option<Vec<Self>> {
        let p = ctx.p;
        Some((0..p).flat_map(|b| (0..p).map(move |a| Fp2 { a, b, ctx: *ctx })).collect())
    }

    fn to_json(&self) -> Value {
        Value::from(vec![self.a, self.b])
    }

    fn from_json(ctx: &Fp2Ctx, v: &Value) -> Result<Self> {
        let bad = || Error::Serialization(format!("expected an integer or [a, b], got {v}"));
        match v {
            Value::Number(n) => n.as_i64().map(|i| Fp2::new(ctx, i, 0)).ok_or_else(bad),
            Value::Array(xs) if xs.len() == 2 => {
                let a = xs[0].as_i64().ok_or_else(bad)?;
                let b = xs[1].as_i64().ok_or_else(bad)?;
                Ok(Fp2::new(ctx, a, b))
            }
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_nonzero_element_is_invertible() {
        let ctx = Fp2Ctx::new(5);
        assert_eq!(ctx.nonresidue(), 2);
        let els = Fp2::elements(&ctx).unwrap();
        assert_eq!(els.len(), 25);
        for x in &els {
            if !x.is_zero() {
                assert!(x.mul(&x.inv().unwrap()).is_one());
            }
            assert_eq!(x.pow(5), x.conjugate());
        }
    }

    #[test]
    fn display() {
        let ctx = Fp2Ctx::new(7);
        assert_eq!(Fp2::new(&ctx, 1, 2).to_string(), "(1+2*w)");
        assert_eq!(Fp2::new(&ctx, 0, -1).to_string(), "(-w)");
        assert_eq!(Fp2::new(&ctx, 3, 0).to_string(), "3");
    }
}
