use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::Rng;
use serde_json::Value;

use super::{mod_pow, Field, FieldDesc};
use crate::error::{Error, Result};

/// Element of the prime field `F_p`, `p < 2^31`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp {
    v: u64,
    p: u64,
}

impl Fp {
    pub fn new(v: i64, p: u64) -> Self {
        Fp { v: v.rem_euclid(p as i64) as u64, p }
    }

    pub fn value(&self) -> u64 {
        self.v
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Representative in `(-p/2, p/2]`.
    pub fn symmetric(&self) -> i64 {
        if self.v > self.p / 2 {
            self.v as i64 - self.p as i64
        } else {
            self.v as i64
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.p, other.p, "mixed F_p moduli");
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symmetric())
    }
}

impl Field for Fp {
    type Ctx = u64;

    fn ctx(&self) -> u64 {
        self.p
    }

    fn descriptor(p: &u64) -> FieldDesc {
        FieldDesc::Prime(*p)
    }

    fn characteristic(p: &u64) -> u64 {
        *p
    }

    fn order(p: &u64) -> Option<u64> {
        Some(*p)
    }

    fn zero(p: &u64) -> Self {
        Fp { v: 0, p: *p }
    }

    fn one(p: &u64) -> Self {
        Fp { v: 1 % *p, p: *p }
    }

    fn from_i64(p: &u64, n: i64) -> Self {
        Fp::new(n, *p)
    }

    fn from_bigint(p: &u64, n: &BigInt) -> Self {
        let r = n.mod_floor(&BigInt::from(*p));
        Fp { v: r.to_u64().expect("reduced residue fits"), p: *p }
    }

    fn from_ratio(p: &u64, r: &BigRational) -> Result<Self> {
        let d = Self::from_bigint(p, r.denom());
        if d.is_zero() {
            return Err(Error::DenominatorDivisibleByP { denominator: r.denom().to_string(), p: *p });
        }
        Ok(Self::from_bigint(p, r.numer()).mul(&d.inv().expect("nonzero")))
    }

    fn is_zero(&self) -> bool {
        self.v == 0
    }

    fn is_one(&self) -> bool {
        self.v == 1
    }

    fn add(&self, o: &Self) -> Self {
        self.check(o);
        let s = self.v + o.v;
        Fp { v: if s >= self.p { s - self.p } else { s }, p: self.p }
    }

    fn sub(&self, o: &Self) -> Self {
        self.check(o);
        Fp { v: if self.v >= o.v { self.v - o.v } else { self.v + self.p - o.v }, p: self.p }
    }

    fn mul(&self, o: &Self) -> Self {
        self.check(o);
        Fp { v: self.v * o.v % self.p, p: self.p }
    }

    fn neg(&self) -> Self {
        Fp { v: if self.v == 0 { 0 } else { self.p - self.v }, p: self.p }
    }

    fn inv(&self) -> Option<Self> {
        if self.v == 0 {
            None
        } else {
            Some(Fp { v: mod_pow(self.v, self.p - 2, self.p), p: self.p })
        }
    }

    fn is_negative_repr(&self) -> bool {
        self.symmetric() < 0
    }

    fn random<R: Rng + ?Sized>(p: &u64, rng: &mut R) -> Self {
        Fp { v: rng.gen_range(0..*p), p: *p }
    }

    fn elements(p: &u64) -> Option<Vec<Self>> {
        Some((0..*p).map(|v| Fp { v, p: *p }).collect())
    }

    fn to_json(&self) -> Value {
        Value::from(self.v)
    }

    fn from_json(p: &u64, v: &Value) -> Result<Self> {
        match v {
            Value::Number(n) => n
                .as_i64()
                .map(|i| Fp::new(i, *p))
                .ok_or_else(|| Error::Serialization(format!("expected an integer, got {v}"))),
            Value::String(s) => {
                let r = super::rational::parse_ratio(s)
                    .ok_or_else(|| Error::Serialization(format!("expected an integer, got {v}")))?;
                Self::from_ratio(p, &r)
            }
            _ => Err(Error::Serialization(format!("expected an integer, got {v}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_inverse_of_two_mod_five() {
        let r = BigRational::new(BigInt::from(7), BigInt::from(2));
        assert_eq!(Fp::from_ratio(&5, &r).unwrap(), Fp::new(1, 5));
        let bad = BigRational::new(BigInt::from(1), BigInt::from(10));
        assert!(matches!(Fp::from_ratio(&5, &bad), Err(Error::DenominatorDivisibleByP { p: 5, .. })));
    }

    #[test]
    fn field_axioms_small() {
        let p = 13;
        for a in Fp::elements(&p).unwrap() {
            if !a.is_zero() {
                assert!(a.mul(&a.inv().unwrap()).is_one());
            }
            assert!(a.add(&a.neg()).is_zero());
        }
        assert_eq!(Fp::new(-2, 5).to_string(), "-2");
        assert_eq!(Fp::new(2, 5).to_string(), "2");
    }
}
