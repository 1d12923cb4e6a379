use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde_json::Value;

use super::Field;
use crate::error::{Error, Result};
use crate::matrix::{bareiss_rank, Matrix};

/// Arbitrary-precision rational number.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Q(BigRational);

impl Q {
    pub fn new(r: BigRational) -> Self {
        Q(r)
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Q(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn into_ratio(self) -> BigRational {
        self.0
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Field for Q {
    type Ctx = ();

    fn ctx(&self) {}

    fn descriptor(_: &()) -> super::FieldDesc {
        super::FieldDesc::Rational
    }

    fn characteristic(_: &()) -> u64 {
        0
    }

    fn order(_: &()) -> Option<u64> {
        None
    }

    fn zero(_: &()) -> Self {
        Q(BigRational::zero())
    }

    fn one(_: &()) -> Self {
        Q(BigRational::one())
    }

    fn from_i64(_: &(), n: i64) -> Self {
        Q(BigRational::from_integer(BigInt::from(n)))
    }

    fn from_bigint(_: &(), n: &BigInt) -> Self {
        Q(BigRational::from_integer(n.clone()))
    }

    fn from_ratio(_: &(), r: &BigRational) -> Result<Self> {
        Ok(Q(r.clone()))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn add(&self, other: &Self) -> Self {
        Q(&self.0 + &other.0)
    }

    fn sub(&self, other: &Self) -> Self {
        Q(&self.0 - &other.0)
    }

    fn mul(&self, other: &Self) -> Self {
        Q(&self.0 * &other.0)
    }

    fn neg(&self) -> Self {
        Q(-&self.0)
    }

    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Q(self.0.recip()))
        }
    }

    fn is_negative_repr(&self) -> bool {
        self.0.is_negative()
    }

    fn random<R: Rng + ?Sized>(_: &(), rng: &mut R) -> Self {
        Q::from_i64(&(), rng.gen_range(-20..=20))
    }

    fn elements(_: &()) -> Option<Vec<Self>> {
        None
    }

    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_json(_: &(), v: &Value) -> Result<Self> {
        let bad = || Error::Serialization(format!("expected a rational, got {v}"));
        match v {
            Value::String(s) => parse_ratio(s).map(Q).ok_or_else(bad),
            Value::Number(n) => n.as_i64().map(|i| Q::from_i64(&(), i)).ok_or_else(bad),
            _ => Err(bad()),
        }
    }

    fn rank_of(m: &Matrix<Self>) -> usize {
        // clear denominators row by row, then eliminate fraction-free
        let rows: Vec<Vec<BigInt>> = (0..m.rows())
            .map(|r| {
                let row = m.row(r);
                let lcm = row
                    .iter()
                    .fold(BigInt::one(), |acc, x| num_integer::lcm(acc, x.0.denom().clone()));
                row.iter().map(|x| x.0.numer() * (&lcm / x.0.denom())).collect()
            })
            .collect();
        bareiss_rank(rows, m.cols())
    }
}

pub(crate) fn parse_ratio(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_is_exact() {
        let a = Q::from_frac(1, 3);
        let b = Q::from_frac(1, 6);
        assert_eq!(a.add(&b), Q::from_frac(1, 2));
        assert_eq!(a.mul(&b).inv().unwrap(), Q::from_i64(&(), 18));
        assert!(Q::zero(&()).inv().is_none());
        assert_eq!(Q::from_frac(-7, 2).to_string(), "-7/2");
    }

    #[test]
    fn json() {
        let a = Q::from_frac(-3, 4);
        assert_eq!(Q::from_json(&(), &a.to_json()).unwrap(), a);
        assert!(Q::from_json(&(), &Value::String("1/0".into())).is_err());
    }
}
