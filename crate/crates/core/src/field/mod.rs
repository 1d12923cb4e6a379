//! Exact scalar fields: the rationals, prime fields `F_p` and quadratic
//! extensions `F_{p^2}`.
//!
//! Every element carries enough of its field to do arithmetic on its own
//! (`F_p` elements store `p`). Containers store the field context once and
//! check it on every binary operation, so scalars from different fields are
//! never combined silently.

mod prime;
mod quadratic;
mod rational;

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::matrix::Matrix;

pub use prime::Fp;
pub use quadratic::{Fp2, Fp2Ctx};
pub use rational::Q;

/// Runtime name of a field, used in reports and on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldDesc {
    Rational,
    Prime(u64),
    PrimeSquare(u64),
}

impl fmt::Display for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDesc::Rational => write!(f, "q"),
            FieldDesc::Prime(p) => write!(f, "fp:{p}"),
            FieldDesc::PrimeSquare(p) => write!(f, "fp2:{p}"),
        }
    }
}

impl FromStr for FieldDesc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "q" || s == "Q" {
            return Ok(FieldDesc::Rational);
        }
        let parse_p = |t: &str| -> Result<u64> {
            let p: u64 = t.parse().map_err(|_| Error::UnknownField(s.to_string()))?;
            if !is_prime(p) || p >= 1 << 31 {
                return Err(Error::UnknownField(s.to_string()));
            }
            Ok(p)
        };
        if let Some(t) = s.strip_prefix("fp2:") {
            let p = parse_p(t)?;
            if p == 2 {
                return Err(Error::UnknownField(s.to_string()));
            }
            return Ok(FieldDesc::PrimeSquare(p));
        }
        if let Some(t) = s.strip_prefix("fp:") {
            return Ok(FieldDesc::Prime(parse_p(t)?));
        }
        Err(Error::UnknownField(s.to_string()))
    }
}

/// An exact field. Implemented by [`Q`], [`Fp`] and [`Fp2`].
pub trait Field: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Data identifying the field (unit for `Q`, the modulus for `F_p`, ...).
    type Ctx: Clone + PartialEq + Eq + fmt::Debug + Send + Sync + 'static;

    fn ctx(&self) -> Self::Ctx;
    fn descriptor(ctx: &Self::Ctx) -> FieldDesc;
    /// 0 for the rationals.
    fn characteristic(ctx: &Self::Ctx) -> u64;
    /// Number of elements, `None` when infinite.
    fn order(ctx: &Self::Ctx) -> Option<u64>;

    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_i64(ctx: &Self::Ctx, n: i64) -> Self;
    fn from_bigint(ctx: &Self::Ctx, n: &BigInt) -> Self;
    /// Image of a rational number; fails when the denominator vanishes in the field.
    fn from_ratio(ctx: &Self::Ctx, r: &BigRational) -> Result<Self>;
    /// `a + b*w`, where `w` is the generator of a quadratic extension.
    /// Fields without such a generator accept only `b = 0`.
    fn from_ext_pair(ctx: &Self::Ctx, a: &BigRational, b: &BigRational) -> Result<Self> {
        if num_traits::Zero::is_zero(b) {
            Self::from_ratio(ctx, a)
        } else {
            Err(Error::Parse {
                pos: 0,
                msg: format!("field {} has no extension generator w", Self::descriptor(ctx)),
            })
        }
    }

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ctx());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Whether the printed form of this element starts with a minus sign.
    fn is_negative_repr(&self) -> bool {
        false
    }

    /// A random element. Rationals are drawn as small integers.
    fn random<R: Rng + ?Sized>(ctx: &Self::Ctx, rng: &mut R) -> Self;

    /// All elements, for finite fields.
    fn elements(ctx: &Self::Ctx) -> Option<Vec<Self>>;

    fn to_json(&self) -> Value;
    fn from_json(ctx: &Self::Ctx, v: &Value) -> Result<Self>;

    /// Rank of a matrix over this field.
    fn rank_of(m: &Matrix<Self>) -> usize {
        m.rank_gaussian()
    }
}

/// Checks that two field contexts agree.
pub(crate) fn same_field<F: Field>(a: &F::Ctx, b: &F::Ctx) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::FieldMismatch { left: F::descriptor(a), right: F::descriptor(b) })
    }
}

/// Trial-division primality test; moduli here are below `2^31`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Draws a prime uniformly-ish from `[lo, hi)` by rejection.
pub fn random_prime<R: Rng + ?Sized>(rng: &mut R, lo: u64, hi: u64) -> u64 {
    loop {
        let c = rng.gen_range(lo..hi) | 1;
        if is_prime(c) {
            return c;
        }
    }
}

pub(crate) fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Converts an exact element to another field through its rational value.
/// Only defined for rationals; kept here so generic code can reduce forms.
pub fn rational_to<F: Field>(ctx: &F::Ctx, q: &Q) -> Result<F> {
    F::from_ratio(ctx, q.as_ratio())
}
