//! Exact rational scalars.
//!
//! Every algebraic verification in this crate runs over the rationals, so
//! axiom checks are exact and tolerance-free. Conversion to `f64` is explicit
//! and one-way; only the numeric loop machinery uses floats.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An exact rational number, serialized as `"p/q"` (or `"p"` when q = 1).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// `numer / denom`; panics on a zero denominator.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Scalar(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// Sign as -1, 0, or 1.
    pub fn signum(&self) -> i32 {
        if self.0.is_zero() {
            0
        } else if self.0.is_negative() {
            -1
        } else {
            1
        }
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        Scalar(self.0.recip())
    }

    /// Lossy conversion for the numeric loop modules.
    pub fn to_f64(&self) -> f64 {
        self.0
            .numer()
            .to_f64()
            .and_then(|n| self.0.denom().to_f64().map(|d| n / d))
            .unwrap_or(f64::NAN)
    }

    /// Squarefree part of the numerator times denominator sign structure:
    /// the canonical representative of this value's square class.
    ///
    /// `x` and `y` lie in the same square class iff `x/y` is a square of a
    /// rational; the representative returned is a squarefree integer.
    pub fn square_class(&self) -> Option<i64> {
        if self.is_zero() {
            return Some(0);
        }
        // x = n/d ~ n*d modulo squares.
        let nd = self.0.numer() * self.0.denom();
        let mut n = nd.to_i64()?;
        let mut rep: i64 = if n < 0 { -1 } else { 1 };
        n = n.abs();
        let mut p: i64 = 2;
        while p * p <= n {
            let mut k = 0u32;
            while n % p == 0 {
                n /= p;
                k += 1;
            }
            if k % 2 == 1 {
                rep = rep.checked_mul(p)?;
            }
            p += 1;
        }
        rep.checked_mul(n)
    }

    /// Exact rational square root, if one exists.
    pub fn sqrt_exact(&self) -> Option<Scalar> {
        if self.is_negative() {
            return None;
        }
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        let ns = self.0.numer().sqrt();
        let ds = self.0.denom().sqrt();
        if &(&ns * &ns) == self.0.numer() && &(&ds * &ds) == self.0.denom() {
            Some(Scalar(BigRational::new(ns, ds)))
        } else {
            None
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Error parsing a rational from text.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?} (expected \"p\" or \"p/q\")")]
pub struct ParseScalarError(pub String);

impl FromStr for Scalar {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ParseScalarError(s.to_string());
        match s.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                let q: BigInt = q.trim().parse().map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar(BigRational::new(p, q)))
            }
            None => {
                let p: BigInt = s.parse().map_err(|_| bad())?;
                Ok(Scalar(BigRational::from_integer(p)))
            }
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((&self.0).$method(rhs.0))
            }
        }
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        self.0 *= &rhs.0;
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

/// Shorthand for `Scalar::from_int`.
pub fn qi(n: i64) -> Scalar {
    Scalar::from_int(n)
}

/// Shorthand for `Scalar::ratio`.
pub fn qr(numer: i64, denom: i64) -> Scalar {
    Scalar::ratio(numer, denom)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["0", "5", "-3", "2/3", "-7/4"] {
            let v: Scalar = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert_eq!("4/6".parse::<Scalar>().unwrap(), qr(2, 3));
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("x".parse::<Scalar>().is_err());
    }

    #[test]
    fn square_class_representatives() {
        assert_eq!(qr(4, 9).square_class(), Some(1));
        assert_eq!(qi(18).square_class(), Some(2));
        assert_eq!(qr(-1, 2).square_class(), Some(-2));
        assert_eq!(qi(0).square_class(), Some(0));
    }

    #[test]
    fn sqrt_exact_only_on_squares() {
        assert_eq!(qr(9, 4).sqrt_exact(), Some(qr(3, 2)));
        assert_eq!(qi(2).sqrt_exact(), None);
        assert_eq!(qi(-4).sqrt_exact(), None);
    }
}
