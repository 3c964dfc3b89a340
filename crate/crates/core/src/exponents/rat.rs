//! Exact big-rational scalar, always in lowest terms with positive
//! denominator (`num_rational::BigRational` maintains both).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RatError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse rational from `{0}`")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
}

impl Rat {
    pub fn new(num: i64, den: i64) -> Result<Rat, RatError> {
        if den == 0 {
            return Err(RatError::ZeroDenominator);
        }
        Ok(Rat(BigRational::new(BigInt::from(num), BigInt::from(den))))
    }

    /// `num/den` for literals known to be well-formed.
    pub fn frac(num: i64, den: i64) -> Rat {
        Rat::new(num, den).expect("nonzero denominator")
    }

    pub fn int(n: i64) -> Rat {
        Rat(BigRational::from(BigInt::from(n)))
    }

    pub fn zero() -> Rat {
        Rat::int(0)
    }

    pub fn one() -> Rat {
        Rat::int(1)
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Result<Rat, RatError> {
        if self.is_zero() {
            return Err(RatError::DivisionByZero);
        }
        Ok(Rat(self.0.recip()))
    }

    pub fn pow_i32(&self, e: i32) -> Result<Rat, RatError> {
        if e < 0 && self.is_zero() {
            return Err(RatError::DivisionByZero);
        }
        Ok(Rat(self.0.pow(e)))
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn checked_div(&self, rhs: &Rat) -> Result<Rat, RatError> {
        if rhs.is_zero() {
            return Err(RatError::DivisionByZero);
        }
        Ok(Rat(&self.0 / &rhs.0))
    }

    pub fn min(self, other: Rat) -> Rat {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Rat) -> Rat {
        if self >= other {
            self
        } else {
            other
        }
    }

    pub fn cmp_rat(&self, other: &Rat) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl FromStr for Rat {
    type Err = RatError;

    /// Parses `p`, `p/q`, or `-p/q` in base 10 (arbitrary precision).
    fn from_str(s: &str) -> Result<Rat, RatError> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n = BigInt::from_str(num).map_err(|_| RatError::Parse(s.to_string()))?;
        let d = BigInt::from_str(den).map_err(|_| RatError::Parse(s.to_string()))?;
        if d.is_zero() {
            return Err(RatError::ZeroDenominator);
        }
        Ok(Rat(BigRational::new(n, d)))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl serde::Serialize for Rat {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(&self.0 $op &rhs.0)
            }
        }
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0 $op rhs.0)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl Div for &Rat {
    type Output = Rat;
    /// Panics on a zero divisor; use [`Rat::checked_div`] where the divisor
    /// is data-dependent.
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "division by zero");
        Rat(&self.0 / &rhs.0)
    }
}

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        (&self).div(&rhs)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use num_traits::{One, Signed};

    fn canonical(r: &Rat) -> bool {
        r.denominator().is_positive()
            && r.numerator().gcd(r.denominator()).is_one()
    }

    #[test]
    fn construction_reduces() {
        let r = Rat::new(75789 * 2, 241304 * 2).unwrap();
        assert_eq!(r, Rat::frac(10827, 34472));
        assert!(canonical(&r));
        assert_eq!(r.to_string(), "10827/34472");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(Rat::new(1, 0), Err(RatError::ZeroDenominator));
        assert_eq!("3/0".parse::<Rat>(), Err(RatError::ZeroDenominator));
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["5", "-7/3", "1515/4816", "0"] {
            let r: Rat = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert!("a/b".parse::<Rat>().is_err());
    }

    #[test]
    fn negative_denominator_normalizes() {
        assert_eq!(Rat::new(1, -2).unwrap(), Rat::frac(-1, 2));
        assert!(canonical(&Rat::new(4, -6).unwrap()));
    }
}
