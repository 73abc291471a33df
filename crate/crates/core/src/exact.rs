//! Exact fractions serialized as `[numerator, denominator]` JSON number pairs.
//!
//! Numerators in wordlength patterns can exceed 64 bits, so both parts are
//! written as arbitrary-size JSON numbers.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: BigInt,
    den: BigInt,
}

impl Fraction {
    /// Reduced `num/den`; `den` must be positive.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        let (num, den) = (num.into(), den.into());
        assert!(den.is_positive(), "denominator must be positive");
        let g = num.gcd(&den);
        if g.is_zero() {
            return Fraction { num, den: BigInt::one() };
        }
        Fraction { num: &num / &g, den: &den / &g }
    }

    pub fn integer(v: impl Into<BigInt>) -> Self {
        Fraction { num: v.into(), den: BigInt::one() }
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Nearest `f64`, for display only.
    pub fn to_f64(&self) -> f64 {
        match (self.num.to_f64(), self.den.to_f64()) {
            (Some(a), Some(b)) => a / b,
            _ => f64::NAN,
        }
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

pub(crate) fn big_to_json(v: &BigInt) -> serde_json::Number {
    serde_json::Number::from_str(&v.to_string()).expect("decimal integers are valid JSON numbers")
}

pub(crate) fn json_to_big<E: serde::de::Error>(n: &serde_json::Number) -> Result<BigInt, E> {
    BigInt::from_str(&n.to_string()).map_err(|_| E::custom(format!("{n} is not an integer")))
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [big_to_json(&self.num), big_to_json(&self.den)].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Fraction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let [num, den] = <[serde_json::Number; 2]>::deserialize(deserializer)?;
        let (num, den) = (json_to_big::<D::Error>(&num)?, json_to_big::<D::Error>(&den)?);
        if !den.is_positive() {
            return Err(D::Error::custom("denominator must be positive"));
        }
        Ok(Fraction::new(num, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_orders() {
        let a = Fraction::new(6, 8);
        assert_eq!(a, Fraction::new(3, 4));
        assert_eq!(a.to_string(), "3/4");
        assert!(Fraction::new(1, 2) < Fraction::new(2, 3));
        assert_eq!(Fraction::new(0, 5), Fraction::integer(0));
        assert_eq!(Fraction::new(10, 5).to_string(), "2");
    }

    #[test]
    fn json_big_numbers() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let f = Fraction::new(big.clone(), 11);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, "[123456789012345678901234567890,11]");
        let back: Fraction = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<Fraction>("[1,0]").is_err());
        assert!(serde_json::from_str::<Fraction>("[1.5,2]").is_err());
    }
}
