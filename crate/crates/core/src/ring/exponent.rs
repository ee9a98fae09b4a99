//! Integer exponents that stay in `i128` until they overflow.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone, Debug)]
pub enum Exponent {
    Small(i128),
    Big(BigInt),
}

impl Exponent {
    pub fn zero() -> Self {
        Exponent::Small(0)
    }

    pub fn from_big(b: BigInt) -> Self {
        match b.to_i128() {
            Some(v) => Exponent::Small(v),
            None => Exponent::Big(b),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Exponent::Small(v) => BigInt::from(*v),
            Exponent::Big(b) => b.clone(),
        }
    }

    pub fn to_i128(&self) -> Option<i128> {
        match self {
            Exponent::Small(v) => Some(*v),
            Exponent::Big(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Exponent::Small(0))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Exponent::Small(v) => *v < 0,
            Exponent::Big(b) => b.is_negative(),
        }
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && !self.is_negative()
    }

    pub fn is_even(&self) -> bool {
        match self {
            Exponent::Small(v) => v % 2 == 0,
            Exponent::Big(b) => (b % 2u32).is_zero(),
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        s.trim().parse::<BigInt>().ok().map(Self::from_big)
    }
}

impl Default for Exponent {
    fn default() -> Self {
        Exponent::zero()
    }
}

impl From<i128> for Exponent {
    fn from(v: i128) -> Self {
        Exponent::Small(v)
    }
}

impl From<i64> for Exponent {
    fn from(v: i64) -> Self {
        Exponent::Small(v as i128)
    }
}

impl From<BigInt> for Exponent {
    fn from(b: BigInt) -> Self {
        Exponent::from_big(b)
    }
}

impl PartialEq for Exponent {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Exponent {}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Exponent::Small(a), Exponent::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl std::hash::Hash for Exponent {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.to_big().hash(state)
    }
}

impl Add for &Exponent {
    type Output = Exponent;
    fn add(self, rhs: &Exponent) -> Exponent {
        if let (Exponent::Small(a), Exponent::Small(b)) = (self, rhs) {
            if let Some(v) = a.checked_add(*b) {
                return Exponent::Small(v);
            }
        }
        Exponent::from_big(self.to_big() + rhs.to_big())
    }
}

impl Sub for &Exponent {
    type Output = Exponent;
    fn sub(self, rhs: &Exponent) -> Exponent {
        if let (Exponent::Small(a), Exponent::Small(b)) = (self, rhs) {
            if let Some(v) = a.checked_sub(*b) {
                return Exponent::Small(v);
            }
        }
        Exponent::from_big(self.to_big() - rhs.to_big())
    }
}

impl Mul for &Exponent {
    type Output = Exponent;
    fn mul(self, rhs: &Exponent) -> Exponent {
        if let (Exponent::Small(a), Exponent::Small(b)) = (self, rhs) {
            if let Some(v) = a.checked_mul(*b) {
                return Exponent::Small(v);
            }
        }
        Exponent::from_big(self.to_big() * rhs.to_big())
    }
}

impl Neg for &Exponent {
    type Output = Exponent;
    fn neg(self) -> Exponent {
        match self {
            Exponent::Small(v) => match v.checked_neg() {
                Some(n) => Exponent::Small(n),
                None => Exponent::from_big(-BigInt::from(*v)),
            },
            Exponent::Big(b) => Exponent::from_big(-b),
        }
    }
}

impl AddAssign<&Exponent> for Exponent {
    fn add_assign(&mut self, rhs: &Exponent) {
        if let (Exponent::Small(a), Exponent::Small(b)) = (&mut *self, rhs) {
            if let Some(v) = a.checked_add(*b) {
                *a = v;
                return;
            }
        }
        *self = &*self + rhs;
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Small(v) => write!(f, "{v}"),
            Exponent::Big(b) => write!(f, "{b}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn promotes_on_overflow() {
        let a = Exponent::Small(i128::MAX);
        let b = &a + &Exponent::Small(1);
        assert!(matches!(b, Exponent::Big(_)));
        assert_eq!(b.to_big(), BigInt::from(i128::MAX) + 1);
        let back = &b - &Exponent::Small(1);
        assert!(matches!(back, Exponent::Small(_)));
        assert_eq!(back, a);
    }

    #[test]
    fn multiplication_and_order() {
        let big = &Exponent::Small(i128::MAX / 2) * &Exponent::Small(10);
        assert!(big > Exponent::Small(i128::MAX));
        assert!(Exponent::Small(-3).is_negative());
        assert_eq!(Exponent::parse("12").unwrap(), Exponent::Small(12));
        assert_eq!(big.to_string(), (BigInt::from(i128::MAX / 2) * BigInt::from(10)).to_string());
    }
}
