//! Rational functions in the indeterminate δ.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::poly::Poly;
use crate::ring::rational::rat;

/// `num / den` in lowest terms with `den` monic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DeltaScalar {
    num: Poly,
    den: Poly,
}

impl DeltaScalar {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return DeltaScalar {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = Poly::gcd(&num, &den);
        let (mut n, mut d) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.div_rem(&g).expect("gcd nonzero").0,
                den.div_rem(&g).expect("gcd nonzero").0,
            )
        };
        let lead = d.leading();
        if !lead.is_one() {
            let inv = BigRational::one() / lead;
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        DeltaScalar { num: n, den: d }
    }

    pub fn from_poly(p: Poly) -> Self {
        DeltaScalar {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(rat(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The indeterminate δ.
    pub fn delta() -> Self {
        Self::from_poly(Poly::var())
    }

    /// `a*δ + b`.
    pub fn linear(a: BigRational, b: BigRational) -> Self {
        Self::from_poly(Poly::linear(a, b))
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        self.is_constant().then(|| self.num.constant_term())
    }

    pub fn evaluate(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole(x.clone()));
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn try_div(&self, rhs: &DeltaScalar) -> Result<DeltaScalar> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn inv(&self) -> Result<DeltaScalar> {
        DeltaScalar::one().try_div(self)
    }

    pub fn pow(&self, e: u32) -> DeltaScalar {
        DeltaScalar {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    pub fn scale(&self, c: &BigRational) -> DeltaScalar {
        Self::normalize(self.num.scale(c), self.den.clone())
    }
}

impl Default for DeltaScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for DeltaScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &Poly| {
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl Add for &DeltaScalar {
    type Output = DeltaScalar;
    fn add(self, rhs: &DeltaScalar) -> DeltaScalar {
        if self.den == rhs.den {
            return DeltaScalar::normalize(&self.num + &rhs.num, self.den.clone());
        }
        DeltaScalar::normalize(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &DeltaScalar {
    type Output = DeltaScalar;
    fn sub(self, rhs: &DeltaScalar) -> DeltaScalar {
        self + &(-rhs)
    }
}

impl Mul for &DeltaScalar {
    type Output = DeltaScalar;
    fn mul(self, rhs: &DeltaScalar) -> DeltaScalar {
        if self.den.is_constant() && rhs.den.is_constant() {
            return DeltaScalar::from_poly(&self.num * &rhs.num);
        }
        DeltaScalar::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on a zero divisor; use [`DeltaScalar::try_div`] to handle it.
impl Div for &DeltaScalar {
    type Output = DeltaScalar;
    fn div(self, rhs: &DeltaScalar) -> DeltaScalar {
        self.try_div(rhs).expect("division by zero scalar")
    }
}

impl Neg for &DeltaScalar {
    type Output = DeltaScalar;
    fn neg(self) -> DeltaScalar {
        DeltaScalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for DeltaScalar {
            type Output = DeltaScalar;
            fn $m(self, rhs: DeltaScalar) -> DeltaScalar { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for DeltaScalar {
    type Output = DeltaScalar;
    fn neg(self) -> DeltaScalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational::ratio;

    fn lin(a: i64, b: i64) -> DeltaScalar {
        DeltaScalar::linear(rat(a), rat(b))
    }

    #[test]
    fn half_contents_sum() {
        let a = DeltaScalar::linear(ratio(1, 2), ratio(1, 2));
        let b = DeltaScalar::linear(ratio(1, 2), ratio(-3, 2));
        assert_eq!(&a + &b, lin(1, -1));
    }

    #[test]
    fn canonical_reduction() {
        let num = &lin(1, -1) * &lin(1, 1);
        let x = DeltaScalar::new(num.numer().clone(), lin(1, -1).numer().clone()).unwrap();
        assert_eq!(x, lin(1, 1));
        let y = DeltaScalar::new(x.numer().clone(), x.denom().clone()).unwrap();
        assert_eq!(x, y);
        let twice = DeltaScalar::new(Poly::constant(rat(2)), Poly::linear(rat(2), rat(4))).unwrap();
        assert_eq!(twice, lin(1, 2).inv().unwrap());
    }

    #[test]
    fn evaluation() {
        let x = &(&lin(1, -1) * &lin(1, 2)) / &DeltaScalar::delta();
        assert_eq!(x.evaluate(&rat(2)).unwrap(), rat(2));
        let y = &lin(1, 4) / &(&DeltaScalar::from_int(3) * &lin(1, 2));
        assert_eq!(y.evaluate(&rat(2)).unwrap(), ratio(1, 2));
        let pole = lin(1, -1).inv().unwrap();
        assert!(matches!(pole.evaluate(&rat(1)), Err(Error::Pole(_))));
        assert!(DeltaScalar::one().try_div(&DeltaScalar::zero()).is_err());
    }

    #[test]
    fn display() {
        let x = &DeltaScalar::delta() / &lin(1, 2);
        assert_eq!(x.to_string(), "d/(d + 2)");
        assert_eq!(DeltaScalar::zero().to_string(), "0");
    }
}
