//! Products of linear factors `(δ + m)^e` times a rational unit, with
//! exponents that may exceed any machine integer.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::exponent::Exponent;
use crate::ring::poly::Poly;
use crate::ring::rational::{format_rational, parse_rational};
use crate::ring::scalar::DeltaScalar;

/// Units with more bits than this are kept only in prime-power form.
pub const UNIT_EXPAND_BITS: u64 = 4096;

const TRIAL_LIMIT: u64 = 1_000_000;

/// A nonzero rational stored as `±∏ p^e`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FactoredRational {
    negative: bool,
    primes: BTreeMap<u64, Exponent>,
}

impl FactoredRational {
    pub fn one() -> Self {
        FactoredRational {
            negative: false,
            primes: BTreeMap::new(),
        }
    }

    pub fn from_parts(negative: bool, primes: BTreeMap<u64, Exponent>) -> Self {
        let primes = primes.into_iter().filter(|(_, e)| !e.is_zero()).collect();
        FactoredRational { negative, primes }
    }

    pub fn from_integer(n: &BigInt) -> Result<Self> {
        if n.is_zero() {
            return Err(Error::Precondition("zero has no factored form".into()));
        }
        let mut primes = BTreeMap::new();
        for (p, e) in factor_integer(&n.abs())? {
            primes.insert(p, Exponent::Small(e as i128));
        }
        Ok(FactoredRational {
            negative: n.is_negative(),
            primes,
        })
    }

    pub fn from_rational(x: &BigRational) -> Result<Self> {
        let num = Self::from_integer(x.numer())?;
        let den = Self::from_integer(x.denom())?;
        Ok(num.div(&den))
    }

    pub fn from_i64(n: i64) -> Result<Self> {
        Self::from_integer(&BigInt::from(n))
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn primes(&self) -> &BTreeMap<u64, Exponent> {
        &self.primes
    }

    pub fn is_one(&self) -> bool {
        !self.negative && self.primes.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.primes.values().all(|e| !e.is_negative())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut primes = self.primes.clone();
        for (p, e) in &rhs.primes {
            add_exp(&mut primes, *p, e);
        }
        FactoredRational {
            negative: self.negative != rhs.negative,
            primes,
        }
    }

    pub fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.pow(&Exponent::Small(-1)))
    }

    pub fn pow(&self, e: &Exponent) -> Self {
        if e.is_zero() {
            return Self::one();
        }
        FactoredRational {
            negative: self.negative && !e.is_even(),
            primes: self.primes.iter().map(|(p, x)| (*p, x * e)).collect(),
        }
    }

    /// Rough size of the numerator and denominator in bits.
    pub fn bit_size(&self) -> Option<u64> {
        let mut total: u64 = 0;
        for (p, e) in &self.primes {
            let e = e.to_i128()?.unsigned_abs();
            let bits = (64 - p.leading_zeros()) as u128;
            total = total.checked_add(u64::try_from(e.checked_mul(bits)?).ok()?)?;
        }
        Some(total)
    }

    pub fn to_rational(&self) -> Result<BigRational> {
        match self.bit_size() {
            Some(b) if b <= UNIT_EXPAND_BITS => {}
            _ => return Err(Error::TooLarge("factored unit".into())),
        }
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for (p, e) in &self.primes {
            let k = e.to_i128().expect("bounded by bit size");
            let pk: BigInt = Pow::pow(BigInt::from(*p), k.unsigned_abs() as u64);
            if k > 0 {
                num *= pk;
            } else {
                den *= pk;
            }
        }
        if self.negative {
            num = -num;
        }
        Ok(BigRational::new(num, den))
    }
}

impl fmt::Display for FactoredRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Ok(x) = self.to_rational() {
            return f.write_str(&format_rational(&x));
        }
        let body = self
            .primes
            .iter()
            .map(|(p, e)| format!("{p}^{e}"))
            .collect::<Vec<_>>()
            .join(" * ");
        if self.negative {
            write!(f, "-{body}")
        } else {
            f.write_str(&body)
        }
    }
}

fn add_exp<K: Ord + Clone>(map: &mut BTreeMap<K, Exponent>, key: K, e: &Exponent) {
    if e.is_zero() {
        return;
    }
    match map.get_mut(&key) {
        Some(x) => {
            *x += e;
            if x.is_zero() {
                map.remove(&key);
            }
        }
        None => {
            map.insert(key, e.clone());
        }
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factorization of a positive integer by trial division up to 10^6,
/// accepting one remaining 64-bit prime cofactor.
pub fn factor_integer(n: &BigInt) -> Result<Vec<(u64, u32)>> {
    let mut out = Vec::new();
    if let Some(mut m) = n.to_u64() {
        let mut p = 2u64;
        while p <= TRIAL_LIMIT && p * p <= m {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            if e > 0 {
                out.push((p, e));
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if m > 1 {
            if !is_prime_u64(m) {
                return Err(Error::Unfactorable(m.to_string()));
            }
            out.push((m, 1));
        }
        out.sort_unstable();
        return Ok(out);
    }
    let mut rest = n.clone();
    let mut p = 2u64;
    while p <= TRIAL_LIMIT && rest.to_u64().is_none() {
        let bp = BigInt::from(p);
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&bp);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest.to_u64().is_none() {
        return Err(Error::Unfactorable(rest.to_string()));
    }
    out.extend(factor_integer(&rest)?);
    // Merge primes that were split between the two phases.
    out.sort_unstable();
    let mut merged: Vec<(u64, u32)> = Vec::new();
    for (q, e) in out {
        match merged.last_mut() {
            Some((last, le)) if *last == q => *le += e,
            _ => merged.push((q, e)),
        }
    }
    Ok(merged)
}

/// `unit · ∏ (δ + m)^e` with no zero exponents stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FactoredPoly {
    unit: FactoredRational,
    factors: BTreeMap<BigRational, Exponent>,
}

impl FactoredPoly {
    pub fn one() -> Self {
        FactoredPoly {
            unit: FactoredRational::one(),
            factors: BTreeMap::new(),
        }
    }

    pub fn from_parts(unit: FactoredRational, factors: BTreeMap<BigRational, Exponent>) -> Self {
        let factors = factors.into_iter().filter(|(_, e)| !e.is_zero()).collect();
        FactoredPoly { unit, factors }
    }

    pub fn constant(c: &BigRational) -> Result<Self> {
        Ok(FactoredPoly {
            unit: FactoredRational::from_rational(c)?,
            factors: BTreeMap::new(),
        })
    }

    /// The monic factor `δ + shift`.
    pub fn linear(shift: BigRational) -> Self {
        let mut factors = BTreeMap::new();
        factors.insert(shift, Exponent::Small(1));
        FactoredPoly {
            unit: FactoredRational::one(),
            factors,
        }
    }

    pub fn delta() -> Self {
        Self::linear(BigRational::zero())
    }

    pub fn unit(&self) -> &FactoredRational {
        &self.unit
    }

    pub fn factors(&self) -> &BTreeMap<BigRational, Exponent> {
        &self.factors
    }

    pub fn exponent_of(&self, shift: &BigRational) -> Exponent {
        self.factors.get(shift).cloned().unwrap_or_else(Exponent::zero)
    }

    pub fn fp_mul(&self, rhs: &Self) -> Self {
        let mut factors = self.factors.clone();
        for (m, e) in &rhs.factors {
            add_exp(&mut factors, m.clone(), e);
        }
        FactoredPoly {
            unit: self.unit.mul(&rhs.unit),
            factors,
        }
    }

    pub fn fp_div(&self, rhs: &Self) -> Self {
        self.fp_mul(&rhs.fp_pow(&Exponent::Small(-1)))
    }

    pub fn fp_pow(&self, e: &Exponent) -> Self {
        if e.is_zero() {
            return Self::one();
        }
        FactoredPoly {
            unit: self.unit.pow(e),
            factors: self.factors.iter().map(|(m, x)| (m.clone(), x * e)).collect(),
        }
    }

    /// Splits a rational function into linear factors over Q.
    pub fn fp_from_scalar(x: &DeltaScalar) -> Result<Self> {
        if x.is_zero() {
            return Err(Error::Precondition("zero has no factored form".into()));
        }
        let num = split_linear(x.numer())?;
        let den = split_linear(x.denom())?;
        Ok(num.fp_div(&den))
    }

    /// Checks the integral-polynomial conditions and returns `self`.
    pub fn fp_finalize(self) -> Result<Self> {
        if let Some((m, e)) = self.factors.iter().find(|(_, e)| e.is_negative()) {
            return Err(Error::NotIntegral(format!(
                "negative exponent {e} on shift {}",
                format_rational(m)
            )));
        }
        if let Some(m) = self.factors.keys().find(|m| !m.is_integer()) {
            return Err(Error::NotIntegral(format!(
                "non-integer shift {}",
                format_rational(m)
            )));
        }
        if !self.unit.is_integral() {
            return Err(Error::NotIntegral(format!("unit {}", self.unit)));
        }
        Ok(self)
    }

    pub fn is_finalized(&self) -> bool {
        self.clone().fp_finalize().is_ok()
    }

    /// Total degree in δ.
    pub fn degree(&self) -> Exponent {
        self.factors
            .values()
            .fold(Exponent::zero(), |acc, e| &acc + e)
    }

    /// True iff some factor with positive exponent vanishes at `x`.
    pub fn vanishes_at(&self, x: &BigRational) -> bool {
        self.exponent_of(&-x).is_positive()
    }

    pub fn evaluate(&self, x: &BigRational) -> Result<BigRational> {
        let e = self.exponent_of(&-x);
        if e.is_negative() {
            return Err(Error::Pole(x.clone()));
        }
        if e.is_positive() {
            return Ok(BigRational::zero());
        }
        let mut acc = self.unit.to_rational()?;
        for (m, e) in &self.factors {
            let k = small_exponent(e)?;
            let base = x + m;
            let p = Pow::pow(&base, k.unsigned_abs());
            if k >= 0 {
                acc *= p;
            } else {
                acc /= p;
            }
        }
        Ok(acc)
    }

    /// Expands into a rational function. Only sensible for small exponents.
    pub fn to_scalar(&self) -> Result<DeltaScalar> {
        let unit = self.unit.to_rational()?;
        let mut num = Poly::constant(unit);
        let mut den = Poly::one();
        for (m, e) in &self.factors {
            let k = small_exponent(e)?;
            let f = Poly::linear(BigRational::one(), m.clone()).pow(k.unsigned_abs() as u32);
            if k >= 0 {
                num = &num * &f;
            } else {
                den = &den * &f;
            }
        }
        DeltaScalar::new(num, den)
    }

    pub fn to_json(&self) -> FactoredPolyJson {
        FactoredPolyJson {
            unit: self.unit.to_rational().ok().map(|u| format_rational(&u)),
            unit_factors: UnitJson {
                sign: if self.unit.negative { -1 } else { 1 },
                primes: self
                    .unit
                    .primes
                    .iter()
                    .map(|(p, e)| PrimeJson {
                        prime: p.to_string(),
                        exp: e.to_string(),
                    })
                    .collect(),
            },
            factors: self
                .factors
                .iter()
                .map(|(m, e)| FactorJson {
                    shift: format_rational(m),
                    exp: e.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &FactoredPolyJson) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("bad {what} in factored polynomial"));
        let mut primes = BTreeMap::new();
        for p in &j.unit_factors.primes {
            let prime: u64 = p.prime.parse().map_err(|_| bad("prime"))?;
            let e = Exponent::parse(&p.exp).ok_or_else(|| bad("exponent"))?;
            add_exp(&mut primes, prime, &e);
        }
        let unit = FactoredRational {
            negative: j.unit_factors.sign < 0,
            primes,
        };
        let mut factors = BTreeMap::new();
        for f in &j.factors {
            let m = parse_rational(&f.shift)?;
            let e = Exponent::parse(&f.exp).ok_or_else(|| bad("exponent"))?;
            add_exp(&mut factors, m, &e);
        }
        let fp = FactoredPoly { unit, factors };
        if let Some(u) = &j.unit {
            if fp.unit.to_rational()? != parse_rational(u)? {
                return Err(bad("unit"));
            }
        }
        Ok(fp)
    }
}

fn small_exponent(e: &Exponent) -> Result<i64> {
    e.to_i128()
        .and_then(|v| i64::try_from(v).ok())
        .filter(|v| v.unsigned_abs() <= 1 << 16)
        .ok_or_else(|| Error::TooLarge(format!("exponent {e}")))
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let mut divs = vec![BigInt::one()];
    for (p, e) in factor_integer(n)? {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = d.clone();
            next.push(pk.clone());
            for _ in 0..e {
                pk *= p;
                next.push(pk.clone());
            }
        }
        divs = next;
    }
    Ok(divs)
}

fn split_linear(p: &Poly) -> Result<FactoredPoly> {
    let mut rest = p.clone();
    let mut out = FactoredPoly::one();
    // Strip powers of δ first so the constant term is nonzero.
    while rest.degree().unwrap_or(0) > 0 && rest.constant_term().is_zero() {
        rest = rest.div_rem(&Poly::var())?.0;
        out = out.fp_mul(&FactoredPoly::delta());
    }
    while rest.degree().unwrap_or(0) > 0 {
        let lcm = rest
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = rest
            .coeffs()
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let a0 = ints[0].abs();
        let an = ints[ints.len() - 1].abs();
        let mut found = None;
        'search: for q in divisors(&an)? {
            for pnum in divisors(&a0)? {
                for s in [Sign::Plus, Sign::Minus] {
                    let r = BigRational::new(BigInt::from_biguint(s, pnum.magnitude().clone()), q.clone());
                    if rest.eval(&r).is_zero() {
                        found = Some(r);
                        break 'search;
                    }
                }
            }
        }
        let Some(r) = found else {
            return Err(Error::NonLinearFactor(rest.to_string()));
        };
        rest = rest.div_rem(&Poly::linear(BigRational::one(), -&r))?.0;
        out = out.fp_mul(&FactoredPoly::linear(-r));
    }
    let c = rest.constant_term();
    Ok(out.fp_mul(&FactoredPoly::constant(&c)?))
}

impl fmt::Display for FactoredPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<&BigRational> = self.factors.keys().collect();
        keys.sort_by(|a, b| a.abs().cmp(&b.abs()).then(a.cmp(b)));
        let mut parts: Vec<String> = Vec::new();
        for m in keys {
            let e = &self.factors[m];
            let base = if m.is_zero() {
                "d".to_string()
            } else if m.is_negative() {
                format!("(d-{})", format_rational(&m.abs()))
            } else {
                format!("(d+{})", format_rational(m))
            };
            if *e == Exponent::Small(1) {
                parts.push(base);
            } else {
                parts.push(format!("{base}^{e}"));
            }
        }
        let negative_one = self.unit.negative && self.unit.primes.is_empty();
        if parts.is_empty() {
            return write!(f, "{}", self.unit);
        }
        if self.unit.is_one() {
            write!(f, "{}", parts.join(" * "))
        } else if negative_one {
            write!(f, "-{}", parts.join(" * "))
        } else {
            write!(f, "{} * {}", self.unit, parts.join(" * "))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeJson {
    pub prime: String,
    pub exp: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitJson {
    pub sign: i8,
    pub primes: Vec<PrimeJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorJson {
    pub shift: String,
    pub exp: String,
}

/// Wire form. `unit` is `null` when the unit is too large to print in full;
/// `unit_factors` always carries it exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactoredPolyJson {
    pub unit: Option<String>,
    pub unit_factors: UnitJson,
    pub factors: Vec<FactorJson>,
}

impl Serialize for FactoredPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for FactoredPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = FactoredPolyJson::deserialize(d)?;
        FactoredPoly::from_json(&j).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational::{rat, ratio};

    fn lin(a: i64, b: i64) -> DeltaScalar {
        DeltaScalar::linear(rat(a), rat(b))
    }

    #[test]
    fn from_scalar_splits() {
        let x = &(&DeltaScalar::from_int(2) * &lin(1, -1).pow(2)) * &lin(1, 2);
        let fp = FactoredPoly::fp_from_scalar(&x).unwrap();
        assert_eq!(fp.unit().to_rational().unwrap(), rat(2));
        assert_eq!(fp.exponent_of(&rat(-1)), Exponent::Small(2));
        assert_eq!(fp.exponent_of(&rat(2)), Exponent::Small(1));
        assert_eq!(fp.to_scalar().unwrap(), x);
    }

    #[test]
    fn example_determinant() {
        let cube = FactoredPoly::delta().fp_pow(&Exponent::Small(3));
        let rest = &(&DeltaScalar::from_int(64) * &lin(1, -2).pow(2)) * &lin(1, 4);
        let det = cube.fp_mul(&FactoredPoly::fp_from_scalar(&rest).unwrap());
        assert_eq!(det.to_string(), "64 * d^3 * (d-2)^2 * (d+4)");
        assert!(det.clone().fp_finalize().is_ok());
        assert!(det.vanishes_at(&rat(2)));
        assert!(!det.vanishes_at(&rat(7)));
        assert_eq!(det.evaluate(&rat(1)).unwrap(), rat(64 * 5));
    }

    #[test]
    fn division_cancels() {
        let a = FactoredPoly::delta().fp_mul(&FactoredPoly::linear(rat(1)));
        let q = a.fp_div(&FactoredPoly::delta());
        assert_eq!(q, FactoredPoly::linear(rat(1)));
        assert!(FactoredPoly::linear(rat(1)).fp_div(&FactoredPoly::delta()).fp_finalize().is_err());
    }

    #[test]
    fn rational_roots_and_units() {
        let x = &lin(2, 1) / &DeltaScalar::from_int(3);
        let fp = FactoredPoly::fp_from_scalar(&x).unwrap();
        assert_eq!(fp.unit().to_rational().unwrap(), ratio(2, 3));
        assert_eq!(fp.exponent_of(&ratio(1, 2)), Exponent::Small(1));
        assert!(fp.clone().fp_finalize().is_err());
        let quad = DeltaScalar::from_poly(Poly::new(vec![rat(1), rat(0), rat(1)]));
        assert!(matches!(
            FactoredPoly::fp_from_scalar(&quad),
            Err(Error::NonLinearFactor(_))
        ));
    }

    #[test]
    fn huge_units_stay_factored() {
        let two = FactoredPoly::constant(&rat(2)).unwrap();
        let big = two.fp_pow(&Exponent::from_big(BigInt::from(10u64).pow(20u32)));
        assert!(big.unit().to_rational().is_err());
        let j = big.to_json();
        assert!(j.unit.is_none());
        assert_eq!(FactoredPoly::from_json(&j).unwrap(), big);
        assert!(big.to_string().starts_with("2^"));
    }

    #[test]
    fn json_round_trip() {
        let fp = FactoredPoly::constant(&rat(-12))
            .unwrap()
            .fp_mul(&FactoredPoly::linear(rat(-2)).fp_pow(&Exponent::Small(5)));
        let s = serde_json::to_string(&fp).unwrap();
        assert!(s.contains("\"unit\":\"-12\""));
        let back: FactoredPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, fp);
    }

    #[test]
    fn integer_factorization() {
        assert_eq!(factor_integer(&BigInt::from(360)).unwrap(), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factor_integer(&BigInt::from(1)).unwrap(), vec![]);
        let big_prime = BigInt::from(1_000_000_007u64) * BigInt::from(4);
        assert_eq!(factor_integer(&big_prime).unwrap(), vec![(2, 2), (1_000_000_007, 1)]);
        assert!(is_prime_u64(18_446_744_073_709_551_557));
    }
}
