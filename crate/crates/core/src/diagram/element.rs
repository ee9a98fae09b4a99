//! Formal sums of Brauer diagrams and the algebra structure on them.

use std::collections::HashMap;
use std::fmt::Debug;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::diagram::brauer::BrauerDiagram;
use crate::error::{Error, Result};
use crate::ring::rational::format_rational;
use crate::ring::DeltaScalar;

/// Coefficient rings for [`Element`].
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(x: &BigRational) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn try_div(&self, rhs: &Self) -> Result<Self>;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(n.into()))
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
}

impl Coeff for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rational(x: &BigRational) -> Self {
        x.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_div(&self, rhs: &Self) -> Result<Self> {
        if Zero::is_zero(rhs) {
            return Err(Error::DivisionByZero);
        }
        Ok(self / rhs)
    }
}

impl Coeff for DeltaScalar {
    fn zero() -> Self {
        DeltaScalar::zero()
    }
    fn one() -> Self {
        DeltaScalar::one()
    }
    fn from_rational(x: &BigRational) -> Self {
        DeltaScalar::constant(x.clone())
    }
    fn is_zero(&self) -> bool {
        DeltaScalar::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn try_div(&self, rhs: &Self) -> Result<Self> {
        DeltaScalar::try_div(self, rhs)
    }
}

/// A finite linear combination of diagrams at one level.
#[derive(Clone, Debug, PartialEq)]
pub struct Element<C: Coeff> {
    n: usize,
    terms: HashMap<BrauerDiagram, C>,
}

impl<C: Coeff> Element<C> {
    pub fn zero(n: usize) -> Self {
        Element {
            n,
            terms: HashMap::new(),
        }
    }

    pub fn from_diagram(d: BrauerDiagram) -> Self {
        Self::from_term(d, C::one())
    }

    pub fn from_term(d: BrauerDiagram, c: C) -> Self {
        let mut e = Self::zero(d.n());
        e.add_term(d, c);
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &HashMap<BrauerDiagram, C> {
        &self.terms
    }

    pub fn coefficient(&self, d: &BrauerDiagram) -> C {
        self.terms.get(d).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, d: BrauerDiagram, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&d) {
            Some(x) => {
                *x = x.add(&c);
                if x.is_zero() {
                    self.terms.remove(&d);
                }
            }
            None => {
                self.terms.insert(d, c);
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (d, c) in &rhs.terms {
            out.add_term(*d, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&C::from_i64(-1)))
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Element {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(d, x)| (*d, x.mul(c)))
                .filter(|(_, x)| !x.is_zero())
                .collect(),
        }
    }

    /// The anti-involution reflecting every diagram top to bottom.
    pub fn sigma(&self) -> Self {
        Element {
            n: self.n,
            terms: self.terms.iter().map(|(d, c)| (d.flip(), c.clone())).collect(),
        }
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Element<D> {
        let mut out = Element::zero(self.n);
        for (d, c) in &self.terms {
            out.add_term(*d, f(c));
        }
        out
    }

    /// Terms sorted by diagram, for deterministic output.
    pub fn sorted_terms(&self) -> Vec<(BrauerDiagram, C)> {
        let mut v: Vec<_> = self.terms.iter().map(|(d, c)| (*d, c.clone())).collect();
        v.sort_by_key(|a| a.0);
        v
    }
}

#[derive(Serialize)]
struct TermJson {
    edges: Vec<[usize; 2]>,
    coeff: String,
}

impl Element<BigRational> {
    /// Debug dump: a list of `{edges, coeff}` objects.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<TermJson> = self
            .sorted_terms()
            .into_iter()
            .map(|(d, c)| TermJson {
                edges: d.edges().into_iter().map(|(a, b)| [a, b]).collect(),
                coeff: format_rational(&c),
            })
            .collect();
        serde_json::to_value(terms).expect("serializable")
    }
}

/// `B_n(δ)` with coefficients in `C`; `delta` is the loop value.
#[derive(Clone, Debug)]
pub struct BrauerAlgebra<C: Coeff> {
    n: usize,
    delta: C,
    delta_powers: Vec<C>,
}

impl<C: Coeff> BrauerAlgebra<C> {
    pub fn new(n: usize, delta: C) -> Self {
        let mut delta_powers = vec![C::one()];
        for _ in 0..n {
            let next = delta_powers.last().expect("nonempty").mul(&delta);
            delta_powers.push(next);
        }
        BrauerAlgebra {
            n,
            delta,
            delta_powers,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn delta(&self) -> &C {
        &self.delta
    }

    pub fn one(&self) -> Element<C> {
        Element::from_diagram(BrauerDiagram::identity(self.n))
    }

    pub fn zero(&self) -> Element<C> {
        Element::zero(self.n)
    }

    pub fn scalar(&self, c: C) -> Element<C> {
        Element::from_term(BrauerDiagram::identity(self.n), c)
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                min: 1,
                max: self.n.saturating_sub(1),
            });
        }
        Ok(())
    }

    pub fn s(&self, i: usize) -> Result<Element<C>> {
        self.check_index(i)?;
        Ok(Element::from_diagram(BrauerDiagram::transposition(self.n, i)))
    }

    pub fn e(&self, i: usize) -> Result<Element<C>> {
        self.check_index(i)?;
        Ok(Element::from_diagram(BrauerDiagram::arc(self.n, i)))
    }

    /// `w` maps top strand `i` to bottom strand `w[i]` (0-based).
    pub fn from_permutation(&self, w: &[usize]) -> Result<Element<C>> {
        if w.len() != self.n {
            return Err(Error::SizeMismatch(w.len(), self.n));
        }
        Ok(Element::from_diagram(BrauerDiagram::from_permutation(w)?))
    }

    /// `s_{i,j}`: `s_i⋯s_{j−1}` for `j > i`, `s_{i−1}⋯s_j` for `j < i`.
    pub fn s_word(&self, i: usize, j: usize) -> Result<BrauerDiagram> {
        let mut d = BrauerDiagram::identity(self.n);
        let idx: Vec<usize> = if j > i {
            (i..j).collect()
        } else {
            (j..i).rev().collect()
        };
        for k in idx {
            self.check_index(k)?;
            d = d.compose(&BrauerDiagram::transposition(self.n, k)).0;
        }
        Ok(d)
    }

    pub fn mul(&self, a: &Element<C>, b: &Element<C>) -> Element<C> {
        let mut out = Element::zero(self.n);
        for (da, ca) in &a.terms {
            for (db, cb) in &b.terms {
                let (d, loops) = da.compose(db);
                let c = ca.mul(cb).mul(&self.delta_powers[loops]);
                out.add_term(d, c);
            }
        }
        out
    }

    pub fn product(&self, factors: &[&Element<C>]) -> Element<C> {
        factors
            .iter()
            .fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    /// Nazarov's element `x_i = (δ−1)/2 + Σ_{k<i} ((k,i) − e_{k,i})`, where
    /// `e_{k,i}` joins `k` and `i` on both rows.
    pub fn jm_element(&self, i: usize) -> Result<Element<C>> {
        if i == 0 || i > self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                min: 1,
                max: self.n,
            });
        }
        let half = C::from_rational(&BigRational::new(1.into(), 2.into()));
        let base = self.delta.sub(&C::one()).mul(&half);
        let mut x = self.scalar(base);
        for k in 1..i {
            let mut w: Vec<usize> = (0..self.n).collect();
            w.swap(k - 1, i - 1);
            x.add_term(BrauerDiagram::from_permutation(&w)?, C::one());
            x.add_term(BrauerDiagram::arc_pair(self.n, k, i), C::from_i64(-1));
        }
        Ok(x)
    }

    /// The summand of `x_i` for `k ≤ i−2` written as the word
    /// `s_{k,i}s_{i−1,k} − s_{k,i−2}s_{i−1,k}e_{i−1}s_{k,i−1}s_{i−2,k}`.
    pub fn jm_summand_word(&self, k: usize, i: usize) -> Result<Element<C>> {
        if k + 2 > i || i > self.n {
            return Err(Error::Precondition(format!("word form needs k <= i-2, got k={k} i={i}")));
        }
        let first = self.s_word(k, i)?.compose(&self.s_word(i - 1, k)?).0;
        let e = BrauerDiagram::arc(self.n, i - 1);
        let mut second = self.s_word(k, i - 2)?;
        for d in [self.s_word(i - 1, k)?, e, self.s_word(k, i - 1)?, self.s_word(i - 2, k)?] {
            second = second.compose(&d).0;
        }
        let mut out = Element::from_diagram(first);
        out.add_term(second, C::from_i64(-1));
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational::rat;

    fn alg(n: usize) -> BrauerAlgebra<DeltaScalar> {
        BrauerAlgebra::new(n, DeltaScalar::delta())
    }

    #[test]
    fn generators_and_sigma() {
        let a = alg(3);
        let s1 = a.s(1).unwrap();
        let s2 = a.s(2).unwrap();
        assert_eq!(a.mul(&s1, &s2).sigma(), a.mul(&s2, &s1));
        let e1 = a.e(1).unwrap();
        let w = a.product(&[&e1, &s2, &e1]);
        assert_eq!(w.sigma().sigma(), w);
        assert_eq!(a.from_permutation(&[0, 1, 2]).unwrap(), a.one());
        assert!(a.s(3).is_err());
        assert_eq!(a.mul(&e1, &e1), e1.scale(&DeltaScalar::delta()));
    }

    #[test]
    fn jm_small_cases() {
        let a = alg(2);
        let half = DeltaScalar::linear(BigRational::new(1.into(), 2.into()), BigRational::new((-1).into(), 2.into()));
        assert_eq!(a.jm_element(1).unwrap(), a.scalar(half.clone()));
        let x2 = a.jm_element(2).unwrap();
        let expect = a.scalar(half).add(&a.s(1).unwrap()).sub(&a.e(1).unwrap());
        assert_eq!(x2, expect);
        let a = alg(3);
        let x2 = a.jm_element(2).unwrap();
        let x3 = a.jm_element(3).unwrap();
        assert_eq!(a.mul(&x2, &x3), a.mul(&x3, &x2));
    }

    #[test]
    fn word_form_agrees() {
        let a = alg(5);
        for i in 3..=5 {
            for k in 1..=i - 2 {
                let mut w: Vec<usize> = (0..5).collect();
                w.swap(k - 1, i - 1);
                let mut expect = Element::from_diagram(BrauerDiagram::from_permutation(&w).unwrap());
                expect.add_term(BrauerDiagram::arc_pair(5, k, i), DeltaScalar::from_int(-1));
                assert_eq!(a.jm_summand_word(k, i).unwrap(), expect, "k={k} i={i}");
            }
        }
    }

    #[test]
    fn json_dump() {
        let a = BrauerAlgebra::new(2, rat(3));
        let x = a.e(1).unwrap().scale(&BigRational::new(1.into(), 2.into()));
        let j = x.to_json();
        assert_eq!(j[0]["coeff"], "1/2");
        assert_eq!(j[0]["edges"][0][0], 1);
    }
}
