//! Closed-form edge factors γ, the recursive Gram determinant and the
//! semisimplicity criterion.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::combinat::{
    addable_nodes, branching_edges, cell_labels, check_node, removable_nodes, CellLabel, Content,
    Node, NodeKind, Partition,
};
use crate::error::{Error, Result};
use crate::ring::rational::rat;
use crate::ring::{DeltaScalar, Exponent, FactoredPoly, FactoredRational};

/// A product of integers and factors `(δ + m)`, with `m` integral.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearProduct {
    pub negative: bool,
    pub num_consts: Vec<i64>,
    pub den_consts: Vec<i64>,
    pub num_shifts: Vec<i64>,
    pub den_shifts: Vec<i64>,
}

impl LinearProduct {
    /// Multiplies (or divides) by `a·δ + b` with `a ∈ {-1, 0, 1}`.
    fn push(&mut self, (a, b): (i64, i64), numerator: bool) -> Result<()> {
        let (consts, shifts) = if numerator {
            (&mut self.num_consts, &mut self.num_shifts)
        } else {
            (&mut self.den_consts, &mut self.den_shifts)
        };
        match a {
            0 => {
                if b == 0 {
                    return Err(if numerator {
                        Error::Precondition("edge factor vanishes identically".into())
                    } else {
                        Error::DivisionByZero
                    });
                }
                if b < 0 {
                    self.negative = !self.negative;
                }
                if b.abs() != 1 {
                    consts.push(b.abs());
                }
            }
            1 => shifts.push(b),
            -1 => {
                self.negative = !self.negative;
                shifts.push(-b);
            }
            _ => unreachable!("content forms have unit δ-coefficient"),
        }
        Ok(())
    }

    pub fn to_factored(&self) -> FactoredPoly {
        let mut unit = if self.negative {
            FactoredRational::from_i64(-1).expect("nonzero")
        } else {
            FactoredRational::one()
        };
        for &c in &self.num_consts {
            unit = unit.mul(&FactoredRational::from_i64(c).expect("nonzero"));
        }
        for &c in &self.den_consts {
            unit = unit.div(&FactoredRational::from_i64(c).expect("nonzero"));
        }
        let mut fp = FactoredPoly::from_parts(unit, Default::default());
        for &m in &self.num_shifts {
            fp = fp.fp_mul(&FactoredPoly::linear(rat(m)));
        }
        for &m in &self.den_shifts {
            fp = fp.fp_div(&FactoredPoly::linear(rat(m)));
        }
        fp
    }

    pub fn to_scalar(&self) -> DeltaScalar {
        let lin = |m: i64| DeltaScalar::linear(rat(1), rat(m));
        let mut num = DeltaScalar::from_int(if self.negative { -1 } else { 1 });
        for &c in &self.num_consts {
            num = &num * &DeltaScalar::from_int(c);
        }
        for &m in &self.num_shifts {
            num = &num * &lin(m);
        }
        let mut den = DeltaScalar::one();
        for &c in &self.den_consts {
            den = &den * &DeltaScalar::from_int(c);
        }
        for &m in &self.den_shifts {
            den = &den * &lin(m);
        }
        &num / &den
    }

    pub fn evaluate(&self, delta: &BigRational) -> Result<BigRational> {
        let mut num = BigRational::from_integer(BigInt::from(if self.negative { -1 } else { 1 }));
        let mut den = BigRational::one();
        for &c in &self.num_consts {
            num *= rat(c);
        }
        for &m in &self.num_shifts {
            num *= delta + rat(m);
        }
        for &c in &self.den_consts {
            den *= rat(c);
        }
        for &m in &self.den_shifts {
            den *= delta + rat(m);
        }
        if den.is_zero() {
            return Err(Error::Pole(delta.clone()));
        }
        Ok(num / den)
    }
}

/// One edge of the branching graph with its factor γ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaFactor {
    pub child: CellLabel,
    pub parent: CellLabel,
    pub node: Node,
    pub value: DeltaScalar,
    pub factored: FactoredPoly,
}

impl GammaFactor {
    fn from_product(parent: &CellLabel, child: CellLabel, node: Node, prod: &LinearProduct) -> Self {
        GammaFactor {
            child,
            parent: parent.clone(),
            node,
            value: prod.to_scalar(),
            factored: prod.to_factored(),
        }
    }
}

/// γ for the child `(f, λ∖p)` obtained by removing `p`.
pub fn gamma_remove_box(parent: &CellLabel, p: Node) -> Result<GammaFactor> {
    let prod = remove_box_product(&parent.shape, p)?;
    let child = CellLabel {
        n: parent.n - 1,
        f: parent.f,
        shape: parent.shape.remove_box(p.row).expect("checked removable"),
    };
    Ok(GammaFactor::from_product(parent, child, p, &prod))
}

/// γ for the child `(f−1, λ∪p)` obtained by adding `p`.
pub fn gamma_add_box(parent: &CellLabel, p: Node) -> Result<GammaFactor> {
    let prod = add_box_product(parent, p)?;
    let child = CellLabel {
        n: parent.n - 1,
        f: parent.f - 1,
        shape: parent.shape.add_box(p.row).expect("checked addable"),
    };
    Ok(GammaFactor::from_product(parent, child, p, &prod))
}

/// All edges below `parent`, in the order of [`branching_edges`].
pub fn gamma_factors(parent: &CellLabel) -> Result<Vec<GammaFactor>> {
    let mut out = Vec::new();
    for (child, node, prod) in edge_products(parent)? {
        out.push(GammaFactor::from_product(parent, child, node, &prod));
    }
    Ok(out)
}

pub fn remove_box_product(lambda: &Partition, p: Node) -> Result<LinearProduct> {
    check_node(lambda, p, NodeKind::Removable)?;
    let k = p.row;
    let cp = Content::of(p, NodeKind::Removable);
    let mut prod = LinearProduct {
        negative: true,
        ..Default::default()
    };
    for q in addable_nodes(lambda).into_iter().filter(|q| q.row > k) {
        prod.push(cp.plus(Content::of(q, NodeKind::Addable)), true)?;
    }
    for r in removable_nodes(lambda).into_iter().filter(|r| r.row > k) {
        prod.push(cp.minus(Content::of(r, NodeKind::Removable)), false)?;
    }
    Ok(prod)
}

pub fn add_box_product(parent: &CellLabel, p: Node) -> Result<LinearProduct> {
    let lambda = &parent.shape;
    check_node(lambda, p, NodeKind::Addable)?;
    if parent.f == 0 {
        return Err(Error::Precondition(format!(
            "adding a box below {parent} needs f >= 1"
        )));
    }
    let k = p.row;
    let l = lambda.len();
    let mu = lambda.add_box(k).expect("checked addable");
    let mu_k = mu.part(k) as i64;
    let k_i = k as i64;
    let cp = Content::of(p, NodeKind::Addable);

    let mut prod = LinearProduct::default();
    prod.push((1, 2 * mu_k - 2 * k_i), true)?;
    let ar_rows = removable_nodes(lambda)
        .into_iter()
        .map(|q| (q, NodeKind::Removable))
        .chain(addable_nodes(lambda).into_iter().map(|q| (q, NodeKind::Addable)))
        .filter(|(q, _)| q.row <= k && *q != p);
    for (q, kind) in ar_rows {
        let cq = Content::of(q, kind);
        prod.push(cp.plus(cq), true)?;
        prod.push(cp.minus(cq), false)?;
    }

    if k >= l {
        let lambda_k = lambda.part(k) as i64;
        if lambda_k > 0 {
            prod.push((1, lambda_k - 2 * k_i), true)?;
        }
        return Ok(prod);
    }

    prod.negative = !prod.negative;
    let cmu = Content::of(p, NodeKind::Removable);
    for q in addable_nodes(&mu).into_iter().filter(|q| q.row > k) {
        prod.push(cmu.minus(Content::of(q, NodeKind::Addable)), true)?;
    }
    for r in removable_nodes(&mu).into_iter().filter(|r| r.row > k) {
        prod.push(cmu.plus(Content::of(r, NodeKind::Removable)), false)?;
    }
    let lambda_k_removable = removable_nodes(lambda).contains(&Node::new(k, lambda.part(k)));
    if !lambda_k_removable {
        prod.push((1, 2 * mu_k - 2 * k_i - 2), false)?;
    }
    Ok(prod)
}

/// `(child, moved node, γ)` for every edge below `parent`.
fn edge_products(parent: &CellLabel) -> Result<Vec<(CellLabel, Node, LinearProduct)>> {
    let mut out = Vec::new();
    if parent.n == 0 {
        return Ok(out);
    }
    for p in removable_nodes(&parent.shape) {
        let child = CellLabel {
            n: parent.n - 1,
            f: parent.f,
            shape: parent.shape.remove_box(p.row).expect("removable"),
        };
        out.push((child, p, remove_box_product(&parent.shape, p)?));
    }
    if parent.f >= 1 {
        for p in addable_nodes(&parent.shape) {
            let child = CellLabel {
                n: parent.n - 1,
                f: parent.f - 1,
                shape: parent.shape.add_box(p.row).expect("addable"),
            };
            out.push((child, p, add_box_product(parent, p)?));
        }
    }
    let order = branching_edges(parent);
    out.sort_by_key(|(c, _, _)| order.iter().position(|o| o == c));
    Ok(out)
}

/// Determinant of one cell module with its dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramResult {
    pub label: CellLabel,
    pub det: FactoredPoly,
    pub dim: BigUint,
}

/// Compact determinant used while recursing: sign, prime exponents of the
/// unit and exponents of `(δ + m)`, all sorted by key.
#[derive(Clone, Debug, Default)]
struct Compact {
    negative: bool,
    primes: Vec<(u64, Exponent)>,
    shifts: Vec<(i64, Exponent)>,
    dim: Exponent,
}

impl Compact {
    fn base() -> Self {
        Compact {
            dim: Exponent::Small(1),
            ..Default::default()
        }
    }

    fn from_result(r: &GramResult) -> Result<Compact> {
        let shifts = r
            .det
            .factors()
            .iter()
            .map(|(m, e)| {
                let m = m
                    .is_integer()
                    .then(|| m.numer().to_i64())
                    .flatten()
                    .ok_or_else(|| Error::NotIntegral(format!("shift {m} in {}", r.label)))?;
                Ok((m, e.clone()))
            })
            .collect::<Result<_>>()?;
        Ok(Compact {
            negative: r.det.unit().is_negative(),
            primes: r.det.unit().primes().iter().map(|(p, e)| (*p, e.clone())).collect(),
            shifts,
            dim: Exponent::from_big(BigInt::from(r.dim.clone())),
        })
    }

    fn to_result(&self, label: CellLabel) -> GramResult {
        let unit = FactoredRational::from_parts(self.negative, self.primes.iter().cloned().collect());
        let factors = self
            .shifts
            .iter()
            .map(|(m, e)| (rat(*m), e.clone()))
            .collect();
        GramResult {
            label,
            det: FactoredPoly::from_parts(unit, factors),
            dim: self.dim.to_big().to_biguint().expect("positive dimension"),
        }
    }
}

/// Dense exponent accumulator indexed by shift and by prime.
struct Accumulator {
    shift_base: i64,
    shifts: Vec<Exponent>,
    primes: HashMap<u64, Exponent>,
    negative: bool,
}

impl Accumulator {
    fn new(n: usize) -> Self {
        let span = 8 * n as i64 + 16;
        Accumulator {
            shift_base: span / 2,
            shifts: vec![Exponent::zero(); span as usize],
            primes: HashMap::new(),
            negative: false,
        }
    }

    fn add_shift(&mut self, m: i64, e: &Exponent) {
        let idx = m + self.shift_base;
        if idx < 0 || idx as usize >= self.shifts.len() {
            let grow = (idx.unsigned_abs() as usize).max(self.shifts.len());
            let mut bigger = vec![Exponent::zero(); self.shifts.len() + 2 * grow];
            for (i, x) in self.shifts.drain(..).enumerate() {
                bigger[i + grow] = x;
            }
            self.shifts = bigger;
            self.shift_base += grow as i64;
            return self.add_shift(m, e);
        }
        self.shifts[idx as usize] += e;
    }

    fn add_prime(&mut self, p: u64, e: &Exponent) {
        *self.primes.entry(p).or_insert_with(Exponent::zero) += e;
    }

    fn add_const(&mut self, c: i64, e: &Exponent) {
        let mut c = c.unsigned_abs();
        let mut d = 2;
        while d * d <= c {
            let mut k = 0i128;
            while c.is_multiple_of(d) {
                c /= d;
                k += 1;
            }
            if k > 0 {
                self.add_prime(d, &(e * &Exponent::Small(k)));
            }
            d += 1;
        }
        if c > 1 {
            self.add_prime(c, e);
        }
    }

    fn absorb(&mut self, child: &Compact) {
        self.negative ^= child.negative;
        for (p, e) in &child.primes {
            self.add_prime(*p, e);
        }
        for (m, e) in &child.shifts {
            self.add_shift(*m, e);
        }
    }

    fn absorb_gamma(&mut self, g: &LinearProduct, dim: &Exponent) {
        if g.negative && !dim.is_even() {
            self.negative = !self.negative;
        }
        let neg = -dim;
        for &c in &g.num_consts {
            self.add_const(c, dim);
        }
        for &c in &g.den_consts {
            self.add_const(c, &neg);
        }
        for &m in &g.num_shifts {
            self.add_shift(m, dim);
        }
        for &m in &g.den_shifts {
            self.add_shift(m, &neg);
        }
    }

    fn finish(self, dim: Exponent) -> Compact {
        let base = self.shift_base;
        let shifts = self
            .shifts
            .into_iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(i, e)| (i as i64 - base, e))
            .collect();
        let mut primes: Vec<(u64, Exponent)> =
            self.primes.into_iter().filter(|(_, e)| !e.is_zero()).collect();
        primes.sort_by_key(|(p, _)| *p);
        Compact {
            negative: self.negative,
            primes,
            shifts,
            dim,
        }
    }
}

fn combine(
    parent: &CellLabel,
    lookup: &mut dyn FnMut(&CellLabel) -> Result<Arc<Compact>>,
) -> Result<Compact> {
    if parent.n == 1 {
        return Ok(Compact::base());
    }
    if parent.n == 0 {
        return Ok(Compact::base());
    }
    let mut acc = Accumulator::new(parent.n);
    let mut dim = Exponent::zero();
    for (child, _, gamma) in edge_products(parent)? {
        let c = lookup(&child)?;
        acc.absorb(&c);
        acc.absorb_gamma(&gamma, &c.dim);
        dim += &c.dim;
    }
    Ok(acc.finish(dim))
}

fn finalize(c: &Compact, label: &CellLabel) -> Result<()> {
    if let Some((m, e)) = c.shifts.iter().find(|(_, e)| e.is_negative()) {
        return Err(Error::NotIntegral(format!(
            "determinant of {label} has exponent {e} on (d{m:+})"
        )));
    }
    if let Some((p, e)) = c.primes.iter().find(|(_, e)| e.is_negative()) {
        return Err(Error::NotIntegral(format!(
            "determinant of {label} has unit exponent {e} on prime {p}"
        )));
    }
    Ok(())
}

/// Memo table for [`gram_det`], safe to share between threads.
#[derive(Default)]
pub struct GramEngine {
    memo: RwLock<HashMap<CellLabel, Arc<Compact>>>,
}

impl GramEngine {
    pub fn new() -> Self {
        Self::default()
    }

    fn compact(&self, c: &CellLabel) -> Result<Arc<Compact>> {
        if let Some(v) = self.memo.read().expect("memo lock").get(c) {
            return Ok(v.clone());
        }
        let value = Arc::new(combine(c, &mut |child| self.compact(child))?);
        finalize(&value, c)?;
        self.memo
            .write()
            .expect("memo lock")
            .insert(c.clone(), value.clone());
        Ok(value)
    }

    pub fn gram_det(&self, c: &CellLabel) -> Result<GramResult> {
        let c = CellLabel::new(c.n, c.f, c.shape.clone())?;
        if c.n == 0 {
            return Err(Error::InvalidLabel("n must be at least 1".into()));
        }
        Ok(self.compact(&c)?.to_result(c))
    }

    pub fn cached_labels(&self) -> usize {
        self.memo.read().expect("memo lock").len()
    }
}

fn global_engine() -> &'static GramEngine {
    static ENGINE: OnceLock<GramEngine> = OnceLock::new();
    ENGINE.get_or_init(GramEngine::new)
}

/// `det G_{f,λ}` as a factored polynomial, via the shared memo table.
pub fn gram_det(c: &CellLabel) -> Result<GramResult> {
    global_engine().gram_det(c)
}

/// Streams the determinant of every label with `n ≤ n_max`, level by level,
/// keeping only the previous level in memory. Labels within a level follow
/// [`cell_labels`]. `start` skips emitting the levels below it.
pub fn gram_det_table_with(
    n_max: usize,
    start: usize,
    emit: impl FnMut(GramResult) -> Result<()>,
) -> Result<()> {
    table_levels(1, HashMap::new(), n_max, start, emit)
}

/// Continues a table from a complete level `seed` (every label of one `n`),
/// emitting the levels above it up to `n_max`.
pub fn gram_det_table_resume(
    n_max: usize,
    seed: &[GramResult],
    emit: impl FnMut(GramResult) -> Result<()>,
) -> Result<()> {
    let Some(first) = seed.first() else {
        return gram_det_table_with(n_max, 1, emit);
    };
    let level = first.label.n;
    let mut prev = HashMap::new();
    for r in seed {
        if r.label.n != level {
            return Err(Error::LevelMismatch(r.label.n, level));
        }
        prev.insert(r.label.clone(), Arc::new(Compact::from_result(r)?));
    }
    if prev.len() != cell_labels(level).len() {
        return Err(Error::Precondition(format!("seed level {level} is incomplete")));
    }
    table_levels(level + 1, prev, n_max, level + 1, emit)
}

fn table_levels(
    from: usize,
    mut prev: HashMap<CellLabel, Arc<Compact>>,
    n_max: usize,
    start: usize,
    mut emit: impl FnMut(GramResult) -> Result<()>,
) -> Result<()> {
    for n in from..=n_max {
        let mut cur = HashMap::new();
        for label in cell_labels(n) {
            let value = combine(&label, &mut |child| {
                prev.get(child)
                    .cloned()
                    .ok_or_else(|| Error::InvalidLabel(format!("missing child {child}")))
            })?;
            finalize(&value, &label)?;
            if n >= start {
                emit(value.to_result(label.clone()))?;
            }
            cur.insert(label, Arc::new(value));
        }
        prev = cur;
    }
    Ok(())
}

pub fn gram_det_table(n_max: usize) -> Result<Vec<GramResult>> {
    let mut out = Vec::new();
    gram_det_table_with(n_max, 1, |r| {
        out.push(r);
        Ok(())
    })?;
    Ok(out)
}

/// The value of δ for a semisimplicity query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeltaSpec {
    Integer(BigInt),
    NonInteger,
}

/// `None` is characteristic zero.
pub type Characteristic = Option<u64>;

pub fn semisimple_check(n: usize, delta: &DeltaSpec, char_e: Characteristic) -> bool {
    if let Some(e) = char_e {
        let mut fact = BigUint::one();
        for k in 2..=n {
            fact *= BigUint::from(k);
        }
        if (fact % BigUint::from(e)).is_zero() {
            return false;
        }
    }
    let d = match delta {
        DeltaSpec::NonInteger => return true,
        DeltaSpec::Integer(d) => d.clone(),
    };
    let reduce = |x: BigInt| -> BigInt {
        match char_e {
            Some(e) => x.mod_floor(&BigInt::from(e)),
            None => x,
        }
    };
    let d = reduce(d);
    if d.is_zero() {
        return matches!(n, 1 | 3 | 5);
    }
    let ni = n as i64;
    let mut bad = Vec::new();
    for i in 1..=ni - 2 {
        bad.push(i);
        bad.push(-2 * i);
    }
    for j in (4 - ni)..=-1 {
        bad.push(j);
    }
    !bad.into_iter().any(|b| reduce(BigInt::from(b)) == d)
}

/// True iff some determinant at level `n` vanishes at `δ0`.
pub fn some_det_vanishes(n: usize, delta: &BigRational) -> Result<bool> {
    for c in cell_labels(n) {
        if gram_det(&c)?.det.vanishes_at(delta) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Integral `δ0` under the absolute bound, as `i64`.
pub fn small_integer(delta: &BigRational) -> Option<i64> {
    if delta.is_integer() && delta.abs() < rat(i64::MAX / 4) {
        delta.to_integer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational::ratio;

    fn label(n: usize, f: usize, s: &str) -> CellLabel {
        CellLabel::parse(n, f, s).unwrap()
    }

    fn lin(m: i64) -> DeltaScalar {
        DeltaScalar::linear(rat(1), rat(m))
    }

    #[test]
    fn removal_factors() {
        let g = gamma_remove_box(&label(2, 0, "2"), Node::new(1, 2)).unwrap();
        assert_eq!(g.value, DeltaScalar::from_int(2));
        assert_eq!(g.child, label(1, 0, "1"));
        let g = gamma_remove_box(&label(3, 1, "1"), Node::new(1, 1)).unwrap();
        assert_eq!(g.value, DeltaScalar::one());
        assert!(gamma_remove_box(&label(3, 1, "1"), Node::new(1, 2)).is_err());
    }

    #[test]
    fn addition_factors() {
        let g = gamma_add_box(&label(2, 1, "-"), Node::new(1, 1)).unwrap();
        assert_eq!(g.value, DeltaScalar::delta());
        let g = gamma_add_box(&label(3, 1, "1"), Node::new(1, 2)).unwrap();
        assert_eq!(g.value, &(&lin(-1) * &lin(2)) / &DeltaScalar::delta());
        let g = gamma_add_box(&label(3, 1, "1"), Node::new(2, 1)).unwrap();
        assert_eq!(g.value, &lin(-1) / &DeltaScalar::from_int(2));
        assert!(gamma_add_box(&label(3, 0, "2,1"), Node::new(1, 3)).is_err());
        assert!(gamma_add_box(&label(3, 1, "1"), Node::new(1, 1)).is_err());
    }

    #[test]
    fn value_matches_factored() {
        for n in 2..=7 {
            for c in cell_labels(n) {
                for g in gamma_factors(&c).unwrap() {
                    assert_eq!(g.factored.to_scalar().unwrap(), g.value, "{c} -> {}", g.child);
                }
            }
        }
    }

    #[test]
    fn small_determinants() {
        let d = gram_det(&label(2, 1, "-")).unwrap();
        assert_eq!(d.det, FactoredPoly::delta());
        let d = gram_det(&label(4, 1, "2")).unwrap();
        assert_eq!(d.det.to_string(), "64 * d^3 * (d-2)^2 * (d+4)");
        assert_eq!(d.dim, BigUint::from(6u32));
        let d = gram_det(&label(3, 1, "1")).unwrap();
        assert_eq!(d.det.to_string(), "(d-1)^2 * (d+2)");
        let d = gram_det(&label(1, 0, "1")).unwrap();
        assert_eq!(d.det, FactoredPoly::one());
        assert!(gram_det(&CellLabel { n: 3, f: 1, shape: Partition::empty() }).is_err());
    }

    #[test]
    fn table_matches_memo() {
        let table = gram_det_table(6).unwrap();
        assert_eq!(table.len(), (1..=6).map(|n| cell_labels(n).len()).sum::<usize>());
        for r in &table {
            assert_eq!(gram_det(&r.label).unwrap(), *r);
        }
        assert_eq!(table[0].det, FactoredPoly::one());
    }

    #[test]
    fn resume_continues_table() {
        let full = gram_det_table(8).unwrap();
        let seed: Vec<_> = full.iter().filter(|r| r.label.n == 5).cloned().collect();
        let mut rest = Vec::new();
        gram_det_table_resume(8, &seed, |r| {
            rest.push(r);
            Ok(())
        })
        .unwrap();
        let tail: Vec<_> = full.into_iter().filter(|r| r.label.n > 5).collect();
        assert_eq!(rest, tail);
        assert!(gram_det_table_resume(8, &seed[1..], |_| Ok(())).is_err());
    }

    #[test]
    fn semisimplicity_examples() {
        let int = |d: i64| DeltaSpec::Integer(BigInt::from(d));
        assert!(!semisimple_check(3, &int(1), None));
        assert!(semisimple_check(5, &int(0), None));
        assert!(!semisimple_check(4, &int(0), None));
        assert!(semisimple_check(4, &DeltaSpec::NonInteger, None));
        assert!(!semisimple_check(4, &DeltaSpec::NonInteger, Some(3)));
        assert!(semisimple_check(3, &int(7), Some(5)));
        assert!(!semisimple_check(3, &int(6), Some(5)));
        assert!(small_integer(&ratio(1, 2)).is_none());
    }
}
