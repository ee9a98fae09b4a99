//! Partitions, nodes, updown tableaux and the branching graph of the
//! Brauer algebras.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::rational::{rat, ratio};
use crate::ring::DeltaScalar;

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Zero parts are dropped; anything not weakly decreasing is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, 1-indexed, zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        Partition {
            parts: (1..=width)
                .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
                .collect(),
        }
    }

    pub fn contains(&self, node: Node) -> bool {
        node.row >= 1 && node.col >= 1 && node.col <= self.part(node.row)
    }

    pub fn hook(&self, row: usize, col: usize) -> usize {
        let conj = self.conjugate();
        self.part(row) + conj.part(col) + 1 - row - col
    }

    /// `λ! = ∏ λ_i!`.
    pub fn factorial_product(&self) -> BigUint {
        self.parts
            .iter()
            .fold(BigUint::one(), |acc, &p| acc * factorial(p))
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn standard_count(&self) -> BigUint {
        let conj = self.conjugate();
        let mut hooks = BigUint::one();
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 1..=p {
                hooks *= BigUint::from(p + conj.part(j) - i - j);
            }
        }
        factorial(self.size()) / hooks
    }

    /// Adds a box at the end of row `row`; `None` if not addable.
    pub fn add_box(&self, row: usize) -> Option<Partition> {
        if row == 0 || row > self.len() + 1 || (row > 1 && self.part(row - 1) == self.part(row)) {
            return None;
        }
        let mut parts = self.parts.clone();
        if row == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Some(Partition { parts })
    }

    /// Removes the last box of row `row`; `None` if not removable.
    pub fn remove_box(&self, row: usize) -> Option<Partition> {
        if row == 0 || row > self.len() || self.part(row) == self.part(row + 1) {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[row - 1] -= 1;
        if parts[row - 1] == 0 {
            parts.pop();
        }
        Some(Partition { parts })
    }

    /// The box in which `self` and `other` differ, with its kind relative
    /// to `self`: addable if `other` has one more box.
    pub fn difference(&self, other: &Partition) -> Option<(Node, NodeKind)> {
        let len = self.len().max(other.len());
        let mut diff = None;
        for i in 1..=len {
            let (a, b) = (self.part(i), other.part(i));
            if a == b {
                continue;
            }
            if diff.is_some() || a.abs_diff(b) != 1 {
                return None;
            }
            diff = Some(if b > a {
                (Node::new(i, b), NodeKind::Addable)
            } else {
                (Node::new(i, a), NodeKind::Removable)
            });
        }
        diff
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// `"3,2,1"`, with `"-"` for the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidPartition(s.to_string()))?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// `(2m - 1)!!`, with `(-1)!! = 1`.
pub fn double_factorial_odd(m: usize) -> BigUint {
    (1..=m).fold(BigUint::one(), |acc, k| acc * BigUint::from(2 * k - 1))
}

/// A box `(row, col)`, both 1-indexed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Self {
        Node { row, col }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum NodeKind {
    Addable,
    Removable,
}

impl NodeKind {
    pub fn name(self) -> &'static str {
        match self {
            NodeKind::Addable => "addable",
            NodeKind::Removable => "removable",
        }
    }
}

/// The residue `sign·(δ−1)/2 + offset` of a node.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Content {
    pub sign: i64,
    pub offset: i64,
}

impl Content {
    pub fn of(node: Node, kind: NodeKind) -> Self {
        let d = node.col as i64 - node.row as i64;
        match kind {
            NodeKind::Addable => Content { sign: 1, offset: d },
            NodeKind::Removable => Content {
                sign: -1,
                offset: -d,
            },
        }
    }

    /// `(a, b)` with `self + other = a·δ + b`.
    pub fn plus(self, other: Content) -> (i64, i64) {
        let s = (self.sign + other.sign) / 2;
        (s, self.offset + other.offset - s)
    }

    /// `(a, b)` with `self − other = a·δ + b`.
    pub fn minus(self, other: Content) -> (i64, i64) {
        let s = (self.sign - other.sign) / 2;
        (s, self.offset - other.offset - s)
    }

    /// `(a, b)` with `2·self + 1 = a·δ + b`.
    pub fn doubled_plus_one(self) -> (i64, i64) {
        (self.sign, 2 * self.offset + 1 - self.sign)
    }

    pub fn to_scalar(self) -> DeltaScalar {
        DeltaScalar::linear(ratio(self.sign, 2), ratio(-self.sign, 2) + rat(self.offset))
    }

    pub fn evaluate(self, delta: &BigRational) -> BigRational {
        (delta - rat(1)) * ratio(self.sign, 2) + rat(self.offset)
    }
}

pub fn addable_nodes(lambda: &Partition) -> Vec<Node> {
    (1..=lambda.len() + 1)
        .filter(|&i| i == 1 || lambda.part(i - 1) > lambda.part(i))
        .map(|i| Node::new(i, lambda.part(i) + 1))
        .collect()
}

pub fn removable_nodes(lambda: &Partition) -> Vec<Node> {
    (1..=lambda.len())
        .filter(|&i| lambda.part(i) > lambda.part(i + 1))
        .map(|i| Node::new(i, lambda.part(i)))
        .collect()
}

pub fn node_kind(lambda: &Partition, p: Node) -> Option<NodeKind> {
    if addable_nodes(lambda).contains(&p) {
        Some(NodeKind::Addable)
    } else if removable_nodes(lambda).contains(&p) {
        Some(NodeKind::Removable)
    } else {
        None
    }
}

/// All partitions of `m`, in decreasing lexicographic order.
pub fn partitions_of(m: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    out
}

pub fn dominance_leq(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size(), mu.size()));
    }
    let len = lambda.len().max(mu.len());
    let (mut a, mut b) = (0, 0);
    for i in 1..=len {
        a += lambda.part(i);
        b += mu.part(i);
        if a > b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A pair `(f, λ)` with `λ ⊢ n − 2f`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct CellLabel {
    pub n: usize,
    pub f: usize,
    pub shape: Partition,
}

impl CellLabel {
    pub fn new(n: usize, f: usize, shape: Partition) -> Result<Self> {
        if 2 * f > n || shape.size() != n - 2 * f {
            return Err(Error::InvalidLabel(format!("n={n} f={f} lambda={shape}")));
        }
        Ok(CellLabel { n, f, shape })
    }

    pub fn parse(n: usize, f: usize, shape: &str) -> Result<Self> {
        Self::new(n, f, shape.parse()?)
    }
}

impl fmt::Display for CellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n, self.f, self.shape)
    }
}

/// All labels at level `n`: `f` ascending, shapes in decreasing lex order.
pub fn cell_labels(n: usize) -> Vec<CellLabel> {
    (0..=n / 2)
        .flat_map(|f| {
            partitions_of(n - 2 * f)
                .into_iter()
                .map(move |shape| CellLabel { n, f, shape })
        })
        .collect()
}

/// Strict cell order: smaller `f`, or equal `f` and strictly dominated shape.
pub fn cell_order_lt(a: &CellLabel, b: &CellLabel) -> Result<bool> {
    if a.n != b.n {
        return Err(Error::LevelMismatch(a.n, b.n));
    }
    if a.f != b.f {
        return Ok(a.f < b.f);
    }
    Ok(a.shape != b.shape && dominance_leq(&a.shape, &b.shape)?)
}

/// A total order on shapes at one level refining the cell order: smaller
/// `f` (larger shape) is lower, then lexicographic.
pub fn shape_total_cmp(a: &Partition, b: &Partition) -> Ordering {
    b.size().cmp(&a.size()).then_with(|| a.cmp(b))
}

pub fn cell_dim(c: &CellLabel) -> BigUint {
    let two_f = 2 * c.f;
    let choose = factorial(c.n) / (factorial(two_f) * factorial(c.n - two_f));
    choose * double_factorial_odd(c.f) * c.shape.standard_count()
}

/// Children of `c` in the branching graph, highest first.
pub fn branching_edges(c: &CellLabel) -> Vec<CellLabel> {
    if c.n == 0 {
        return Vec::new();
    }
    let mut out: Vec<CellLabel> = removable_nodes(&c.shape)
        .iter()
        .map(|p| CellLabel {
            n: c.n - 1,
            f: c.f,
            shape: c.shape.remove_box(p.row).expect("removable"),
        })
        .collect();
    if c.f >= 1 {
        out.extend(addable_nodes(&c.shape).iter().map(|p| CellLabel {
            n: c.n - 1,
            f: c.f - 1,
            shape: c.shape.add_box(p.row).expect("addable"),
        }));
    }
    out.sort_by(|a, b| shape_total_cmp(&b.shape, &a.shape));
    out
}

/// The node sets `R(λ)^{<p}`, `A(λ)^{<p}` (rows below `p`) and
/// `AR(λ)^{≥p}` (rows at or above `p`, both kinds).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RestrictedNodeSets {
    pub r_less: Vec<Node>,
    pub a_less: Vec<Node>,
    pub ar_geq: Vec<(Node, NodeKind)>,
}

pub fn restricted_node_sets(lambda: &Partition, p: Node) -> Result<RestrictedNodeSets> {
    if node_kind(lambda, p).is_none() {
        return Err(Error::WrongNode {
            row: p.row,
            col: p.col,
            expected: "addable or removable",
            shape: lambda.to_string(),
        });
    }
    let k = p.row;
    let adds = addable_nodes(lambda);
    let rems = removable_nodes(lambda);
    let mut ar_geq: Vec<(Node, NodeKind)> = rems
        .iter()
        .filter(|q| q.row <= k)
        .map(|&q| (q, NodeKind::Removable))
        .chain(
            adds.iter()
                .filter(|q| q.row <= k)
                .map(|&q| (q, NodeKind::Addable)),
        )
        .collect();
    ar_geq.sort_by_key(|(q, _)| *q);
    Ok(RestrictedNodeSets {
        r_less: rems.into_iter().filter(|q| q.row > k).collect(),
        a_less: adds.into_iter().filter(|q| q.row > k).collect(),
        ar_geq,
    })
}

pub fn node_content(lambda: &Partition, p: Node, kind: NodeKind) -> Result<DeltaScalar> {
    check_node(lambda, p, kind)?;
    Ok(Content::of(p, kind).to_scalar())
}

pub(crate) fn check_node(lambda: &Partition, p: Node, kind: NodeKind) -> Result<()> {
    let ok = match kind {
        NodeKind::Addable => addable_nodes(lambda).contains(&p),
        NodeKind::Removable => removable_nodes(lambda).contains(&p),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::WrongNode {
            row: p.row,
            col: p.col,
            expected: kind.name(),
            shape: lambda.to_string(),
        })
    }
}

/// A path `∅ = t_0, t_1, …, t_n` adding or removing one box per step.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UpDownTableau {
    steps: Vec<Partition>,
}

impl UpDownTableau {
    pub fn new(steps: Vec<Partition>) -> Result<Self> {
        if steps.first().is_none_or(|s| !s.is_empty()) {
            return Err(Error::InvalidTableau("must start at the empty partition".into()));
        }
        for (i, w) in steps.windows(2).enumerate() {
            if w[0].difference(&w[1]).is_none() {
                return Err(Error::InvalidTableau(format!(
                    "steps {i} and {} differ by more than one box",
                    i + 1
                )));
            }
        }
        Ok(UpDownTableau { steps })
    }

    pub fn parse(s: &str) -> Result<Self> {
        let steps = s
            .split(';')
            .map(str::parse)
            .collect::<Result<Vec<Partition>>>()?;
        Self::new(steps)
    }

    /// The tableau `t^λ`: `f` alternating add/remove pairs, then the rows of
    /// `λ` filled top to bottom.
    pub fn distinguished(c: &CellLabel) -> Self {
        let one = Partition { parts: vec![1] };
        let mut steps = vec![Partition::empty()];
        for _ in 0..c.f {
            steps.push(one.clone());
            steps.push(Partition::empty());
        }
        let mut cur = Partition::empty();
        for (i, &p) in c.shape.parts.iter().enumerate() {
            for _ in 0..p {
                cur = cur.add_box(i + 1).expect("row fill");
                steps.push(cur.clone());
            }
        }
        UpDownTableau { steps }
    }

    pub fn n(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn shape(&self) -> &Partition {
        self.steps.last().expect("nonempty")
    }

    pub fn steps(&self) -> &[Partition] {
        &self.steps
    }

    pub fn step(&self, i: usize) -> &Partition {
        &self.steps[i]
    }

    /// `f_j` with `t_j ⊢ j − 2 f_j`.
    pub fn f_at(&self, j: usize) -> usize {
        (j - self.steps[j].size()) / 2
    }

    pub fn label(&self) -> CellLabel {
        CellLabel {
            n: self.n(),
            f: self.f_at(self.n()),
            shape: self.shape().clone(),
        }
    }

    /// The box moved at step `k`, and whether it was added.
    pub fn moved(&self, k: usize) -> (Node, NodeKind) {
        let (node, kind) = self.steps[k - 1]
            .difference(&self.steps[k])
            .expect("validated");
        (node, kind)
    }

    /// Residue of step `k` as a [`Content`].
    pub fn content(&self, k: usize) -> Result<Content> {
        if k == 0 || k > self.n() {
            return Err(Error::IndexOutOfRange {
                index: k,
                min: 1,
                max: self.n(),
            });
        }
        let (node, kind) = self.moved(k);
        Ok(match kind {
            NodeKind::Addable => Content::of(node, NodeKind::Addable),
            NodeKind::Removable => Content::of(node, NodeKind::Removable),
        })
    }

    pub fn truncate(&self, m: usize) -> UpDownTableau {
        UpDownTableau {
            steps: self.steps[..=m].to_vec(),
        }
    }

    pub fn with_step(&self, k: usize, p: Partition) -> UpDownTableau {
        let mut steps = self.steps.clone();
        steps[k] = p;
        UpDownTableau { steps }
    }
}

impl fmt::Display for UpDownTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.steps.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(";"))
    }
}

/// Total order on tableaux of one shape: the last differing step decides,
/// and the higher shape there gives the higher tableau.
pub fn compare_tableaux(s: &UpDownTableau, t: &UpDownTableau) -> Ordering {
    for (a, b) in s.steps.iter().zip(&t.steps).rev() {
        match shape_total_cmp(a, b) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// All `n`-updown `λ`-tableaux, highest first, so `t^λ` comes first.
pub fn enumerate_updown(n: usize, lambda: &Partition) -> Result<Vec<UpDownTableau>> {
    if lambda.size() > n || !(n - lambda.size()).is_multiple_of(2) {
        return Err(Error::InvalidLabel(format!("n={n} lambda={lambda}")));
    }
    let c = CellLabel {
        n,
        f: (n - lambda.size()) / 2,
        shape: lambda.clone(),
    };
    let mut memo = HashMap::new();
    Ok(paths(&c, &mut memo)
        .iter()
        .map(|p| UpDownTableau { steps: p.clone() })
        .collect())
}

fn paths(c: &CellLabel, memo: &mut HashMap<CellLabel, Vec<Vec<Partition>>>) -> Vec<Vec<Partition>> {
    if c.n == 0 {
        return vec![vec![Partition::empty()]];
    }
    if let Some(v) = memo.get(c) {
        return v.clone();
    }
    let mut out = Vec::new();
    for child in branching_edges(c) {
        for mut p in paths(&child, memo) {
            p.push(c.shape.clone());
            out.push(p);
        }
    }
    memo.insert(c.clone(), out.clone());
    out
}

pub fn tableau_content(t: &UpDownTableau, k: usize) -> Result<DeltaScalar> {
    Ok(t.content(k)?.to_scalar())
}

/// Partitions one box away from both `a` and `b`, highest first.
fn common_neighbours(a: &Partition, b: &Partition) -> Vec<Partition> {
    let mut cands: Vec<Partition> = addable_nodes(a)
        .iter()
        .filter_map(|p| a.add_box(p.row))
        .chain(removable_nodes(a).iter().filter_map(|p| a.remove_box(p.row)))
        .filter(|m| m.difference(b).is_some())
        .collect();
    cands.sort_by(|x, y| shape_total_cmp(y, x));
    cands
}

/// Every `s` agreeing with `t` away from step `k`, including `t`.
pub fn k_equivalence_class(t: &UpDownTableau, k: usize) -> Result<Vec<UpDownTableau>> {
    if k == 0 || k >= t.n() {
        return Err(Error::IndexOutOfRange {
            index: k,
            min: 1,
            max: t.n().saturating_sub(1),
        });
    }
    Ok(common_neighbours(&t.steps[k - 1], &t.steps[k + 1])
        .into_iter()
        .map(|m| t.with_step(k, m))
        .collect())
}

/// The tableau `t s_k`, or `None` when the boxes at `k` and `k+1` share a
/// row or column.
pub fn apply_transposition(t: &UpDownTableau, k: usize) -> Result<Option<UpDownTableau>> {
    let class = k_equivalence_class(t, k)?;
    if t.steps[k - 1] == t.steps[k + 1] {
        return Err(Error::Precondition(format!(
            "steps {} and {} coincide in {t}",
            k - 1,
            k + 1
        )));
    }
    Ok(class.into_iter().find(|s| s != t))
}

/// `(t̂, t̃)`: the truncation to `n−1` steps and `t^μ` extended by `λ`.
pub fn hat_tilde(t: &UpDownTableau) -> Result<(UpDownTableau, UpDownTableau)> {
    let n = t.n();
    if n == 0 {
        return Err(Error::Precondition("hat_tilde needs n >= 1".into()));
    }
    let hat = t.truncate(n - 1);
    let mut tilde = UpDownTableau::distinguished(&hat.label());
    tilde.steps.push(t.shape().clone());
    Ok((hat, tilde))
}
