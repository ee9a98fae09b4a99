//! Brauer diagrams: perfect matchings on `n` top and `n` bottom vertices.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_N: usize = 16;

/// Vertices `0..n` are the top row, `n..2n` the bottom row, both left to
/// right. `partner[v]` is the vertex joined to `v`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrauerDiagram {
    n: u8,
    partner: [u8; 2 * MAX_N],
}

impl BrauerDiagram {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_N, "at most {MAX_N} strands");
        let mut partner = [0u8; 2 * MAX_N];
        for i in 0..n {
            partner[i] = (n + i) as u8;
            partner[n + i] = i as u8;
        }
        BrauerDiagram { n: n as u8, partner }
    }

    /// From a partner table of length `2n`.
    pub fn from_partners(partners: &[usize]) -> Result<Self> {
        let m = partners.len();
        if !m.is_multiple_of(2) || m > 2 * MAX_N {
            return Err(Error::Precondition(format!("bad vertex count {m}")));
        }
        let mut partner = [0u8; 2 * MAX_N];
        for (v, &p) in partners.iter().enumerate() {
            if p >= m || p == v || partners[p] != v {
                return Err(Error::Precondition(format!("not a perfect matching: {partners:?}")));
            }
            partner[v] = p as u8;
        }
        Ok(BrauerDiagram {
            n: (m / 2) as u8,
            partner,
        })
    }

    /// From edges on vertices `1..=2n`, top `1..=n`, bottom `n+1..=2n`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut partners = vec![usize::MAX; 2 * n];
        for &(a, b) in edges {
            if a == 0 || b == 0 || a > 2 * n || b > 2 * n {
                return Err(Error::Precondition(format!("vertex out of range in {edges:?}")));
            }
            partners[a - 1] = b - 1;
            partners[b - 1] = a - 1;
        }
        if partners.contains(&usize::MAX) || edges.len() != n {
            return Err(Error::Precondition(format!("not a perfect matching: {edges:?}")));
        }
        Self::from_partners(&partners)
    }

    /// The permutation diagram joining top `i` to bottom `w[i]` (0-based).
    pub fn from_permutation(w: &[usize]) -> Result<Self> {
        let n = w.len();
        let mut seen = vec![false; n];
        for &x in w {
            if x >= n || seen[x] {
                return Err(Error::Precondition(format!("not a permutation: {w:?}")));
            }
            seen[x] = true;
        }
        let mut partners = vec![0; 2 * n];
        for (i, &x) in w.iter().enumerate() {
            partners[i] = n + x;
            partners[n + x] = i;
        }
        Self::from_partners(&partners)
    }

    /// `s_i`, swapping strands `i` and `i+1` (1-based).
    pub fn transposition(n: usize, i: usize) -> Self {
        let mut w: Vec<usize> = (0..n).collect();
        w.swap(i - 1, i);
        Self::from_permutation(&w).expect("valid")
    }

    /// `e_i`: arcs `{i, i+1}` on top and bottom (1-based).
    pub fn arc(n: usize, i: usize) -> Self {
        Self::arc_pair(n, i, i + 1)
    }

    /// Arcs `{a, b}` on both rows, vertical strands elsewhere (1-based).
    pub fn arc_pair(n: usize, a: usize, b: usize) -> Self {
        let mut d = Self::identity(n);
        let (a, b) = (a - 1, b - 1);
        d.partner[a] = b as u8;
        d.partner[b] = a as u8;
        d.partner[n + a] = (n + b) as u8;
        d.partner[n + b] = (n + a) as u8;
        d
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn partner(&self, v: usize) -> usize {
        self.partner[v] as usize
    }

    /// Edges as sorted 1-based pairs, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..2 * self.n())
            .filter(|&v| v < self.partner(v))
            .map(|v| (v + 1, self.partner(v) + 1))
            .collect()
    }

    /// Number of arcs joining two top vertices.
    pub fn top_arcs(&self) -> usize {
        let n = self.n();
        (0..n).filter(|&v| self.partner(v) < n && v < self.partner(v)).count()
    }

    pub fn is_permutation(&self) -> bool {
        self.top_arcs() == 0
    }

    /// For a permutation diagram, the bottom position of each top strand.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        let n = self.n();
        self.is_permutation()
            .then(|| (0..n).map(|i| self.partner(i) - n).collect())
    }

    /// Top-to-bottom reflection.
    pub fn flip(&self) -> Self {
        let n = self.n();
        let swap = |v: usize| if v < n { v + n } else { v - n };
        let mut partner = [0u8; 2 * MAX_N];
        for v in 0..2 * n {
            partner[swap(v)] = swap(self.partner(v)) as u8;
        }
        BrauerDiagram { n: self.n, partner }
    }

    /// Stacks `self` above `other`, returning the product diagram and the
    /// number of closed loops formed in the middle row.
    pub fn compose(&self, other: &BrauerDiagram) -> (BrauerDiagram, usize) {
        debug_assert_eq!(self.n, other.n);
        let n = self.n();
        // Outer vertices: 0..n top of self, n..2n bottom of other.
        // Middle vertex j is bottom j of self and top j of other.
        let mut partner = [0u8; 2 * MAX_N];
        let mut middle_seen = [false; MAX_N];
        let mut done = [false; 2 * MAX_N];
        for start in 0..2 * n {
            if done[start] {
                continue;
            }
            // Walk from an outer vertex until we exit at another one.
            let (mut in_self, mut v) = if start < n {
                (true, start)
            } else {
                (false, start)
            };
            let end = loop {
                if in_self {
                    let p = self.partner(v);
                    if p < n {
                        break p;
                    }
                    let j = p - n;
                    middle_seen[j] = true;
                    in_self = false;
                    v = j;
                } else {
                    let p = other.partner(v);
                    if p >= n {
                        break p;
                    }
                    middle_seen[p] = true;
                    in_self = true;
                    v = n + p;
                }
            };
            partner[start] = end as u8;
            partner[end] = start as u8;
            done[start] = true;
            done[end] = true;
        }
        let mut loops = 0;
        for j0 in 0..n {
            if middle_seen[j0] {
                continue;
            }
            loops += 1;
            // Follow the cycle: bottom of self then top of other, alternately.
            let mut j = j0;
            loop {
                middle_seen[j] = true;
                let p = self.partner(n + j) - n;
                middle_seen[p] = true;
                j = other.partner(p);
                if j == j0 {
                    break;
                }
            }
        }
        (BrauerDiagram { n: self.n, partner }, loops)
    }

    /// Every diagram with exactly `f` arcs on each row, in a fixed order.
    pub fn all_with_arcs(n: usize, f: usize) -> Vec<BrauerDiagram> {
        let mut out = Vec::new();
        let mut partners = vec![usize::MAX; 2 * n];
        fill(n, f, 0, &mut partners, &mut out);
        out
    }

    /// All `(2n−1)!!` diagrams on `n` strands.
    pub fn all(n: usize) -> Vec<BrauerDiagram> {
        (0..=n / 2).flat_map(|f| Self::all_with_arcs(n, f)).collect()
    }
}

fn fill(n: usize, f: usize, v: usize, partners: &mut Vec<usize>, out: &mut Vec<BrauerDiagram>) {
    let Some(v) = (v..2 * n).find(|&u| partners[u] == usize::MAX) else {
        let d = BrauerDiagram::from_partners(partners).expect("matching");
        if d.top_arcs() == f {
            out.push(d);
        }
        return;
    };
    let top_used = (0..n).filter(|&u| partners[u] != usize::MAX && partners[u] < n).count() / 2;
    let bottom_used = (n..2 * n)
        .filter(|&u| partners[u] != usize::MAX && partners[u] >= n)
        .count()
        / 2;
    for w in v + 1..2 * n {
        if partners[w] != usize::MAX {
            continue;
        }
        let same_top = v < n && w < n;
        let same_bottom = v >= n && w >= n;
        if (same_top && top_used == f) || (same_bottom && bottom_used == f) {
            continue;
        }
        partners[v] = w;
        partners[w] = v;
        fill(n, f, v + 1, partners, out);
        partners[v] = usize::MAX;
        partners[w] = usize::MAX;
    }
}

impl fmt::Debug for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram{:?}", self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loop_rule() {
        let e = BrauerDiagram::arc(2, 1);
        assert_eq!(e.compose(&e), (e, 1));
        let s = BrauerDiagram::transposition(2, 1);
        assert_eq!(s.compose(&s), (BrauerDiagram::identity(2), 0));
        let e1 = BrauerDiagram::arc(3, 1);
        let e2 = BrauerDiagram::arc(3, 2);
        let (x, l1) = e1.compose(&e2);
        let (y, l2) = x.compose(&e1);
        assert_eq!((y, l1 + l2), (e1, 0));
    }

    #[test]
    fn counts() {
        assert_eq!(BrauerDiagram::all(3).len(), 15);
        assert_eq!(BrauerDiagram::all(4).len(), 105);
        assert_eq!(BrauerDiagram::all_with_arcs(5, 1).len(), 600);
        assert_eq!(BrauerDiagram::all_with_arcs(5, 2).len(), 225);
    }

    #[test]
    fn right_action_on_strands() {
        // top i goes to bottom (i)w; products compose left to right.
        let s1 = BrauerDiagram::transposition(3, 1);
        let s2 = BrauerDiagram::transposition(3, 2);
        let (p, _) = s1.compose(&s2);
        assert_eq!(p.as_permutation().unwrap(), vec![2, 0, 1]);
        assert_eq!(s1.flip(), s1);
        let (q, _) = s2.compose(&s1);
        assert_eq!(p.flip(), q);
    }

    #[test]
    fn edges_round_trip() {
        let d = BrauerDiagram::arc(4, 2);
        assert_eq!(d.edges(), vec![(1, 5), (2, 3), (4, 8), (6, 7)]);
        assert_eq!(BrauerDiagram::from_edges(4, &d.edges()).unwrap(), d);
        assert!(BrauerDiagram::from_edges(2, &[(1, 2)]).is_err());
    }
}
