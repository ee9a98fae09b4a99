//! The Murphy basis `m_{s,t} = σ(b_s) m_λ b_t`.

use crate::combinat::{CellLabel, NodeKind, UpDownTableau};
use crate::diagram::brauer::BrauerDiagram;
use crate::diagram::element::{BrauerAlgebra, Coeff, Element};
use crate::error::{Error, Result};

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, first);
            out.push(p);
        }
    }
    out
}

/// `m_λ = e_1 e_3 ⋯ e_{2f−1} · Σ_{w ∈ S_λ} w`, the Young subgroup acting on
/// `2f+1, …, n` in row blocks.
pub fn murphy_cell_generator<C: Coeff>(alg: &BrauerAlgebra<C>, c: &CellLabel) -> Result<Element<C>> {
    let n = alg.n();
    if c.n != n {
        return Err(Error::LevelMismatch(c.n, n));
    }
    let mut ef = BrauerDiagram::identity(n);
    for i in 0..c.f {
        ef = ef.compose(&BrauerDiagram::arc(n, 2 * i + 1)).0;
    }
    let mut perms: Vec<Vec<usize>> = vec![(0..n).collect()];
    let mut start = 2 * c.f;
    for &row in c.shape.parts() {
        let block: Vec<usize> = (start..start + row).collect();
        let block_perms = permutations(&block);
        let mut next = Vec::with_capacity(perms.len() * block_perms.len());
        for w in &perms {
            for bp in &block_perms {
                let mut v = w.clone();
                for (src, &dst) in block.iter().zip(bp) {
                    v[*src] = dst;
                }
                next.push(v);
            }
        }
        perms = next;
        start += row;
    }
    let mut out = Element::zero(n);
    for w in perms {
        let d = ef.compose(&BrauerDiagram::from_permutation(&w)?).0;
        out.add_term(d, C::one());
    }
    Ok(out)
}

/// `b_t`, built step by step with each new factor on the left.
pub fn b_element<C: Coeff>(alg: &BrauerAlgebra<C>, t: &UpDownTableau) -> Result<Element<C>> {
    let n = alg.n();
    if t.n() != n {
        return Err(Error::LevelMismatch(t.n(), n));
    }
    let mut b = alg.one();
    for i in 2..=n {
        let fi = t.f_at(i);
        let (node, kind) = t.moved(i);
        let k = node.row;
        let factor = match kind {
            NodeKind::Addable => {
                let lam = t.step(i);
                let a_k = 2 * fi + (1..=k).map(|j| lam.part(j)).sum::<usize>();
                Element::from_diagram(alg.s_word(a_k, i)?)
            }
            NodeKind::Removable => {
                let mu = t.step(i - 1);
                let b_of = |m: usize| 2 * (fi - 1) + (1..=m).map(|j| mu.part(j)).sum::<usize>();
                let head = alg.s_word(2 * fi, i)?;
                let mut sum = Element::zero(n);
                for j in b_of(k - 1) + 1..=b_of(k) {
                    let d = head.compose(&alg.s_word(2 * fi - 1, j)?).0;
                    sum.add_term(d, C::one());
                }
                sum
            }
        };
        b = alg.mul(&factor, &b);
    }
    Ok(b)
}

pub fn murphy_basis_element<C: Coeff>(
    alg: &BrauerAlgebra<C>,
    s: &UpDownTableau,
    t: &UpDownTableau,
) -> Result<Element<C>> {
    if s.shape() != t.shape() || s.n() != t.n() {
        return Err(Error::InvalidTableau(format!("{s} and {t} have different shapes")));
    }
    let m = murphy_cell_generator(alg, &t.label())?;
    let bs = b_element(alg, s)?.sigma();
    let bt = b_element(alg, t)?;
    Ok(alg.product(&[&bs, &m, &bt]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::enumerate_updown;
    use num_rational::BigRational;

    fn alg(n: usize) -> BrauerAlgebra<BigRational> {
        BrauerAlgebra::new(n, BigRational::from_integer(7.into()))
    }

    #[test]
    fn cell_generators() {
        let a = alg(4);
        let m = murphy_cell_generator(&a, &CellLabel::parse(4, 1, "2").unwrap()).unwrap();
        let expect = a.mul(&a.e(1).unwrap(), &a.one().add(&a.s(3).unwrap()));
        assert_eq!(m, expect);
        let a = alg(2);
        let m = murphy_cell_generator(&a, &CellLabel::parse(2, 1, "-").unwrap()).unwrap();
        assert_eq!(m, a.e(1).unwrap());
        let m = murphy_cell_generator(&a, &CellLabel::parse(2, 0, "2").unwrap()).unwrap();
        assert_eq!(m, a.one().add(&a.s(1).unwrap()));
    }

    #[test]
    fn example_b_elements() {
        let a = alg(4);
        let ts = enumerate_updown(4, &"2".parse().unwrap()).unwrap();
        let s = |i: usize| a.s(i).unwrap();
        assert_eq!(b_element(&a, &ts[0]).unwrap(), a.one());
        assert_eq!(b_element(&a, &ts[2]).unwrap(), a.product(&[&s(2), &s(1)]));
        assert_eq!(b_element(&a, &ts[5]).unwrap(), a.product(&[&s(2), &s(3), &s(1)]));
        let m = murphy_basis_element(&a, &ts[0], &ts[2]).unwrap();
        let m_lambda = murphy_cell_generator(&a, &ts[0].label()).unwrap();
        assert_eq!(m, a.product(&[&m_lambda, &s(2), &s(1)]));
        let m53 = murphy_basis_element(&a, &ts[4], &ts[2]).unwrap();
        let m35 = murphy_basis_element(&a, &ts[2], &ts[4]).unwrap();
        assert_eq!(m53.sigma(), m35);
    }
}
