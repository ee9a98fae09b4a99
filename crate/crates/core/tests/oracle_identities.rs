mod common;

use std::collections::{BTreeMap, BTreeSet};

use brauer_core::combinat::{cell_labels, enumerate_updown, hat_tilde, partitions_of};
use brauer_core::diagram::oracle::{
    express_in_murphy_basis, f_idempotent_factor, f_st_element, gram_matrix_oracle, MurphyBasis,
};
use brauer_core::ring::rational::determinant;
use brauer_core::seminormal::{class_traces, transposition_case, TranspositionCase};
use brauer_core::{gram_det, BrauerAlgebra, CellLabel, Partition};
use num_rational::BigRational;
use num_traits::{One, Zero};

use common::*;

const DELTAS: [i64; 3] = [11, -13, 17];

#[test]
fn presentation_relations_up_to_five() {
    for d in DELTAS {
        for n in 1..=5 {
            assert_eq!(presentation_failures(n, &rat(d)), Vec::<String>::new(), "n={n} delta={d}");
        }
    }
}

#[test]
fn jucys_murphy_relations_up_to_five() {
    for d in [11, -9] {
        for n in 1..=5 {
            assert_eq!(jm_failures(n, &rat(d)), Vec::<String>::new(), "n={n} delta={d}");
        }
    }
}

#[test]
fn jm_action_is_triangular() {
    for n in 1..=4 {
        for c in cell_labels(n) {
            assert_eq!(jm_triangularity_failures(&c, &rat(9)), Vec::<String>::new());
        }
    }
}

#[test]
fn gram_matrices_are_symmetric() {
    for n in 1..=5 {
        for c in cell_labels(n) {
            let g = gram_matrix_oracle(&c, &rat(-11)).unwrap();
            for (i, row) in g.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    assert_eq!(x, &g[j][i], "{c} ({i},{j})");
                }
            }
        }
    }
}

#[test]
fn orthogonal_basis_up_to_five() {
    for n in 1..=5 {
        for c in cell_labels(n) {
            assert_eq!(orthogonal_failures(&orthogonal(&c, &rat(13))), Vec::<String>::new());
        }
    }
}

#[test]
fn wedderburn_idempotents_up_to_four() {
    for n in 1..=4 {
        assert_eq!(wedderburn_failures(n, &rat(11)), Vec::<String>::new(), "n={n}");
    }
}

#[test]
fn fst_products_in_one_cell() {
    // products f_st f_uv inside Δ(1,(1)) and across to Δ(0,(2,1)) at n = 3
    let d = rat(7);
    let a = BrauerAlgebra::new(3, d.clone());
    let c = label(3, 1, "1");
    let data = orthogonal(&c, &d);
    let ts = &data.tableaux;
    let f: BTreeMap<(usize, usize), _> = (0..ts.len())
        .flat_map(|s| (0..ts.len()).map(move |t| (s, t)))
        .map(|(s, t)| ((s, t), f_st_element(&ts[s], &ts[t], &d).unwrap()))
        .collect();
    for (&(s, t), fst) in &f {
        for (&(u, v), fuv) in &f {
            let prod = a.mul(fst, fuv);
            if t == u {
                assert_eq!(prod, f[&(s, v)].scale(&data.norms[t]), "f_{s}{t} f_{u}{v}");
            } else {
                assert!(prod.is_zero(), "f_{s}{t} f_{u}{v}");
            }
        }
        for k in 1..=3 {
            let ct = ts[t].content(k).unwrap().evaluate(&d);
            assert_eq!(a.mul(fst, &a.jm_element(k).unwrap()), fst.scale(&ct));
        }
        for other in cell_labels(3) {
            for u in enumerate_updown(3, &other.shape).unwrap() {
                let got = a.mul(fst, &f_idempotent_factor(&u, &d).unwrap());
                if u == ts[t] {
                    assert_eq!(&got, fst);
                } else {
                    assert!(got.is_zero());
                }
            }
        }
    }
    let other = label(3, 0, "2,1");
    let us = enumerate_updown(3, &other.shape).unwrap();
    let cross = f_st_element(&us[0], &us[1], &d).unwrap();
    assert!(a.mul(&f[&(0, 1)], &cross).is_zero());
}

#[test]
fn f_basis_spans_level_three() {
    let d = rat(9);
    let mut rows = Vec::new();
    for c in cell_labels(3) {
        let ts = enumerate_updown(3, &c.shape).unwrap();
        for s in &ts {
            for t in &ts {
                let e = express_in_murphy_basis(&f_st_element(s, t, &d).unwrap()).unwrap();
                rows.push(e.coefficients.into_iter().flat_map(|(_, m)| m.into_iter().flatten()).collect::<Vec<_>>());
            }
        }
    }
    assert_eq!(rows.len(), 15);
    assert!(!determinant(&rows).is_zero());
}

#[test]
fn norm_recursion_through_hat_and_tilde() {
    for d in [9, -11] {
        let d = rat(d);
        for n in 2..=4 {
            for c in cell_labels(n) {
                let data = orthogonal(&c, &d);
                for (ti, t) in data.tableaux.iter().enumerate() {
                    let (hat, tilde) = hat_tilde(t).unwrap();
                    let mu = hat.label();
                    let lower = orthogonal(&mu, &d);
                    let n_hat = &lower.norms[lower.index_of(&hat).unwrap()];
                    let n_tilde = &data.norms[data.index_of(&tilde).unwrap()];
                    let base = &lower.norms[0];
                    let expect_base = BigRational::from_integer(mu.shape.factorial_product().into())
                        * num_traits::pow(d.clone(), mu.f);
                    assert_eq!(base, &expect_base, "{mu}");
                    assert_eq!(&data.norms[ti] * base, n_hat * n_tilde, "{t}");
                }
            }
        }
    }
}

#[test]
fn norm_ratio_across_transpositions() {
    let d = rat(11);
    let mut checked = 0;
    for n in 2..=4 {
        for c in cell_labels(n) {
            let data = orthogonal(&c, &d);
            for (ti, t) in data.tableaux.iter().enumerate() {
                for k in 1..n {
                    if t.step(k - 1) == t.step(k + 1) {
                        continue;
                    }
                    if let TranspositionCase::Lower(u) = transposition_case(t, k).unwrap() {
                        let gap = t.content(k + 1).unwrap().evaluate(&d) - t.content(k).unwrap().evaluate(&d);
                        let ratio = BigRational::one() - BigRational::one() / (&gap * &gap);
                        let ui = data.index_of(&u).unwrap();
                        assert_eq!(data.norms[ui], ratio * &data.norms[ti], "{t} k={k}");
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn class_traces_equal_delta() {
    for d in [9, -13] {
        for n in 2..=4 {
            for c in cell_labels(n) {
                for (k, t, trace) in class_traces(&c, &rat(d)).unwrap() {
                    assert_eq!(trace, rat(d), "{c} {t} k={k}");
                }
            }
        }
    }
}

/// Gram determinant of James's standard polytabloids for `shape`, with the
/// tabloid basis taken orthonormal.
fn polytabloid_gram_det(shape: &Partition) -> BigRational {
    let rows = shape.parts();
    let n = shape.size();
    let mut tableaux: Vec<Vec<Vec<usize>>> = Vec::new();
    fn fill(shape: &[usize], t: &mut Vec<Vec<usize>>, next: usize, n: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if next > n {
            out.push(t.clone());
            return;
        }
        for i in 0..shape.len() {
            if t[i].len() < shape[i] && (i == 0 || t[i - 1].len() > t[i].len()) {
                t[i].push(next);
                fill(shape, t, next + 1, n, out);
                t[i].pop();
            }
        }
    }
    fill(rows, &mut vec![Vec::new(); rows.len()], 1, n, &mut tableaux);
    type Tabloid = Vec<BTreeSet<usize>>;
    let polytabloid = |t: &Vec<Vec<usize>>| -> BTreeMap<Tabloid, i64> {
        let cols: Vec<Vec<usize>> = (0..rows[0])
            .map(|j| t.iter().filter_map(|r| r.get(j).copied()).collect())
            .collect();
        let mut out = BTreeMap::new();
        let mut stack: Vec<(usize, Vec<usize>, i64)> = vec![(0, (0..=n).collect(), 1)];
        while let Some((j, map, sign)) = stack.pop() {
            if j == cols.len() {
                let tab: Tabloid = t.iter().map(|r| r.iter().map(|&x| map[x]).collect()).collect();
                *out.entry(tab).or_insert(0) += sign;
                continue;
            }
            for (perm, psign) in signed_permutations(&cols[j]) {
                let mut m = map.clone();
                for (&a, &b) in cols[j].iter().zip(&perm) {
                    m[a] = b;
                }
                stack.push((j + 1, m, sign * psign));
            }
        }
        out
    };
    let ps: Vec<_> = tableaux.iter().map(polytabloid).collect();
    let g: Vec<Vec<BigRational>> = ps
        .iter()
        .map(|a| {
            ps.iter()
                .map(|b| rat(a.iter().map(|(k, v)| v * b.get(k).copied().unwrap_or(0)).sum()))
                .collect()
        })
        .collect();
    determinant(&g)
}

fn signed_permutations(items: &[usize]) -> Vec<(Vec<usize>, i64)> {
    if items.len() <= 1 {
        return vec![(items.to_vec(), 1)];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(i);
        let sign = if i % 2 == 0 { 1 } else { -1 };
        for (mut p, s) in signed_permutations(&rest) {
            p.insert(0, first);
            out.push((p, s * sign));
        }
    }
    out
}

#[test]
fn symmetric_group_cells_match_polytabloid_forms() {
    // the row-symmetrizer cell of λ carries the polytabloid form of λ'
    for n in 1..=6 {
        for shape in partitions_of(n) {
            let c = CellLabel::new(n, 0, shape.clone()).unwrap();
            let recursion = gram_det(&c).unwrap().det.evaluate(&rat(1000)).unwrap();
            let classical = polytabloid_gram_det(&shape.conjugate());
            assert_eq!(recursion, classical, "{c}");
            if n <= 5 {
                let oracle = determinant(&gram_matrix_oracle(&c, &rat(11)).unwrap());
                assert_eq!(oracle, classical, "{c}");
            }
        }
    }
}

#[test]
fn basis_sizes() {
    let mut double_fact = 1u64;
    for n in 1..=6 {
        double_fact *= 2 * n as u64 - 1;
        let basis = MurphyBasis::for_level(n).unwrap();
        let total: usize = basis.cells().iter().map(|c| c.dim() * c.dim()).sum();
        assert_eq!(total as u64, double_fact);
    }
}
