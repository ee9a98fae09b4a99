#![allow(dead_code)]

use brauer_core::combinat::{cell_labels, cell_order_lt};
use brauer_core::diagram::oracle::{
    f_idempotent_factor, module_action_oracle, orthogonal_vectors_oracle, Matrix, OrthogonalData,
};
use brauer_core::diagram::murphy_basis_element;
use brauer_core::ring::rational::format_rational;
use brauer_core::{BrauerAlgebra, CellLabel, Element, UpDownTableau};
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Alg = BrauerAlgebra<BigRational>;
pub type Elt = Element<BigRational>;

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn label(n: usize, f: usize, s: &str) -> CellLabel {
    CellLabel::parse(n, f, s).unwrap()
}

fn check(out: &mut Vec<String>, ok: bool, what: impl FnOnce() -> String) {
    if !ok {
        out.push(what());
    }
}

/// The defining relations of `B_n(δ)` on generators; returns the failures.
pub fn presentation_failures(n: usize, delta: &BigRational) -> Vec<String> {
    let a = Alg::new(n, delta.clone());
    let s = |i| a.s(i).unwrap();
    let e = |i| a.e(i).unwrap();
    let m = |x: &[&Elt]| a.product(x);
    let one = a.one();
    let mut out = Vec::new();
    for i in 1..n {
        check(&mut out, m(&[&s(i), &s(i)]) == one, || format!("s{i}^2"));
        check(&mut out, m(&[&e(i), &e(i)]) == e(i).scale(delta), || format!("e{i}^2"));
        check(&mut out, m(&[&s(i), &e(i)]) == e(i), || format!("s{i}e{i}"));
        check(&mut out, m(&[&e(i), &s(i)]) == e(i), || format!("e{i}s{i}"));
        for j in 1..n {
            if i.abs_diff(j) <= 1 {
                continue;
            }
            check(&mut out, m(&[&s(i), &s(j)]) == m(&[&s(j), &s(i)]), || format!("s{i}s{j}"));
            check(&mut out, m(&[&s(i), &e(j)]) == m(&[&e(j), &s(i)]), || format!("s{i}e{j}"));
            check(&mut out, m(&[&e(i), &e(j)]) == m(&[&e(j), &e(i)]), || format!("e{i}e{j}"));
        }
    }
    for k in 1..n.saturating_sub(1) {
        let (sk, sk1, ek, ek1) = (s(k), s(k + 1), e(k), e(k + 1));
        check(&mut out, m(&[&sk, &sk1, &sk]) == m(&[&sk1, &sk, &sk1]), || format!("braid {k}"));
        check(&mut out, m(&[&ek, &ek1, &ek]) == ek, || format!("e{k}e{}e{k}", k + 1));
        check(&mut out, m(&[&ek1, &ek, &ek1]) == ek1, || format!("e{}e{k}e{}", k + 1, k + 1));
        check(&mut out, m(&[&sk, &ek1, &ek]) == m(&[&sk1, &ek]), || format!("s{k}e{}e{k}", k + 1));
        check(&mut out, m(&[&ek1, &ek, &sk1]) == m(&[&ek1, &sk]), || format!("e{}e{k}s{}", k + 1, k + 1));
    }
    out
}

/// Relations between generators and the Jucys-Murphy elements.
pub fn jm_failures(n: usize, delta: &BigRational) -> Vec<String> {
    let a = Alg::new(n, delta.clone());
    let x: Vec<Elt> = (1..=n).map(|i| a.jm_element(i).unwrap()).collect();
    let x = |i: usize| &x[i - 1];
    let one = a.one();
    let mut out = Vec::new();
    for i in 1..n {
        let (si, ei) = (a.s(i).unwrap(), a.e(i).unwrap());
        let ei_minus_1 = ei.sub(&one);
        for j in 1..=n {
            if j == i || j == i + 1 {
                continue;
            }
            check(&mut out, a.mul(&ei, x(j)) == a.mul(x(j), &ei), || format!("(a) e{i} x{j}"));
            check(&mut out, a.mul(&si, x(j)) == a.mul(x(j), &si), || format!("(b) s{i} x{j}"));
        }
        let c = a.mul(&si, x(i)).sub(&a.mul(x(i + 1), &si));
        check(&mut out, c == ei_minus_1, || format!("(c) i={i}"));
        let d = a.mul(x(i), &si).sub(&a.mul(&si, x(i + 1)));
        check(&mut out, d == ei_minus_1, || format!("(d) i={i}"));
        let sum = x(i).add(x(i + 1));
        check(&mut out, a.mul(&ei, &sum).is_zero(), || format!("(e) i={i}"));
        check(&mut out, a.mul(&sum, &ei).is_zero(), || format!("(f) i={i}"));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            check(&mut out, a.mul(x(i), x(j)) == a.mul(x(j), x(i)), || format!("(g) x{i}x{j}"));
        }
    }
    out
}

/// `u ⊵ t` stepwise in the cell order.
pub fn dominates_eq(u: &UpDownTableau, t: &UpDownTableau) -> bool {
    (1..=t.n()).all(|i| {
        let (a, b) = (t.truncate(i).label(), u.truncate(i).label());
        a == b || cell_order_lt(&a, &b).unwrap()
    })
}

/// `m_t x_k = c_t(k) m_t + Σ_{u ▷ t}` on the cell module of `c`.
pub fn jm_triangularity_failures(c: &CellLabel, delta: &BigRational) -> Vec<String> {
    let a = Alg::new(c.n, delta.clone());
    let ts = brauer_core::combinat::enumerate_updown(c.n, &c.shape).unwrap();
    let mut out = Vec::new();
    for k in 1..=c.n {
        let m = module_action_oracle(c, &a.jm_element(k).unwrap(), delta).unwrap();
        for (ti, t) in ts.iter().enumerate() {
            let ct = t.content(k).unwrap().evaluate(delta);
            check(&mut out, m[ti][ti] == ct, || format!("{c} {t} x{k} diagonal"));
            for (ui, u) in ts.iter().enumerate() {
                if ui != ti && !m[ti][ui].is_zero() {
                    check(&mut out, dominates_eq(u, t), || format!("{c} {t} x{k} hits {u}"));
                }
            }
        }
    }
    out
}

fn vec_mat(v: &[BigRational], m: &Matrix) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); m[0].len()];
    for (x, row) in v.iter().zip(m) {
        for (o, y) in out.iter_mut().zip(row) {
            *o += x * y;
        }
    }
    out
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

/// Orthogonal basis properties: unitriangular in the Murphy basis, JM
/// eigenvectors, and pairwise orthogonal.
pub fn orthogonal_failures(data: &OrthogonalData) -> Vec<String> {
    let c = &data.label;
    let d = data.tableaux.len();
    let mut out = Vec::new();
    for (ti, t) in data.tableaux.iter().enumerate() {
        let v = &data.vectors[ti];
        check(&mut out, v[ti].is_one(), || format!("{c} f_{t} leading coefficient"));
        for (si, s) in data.tableaux.iter().enumerate() {
            if si != ti && !v[si].is_zero() {
                check(&mut out, dominates_eq(s, t), || format!("{c} f_{t} involves m_{s}"));
            }
        }
        for k in 1..=c.n {
            let ct = t.content(k).unwrap().evaluate(&data.delta);
            let moved = vec_mat(v, &data.x_action[k - 1]);
            let want: Vec<BigRational> = v.iter().map(|x| x * &ct).collect();
            check(&mut out, moved == want, || format!("{c} f_{t} x{k} not an eigenvector"));
        }
        let gv = vec_mat(v, &data.gram);
        for s in 0..d {
            let ip = dot(&gv, &data.vectors[s]);
            if s == ti {
                check(&mut out, ip == data.norms[ti] && !ip.is_zero(), || format!("{c} norm of f_{t}"));
            } else {
                check(&mut out, ip.is_zero(), || {
                    format!("{c} <f_{t}, f_{}> = {}", data.tableaux[s], format_rational(&ip))
                });
            }
        }
    }
    out
}

pub fn orthogonal(c: &CellLabel, delta: &BigRational) -> OrthogonalData {
    orthogonal_vectors_oracle(c, delta).unwrap()
}

/// `E_t = f_tt / ⟨f_t,f_t⟩` for every tableau at level `n`.
pub fn primitive_idempotents(n: usize, delta: &BigRational) -> Vec<(UpDownTableau, Elt)> {
    let a = Alg::new(n, delta.clone());
    let mut out = Vec::new();
    for c in cell_labels(n) {
        let data = orthogonal(&c, delta);
        for (ti, t) in data.tableaux.iter().enumerate() {
            let f = f_idempotent_factor(t, delta).unwrap();
            let m = murphy_basis_element(&a, t, t).unwrap();
            let ftt = a.product(&[&f, &m, &f]);
            out.push((t.clone(), ftt.scale(&(BigRational::one() / &data.norms[ti]))));
        }
    }
    out
}

pub fn wedderburn_failures(n: usize, delta: &BigRational) -> Vec<String> {
    let a = Alg::new(n, delta.clone());
    let es = primitive_idempotents(n, delta);
    let mut out = Vec::new();
    let mut total = a.zero();
    for (i, (t, et)) in es.iter().enumerate() {
        total = total.add(et);
        for (j, (s, es_)) in es.iter().enumerate() {
            let p = a.mul(et, es_);
            if i == j {
                check(&mut out, &p == et, || format!("E_{t} not idempotent"));
            } else {
                check(&mut out, p.is_zero(), || format!("E_{t} E_{s} != 0"));
            }
        }
    }
    check(&mut out, total == a.one(), || format!("sum of E_t at n={n} is not 1"));
    out
}
