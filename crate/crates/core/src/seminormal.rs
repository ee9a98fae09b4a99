//! Closed-form seminormal coefficients on the orthogonal basis `f_t`, and a
//! harness comparing them with the diagram oracle.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::combinat::{
    apply_transposition, cell_order_lt, enumerate_updown, k_equivalence_class, CellLabel,
    NodeKind, UpDownTableau,
};
use crate::diagram::oracle::{orthogonal_vectors_oracle, OrthogonalData};
use crate::error::{Error, Result};
use crate::gram::{gamma_add_box, gamma_remove_box};
use crate::ring::rational::{format_rational, rat};
use crate::ring::DeltaScalar;

fn pair_scalar((a, b): (i64, i64)) -> DeltaScalar {
    DeltaScalar::linear(rat(a), rat(b))
}

fn check_k(t: &UpDownTableau, k: usize) -> Result<()> {
    if k == 0 || k >= t.n() {
        return Err(Error::IndexOutOfRange {
            index: k,
            min: 1,
            max: t.n().saturating_sub(1),
        });
    }
    Ok(())
}

fn folds_back(t: &UpDownTableau, k: usize) -> bool {
    t.step(k - 1) == t.step(k + 1)
}

/// `e_{tt}(k) = (2c_t(k)+1) ∏_{s ~k t, s ≠ t} (c_t(k)+c_s(k))/(c_t(k)−c_s(k))`,
/// defined when `t_{k−1} = t_{k+1}`.
pub fn e_diag_closed(t: &UpDownTableau, k: usize) -> Result<DeltaScalar> {
    check_k(t, k)?;
    if !folds_back(t, k) {
        return Err(Error::Precondition(format!(
            "e_tt({k}) needs steps {} and {} of {t} to agree",
            k - 1,
            k + 1
        )));
    }
    let ct = t.content(k)?;
    let mut out = pair_scalar(ct.doubled_plus_one());
    for s in k_equivalence_class(t, k)? {
        if &s == t {
            continue;
        }
        let cs = s.content(k)?;
        out = &out * &pair_scalar(ct.plus(cs)).try_div(&pair_scalar(ct.minus(cs)))?;
    }
    Ok(out)
}

/// How `s_k` moves `t` when `t_{k−1} ≠ t_{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TranspositionCase {
    SameRow,
    SameColumn,
    /// `t s_k ◁ t`
    Lower(UpDownTableau),
    /// `t s_k ▷ t`
    Higher(UpDownTableau),
}

pub fn transposition_case(t: &UpDownTableau, k: usize) -> Result<TranspositionCase> {
    check_k(t, k)?;
    let (p, _) = t.moved(k);
    let (q, _) = t.moved(k + 1);
    if p.row == q.row {
        return Ok(TranspositionCase::SameRow);
    }
    if p.col == q.col {
        return Ok(TranspositionCase::SameColumn);
    }
    let u = apply_transposition(t, k)?
        .ok_or_else(|| Error::InvalidTableau(format!("{t} s_{k} does not exist")))?;
    let ours = t.truncate(k).label();
    let theirs = u.truncate(k).label();
    if cell_order_lt(&theirs, &ours)? {
        Ok(TranspositionCase::Lower(u))
    } else if cell_order_lt(&ours, &theirs)? {
        Ok(TranspositionCase::Higher(u))
    } else {
        Err(Error::InvalidTableau(format!("{t} and {u} are incomparable at step {k}")))
    }
}

/// Coefficients of `f_t s_k` in the `f`-basis that have a closed form. For
/// `t_{k−1} = t_{k+1}` only the diagonal `(e_{tt}(k) − 1)/(2c_t(k))` is
/// returned.
pub fn s_action_closed(t: &UpDownTableau, k: usize) -> Result<Vec<(UpDownTableau, DeltaScalar)>> {
    check_k(t, k)?;
    let ct = t.content(k)?;
    if folds_back(t, k) {
        let e = e_diag_closed(t, k)?;
        let diag = (&e - &DeltaScalar::one()).try_div(&pair_scalar(ct.plus(ct)))?;
        return Ok(vec![(t.clone(), diag)]);
    }
    let gap = pair_scalar(t.content(k + 1)?.minus(ct));
    let inv = gap.inv()?;
    Ok(match transposition_case(t, k)? {
        TranspositionCase::SameRow => vec![(t.clone(), DeltaScalar::one())],
        TranspositionCase::SameColumn => vec![(t.clone(), -DeltaScalar::one())],
        TranspositionCase::Lower(u) => vec![(t.clone(), inv), (u, DeltaScalar::one())],
        TranspositionCase::Higher(u) => {
            let one = DeltaScalar::one();
            let c = (&(&gap + &one) * &(&gap - &one)).try_div(&(&gap * &gap))?;
            vec![(t.clone(), inv), (u, c)]
        }
    })
}

/// `⟨f_t, f_t⟩` as the product of `γ` along the path of `t`.
pub fn norm_closed(t: &UpDownTableau) -> Result<DeltaScalar> {
    let mut out = DeltaScalar::one();
    for i in 2..=t.n() {
        let parent = t.truncate(i).label();
        let (node, kind) = t.moved(i);
        let g = match kind {
            NodeKind::Addable => gamma_remove_box(&parent, node)?,
            NodeKind::Removable => gamma_add_box(&parent, node)?,
        };
        out = &out * &g.value;
    }
    Ok(out)
}

/// All closed-form data for one cell module.
#[derive(Clone, Debug)]
pub struct SeminormalCoeffs {
    pub label: CellLabel,
    pub tableaux: Vec<UpDownTableau>,
    /// `(t, k) ↦ e_{tt}(k)` where `t_{k−1} = t_{k+1}`.
    pub diag_e: HashMap<(usize, usize), DeltaScalar>,
    /// `(t, s, k) ↦ s_{ts}(k)`.
    pub s_coeffs: HashMap<(usize, usize, usize), DeltaScalar>,
    pub norms: Vec<DeltaScalar>,
}

pub fn seminormal_coeffs(c: &CellLabel) -> Result<SeminormalCoeffs> {
    let c = CellLabel::new(c.n, c.f, c.shape.clone())?;
    let tableaux = enumerate_updown(c.n, &c.shape)?;
    let index: HashMap<&UpDownTableau, usize> =
        tableaux.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut diag_e = HashMap::new();
    let mut s_coeffs = HashMap::new();
    let mut norms = Vec::with_capacity(tableaux.len());
    for (ti, t) in tableaux.iter().enumerate() {
        for k in 1..c.n {
            if folds_back(t, k) {
                diag_e.insert((ti, k), e_diag_closed(t, k)?);
            }
            for (s, v) in s_action_closed(t, k)? {
                s_coeffs.insert((ti, index[&s], k), v);
            }
        }
        norms.push(norm_closed(t)?);
    }
    Ok(SeminormalCoeffs {
        label: c,
        tableaux,
        diag_e,
        s_coeffs,
        norms,
    })
}

/// One comparison in a verification report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub check: String,
    pub cell: String,
    pub tableaux: Vec<String>,
    pub k: Option<usize>,
    pub closed_form: String,
    pub oracle: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
#[serde(transparent)]
pub struct VerificationReport {
    pub records: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.pass)
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.records.extend(other.records);
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

struct Recorder<'a> {
    cell: String,
    data: &'a OrthogonalData,
    out: Vec<CheckRecord>,
}

impl Recorder<'_> {
    fn push(&mut self, check: &str, ts: &[usize], k: Option<usize>, closed: String, oracle: String, pass: bool) {
        self.out.push(CheckRecord {
            check: check.into(),
            cell: self.cell.clone(),
            tableaux: ts.iter().map(|&i| self.data.tableaux[i].to_string()).collect(),
            k,
            closed_form: closed,
            oracle,
            pass,
        });
    }

    fn compare(&mut self, check: &str, ts: &[usize], k: Option<usize>, closed: &BigRational, oracle: &BigRational) {
        let pass = closed == oracle;
        self.push(check, ts, k, format_rational(closed), format_rational(oracle), pass);
    }
}

fn format_row(row: &[(usize, BigRational)]) -> String {
    let parts: Vec<String> = row
        .iter()
        .map(|(i, v)| format!("{i}:{}", format_rational(v)))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

/// Compares every closed form for the cell `c` with the oracle at `δ0`.
pub fn verify_seminormal(c: &CellLabel, delta: &BigRational) -> Result<VerificationReport> {
    let closed = seminormal_coeffs(c)?;
    let data = orthogonal_vectors_oracle(c, delta)?;
    let n = c.n;
    let d = data.tableaux.len();
    let mut rec = Recorder {
        cell: closed.label.to_string(),
        data: &data,
        out: Vec::new(),
    };
    for t in 0..d {
        let value = closed.norms[t].evaluate(delta)?;
        rec.compare("norm", &[t], None, &value, &data.norms[t]);
    }
    for k in 1..n {
        let e = &data.e_coeffs[k - 1];
        let s = &data.s_coeffs[k - 1];
        for t in 0..d {
            let tt = &data.tableaux[t];
            let class: Vec<usize> = k_equivalence_class(tt, k)?
                .iter()
                .filter_map(|u| data.index_of(u))
                .collect();
            let outside = |m: &[Vec<BigRational>]| (0..d).any(|u| !class.contains(&u) && !m[t][u].is_zero());
            if outside(e) || outside(s) {
                rec.push("class_support", &[t], Some(k), "class only".into(), "outside class".into(), false);
            }
            if !folds_back(tt, k) {
                let nonzero: Vec<(usize, BigRational)> =
                    (0..d).filter(|&u| !e[t][u].is_zero()).map(|u| (u, e[t][u].clone())).collect();
                rec.push("e_vanishing", &[t], Some(k), "{}".into(), format_row(&nonzero), nonzero.is_empty());
                let mut expect = vec![BigRational::zero(); d];
                for (u, v) in s_action_closed(tt, k)? {
                    let ui = data.index_of(&u).ok_or_else(|| Error::InvalidTableau(u.to_string()))?;
                    expect[ui] = v.evaluate(delta)?;
                }
                let fmt = |m: &[BigRational]| {
                    let row: Vec<(usize, BigRational)> =
                        (0..d).filter(|&u| !m[u].is_zero()).map(|u| (u, m[u].clone())).collect();
                    format_row(&row)
                };
                let pass = expect == s[t];
                rec.push("s_action", &[t], Some(k), fmt(&expect), fmt(&s[t]), pass);
                continue;
            }
            let diag = closed.diag_e[&(t, k)].evaluate(delta)?;
            rec.compare("e_diag", &[t], Some(k), &diag, &e[t][t]);
            let sdiag = closed.s_coeffs[&(t, t, k)].evaluate(delta)?;
            rec.compare("s_diag", &[t], Some(k), &sdiag, &s[t][t]);
            let ct = tt.content(k)?.evaluate(delta);
            for &u in &class {
                let cu = data.tableaux[u].content(k)?.evaluate(delta);
                let kron = if u == t { BigRational::one() } else { BigRational::zero() };
                let rel = (&e[t][u] - kron) / (&ct + &cu);
                rec.compare("s_relation", &[t, u], Some(k), &rel, &s[t][u]);
                let lhs = &data.norms[u] * &e[t][u];
                let rhs = &data.norms[t] * &e[u][t];
                rec.compare("e_symmetry", &[t, u], Some(k), &lhs, &rhs);
                for &v in &class {
                    let lhs = &e[t][u] * &e[v][v];
                    let rhs = &e[t][v] * &e[v][u];
                    rec.compare("e_product", &[t, u, v], Some(k), &lhs, &rhs);
                }
            }
        }
    }
    Ok(VerificationReport { records: rec.out })
}

/// `Σ_{u ~k t} e_{uu}(k)` for every class with `t_{k−1} = t_{k+1}`, from the
/// oracle. Returned as `(k, class representative, trace)`.
pub fn class_traces(c: &CellLabel, delta: &BigRational) -> Result<Vec<(usize, UpDownTableau, BigRational)>> {
    let data = orthogonal_vectors_oracle(c, delta)?;
    let mut out = Vec::new();
    for k in 1..c.n {
        let mut seen = vec![false; data.tableaux.len()];
        for (t, tt) in data.tableaux.iter().enumerate() {
            if seen[t] || !folds_back(tt, k) {
                continue;
            }
            let mut trace = BigRational::zero();
            for u in k_equivalence_class(tt, k)? {
                if let Some(ui) = data.index_of(&u) {
                    seen[ui] = true;
                    trace += &data.e_coeffs[k - 1][ui][ui];
                }
            }
            out.push((k, tt.clone(), trace));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational::ratio;

    fn example() -> Vec<UpDownTableau> {
        enumerate_updown(4, &"2".parse().unwrap()).unwrap()
    }

    fn d() -> DeltaScalar {
        DeltaScalar::delta()
    }

    fn c(x: i64) -> DeltaScalar {
        DeltaScalar::from_int(x)
    }

    #[test]
    fn example_diagonals() {
        let ts = example();
        let e4 = e_diag_closed(&ts[3], 3).unwrap();
        let expect4 = (&d() * &(&d() + &c(4))).try_div(&(&c(3) * &(&d() + &c(2)))).unwrap();
        assert_eq!(e4, expect4);
        let e5 = e_diag_closed(&ts[4], 3).unwrap();
        let expect5 = (&c(2) * &(&d() * &(&d() - &c(2)))).try_div(&(&c(3) * &(&d() - &c(1)))).unwrap();
        assert_eq!(e5, expect5);
        assert_eq!(e4.evaluate(&rat(7)).unwrap(), ratio(77, 27));
        let t: UpDownTableau = UpDownTableau::parse("-;1;-").unwrap();
        assert_eq!(e_diag_closed(&t, 1).unwrap(), d());
        assert!(e_diag_closed(&ts[0], 3).is_err());
    }

    #[test]
    fn transposition_cases() {
        let t = UpDownTableau::parse("-;1;2").unwrap();
        assert_eq!(s_action_closed(&t, 1).unwrap(), vec![(t.clone(), DeltaScalar::one())]);
        let t = UpDownTableau::parse("-;1;1,1").unwrap();
        assert_eq!(s_action_closed(&t, 1).unwrap(), vec![(t.clone(), -DeltaScalar::one())]);
        let t = UpDownTableau::parse("-;1;2;2,1").unwrap();
        let u = UpDownTableau::parse("-;1;1,1;2,1").unwrap();
        let got = s_action_closed(&t, 2).unwrap();
        // contents 1 and -1 differ by -2
        assert_eq!(got, vec![(t.clone(), ratio(-1, 2).into_scalar()), (u.clone(), DeltaScalar::one())]);
        let back = s_action_closed(&u, 2).unwrap();
        assert_eq!(back, vec![(u, ratio(1, 2).into_scalar()), (t, ratio(3, 4).into_scalar())]);
    }

    trait IntoScalar {
        fn into_scalar(self) -> DeltaScalar;
    }
    impl IntoScalar for BigRational {
        fn into_scalar(self) -> DeltaScalar {
            DeltaScalar::constant(self)
        }
    }

    #[test]
    fn fourth_case_agrees_with_fss_form() {
        // (c+1)(c-1)/c^2 and 1 - 1/c^2 for c = aδ+b
        for (a, b) in [(0, 2), (1, -3), (-1, 4), (1, 1)] {
            let g = pair_scalar((a, b));
            let one = DeltaScalar::one();
            let lhs = (&(&g + &one) * &(&g - &one)).try_div(&(&g * &g)).unwrap();
            let rhs = &one - &(&g * &g).inv().unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn norms_multiply_to_determinant() {
        let ts = example();
        let prod = ts.iter().fold(DeltaScalar::one(), |acc, t| &acc * &norm_closed(t).unwrap());
        let expect = crate::gram::gram_det(&CellLabel::parse(4, 1, "2").unwrap())
            .unwrap()
            .det
            .to_scalar()
            .unwrap();
        assert_eq!(prod, expect);
        assert_eq!(norm_closed(&UpDownTableau::parse("-;1;-").unwrap()).unwrap(), d());
    }

    #[test]
    fn small_reports_pass() {
        for (n, f, shape, delta) in [(4, 1, "2", 11), (3, 1, "1", -9), (2, 1, "-", 7)] {
            let c = CellLabel::parse(n, f, shape).unwrap();
            let report = verify_seminormal(&c, &rat(delta)).unwrap();
            let bad: Vec<_> = report.failures().collect();
            assert!(bad.is_empty(), "{bad:#?}");
            assert!(!report.records.is_empty());
        }
    }
}
