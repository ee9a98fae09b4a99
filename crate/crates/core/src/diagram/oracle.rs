//! Brute-force linear algebra inside `B_n(δ0)`: Murphy-basis expansions,
//! Gram matrices, cell-module actions and the orthogonal basis `f_t`.
//!
//! Every `m_{s,t}` is an integer combination of diagrams with exactly `f`
//! arcs per row and no closed loops, so the basis matrix does not depend on
//! `δ` and splits into one block per arc count. It is built once per `n`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::combinat::{cell_labels, enumerate_updown, CellLabel, Content, UpDownTableau};
use crate::diagram::brauer::{BrauerDiagram, MAX_N};
use crate::diagram::element::{BrauerAlgebra, Element};
use crate::diagram::linalg::IntegerSystem;
use crate::diagram::murphy::{murphy_basis_element, murphy_cell_generator};
use crate::error::{Error, Result};
use crate::ring::rational::solve_row_combination;

pub type Matrix = Vec<Vec<BigRational>>;

/// Largest level the oracle accepts.
pub const ORACLE_MAX_N: usize = 6;

/// Integer `δ0` is safe once `|δ0| ≥ 2n−1`: every sum or difference of two
/// residues at level `n` is `aδ0 + b` with `|b| ≤ 2n−2`, and `a ∈ {−1,0,1}`.
pub fn is_sanctioned(n: usize, delta: &BigRational) -> bool {
    if !delta.is_integer() {
        return true;
    }
    let bound = BigInt::from(2 * n.max(1) as i64 - 1);
    delta.numer().abs() >= bound
}

fn require_sanctioned(n: usize, delta: &BigRational) -> Result<()> {
    if is_sanctioned(n, delta) {
        Ok(())
    } else {
        Err(Error::Unsanctioned {
            delta: delta.clone(),
            n,
        })
    }
}

/// One cell `(f, λ)` and its tableaux in enumeration order.
#[derive(Clone, Debug)]
pub struct CellBasis {
    pub label: CellLabel,
    pub tableaux: Vec<UpDownTableau>,
    offset: usize,
}

impl CellBasis {
    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }
}

struct ArcBlock {
    diagrams: Vec<BrauerDiagram>,
    index: HashMap<BrauerDiagram, usize>,
    system: IntegerSystem,
    transposed: OnceLock<IntegerSystem>,
    functionals: Vec<OnceLock<Vec<BigRational>>>,
}

/// The Murphy basis of `B_n` with its factorized coordinate matrix.
pub struct MurphyBasis {
    n: usize,
    cells: Vec<CellBasis>,
    blocks: Vec<ArcBlock>,
    residues: Vec<Vec<Content>>,
}

/// Coordinates of an element in the Murphy basis, cell by cell, as `d × d`
/// matrices indexed by `(s, t)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MurphyExpansion {
    pub coefficients: Vec<(CellLabel, Matrix)>,
}

impl MurphyExpansion {
    pub fn coefficient(&self, c: &CellLabel, s: usize, t: usize) -> Option<&BigRational> {
        self.coefficients
            .iter()
            .find(|(l, _)| l == c)
            .and_then(|(_, m)| m.get(s).and_then(|row| row.get(t)))
    }

    /// Number of nonzero coordinates.
    pub fn support(&self) -> usize {
        self.coefficients
            .iter()
            .flat_map(|(_, m)| m.iter().flatten())
            .filter(|x| !x.is_zero())
            .count()
    }
}

fn block_cache() -> &'static Mutex<HashMap<usize, Arc<MurphyBasis>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<MurphyBasis>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

impl MurphyBasis {
    /// The shared basis at level `n`, built on first use.
    pub fn for_level(n: usize) -> Result<Arc<MurphyBasis>> {
        if n == 0 || n > ORACLE_MAX_N.min(MAX_N) {
            return Err(Error::IndexOutOfRange {
                index: n,
                min: 1,
                max: ORACLE_MAX_N,
            });
        }
        let mut cache = block_cache().lock().expect("basis cache");
        if let Some(b) = cache.get(&n) {
            return Ok(b.clone());
        }
        let basis = Arc::new(Self::build(n)?);
        cache.insert(n, basis.clone());
        Ok(basis)
    }

    fn build(n: usize) -> Result<Self> {
        let alg = BrauerAlgebra::new(n, BigRational::zero());
        let mut cells = Vec::new();
        let mut rows_by_f: Vec<Vec<Element<BigRational>>> = vec![Vec::new(); n / 2 + 1];
        for label in cell_labels(n) {
            let tableaux = enumerate_updown(n, &label.shape)?;
            let rows = &mut rows_by_f[label.f];
            let offset = rows.len();
            for s in &tableaux {
                for t in &tableaux {
                    rows.push(murphy_basis_element(&alg, s, t)?);
                }
            }
            cells.push(CellBasis {
                label,
                tableaux,
                offset,
            });
        }
        let mut blocks = Vec::new();
        for (f, elements) in rows_by_f.into_iter().enumerate() {
            let diagrams = BrauerDiagram::all_with_arcs(n, f);
            let index: HashMap<BrauerDiagram, usize> =
                diagrams.iter().enumerate().map(|(i, d)| (*d, i)).collect();
            if elements.len() != diagrams.len() {
                return Err(Error::SizeMismatch(elements.len(), diagrams.len()));
            }
            let rows = elements
                .iter()
                .map(|e| {
                    let mut row: Vec<(usize, i64)> = e
                        .terms()
                        .iter()
                        .map(|(d, c)| {
                            let col = *index.get(d).ok_or(Error::Singular)?;
                            let v = c
                                .is_integer()
                                .then(|| c.numer().to_i64())
                                .flatten()
                                .ok_or(Error::Singular)?;
                            Ok((col, v))
                        })
                        .collect::<Result<_>>()?;
                    row.sort_unstable();
                    Ok(row)
                })
                .collect::<Result<Vec<_>>>()?;
            let system = IntegerSystem::from_sparse_rows(diagrams.len(), rows)?;
            let functionals = (0..diagrams.len()).map(|_| OnceLock::new()).collect();
            blocks.push(ArcBlock {
                diagrams,
                index,
                system,
                transposed: OnceLock::new(),
                functionals,
            });
        }
        let mut residues: Vec<Vec<Content>> = vec![Vec::new(); n + 1];
        for cell in &cells {
            for t in &cell.tableaux {
                for (k, set) in residues.iter_mut().enumerate().skip(1) {
                    let c = t.content(k)?;
                    if !set.contains(&c) {
                        set.push(c);
                    }
                }
            }
        }
        for set in &mut residues {
            set.sort_by_key(|c| (c.sign, c.offset));
        }
        Ok(MurphyBasis {
            n,
            cells,
            blocks,
            residues,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[CellBasis] {
        &self.cells
    }

    pub fn cell(&self, c: &CellLabel) -> Result<&CellBasis> {
        self.cells
            .iter()
            .find(|x| &x.label == c)
            .ok_or_else(|| Error::InvalidLabel(c.to_string()))
    }

    /// `R(k)`: every residue occurring at step `k` in some tableau.
    pub fn residues(&self, k: usize) -> &[Content] {
        &self.residues[k]
    }

    /// `m_{s,t}` for tableau indices into `cell.tableaux`.
    pub fn element(&self, cell: &CellBasis, s: usize, t: usize) -> Element<BigRational> {
        let block = &self.blocks[cell.label.f];
        let row = &block.system.rows()[cell.offset + s * cell.dim() + t];
        let mut e = Element::zero(self.n);
        for &(col, v) in row {
            e.add_term(block.diagrams[col], BigRational::from_integer(v.into()));
        }
        e
    }

    fn functional(&self, f: usize, j: usize) -> Result<&[BigRational]> {
        let block = &self.blocks[f];
        if let Some(v) = block.functionals[j].get() {
            return Ok(v);
        }
        let mut rhs = vec![BigInt::zero(); block.diagrams.len()];
        rhs[j] = BigInt::one();
        let y = block.system.solve(&rhs)?;
        Ok(block.functionals[j].get_or_init(|| y))
    }

    /// The coordinate of `a` at `m_{s,t}` of `cell`.
    pub fn coordinate(
        &self,
        cell: &CellBasis,
        s: usize,
        t: usize,
        a: &Element<BigRational>,
    ) -> Result<BigRational> {
        let f = cell.label.f;
        let y = self.functional(f, cell.offset + s * cell.dim() + t)?;
        let index = &self.blocks[f].index;
        let mut acc = BigRational::zero();
        for (d, c) in a.terms() {
            if let Some(&col) = index.get(d) {
                if !y[col].is_zero() {
                    acc += c * &y[col];
                }
            }
        }
        Ok(acc)
    }

    /// Full coordinates of `a`.
    pub fn expand(&self, a: &Element<BigRational>) -> Result<MurphyExpansion> {
        if a.n() != self.n {
            return Err(Error::LevelMismatch(a.n(), self.n));
        }
        let mut per_block = Vec::new();
        for block in &self.blocks {
            let mut rhs = vec![BigRational::zero(); block.diagrams.len()];
            let mut any = false;
            for (d, c) in a.terms() {
                if let Some(&col) = block.index.get(d) {
                    rhs[col] = c.clone();
                    any = true;
                }
            }
            if !any {
                per_block.push(rhs);
                continue;
            }
            let sys = match block.transposed.get() {
                Some(s) => s,
                None => {
                    let t = block.system.transpose()?;
                    block.transposed.get_or_init(|| t)
                }
            };
            per_block.push(sys.solve_rational(&rhs)?);
        }
        let coefficients = self
            .cells
            .iter()
            .map(|cell| {
                let d = cell.dim();
                let coords = &per_block[cell.label.f];
                let m = (0..d)
                    .map(|s| (0..d).map(|t| coords[cell.offset + s * d + t].clone()).collect())
                    .collect();
                (cell.label.clone(), m)
            })
            .collect();
        Ok(MurphyExpansion { coefficients })
    }

    /// Rebuilds an element from its coordinates.
    pub fn reconstruct(&self, x: &MurphyExpansion) -> Result<Element<BigRational>> {
        let mut out = Element::zero(self.n);
        for (label, m) in &x.coefficients {
            let cell = self.cell(label)?;
            for (s, row) in m.iter().enumerate() {
                for (t, c) in row.iter().enumerate() {
                    if !c.is_zero() {
                        out = out.add(&self.element(cell, s, t).scale(c));
                    }
                }
            }
        }
        Ok(out)
    }
}

fn algebra(n: usize, delta: &BigRational) -> BrauerAlgebra<BigRational> {
    BrauerAlgebra::new(n, delta.clone())
}

/// Murphy coordinates of `a` (already evaluated at some `δ0`).
pub fn express_in_murphy_basis(a: &Element<BigRational>) -> Result<MurphyExpansion> {
    MurphyBasis::for_level(a.n())?.expand(a)
}

/// `G[t][s] = ⟨m_t, m_s⟩` on the cell module, in enumeration order.
pub fn gram_matrix_oracle(c: &CellLabel, delta: &BigRational) -> Result<Matrix> {
    let basis = MurphyBasis::for_level(c.n)?;
    let cell = basis.cell(c)?;
    let alg = algebra(c.n, delta);
    let d = cell.dim();
    let left: Vec<_> = (0..d).map(|t| basis.element(cell, 0, t)).collect();
    let right: Vec<_> = left.iter().map(|e| e.sigma()).collect();
    let mut g = vec![vec![BigRational::zero(); d]; d];
    for (t, row) in g.iter_mut().enumerate() {
        for (s, entry) in row.iter_mut().enumerate() {
            let prod = alg.mul(&left[t], &right[s]);
            *entry = basis.coordinate(cell, 0, 0, &prod)?;
        }
    }
    Ok(g)
}

/// `M[u][v]`: coefficient of `m_v` in `m_u · g` on the cell module.
pub fn module_action_oracle(
    c: &CellLabel,
    g: &Element<BigRational>,
    delta: &BigRational,
) -> Result<Matrix> {
    if g.n() != c.n {
        return Err(Error::LevelMismatch(g.n(), c.n));
    }
    let basis = MurphyBasis::for_level(c.n)?;
    action_matrix(&basis, basis.cell(c)?, g, &algebra(c.n, delta))
}

fn action_matrix(
    basis: &MurphyBasis,
    cell: &CellBasis,
    g: &Element<BigRational>,
    alg: &BrauerAlgebra<BigRational>,
) -> Result<Matrix> {
    let d = cell.dim();
    (0..d)
        .map(|u| {
            let prod = alg.mul(&basis.element(cell, 0, u), g);
            (0..d).map(|v| basis.coordinate(cell, 0, v, &prod)).collect()
        })
        .collect()
}

fn vec_mat(v: &[BigRational], m: &Matrix) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); m[0].len()];
    for (x, row) in v.iter().zip(m) {
        if x.is_zero() {
            continue;
        }
        for (o, a) in out.iter_mut().zip(row) {
            if !a.is_zero() {
                *o += x * a;
            }
        }
    }
    out
}

fn bilinear(a: &[BigRational], g: &Matrix, b: &[BigRational]) -> BigRational {
    vec_mat(a, g)
        .iter()
        .zip(b)
        .fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

/// The orthogonal basis of one cell module at a sanctioned `δ0`.
#[derive(Clone, Debug)]
pub struct OrthogonalData {
    pub label: CellLabel,
    pub delta: BigRational,
    pub tableaux: Vec<UpDownTableau>,
    /// Row `t` holds `f_t` in Murphy coordinates.
    pub vectors: Matrix,
    pub norms: Vec<BigRational>,
    pub gram: Matrix,
    /// `e_coeffs[k-1][t][s] = e_{ts}(k)`.
    pub e_coeffs: Vec<Matrix>,
    /// `s_coeffs[k-1][t][s] = s_{ts}(k)`.
    pub s_coeffs: Vec<Matrix>,
    /// Action of `x_k` in the Murphy basis, `x_action[k-1]`.
    pub x_action: Vec<Matrix>,
}

impl OrthogonalData {
    pub fn index_of(&self, t: &UpDownTableau) -> Option<usize> {
        self.tableaux.iter().position(|u| u == t)
    }
}

/// `f_t = m_t F_t` for every `t`, their norms, and the coefficients of
/// `f_t e_k` and `f_t s_k` in the `f`-basis.
pub fn orthogonal_vectors_oracle(c: &CellLabel, delta: &BigRational) -> Result<OrthogonalData> {
    require_sanctioned(c.n, delta)?;
    let n = c.n;
    let basis = MurphyBasis::for_level(n)?;
    let cell = basis.cell(c)?;
    let alg = algebra(n, delta);
    let d = cell.dim();
    let x_action: Vec<Matrix> = (1..=n)
        .map(|k| action_matrix(&basis, cell, &alg.jm_element(k)?, &alg))
        .collect::<Result<_>>()?;
    let mut vectors = Vec::with_capacity(d);
    for (ti, t) in cell.tableaux.iter().enumerate() {
        let mut v = vec![BigRational::zero(); d];
        v[ti] = BigRational::one();
        for k in 1..=n {
            let ct = t.content(k)?;
            let ctv = ct.evaluate(delta);
            for r in basis.residues(k) {
                if *r == ct {
                    continue;
                }
                let rv = r.evaluate(delta);
                let den = &ctv - &rv;
                if den.is_zero() {
                    return Err(Error::Unsanctioned {
                        delta: delta.clone(),
                        n,
                    });
                }
                let mut moved = vec_mat(&v, &x_action[k - 1]);
                for (m, x) in moved.iter_mut().zip(&v) {
                    *m -= x * &rv;
                    *m /= &den;
                }
                v = moved;
            }
        }
        vectors.push(v);
    }
    let gram = gram_matrix_oracle(c, delta)?;
    let norms: Vec<BigRational> = vectors.iter().map(|v| bilinear(v, &gram, v)).collect();
    let mut e_coeffs = Vec::new();
    let mut s_coeffs = Vec::new();
    for k in 1..n {
        for (gen, out) in [(alg.e(k)?, &mut e_coeffs), (alg.s(k)?, &mut s_coeffs)] {
            let m = action_matrix(&basis, cell, &gen, &alg)?;
            let coeffs = vectors
                .iter()
                .map(|v| solve_row_combination(&vectors, &vec_mat(v, &m)).ok_or(Error::Singular))
                .collect::<Result<Matrix>>()?;
            out.push(coeffs);
        }
    }
    Ok(OrthogonalData {
        label: c.clone(),
        delta: delta.clone(),
        tableaux: cell.tableaux.clone(),
        vectors,
        norms,
        gram,
        e_coeffs,
        s_coeffs,
        x_action,
    })
}

/// `F_t = ∏_k ∏_{r ∈ R(k), r ≠ c_t(k)} (x_k − r)/(c_t(k) − r)` in `B_n(δ0)`.
pub fn f_idempotent_factor(t: &UpDownTableau, delta: &BigRational) -> Result<Element<BigRational>> {
    let n = t.n();
    require_sanctioned(n, delta)?;
    let basis = MurphyBasis::for_level(n)?;
    let alg = algebra(n, delta);
    let mut out = alg.one();
    for k in 1..=n {
        let x = alg.jm_element(k)?;
        let ct = t.content(k)?;
        let ctv = ct.evaluate(delta);
        for r in basis.residues(k) {
            if *r == ct {
                continue;
            }
            let rv = r.evaluate(delta);
            let den = &ctv - &rv;
            if den.is_zero() {
                return Err(Error::Unsanctioned {
                    delta: delta.clone(),
                    n,
                });
            }
            let factor = x.sub(&alg.scalar(rv)).scale(&(BigRational::one() / den));
            out = alg.mul(&out, &factor);
        }
    }
    Ok(out)
}

/// `f_{st} = F_s m_{s,t} F_t` in `B_n(δ0)`.
pub fn f_st_element(
    s: &UpDownTableau,
    t: &UpDownTableau,
    delta: &BigRational,
) -> Result<Element<BigRational>> {
    let alg = algebra(t.n(), delta);
    let m = murphy_basis_element(&alg, s, t)?;
    let fs = f_idempotent_factor(s, delta)?;
    let ft = f_idempotent_factor(t, delta)?;
    Ok(alg.product(&[&fs, &m, &ft]))
}

/// `m_λ` for a cell, evaluated coefficients.
pub fn cell_generator(c: &CellLabel) -> Result<Element<BigRational>> {
    murphy_cell_generator(&algebra(c.n, &BigRational::zero()), c)
}
