//! Exact solutions of square integer systems by multi-modular elimination,
//! Chinese remaindering and rational reconstruction.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ring::factored::is_prime_u64;

const MAX_PRIMES: usize = 64;

fn primes_below_2_31() -> impl Iterator<Item = u64> {
    (1u64..(1 << 31)).rev().step_by(2).filter(|&p| is_prime_u64(p))
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, a as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1);
    t.rem_euclid(p as i64) as u64
}

/// An LU factorization `P·A = L·U` modulo a prime.
struct LuMod {
    p: u64,
    lu: Vec<Vec<u64>>,
    perm: Vec<usize>,
}

impl LuMod {
    fn factor(a: &[Vec<(usize, i64)>], p: u64) -> Option<Self> {
        let n = a.len();
        let mut lu: Vec<Vec<u64>> = a
            .iter()
            .map(|row| {
                let mut dense = vec![0u64; n];
                for &(j, x) in row {
                    dense[j] = x.rem_euclid(p as i64) as u64;
                }
                dense
            })
            .collect();
        let mut perm: Vec<usize> = (0..n).collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| lu[r][col] != 0)?;
            lu.swap(col, piv);
            perm.swap(col, piv);
            let inv = inv_mod(lu[col][col], p);
            let (top, bottom) = lu.split_at_mut(col + 1);
            let pivot_row = &top[col];
            for row in bottom.iter_mut() {
                if row[col] == 0 {
                    continue;
                }
                let factor = row[col] * inv % p;
                row[col] = factor;
                let neg = p - factor;
                for c in col + 1..n {
                    let u = pivot_row[c];
                    if u != 0 {
                        row[c] = (row[c] + neg * u) % p;
                    }
                }
            }
        }
        Some(LuMod { p, lu, perm })
    }

    fn solve(&self, rhs: &[BigInt]) -> Vec<u64> {
        let p = self.p;
        let n = self.lu.len();
        let pb = BigInt::from(p);
        let mut y: Vec<u64> = self
            .perm
            .iter()
            .map(|&i| rhs[i].mod_floor(&pb).to_u64().expect("reduced"))
            .collect();
        for i in 0..n {
            let row = &self.lu[i];
            let mut acc = y[i];
            for j in 0..i {
                if row[j] != 0 && y[j] != 0 {
                    acc = (acc + (p - row[j]) * y[j]) % p;
                }
            }
            y[i] = acc;
        }
        for i in (0..n).rev() {
            let row = &self.lu[i];
            let mut acc = y[i];
            for j in i + 1..n {
                if row[j] != 0 && y[j] != 0 {
                    acc = (acc + (p - row[j]) * y[j]) % p;
                }
            }
            y[i] = acc * inv_mod(row[i], p) % p;
        }
        y
    }
}

/// Rational `a/b ≡ x (mod m)` with `|a|, |b| ≤ sqrt(m/2)`, if one exists.
pub fn rational_reconstruction(x: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / 2u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), x.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        (r0, r1) = (r1.clone(), &r0 - &q * &r1);
        (t0, t1) = (t1.clone(), &t0 - &q * &t1);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

/// A square integer matrix, stored by sparse rows, prepared for repeated
/// exact solves.
pub struct IntegerSystem {
    dim: usize,
    matrix: Vec<Vec<(usize, i64)>>,
    factors: Mutex<(Vec<LuMod>, Box<dyn Iterator<Item = u64> + Send>)>,
}

impl IntegerSystem {
    pub fn new(matrix: Vec<Vec<i64>>) -> Result<Self> {
        let n = matrix.len();
        if matrix.iter().any(|r| r.len() != n) {
            return Err(Error::Precondition("matrix is not square".into()));
        }
        let sparse = matrix
            .into_iter()
            .map(|row| row.into_iter().enumerate().filter(|&(_, x)| x != 0).collect())
            .collect();
        Self::from_sparse_rows(n, sparse)
    }

    /// Rows given as `(column, value)` lists.
    pub fn from_sparse_rows(dim: usize, rows: Vec<Vec<(usize, i64)>>) -> Result<Self> {
        if rows.len() != dim || rows.iter().flatten().any(|&(j, _)| j >= dim) {
            return Err(Error::Precondition("matrix is not square".into()));
        }
        let sys = IntegerSystem {
            dim,
            matrix: rows,
            factors: Mutex::new((Vec::new(), Box::new(primes_below_2_31()))),
        };
        sys.ensure_primes(1)?;
        Ok(sys)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Vec<(usize, i64)>] {
        &self.matrix
    }

    /// The transposed system.
    pub fn transpose(&self) -> Result<Self> {
        let mut rows = vec![Vec::new(); self.dim];
        for (i, row) in self.matrix.iter().enumerate() {
            for &(j, x) in row {
                rows[j].push((i, x));
            }
        }
        Self::from_sparse_rows(self.dim, rows)
    }

    fn ensure_primes(&self, k: usize) -> Result<()> {
        let mut guard = self.factors.lock().expect("factor lock");
        let (lus, primes) = &mut *guard;
        let mut singular_hits = 0;
        while lus.len() < k {
            let p = primes.next().expect("enough primes");
            match LuMod::factor(&self.matrix, p) {
                Some(lu) => lus.push(lu),
                None => {
                    singular_hits += 1;
                    if singular_hits >= 4 && lus.is_empty() {
                        return Err(Error::Singular);
                    }
                }
            }
        }
        Ok(())
    }

    fn residues(&self, k: usize, rhs: &[BigInt]) -> Vec<(u64, Vec<u64>)> {
        let guard = self.factors.lock().expect("factor lock");
        guard.0[..k].iter().map(|lu| (lu.p, lu.solve(rhs))).collect()
    }

    fn verify(&self, y: &[BigRational], rhs: &[BigInt]) -> bool {
        let small: Option<Vec<i128>> = y
            .iter()
            .map(|v| v.is_integer().then(|| v.numer().to_i64()).flatten().map(i128::from))
            .collect();
        let small_rhs: Option<Vec<i128>> = rhs.iter().map(|b| b.to_i64().map(i128::from)).collect();
        if let (Some(yi), Some(bi)) = (small, small_rhs) {
            let fits = self.matrix.iter().zip(&bi).all(|(row, &b)| {
                let mut acc: i128 = 0;
                for &(j, a) in row {
                    match (a as i128).checked_mul(yi[j]).and_then(|t| acc.checked_add(t)) {
                        Some(s) => acc = s,
                        None => return false,
                    }
                }
                acc == b
            });
            if fits {
                return true;
            }
        }
        self.matrix.iter().zip(rhs).all(|(row, b)| {
            let mut acc = BigRational::zero();
            for &(j, a) in row {
                acc += &y[j] * BigRational::from_integer(a.into());
            }
            acc == BigRational::from_integer(b.clone())
        })
    }

    /// The exact solution of `A y = rhs` for a rational right-hand side.
    pub fn solve_rational(&self, rhs: &[BigRational]) -> Result<Vec<BigRational>> {
        let den = rhs.iter().fold(BigInt::one(), |l, r| l.lcm(r.denom()));
        let scaled: Vec<BigInt> = rhs.iter().map(|r| r.numer() * (&den / r.denom())).collect();
        let den = BigRational::from_integer(den);
        Ok(self.solve(&scaled)?.into_iter().map(|v| v / &den).collect())
    }

    /// The exact solution of `A y = rhs`.
    pub fn solve(&self, rhs: &[BigInt]) -> Result<Vec<BigRational>> {
        if rhs.len() != self.dim() {
            return Err(Error::SizeMismatch(rhs.len(), self.dim()));
        }
        let mut k = 1;
        loop {
            self.ensure_primes(k)?;
            let res = self.residues(k, rhs);
            let mut modulus = BigInt::one();
            let mut values: Vec<BigInt> = vec![BigInt::zero(); self.dim()];
            for (p, r) in &res {
                let pb = BigInt::from(*p);
                let m_inv = inv_mod((&modulus % &pb).to_u64().expect("small"), *p);
                for (v, &ri) in values.iter_mut().zip(r) {
                    // v' ≡ v (mod modulus), v' ≡ ri (mod p)
                    let vp = (&*v % &pb).to_u64().expect("small");
                    let diff = (ri + *p - vp) % *p;
                    let t = (diff as u128 * m_inv as u128 % *p as u128) as u64;
                    *v += &modulus * BigInt::from(t);
                }
                modulus *= pb;
            }
            let recon: Option<Vec<BigRational>> = values
                .iter()
                .map(|v| rational_reconstruction(v, &modulus))
                .collect();
            if let Some(y) = recon {
                if self.verify(&y, rhs) {
                    return Ok(y);
                }
            }
            if k >= MAX_PRIMES {
                return Err(Error::Singular);
            }
            k *= 2;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational::{rat, ratio};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn unimodular_inverse() {
        let a = vec![vec![2, 1], vec![1, 1]];
        let sys = IntegerSystem::new(a).unwrap();
        assert_eq!(sys.solve(&ints(&[1, 0])).unwrap(), vec![rat(1), rat(-1)]);
    }

    #[test]
    fn rational_solutions() {
        let a = vec![vec![3, 0, 1], vec![0, 2, 0], vec![1, 0, 5]];
        let sys = IntegerSystem::new(a).unwrap();
        let y = sys.solve(&ints(&[1, 1, 0])).unwrap();
        assert_eq!(y, vec![ratio(5, 14), ratio(1, 2), ratio(-1, 14)]);
    }

    #[test]
    fn large_entries_need_more_primes() {
        let big = 1_000_000_007i64;
        let a = vec![vec![big, 1], vec![0, 1]];
        let sys = IntegerSystem::new(a).unwrap();
        let y = sys.solve(&ints(&[1, big])).unwrap();
        assert_eq!(y, vec![ratio(1 - big, big), rat(big)]);
    }

    #[test]
    fn transpose_and_rational_rhs() {
        let a = vec![vec![1, 2], vec![0, 1]];
        let sys = IntegerSystem::new(a).unwrap().transpose().unwrap();
        let y = sys.solve_rational(&[ratio(1, 2), rat(0)]).unwrap();
        assert_eq!(y, vec![ratio(1, 2), rat(-1)]);
    }

    #[test]
    fn singular_rejected() {
        let a = vec![vec![1, 2], vec![2, 4]];
        assert!(matches!(IntegerSystem::new(a), Err(Error::Singular)));
    }
}
