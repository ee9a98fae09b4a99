//! Helpers around `num_rational::BigRational`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(p))
        }
    }
}

/// `p` for integers, `p/q` otherwise.
pub fn format_rational(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn is_integer(x: &BigRational) -> bool {
    x.denom().is_one()
}

pub fn abs(x: &BigRational) -> BigRational {
    x.abs()
}

/// Exact determinant of a square rational matrix by Gaussian elimination.
pub fn determinant(matrix: &[Vec<BigRational>]) -> BigRational {
    let n = matrix.len();
    let mut a: Vec<Vec<BigRational>> = matrix.to_vec();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &p;
            for c in col..n {
                let delta = &factor * &a[col][c];
                a[r][c] -= delta;
            }
        }
    }
    det
}

/// Solves `x * basis = target` for a row vector `x`, where the rows of
/// `basis` are linearly independent. Returns `None` when `target` is not in
/// the row span.
pub fn solve_row_combination(
    basis: &[Vec<BigRational>],
    target: &[BigRational],
) -> Option<Vec<BigRational>> {
    // Transpose into the augmented system basis^T x = target^T.
    let rows = basis.len();
    let cols = target.len();
    let mut aug: Vec<Vec<BigRational>> = (0..cols)
        .map(|c| {
            let mut row: Vec<BigRational> = (0..rows).map(|r| basis[r][c].clone()).collect();
            row.push(target[c].clone());
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..rows {
        let Some(p) = (r..cols).find(|&i| !aug[i][c].is_zero()) else {
            continue;
        };
        aug.swap(r, p);
        let inv = BigRational::one() / &aug[r][c];
        for x in aug[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..cols {
            if i != r && !aug[i][c].is_zero() {
                let factor = aug[i][c].clone();
                for j in 0..=rows {
                    let delta = &factor * &aug[r][j];
                    aug[i][j] -= delta;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    if aug[r..].iter().any(|row| !row[rows].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); rows];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = aug[i][rows].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("7").unwrap(), rat(7));
        assert_eq!(parse_rational("-3/6").unwrap(), ratio(-1, 2));
        assert_eq!(format_rational(&ratio(4, 6)), "2/3");
        assert_eq!(format_rational(&rat(-9)), "-9");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn small_determinants() {
        let m = vec![vec![rat(2), rat(1)], vec![rat(1), rat(2)]];
        assert_eq!(determinant(&m), rat(3));
        let singular = vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]];
        assert_eq!(determinant(&singular), rat(0));
    }

    #[test]
    fn row_combination() {
        let basis = vec![vec![rat(1), rat(1), rat(0)], vec![rat(0), rat(1), rat(1)]];
        let target = vec![rat(2), rat(5), rat(3)];
        assert_eq!(
            solve_row_combination(&basis, &target).unwrap(),
            vec![rat(2), rat(3)]
        );
        assert!(solve_row_combination(&basis, &[rat(1), rat(0), rat(0)]).is_none());
    }
}
