//! Dense exact linear algebra over any [`Scalar`] field.

use crate::error::{Error, Result};
use crate::scalars::Scalar;

pub type Matrix<F> = Vec<Vec<F>>;

pub fn identity<F: Scalar>(n: usize) -> Matrix<F> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect())
        .collect()
}

pub fn mat_mul<F: Scalar>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "dimension mismatch");
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b.iter())
                        .fold(F::zero(), |acc, (x, brow)| acc + x.clone() * brow[j].clone())
                })
                .collect()
        })
        .collect()
}

/// Determinant by Gaussian elimination with pivot search.
pub fn determinant<F: Scalar>(m: &Matrix<F>) -> F {
    let n = m.len();
    let mut a = m.clone();
    let mut det = F::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return F::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det = det * pivot.clone();
        let inv = pivot.inv().expect("pivot is nonzero");
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone() * inv.clone();
            for c in col..n {
                let v = a[col][c].clone();
                a[r][c] = a[r][c].clone() - factor.clone() * v;
            }
        }
    }
    det
}

/// Inverse by Gauss-Jordan elimination.
pub fn inverse<F: Scalar>(m: &Matrix<F>) -> Result<Matrix<F>> {
    let n = m.len();
    let mut a = m.clone();
    let mut inv = identity::<F>(n);
    for col in 0..n {
        let p = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(Error::DivisionByZero)?;
        a.swap(p, col);
        inv.swap(p, col);
        let pinv = a[col][col].inv()?;
        for c in 0..n {
            a[col][c] = a[col][c].clone() * pinv.clone();
            inv[col][c] = inv[col][c].clone() * pinv.clone();
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in 0..n {
                let (x, y) = (a[col][c].clone(), inv[col][c].clone());
                a[r][c] = a[r][c].clone() - factor.clone() * x;
                inv[r][c] = inv[r][c].clone() - factor.clone() * y;
            }
        }
    }
    Ok(inv)
}
