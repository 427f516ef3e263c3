//! Type `A_n` Cartan data: the intersection matrix `c_n` of the exceptional
//! divisors with the fibre classes, its inverse, and curve classes.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::{frac, rat, Rational};

/// `(c_n)_ii = -2`, `(c_n)_{i,i+-1} = 1`, zero elsewhere.
pub fn cartan_matrix(n: usize) -> Result<Vec<Vec<i64>>> {
    if n == 0 {
        return Err(Error::InvalidInput("Cartan matrix needs n >= 1".into()));
    }
    Ok((1..=n)
        .map(|i| (1..=n).map(|j| cartan_entry(n, i, j)).collect())
        .collect())
}

/// Entry `(c_n)_{ij}` with 1-based indices; indices outside `1..=n` give 0.
pub fn cartan_entry(n: usize, i: usize, j: usize) -> i64 {
    if i == 0 || j == 0 || i > n || j > n {
        0
    } else if i == j {
        -2
    } else if i.abs_diff(j) == 1 {
        1
    } else {
        0
    }
}

pub fn cartan_matrix_rational(n: usize) -> Result<Matrix<Rational>> {
    Ok(cartan_matrix(n)?
        .into_iter()
        .map(|row| row.into_iter().map(rat).collect())
        .collect())
}

/// `(c_n^{-1})_{ij} = -min(i,j) (n+1-max(i,j)) / (n+1)`, 1-based. Rows or
/// columns 0 and n+1 are zero, which is the boundary convention the product
/// formulas rely on.
pub fn cartan_inverse_entry(n: usize, i: usize, j: usize) -> Rational {
    if i == 0 || j == 0 || i > n || j > n {
        return rat(0);
    }
    let lo = i.min(j) as i64;
    let hi = i.max(j) as i64;
    let n1 = n as i64 + 1;
    frac(-lo * (n1 - hi), n1)
}

pub fn cartan_inverse(n: usize) -> Result<Matrix<Rational>> {
    if n == 0 {
        return Err(Error::InvalidInput("Cartan matrix needs n >= 1".into()));
    }
    Ok((1..=n)
        .map(|i| (1..=n).map(|j| cartan_inverse_entry(n, i, j)).collect())
        .collect())
}

/// `Gamma = sum a_l beta_l`, a class in the kernel of `rho_*`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CurveClass {
    multiplicities: Vec<u32>,
}

impl CurveClass {
    pub fn new(multiplicities: Vec<u32>) -> Self {
        CurveClass { multiplicities }
    }

    pub fn zero(n: usize) -> Self {
        CurveClass::new(vec![0; n])
    }

    pub fn n(&self) -> usize {
        self.multiplicities.len()
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    pub fn is_zero(&self) -> bool {
        self.multiplicities.iter().all(|&a| a == 0)
    }

    /// `Some((a, i, j))` when the class is `a * beta_{ij}` with `a >= 1`.
    pub fn as_multiple_of_span(&self) -> Option<(u32, usize, usize)> {
        let nz: Vec<usize> = (0..self.n()).filter(|&k| self.multiplicities[k] != 0).collect();
        let (&first, &last) = (nz.first()?, nz.last()?);
        let a = self.multiplicities[first];
        let contiguous = nz.len() == last - first + 1;
        let uniform = nz.iter().all(|&k| self.multiplicities[k] == a);
        (contiguous && uniform).then_some((a, first + 1, last + 1))
    }

    pub fn scaled(&self, a: u32) -> Self {
        CurveClass::new(self.multiplicities.iter().map(|&m| m * a).collect())
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .multiplicities
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(l, &a)| if a == 1 { format!("b{}", l + 1) } else { format!("{a}*b{}", l + 1) })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// `beta_{ij} = beta_i + ... + beta_j`.
pub fn curve_class(n: usize, i: usize, j: usize) -> Result<CurveClass> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    if j < i || j > n {
        return Err(Error::IndexOutOfRange { index: j, max: n });
    }
    Ok(CurveClass::new(
        (1..=n).map(|l| u32::from(i <= l && l <= j)).collect(),
    ))
}

/// `E_l . Gamma = sum_m a_m (c_n)_{lm}`.
pub fn intersection(l: usize, gamma: &CurveClass) -> Result<i64> {
    let n = gamma.n();
    if l == 0 || l > n {
        return Err(Error::IndexOutOfRange { index: l, max: n });
    }
    Ok(gamma
        .multiplicities
        .iter()
        .enumerate()
        .map(|(m, &a)| i64::from(a) * cartan_entry(n, l, m + 1))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{identity, inverse, mat_mul};

    #[test]
    fn small_cartan_matrices() {
        assert_eq!(cartan_matrix(1).unwrap(), vec![vec![-2]]);
        assert_eq!(cartan_matrix(2).unwrap(), vec![vec![-2, 1], vec![1, -2]]);
        let c3 = cartan_matrix(3).unwrap();
        assert_eq!(c3, vec![vec![-2, 1, 0], vec![1, -2, 1], vec![0, 1, -2]]);
        assert!(cartan_matrix(0).is_err());
    }

    #[test]
    fn inverse_values() {
        assert_eq!(cartan_inverse(1).unwrap(), vec![vec![frac(-1, 2)]]);
        assert_eq!(
            cartan_inverse(2).unwrap(),
            vec![vec![frac(-2, 3), frac(-1, 3)], vec![frac(-1, 3), frac(-2, 3)]]
        );
        assert_eq!(cartan_inverse_entry(3, 1, 3), frac(-1, 4));
        assert_eq!(cartan_inverse_entry(3, 0, 2), rat(0));
        assert_eq!(cartan_inverse_entry(3, 4, 2), rat(0));
    }

    #[test]
    fn closed_form_matches_elimination() {
        for n in 1..=12 {
            let c = cartan_matrix_rational(n).unwrap();
            let closed = cartan_inverse(n).unwrap();
            assert_eq!(inverse(&c).unwrap(), closed, "n={n}");
            assert_eq!(mat_mul(&c, &closed), identity(n));
        }
    }

    #[test]
    fn curve_classes() {
        assert_eq!(curve_class(2, 1, 1).unwrap().multiplicities(), &[1, 0]);
        assert_eq!(curve_class(2, 1, 2).unwrap().multiplicities(), &[1, 1]);
        assert_eq!(curve_class(4, 2, 3).unwrap().multiplicities(), &[0, 1, 1, 0]);
        assert!(curve_class(2, 2, 1).is_err());
        assert!(curve_class(2, 0, 1).is_err());
        assert!(curve_class(2, 1, 3).is_err());
    }

    #[test]
    fn intersections() {
        let b1 = curve_class(2, 1, 1).unwrap();
        assert_eq!(intersection(1, &b1).unwrap(), -2);
        assert_eq!(intersection(1, &curve_class(2, 2, 2).unwrap()).unwrap(), 1);
        assert_eq!(intersection(1, &curve_class(2, 1, 2).unwrap()).unwrap(), -1);
        assert!(intersection(3, &b1).is_err());
    }

    #[test]
    fn span_intersection_pattern() {
        for n in 1..=8 {
            for i in 1..=n {
                for j in i..=n {
                    let b = curve_class(n, i, j).unwrap();
                    for l in 1..=n {
                        let expected = if i == j && l == i {
                            -2
                        } else if i != j && (l == i || l == j) {
                            -1
                        } else if l + 1 == i || l == j + 1 {
                            1
                        } else {
                            0
                        };
                        assert_eq!(intersection(l, &b).unwrap(), expected, "n={n} i={i} j={j} l={l}");
                    }
                }
            }
        }
    }

    #[test]
    fn span_detection() {
        let c = CurveClass::new(vec![0, 3, 3, 0]);
        assert_eq!(c.as_multiple_of_span(), Some((3, 2, 3)));
        assert_eq!(CurveClass::new(vec![1, 2]).as_multiple_of_span(), None);
        assert_eq!(CurveClass::new(vec![1, 0, 1]).as_multiple_of_span(), None);
        assert_eq!(CurveClass::zero(3).as_multiple_of_span(), None);
        assert_eq!(CurveClass::new(vec![1, 2]).to_string(), "b1 + 2*b2");
    }
}
