//! Exact scalars: reduced big rationals and elements of cyclotomic fields.
//!
//! Every structure constant in the crate lives in one of these two types. The
//! [`Scalar`] trait is what the ring code is generic over, so the same product
//! formulas run over `Q` (classical rings) and over `Q(zeta_N)` (quantum rings
//! evaluated at roots of unity, and isomorphism candidates).

mod cyclotomic;
mod parse;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, max_conductor, CycNum};
pub use parse::{parse_rational, parse_scalar};

/// Reduced fraction with a positive denominator.
pub type Rational = BigRational;

/// Field elements the ring code can compute with.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_rational(q: &Rational) -> Self;

    fn inv(&self) -> Result<Self>;
}

impl Scalar for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
}

impl Scalar for CycNum {
    fn from_rational(q: &Rational) -> Self {
        CycNum::from_rational(q.clone())
    }

    fn inv(&self) -> Result<Self> {
        CycNum::inv(self)
    }
}

/// Shorthand for the integer `v` as a rational.
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Shorthand for `p/q`.
pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Canonical text form used in every JSON document: `p/q`, or `p` when the
/// denominator is one.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}
