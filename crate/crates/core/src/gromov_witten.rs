//! Genus-zero three-point Gromov-Witten invariants of `Z` in exceptional
//! curve classes.
//!
//! The closed formulas are taken as the definition:
//!
//! * any insertion pulled back from `Y` gives 0;
//! * `Gamma = a beta_{ij}` with insertions `alpha_t E_{l_t}` gives
//!   `prod_t (E_{l_t} . beta_{ij}) int_S alpha_1 alpha_2 alpha_3 kap`, independent of `a`;
//! * every other class gives 0.
//!
//! For `n = 1` this is `-8 int_S alpha_1 alpha_2 alpha_3 kap`.

use crate::cartan::{intersection, CurveClass};
use crate::error::{Error, Result};
use crate::geometry::{Geometry, GradedClass};
use crate::ring::ResClass;
use crate::scalars::{Rational, Scalar};

/// Modelling assumptions every invariant rests on, echoed in reports.
pub const GW_ASSUMPTIONS: &[&str] = &[
    "closed formulas applied for every transversal A_n geometry (general case assumed, not proven)",
    "ampleness and deformation hypotheses on K, T_Z and T_S are not checked by the model",
];

/// One insertion after shape validation.
#[derive(Clone, Debug, PartialEq)]
pub enum Insertion<F> {
    /// `rho^*(delta)`, including the zero class.
    Pullback,
    /// `alpha E_l`.
    Exceptional { l: usize, alpha: GradedClass<F> },
}

/// Classifies an insertion, rejecting sums of several pieces.
pub fn classify<F: Scalar>(gamma: &ResClass<F>) -> Result<Insertion<F>> {
    let nonzero: Vec<usize> = (1..=gamma.n()).filter(|&l| !gamma.sector(l).is_zero()).collect();
    match (gamma.y.is_zero(), nonzero.as_slice()) {
        (_, []) => Ok(Insertion::Pullback),
        (true, [l]) => Ok(Insertion::Exceptional {
            l: *l,
            alpha: gamma.sector(*l).clone(),
        }),
        _ => Err(Error::MalformedInsertion(
            "insertions must be a pull-back class or a single alpha*E_l; decompose bilinearly".into(),
        )),
    }
}

#[derive(Clone, Debug)]
pub struct GwQuery<F = Rational> {
    pub gamma: CurveClass,
    pub insertions: [ResClass<F>; 3],
}

impl<F: Scalar> GwQuery<F> {
    pub fn new(gamma: CurveClass, insertions: [ResClass<F>; 3]) -> Self {
        GwQuery { gamma, insertions }
    }
}

/// `Psi^Z_Gamma(gamma_1, gamma_2, gamma_3)`.
pub fn gw_invariant<F: Scalar>(query: &GwQuery<F>, geometry: &Geometry) -> Result<F> {
    let n = geometry.n();
    if query.gamma.n() != n {
        return Err(Error::InvalidCurveClass(format!(
            "curve class has {} entries, expected {n}",
            query.gamma.n()
        )));
    }
    if query.gamma.is_zero() {
        return Err(Error::InvalidCurveClass("the zero class has no invariants here".into()));
    }
    let mut parts = Vec::with_capacity(3);
    for g in &query.insertions {
        g.check_shape(geometry)?;
        parts.push(classify(g)?);
    }
    let Some((_, i, j)) = query.gamma.as_multiple_of_span() else {
        return Ok(F::zero());
    };
    let span = crate::cartan::curve_class(n, i, j)?;
    let mut factor: i64 = 1;
    let mut class = geometry.kap_class::<F>();
    for p in parts {
        match p {
            Insertion::Pullback => return Ok(F::zero()),
            Insertion::Exceptional { l, alpha } => {
                factor *= intersection(l, &span)?;
                class = class.mul(&alpha);
            }
        }
    }
    Ok(F::from_rational(&Rational::from_integer(factor.into())) * geometry.base().integrate(&class))
}

/// True iff `kap = 0` in the model, in which case every invariant vanishes.
pub fn gw_vanishing_symplectic(geometry: &Geometry) -> bool {
    geometry.kap_class::<Rational>().is_zero()
}
