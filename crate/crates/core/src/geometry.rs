//! Finite models of `H*(S)` and `H*(Y)`.
//!
//! `S` is the singular locus, modelled as a point or a projective space `P^k`
//! with a single generator `h` in degree 2. `H*(Y)` is modelled as the
//! square-zero extension `H*(S) + H*(S) sigma` where `sigma = i_*(1)` sits in
//! degree 4 and `i^* sigma = 0`. For `dim S <= 1` that vanishing is forced by
//! degree, so the model is faithful there; larger bases are accepted but
//! flagged through [`BaseRing::is_exact_model`].

use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::{rat, Rational, Scalar};

/// Truncated polynomial ring `Q[h]/(h^(k+1))` with an integration functional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseRing {
    dim: usize,
    top_integral: Rational,
}

impl BaseRing {
    pub fn point() -> Self {
        Self::projective_space(0)
    }

    pub fn projective_space(k: usize) -> Self {
        BaseRing {
            dim: k,
            top_integral: Rational::one(),
        }
    }

    /// `P^k` with `integrate(h^k) = value`; `value = 0` gives a degenerate
    /// pairing, useful for exercising the nondegeneracy checks.
    pub fn with_top_integral(k: usize, value: Rational) -> Self {
        BaseRing {
            dim: k,
            top_integral: value,
        }
    }

    /// Complex dimension of `S`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of monomials `1, h, ..., h^k`.
    pub fn rank(&self) -> usize {
        self.dim + 1
    }

    pub fn top_integral(&self) -> &Rational {
        &self.top_integral
    }

    /// Whether the square-zero model of `H*(Y)` is exact for this base.
    pub fn is_exact_model(&self) -> bool {
        self.dim <= 1
    }

    pub fn zero<F: Scalar>(&self) -> GradedClass<F> {
        GradedClass::zero(self.rank())
    }

    pub fn one<F: Scalar>(&self) -> GradedClass<F> {
        self.h_power(0)
    }

    /// `h^j`, which is zero past the top degree.
    pub fn h_power<F: Scalar>(&self, j: usize) -> GradedClass<F> {
        let mut c = self.zero();
        if j <= self.dim {
            c.coeffs[j] = F::one();
        }
        c
    }

    /// `q * h`.
    pub fn h_multiple<F: Scalar>(&self, q: &Rational) -> GradedClass<F> {
        self.h_power::<F>(1).scale(&F::from_rational(q))
    }

    /// Coefficient of `h^k` times the top integral.
    pub fn integrate<F: Scalar>(&self, alpha: &GradedClass<F>) -> F {
        assert_eq!(alpha.coeffs.len(), self.rank(), "class lives on a different base");
        alpha.coeffs[self.dim].clone() * F::from_rational(&self.top_integral)
    }

    pub fn model_name(&self) -> String {
        if self.dim == 0 {
            "point".to_string()
        } else {
            format!("P^{}", self.dim)
        }
    }
}

/// Element of the base model: coefficient of `h^j` at index `j`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedClass<F> {
    coeffs: Vec<F>,
}

impl<F: Scalar> GradedClass<F> {
    pub fn zero(rank: usize) -> Self {
        GradedClass {
            coeffs: vec![F::zero(); rank],
        }
    }

    pub fn from_coeffs(coeffs: Vec<F>) -> Self {
        assert!(!coeffs.is_empty(), "graded class needs at least the degree-0 slot");
        GradedClass { coeffs }
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Cup product, truncated above the top degree.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.rank(), other.rank(), "classes live on different bases");
        let r = self.rank();
        let mut out = vec![F::zero(); r];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(r - i) {
                if !b.is_zero() {
                    out[i + j] = out[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        GradedClass { coeffs: out }
    }

    pub fn scale(&self, c: &F) -> Self {
        GradedClass {
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    pub fn map<G, M: Fn(&F) -> G>(&self, f: M) -> GradedClass<G> {
        GradedClass {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Cohomological degrees `2j` of the nonzero monomials.
    pub fn support_degrees(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, _)| 2 * j)
            .collect()
    }
}

impl GradedClass<Rational> {
    pub fn lift<F: Scalar>(&self) -> GradedClass<F> {
        self.map(F::from_rational)
    }
}

impl<F: Scalar> Add for &GradedClass<F> {
    type Output = GradedClass<F>;
    fn add(self, rhs: &GradedClass<F>) -> GradedClass<F> {
        assert_eq!(self.rank(), rhs.rank(), "classes live on different bases");
        GradedClass {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<F: Scalar> Sub for &GradedClass<F> {
    type Output = GradedClass<F>;
    fn sub(self, rhs: &GradedClass<F>) -> GradedClass<F> {
        self + &(-rhs)
    }
}

impl<F: Scalar> Neg for &GradedClass<F> {
    type Output = GradedClass<F>;
    fn neg(self) -> GradedClass<F> {
        self.map(|c| -c.clone())
    }
}

/// Element `a + b sigma` of the square-zero model of `H*(Y)`; `a` is the part
/// restricted from `Y` to `S` and `b` the coefficient of `sigma = i_*(1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TotalClass<F> {
    pub base: GradedClass<F>,
    pub sigma: GradedClass<F>,
}

/// Cohomological degree of `sigma`.
pub const SIGMA_DEGREE: usize = 4;

impl<F: Scalar> TotalClass<F> {
    pub fn zero(rank: usize) -> Self {
        TotalClass {
            base: GradedClass::zero(rank),
            sigma: GradedClass::zero(rank),
        }
    }

    pub fn unit(rank: usize) -> Self {
        let mut base = GradedClass::zero(rank);
        base.coeffs[0] = F::one();
        TotalClass {
            base,
            sigma: GradedClass::zero(rank),
        }
    }

    pub fn from_base(base: GradedClass<F>) -> Self {
        let rank = base.rank();
        TotalClass {
            base,
            sigma: GradedClass::zero(rank),
        }
    }

    pub fn rank(&self) -> usize {
        self.base.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero() && self.sigma.is_zero()
    }

    pub fn scale(&self, c: &F) -> Self {
        TotalClass {
            base: self.base.scale(c),
            sigma: self.sigma.scale(c),
        }
    }

    pub fn map<G: Scalar, M: Fn(&F) -> G>(&self, f: M) -> TotalClass<G> {
        TotalClass {
            base: self.base.map(&f),
            sigma: self.sigma.map(&f),
        }
    }

    pub fn support_degrees(&self) -> Vec<usize> {
        let mut d = self.base.support_degrees();
        d.extend(self.sigma.support_degrees().into_iter().map(|x| x + SIGMA_DEGREE));
        d
    }
}

impl<F: Scalar> Add for &TotalClass<F> {
    type Output = TotalClass<F>;
    fn add(self, rhs: &TotalClass<F>) -> TotalClass<F> {
        TotalClass {
            base: &self.base + &rhs.base,
            sigma: &self.sigma + &rhs.sigma,
        }
    }
}

impl<F: Scalar> Sub for &TotalClass<F> {
    type Output = TotalClass<F>;
    fn sub(self, rhs: &TotalClass<F>) -> TotalClass<F> {
        TotalClass {
            base: &self.base - &rhs.base,
            sigma: &self.sigma - &rhs.sigma,
        }
    }
}

/// `(a, b) (a', b') = (a a', a b' + a' b)`.
pub fn y_mul<F: Scalar>(x: &TotalClass<F>, y: &TotalClass<F>) -> TotalClass<F> {
    TotalClass {
        base: x.base.mul(&y.base),
        sigma: &x.base.mul(&y.sigma) + &y.base.mul(&x.sigma),
    }
}

pub fn i_push<F: Scalar>(alpha: &GradedClass<F>) -> TotalClass<F> {
    TotalClass {
        base: GradedClass::zero(alpha.rank()),
        sigma: alpha.clone(),
    }
}

pub fn i_pull<F: Scalar>(delta: &TotalClass<F>) -> GradedClass<F> {
    delta.base.clone()
}

pub fn integrate_s<F: Scalar>(base: &BaseRing, alpha: &GradedClass<F>) -> F {
    base.integrate(alpha)
}

/// `integrate_Y(a + b sigma) = integrate_S(b)`.
pub fn integrate_y<F: Scalar>(base: &BaseRing, delta: &TotalClass<F>) -> F {
    base.integrate(&delta.sigma)
}

/// Tautological degree-2 classes `ell = c1(L)`, `em = c1(M)`, `kap = c1(K)`
/// as rational multiples of `h`. For `n = 1` only `kap` is meaningful.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TautClasses {
    n: usize,
    ell: Option<Rational>,
    em: Option<Rational>,
    kap: Rational,
}

impl TautClasses {
    /// Classes for `n >= 2`; rejects `ell + em != (n+1) kap`.
    pub fn new(n: usize, ell: Rational, em: Rational, kap: Rational) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGeometry(
                "ell and em are only defined for n >= 2; use TautClasses::a1".into(),
            ));
        }
        if &ell + &em != &kap * rat(n as i64 + 1) {
            return Err(Error::InvalidGeometry(format!(
                "tautological relation violated: l + m = {} but (n+1) k = {}",
                &ell + &em,
                &kap * rat(n as i64 + 1)
            )));
        }
        Ok(TautClasses {
            n,
            ell: Some(ell),
            em: Some(em),
            kap,
        })
    }

    /// The `n = 1` case, where `kap = c1(R^1 pi_* N_{E/Z})`.
    pub fn a1(kap: Rational) -> Self {
        TautClasses {
            n: 1,
            ell: None,
            em: None,
            kap,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell(&self) -> Option<&Rational> {
        self.ell.as_ref()
    }

    pub fn em(&self) -> Option<&Rational> {
        self.em.as_ref()
    }

    pub fn kap(&self) -> &Rational {
        &self.kap
    }
}

/// Linear combination `em_coeff * em + kap_coeff * kap` of tautological classes.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TautLinear {
    pub em: Rational,
    pub kap: Rational,
}

impl TautLinear {
    pub fn new(em: Rational, kap: Rational) -> Self {
        TautLinear { em, kap }
    }

    pub fn is_zero(&self) -> bool {
        self.em.is_zero() && self.kap.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TautLinear {
            em: &self.em * c,
            kap: &self.kap * c,
        }
    }
}

impl Add for &TautLinear {
    type Output = TautLinear;
    fn add(self, rhs: &TautLinear) -> TautLinear {
        TautLinear {
            em: &self.em + &rhs.em,
            kap: &self.kap + &rhs.kap,
        }
    }
}

/// Everything a ring builder needs: `n`, the base model and the
/// tautological classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Geometry {
    base: BaseRing,
    taut: TautClasses,
}

impl Geometry {
    pub fn new(base: BaseRing, taut: TautClasses) -> Result<Self> {
        if taut.n == 0 {
            return Err(Error::InvalidGeometry("n must be at least 1".into()));
        }
        Ok(Geometry { base, taut })
    }

    /// `n = 1` over `P^k` (or a point for `k = 0`) with `kap = kap_mult * h`.
    pub fn a1(base: BaseRing, kap_mult: Rational) -> Self {
        Geometry {
            base,
            taut: TautClasses::a1(kap_mult),
        }
    }

    /// `n >= 2` with `ell = l h`, `em = m h`, `kap = k h`.
    pub fn an(n: usize, base: BaseRing, l: Rational, m: Rational, k: Rational) -> Result<Self> {
        Self::new(base, TautClasses::new(n, l, m, k)?)
    }

    /// Convenient default for any `n`: `kap = h`, `ell = h`, `em = n h`.
    pub fn standard(n: usize, base: BaseRing) -> Self {
        if n == 1 {
            Self::a1(base, rat(1))
        } else {
            Self::an(n, base, rat(1), rat(n as i64), rat(1)).expect("1 + n = (n+1) * 1")
        }
    }

    pub fn n(&self) -> usize {
        self.taut.n
    }

    pub fn base(&self) -> &BaseRing {
        &self.base
    }

    pub fn taut(&self) -> &TautClasses {
        &self.taut
    }

    pub fn rank(&self) -> usize {
        self.base.rank()
    }

    pub fn ell_class<F: Scalar>(&self) -> GradedClass<F> {
        match &self.taut.ell {
            Some(q) => self.base.h_multiple(q),
            None => self.base.zero(),
        }
    }

    pub fn em_class<F: Scalar>(&self) -> GradedClass<F> {
        match &self.taut.em {
            Some(q) => self.base.h_multiple(q),
            None => self.base.zero(),
        }
    }

    pub fn kap_class<F: Scalar>(&self) -> GradedClass<F> {
        self.base.h_multiple(&self.taut.kap)
    }

    /// Evaluates a combination of `em` and `kap` to a class. For `n = 1` a
    /// nonzero `em` coefficient has no meaning and is rejected.
    pub fn taut_class<F: Scalar>(&self, t: &TautLinear) -> GradedClass<F> {
        assert!(
            self.taut.em.is_some() || t.em.is_zero(),
            "em is undefined for n = 1"
        );
        &self.em_class::<F>().scale(&F::from_rational(&t.em))
            + &self.kap_class::<F>().scale(&F::from_rational(&t.kap))
    }

    /// Serializable descriptor, the same schema the CLI config uses.
    pub fn descriptor(&self) -> GeometryDescriptor {
        GeometryDescriptor {
            n: self.n(),
            base: BaseDescriptor {
                model: if self.base.dim == 0 {
                    "point".into()
                } else {
                    "projective_space".into()
                },
                dim: self.base.dim,
            },
            classes: ClassDescriptor {
                l: self.taut.ell.as_ref().map(ToString::to_string),
                m: self.taut.em.as_ref().map(ToString::to_string),
                k: self.taut.kap.to_string(),
            },
        }
    }
}

/// `{"n": 2, "base": {"model": "projective_space", "dim": 1}, "classes": {"l": "1", "m": "2", "k": "1"}}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeometryDescriptor {
    pub n: usize,
    pub base: BaseDescriptor,
    pub classes: ClassDescriptor,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseDescriptor {
    pub model: String,
    #[serde(default)]
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDescriptor {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<String>,
    pub k: String,
}

impl GeometryDescriptor {
    pub fn to_geometry(&self) -> Result<Geometry> {
        use crate::scalars::parse_rational;
        let base = match self.base.model.as_str() {
            "point" => {
                if self.base.dim != 0 {
                    return Err(Error::InvalidGeometry("a point has dimension 0".into()));
                }
                BaseRing::point()
            }
            "projective_space" => BaseRing::projective_space(self.base.dim),
            other => return Err(Error::InvalidGeometry(format!("unknown base model '{other}'"))),
        };
        let k = parse_rational(&self.classes.k)?;
        match self.n {
            0 => Err(Error::InvalidGeometry("n must be at least 1".into())),
            1 => {
                if self.classes.l.is_some() || self.classes.m.is_some() {
                    return Err(Error::InvalidGeometry(
                        "n = 1 takes only the class k".into(),
                    ));
                }
                Ok(Geometry::a1(base, k))
            }
            n => {
                let l = self
                    .classes
                    .l
                    .as_deref()
                    .ok_or_else(|| Error::InvalidGeometry("class l is required for n >= 2".into()))
                    .and_then(parse_rational)?;
                let m = self
                    .classes
                    .m
                    .as_deref()
                    .ok_or_else(|| Error::InvalidGeometry("class m is required for n >= 2".into()))
                    .and_then(parse_rational)?;
                Geometry::an(n, base, l, m, k)
            }
        }
    }
}
