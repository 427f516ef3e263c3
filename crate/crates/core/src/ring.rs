//! Elements shared by the orbifold ring and the resolution ring.
//!
//! Both rings decompose as `H*(Y) + sum_{a=1}^n H^{*-2}(S) g_a`, where `g_a` is
//! the twisted-sector generator `e_a` on the orbifold side and the exceptional
//! divisor `E_l` on the resolution side. [`RingElement`] carries that pair of
//! data and a marker type recording which ring it belongs to.

use std::fmt::Debug;
use std::marker::PhantomData;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::geometry::{Geometry, GradedClass, TotalClass};
use crate::scalars::{format_rational, parse_rational, CycNum, Rational, Scalar};

/// Marker for which ring an element lives in.
pub trait SectorKind: Clone + Debug + PartialEq + Send + Sync + 'static {
    /// Generator prefix used in labels (`e` or `E`).
    const GENERATOR: &'static str;
    const RING: &'static str;
}

/// Chen-Ruan orbifold cohomology `H*_orb([Y])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Orb {}

/// Cohomology of the crepant resolution `H*(Z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Res {}

impl SectorKind for Orb {
    const GENERATOR: &'static str = "e";
    const RING: &'static str = "orbifold";
}

impl SectorKind for Res {
    const GENERATOR: &'static str = "E";
    const RING: &'static str = "resolution";
}

#[derive(Clone, Debug, PartialEq)]
pub struct RingElement<F, K> {
    pub y: TotalClass<F>,
    pub twisted: Vec<GradedClass<F>>,
    kind: PhantomData<K>,
}

pub type OrbClass<F = Rational> = RingElement<F, Orb>;
pub type ResClass<F = Rational> = RingElement<F, Res>;

impl<F: Scalar, K: SectorKind> RingElement<F, K> {
    pub fn new(y: TotalClass<F>, twisted: Vec<GradedClass<F>>) -> Self {
        RingElement {
            y,
            twisted,
            kind: PhantomData,
        }
    }

    pub fn zero(geometry: &Geometry) -> Self {
        let r = geometry.rank();
        Self::new(TotalClass::zero(r), vec![GradedClass::zero(r); geometry.n()])
    }

    pub fn unit(geometry: &Geometry) -> Self {
        let r = geometry.rank();
        Self::new(TotalClass::unit(r), vec![GradedClass::zero(r); geometry.n()])
    }

    /// Pure `H*(Y)` element.
    pub fn from_y(geometry: &Geometry, y: TotalClass<F>) -> Self {
        let mut x = Self::zero(geometry);
        x.y = y;
        x
    }

    /// `alpha * g_a` for a 1-based sector or divisor index.
    pub fn generator(geometry: &Geometry, a: usize, alpha: GradedClass<F>) -> Result<Self> {
        let n = geometry.n();
        if a == 0 || a > n {
            return Err(Error::IndexOutOfRange { index: a, max: n });
        }
        let mut x = Self::zero(geometry);
        x.twisted[a - 1] = alpha;
        Ok(x)
    }

    pub fn n(&self) -> usize {
        self.twisted.len()
    }

    pub fn rank(&self) -> usize {
        self.y.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.y.is_zero() && self.twisted.iter().all(GradedClass::is_zero)
    }

    /// Twisted coefficient for a 1-based index.
    pub fn sector(&self, a: usize) -> &GradedClass<F> {
        &self.twisted[a - 1]
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            &self.y + &other.y,
            self.twisted.iter().zip(&other.twisted).map(|(a, b)| a + b).collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(
            &self.y - &other.y,
            self.twisted.iter().zip(&other.twisted).map(|(a, b)| a - b).collect(),
        )
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.y.scale(c), self.twisted.iter().map(|t| t.scale(c)).collect())
    }

    pub fn map<G: Scalar, M: Fn(&F) -> G>(&self, f: M) -> RingElement<G, K> {
        RingElement::new(self.y.map(&f), self.twisted.iter().map(|t| t.map(&f)).collect())
    }

    /// Same coefficients, other ring. Used by linear maps between the rings.
    pub fn retag<K2: SectorKind>(self) -> RingElement<F, K2> {
        RingElement::new(self.y, self.twisted)
    }

    /// Checks that the element has the shape of `geometry`.
    pub fn check_shape(&self, geometry: &Geometry) -> Result<()> {
        if self.n() != geometry.n() || self.rank() != geometry.rank() {
            return Err(Error::GeometryMismatch(format!(
                "element has n={} rank={}, geometry has n={} rank={}",
                self.n(),
                self.rank(),
                geometry.n(),
                geometry.rank()
            )));
        }
        if self.twisted.iter().any(|t| t.rank() != self.rank()) || self.y.sigma.rank() != self.rank() {
            return Err(Error::GeometryMismatch("inconsistent component ranks".into()));
        }
        Ok(())
    }

    /// Cohomological degrees of all nonzero components. Twisted and
    /// exceptional coefficients are shifted by 2.
    pub fn support_degrees(&self) -> Vec<usize> {
        let mut d = self.y.support_degrees();
        for t in &self.twisted {
            d.extend(t.support_degrees().into_iter().map(|x| x + 2));
        }
        d.sort_unstable();
        d.dedup();
        d
    }

    /// `Some(p)` if homogeneous of degree `p`; `None` if mixed or zero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let d = self.support_degrees();
        (d.len() == 1).then(|| d[0])
    }

    /// Flat `(label, coefficient)` listing of every component.
    pub fn components(&self) -> Vec<(String, F)> {
        let mut out = Vec::new();
        for (j, c) in self.y.base.coeffs().iter().enumerate() {
            out.push((monomial_label(j, ""), c.clone()));
        }
        for (j, c) in self.y.sigma.coeffs().iter().enumerate() {
            out.push((monomial_label(j, "S"), c.clone()));
        }
        for (a, t) in self.twisted.iter().enumerate() {
            for (j, c) in t.coeffs().iter().enumerate() {
                out.push((monomial_label(j, &format!("{}{}", K::GENERATOR, a + 1)), c.clone()));
            }
        }
        out
    }

    /// Human-readable sum of nonzero components.
    pub fn pretty(&self) -> String
    where
        F: std::fmt::Display,
    {
        let terms: Vec<String> = self
            .components()
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(l, c)| format!("({c})*{l}"))
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

fn monomial_label(j: usize, generator: &str) -> String {
    let h = match j {
        0 => String::new(),
        1 => "h".to_string(),
        _ => format!("h^{j}"),
    };
    match (h.is_empty(), generator.is_empty()) {
        (true, true) => "1".into(),
        (true, false) => generator.into(),
        (false, true) => h,
        (false, false) => format!("{h}*{generator}"),
    }
}

/// One element of the monomial basis of a ring model.
#[derive(Clone, Debug)]
pub struct BasisVector<F, K> {
    pub label: String,
    pub degree: usize,
    pub element: RingElement<F, K>,
}

/// Monomial basis: `h^j`, `h^j sigma`, `h^j g_a`.
pub fn basis<F: Scalar, K: SectorKind>(geometry: &Geometry) -> Vec<BasisVector<F, K>> {
    let base = geometry.base();
    let mut out = Vec::new();
    for j in 0..base.rank() {
        out.push(BasisVector {
            label: monomial_label(j, ""),
            degree: 2 * j,
            element: RingElement::from_y(geometry, TotalClass::from_base(base.h_power(j))),
        });
    }
    for j in 0..base.rank() {
        out.push(BasisVector {
            label: monomial_label(j, "S"),
            degree: 2 * j + 4,
            element: RingElement::from_y(geometry, crate::geometry::i_push(&base.h_power(j))),
        });
    }
    for a in 1..=geometry.n() {
        for j in 0..base.rank() {
            out.push(BasisVector {
                label: monomial_label(j, &format!("{}{a}", K::GENERATOR)),
                degree: 2 * j + 2,
                element: RingElement::generator(geometry, a, base.h_power(j)).expect("index in range"),
            });
        }
    }
    out
}

/// A bilinear product on one of the ring models.
pub trait RingProduct<F: Scalar>: Sync {
    type Kind: SectorKind;

    fn geometry(&self) -> &Geometry;

    fn mul(
        &self,
        x: &RingElement<F, Self::Kind>,
        y: &RingElement<F, Self::Kind>,
    ) -> Result<RingElement<F, Self::Kind>>;
}

/// `(label, product)` pairs as produced by [`product_table`].
pub type ProductTable<F, K> = Vec<(String, RingElement<F, K>)>;

/// Products of all basis pairs `(b_i, b_j)` with `i <= j`, keyed `"b_i*b_j"`.
pub fn product_table<F, R>(ring: &R) -> Result<ProductTable<F, R::Kind>>
where
    F: Scalar,
    R: RingProduct<F>,
{
    let b = basis::<F, R::Kind>(ring.geometry());
    let mut out = Vec::with_capacity(b.len() * (b.len() + 1) / 2);
    for (i, x) in b.iter().enumerate() {
        for y in &b[i..] {
            let key = format!("{}*{}", x.label, y.label);
            out.push((key, ring.mul(&x.element, &y.element)?));
        }
    }
    Ok(out)
}

/// JSON object keyed by product label. Keys come out sorted, so the
/// document is deterministic.
pub fn table_to_json<F: JsonScalar, K: SectorKind>(table: &[(String, RingElement<F, K>)]) -> Value {
    let map: serde_json::Map<String, Value> = table
        .iter()
        .map(|(k, v)| (k.clone(), v.to_json()))
        .collect();
    Value::Object(map)
}

/// Encoding of a coefficient in JSON documents.
pub trait JsonScalar: Scalar {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

impl JsonScalar for Rational {
    fn to_json(&self) -> Value {
        Value::String(format_rational(self))
    }

    fn from_json(v: &Value) -> Result<Self> {
        v.as_str()
            .ok_or_else(|| Error::Parse("rational coefficients are strings".into()))
            .and_then(parse_rational)
    }
}

impl JsonScalar for CycNum {
    fn to_json(&self) -> Value {
        CycNum::to_json(self)
    }

    fn from_json(v: &Value) -> Result<Self> {
        CycNum::from_json(v)
    }
}

fn class_to_json<F: JsonScalar>(c: &GradedClass<F>) -> Value {
    Value::Array(c.coeffs().iter().map(JsonScalar::to_json).collect())
}

fn class_from_json<F: JsonScalar>(v: &Value) -> Result<GradedClass<F>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse("graded class must be an array".into()))?;
    if arr.is_empty() {
        return Err(Error::Parse("graded class must be nonempty".into()));
    }
    Ok(GradedClass::from_coeffs(
        arr.iter().map(F::from_json).collect::<Result<Vec<_>>>()?,
    ))
}

impl<F: JsonScalar, K: SectorKind> RingElement<F, K> {
    /// `{"y": {"base": [...], "sigma": [...]}, "twisted": [[...], ...]}`, with
    /// coefficients of `h^0, h^1, ...` in each array.
    pub fn to_json(&self) -> Value {
        json!({
            "y": {
                "base": class_to_json(&self.y.base),
                "sigma": class_to_json(&self.y.sigma),
            },
            "twisted": self.twisted.iter().map(class_to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let y = v.get("y").ok_or_else(|| Error::Parse("missing 'y'".into()))?;
        let base = class_from_json(y.get("base").ok_or_else(|| Error::Parse("missing 'y.base'".into()))?)?;
        let sigma = class_from_json(y.get("sigma").ok_or_else(|| Error::Parse("missing 'y.sigma'".into()))?)?;
        let twisted = v
            .get("twisted")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing 'twisted'".into()))?
            .iter()
            .map(class_from_json)
            .collect::<Result<Vec<_>>>()?;
        let rank = base.rank();
        if sigma.rank() != rank || twisted.iter().any(|t| t.rank() != rank) {
            return Err(Error::Parse("component arrays have different lengths".into()));
        }
        Ok(Self::new(TotalClass { base, sigma }, twisted))
    }
}
