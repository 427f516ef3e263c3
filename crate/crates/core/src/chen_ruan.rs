//! Chen-Ruan orbifold cohomology of a transversal `A_n` orbifold with
//! trivial monodromy.
//!
//! Twisted sectors are labelled by `a in Z_{n+1} \ {0}`; each is a copy of
//! `S` with age 1, so its classes are shifted up by 2. Products of two
//! twisted classes either land in the untwisted sector (when the labels are
//! inverse) or in sector `a1 + a2 mod n+1`, picking up the first Chern class
//! of the obstruction bundle.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::{i_pull, i_push, integrate_y, y_mul, Geometry, GradedClass};
use crate::ring::{Orb, OrbClass, RingProduct};
use crate::scalars::{frac, parse_rational, rat, Rational, Scalar};

/// Degree-shifting number `sum_i m_i / m` of a local group element acting
/// with eigenvalues `exp(2 pi i m_i / m)`.
pub fn age(order: u64, exponents: &[u64]) -> Result<Rational> {
    if order == 0 {
        return Err(Error::InvalidInput("group element order must be positive".into()));
    }
    if let Some(e) = exponents.iter().find(|&&e| e >= order) {
        return Err(Error::InvalidInput(format!("exponent {e} is not in [0, {order})")));
    }
    let sum: u64 = exponents.iter().sum();
    Ok(Rational::new(sum.into(), order.into()))
}

/// Which tautological class the obstruction bundle of `(a1, a2)` contributes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Obstruction {
    /// `a1 + a2 < n+1`: the `g^{-1}`-eigenbundle, class `ell`.
    Ell,
    /// `a1 + a2 > n+1`: the `g`-eigenbundle, class `em`.
    Em,
    /// `a1 + a2 = n+1`: rank zero, product lands in the untwisted sector.
    None,
}

pub fn obstruction_class(n: usize, a1: usize, a2: usize) -> Result<Obstruction> {
    for a in [a1, a2] {
        if a == 0 || a > n {
            return Err(Error::IndexOutOfRange { index: a, max: n });
        }
    }
    Ok(match (a1 + a2).cmp(&(n + 1)) {
        std::cmp::Ordering::Less => Obstruction::Ell,
        std::cmp::Ordering::Greater => Obstruction::Em,
        std::cmp::Ordering::Equal => Obstruction::None,
    })
}

/// Coefficient `t` in front of `alpha beta ell` and `alpha beta em`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum TwistCoefficient {
    PlusOne,
    PlusInverse,
    /// `-1/(n+1)`, the value consistent with the resolution side.
    #[default]
    MinusInverse,
    MinusOne,
}

impl TwistCoefficient {
    pub const ALL: [TwistCoefficient; 4] = [
        TwistCoefficient::PlusOne,
        TwistCoefficient::PlusInverse,
        TwistCoefficient::MinusInverse,
        TwistCoefficient::MinusOne,
    ];

    pub fn value(self, n: usize) -> Rational {
        let n1 = n as i64 + 1;
        match self {
            TwistCoefficient::PlusOne => rat(1),
            TwistCoefficient::PlusInverse => frac(1, n1),
            TwistCoefficient::MinusInverse => frac(-1, n1),
            TwistCoefficient::MinusOne => rat(-1),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            TwistCoefficient::PlusOne => "+1",
            TwistCoefficient::PlusInverse => "+1/(n+1)",
            TwistCoefficient::MinusInverse => "-1/(n+1)",
            TwistCoefficient::MinusOne => "-1",
        }
    }

    /// Accepts the symbolic forms (`-1/(n+1)`, `+1`, ...) or a rational equal
    /// to one of the four values for the given `n`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let t = t.strip_prefix("t=").unwrap_or(&t);
        for c in Self::ALL {
            let sym = c.symbol();
            if t == sym || Some(t) == sym.strip_prefix('+') {
                return Ok(c);
            }
        }
        let v = parse_rational(t.strip_prefix('+').unwrap_or(t))
            .map_err(|_| Error::InvalidInput(format!("unknown twist coefficient '{s}'")))?;
        Self::ALL
            .into_iter()
            .find(|c| c.value(n) == v)
            .ok_or_else(|| {
                Error::InvalidInput(format!(
                    "twist coefficient {v} is not one of +1, +1/(n+1), -1/(n+1), -1 for n={n}"
                ))
            })
    }
}

impl fmt::Display for TwistCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ConventionFlags {
    pub twist: TwistCoefficient,
}

impl ConventionFlags {
    pub fn with_twist(twist: TwistCoefficient) -> Self {
        ConventionFlags { twist }
    }
}

/// `H*_orb([Y])` over the scalar field `F`.
#[derive(Clone, Debug)]
pub struct OrbRing<F> {
    geometry: Geometry,
    flags: ConventionFlags,
    t: F,
    ell: GradedClass<F>,
    em: GradedClass<F>,
    inv_order: F,
}

impl<F: Scalar> OrbRing<F> {
    pub fn new(geometry: Geometry, flags: ConventionFlags) -> Self {
        let n = geometry.n();
        OrbRing {
            t: F::from_rational(&flags.twist.value(n)),
            ell: geometry.ell_class(),
            em: geometry.em_class(),
            inv_order: F::from_rational(&frac(1, n as i64 + 1)),
            geometry,
            flags,
        }
    }

    pub fn flags(&self) -> ConventionFlags {
        self.flags
    }

    /// Orbifold integral: only the untwisted sector contributes to top degree.
    pub fn orb_integrate(&self, x: &OrbClass<F>) -> F {
        integrate_y(self.geometry.base(), &x.y)
    }

    /// `<x, y> = int_Y x_0 y_0 + sum_a 1/(n+1) int_S x_a I^*(y)_a`, where the
    /// involution `I` sends sector `a` to `n+1-a`.
    pub fn orb_pairing(&self, x: &OrbClass<F>, y: &OrbClass<F>) -> Result<F> {
        x.check_shape(&self.geometry)?;
        y.check_shape(&self.geometry)?;
        let n = self.geometry.n();
        let base = self.geometry.base();
        let mut acc = integrate_y(base, &y_mul(&x.y, &y.y));
        for a in 1..=n {
            let prod = x.sector(a).mul(y.sector(n + 1 - a));
            acc = acc + self.inv_order.clone() * base.integrate(&prod);
        }
        Ok(acc)
    }
}

impl<F: Scalar> RingProduct<F> for OrbRing<F> {
    type Kind = Orb;

    fn geometry(&self) -> &Geometry {
        &self.geometry
    }

    fn mul(&self, x: &OrbClass<F>, y: &OrbClass<F>) -> Result<OrbClass<F>> {
        x.check_shape(&self.geometry)?;
        y.check_shape(&self.geometry)?;
        let n = self.geometry.n();
        let mut out = OrbClass::<F>::zero(&self.geometry);
        out.y = y_mul(&x.y, &y.y);
        let (dx, dy) = (i_pull(&x.y), i_pull(&y.y));
        for a in 0..n {
            out.twisted[a] = &x.twisted[a].mul(&dy) + &dx.mul(&y.twisted[a]);
        }
        for a1 in 1..=n {
            if x.sector(a1).is_zero() {
                continue;
            }
            for a2 in 1..=n {
                if y.sector(a2).is_zero() {
                    continue;
                }
                let ab = x.sector(a1).mul(y.sector(a2));
                match obstruction_class(n, a1, a2)? {
                    Obstruction::None => {
                        out.y = &out.y + &i_push(&ab.scale(&self.inv_order));
                    }
                    Obstruction::Ell => {
                        let c = ab.mul(&self.ell).scale(&self.t);
                        out.twisted[a1 + a2 - 1] = &out.twisted[a1 + a2 - 1] + &c;
                    }
                    Obstruction::Em => {
                        let c = ab.mul(&self.em).scale(&self.t);
                        let target = a1 + a2 - (n + 1);
                        out.twisted[target - 1] = &out.twisted[target - 1] + &c;
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Structure constants `e_i e_j` of the orbifold ring over a point.
pub fn surface_table(n: usize) -> Result<Vec<((usize, usize), OrbClass)>> {
    let g = Geometry::standard(n, crate::geometry::BaseRing::point());
    let ring = OrbRing::<Rational>::new(g.clone(), ConventionFlags::default());
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            let ei = OrbClass::generator(&g, i, g.base().one())?;
            let ej = OrbClass::generator(&g, j, g.base().one())?;
            out.push(((i, j), ring.mul(&ei, &ej)?));
        }
    }
    Ok(out)
}

/// `1/(n+1)` if `i + j = 0 mod n+1`, else zero: the coefficient of `sigma`
/// in `e_i e_j` over a point.
pub fn surface_coefficient(n: usize, i: usize, j: usize) -> Rational {
    if (i + j).is_multiple_of(n + 1) {
        frac(1, n as i64 + 1)
    } else {
        Rational::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::BaseRing;
    use crate::linalg::determinant;
    use crate::ring::basis;

    fn ring(n: usize, base: BaseRing) -> OrbRing<Rational> {
        OrbRing::new(Geometry::standard(n, base), ConventionFlags::default())
    }

    fn e(g: &Geometry, a: usize) -> OrbClass {
        OrbClass::generator(g, a, g.base().one()).unwrap()
    }

    #[test]
    fn ages() {
        assert_eq!(age(3, &[1, 2]).unwrap(), rat(1));
        assert_eq!(age(5, &[0, 0]).unwrap(), rat(0));
        assert_eq!(age(4, &[1, 1, 2]).unwrap(), rat(1));
        assert!(age(3, &[3]).is_err());
        for n in 1..8u64 {
            for a in 1..=n {
                assert_eq!(age(n + 1, &[a, n + 1 - a]).unwrap(), rat(1));
            }
        }
    }

    #[test]
    fn obstruction_cases() {
        assert_eq!(obstruction_class(2, 1, 1).unwrap(), Obstruction::Ell);
        assert_eq!(obstruction_class(2, 2, 2).unwrap(), Obstruction::Em);
        assert_eq!(obstruction_class(3, 1, 3).unwrap(), Obstruction::None);
        assert!(obstruction_class(2, 3, 1).is_err());
    }

    #[test]
    fn twist_parsing() {
        assert_eq!(TwistCoefficient::parse("-1/(n+1)", 2).unwrap(), TwistCoefficient::MinusInverse);
        assert_eq!(TwistCoefficient::parse("t=-1/3", 2).unwrap(), TwistCoefficient::MinusInverse);
        assert_eq!(TwistCoefficient::parse("1/3", 2).unwrap(), TwistCoefficient::PlusInverse);
        assert_eq!(TwistCoefficient::parse("1", 2).unwrap(), TwistCoefficient::PlusOne);
        assert_eq!(TwistCoefficient::parse("-1", 2).unwrap(), TwistCoefficient::MinusOne);
        assert!(TwistCoefficient::parse("1/5", 2).is_err());
    }

    #[test]
    fn small_products() {
        let r = ring(2, BaseRing::projective_space(1));
        let g = r.geometry().clone();
        let p = r.mul(&e(&g, 1), &e(&g, 2)).unwrap();
        assert_eq!(p.y.sigma.coeffs(), &[frac(1, 3), rat(0)]);
        assert!(p.twisted.iter().all(GradedClass::is_zero));
        // e1 e1 = t ell e2 with t = -1/3, ell = h
        let p = r.mul(&e(&g, 1), &e(&g, 1)).unwrap();
        assert_eq!(p.sector(2).coeffs(), &[rat(0), frac(-1, 3)]);
        // e2 e2 = t em e1 with em = 2h
        let p = r.mul(&e(&g, 2), &e(&g, 2)).unwrap();
        assert_eq!(p.sector(1).coeffs(), &[rat(0), frac(-2, 3)]);

        let r1 = ring(1, BaseRing::point());
        let g1 = r1.geometry().clone();
        let p = r1.mul(&e(&g1, 1), &e(&g1, 1)).unwrap();
        assert_eq!(p.y.sigma.coeffs(), &[frac(1, 2)]);
    }

    #[test]
    fn surface_tables() {
        for n in 1..=4 {
            for ((i, j), p) in surface_table(n).unwrap() {
                assert_eq!(p.y.sigma.coeffs(), &[surface_coefficient(n, i, j)]);
                assert!(p.twisted.iter().all(GradedClass::is_zero));
            }
        }
        assert_eq!(surface_coefficient(3, 2, 2), frac(1, 4));
        assert_eq!(surface_coefficient(2, 1, 1), rat(0));
    }

    #[test]
    fn pairing_examples() {
        let r = ring(2, BaseRing::point());
        let g = r.geometry().clone();
        assert_eq!(r.orb_pairing(&e(&g, 1), &e(&g, 2)).unwrap(), frac(1, 3));
        assert_eq!(r.orb_pairing(&e(&g, 1), &e(&g, 1)).unwrap(), rat(0));
        let sigma = OrbClass::from_y(&g, i_push(&g.base().one()));
        assert_eq!(r.orb_pairing(&OrbClass::unit(&g), &sigma).unwrap(), rat(1));
    }

    #[test]
    fn ring_axioms_on_basis() {
        for n in 1..=4 {
            for base in [BaseRing::point(), BaseRing::projective_space(1)] {
                let r = ring(n, base);
                let g = r.geometry().clone();
                let b = basis::<Rational, Orb>(&g);
                let one = OrbClass::unit(&g);
                for x in &b {
                    assert_eq!(r.mul(&one, &x.element).unwrap(), x.element);
                    assert_eq!(r.mul(&x.element, &one).unwrap(), x.element);
                    for y in &b {
                        let xy = r.mul(&x.element, &y.element).unwrap();
                        assert_eq!(xy, r.mul(&y.element, &x.element).unwrap());
                        if !xy.is_zero() {
                            assert_eq!(xy.homogeneous_degree(), Some(x.degree + y.degree));
                        }
                        assert_eq!(
                            r.orb_integrate(&xy),
                            r.orb_pairing(&x.element, &y.element).unwrap(),
                            "{} {}",
                            x.label,
                            y.label
                        );
                        for z in &b {
                            let l = r.mul(&xy, &z.element).unwrap();
                            let rr = r.mul(&x.element, &r.mul(&y.element, &z.element).unwrap()).unwrap();
                            assert_eq!(l, rr, "n={n} {}*{}*{}", x.label, y.label, z.label);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pairing_nondegenerate() {
        for n in 1..=4 {
            for base in [BaseRing::point(), BaseRing::projective_space(1)] {
                let r = ring(n, base);
                let b = basis::<Rational, Orb>(r.geometry());
                let gram: Vec<Vec<Rational>> = b
                    .iter()
                    .map(|x| b.iter().map(|y| r.orb_pairing(&x.element, &y.element).unwrap()).collect())
                    .collect();
                assert!(!determinant(&gram).is_zero());
            }
        }
    }

    #[test]
    fn flag_linearity() {
        let g = Geometry::standard(3, BaseRing::projective_space(1));
        let reference = OrbRing::<Rational>::new(g.clone(), ConventionFlags::with_twist(TwistCoefficient::PlusOne));
        for flag in TwistCoefficient::ALL {
            let r = OrbRing::<Rational>::new(g.clone(), ConventionFlags::with_twist(flag));
            let t = flag.value(3);
            for a1 in 1..=3 {
                for a2 in 1..=3 {
                    let p = r.mul(&e(&g, a1), &e(&g, a2)).unwrap();
                    let p1 = reference.mul(&e(&g, a1), &e(&g, a2)).unwrap();
                    if a1 + a2 == 4 {
                        assert_eq!(p, p1);
                    } else {
                        assert_eq!(p, p1.scale(&t));
                    }
                }
            }
        }
    }
}
