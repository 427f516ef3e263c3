use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use super::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

const DEFAULT_MAX_CONDUCTOR: u64 = 120;

/// Largest conductor accepted by constructors; `CREPANT_MAX_CONDUCTOR`
/// overrides the default of 120.
pub fn max_conductor() -> u64 {
    static CAP: OnceLock<u64> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("CREPANT_MAX_CONDUCTOR")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .filter(|&v: &u64| v >= 1)
            .unwrap_or(DEFAULT_MAX_CONDUCTOR)
    })
}

fn check_conductor(n: u64) -> Result<()> {
    let cap = max_conductor();
    if n == 0 {
        return Err(Error::InvalidInput("conductor must be positive".into()));
    }
    if n > cap {
        return Err(Error::ConductorTooLarge { conductor: n, cap });
    }
    Ok(())
}

pub fn euler_phi(n: u64) -> usize {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result as usize
}

fn poly_mul_int(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division of integer polynomials by a monic divisor.
fn poly_div_int(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (i, &d) in den.iter().enumerate() {
            rem[k + i] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Integer coefficients of the N-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(n: u64) -> Arc<[i64]> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<[i64]>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let poly: Vec<i64> = if n == 1 {
        vec![-1, 1]
    } else {
        let mut xn = vec![0i64; n as usize + 1];
        xn[0] = -1;
        xn[n as usize] = 1;
        let mut divisor = vec![1i64];
        for d in 1..n {
            if n.is_multiple_of(d) {
                divisor = poly_mul_int(&divisor, &cyclotomic_polynomial(d));
            }
        }
        poly_div_int(&xn, &divisor)
    };
    let poly: Arc<[i64]> = poly.into();
    cache.lock().unwrap().insert(n, poly.clone());
    poly
}

/// Reduce `p` modulo the N-th cyclotomic polynomial.
fn reduce(mut p: Vec<Rational>, n: u64) -> Vec<Rational> {
    let phi = cyclotomic_polynomial(n);
    let d = phi.len() - 1;
    for k in (d..p.len()).rev() {
        let c = std::mem::take(&mut p[k]);
        if c.is_zero() {
            continue;
        }
        for (i, &f) in phi.iter().enumerate().take(d) {
            if f != 0 {
                p[k - d + i] -= &c * Rational::from_integer(BigInt::from(f));
            }
        }
    }
    p.resize(d, Rational::zero());
    p
}

/// Element of `Q(zeta_N)`, stored as its canonical residue modulo the N-th
/// cyclotomic polynomial: coefficients of `zeta^0 .. zeta^(phi(N)-1)`.
#[derive(Clone)]
pub struct CycNum {
    conductor: u64,
    coeffs: Vec<Rational>,
}

impl CycNum {
    /// Canonical reduction of `sum poly[k] * zeta_N^k`.
    pub fn new(conductor: u64, poly: &[Rational]) -> Result<Self> {
        check_conductor(conductor)?;
        Ok(Self::new_unchecked(conductor, poly.to_vec()))
    }

    /// Same as [`CycNum::new`] with integer coefficients.
    pub fn from_int_poly(conductor: u64, poly: &[i64]) -> Result<Self> {
        let poly: Vec<Rational> = poly
            .iter()
            .map(|&c| Rational::from_integer(BigInt::from(c)))
            .collect();
        Self::new(conductor, &poly)
    }

    fn new_unchecked(conductor: u64, poly: Vec<Rational>) -> Self {
        CycNum {
            conductor,
            coeffs: reduce(poly, conductor),
        }
    }

    pub fn from_rational(q: Rational) -> Self {
        CycNum {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(v)))
    }

    /// `zeta_N^k` for any integer `k`.
    pub fn root_of_unity(conductor: u64, k: i64) -> Result<Self> {
        check_conductor(conductor)?;
        let e = k.rem_euclid(conductor as i64) as usize;
        let mut poly = vec![Rational::zero(); e + 1];
        poly[e] = Rational::one();
        Ok(Self::new_unchecked(conductor, poly))
    }

    /// The imaginary unit, `zeta_4`.
    pub fn i() -> Self {
        Self::root_of_unity(4, 1).expect("conductor 4 is always admissible")
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `Some(q)` when the element lies in `Q`. The residue of a rational is its
    /// own constant polynomial, so membership is read off the coefficients.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Trace from `Q(zeta_N)` down to `Q`.
    pub fn trace(&self) -> Rational {
        let n = self.conductor;
        let mut sum = CycNum::zero_in(n);
        for k in 1..=n {
            if k.gcd(&n) == 1 {
                sum = sum.add_same(&self.galois(k));
            }
        }
        sum.coeffs[0].clone()
    }

    fn zero_in(conductor: u64) -> Self {
        CycNum {
            conductor,
            coeffs: vec![Rational::zero(); euler_phi(conductor)],
        }
    }

    /// Galois automorphism `zeta -> zeta^k` (requires `gcd(k, N) = 1`).
    pub fn galois(&self, k: u64) -> Self {
        let n = self.conductor;
        let mut poly = vec![Rational::zero(); n as usize];
        for (e, c) in self.coeffs.iter().enumerate() {
            let idx = ((e as u64 * k) % n) as usize;
            poly[idx] += c;
        }
        Self::new_unchecked(n, poly)
    }

    /// Complex conjugation, `zeta -> zeta^-1`.
    pub fn conj(&self) -> Self {
        if self.conductor <= 2 {
            return self.clone();
        }
        self.galois(self.conductor - 1)
    }

    /// Image in `Q(zeta_target)`; `target` must be a multiple of the conductor.
    pub fn embed(&self, target: u64) -> Self {
        assert!(
            target.is_multiple_of(self.conductor),
            "cannot embed Q(zeta_{}) into Q(zeta_{})",
            self.conductor,
            target
        );
        if target == self.conductor {
            return self.clone();
        }
        let step = (target / self.conductor) as usize;
        let mut poly = vec![Rational::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (e, c) in self.coeffs.iter().enumerate() {
            poly[e * step] = c.clone();
        }
        Self::new_unchecked(target, poly)
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        let l = self.conductor.lcm(&other.conductor);
        (self.embed(l), other.embed(l))
    }

    fn checked_common(&self, other: &Self) -> Result<(Self, Self)> {
        check_conductor(self.conductor.lcm(&other.conductor))?;
        Ok(self.common(other))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let (a, b) = self.checked_common(other)?;
        Ok(a.add_same(&b))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let (a, b) = self.checked_common(other)?;
        Ok(a.mul_same(&b))
    }

    fn add_same(&self, other: &Self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CycNum {
            conductor: self.conductor,
            coeffs,
        }
    }

    fn mul_same(&self, other: &Self) -> Self {
        let d = self.coeffs.len();
        let mut poly = vec![Rational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    poly[i + j] += a * b;
                }
            }
        }
        Self::new_unchecked(self.conductor, poly)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        CycNum {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against the
    /// cyclotomic polynomial.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let modulus: Vec<Rational> = cyclotomic_polynomial(self.conductor)
            .iter()
            .map(|&c| Rational::from_integer(BigInt::from(c)))
            .collect();
        let (g, s) = ext_gcd(trim(self.coeffs.clone()), modulus);
        // g is a nonzero constant since Phi_N is irreducible.
        debug_assert_eq!(g.len(), 1);
        let g0 = g[0].clone();
        let s: Vec<Rational> = s.into_iter().map(|c| c / &g0).collect();
        Ok(Self::new_unchecked(self.conductor, s))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.checked_mul(&other.inv()?)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = CycNum::from_int(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }

    /// Floating-point rendering for display only.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.conductor as f64;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let v = c.to_f64().unwrap_or(f64::NAN);
                Complex64::from_polar(v, 2.0 * std::f64::consts::PI * k as f64 / n)
            })
            .sum()
    }

    /// `{"conductor": N, "coeffs": ["p/q", ...]}`.
    pub fn to_json(&self) -> Value {
        json!({
            "conductor": self.conductor,
            "coeffs": self.coeffs.iter().map(format_rational).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let conductor = v
            .get("conductor")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("cyclotomic number needs an integer conductor".into()))?;
        let coeffs = v
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("cyclotomic number needs a coeffs array".into()))?;
        let coeffs = coeffs
            .iter()
            .map(|c| {
                c.as_str()
                    .ok_or_else(|| Error::Parse("coefficients are strings".into()))
                    .and_then(parse_rational)
            })
            .collect::<Result<Vec<_>>>()?;
        if coeffs.len() != euler_phi(conductor) {
            return Err(Error::Parse(format!(
                "conductor {conductor} needs {} coefficients, got {}",
                euler_phi(conductor),
                coeffs.len()
            )));
        }
        Self::new(conductor, &coeffs)
    }
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    if p.is_empty() {
        p.push(Rational::zero());
    }
    p
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] -= x;
    }
    trim(out)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = trim(a.to_vec());
    let b = trim(b.to_vec());
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() < b.len() {
        return (vec![Rational::zero()], rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while rem.len() >= b.len() && !(rem.len() == 1 && rem[0].is_zero()) {
        let k = rem.len() - 1 - db;
        let c = rem.last().unwrap().clone() / &lead;
        for (i, y) in b.iter().enumerate() {
            rem[k + i] -= &c * y;
        }
        quot[k] = c;
        rem.pop();
        rem = trim(rem);
        if rem.len() < b.len() {
            break;
        }
    }
    (trim(quot), rem)
}

/// Returns `(g, s)` with `s * a = g (mod b)`.
fn ext_gcd(a: Vec<Rational>, b: Vec<Rational>) -> (Vec<Rational>, Vec<Rational>) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (vec![Rational::one()], vec![Rational::zero()]);
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = poly_divrem(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    (r0, s0)
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycNum {}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Polynomial notation in `zetaN`, e.g. `2 + zeta3`.
impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let atom = match k {
                0 => String::new(),
                1 => format!("zeta{}", self.conductor),
                _ => format!("zeta{}^{}", self.conductor, k),
            };
            let term = if atom.is_empty() {
                c.to_string()
            } else if c.is_one() {
                atom
            } else if *c == -Rational::one() {
                format!("-{atom}")
            } else {
                format!("{c}*{atom}")
            };
            terms.push(term);
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = terms[0].clone();
        for t in &terms[1..] {
            if let Some(rest) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
        write!(f, "{out}")
    }
}

impl Add for CycNum {
    type Output = CycNum;
    fn add(self, rhs: CycNum) -> CycNum {
        if self.conductor == rhs.conductor {
            return self.add_same(&rhs);
        }
        self.checked_add(&rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for CycNum {
    type Output = CycNum;
    fn sub(self, rhs: CycNum) -> CycNum {
        self + (-rhs)
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            conductor: self.conductor,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for CycNum {
    type Output = CycNum;
    fn mul(self, rhs: CycNum) -> CycNum {
        if self.conductor == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.conductor == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        if self.conductor == rhs.conductor {
            return self.mul_same(&rhs);
        }
        self.checked_mul(&rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Zero for CycNum {
    fn zero() -> Self {
        CycNum::from_int(0)
    }
    fn is_zero(&self) -> bool {
        CycNum::is_zero(self)
    }
}

impl One for CycNum {
    fn one() -> Self {
        CycNum::from_int(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{frac, rat};

    fn z3() -> CycNum {
        CycNum::root_of_unity(3, 1).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(&*cyclotomic_polynomial(1), &[-1, 1]);
        assert_eq!(&*cyclotomic_polynomial(3), &[1, 1, 1]);
        assert_eq!(&*cyclotomic_polynomial(4), &[1, 0, 1]);
        assert_eq!(&*cyclotomic_polynomial(12), &[1, 0, -1, 0, 1]);
        for n in 1..=60 {
            assert_eq!(cyclotomic_polynomial(n).len() - 1, euler_phi(n), "n={n}");
        }
    }

    #[test]
    fn a2_scalar_from_polynomial() {
        let a = CycNum::from_int_poly(3, &[2, 1]).unwrap();
        assert_eq!(a.coeffs(), &[rat(2), rat(1)]);
        // floating oracle: 3/2 + i*sqrt(3)/2
        let c = a.to_complex();
        assert!((c.re - 1.5).abs() < 1e-12);
        assert!((c.im - 3f64.sqrt() / 2.0).abs() < 1e-12);
    }

    #[test]
    fn i_squares_to_minus_one() {
        let i = CycNum::from_int_poly(4, &[0, 1]).unwrap();
        assert_eq!(i.clone() * i, CycNum::from_int(-1));
    }

    #[test]
    fn conductor_one_is_rational() {
        let five = CycNum::from_int_poly(1, &[5]).unwrap();
        assert_eq!(five.as_rational(), Some(rat(5)));
        assert_eq!(five, CycNum::from_int(5));
    }

    #[test]
    fn a2_constraint_product() {
        let a = rat_cyc(3, &[2, 1]);
        let b = rat_cyc(3, &[-1, 1]);
        assert_eq!(a * b, CycNum::from_int(-3));
    }

    fn rat_cyc(n: u64, p: &[i64]) -> CycNum {
        CycNum::from_int_poly(n, p).unwrap()
    }

    #[test]
    fn inverse_of_one_plus_i() {
        let x = rat_cyc(4, &[1, 1]);
        let expected = CycNum::new(4, &[frac(1, 2), frac(-1, 2)]).unwrap();
        assert_eq!(x.inv().unwrap(), expected);
    }

    #[test]
    fn conj_of_zeta3() {
        assert_eq!(z3().conj(), z3() * z3());
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(CycNum::from_int(0).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn mixed_conductors_embed() {
        // zeta4 * zeta3 = zeta12^(3+4)
        let p = CycNum::i() * z3();
        assert_eq!(p, CycNum::root_of_unity(12, 7).unwrap());
        assert_eq!(p.conductor(), 12);
        // zeta6 = -zeta3^2
        assert_eq!(CycNum::root_of_unity(6, 1).unwrap(), -(z3() * z3()));
    }

    #[test]
    fn conductor_cap_enforced() {
        assert!(matches!(
            CycNum::root_of_unity(max_conductor() + 1, 1),
            Err(Error::ConductorTooLarge { .. })
        ));
        let a = CycNum::root_of_unity(7, 1).unwrap();
        let b = CycNum::root_of_unity(20, 1).unwrap();
        assert!(matches!(a.checked_mul(&b), Err(Error::ConductorTooLarge { .. })));
    }

    #[test]
    fn rational_detection() {
        let z = z3();
        let s = z.clone() + z.conj();
        assert_eq!(s.as_rational(), Some(rat(-1)));
        assert_eq!(z.as_rational(), None);
        let sqrt_m3 = rat_cyc(3, &[1, 2]);
        assert_eq!((sqrt_m3.clone() * sqrt_m3).as_rational(), Some(rat(-3)));
    }

    #[test]
    fn json_roundtrip() {
        let x = CycNum::new(5, &[frac(1, 2), rat(0), frac(-3, 7), rat(2)]).unwrap();
        let v = x.to_json();
        assert_eq!(v["conductor"], 5);
        assert_eq!(CycNum::from_json(&v).unwrap(), x);
    }

    #[test]
    fn display() {
        assert_eq!(rat_cyc(3, &[2, 1]).to_string(), "2 + zeta3");
        assert_eq!(rat_cyc(3, &[-1, 1]).to_string(), "-1 + zeta3");
        assert_eq!(CycNum::from_int(0).to_string(), "0");
    }
}
