//! Classical cohomology `H*(Z)` of the crepant resolution.
//!
//! Elements are `rho^*(delta) + sum_l j_{l*} pi_l^*(alpha_l)`, written
//! `delta + sum alpha_l E_l`. The ring is `H*(S)`-linear in the exceptional
//! coefficients, so everything reduces to the products `E_i E_j`, whose
//! `sigma` part is `(c_n)_{ij}` and whose exceptional part is a degree-2
//! combination of `em` and `kap` for each `E_l`.

use crate::cartan::{cartan_entry, cartan_inverse_entry};
use crate::error::{Error, Result};
use crate::geometry::{i_pull, i_push, integrate_y, y_mul, Geometry, GradedClass, TautLinear, TotalClass};
use crate::ring::{Res, ResClass, RingProduct};
use crate::scalars::{rat, Scalar};

/// Exceptional coefficients of `E_i E_j`, one [`TautLinear`] per `E_l`,
/// straight from the closed formulas in terms of `c_n^{-1}`:
///
/// ```text
/// E_{i-1} E_i : [c(i,l) - c(i-1,l)] M + [i c(i-1,l) - (i-1) c(i,l)] K
/// E_i E_i     : [c(i-1,l) - c(i+1,l)] M
///               + [-(i-1) c(i-1,l) - 4 c(i,l) + (i+1) c(i+1,l)] K
/// ```
///
/// with `c = c_n^{-1}` and zero boundary rows. For `n = 1` it is `E E = 2 kap E`.
pub fn printed_twisted_coefficients(n: usize, i: usize, j: usize) -> Result<Vec<TautLinear>> {
    for k in [i, j] {
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange { index: k, max: n });
        }
    }
    if n == 1 {
        return Ok(vec![TautLinear::new(rat(0), rat(2))]);
    }
    let c = |a: usize, b: usize| cartan_inverse_entry(n, a, b);
    let (lo, hi) = (i.min(j), i.max(j));
    let coeffs = (1..=n)
        .map(|l| {
            if hi - lo > 1 {
                TautLinear::default()
            } else if lo == hi {
                let i = lo;
                let ii = rat(i as i64);
                TautLinear::new(
                    c(i - 1, l) - c(i + 1, l),
                    -(&ii - rat(1)) * c(i - 1, l) - rat(4) * c(i, l) + (&ii + rat(1)) * c(i + 1, l),
                )
            } else {
                let i = hi;
                let ii = rat(i as i64);
                TautLinear::new(
                    c(i, l) - c(i - 1, l),
                    &ii * c(i - 1, l) - (&ii - rat(1)) * c(i, l),
                )
            }
        })
        .collect();
    Ok(coeffs)
}

/// Shared product for the classical and quantum resolution rings: `coeff(i, j)`
/// returns the degree-2 classes multiplying `E_l` in `E_i E_j`.
pub(crate) fn divisor_mul<'a, F, C>(
    geometry: &Geometry,
    x: &ResClass<F>,
    y: &ResClass<F>,
    coeff: C,
) -> Result<ResClass<F>>
where
    F: Scalar + 'a,
    C: Fn(usize, usize) -> Result<&'a [GradedClass<F>]>,
{
    x.check_shape(geometry)?;
    y.check_shape(geometry)?;
    let n = geometry.n();
    let mut out = ResClass::<F>::zero(geometry);
    out.y = y_mul(&x.y, &y.y);
    let (dx, dy) = (i_pull(&x.y), i_pull(&y.y));
    for l in 0..n {
        out.twisted[l] = &x.twisted[l].mul(&dy) + &dx.mul(&y.twisted[l]);
    }
    for i in 1..=n {
        if x.sector(i).is_zero() {
            continue;
        }
        for j in 1..=n {
            if y.sector(j).is_zero() {
                continue;
            }
            let ab = x.sector(i).mul(y.sector(j));
            let cij = F::from_rational(&rat(cartan_entry(n, i, j)));
            out.y = &out.y + &i_push(&ab.scale(&cij));
            for (l, k) in coeff(i, j)?.iter().enumerate() {
                out.twisted[l] = &out.twisted[l] + &ab.mul(k);
            }
        }
    }
    Ok(out)
}

/// `H*(Z)` with the classical cup product.
#[derive(Clone, Debug)]
pub struct ResolutionRing<F> {
    geometry: Geometry,
    // table[i-1][j-1][l-1]
    table: Vec<Vec<Vec<GradedClass<F>>>>,
}

impl<F: Scalar> ResolutionRing<F> {
    pub fn new(geometry: Geometry) -> Self {
        let n = geometry.n();
        let table = (1..=n)
            .map(|i| {
                (1..=n)
                    .map(|j| {
                        printed_twisted_coefficients(n, i, j)
                            .expect("indices in range")
                            .iter()
                            .map(|t| geometry.taut_class(t))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        ResolutionRing { geometry, table }
    }

    /// `int_Z x y`: only the `rho^*` part survives push-forward to `Y`.
    pub fn res_pairing(&self, x: &ResClass<F>, y: &ResClass<F>) -> Result<F> {
        Ok(integrate_y(self.geometry.base(), &self.mul(x, y)?.y))
    }

    pub fn res_integrate(&self, x: &ResClass<F>) -> F {
        integrate_y(self.geometry.base(), &x.y)
    }
}

impl<F: Scalar> RingProduct<F> for ResolutionRing<F> {
    type Kind = Res;

    fn geometry(&self) -> &Geometry {
        &self.geometry
    }

    fn mul(&self, x: &ResClass<F>, y: &ResClass<F>) -> Result<ResClass<F>> {
        divisor_mul(&self.geometry, x, y, |i, j| Ok(&self.table[i - 1][j - 1][..]))
    }
}

/// `rho^*(delta)`.
pub fn rho_pull<F: Scalar>(geometry: &Geometry, delta: TotalClass<F>) -> Result<ResClass<F>> {
    let x = ResClass::from_y(geometry, delta);
    x.check_shape(geometry)?;
    Ok(x)
}

/// `j_{l*} pi_l^*(alpha) = alpha E_l`.
pub fn exc_push<F: Scalar>(geometry: &Geometry, l: usize, alpha: GradedClass<F>) -> Result<ResClass<F>> {
    if alpha.rank() != geometry.rank() {
        return Err(Error::GeometryMismatch("class rank does not match the base".into()));
    }
    ResClass::generator(geometry, l, alpha)
}

/// `E_l <-> E_{n+1-l}` together with `ell <-> em`, acting on a combination of
/// `em` and `kap`: `a em + b kap` goes to `a ell + b kap = -a em + (b + (n+1) a) kap`.
pub fn swap_ell_em(n: usize, t: &TautLinear) -> TautLinear {
    TautLinear::new(-t.em.clone(), &t.kap + &t.em * rat(n as i64 + 1))
}
