//! The Hopf construction map `F(x, y) = (2xy, |y|^2 - |x|^2)`, zero-divisor
//! pairs and the sets around them.
//!
//! `X_n^r` is the set of pairs `(x, y)` with `xy = 0` and `|x| = |y| = r`.
//! Radii are handled through `r^2`, which stays rational for the integer
//! certificates produced by the exhaustive search (`r^2 = 2` for two-term
//! pairs).

mod cert;
pub mod numeric;
mod retract;
mod search;

pub use cert::{verify_pair, CertJson, Method, ZeroDivisorCert};
pub use numeric::{round_to_cert, search_numeric, NumericConfig, NumericResult};
pub use retract::{in_e, in_p, in_p_pair, retract, w_map};
pub use search::{search_exhaustive, search_exhaustive_with};

use serde::Serialize;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::frames::FramePair;
use crate::scalar::Scalar;

/// `(2xy, |y|^2 - |x|^2)` in `A_n x A_0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HopfValue {
    pub first: Element,
    pub second: Scalar,
}

impl HopfValue {
    pub fn norm_sq(&self) -> Scalar {
        &self.first.norm_sq() + &self.second.square()
    }

    pub fn is_zero(&self) -> bool {
        self.first.is_zero() && self.second.is_zero()
    }
}

pub fn hopf(x: &Element, y: &Element) -> Result<HopfValue> {
    let xy = x.try_mul(y)?;
    Ok(HopfValue { first: xy.scale(&Scalar::from_int(2)), second: &y.norm_sq() - &x.norm_sq() })
}

/// Exact membership in `X_n^r`, given `r^2`.
pub fn in_xr(p: &FramePair, r_squared: &Scalar) -> Result<bool> {
    if !r_squared.is_positive() {
        return Err(Error::pre("radius must be positive"));
    }
    Ok(&p.a.norm_sq() == r_squared && &p.b.norm_sq() == r_squared && (&p.a * &p.b).is_zero())
}

/// `X_n^r -> X_n^s` by multiplying both coordinates by `s / r`.
pub fn rescale_x(p: &FramePair, r_squared: &Scalar, factor: &Scalar) -> Result<FramePair> {
    if !factor.is_positive() {
        return Err(Error::pre("rescale factor must be positive"));
    }
    if !in_xr(p, r_squared)? {
        return Err(Error::pre(format!("pair is not in X^r for r^2 = {r_squared}")));
    }
    FramePair::new(p.a.scale(factor), p.b.scale(factor))
}

/// Exact normalization of each coordinate; needs rational norms.
pub fn normalize_to_x(p: &FramePair) -> Result<FramePair> {
    check_zero_product(p)?;
    FramePair::new(p.a.normalize_exact()?, p.b.normalize_exact()?)
}

/// Float normalization of a pair with zero product.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FloatPair {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    /// `|a| - 1`, `|b| - 1`
    pub norm_residuals: [f64; 2],
    /// `|ab|`
    pub product_residual: f64,
}

pub fn normalize_to_x_float(p: &FramePair) -> Result<FloatPair> {
    check_zero_product(p)?;
    let unit = |v: Vec<f64>| {
        let n = numeric::norm(&v);
        v.into_iter().map(|x| x / n).collect::<Vec<f64>>()
    };
    let a = unit(p.a.to_f64());
    let b = unit(p.b.to_f64());
    let ab = numeric::mul_f64(&a, &b);
    Ok(FloatPair {
        norm_residuals: [numeric::norm(&a) - 1.0, numeric::norm(&b) - 1.0],
        product_residual: numeric::norm(&ab),
        a,
        b,
    })
}

fn check_zero_product(p: &FramePair) -> Result<()> {
    if p.a.is_zero() || p.b.is_zero() {
        return Err(Error::ZeroVector);
    }
    if !(&p.a * &p.b).is_zero() {
        return Err(Error::pre("pair does not multiply to zero"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(level: u32, i: usize) -> Element {
        Element::basis(level, i).unwrap()
    }

    fn cert_pair() -> FramePair {
        // (e1 + e10)(e4 - e15) = 0 in A_4
        FramePair::new(&e(4, 1) + &e(4, 10), &e(4, 4) - &e(4, 15)).unwrap()
    }

    #[test]
    fn hopf_of_unit_and_zero() {
        let v = hopf(&e(2, 1), &Element::zero(2)).unwrap();
        assert!(v.first.is_zero());
        assert_eq!(v.second, Scalar::from_int(-1));
    }

    #[test]
    fn hopf_vanishes_on_zero_divisors() {
        let p = cert_pair();
        assert!((&p.a * &p.b).is_zero());
        assert!(hopf(&p.a, &p.b).unwrap().is_zero());
    }

    #[test]
    fn radius_membership_and_rescale() {
        let p = cert_pair();
        assert!(in_xr(&p, &Scalar::from_int(2)).unwrap());
        assert!(!in_xr(&p, &Scalar::one()).unwrap());
        assert!(in_xr(&p, &Scalar::zero()).is_err());
        let q = rescale_x(&p, &Scalar::from_int(2), &Scalar::ratio(1, 2)).unwrap();
        assert!(in_xr(&q, &Scalar::ratio(1, 2)).unwrap());
        let off = FramePair::new(e(4, 1), e(4, 2)).unwrap();
        for r2 in [1, 2, 5] {
            assert!(!in_xr(&off, &Scalar::from_int(r2)).unwrap());
        }
    }

    #[test]
    fn normalization() {
        let p = cert_pair();
        assert!(matches!(normalize_to_x(&p), Err(Error::IrrationalNorm(_))));
        let f = normalize_to_x_float(&p).unwrap();
        assert!(f.norm_residuals.iter().all(|r| r.abs() < 1e-12));
        assert!(f.product_residual < 1e-12);
        let with_rational_norm = FramePair::new(
            &e(4, 1).scale(&Scalar::from_int(3)) + &e(4, 2).scale(&Scalar::from_int(4)),
            Element::zero(4),
        )
        .unwrap();
        assert_eq!(normalize_to_x(&with_rational_norm), Err(Error::ZeroVector));
    }
}
