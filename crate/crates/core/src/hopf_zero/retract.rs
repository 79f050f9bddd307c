//! The associator set `E_n`, the complex-collinear pairs `P(n)` and the
//! retraction of `E_n \ P(n)` onto the zero-divisor pairs.

use crate::element::{associator, Element};
use crate::error::{Error, Result};
use crate::frames::{epsilon, is_doubly_pure, project_h, require_h_eps_perp, FramePair};
use crate::linalg::rank_of;

/// `(alpha, alpha, epsilon) = 0` for `alpha` in the complement of
/// `H_epsilon`.
pub fn in_e(alpha: &Element) -> Result<bool> {
    require_h_eps_perp(alpha)?;
    let eps = epsilon(alpha.level() - 1)?;
    Ok(associator(alpha, alpha, &eps)?.is_zero())
}

/// Complex collinearity of the halves of `alpha` under `i x = x~`.
pub fn in_p(alpha: &Element) -> Result<bool> {
    let (a, b) = alpha.split()?;
    in_p_pair(&a, &b)
}

/// `a = 0`, or `b` in `span_R{a, a~}`.
pub fn in_p_pair(a: &Element, b: &Element) -> Result<bool> {
    if a.level() != b.level() {
        return Err(Error::LevelMismatch { left: a.level(), right: b.level() });
    }
    if !is_doubly_pure(a) || !is_doubly_pure(b) {
        return Err(Error::pre("collinearity test is defined on doubly pure halves"));
    }
    if a.is_zero() {
        return Ok(true);
    }
    let at = a.tilde()?;
    Ok(rank_of(&[a, &at, b]) == 2)
}

/// `w(a, b) = (a, e~_0, b)`.
pub fn w_map(a: &Element, b: &Element) -> Result<Element> {
    if a.level() != b.level() {
        return Err(Error::LevelMismatch { left: a.level(), right: b.level() });
    }
    if !is_doubly_pure(a) || !is_doubly_pure(b) {
        return Err(Error::pre("w is defined on doubly pure pairs"));
    }
    associator(a, &Element::e0_tilde(a.level())?, b)
}

/// `(a, b) -> (a, d)` where `b = c + d` splits along `H_a` and its
/// complement. Defined on `E_n \ P(n)`.
pub fn retract(alpha: &Element) -> Result<FramePair> {
    require_h_eps_perp(alpha)?;
    let (a, b) = alpha.split()?;
    if in_p_pair(&a, &b)? {
        return Err(Error::pre("retraction undefined on C-collinear pairs"));
    }
    if !in_e(alpha)? {
        return Err(Error::pre("retraction needs (alpha, alpha, epsilon) = 0"));
    }
    let (_, d) = project_h(&a, &b)?;
    if d.is_zero() || !(&a * &d).is_zero() {
        return Err(Error::Internal("retraction image is not a zero-divisor pair".into()));
    }
    FramePair::new(a, d)
}
