use serde::{Deserialize, Serialize};

use crate::element::{inner, Element};
use crate::error::{Error, Result};
use crate::frames::{is_doubly_pure, FramePair};
use crate::report::{Check, Counterexample, Report};
use crate::scalar::Scalar;

use super::{hopf, in_e, in_p_pair};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exhaustive,
    Numeric,
}

/// A verified zero-divisor pair: `a, b` nonzero and doubly pure, `b`
/// orthogonal to `H_a`, and `ab = 0` exactly. Construction re-checks all of
/// these.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroDivisorCert {
    pair: FramePair,
    norms_sq: [Scalar; 2],
    method: Method,
    seed: Option<u64>,
    support: Option<usize>,
}

/// Wire form: `{"level": n, "a": [...], "b": [...], "residual": "0",
/// "seed": s, "method": "exhaustive" | "numeric"}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertJson {
    pub level: u32,
    pub a: Vec<Scalar>,
    pub b: Vec<Scalar>,
    pub residual: Scalar,
    pub seed: Option<u64>,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub support: Option<usize>,
}

impl ZeroDivisorCert {
    pub fn new(a: Element, b: Element, method: Method, seed: Option<u64>, support: Option<usize>) -> Result<Self> {
        let pair = FramePair::new(a, b)?;
        let bad = |m: &str| Err(Error::InvalidCertificate(m.to_string()));
        if pair.a.is_zero() || pair.b.is_zero() {
            return bad("a and b must be nonzero");
        }
        if !(&pair.a * &pair.b).is_zero() {
            return bad("ab is not zero");
        }
        if !is_doubly_pure(&pair.a) || !is_doubly_pure(&pair.b) {
            return bad("a and b must be doubly pure");
        }
        if !inner(&pair.a, &pair.b)?.is_zero() || !inner(&pair.a.tilde()?, &pair.b)?.is_zero() {
            return bad("b is not orthogonal to H_a");
        }
        let norms_sq = [pair.a.norm_sq(), pair.b.norm_sq()];
        Ok(ZeroDivisorCert { pair, norms_sq, method, seed, support })
    }

    pub fn pair(&self) -> &FramePair {
        &self.pair
    }

    pub fn a(&self) -> &Element {
        &self.pair.a
    }

    pub fn b(&self) -> &Element {
        &self.pair.b
    }

    pub fn level(&self) -> u32 {
        self.pair.level()
    }

    pub fn norms_sq(&self) -> &[Scalar; 2] {
        &self.norms_sq
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    /// `(a, b)` as an element of the next level.
    pub fn alpha(&self) -> Element {
        self.pair.to_alpha()
    }

    pub fn to_json(&self) -> CertJson {
        CertJson {
            level: self.level(),
            a: self.pair.a.coeffs().to_vec(),
            b: self.pair.b.coeffs().to_vec(),
            residual: (&self.pair.a * &self.pair.b).norm_sq(),
            seed: self.seed,
            method: self.method,
            support: self.support,
        }
    }

    pub fn from_json(j: &CertJson) -> Result<Self> {
        if !j.residual.is_zero() {
            return Err(Error::InvalidCertificate(format!("recorded residual {} is not zero", j.residual)));
        }
        let a = Element::new(j.level, j.a.clone())?;
        let b = Element::new(j.level, j.b.clone())?;
        ZeroDivisorCert::new(a, b, j.method, j.seed, j.support)
    }

    /// Re-runs every certificate invariant from scratch, including the
    /// complexified products and the Hopf and associator consequences.
    pub fn verify(&self) -> Report {
        verify_pair(&self.pair)
    }
}

/// The certificate checks on a bare pair; never errors, failures land in
/// the report.
pub fn verify_pair(p: &FramePair) -> Report {
    let mut rep = Report::new("verify-cert", "zero-divisor certificate invariants");
    let (a, b) = (&p.a, &p.b);
    let cx = || Counterexample::new("certificate").with("a", a).with("b", b);

    let mut nonzero = Check::new("nonzero");
    nonzero.record(!a.is_zero() && !b.is_zero(), cx);
    rep.push(nonzero);

    let mut dp = Check::new("doubly-pure");
    dp.record(a.level() >= 1 && is_doubly_pure(a) && is_doubly_pure(b), cx);
    rep.push(dp);
    if a.level() < 2 || !is_doubly_pure(a) || !is_doubly_pure(b) {
        return rep;
    }

    let at = a.tilde().expect("level");
    let bt = b.tilde().expect("level");
    let mut perp = Check::new("b-perp-H_a");
    perp.record(inner(a, b).expect("level").is_zero() && inner(&at, b).expect("level").is_zero(), cx);
    rep.push(perp);

    let mut products = Check::new("complexified-products-vanish");
    for (name, x, y) in [("ab", a, b), ("a~b", &at, b), ("ab~", a, &bt), ("a~b~", &at, &bt)] {
        products.record((x * y).is_zero(), || cx().with("product", name));
    }
    rep.push(products);

    let mut hopf_check = Check::new("hopf-zero-at-equal-norms");
    if a.norm_sq() == b.norm_sq() {
        let h = hopf(a, b).expect("level");
        hopf_check.record(h.is_zero(), cx);
    } else {
        hopf_check.note("norms differ; Hopf value has nonzero real part by construction");
    }
    rep.push(hopf_check);

    if a.level() >= 3 {
        let alpha = p.to_alpha();
        let mut e_check = Check::new("alpha-in-E");
        e_check.record(in_e(&alpha).unwrap_or(false), cx);
        rep.push(e_check);
        let mut p_check = Check::new("alpha-not-in-P");
        p_check.record(!in_p_pair(a, b).unwrap_or(true), cx);
        rep.push(p_check);
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize) -> Element {
        Element::basis(4, i).unwrap()
    }

    #[test]
    fn construction_checks_invariants() {
        let c = ZeroDivisorCert::new(&e(1) + &e(10), &e(4) - &e(15), Method::Exhaustive, None, Some(2)).unwrap();
        assert!(c.verify().passed);
        assert!(ZeroDivisorCert::new(e(1), e(2), Method::Exhaustive, None, None).is_err());
        assert!(ZeroDivisorCert::new(Element::zero(4), e(2), Method::Exhaustive, None, None).is_err());
    }

    #[test]
    fn json_round_trip_and_tamper() {
        let c = ZeroDivisorCert::new(&e(1) + &e(10), &e(4) - &e(15), Method::Exhaustive, None, Some(2)).unwrap();
        let j = c.to_json();
        let text = serde_json::to_string(&j).unwrap();
        assert!(text.contains(r#""residual":"0""#));
        assert!(text.contains(r#""method":"exhaustive""#));
        let back: CertJson = serde_json::from_str(&text).unwrap();
        assert_eq!(ZeroDivisorCert::from_json(&back).unwrap(), c);
        let mut tampered = back.clone();
        tampered.b[15] = Scalar::one();
        assert!(ZeroDivisorCert::from_json(&tampered).is_err());
        let mut lying = back;
        lying.residual = Scalar::one();
        assert!(ZeroDivisorCert::from_json(&lying).is_err());
    }
}
