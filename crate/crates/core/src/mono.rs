//! Unital multiplicative embeddings `A_m -> A_n`.

use serde::{Deserialize, Serialize};

use crate::element::{associator, dim, inner, Element};
use crate::error::{Error, Result};
use crate::frames::{epsilon, in_v, oct_basis, require_h_eps_perp, FramePair, OCT_NAMES};
use crate::hopf_zero::in_e;
use crate::linalg::rank;
use crate::report::{Check, Counterexample, Report};
use crate::scalar::Scalar;
use crate::table::build_table;

/// Column `j` is the image of `e_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawMap", into = "RawMap")]
pub struct LinearMap {
    domain: u32,
    codomain: u32,
    columns: Vec<Element>,
}

#[derive(Serialize, Deserialize)]
struct RawMap {
    domain: u32,
    codomain: u32,
    columns: Vec<Vec<Scalar>>,
}

impl TryFrom<RawMap> for LinearMap {
    type Error = Error;

    fn try_from(raw: RawMap) -> Result<Self> {
        let cols = raw.columns.into_iter().map(|c| Element::new(raw.codomain, c)).collect::<Result<Vec<_>>>()?;
        LinearMap::new(raw.domain, raw.codomain, cols)
    }
}

impl From<LinearMap> for RawMap {
    fn from(m: LinearMap) -> Self {
        RawMap { domain: m.domain, codomain: m.codomain, columns: m.columns.into_iter().map(Element::into_coeffs).collect() }
    }
}

impl LinearMap {
    /// Requires `2^m` columns at level `n` with `e_0 -> e_0`.
    pub fn new(domain: u32, codomain: u32, columns: Vec<Element>) -> Result<Self> {
        if domain > codomain {
            return Err(Error::pre("domain level exceeds codomain level"));
        }
        if columns.len() != dim(domain) {
            return Err(Error::BadLength { expected: dim(domain), got: columns.len() });
        }
        if let Some(c) = columns.iter().find(|c| c.level() != codomain) {
            return Err(Error::LevelMismatch { left: codomain, right: c.level() });
        }
        if columns[0] != Element::one(codomain) {
            return Err(Error::pre("map must send e0 to e0"));
        }
        Ok(LinearMap { domain, codomain, columns })
    }

    /// `x -> (x, 0, ..., 0)`.
    pub fn trivial(domain: u32, codomain: u32) -> Result<Self> {
        let cols = (0..dim(domain)).map(|j| Element::basis(codomain, j)).collect::<Result<Vec<_>>>()?;
        LinearMap::new(domain, codomain, cols)
    }

    pub fn domain(&self) -> u32 {
        self.domain
    }

    pub fn codomain(&self) -> u32 {
        self.codomain
    }

    pub fn columns(&self) -> &[Element] {
        &self.columns
    }

    pub fn column(&self, j: usize) -> &Element {
        &self.columns[j]
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        if x.level() != self.domain {
            return Err(Error::LevelMismatch { left: self.domain, right: x.level() });
        }
        let mut out = Element::zero(self.codomain);
        for (c, col) in x.coeffs().iter().zip(&self.columns) {
            if !c.is_zero() {
                out = &out + &col.scale(c);
            }
        }
        Ok(out)
    }
}

/// Unitality, injectivity, isometry and multiplicativity on all basis pairs
/// (enough by bilinearity).
pub fn is_monomorphism(phi: &LinearMap) -> Report {
    let mut rep = Report::new("monomorphism", "unital injective multiplicative linear map");

    let mut unital = Check::new("unital");
    unital.record(phi.columns[0] == Element::one(phi.codomain), || Counterexample::new("phi(e0) != e0").with("phi_e0", &phi.columns[0]));
    rep.push(unital);

    let mut injective = Check::new("injective");
    let rows: Vec<Vec<Scalar>> = phi.columns.iter().map(|c| c.coeffs().to_vec()).collect();
    let r = rank(&rows);
    injective.record(r == phi.columns.len(), || Counterexample::new("rank deficit").with("rank", &r));
    rep.push(injective);

    let mut isometric = Check::new("isometric");
    for (i, ci) in phi.columns.iter().enumerate() {
        for (j, cj) in phi.columns.iter().enumerate().skip(i) {
            let want = if i == j { Scalar::one() } else { Scalar::zero() };
            let got = inner(ci, cj).expect("same level");
            isometric.record(got == want, || Counterexample::new("columns not orthonormal").with("i", &i).with("j", &j).with("inner", &got));
        }
    }
    rep.push(isometric);

    let mut mult = Check::new("multiplicative");
    match build_table(phi.domain) {
        Ok(table) => {
            for i in 0..phi.columns.len() {
                for j in 0..phi.columns.len() {
                    let (k, s) = table.get(i, j);
                    let want = phi.columns[k].scale(&Scalar::from_int(s as i64));
                    let got = &phi.columns[i] * &phi.columns[j];
                    mult.record(got == want, || {
                        Counterexample::new("phi(e_i e_j) != phi(e_i) phi(e_j)").with("i", &i).with("j", &j).with("got", &got).with("want", &want)
                    });
                }
            }
        }
        Err(e) => mult.record(false, || Counterexample::new(e.to_string())),
    }
    rep.push(mult);
    rep
}

/// `A_1 -> A_n`, `e_1 -> w`, for a pure unit `w`.
pub fn phi_w(w: &Element, n: u32) -> Result<LinearMap> {
    if w.level() != n {
        return Err(Error::LevelMismatch { left: n, right: w.level() });
    }
    if n < 1 {
        return Err(Error::LevelTooLow { min: 1, got: n });
    }
    if !w.trace().is_zero() {
        return Err(Error::pre("w must be pure"));
    }
    if !w.norm_sq().is_one() {
        return Err(Error::pre("w must have norm 1"));
    }
    LinearMap::new(1, n, vec![Element::one(n), w.clone()])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlternationFlag {
    /// `(a, a, b) = 0`
    pub weak: bool,
    /// additionally `(a, b, b) = 0`
    pub strong: bool,
}

pub fn alternation(a: &Element, b: &Element) -> Result<AlternationFlag> {
    let weak = associator(a, a, b)?.is_zero();
    let strong = weak && associator(a, b, b)?.is_zero();
    Ok(AlternationFlag { weak, strong })
}

/// `A_2 -> A_n`: `e_1 -> a`, `e_2 -> b`, `e_3 -> ab`.
pub fn pair_to_quat_mono(a: &Element, b: &Element) -> Result<LinearMap> {
    let p = FramePair::new(a.clone(), b.clone())?;
    if !in_v(&p)? {
        return Err(Error::pre("(a, b) must lie in V: pure, unit, orthogonal"));
    }
    if !alternation(a, b)?.strong {
        return Err(Error::pre("a and b must alternate strongly"));
    }
    let n = a.level();
    LinearMap::new(2, n, vec![Element::one(n), a.clone(), b.clone(), a * b])
}

/// Products of the octonion basis as printed, in the order of
/// [`OCT_NAMES`]: `(index, sign)`.
pub const PRINTED_OCT_TABLE: [[(usize, i8); 8]; 8] = [
    [(0, 1), (1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (6, 1), (7, 1)],
    [(1, 1), (0, -1), (3, 1), (2, -1), (5, 1), (4, -1), (7, -1), (6, 1)],
    [(2, 1), (3, -1), (0, -1), (1, 1), (6, 1), (7, 1), (4, -1), (5, -1)],
    [(3, 1), (2, 1), (1, -1), (0, -1), (7, 1), (6, -1), (5, 1), (4, -1)],
    [(4, 1), (5, -1), (6, -1), (7, -1), (0, -1), (1, 1), (2, 1), (3, -1)],
    [(5, 1), (4, 1), (7, -1), (6, 1), (1, -1), (0, -1), (3, -1), (2, 1)],
    [(6, 1), (7, 1), (4, 1), (5, -1), (2, -1), (3, 1), (0, -1), (1, -1)],
    [(7, 1), (6, -1), (5, 1), (4, 1), (3, 1), (2, -1), (1, 1), (0, -1)],
];

/// The map `e_0..e_7 -> e0, eps~, eps, e0~, alpha~, alpha eps, eps~ alpha,
/// alpha` with no precondition beyond `alpha` in the complement of
/// `H_epsilon`.
pub fn oct_map(alpha: &Element) -> Result<LinearMap> {
    let basis = oct_basis(alpha)?;
    LinearMap::new(3, alpha.level(), basis.elems.to_vec())
}

/// Builds the octonion embedding for a unit `alpha` with
/// `(alpha, alpha, eps) = 0` and checks all 64 products against the
/// codomain and against the printed table.
pub fn oct_mono_from_alpha(alpha: &Element) -> Result<(LinearMap, Report)> {
    require_h_eps_perp(alpha)?;
    if alpha.level() < 5 {
        return Err(Error::LevelTooLow { min: 5, got: alpha.level() });
    }
    if !alpha.norm_sq().is_one() {
        return Err(Error::pre("alpha must have norm 1"));
    }
    if !in_e(alpha)? {
        return Err(Error::pre("(alpha, alpha, eps) must vanish"));
    }
    let phi = oct_map(alpha)?;
    let mut rep = Report::new("octonion-embedding", "octonion subalgebra spanned by alpha and H_epsilon");
    for c in is_monomorphism(&phi).checks {
        rep.push_result(c);
    }

    let cols = phi.columns();
    let mut skew = Check::new("skew-symmetric-minus-e0-diagonal");
    let mut printed = Check::new("printed-table");
    for i in 0..8 {
        for j in 0..8 {
            let prod = &cols[i] * &cols[j];
            if i > 0 && j > 0 {
                let ok = if i == j { prod == -&cols[0] } else { prod == -&(&cols[j] * &cols[i]) };
                skew.record(ok, || Counterexample::new("not skew").with("row", OCT_NAMES[i]).with("col", OCT_NAMES[j]));
            }
            let (k, s) = PRINTED_OCT_TABLE[i][j];
            let want = cols[k].scale(&Scalar::from_int(s as i64));
            if prod != want {
                let actual = (0..8).find_map(|t| {
                    if prod == cols[t] {
                        Some(OCT_NAMES[t].to_string())
                    } else if prod == -&cols[t] {
                        Some(format!("-{}", OCT_NAMES[t]))
                    } else {
                        None
                    }
                });
                let printed_name = format!("{}{}", if s < 0 { "-" } else { "" }, OCT_NAMES[k]);
                rep.note(format!(
                    "printed cell ({}, {}) reads {} but the product is {}",
                    OCT_NAMES[i],
                    OCT_NAMES[j],
                    printed_name,
                    actual.as_deref().unwrap_or("outside the basis")
                ));
                printed.record(false, || {
                    Counterexample::new("printed cell disagrees with computation")
                        .with("row", OCT_NAMES[i])
                        .with("col", OCT_NAMES[j])
                        .with("printed", &printed_name)
                        .with("computed", &actual)
                        .with("alpha", alpha)
                });
            } else {
                printed.record(true, || unreachable!());
            }
        }
    }
    printed.note("the image list assigns eps~ alpha to the slot labelled e0 a second time; it is read as e6");
    rep.push(skew);
    rep.push(printed);
    Ok((phi, rep))
}

/// Inverse direction of the octonion correspondence: `phi -> phi(e_7)`.
pub fn alpha_from_oct_mono(phi: &LinearMap) -> Result<Element> {
    if phi.domain() != 3 {
        return Err(Error::pre("expected a map out of A_3"));
    }
    Ok(phi.column(7).clone())
}

/// The five equivalent conditions evaluated on one `alpha`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Audit {
    /// zero product, alternation with eps, quaternion span, octonion span,
    /// `alpha alpha^ = 0`
    pub conditions: [bool; 5],
    pub report: Report,
}

impl Audit {
    pub fn all_equal(&self) -> bool {
        self.conditions.iter().all(|&c| c == self.conditions[0])
    }
}

/// Whether `cols[i] cols[j] = sign cols[k]` for every cell of `table`,
/// where `heavy` columns stand for `|alpha|` times a unit vector and the
/// products are rescaled accordingly.
fn closed_with_table(cols: &[Element], heavy: &[bool], norm_sq: &Scalar, level: u32) -> Result<bool> {
    let table = build_table(level)?;
    for i in 0..cols.len() {
        for j in 0..cols.len() {
            let (k, s) = table.get(i, j);
            let weight = heavy[i] as i32 + heavy[j] as i32 - heavy[k] as i32;
            let factor = match weight {
                0 => Scalar::one(),
                2 => norm_sq.clone(),
                _ => return Ok(false),
            };
            if &cols[i] * &cols[j] != cols[k].scale(&(&factor * &Scalar::from_int(s as i64))) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `alpha = (a, b)` nonzero in the complement of `H_epsilon` at level at
/// least 5, with `|a| = |b|`, `b` orthogonal to `a` and `a~`. The spans in
/// conditions (iii) and (iv) are compared to the quaternion and octonion
/// tables after rescaling the `alpha` directions by `|alpha|`.
pub fn theorem_3_4_audit(alpha: &Element) -> Result<Audit> {
    require_h_eps_perp(alpha)?;
    if alpha.level() < 5 {
        return Err(Error::LevelTooLow { min: 5, got: alpha.level() });
    }
    if alpha.is_zero() {
        return Err(Error::ZeroVector);
    }
    let (a, b) = alpha.split()?;
    if a.norm_sq() != b.norm_sq() || !inner(&a, &b)?.is_zero() || !inner(&a.tilde()?, &b)?.is_zero() {
        return Err(Error::pre("halves must have equal norms with b orthogonal to a and a~"));
    }
    let n = alpha.level() - 1;
    let eps = epsilon(n)?;
    let alpha_eps = alpha * &eps;
    let nsq = alpha.norm_sq();

    let c1 = (&a * &b).is_zero();
    let c2 = associator(alpha, alpha, &eps)?.is_zero();
    let quat = [Element::one(n + 1), alpha.clone(), eps.clone(), alpha_eps.clone()];
    let c3 = closed_with_table(&quat, &[false, true, false, true], &nsq, 2)?;
    let oct = oct_basis(alpha)?;
    let c4 = closed_with_table(&oct.elems, &[false, false, false, false, true, true, true, true], &nsq, 3)?;
    let c5 = (alpha * &alpha.hat()?).is_zero();
    let conditions = [c1, c2, c3, c4, c5];

    let mut rep = Report::new("five-conditions", "equivalent characterizations of zero-divisor pairs");
    let mut eq = Check::new("conditions-agree");
    eq.record(conditions.iter().all(|&c| c == c1), || Counterexample::new("mixed condition vector").with("alpha", alpha).with("conditions", &conditions));
    rep.push(eq);

    let mut bridge = Check::new("bridging-identity");
    let lhs = alpha * &alpha_eps;
    let ba_t = (&b * &a).tilde()?;
    let rhs = &(-&eps.scale(&nsq)) + &Element::double(&Element::zero(n), &ba_t)?.scale(&Scalar::from_int(2));
    bridge.record(lhs == rhs, || Counterexample::new("alpha(alpha eps) mismatch").with("alpha", alpha).with("lhs", &lhs).with("rhs", &rhs));
    rep.push(bridge);

    let mut hopf = Check::new("alpha-hat-product-is-hopf");
    let ah = alpha * &alpha.hat()?;
    let want = Element::double(&(&a * &b).scale(&Scalar::from_int(2)), &Element::real(n, &b.norm_sq() - &a.norm_sq()))?;
    hopf.record(ah == want, || Counterexample::new("alpha alpha^ mismatch").with("alpha", alpha).with("got", &ah));
    rep.push(hopf);

    Ok(Audit { conditions, report: rep })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf_zero::search_exhaustive;

    fn e(level: u32, i: usize) -> Element {
        Element::basis(level, i).unwrap()
    }

    fn unit_cert_alpha() -> Element {
        let a = &e(4, 1) + &e(4, 10);
        let b = &e(4, 4) - &e(4, 15);
        Element::double(&a, &b).unwrap().scale(&Scalar::ratio(1, 2))
    }

    #[test]
    fn trivial_embedding_passes() {
        assert!(is_monomorphism(&LinearMap::trivial(2, 4).unwrap()).passed);
    }

    #[test]
    fn bad_map_fails() {
        let cols = vec![Element::one(2), &e(2, 1) + &e(2, 2)];
        let rep = is_monomorphism(&LinearMap::new(1, 2, cols).unwrap());
        assert!(!rep.passed);
        assert!(!rep.check("multiplicative").unwrap().passed);
        assert!(!rep.check("isometric").unwrap().passed);
        assert!(LinearMap::new(1, 2, vec![e(2, 1), e(2, 2)]).is_err());
    }

    #[test]
    fn phi_w_examples() {
        let w = &e(3, 2).scale(&Scalar::ratio(3, 5)) + &e(3, 7).scale(&Scalar::ratio(4, 5));
        assert!(is_monomorphism(&phi_w(&w, 3).unwrap()).passed);
        // conjugation on the complex numbers
        let conj = phi_w(&-&e(1, 1), 1).unwrap();
        let z = Element::from_ints(1, &[2, 5]).unwrap();
        assert_eq!(conj.apply(&z).unwrap(), z.conj());
        assert!(phi_w(&(&e(3, 1) + &e(3, 2)), 3).is_err());
        assert!(phi_w(&Element::one(3), 3).is_err());
    }

    #[test]
    fn alternation_examples() {
        let a = Element::from_ints(4, &[0, 1, 2, 0, -1, 0, 3, 0, 0, 1, 0, 0, 2, 0, 0, 1]).unwrap();
        let flag = alternation(&a, &Element::e0_tilde(4).unwrap()).unwrap();
        assert!(flag.strong && flag.weak);
        assert!(alternation(&a, &a.scale(&Scalar::from_int(3))).unwrap().strong);
        let b = Element::from_ints(3, &[1, 2, 3, 4, 5, 6, 7, 8]).unwrap();
        let c = Element::from_ints(3, &[0, -1, 2, 0, 1, 1, 0, 3]).unwrap();
        assert!(alternation(&b, &c).unwrap().strong);
    }

    #[test]
    fn quaternion_embeddings() {
        assert!(is_monomorphism(&pair_to_quat_mono(&e(3, 1), &e(3, 2)).unwrap()).passed);
        let a = &e(4, 1).scale(&Scalar::ratio(3, 5)) + &e(4, 6).scale(&Scalar::ratio(4, 5));
        let phi = pair_to_quat_mono(&a, &Element::e0_tilde(4).unwrap()).unwrap();
        assert!(is_monomorphism(&phi).passed);
        assert!(pair_to_quat_mono(&e(3, 1), &e(3, 1)).is_err());
    }

    #[test]
    fn octonion_embedding_from_certificate() {
        let alpha = unit_cert_alpha();
        let (phi, rep) = oct_mono_from_alpha(&alpha).unwrap();
        assert!(rep.check("multiplicative").unwrap().passed);
        assert!(rep.check("skew-symmetric-minus-e0-diagonal").unwrap().passed);
        // eps~ alpha~ = alpha eps
        assert_eq!(&phi.columns()[1] * &phi.columns()[4], phi.columns()[5]);
        assert_eq!(alpha_from_oct_mono(&phi).unwrap(), alpha);
        // alpha~ alpha = |alpha|^2 e0~, so the two printed cells pairing
        // alpha~ with alpha carry the opposite sign
        let printed = rep.check("printed-table").unwrap();
        assert!(!printed.passed);
        let bad: Vec<(String, String)> = printed
            .counterexample
            .iter()
            .map(|c| (c.inputs["row"].as_str().unwrap().to_string(), c.inputs["col"].as_str().unwrap().to_string()))
            .collect();
        assert_eq!(bad.len(), 1);
        assert_eq!(rep.notes.len(), 2);
        assert_eq!(&phi.columns()[4] * &phi.columns()[7], phi.columns()[3]);
    }

    #[test]
    fn octonion_preconditions() {
        assert!(oct_mono_from_alpha(&unit_cert_alpha().scale(&Scalar::from_int(2))).is_err());
        let not_e = Element::double(&e(4, 1), &e(4, 2)).unwrap();
        assert!(oct_mono_from_alpha(&not_e).is_err());
        assert!(oct_mono_from_alpha(&e(5, 8)).is_err());
    }

    #[test]
    fn audit_true_and_false() {
        for cert in search_exhaustive(4, 2).unwrap().iter().take(12) {
            let alpha = cert.alpha().scale(&Scalar::ratio(1, 2));
            let audit = theorem_3_4_audit(&alpha).unwrap();
            assert_eq!(audit.conditions, [true; 5], "{:?}", audit.report);
            assert!(audit.report.passed);
        }
        let alpha = Element::double(&e(4, 1), &e(4, 2)).unwrap();
        let audit = theorem_3_4_audit(&alpha).unwrap();
        assert_eq!(audit.conditions, [false; 5]);
        assert!(audit.report.passed);
        let h = Scalar::ratio(1, 2);
        let alpha = Element::double(&(&e(4, 1) + &e(4, 2)).scale(&h), &(&e(4, 3) + &e(4, 5)).scale(&h)).unwrap();
        assert_eq!(theorem_3_4_audit(&alpha).unwrap().conditions, [false; 5]);
        assert!(theorem_3_4_audit(&Element::double(&e(4, 1), &e(4, 1)).unwrap()).is_err());
    }
}
