//! Pure and doubly pure subspaces, the quaternion and octonion frames
//! attached to doubly pure elements, Stiefel-type membership tests, the
//! Hermitian form and constraint Jacobians.
//!
//! The complex structure on doubly pure elements is `i x = x~`; there is no
//! separate complex vector type.

use serde::{Deserialize, Serialize};

use crate::element::{dim, inner, Element};
use crate::error::{Error, Result};
use crate::linalg;
use crate::report::{Check, Counterexample, Report};
use crate::scalar::Scalar;

/// An ordered pair `(a, b)` of equal-level elements; as an element of the
/// next level it is `double(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FramePair {
    pub a: Element,
    pub b: Element,
}

impl FramePair {
    pub fn new(a: Element, b: Element) -> Result<Self> {
        if a.level() != b.level() {
            return Err(Error::LevelMismatch { left: a.level(), right: b.level() });
        }
        Ok(FramePair { a, b })
    }

    pub fn from_alpha(alpha: &Element) -> Result<Self> {
        let (a, b) = alpha.split()?;
        Ok(FramePair { a, b })
    }

    pub fn level(&self) -> u32 {
        self.a.level()
    }

    pub fn to_alpha(&self) -> Element {
        Element::double(&self.a, &self.b).expect("equal levels")
    }
}

pub fn is_pure(x: &Element) -> bool {
    x.trace().is_zero()
}

/// Pure with pure second half; equivalently orthogonal to `e_0` and `e~_0`.
pub fn is_doubly_pure(x: &Element) -> bool {
    x.level() >= 1 && x.coeff(0).is_zero() && x.coeff(dim(x.level()) / 2).is_zero()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuatBasis {
    /// `[e_0, a~, a, e~_0]`
    pub elems: [Element; 4],
}

/// `{e_0, a~, a, e~_0}` for doubly pure unit `a`.
pub fn quat_basis(a: &Element) -> Result<QuatBasis> {
    if !is_doubly_pure(a) {
        return Err(Error::pre("quaternion frame needs a doubly pure element"));
    }
    if !a.norm_sq().is_one() {
        return Err(Error::pre(format!("quaternion frame needs a unit element, |a|^2 = {}", a.norm_sq())));
    }
    Ok(quat_span(a))
}

fn quat_span(a: &Element) -> QuatBasis {
    let n = a.level();
    QuatBasis {
        elems: [Element::one(n), a.tilde().expect("level"), a.clone(), Element::e0_tilde(n).expect("level")],
    }
}

/// Products within `{e_0, a~, a, e~_0}` as `(index, sign)`.
pub const QUAT_TABLE: [[(usize, i8); 4]; 4] = [
    [(0, 1), (1, 1), (2, 1), (3, 1)],
    [(1, 1), (0, -1), (3, 1), (2, -1)],
    [(2, 1), (3, -1), (0, -1), (1, 1)],
    [(3, 1), (2, 1), (1, -1), (0, -1)],
];

/// Verifies all 16 products of the frame of `a` against [`QUAT_TABLE`].
pub fn quat_table_check(a: &Element) -> Result<Report> {
    let q = quat_basis(a)?;
    let mut rep = Report::new("quat-table", "quaternion frame of a unit doubly pure element");
    let mut table = Check::new("products");
    let mut orth = Check::new("orthonormal");
    for i in 0..4 {
        for j in 0..4 {
            let (k, s) = QUAT_TABLE[i][j];
            let expected = if s > 0 { q.elems[k].clone() } else { -&q.elems[k] };
            let got = &q.elems[i] * &q.elems[j];
            table.record(got == expected, || {
                Counterexample::new(format!("cell ({i},{j})")).with("a", a).with("product", &got)
            });
            let ip = inner(&q.elems[i], &q.elems[j])?;
            let want = if i == j { Scalar::one() } else { Scalar::zero() };
            orth.record(ip == want, || Counterexample::new(format!("<q{i},q{j}> = {ip}")).with("a", a));
        }
    }
    rep.push(table);
    rep.push(orth);
    Ok(rep)
}

/// `b = c + d` with `c` in `span{e_0, a~, a, e~_0}` and `d` orthogonal to it.
pub fn project_h(a: &Element, b: &Element) -> Result<(Element, Element)> {
    if a.level() != b.level() {
        return Err(Error::LevelMismatch { left: a.level(), right: b.level() });
    }
    if a.is_zero() {
        return Err(Error::ZeroVector);
    }
    if !is_doubly_pure(a) {
        return Err(Error::pre("projection onto H_a needs doubly pure a"));
    }
    let q = quat_span(a);
    let mut c = Element::zero(a.level());
    // the four spanning vectors are pairwise orthogonal
    for v in &q.elems {
        let coef = &inner(b, v)? / &v.norm_sq();
        c = &c + &v.scale(&coef);
    }
    let d = b - &c;
    Ok((c, d))
}

fn check_frame_level(p: &FramePair) -> Result<()> {
    if p.level() < 1 {
        return Err(Error::LevelTooLow { min: 1, got: p.level() });
    }
    Ok(())
}

/// Both pure, unit and orthogonal.
pub fn in_v(p: &FramePair) -> Result<bool> {
    check_frame_level(p)?;
    Ok(is_pure(&p.a)
        && is_pure(&p.b)
        && p.a.norm_sq().is_one()
        && p.b.norm_sq().is_one()
        && inner(&p.a, &p.b)?.is_zero())
}

pub fn in_v_doubly(p: &FramePair) -> Result<bool> {
    Ok(in_v(p)? && is_doubly_pure(&p.a) && is_doubly_pure(&p.b))
}

/// Additionally `a~` orthogonal to `b`, i.e. `b` in the complement of `H_a`.
pub fn in_w(p: &FramePair) -> Result<bool> {
    if p.level() < 3 {
        return Err(Error::LevelTooLow { min: 3, got: p.level() });
    }
    Ok(in_v_doubly(p)? && inner(&p.a.tilde()?, &p.b)?.is_zero())
}

/// Float-mode membership within `tol`, for numeric search output.
pub fn approx_in_w(a: &[f64], b: &[f64], tol: f64) -> bool {
    let n = a.len();
    if n < 8 || b.len() != n {
        return false;
    }
    let h = n / 2;
    let dot = |x: &[f64], y: &[f64]| x.iter().zip(y).map(|(p, q)| p * q).sum::<f64>();
    let mut at = vec![0.0; n];
    for i in 0..h {
        at[i] = -a[h + i];
        at[h + i] = a[i];
    }
    (dot(a, a) - 1.0).abs() <= tol
        && (dot(b, b) - 1.0).abs() <= tol
        && a[0].abs() <= tol
        && a[h].abs() <= tol
        && b[0].abs() <= tol
        && b[h].abs() <= tol
        && dot(a, b).abs() <= tol
        && dot(&at, b).abs() <= tol
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexScalar {
    pub re: Scalar,
    pub im: Scalar,
}

impl ComplexScalar {
    pub fn new(re: Scalar, im: Scalar) -> Self {
        ComplexScalar { re, im }
    }

    pub fn conj(&self) -> Self {
        ComplexScalar { re: self.re.clone(), im: -&self.im }
    }

    /// Multiplication by `i`.
    pub fn times_i(&self) -> Self {
        ComplexScalar { re: -&self.im, im: self.re.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        ComplexScalar { re: &self.re + &other.re, im: &self.im + &other.im }
    }
}

/// `2<a,b> - 2i<a~,b>` on doubly pure elements.
pub fn hermitian(a: &Element, b: &Element) -> Result<ComplexScalar> {
    if a.level() != b.level() {
        return Err(Error::LevelMismatch { left: a.level(), right: b.level() });
    }
    if a.level() < 3 {
        return Err(Error::LevelTooLow { min: 3, got: a.level() });
    }
    if !is_doubly_pure(a) || !is_doubly_pure(b) {
        return Err(Error::pre("hermitian form is defined on doubly pure elements"));
    }
    let two = Scalar::from_int(2);
    let re = &two * &inner(a, b)?;
    let im = -(&two * &inner(&a.tilde()?, b)?);
    Ok(ComplexScalar { re, im })
}

/// `epsilon = (e~_0, 0)`, the basis vector `e_{2^{n-1}}` of `A_{n+1}`.
pub fn epsilon(n: u32) -> Result<Element> {
    if n < 1 {
        return Err(Error::LevelTooLow { min: 1, got: n });
    }
    Element::basis(n + 1, dim(n - 1))
}

/// `alpha = (a, b)` with both halves doubly pure; the orthogonal complement
/// of `H_epsilon`.
pub fn in_h_eps_perp(alpha: &Element) -> bool {
    if alpha.level() < 2 {
        return false;
    }
    let (a, b) = alpha.split().expect("level");
    is_doubly_pure(alpha) && is_doubly_pure(&a) && is_doubly_pure(&b)
}

pub(crate) fn require_h_eps_perp(alpha: &Element) -> Result<()> {
    if alpha.level() < 2 {
        return Err(Error::LevelTooLow { min: 2, got: alpha.level() });
    }
    if !in_h_eps_perp(alpha) {
        return Err(Error::pre("element is not in the complement of H_epsilon (halves must be doubly pure)"));
    }
    Ok(())
}

/// `H_epsilon` basis `[e_0, eps~, eps, e~_0]` at level `n + 1`.
pub fn h_eps_basis(n: u32) -> Result<[Element; 4]> {
    let eps = epsilon(n)?;
    Ok([Element::one(n + 1), eps.tilde()?, eps, Element::e0_tilde(n + 1)?])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OctBasis {
    /// `[e_0, eps~, eps, e~_0, alpha~, alpha eps, eps~ alpha, alpha]`
    pub elems: [Element; 8],
}

pub const OCT_NAMES: [&str; 8] = ["e0", "eps~", "eps", "e0~", "alpha~", "alpha*eps", "eps~*alpha", "alpha"];

/// The eight spanning vectors of `O_alpha`, verified pairwise orthogonal.
pub fn oct_basis(alpha: &Element) -> Result<OctBasis> {
    require_h_eps_perp(alpha)?;
    if alpha.level() < 4 {
        return Err(Error::LevelTooLow { min: 4, got: alpha.level() });
    }
    if alpha.is_zero() {
        return Err(Error::ZeroVector);
    }
    let n = alpha.level() - 1;
    let [e0, eps_t, eps, e0_t] = h_eps_basis(n)?;
    let alpha_eps = alpha * &eps;
    let eps_t_alpha = &eps_t * alpha;
    let elems = [e0, eps_t, eps, e0_t, alpha.tilde()?, alpha_eps, eps_t_alpha, alpha.clone()];
    for i in 0..8 {
        for j in (i + 1)..8 {
            if !inner(&elems[i], &elems[j])?.is_zero() {
                return Err(Error::Internal(format!("O_alpha vectors {} and {} not orthogonal", OCT_NAMES[i], OCT_NAMES[j])));
            }
        }
    }
    Ok(OctBasis { elems })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FrameVariant {
    V,
    VDoubly,
    W,
}

/// Rank of the Jacobian of the defining equations of the variant at `p`,
/// in the coordinates of the ambient pure (V) or doubly pure (V_doubly, W)
/// subspace of each half.
pub fn constraint_jacobian_rank(p: &FramePair, variant: FrameVariant) -> Result<usize> {
    let member = match variant {
        FrameVariant::V => in_v(p)?,
        FrameVariant::VDoubly => in_v_doubly(p)?,
        FrameVariant::W => in_w(p)?,
    };
    if !member {
        return Err(Error::pre(format!("pair is not a member of {variant:?}")));
    }
    let rows = constraint_jacobian(p, variant)?;
    Ok(linalg::rank(&rows))
}

type Constraint = fn(&Element, &Element) -> Scalar;

fn constraints(variant: FrameVariant) -> Vec<Constraint> {
    let mut cs: Vec<Constraint> = vec![
        |a, _| &a.norm_sq() - &Scalar::one(),
        |_, b| &b.norm_sq() - &Scalar::one(),
        |a, b| inner(a, b).expect("level"),
    ];
    if variant == FrameVariant::W {
        cs.push(|a, b| inner(&a.tilde().expect("level"), b).expect("level"));
    }
    cs
}

/// Gradient rows of the constraints. The constraints are quadratic, so the
/// unit-step central difference is exact.
pub fn constraint_jacobian(p: &FramePair, variant: FrameVariant) -> Result<Vec<Vec<Scalar>>> {
    let n = p.level();
    let sub = match variant {
        FrameVariant::V => crate::sample::Subspace::Pure,
        _ => crate::sample::Subspace::DoublyPure,
    };
    let idx = sub.indices(n);
    let half = Scalar::ratio(1, 2);
    let mut rows = Vec::new();
    for f in constraints(variant) {
        let mut row = Vec::with_capacity(2 * idx.len());
        for which in 0..2 {
            for &i in &idx {
                let e = Element::basis(n, i)?;
                let (plus, minus) = if which == 0 {
                    ((&p.a + &e, p.b.clone()), (&p.a - &e, p.b.clone()))
                } else {
                    ((p.a.clone(), &p.b + &e), (p.a.clone(), &p.b - &e))
                };
                let d = &f(&plus.0, &plus.1) - &f(&minus.0, &minus.1);
                row.push(&d * &half);
            }
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Dimension of the ambient coordinate space used by the Jacobian.
pub fn ambient_dim(n: u32, variant: FrameVariant) -> usize {
    let per_half = match variant {
        FrameVariant::V => dim(n) - 1,
        _ => dim(n) - 2,
    };
    2 * per_half
}
