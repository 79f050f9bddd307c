//! Elements of the Cayley-Dickson algebras and the doubling product.
//!
//! An element of `A_n` is stored as its `2^n` coordinates in the canonical
//! basis. The first half of the coordinates is the left component `a` and the
//! second half the right component `b` of the pair `(a, b)` in
//! `A_{n-1} x A_{n-1}`, so `e_i` for `i < 2^{n-1}` is `(e_i, 0)` and
//! `e_{2^{n-1}+i}` is `(0, e_i)`.
//!
//! Multiplication is the recursive doubling product
//! `(a, b)(x, y) = (ax - conj(y) b, y a + b conj(x))` with real multiplication
//! at level zero. Mixed-level arithmetic is rejected; use [`Element::embed`]
//! to move an element to a higher level explicitly.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Largest level accepted by constructors. `A_20` already has a million
/// coordinates.
pub const MAX_LEVEL: u32 = 20;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawElement", into = "RawElement")]
pub struct Element {
    level: u32,
    coeffs: Vec<Scalar>,
}

#[derive(Serialize, Deserialize)]
struct RawElement {
    level: u32,
    coeffs: Vec<Scalar>,
}

impl TryFrom<RawElement> for Element {
    type Error = Error;
    fn try_from(raw: RawElement) -> Result<Self> {
        Element::new(raw.level, raw.coeffs)
    }
}

impl From<Element> for RawElement {
    fn from(e: Element) -> Self {
        RawElement { level: e.level, coeffs: e.coeffs }
    }
}

impl std::fmt::Debug for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "A{}[", self.level)?;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})e{i}")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, "]")
    }
}

pub(crate) fn dim(level: u32) -> usize {
    1usize << level
}

impl Element {
    pub fn new(level: u32, coeffs: Vec<Scalar>) -> Result<Self> {
        if level > MAX_LEVEL {
            return Err(Error::LevelTooHigh { max: MAX_LEVEL, got: level });
        }
        if coeffs.len() != dim(level) {
            return Err(Error::BadLength { expected: dim(level), got: coeffs.len() });
        }
        Ok(Element { level, coeffs })
    }

    pub fn from_ints(level: u32, coeffs: &[i64]) -> Result<Self> {
        Element::new(level, coeffs.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    /// Sparse constructor: `terms` lists `(index, coefficient)`.
    pub fn from_terms(level: u32, terms: &[(usize, Scalar)]) -> Result<Self> {
        let mut x = Element::zero(level);
        for (i, c) in terms {
            if *i >= x.dim() {
                return Err(Error::IndexOutOfRange { level, index: *i });
            }
            x.coeffs[*i] += c;
        }
        Ok(x)
    }

    pub fn zero(level: u32) -> Self {
        Element { level, coeffs: vec![Scalar::zero(); dim(level)] }
    }

    pub fn one(level: u32) -> Self {
        Element::real(level, Scalar::one())
    }

    pub fn real(level: u32, r: Scalar) -> Self {
        let mut x = Element::zero(level);
        x.coeffs[0] = r;
        x
    }

    pub fn basis(level: u32, index: usize) -> Result<Self> {
        if index >= dim(level) {
            return Err(Error::IndexOutOfRange { level, index });
        }
        let mut x = Element::zero(level);
        x.coeffs[index] = Scalar::one();
        Ok(x)
    }

    /// `e~_0 = (0, e_0)`, the basis vector `e_{2^{n-1}}`.
    pub fn e0_tilde(level: u32) -> Result<Self> {
        if level == 0 {
            return Err(Error::LevelTooLow { min: 1, got: 0 });
        }
        Element::basis(level, dim(level - 1))
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Scalar {
        &self.coeffs[i]
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// Indices of nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| !self.coeffs[i].is_zero()).collect()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(Scalar::to_f64).collect()
    }

    fn same_level(&self, other: &Element) -> Result<()> {
        if self.level != other.level {
            return Err(Error::LevelMismatch { left: self.level, right: other.level });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Element) -> Result<Element> {
        self.same_level(other)?;
        Ok(Element { level: self.level, coeffs: add_slices(&self.coeffs, &other.coeffs) })
    }

    pub fn try_sub(&self, other: &Element) -> Result<Element> {
        self.same_level(other)?;
        Ok(Element { level: self.level, coeffs: sub_slices(&self.coeffs, &other.coeffs) })
    }

    pub fn scale(&self, r: &Scalar) -> Element {
        Element { level: self.level, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// The doubling product.
    pub fn try_mul(&self, other: &Element) -> Result<Element> {
        self.same_level(other)?;
        Ok(Element { level: self.level, coeffs: mul_slices(&self.coeffs, &other.coeffs) })
    }

    pub fn conj(&self) -> Element {
        Element { level: self.level, coeffs: conj_slice(&self.coeffs) }
    }

    /// `x + conj(x) = 2 Re(x)`.
    pub fn trace(&self) -> Scalar {
        &self.coeffs[0] + &self.coeffs[0]
    }

    /// Euclidean inner product of coordinate vectors, equal to
    /// `trace(a conj(b)) / 2`.
    pub fn try_inner(&self, other: &Element) -> Result<Scalar> {
        self.same_level(other)?;
        Ok(dot(&self.coeffs, &other.coeffs))
    }

    pub fn norm_sq(&self) -> Scalar {
        dot(&self.coeffs, &self.coeffs)
    }

    /// Exact norm when `norm_sq` is a rational square.
    pub fn norm_exact(&self) -> Option<Scalar> {
        self.norm_sq().sqrt_exact()
    }

    /// `x / |x|`; requires a rational norm.
    pub fn normalize_exact(&self) -> Result<Element> {
        if self.is_zero() {
            return Err(Error::ZeroVector);
        }
        let n = self
            .norm_exact()
            .ok_or_else(|| Error::IrrationalNorm(self.norm_sq().to_string()))?;
        Ok(self.scale(&n.recip()?))
    }

    /// Complexification `(a, b) -> (-b, a)`; equals right multiplication by
    /// `e~_0`.
    pub fn tilde(&self) -> Result<Element> {
        let (a, b) = self.split()?;
        Element::double(&(-&b), &a)
    }

    /// Half swap `(a, b) -> (b, a)`.
    pub fn hat(&self) -> Result<Element> {
        let (a, b) = self.split()?;
        Element::double(&b, &a)
    }

    /// `(a, b)` as an element of the next level.
    pub fn double(a: &Element, b: &Element) -> Result<Element> {
        a.same_level(b)?;
        if a.level >= MAX_LEVEL {
            return Err(Error::LevelTooHigh { max: MAX_LEVEL, got: a.level + 1 });
        }
        let mut coeffs = Vec::with_capacity(2 * a.dim());
        coeffs.extend_from_slice(&a.coeffs);
        coeffs.extend_from_slice(&b.coeffs);
        Ok(Element { level: a.level + 1, coeffs })
    }

    pub fn split(&self) -> Result<(Element, Element)> {
        if self.level == 0 {
            return Err(Error::LevelTooLow { min: 1, got: 0 });
        }
        let h = self.dim() / 2;
        let lower = Element { level: self.level - 1, coeffs: self.coeffs[..h].to_vec() };
        let upper = Element { level: self.level - 1, coeffs: self.coeffs[h..].to_vec() };
        Ok((lower, upper))
    }

    /// Left half `a` of `(a, b)`.
    pub fn first_half(&self) -> Result<Element> {
        Ok(self.split()?.0)
    }

    pub fn second_half(&self) -> Result<Element> {
        Ok(self.split()?.1)
    }

    /// Pad with zeros: `x -> (x, 0, ..., 0)` at level `to`. This is the
    /// trivial monomorphism `A_n -> A_m`.
    pub fn embed(&self, to: u32) -> Result<Element> {
        if to < self.level {
            return Err(Error::pre(format!("cannot embed level {} into level {to}", self.level)));
        }
        if to > MAX_LEVEL {
            return Err(Error::LevelTooHigh { max: MAX_LEVEL, got: to });
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(dim(to), Scalar::zero());
        Ok(Element { level: to, coeffs })
    }
}

pub fn mul(x: &Element, y: &Element) -> Result<Element> {
    x.try_mul(y)
}

pub fn conj(x: &Element) -> Element {
    x.conj()
}

pub fn trace(x: &Element) -> Scalar {
    x.trace()
}

pub fn inner(a: &Element, b: &Element) -> Result<Scalar> {
    a.try_inner(b)
}

pub fn tilde(x: &Element) -> Result<Element> {
    x.tilde()
}

pub fn hat(x: &Element) -> Result<Element> {
    x.hat()
}

/// `(ab)c - a(bc)`.
pub fn associator(a: &Element, b: &Element, c: &Element) -> Result<Element> {
    a.same_level(b)?;
    b.same_level(c)?;
    let left = mul_slices(&mul_slices(&a.coeffs, &b.coeffs), &c.coeffs);
    let right = mul_slices(&a.coeffs, &mul_slices(&b.coeffs, &c.coeffs));
    Ok(Element { level: a.level, coeffs: sub_slices(&left, &right) })
}

pub(crate) fn dot(x: &[Scalar], y: &[Scalar]) -> Scalar {
    let mut acc = Scalar::zero();
    for (a, b) in x.iter().zip(y) {
        if a.is_zero() || b.is_zero() {
            continue;
        }
        acc += &(a * b);
    }
    acc
}

fn add_slices(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

fn sub_slices(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

fn conj_slice(x: &[Scalar]) -> Vec<Scalar> {
    let mut out = x.to_vec();
    conj_in_place(&mut out);
    out
}

// conj(x1, x2) = (conj(x1), -x2) unrolls to negating every coordinate but e_0.
fn conj_in_place(x: &mut [Scalar]) {
    for c in x.iter_mut().skip(1) {
        if !c.is_zero() {
            *c = -&*c;
        }
    }
}

fn mul_slices(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let n = x.len();
    if n == 1 {
        return vec![&x[0] * &y[0]];
    }
    if x.iter().all(Scalar::is_zero) || y.iter().all(Scalar::is_zero) {
        return vec![Scalar::zero(); n];
    }
    let h = n / 2;
    let (a, b) = x.split_at(h);
    let (u, v) = y.split_at(h);
    let v_bar = conj_slice(v);
    let u_bar = conj_slice(u);
    // (a, b)(u, v) = (a u - conj(v) b, v a + b conj(u))
    let mut out = sub_slices(&mul_slices(a, u), &mul_slices(&v_bar, b));
    out.extend(add_slices(&mul_slices(v, a), &mul_slices(b, &u_bar)));
    out
}

fn assert_same(x: &Element, y: &Element) {
    if let Err(e) = x.same_level(y) {
        panic!("{e}");
    }
}

// Operator forms panic on mixed levels; the `try_*` methods and the free
// functions return the error instead.

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        assert_same(self, rhs);
        Element { level: self.level, coeffs: add_slices(&self.coeffs, &rhs.coeffs) }
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        assert_same(self, rhs);
        Element { level: self.level, coeffs: sub_slices(&self.coeffs, &rhs.coeffs) }
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        assert_same(self, rhs);
        Element { level: self.level, coeffs: mul_slices(&self.coeffs, &rhs.coeffs) }
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

impl Mul for Element {
    type Output = Element;
    fn mul(self, rhs: Element) -> Element {
        &self * &rhs
    }
}

impl Mul<&Element> for &Scalar {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        rhs.scale(self)
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element { level: self.level, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(level: u32, i: usize) -> Element {
        Element::basis(level, i).unwrap()
    }

    #[test]
    fn imaginary_unit_squares_to_minus_one() {
        assert_eq!(&e(1, 1) * &e(1, 1), -e(1, 0));
    }

    #[test]
    fn quaternion_units_anticommute() {
        // (0,1,0,0)(0,0,1,0): by hand, (e1,0)(0,e0) = (0, e0 e1) = e3.
        assert_eq!(&e(2, 1) * &e(2, 2), e(2, 3));
        assert_eq!(&e(2, 2) * &e(2, 1), -e(2, 3));
    }

    #[test]
    fn conj_of_basis() {
        for level in 0..6 {
            assert_eq!(e(level, 0).conj(), e(level, 0));
            for i in 1..dim(level) {
                assert_eq!(e(level, i).conj(), -e(level, i));
            }
        }
    }

    #[test]
    fn trace_values() {
        assert_eq!(e(3, 0).trace(), Scalar::from_int(2));
        for i in 1..8 {
            assert!(e(3, i).trace().is_zero());
        }
    }

    #[test]
    fn inner_of_basis_is_kronecker() {
        for i in 0..8 {
            for j in 0..8 {
                let expected = if i == j { Scalar::one() } else { Scalar::zero() };
                assert_eq!(inner(&e(3, i), &e(3, j)).unwrap(), expected);
            }
        }
    }

    #[test]
    fn tilde_and_hat_of_unit() {
        for level in 1..6 {
            let t = e(level, 0).tilde().unwrap();
            assert_eq!(t, e(level, dim(level - 1)));
            assert_eq!(e(level, 0).hat().unwrap(), t);
        }
        assert!(e(0, 0).tilde().is_err());
        assert!(e(0, 0).hat().is_err());
    }

    #[test]
    fn basis_matches_doubling() {
        for level in 0..5 {
            let h = dim(level);
            let z = Element::zero(level);
            for i in 0..h {
                let lower = Element::double(&e(level, i), &z).unwrap();
                assert_eq!(e(level + 1, i), lower);
                let upper = Element::double(&z, &e(level, i)).unwrap();
                assert_eq!(e(level + 1, h + i), upper);
            }
        }
        assert!(Element::basis(3, 8).is_err());
    }

    #[test]
    fn mixed_levels_are_rejected() {
        let x = e(2, 1);
        let y = e(3, 1);
        assert_eq!(mul(&x, &y), Err(Error::LevelMismatch { left: 2, right: 3 }));
        assert!(inner(&x, &y).is_err());
        assert!(associator(&x, &x, &y).is_err());
        assert!(Element::double(&x, &y).is_err());
        assert_eq!(x.embed(3).unwrap(), y);
    }

    #[test]
    fn normalize_zero_is_error() {
        assert_eq!(Element::zero(3).normalize_exact(), Err(Error::ZeroVector));
        let x = Element::from_ints(2, &[0, 1, 1, 0]).unwrap();
        assert!(matches!(x.normalize_exact(), Err(Error::IrrationalNorm(_))));
        let y = Element::from_ints(2, &[0, 3, 4, 0]).unwrap();
        assert_eq!(y.normalize_exact().unwrap().norm_sq(), Scalar::one());
    }

    #[test]
    fn json_shape() {
        let x = Element::new(1, vec![Scalar::ratio(1, 2), Scalar::from_int(-3)]).unwrap();
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"level":1,"coeffs":["1/2","-3"]}"#);
        let back: Element = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<Element>(r#"{"level":2,"coeffs":["1"]}"#).is_err());
    }
}
