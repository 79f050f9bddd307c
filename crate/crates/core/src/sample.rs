//! Seeded exact samplers.
//!
//! Every sample is drawn from its own ChaCha stream keyed by
//! `(master seed, sample index)`, so a batch gives the same values in any
//! order. Unit vectors are exact: they are basis vectors moved by rational
//! Givens rotations whose cosine and sine come from Pythagorean triples.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::element::{dim, Element};
use crate::scalar::Scalar;

pub type SampleRng = ChaCha8Rng;

/// Independent stream for sample `index` under `seed`.
pub fn rng_for(seed: u64, index: u64) -> SampleRng {
    // splitmix64 finalizer over the pair
    let mut z = seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(0xD1B5_4A32_D192_ED03);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^= z >> 31;
    ChaCha8Rng::seed_from_u64(z)
}

/// Coordinate subspaces used for sampling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subspace {
    All,
    /// `e_0` orthogonal complement.
    Pure,
    /// `{e_0, e~_0}` orthogonal complement.
    DoublyPure,
}

impl Subspace {
    pub fn indices(self, level: u32) -> Vec<usize> {
        let n = dim(level);
        let half = if level == 0 { usize::MAX } else { n / 2 };
        (0..n)
            .filter(|&i| match self {
                Subspace::All => true,
                Subspace::Pure => i != 0,
                Subspace::DoublyPure => i != 0 && i != half,
            })
            .collect()
    }
}

/// A rational point `(c, s)` on the unit circle.
pub fn pythagorean(rng: &mut SampleRng) -> (Scalar, Scalar) {
    let p: i64 = rng.random_range(1..=5);
    let q: i64 = rng.random_range(1..=5);
    let den = p * p + q * q;
    let mut c = Scalar::ratio(p * p - q * q, den);
    let mut s = Scalar::ratio(2 * p * q, den);
    if rng.random_bool(0.5) {
        std::mem::swap(&mut c, &mut s);
    }
    if rng.random_bool(0.5) {
        c = -c;
    }
    if rng.random_bool(0.5) {
        s = -s;
    }
    (c, s)
}

/// Small rational in `[-3, 3]` with denominator at most 3.
pub fn small_rational(rng: &mut SampleRng) -> Scalar {
    let num: i64 = rng.random_range(-9..=9);
    let den: i64 = rng.random_range(1..=3);
    Scalar::ratio(num, den)
}

/// Random element supported on `subspace` with small rational coordinates.
/// Never zero.
pub fn random_element(rng: &mut SampleRng, level: u32, subspace: Subspace) -> Element {
    let idx = subspace.indices(level);
    assert!(!idx.is_empty(), "empty subspace at level {level}");
    loop {
        let mut x = Element::zero(level).into_coeffs();
        for &i in &idx {
            x[i] = small_rational(rng);
        }
        let e = Element::new(level, x).expect("dimension");
        if !e.is_zero() {
            return e;
        }
    }
}

/// Random element with only a few nonzero coordinates, for the expensive
/// high-level checks.
pub fn random_sparse(rng: &mut SampleRng, level: u32, subspace: Subspace, terms: usize) -> Element {
    let idx = subspace.indices(level);
    loop {
        let mut x = Element::zero(level).into_coeffs();
        for _ in 0..terms {
            let i = idx[rng.random_range(0..idx.len())];
            x[i] = small_rational(rng);
        }
        let e = Element::new(level, x).expect("dimension");
        if !e.is_zero() {
            return e;
        }
    }
}

/// In-place rotation of coordinates `(i, j)` by `(c, s)`.
pub fn givens(x: &mut [Scalar], i: usize, j: usize, c: &Scalar, s: &Scalar) {
    let xi = &(c * &x[i]) - &(s * &x[j]);
    let xj = &(s * &x[i]) + &(c * &x[j]);
    x[i] = xi;
    x[j] = xj;
}

/// Exact unit vector in `subspace`: a random basis vector moved by
/// `rotations` Givens rotations inside the subspace.
pub fn unit_vector(rng: &mut SampleRng, level: u32, subspace: Subspace, rotations: usize) -> Element {
    let idx = subspace.indices(level);
    let start = idx[rng.random_range(0..idx.len())];
    let mut x = Element::basis(level, start).expect("index").into_coeffs();
    rotate_randomly(rng, &mut [&mut x], &idx, rotations);
    Element::new(level, x).expect("dimension")
}

/// Apply the same random rotations to every vector in `vs`.
pub fn rotate_randomly(rng: &mut SampleRng, vs: &mut [&mut Vec<Scalar>], idx: &[usize], rotations: usize) {
    if idx.len() < 2 {
        return;
    }
    for _ in 0..rotations {
        let i = idx[rng.random_range(0..idx.len())];
        let mut j = i;
        while j == i {
            j = idx[rng.random_range(0..idx.len())];
        }
        let (c, s) = pythagorean(rng);
        for v in vs.iter_mut() {
            givens(v, i, j, &c, &s);
        }
    }
}

/// Rational unitary map of the doubly pure subspace of `A_n` viewed as a
/// complex space with `i x = x~`: products of phase rotations of a single
/// complex coordinate and real rotations applied to two complex
/// coordinates at once. Applied to every vector in `vs`.
pub fn unitary_randomly(rng: &mut SampleRng, level: u32, vs: &mut [&mut Vec<Scalar>], rotations: usize) {
    let h = dim(level) / 2;
    if h < 2 {
        return;
    }
    // complex coordinate k is (x_k, x_{k+h}), k = 1..h-1
    for _ in 0..rotations {
        let (c, s) = pythagorean(rng);
        let k = rng.random_range(1..h);
        if h > 2 && rng.random_bool(0.5) {
            let mut l = k;
            while l == k {
                l = rng.random_range(1..h);
            }
            for v in vs.iter_mut() {
                givens(v, k, l, &c, &s);
                givens(v, k + h, l + h, &c, &s);
            }
        } else {
            for v in vs.iter_mut() {
                givens(v, k, k + h, &c, &s);
            }
        }
    }
}

/// Orthonormal pair `(a, b)` of pure elements (a point of `V`).
pub fn v_frame(rng: &mut SampleRng, level: u32, rotations: usize) -> (Element, Element) {
    frame_in(rng, level, Subspace::Pure, rotations)
}

/// Orthonormal pair of doubly pure elements.
pub fn v_doubly_frame(rng: &mut SampleRng, level: u32, rotations: usize) -> (Element, Element) {
    frame_in(rng, level, Subspace::DoublyPure, rotations)
}

fn frame_in(rng: &mut SampleRng, level: u32, subspace: Subspace, rotations: usize) -> (Element, Element) {
    let idx = subspace.indices(level);
    assert!(idx.len() >= 2);
    let i = idx[rng.random_range(0..idx.len())];
    let mut j = i;
    while j == i {
        j = idx[rng.random_range(0..idx.len())];
    }
    let mut a = Element::basis(level, i).expect("index").into_coeffs();
    let mut b = Element::basis(level, j).expect("index").into_coeffs();
    rotate_randomly(rng, &mut [&mut a, &mut b], &idx, rotations);
    (Element::new(level, a).expect("dim"), Element::new(level, b).expect("dim"))
}

/// A point of `W`: doubly pure unit `a`, `b` with `b` orthogonal to `a`
/// and `a~`. Requires `level >= 3`.
pub fn w_frame(rng: &mut SampleRng, level: u32, rotations: usize) -> (Element, Element) {
    let h = dim(level) / 2;
    assert!(h >= 3, "W frames need level >= 3");
    let i = rng.random_range(1..h);
    let mut j = i;
    while j == i {
        j = rng.random_range(1..h);
    }
    let mut a = Element::basis(level, i).expect("index").into_coeffs();
    let mut b = Element::basis(level, j).expect("index").into_coeffs();
    unitary_randomly(rng, level, &mut [&mut a, &mut b], rotations);
    (Element::new(level, a).expect("dim"), Element::new(level, b).expect("dim"))
}

/// Like [`w_frame`] but with `|a|^2 = |b|^2 = 1/2`, so `(a, b)` is an exact
/// unit element of `A_{n+1}`. Requires `level >= 4`.
pub fn w_frame_half(rng: &mut SampleRng, level: u32, rotations: usize) -> (Element, Element) {
    let h = dim(level) / 2;
    assert!(h >= 5, "half-norm W frames need level >= 4");
    let mut picks: Vec<usize> = Vec::with_capacity(4);
    while picks.len() < 4 {
        let k = rng.random_range(1..h);
        if !picks.contains(&k) {
            picks.push(k);
        }
    }
    let half = Scalar::ratio(1, 2);
    let mut a = Element::zero(level).into_coeffs();
    let mut b = Element::zero(level).into_coeffs();
    a[picks[0]] = half.clone();
    a[picks[1]] = half.clone();
    b[picks[2]] = half.clone();
    b[picks[3]] = half;
    unitary_randomly(rng, level, &mut [&mut a, &mut b], rotations);
    (Element::new(level, a).expect("dim"), Element::new(level, b).expect("dim"))
}

/// Rational point of `S^3` as `(r, s, q, p)`.
pub fn sphere_point(rng: &mut SampleRng, rotations: usize) -> [Scalar; 4] {
    let mut x = vec![Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::zero()];
    rotate_randomly(rng, &mut [&mut x], &[0, 1, 2, 3], rotations);
    [x[0].clone(), x[1].clone(), x[2].clone(), x[3].clone()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::inner;

    #[test]
    fn streams_are_index_keyed() {
        let a: u64 = rng_for(7, 3).random();
        let b: u64 = rng_for(7, 3).random();
        let c: u64 = rng_for(7, 4).random();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn pythagorean_points_are_on_the_circle() {
        let mut rng = rng_for(1, 0);
        for _ in 0..50 {
            let (c, s) = pythagorean(&mut rng);
            assert!((c.square() + s.square()).is_one());
        }
    }

    #[test]
    fn unit_vectors_are_exact() {
        let mut rng = rng_for(2, 0);
        for level in 2..6 {
            let u = unit_vector(&mut rng, level, Subspace::DoublyPure, 6);
            assert!(u.norm_sq().is_one());
            assert!(u.coeff(0).is_zero());
            assert!(u.coeff(dim(level) / 2).is_zero());
        }
    }

    #[test]
    fn w_frames_satisfy_constraints() {
        let mut rng = rng_for(3, 0);
        for level in 3..6 {
            let (a, b) = w_frame(&mut rng, level, 8);
            assert!(a.norm_sq().is_one() && b.norm_sq().is_one());
            assert!(inner(&a, &b).unwrap().is_zero());
            assert!(inner(&a.tilde().unwrap(), &b).unwrap().is_zero());
        }
        let (a, b) = w_frame_half(&mut rng, 4, 8);
        assert_eq!(a.norm_sq(), Scalar::ratio(1, 2));
        assert_eq!(b.norm_sq(), Scalar::ratio(1, 2));
        assert!(inner(&a.tilde().unwrap(), &b).unwrap().is_zero());
    }

    #[test]
    fn sphere_points_are_exact() {
        let mut rng = rng_for(4, 0);
        let g = sphere_point(&mut rng, 5);
        let sum: Scalar = g.iter().map(Scalar::square).sum();
        assert!(sum.is_one());
    }
}
