//! Float-mode zero-divisor finder.
//!
//! Minimizes `|ab|` over unit doubly pure `a`, `b` by alternating exact
//! half-steps: with `a` fixed the best unit `b` is the least singular vector
//! of left multiplication by `a` restricted to doubly pure coordinates, and
//! symmetrically for `a` with `b` fixed. Each half-step can only lower the
//! residual.

use nalgebra::{DMatrix, SymmetricEigen};
use rand::Rng;
use serde::Serialize;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::sample::{rng_for, Subspace};
use crate::scalar::Scalar;

use super::cert::{Method, ZeroDivisorCert};

pub fn mul_f64(x: &[f64], y: &[f64]) -> Vec<f64> {
    let n = x.len();
    if n == 1 {
        return vec![x[0] * y[0]];
    }
    let h = n / 2;
    let (a, b) = x.split_at(h);
    let (u, v) = y.split_at(h);
    let v_bar = conj_f64(v);
    let u_bar = conj_f64(u);
    let p = mul_f64(a, u);
    let q = mul_f64(&v_bar, b);
    let r = mul_f64(v, a);
    let s = mul_f64(b, &u_bar);
    let mut out: Vec<f64> = p.iter().zip(&q).map(|(p, q)| p - q).collect();
    out.extend(r.iter().zip(&s).map(|(r, s)| r + s));
    out
}

pub fn conj_f64(x: &[f64]) -> Vec<f64> {
    let mut out = x.to_vec();
    for c in out.iter_mut().skip(1) {
        *c = -*c;
    }
    out
}

pub fn norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NumericConfig {
    pub level: u32,
    pub seed: u64,
    pub max_iters: usize,
    pub tol: f64,
}

impl NumericConfig {
    pub fn new(level: u32, seed: u64) -> Self {
        NumericConfig { level, seed, max_iters: 500, tol: 1e-10 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NumericResult {
    pub level: u32,
    pub seed: u64,
    pub residual: f64,
    pub iterations: usize,
    pub converged: bool,
    pub a: Vec<f64>,
    pub b: Vec<f64>,
}

/// Smallest-eigenvalue eigenvector of `M^T M`, lifted back to full
/// coordinates.
fn least_singular(m: &DMatrix<f64>, idx: &[usize], dim: usize) -> Vec<f64> {
    let gram = m.transpose() * m;
    let eig = SymmetricEigen::new(gram);
    let (k, _) = eig
        .eigenvalues
        .iter()
        .enumerate()
        .fold((0, f64::INFINITY), |best, (i, &v)| if v < best.1 { (i, v) } else { best });
    let col = eig.eigenvectors.column(k);
    let mut out = vec![0.0; dim];
    for (t, &i) in idx.iter().enumerate() {
        out[i] = col[t];
    }
    let n = norm(&out);
    out.iter_mut().for_each(|v| *v /= n);
    out
}

fn left_matrix(a: &[f64], idx: &[usize]) -> DMatrix<f64> {
    let n = a.len();
    let mut m = DMatrix::zeros(n, idx.len());
    for (t, &j) in idx.iter().enumerate() {
        let mut e = vec![0.0; n];
        e[j] = 1.0;
        let col = mul_f64(a, &e);
        for i in 0..n {
            m[(i, t)] = col[i];
        }
    }
    m
}

fn right_matrix(b: &[f64], idx: &[usize]) -> DMatrix<f64> {
    let n = b.len();
    let mut m = DMatrix::zeros(n, idx.len());
    for (t, &j) in idx.iter().enumerate() {
        let mut e = vec![0.0; n];
        e[j] = 1.0;
        let col = mul_f64(&e, b);
        for i in 0..n {
            m[(i, t)] = col[i];
        }
    }
    m
}

fn random_unit(rng: &mut impl Rng, dim: usize, idx: &[usize]) -> Vec<f64> {
    let mut v = vec![0.0; dim];
    for &i in idx {
        v[i] = rng.random_range(-1.0..1.0);
    }
    let n = norm(&v);
    v.iter_mut().for_each(|x| *x /= n);
    v
}

/// One seeded run. Stops at `tol`, after `max_iters` alternations, or when
/// the residual stops moving. Non-convergence is reported, not an error.
pub fn search_numeric(cfg: &NumericConfig) -> Result<NumericResult> {
    if cfg.level < 3 {
        return Err(Error::LevelTooLow { min: 3, got: cfg.level });
    }
    if !(cfg.tol > 0.0) {
        return Err(Error::pre("tolerance must be positive"));
    }
    let dim = 1usize << cfg.level;
    let idx = Subspace::DoublyPure.indices(cfg.level);
    let mut rng = rng_for(cfg.seed, 0);
    let mut a = random_unit(&mut rng, dim, &idx);
    let mut b = random_unit(&mut rng, dim, &idx);
    let mut residual = norm(&mul_f64(&a, &b));
    let mut iterations = 0;
    let mut stalled = 0;
    while iterations < cfg.max_iters && residual >= cfg.tol {
        iterations += 1;
        b = least_singular(&left_matrix(&a, &idx), &idx, dim);
        a = least_singular(&right_matrix(&b, &idx), &idx, dim);
        let next = norm(&mul_f64(&a, &b));
        if (residual - next).abs() <= 1e-14 * residual.max(1.0) {
            stalled += 1;
        } else {
            stalled = 0;
        }
        residual = next;
        if stalled >= 3 {
            break;
        }
    }
    Ok(NumericResult {
        level: cfg.level,
        seed: cfg.seed,
        residual,
        iterations,
        converged: residual < cfg.tol,
        a,
        b,
    })
}

/// Snap float vectors to rationals with denominators at most `max_den`
/// (after scaling the largest coordinate to one) and re-verify exactly.
/// `None` when the rounded pair is not an exact zero divisor.
pub fn round_to_cert(a: &[f64], b: &[f64], max_den: u64, seed: Option<u64>) -> Option<ZeroDivisorCert> {
    if a.len() != b.len() || !a.len().is_power_of_two() {
        return None;
    }
    let level = a.len().trailing_zeros();
    let snap = |v: &[f64]| -> Option<Element> {
        let m = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        if m == 0.0 {
            return None;
        }
        let coeffs: Option<Vec<Scalar>> = v.iter().map(|x| Scalar::approximate(x / m, max_den)).collect();
        Element::new(level, coeffs?).ok()
    };
    let ea = snap(a)?;
    let eb = snap(b)?;
    ZeroDivisorCert::new(ea, eb, Method::Numeric, seed, None).ok()
}
