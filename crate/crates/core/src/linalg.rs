//! Exact rank over the rationals.

use crate::element::Element;
use crate::scalar::Scalar;

/// Rank of the row family by fraction-preserving Gaussian elimination.
pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let mut m: Vec<Vec<Scalar>> = rows.iter().filter(|r| r.iter().any(|c| !c.is_zero())).cloned().collect();
    if m.is_empty() {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].recip().expect("nonzero pivot");
        for i in (r + 1)..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] * &pivot;
            for k in c..cols {
                if m[r][k].is_zero() {
                    continue;
                }
                let d = &f * &m[r][k];
                m[i][k] -= &d;
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

pub fn rank_of(elements: &[&Element]) -> usize {
    let rows: Vec<Vec<Scalar>> = elements.iter().map(|e| e.coeffs().to_vec()).collect();
    rank(&rows)
}

/// Whether `x` lies in the span of `basis`.
pub fn in_span(x: &Element, basis: &[&Element]) -> bool {
    let mut all: Vec<&Element> = basis.to_vec();
    let base = rank_of(&all);
    all.push(x);
    rank_of(&all) == base
}
