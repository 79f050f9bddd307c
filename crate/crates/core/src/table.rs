//! Basis sign tables: `e_i e_j = sign * e_k`, derived from the recursive
//! product and checked cell by cell when built.

use serde::Serialize;

use crate::element::{dim, Element};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Default cap on table level; `A_10` has a 1M-cell table.
pub const DEFAULT_MAX_TABLE_LEVEL: u32 = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasisTable {
    level: u32,
    /// Row-major `(target index, sign)` with sign in {+1, -1}.
    cells: Vec<(u32, i8)>,
}

impl BasisTable {
    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn dim(&self) -> usize {
        dim(self.level)
    }

    /// `(k, sign)` with `e_i e_j = sign e_k`.
    pub fn get(&self, i: usize, j: usize) -> (usize, i8) {
        let (k, s) = self.cells[i * self.dim() + j];
        (k as usize, s)
    }

    pub fn rows(&self) -> impl Iterator<Item = &[(u32, i8)]> {
        self.cells.chunks(self.dim())
    }
}

pub fn build_table(level: u32) -> Result<BasisTable> {
    build_table_capped(level, DEFAULT_MAX_TABLE_LEVEL)
}

/// Builds the table from the recursive product. Each cell is the product of
/// two basis elements, which must come out as a signed basis element.
pub fn build_table_capped(level: u32, max_level: u32) -> Result<BasisTable> {
    if level > max_level {
        return Err(Error::LevelTooHigh { max: max_level, got: level });
    }
    let n = dim(level);
    let mut cells = Vec::with_capacity(n * n);
    for i in 0..n {
        let ei = Element::basis(level, i)?;
        for j in 0..n {
            let ej = Element::basis(level, j)?;
            let p = &ei * &ej;
            cells.push(signed_basis(&p)?);
        }
    }
    Ok(BasisTable { level, cells })
}

fn signed_basis(p: &Element) -> Result<(u32, i8)> {
    let support = p.support();
    if support.len() != 1 {
        return Err(Error::Internal(format!("basis product {p:?} is not a signed basis vector")));
    }
    let k = support[0];
    let c = p.coeff(k);
    if c.is_one() {
        Ok((k as u32, 1))
    } else if (-c).is_one() {
        Ok((k as u32, -1))
    } else {
        Err(Error::Internal(format!("basis product {p:?} has coefficient {c}")))
    }
}

/// Bilinear expansion of the product over the table.
pub fn mul_via_table(table: &BasisTable, x: &Element, y: &Element) -> Result<Element> {
    if x.level() != y.level() {
        return Err(Error::LevelMismatch { left: x.level(), right: y.level() });
    }
    if x.level() != table.level {
        return Err(Error::LevelMismatch { left: table.level, right: x.level() });
    }
    let n = table.dim();
    let mut out = vec![Scalar::zero(); n];
    for (i, xi) in x.coeffs().iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for (j, yj) in y.coeffs().iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            let (k, s) = table.get(i, j);
            let t = xi * yj;
            if s > 0 {
                out[k] += &t;
            } else {
                out[k] -= &t;
            }
        }
    }
    Element::new(x.level(), out)
}

/// Product of signed sparse integer combinations `sum c_i e_i`, used by the
/// exhaustive search. Terms are `(index, coefficient)`.
pub(crate) fn mul_sparse_int(table: &BasisTable, x: &[(usize, i64)], y: &[(usize, i64)]) -> Vec<i64> {
    let mut out = vec![0i64; table.dim()];
    for &(i, a) in x {
        for &(j, b) in y {
            let (k, s) = table.get(i, j);
            out[k] += i64::from(s) * a * b;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_table() {
        let t = build_table(2).unwrap();
        // i j = k, j k = i, k i = j and the reverses negate.
        assert_eq!(t.get(1, 2), (3, 1));
        assert_eq!(t.get(2, 3), (1, 1));
        assert_eq!(t.get(3, 1), (2, 1));
        assert_eq!(t.get(2, 1), (3, -1));
        assert_eq!(t.get(3, 2), (1, -1));
        assert_eq!(t.get(1, 3), (2, -1));
        for i in 0..4 {
            assert_eq!(t.get(0, i), (i, 1));
            assert_eq!(t.get(i, 0), (i, 1));
        }
    }

    #[test]
    fn diagonal_is_minus_one() {
        for level in 1..6 {
            let t = build_table(level).unwrap();
            for i in 1..t.dim() {
                assert_eq!(t.get(i, i), (0, -1));
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(build_table_capped(4, 3), Err(Error::LevelTooHigh { .. })));
    }

    #[test]
    fn table_level_must_match() {
        let t = build_table(2).unwrap();
        let x = Element::basis(3, 1).unwrap();
        assert!(mul_via_table(&t, &x, &x).is_err());
    }
}
