use crate::element::{dim, Element};
use crate::error::Result;
use crate::scalar::Scalar;
use crate::table::{build_table, mul_sparse_int, BasisTable};

use super::cert::{Method, ZeroDivisorCert};

/// Signed `k`-term basis combination in canonical form: indices strictly
/// increasing and the first sign positive.
type Combo = Vec<(usize, i64)>;

fn combos(n: usize, k: usize) -> Vec<Combo> {
    let mut out = Vec::new();
    if k == 0 || k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        for signs in 0u32..(1 << (k - 1)) {
            let mut c = Vec::with_capacity(k);
            c.push((idx[0], 1));
            for t in 1..k {
                let s = if signs & (1 << (t - 1)) != 0 { -1 } else { 1 };
                c.push((idx[t], s));
            }
            out.push(c);
        }
        // next k-subset in lexicographic order
        let mut t = k;
        loop {
            if t == 0 {
                return out;
            }
            t -= 1;
            if idx[t] < n - k + t {
                break;
            }
            if t == 0 {
                return out;
            }
        }
        idx[t] += 1;
        for u in (t + 1)..k {
            idx[u] = idx[u - 1] + 1;
        }
    }
}

fn to_element(level: u32, c: &Combo) -> Element {
    let terms: Vec<(usize, Scalar)> = c.iter().map(|&(i, s)| (i, Scalar::from_int(s))).collect();
    Element::from_terms(level, &terms).expect("index in range")
}

/// All zero-divisor pairs `(sum s_i e_i, sum t_j e_j)` with `support` terms
/// each and unit signs, deduplicated under the sign symmetry. Every hit is
/// re-verified with the recursive product before it becomes a certificate.
pub fn search_exhaustive(level: u32, support: usize) -> Result<Vec<ZeroDivisorCert>> {
    search_exhaustive_with(level, support, 1)
}

/// Same as [`search_exhaustive`], splitting the left factors across
/// `workers` threads. The result is independent of `workers`.
pub fn search_exhaustive_with(level: u32, support: usize, workers: usize) -> Result<Vec<ZeroDivisorCert>> {
    let table = build_table(level)?;
    let all = combos(dim(level), support);
    let workers = workers.max(1);
    let chunk = all.len().div_ceil(workers).max(1);
    let hits: Vec<(usize, usize)> = std::thread::scope(|scope| {
        let handles: Vec<_> = all
            .chunks(chunk)
            .enumerate()
            .map(|(w, lefts)| {
                let table = &table;
                let all = &all;
                scope.spawn(move || scan(table, lefts, w * chunk, all))
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("search worker panicked")).collect()
    });
    hits.into_iter()
        .map(|(i, j)| {
            ZeroDivisorCert::new(
                to_element(level, &all[i]),
                to_element(level, &all[j]),
                Method::Exhaustive,
                None,
                Some(support),
            )
        })
        .collect()
}

fn scan(table: &BasisTable, lefts: &[Combo], offset: usize, all: &[Combo]) -> Vec<(usize, usize)> {
    let mut hits = Vec::new();
    for (di, a) in lefts.iter().enumerate() {
        for (j, b) in all.iter().enumerate() {
            if mul_sparse_int(table, a, b).iter().all(|&c| c == 0) {
                hits.push((offset + di, j));
            }
        }
    }
    hits
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combo_counts() {
        // C(n, k) * 2^(k-1)
        assert_eq!(combos(4, 1).len(), 4);
        assert_eq!(combos(4, 2).len(), 12);
        assert_eq!(combos(16, 2).len(), 240);
        assert_eq!(combos(8, 3).len(), 56 * 4);
        assert!(combos(3, 4).is_empty());
    }

    #[test]
    fn octonions_have_no_two_term_zero_divisors() {
        assert!(search_exhaustive(3, 2).unwrap().is_empty());
    }
}
