//! Exhaustive scans over small integer matrices.

use rayon::prelude::*;
use serde::Serialize;

use super::{BimatrixGame, MatrixGame};

#[derive(Clone, Debug, Serialize)]
pub struct SpFreeScan {
    pub max: usize,
    pub alphabet: u8,
    pub checked: u64,
    pub sp_free: u64,
    pub local_minima: u64,
    /// A locally minimal SP-free matrix that is not 2×2, if one exists.
    pub counterexample: Option<Vec<Vec<u8>>>,
}

impl SpFreeScan {
    pub fn convex(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Saddle point of the submatrix on the given row and column masks.
fn has_sp(cells: &[u8], cols: usize, rmask: u32, cmask: u32) -> bool {
    let mut col_max = [0u8; 32];
    for j in (0..cols).filter(|j| cmask >> j & 1 == 1) {
        col_max[j] = (0..32).filter(|i| rmask >> i & 1 == 1).map(|i| cells[i * cols + j]).max().unwrap_or(0);
    }
    (0..32).filter(|i| rmask >> i & 1 == 1).any(|i| {
        let row = &cells[i * cols..(i + 1) * cols];
        let min = (0..cols).filter(|j| cmask >> j & 1 == 1).map(|j| row[j]).min().unwrap();
        (0..cols).any(|j| cmask >> j & 1 == 1 && row[j] == min && col_max[j] == min)
    })
}

fn decode(mut code: u64, len: usize, alphabet: u8) -> Vec<u8> {
    (0..len)
        .map(|_| {
            let x = (code % alphabet as u64) as u8;
            code /= alphabet as u64;
            x
        })
        .collect()
}

/// Every SP-free matrix up to `max × max` over `0..alphabet` is checked for
/// local minimality: no single row or column deletion keeps it SP-free. The
/// SP-free family is convex on this universe iff every such matrix is 2×2.
pub fn sp_free_convexity_scan(max: usize, alphabet: u8) -> SpFreeScan {
    assert!(max <= 5 && alphabet >= 1);
    let mut scan = SpFreeScan { max, alphabet, checked: 0, sp_free: 0, local_minima: 0, counterexample: None };
    for r in 1..=max {
        for c in 1..=max {
            let total = (alphabet as u64).pow((r * c) as u32);
            let (rall, call) = ((1u32 << r) - 1, (1u32 << c) - 1);
            let (free, lm, bad) = (0..total)
                .into_par_iter()
                .map(|code| {
                    let cells = decode(code, r * c, alphabet);
                    if has_sp(&cells, c, rall, call) {
                        return (0u64, 0u64, None);
                    }
                    let local = (0..r).all(|i| r < 2 || has_sp(&cells, c, rall & !(1 << i), call))
                        && (0..c).all(|j| c < 2 || has_sp(&cells, c, rall, call & !(1 << j)));
                    let bad = (local && (r, c) != (2, 2)).then_some(code);
                    (1, local as u64, bad)
                })
                .reduce(|| (0, 0, None), |a, b| (a.0 + b.0, a.1 + b.1, min_opt(a.2, b.2)));
            scan.checked += total;
            scan.sp_free += free;
            scan.local_minima += lm;
            if scan.counterexample.is_none() {
                scan.counterexample =
                    bad.map(|code| decode(code, r * c, alphabet).chunks(c).map(<[u8]>::to_vec).collect());
            }
        }
    }
    scan
}

fn min_opt(a: Option<u64>, b: Option<u64>) -> Option<u64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ZeroSumScan {
    pub size: usize,
    pub alphabet: u8,
    pub checked: u64,
    /// Zero-sum games `(A, −A)` that are locally minimal NE-free.
    pub locally_minimal: Vec<Vec<Vec<u8>>>,
}

/// All `size × size` zero-sum bimatrix games over `0..alphabet`, searched for
/// locally minimal NE-free ones.
pub fn zero_sum_lm_scan(size: usize, alphabet: u8) -> ZeroSumScan {
    let total = (alphabet as u64).pow((size * size) as u32);
    let mut found: Vec<u64> = (0..total)
        .into_par_iter()
        .filter(|&code| {
            let cells = decode(code, size * size, alphabet);
            let m = MatrixGame::from_flat(size, size, cells.iter().map(|&x| x as f64).collect());
            BimatrixGame::zero_sum(&m).is_locally_minimal_ne_free()
        })
        .collect();
    found.sort_unstable();
    ZeroSumScan {
        size,
        alphabet,
        checked: total,
        locally_minimal: found
            .into_iter()
            .map(|code| decode(code, size * size, alphabet).chunks(size).map(<[u8]>::to_vec).collect())
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_saddle_check_agrees_with_matrix_game() {
        for code in 0..3u64.pow(6) {
            let cells = decode(code, 6, 3);
            let m = MatrixGame::from_flat(2, 3, cells.iter().map(|&x| x as f64).collect());
            assert_eq!(has_sp(&cells, 3, 0b11, 0b111), m.has_sp());
            assert_eq!(has_sp(&cells, 3, 0b10, 0b101), m.without_row(0).without_col(1).has_sp());
        }
    }

    #[test]
    fn small_scan_is_convex() {
        let s = sp_free_convexity_scan(3, 2);
        assert!(s.convex());
        // 2×2 SP-free 0/1 matrices are the two diagonal patterns
        assert!(s.local_minima >= 2);
    }

    #[test]
    fn zero_sum_2x2_binary_only_pennies() {
        let s = zero_sum_lm_scan(2, 2);
        assert_eq!(s.locally_minimal, vec![vec![vec![0, 1], vec![1, 0]], vec![vec![1, 0], vec![0, 1]]]);
    }
}
