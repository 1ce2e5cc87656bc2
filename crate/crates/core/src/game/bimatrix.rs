use serde::Serialize;

use super::{Grid, MatrixGame};
use crate::{Error, IdSet, Result};

/// Two-player game in normal form; both players maximise their own payoff.
#[derive(Clone, Debug, PartialEq)]
pub struct BimatrixGame {
    a: Grid<f64>,
    b: Grid<f64>,
}

/// Permutations certifying local minimality of an NE-free square game.
///
/// `sigma[i]` is the column where Bob's payoff is the unique row maximum and
/// Alice's payoff is second largest in the column; `delta[j]` is the row where
/// Alice's payoff is the unique column maximum and Bob's is second largest in
/// the row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem3Witness {
    pub sigma: Vec<usize>,
    pub delta: Vec<usize>,
}

fn argmax_unique(values: impl Iterator<Item = f64>) -> Option<usize> {
    let v: Vec<f64> = values.collect();
    let max = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut hits = v.iter().enumerate().filter(|(_, &x)| x == max);
    let (first, _) = hits.next()?;
    hits.next().is_none().then_some(first)
}

/// Exactly one entry of the line is strictly greater than `x`.
fn second_largest(x: f64, line: impl Iterator<Item = f64>) -> bool {
    line.filter(|&y| y > x).count() == 1
}

impl BimatrixGame {
    pub fn from_rows(a: Vec<Vec<f64>>, b: Vec<Vec<f64>>) -> Result<Self> {
        let a = Grid::from_rows(a)?;
        let b = Grid::from_rows(b)?;
        if (a.rows, a.cols) != (b.rows, b.cols) {
            return Err(Error::Shape(format!(
                "payoff grids differ: {}x{} vs {}x{}",
                a.rows, a.cols, b.rows, b.cols
            )));
        }
        if a.cells.iter().chain(&b.cells).any(|x| x.is_nan()) {
            return Err(Error::Shape("NaN payoff".into()));
        }
        Ok(BimatrixGame { a, b })
    }

    pub fn from_ints(a: &[&[i64]], b: &[&[i64]]) -> Self {
        let conv = |m: &[&[i64]]| m.iter().map(|r| r.iter().map(|&x| x as f64).collect()).collect();
        BimatrixGame::from_rows(conv(a), conv(b)).expect("matching shapes")
    }

    /// Zero-sum game with Bob's payoff `-a`.
    pub fn zero_sum(m: &MatrixGame) -> Self {
        let a = Grid::from_rows(m.to_rows()).unwrap();
        let b = Grid { rows: a.rows, cols: a.cols, cells: a.cells.iter().map(|x| -x).collect() };
        BimatrixGame { a, b }
    }

    pub fn rows(&self) -> usize {
        self.a.rows
    }

    pub fn cols(&self) -> usize {
        self.a.cols
    }

    pub fn is_empty(&self) -> bool {
        self.a.rows == 0
    }

    pub fn a(&self, i: usize, j: usize) -> f64 {
        *self.a.at(i, j)
    }

    pub fn b(&self, i: usize, j: usize) -> f64 {
        *self.b.at(i, j)
    }

    pub fn a_rows(&self) -> Vec<Vec<f64>> {
        self.a.to_rows()
    }

    pub fn b_rows(&self) -> Vec<Vec<f64>> {
        self.b.to_rows()
    }

    pub fn subgame(&self, rows: IdSet, cols: IdSet) -> Result<BimatrixGame> {
        Ok(BimatrixGame { a: self.a.select(rows, cols)?, b: self.b.select(rows, cols)? })
    }

    pub fn without_row(&self, i: usize) -> BimatrixGame {
        self.subgame(IdSet::full(self.rows()).without(i), IdSet::full(self.cols())).unwrap()
    }

    pub fn without_col(&self, j: usize) -> BimatrixGame {
        self.subgame(IdSet::full(self.rows()), IdSet::full(self.cols()).without(j)).unwrap()
    }

    /// Cells where `a` is a column maximum and `b` a row maximum.
    pub fn nash_equilibria(&self) -> Vec<(usize, usize)> {
        let (r, c) = (self.rows(), self.cols());
        let col_max: Vec<f64> =
            (0..c).map(|j| (0..r).map(|i| self.a(i, j)).fold(f64::NEG_INFINITY, f64::max)).collect();
        let row_max: Vec<f64> =
            (0..r).map(|i| (0..c).map(|j| self.b(i, j)).fold(f64::NEG_INFINITY, f64::max)).collect();
        let mut out = Vec::new();
        for i in 0..r {
            for j in 0..c {
                if self.a(i, j) == col_max[j] && self.b(i, j) == row_max[i] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn has_ne(&self) -> bool {
        !self.nash_equilibria().is_empty()
    }

    /// Nonempty and without pure Nash equilibria.
    pub fn is_ne_free(&self) -> bool {
        !self.is_empty() && !self.has_ne()
    }

    /// NE-free, and deleting any single row or column creates an equilibrium.
    pub fn is_locally_minimal_ne_free(&self) -> bool {
        self.is_ne_free()
            && (0..self.rows()).all(|i| self.without_row(i).has_ne())
            && (0..self.cols()).all(|j| self.without_col(j).has_ne())
    }

    /// Structural test for local minimality: the game is square and NE-free,
    /// and the best-response maps below have disjoint graphs and satisfy the
    /// uniqueness and second-largest conditions.
    pub fn theorem3_check(&self) -> Option<Theorem3Witness> {
        let k = self.rows();
        if k == 0 || k != self.cols() || !self.is_ne_free() {
            return None;
        }
        let mut sigma = Vec::with_capacity(k);
        for i in 0..k {
            let j = argmax_unique((0..k).map(|j| self.b(i, j)))?;
            if !second_largest(self.a(i, j), (0..k).map(|i2| self.a(i2, j))) {
                return None;
            }
            sigma.push(j);
        }
        let mut delta = Vec::with_capacity(k);
        for j in 0..k {
            let i = argmax_unique((0..k).map(|i| self.a(i, j)))?;
            if !second_largest(self.b(i, j), (0..k).map(|j2| self.b(i, j2))) {
                return None;
            }
            delta.push(i);
        }
        let is_perm = |p: &[usize]| {
            let mut seen = vec![false; k];
            p.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
        };
        if !is_perm(&sigma) || !is_perm(&delta) {
            return None;
        }
        if (0..k).any(|i| delta[sigma[i]] == i) {
            return None;
        }
        Some(Theorem3Witness { sigma, delta })
    }

    /// The twelve strict/weak inequalities describing the 3×3 NE-free pattern:
    /// in row `i` Bob ranks `c0 > c1 >= c2`, in column `j` Alice ranks `r0 > r1 >= r2`.
    pub fn satisfies_3x3_system(&self) -> bool {
        if (self.rows(), self.cols()) != (3, 3) {
            return false;
        }
        const B_ROWS: [[usize; 3]; 3] = [[0, 1, 2], [2, 0, 1], [1, 2, 0]];
        const A_COLS: [[usize; 3]; 3] = [[1, 0, 2], [0, 2, 1], [2, 1, 0]];
        let rows_ok = B_ROWS.iter().enumerate().all(|(i, &[c0, c1, c2])| {
            self.b(i, c0) > self.b(i, c1) && self.b(i, c1) >= self.b(i, c2)
        });
        let cols_ok = A_COLS.iter().enumerate().all(|(j, &[r0, r1, r2])| {
            self.a(r0, j) > self.a(r1, j) && self.a(r1, j) >= self.a(r2, j)
        });
        rows_ok && cols_ok
    }

    /// Integer instance of the 3×3 NE-free system.
    pub fn make_ne_free_3x3() -> BimatrixGame {
        BimatrixGame::from_ints(
            &[&[2, 3, 1], &[3, 1, 2], &[1, 2, 3]],
            &[&[3, 2, 1], &[2, 1, 3], &[1, 3, 2]],
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ne_free_instance() {
        let g = BimatrixGame::make_ne_free_3x3();
        assert!(g.satisfies_3x3_system());
        assert!(g.is_ne_free());
        assert!(g.is_locally_minimal_ne_free());
        assert_eq!(g.without_row(0).nash_equilibria(), vec![(1, 1)]);
        let w = g.theorem3_check().unwrap();
        assert_eq!(w.sigma, vec![0, 2, 1]);
        assert_eq!(w.delta, vec![1, 0, 2]);
    }

    #[test]
    fn matching_pennies() {
        let g = BimatrixGame::from_ints(&[&[1, 0], &[0, 1]], &[&[0, 1], &[1, 0]]);
        assert!(g.is_locally_minimal_ne_free());
        assert!(g.theorem3_check().is_some());
    }

    #[test]
    fn zero_sum_ne_are_saddle_points() {
        let m = MatrixGame::from_ints(&[&[3, 1], &[2, 0]]);
        assert_eq!(BimatrixGame::zero_sum(&m).nash_equilibria(), m.saddle_points());
    }

    #[test]
    fn one_by_one() {
        let g = BimatrixGame::from_ints(&[&[5]], &[&[-2]]);
        assert_eq!(g.nash_equilibria(), vec![(0, 0)]);
        assert!(g.theorem3_check().is_none());
    }
}
