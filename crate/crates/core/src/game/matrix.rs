use super::Grid;
use crate::{Error, IdSet, Result};

/// Real payoff matrix; Alice (rows) maximises, Bob (columns) minimises.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixGame {
    grid: Grid<f64>,
}

impl MatrixGame {
    /// Any row list with an empty side collapses to the canonical empty matrix.
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let grid = Grid::from_rows(rows)?;
        if grid.cells.iter().any(|x| x.is_nan()) {
            return Err(Error::Shape("NaN payoff".into()));
        }
        Ok(MatrixGame { grid })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let rows = rows.iter().map(|r| r.iter().map(|&x| x as f64).collect()).collect();
        MatrixGame::from_rows(rows).expect("rectangular")
    }

    pub(crate) fn from_flat(rows: usize, cols: usize, cells: Vec<f64>) -> Self {
        debug_assert_eq!(rows * cols, cells.len());
        MatrixGame { grid: Grid { rows, cols, cells } }
    }

    pub fn empty() -> Self {
        MatrixGame { grid: Grid { rows: 0, cols: 0, cells: Vec::new() } }
    }

    pub fn rows(&self) -> usize {
        self.grid.rows
    }

    pub fn cols(&self) -> usize {
        self.grid.cols
    }

    pub fn is_empty(&self) -> bool {
        self.grid.rows == 0
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        *self.grid.at(i, j)
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.grid.to_rows()
    }

    pub fn submatrix(&self, rows: IdSet, cols: IdSet) -> Result<MatrixGame> {
        Ok(MatrixGame { grid: self.grid.select(rows, cols)? })
    }

    pub fn without_row(&self, i: usize) -> MatrixGame {
        self.submatrix(IdSet::full(self.rows()).without(i), IdSet::full(self.cols())).unwrap()
    }

    pub fn without_col(&self, j: usize) -> MatrixGame {
        self.submatrix(IdSet::full(self.rows()), IdSet::full(self.cols()).without(j)).unwrap()
    }

    fn row_min(&self, i: usize) -> f64 {
        (0..self.cols()).map(|j| self.get(i, j)).fold(f64::INFINITY, f64::min)
    }

    fn col_max(&self, j: usize) -> f64 {
        (0..self.rows()).map(|i| self.get(i, j)).fold(f64::NEG_INFINITY, f64::max)
    }

    /// Entries minimal in their row and maximal in their column (non-strict).
    pub fn saddle_points(&self) -> Vec<(usize, usize)> {
        let row_min: Vec<f64> = (0..self.rows()).map(|i| self.row_min(i)).collect();
        let col_max: Vec<f64> = (0..self.cols()).map(|j| self.col_max(j)).collect();
        let mut out = Vec::new();
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                let x = self.get(i, j);
                if x == row_min[i] && x == col_max[j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// The empty matrix counts as having a saddle point.
    pub fn has_sp(&self) -> bool {
        self.is_empty() || !self.saddle_points().is_empty()
    }

    /// `(maxmin, minmax)`; equal exactly when a saddle point exists.
    pub fn values(&self) -> Option<(f64, f64)> {
        if self.is_empty() {
            return None;
        }
        let maxmin = (0..self.rows()).map(|i| self.row_min(i)).fold(f64::NEG_INFINITY, f64::max);
        let minmax = (0..self.cols()).map(|j| self.col_max(j)).fold(f64::INFINITY, f64::min);
        Some((maxmin, minmax))
    }

    /// 2×2 test: saddle-point free iff the closed intervals spanned by the two
    /// diagonals are disjoint.
    pub fn is_sp_free_2x2(&self) -> Result<bool> {
        if (self.rows(), self.cols()) != (2, 2) {
            return Err(Error::Shape(format!("expected 2x2, got {}x{}", self.rows(), self.cols())));
        }
        let span = |x: f64, y: f64| (x.min(y), x.max(y));
        let (lo1, hi1) = span(self.get(0, 0), self.get(1, 1));
        let (lo2, hi2) = span(self.get(0, 1), self.get(1, 0));
        Ok(hi1 < lo2 || hi2 < lo1)
    }

    /// Every 2×2 submatrix has a saddle point.
    pub fn all_2x2_have_sp(&self) -> bool {
        let (r, c) = (self.rows(), self.cols());
        for i1 in 0..r {
            for i2 in i1 + 1..r {
                for j1 in 0..c {
                    for j2 in j1 + 1..c {
                        let sub = self
                            .submatrix(IdSet::from_ids([i1, i2]), IdSet::from_ids([j1, j2]))
                            .unwrap();
                        if sub.is_sp_free_2x2().unwrap() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Every submatrix has a saddle point, checked submatrix by submatrix.
    pub fn is_absolutely_determined(&self) -> bool {
        let (r, c) = (self.rows(), self.cols());
        (1u128..1 << r).all(|rm| {
            (1u128..1 << c).all(|cm| self.submatrix(IdSet(rm), IdSet(cm)).unwrap().has_sp())
        })
    }

    pub fn transpose(&self) -> MatrixGame {
        MatrixGame { grid: self.grid.transpose() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matching_pennies_has_no_sp() {
        let m = MatrixGame::from_ints(&[&[0, 1], &[1, 0]]);
        assert!(m.saddle_points().is_empty());
        assert!(m.is_sp_free_2x2().unwrap());
        let (lo, hi) = m.values().unwrap();
        assert!(lo < hi);
    }

    #[test]
    fn criterion_examples() {
        assert!(!MatrixGame::from_ints(&[&[1, 1], &[1, 1]]).is_sp_free_2x2().unwrap());
        assert!(MatrixGame::from_ints(&[&[0, 2], &[3, 1]]).is_sp_free_2x2().unwrap());
        assert!(MatrixGame::from_ints(&[&[0, 2, 1]]).is_sp_free_2x2().is_err());
    }

    #[test]
    fn single_row_has_sp_at_its_minimum() {
        let m = MatrixGame::from_ints(&[&[3, 1, 2]]);
        assert_eq!(m.saddle_points(), vec![(0, 1)]);
        assert!(MatrixGame::empty().has_sp());
    }

    #[test]
    fn empty_selection_collapses() {
        let m = MatrixGame::from_ints(&[&[3, 1, 2]]);
        let e = m.submatrix(IdSet::empty(), IdSet::full(3)).unwrap();
        assert_eq!(e, MatrixGame::empty());
        assert!(m.submatrix(IdSet::from_ids([1]), IdSet::full(3)).is_err());
    }
}
