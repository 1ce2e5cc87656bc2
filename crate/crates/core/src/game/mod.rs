//! Matrix games (saddle points), bimatrix games (pure Nash equilibria) and
//! game forms (tightness).
//!
//! Rows belong to Alice and columns to Bob. In a matrix game Alice maximises
//! and Bob minimises; in a bimatrix game both maximise their own payoff.

mod bimatrix;
pub mod fixtures;
mod form;
pub mod io;
mod matrix;
mod scan;

pub use bimatrix::{BimatrixGame, Theorem3Witness};
pub use form::{GameForm, NotTightType, TightnessVerdict, OUTCOME_CAP};
pub use matrix::MatrixGame;
pub use scan::{sp_free_convexity_scan, zero_sum_lm_scan, SpFreeScan, ZeroSumScan};

use crate::{Error, IdSet, Result};

pub(crate) fn check_lines(set: IdSet, len: usize, what: &str) -> Result<()> {
    if set.bound() > len {
        return Err(Error::InvalidElement(format!(
            "{what} id {} outside 0..{len}",
            set.bound() - 1
        )));
    }
    Ok(())
}

/// Row-major grid with line selection shared by all three game types.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Grid<T> {
    pub rows: usize,
    pub cols: usize,
    pub cells: Vec<T>,
}

impl<T: Clone> Grid<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("rows have different lengths".into()));
        }
        if r == 0 || c == 0 {
            return Ok(Grid { rows: 0, cols: 0, cells: Vec::new() });
        }
        Ok(Grid { rows: r, cols: c, cells: rows.into_iter().flatten().collect() })
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.cells[i * self.cols + j]
    }

    /// Sub-grid on the selected lines; empty if either selection is empty.
    pub fn select(&self, rows: IdSet, cols: IdSet) -> Result<Self> {
        check_lines(rows, self.rows, "row")?;
        check_lines(cols, self.cols, "column")?;
        if rows.is_empty() || cols.is_empty() {
            return Ok(Grid { rows: 0, cols: 0, cells: Vec::new() });
        }
        let mut cells = Vec::with_capacity(rows.len() * cols.len());
        for i in rows.iter() {
            for j in cols.iter() {
                cells.push(self.at(i, j).clone());
            }
        }
        Ok(Grid { rows: rows.len(), cols: cols.len(), cells })
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| self.at(i, j).clone()).collect()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut cells = Vec::with_capacity(self.cells.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                cells.push(self.at(i, j).clone());
            }
        }
        Grid { rows: self.cols, cols: self.rows, cells }
    }
}
