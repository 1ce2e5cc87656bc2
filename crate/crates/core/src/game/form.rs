use std::collections::BTreeMap;

use serde::Serialize;

use super::Grid;
use crate::{Error, IdSet, Result};

/// Largest number of distinct outcomes the tightness scan accepts.
pub const OUTCOME_CAP: usize = 20;

/// Outcome-valued matrix. Cells hold indices into the declared outcome list.
#[derive(Clone, Debug, PartialEq)]
pub struct GameForm {
    grid: Grid<usize>,
    outcomes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TightnessVerdict {
    pub tight: bool,
    /// On failure, a set of outcomes won by no row and whose complement is won by no column.
    pub witness: Option<IdSet>,
}

/// The three not-tight 2×2 forms, keyed by how many outcomes they use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NotTightType {
    Diag2,
    Diag3,
    Diag4,
}

impl GameForm {
    /// Builds a form from labels; outcomes are numbered in reading order of first use.
    pub fn from_labels<S: AsRef<str>>(rows: &[Vec<S>]) -> Result<Self> {
        let mut outcomes: Vec<String> = Vec::new();
        let mut index = BTreeMap::new();
        let mut grid_rows = Vec::with_capacity(rows.len());
        for row in rows {
            let mut out = Vec::with_capacity(row.len());
            for label in row {
                let label = label.as_ref();
                let id = *index.entry(label.to_string()).or_insert_with(|| {
                    outcomes.push(label.to_string());
                    outcomes.len() - 1
                });
                out.push(id);
            }
            grid_rows.push(out);
        }
        let grid = Grid::from_rows(grid_rows)?;
        if grid.rows == 0 {
            outcomes.clear();
        }
        Ok(GameForm { grid, outcomes })
    }

    /// Builds a form from outcome indices, naming outcome `k` as `w{k+1}`.
    pub fn from_indices(rows: &[&[usize]]) -> Self {
        let n = rows.iter().flat_map(|r| r.iter()).map(|&x| x + 1).max().unwrap_or(0);
        let grid = Grid::from_rows(rows.iter().map(|r| r.to_vec()).collect()).expect("rectangular");
        GameForm { grid, outcomes: (1..=n).map(|k| format!("w{k}")).collect() }
    }

    pub(crate) fn from_flat(rows: usize, cols: usize, cells: Vec<usize>, outcomes: usize) -> Self {
        GameForm {
            grid: Grid { rows, cols, cells },
            outcomes: (1..=outcomes).map(|k| format!("w{k}")).collect(),
        }
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

    pub fn outcome(&self, i: usize, j: usize) -> usize {
        *self.grid.at(i, j)
    }

    pub fn outcomes(&self) -> &[String] {
        &self.outcomes
    }

    pub fn label(&self, i: usize, j: usize) -> &str {
        &self.outcomes[self.outcome(i, j)]
    }

    pub fn to_labels(&self) -> Vec<Vec<String>> {
        (0..self.rows()).map(|i| (0..self.cols()).map(|j| self.label(i, j).to_string()).collect()).collect()
    }

    /// Outcomes that actually occur, as a set of outcome indices.
    pub fn used_outcomes(&self) -> IdSet {
        IdSet::from_ids(self.grid.cells.iter().copied())
    }

    /// Subform on the selected lines; the outcome list is kept.
    pub fn subform(&self, rows: IdSet, cols: IdSet) -> Result<GameForm> {
        Ok(GameForm { grid: self.grid.select(rows, cols)?, outcomes: self.outcomes.clone() })
    }

    pub fn without_row(&self, i: usize) -> GameForm {
        self.subform(IdSet::full(self.rows()).without(i), IdSet::full(self.cols())).unwrap()
    }

    pub fn without_col(&self, j: usize) -> GameForm {
        self.subform(IdSet::full(self.rows()), IdSet::full(self.cols()).without(j)).unwrap()
    }

    pub fn transpose(&self) -> GameForm {
        GameForm { grid: self.grid.transpose(), outcomes: self.outcomes.clone() }
    }

    /// For every outcome set A some row lies inside A or some column inside
    /// its complement. The empty form is not tight.
    pub fn is_tight(&self) -> Result<TightnessVerdict> {
        let used = self.used_outcomes().to_vec();
        if used.len() > OUTCOME_CAP {
            return Err(Error::CapExceeded { count: used.len() as u128, cap: OUTCOME_CAP as u128 });
        }
        let mut local = vec![0usize; self.outcomes.len()];
        for (k, &o) in used.iter().enumerate() {
            local[o] = k;
        }
        let mut row_sets = vec![0u32; self.rows()];
        let mut col_sets = vec![0u32; self.cols()];
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                let bit = 1u32 << local[self.outcome(i, j)];
                row_sets[i] |= bit;
                col_sets[j] |= bit;
            }
        }
        for a in 0u32..1 << used.len() {
            let row_wins = row_sets.iter().any(|&r| r & !a == 0);
            let col_wins = col_sets.iter().any(|&c| c & a == 0);
            if !row_wins && !col_wins {
                let witness = IdSet::from_ids((0..used.len()).filter(|k| a >> k & 1 == 1).map(|k| used[k]));
                return Ok(TightnessVerdict { tight: false, witness: Some(witness) });
            }
        }
        Ok(TightnessVerdict { tight: true, witness: None })
    }

    pub fn tight(&self) -> bool {
        self.is_tight().expect("outcome count within cap").tight
    }

    fn is_tight_2x2(&self, i1: usize, i2: usize, j1: usize, j2: usize) -> bool {
        let (a, b) = (self.outcome(i1, j1), self.outcome(i1, j2));
        let (c, d) = (self.outcome(i2, j1), self.outcome(i2, j2));
        a == b || c == d || a == c || b == d
    }

    /// Every 2×2 subform is tight.
    pub fn is_totally_tight(&self) -> bool {
        let (r, c) = (self.rows(), self.cols());
        for i1 in 0..r {
            for i2 in i1 + 1..r {
                for j1 in 0..c {
                    for j2 in j1 + 1..c {
                        if !self.is_tight_2x2(i1, i2, j1, j2) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Every nonempty subform is tight, checked one subform at a time.
    pub fn is_totally_tight_bruteforce(&self) -> bool {
        let (r, c) = (self.rows(), self.cols());
        (1u128..1 << r).all(|rm| (1u128..1 << c).all(|cm| self.subform(IdSet(rm), IdSet(cm)).unwrap().tight()))
    }

    /// Catalog type of a not-tight 2×2 form, `None` if the form is tight.
    pub fn not_tight_2x2_type(&self) -> Result<Option<NotTightType>> {
        if (self.rows(), self.cols()) != (2, 2) {
            return Err(Error::Shape(format!("expected 2x2, got {}x{}", self.rows(), self.cols())));
        }
        if self.is_tight_2x2(0, 1, 0, 1) {
            return Ok(None);
        }
        Ok(Some(match self.used_outcomes().len() {
            2 => NotTightType::Diag2,
            3 => NotTightType::Diag3,
            _ => NotTightType::Diag4,
        }))
    }

    /// Relabels outcome `k` by the index of its block; block `b` is named after
    /// its members joined with `+`.
    pub fn merge_outcomes(&self, blocks: &[Vec<usize>]) -> Result<GameForm> {
        let n = self.outcomes.len();
        let mut block_of = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::Partition(format!("block {b} is empty")));
            }
            for &o in block {
                if o >= n {
                    return Err(Error::Partition(format!("outcome {o} outside 0..{n}")));
                }
                if block_of[o] != usize::MAX {
                    return Err(Error::Partition(format!("outcome {o} appears twice")));
                }
                block_of[o] = b;
            }
        }
        if let Some(o) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::Partition(format!("outcome {o} is not covered")));
        }
        let outcomes = blocks
            .iter()
            .map(|block| block.iter().map(|&o| self.outcomes[o].as_str()).collect::<Vec<_>>().join("+"))
            .collect();
        let cells = self.grid.cells.iter().map(|&o| block_of[o]).collect();
        Ok(GameForm { grid: Grid { rows: self.rows(), cols: self.cols(), cells }, outcomes })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pennies_form_is_not_tight() {
        let g = GameForm::from_indices(&[&[0, 1], &[1, 0]]);
        let v = g.is_tight().unwrap();
        assert!(!v.tight);
        assert_eq!(v.witness, Some(IdSet::from_ids([0])));
        assert_eq!(g.not_tight_2x2_type().unwrap(), Some(NotTightType::Diag2));
    }

    #[test]
    fn single_outcome_is_tight() {
        assert!(GameForm::from_indices(&[&[0, 0], &[0, 0]]).tight());
        assert!(!GameForm::from_indices(&[]).tight());
    }

    #[test]
    fn merging_validates_partition() {
        let g = GameForm::from_indices(&[&[0, 1], &[2, 0]]);
        assert!(g.merge_outcomes(&[vec![0], vec![1]]).is_err());
        assert!(g.merge_outcomes(&[vec![0, 1], vec![1, 2]]).is_err());
        let m = g.merge_outcomes(&[vec![0], vec![1, 2]]).unwrap();
        assert_eq!(m.not_tight_2x2_type().unwrap(), Some(NotTightType::Diag2));
        assert_eq!(m.label(1, 0), "w2+w3");
    }

    #[test]
    fn labels_round_trip() {
        let rows = vec![vec!["a", "b"], vec!["b", "a"]];
        let g = GameForm::from_labels(&rows).unwrap();
        assert_eq!(g.to_labels(), vec![vec!["a", "b"], vec!["b", "a"]]);
    }
}
