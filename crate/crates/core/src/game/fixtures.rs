//! Games and game forms used as worked examples.

use super::{BimatrixGame, GameForm, MatrixGame};

pub fn g1() -> GameForm {
    GameForm::from_indices(&[&[0, 0], &[1, 2]])
}

pub fn g2() -> GameForm {
    GameForm::from_indices(&[&[0, 0, 1, 1], &[2, 3, 2, 3]])
}

pub fn g3() -> GameForm {
    GameForm::from_indices(&[&[0, 0, 2], &[0, 1, 1], &[2, 1, 2]])
}

pub fn g4() -> GameForm {
    GameForm::from_indices(&[&[0, 0, 2], &[0, 0, 1], &[3, 1, 1]])
}

pub fn g5() -> GameForm {
    GameForm::from_indices(&[&[0, 1, 0, 1], &[2, 3, 3, 2], &[0, 3, 0, 4], &[2, 1, 5, 1]])
}

pub fn g6() -> GameForm {
    GameForm::from_indices(&[&[0, 0], &[0, 1]])
}

pub fn g7() -> GameForm {
    GameForm::from_indices(&[&[0, 1], &[1, 0]])
}

pub fn g8() -> GameForm {
    GameForm::from_indices(&[&[0, 0, 1], &[2, 3, 2]])
}

pub fn g9() -> GameForm {
    GameForm::from_indices(&[&[0, 0, 1], &[3, 4, 1], &[3, 2, 2]])
}

/// `g1` through `g9` in order.
pub fn nine_forms() -> [GameForm; 9] {
    [g1(), g2(), g3(), g4(), g5(), g6(), g7(), g8(), g9()]
}

/// The three not-tight 2×2 forms with 2, 3 and 4 outcomes.
pub fn not_tight_catalog() -> [GameForm; 3] {
    [
        GameForm::from_indices(&[&[0, 1], &[1, 0]]),
        GameForm::from_indices(&[&[0, 1], &[2, 0]]),
        GameForm::from_indices(&[&[0, 1], &[2, 3]]),
    ]
}

/// SP-free 0/1 matrix whose upper-left and lower-right 2×2 blocks are SP-free.
pub fn sp_fixture_4x4() -> MatrixGame {
    MatrixGame::from_ints(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[1, 1, 0, 1], &[1, 1, 1, 0]])
}

/// Two saddle points, both in the first column.
pub fn two_sp_fixture_2x3() -> MatrixGame {
    MatrixGame::from_ints(&[&[0, 1, 0], &[0, 0, 1]])
}

/// Not tight; only deleting the last row or column makes it tight.
pub fn ab_form_4x4() -> GameForm {
    GameForm::from_labels(&[
        vec!["a", "b", "a", "b"],
        vec!["b", "a", "a", "b"],
        vec!["a", "a", "a", "b"],
        vec!["b", "b", "b", "a"],
    ])
    .unwrap()
}

/// Locally minimal NE-free 4×4 game whose upper-left 2×2 subgame is already
/// NE-free, so it is not a minimum. Found by a seeded search over games with
/// the unique row maxima of `b` on the diagonal and the unique column maxima
/// of `a` on the transposition (0 1)(2 3).
pub fn ne_free_lm_4x4() -> BimatrixGame {
    BimatrixGame::from_ints(
        &[&[5, 9, 5, 0], &[9, 2, 1, 2], &[2, 0, 5, 9], &[1, 0, 9, 3]],
        &[&[9, 3, 3, 0], &[4, 9, 1, 2], &[0, 1, 9, 3], &[2, 2, 4, 9]],
    )
}

/// Tight 4×4 form on five outcomes; deleting any single row or column
/// leaves a form that is not tight. Found by random search; no 3×3 or 3×4
/// form has this property.
pub fn tight_lm_4x4() -> GameForm {
    GameForm::from_labels(&[
        vec!["a", "b", "a", "b"],
        vec!["c", "d", "d", "c"],
        vec!["e", "e", "d", "b"],
        vec!["e", "e", "a", "c"],
    ])
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::IdSet;

    #[test]
    fn ne_free_lm_contains_smaller_ne_free_game() {
        let g = ne_free_lm_4x4();
        assert!(g.is_locally_minimal_ne_free());
        assert!(g.theorem3_check().is_some());
        let corner = g.subgame(IdSet::from_ids([0, 1]), IdSet::from_ids([0, 1])).unwrap();
        assert!(corner.is_ne_free());
    }

    #[test]
    fn tight_lm_every_deletion_breaks_tightness() {
        let f = tight_lm_4x4();
        assert!(f.tight());
        for k in 0..4 {
            assert!(!f.without_row(k).tight() && !f.without_col(k).tight(), "line {k}");
        }
    }

    #[test]
    fn nine_forms_labels() {
        let tight: Vec<bool> = nine_forms().iter().map(GameForm::tight).collect();
        assert_eq!(tight, [true, true, true, true, true, true, false, false, false]);
        assert!(g3().is_totally_tight());
    }

    #[test]
    fn ab_form_deletions() {
        let g = ab_form_4x4();
        assert!(!g.tight());
        for k in 0..4 {
            assert_eq!(g.without_row(k).tight(), k == 3);
            assert_eq!(g.without_col(k).tight(), k == 3);
        }
    }

    #[test]
    fn sp_fixture_deletions() {
        let m = sp_fixture_4x4();
        assert!(!m.has_sp());
        for k in 0..4 {
            assert_eq!(m.without_row(k).has_sp(), k >= 2);
            assert_eq!(m.without_col(k).has_sp(), k >= 2);
        }
        let m = two_sp_fixture_2x3();
        assert_eq!(m.saddle_points(), vec![(0, 0), (1, 0)]);
        assert!(!m.without_col(0).has_sp());
    }
}
