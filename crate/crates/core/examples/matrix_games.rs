//! Saddle points: the 4x4 SP-free example and Shapley's 2x2 criterion.

use convexfam::game::{fixtures, MatrixGame};

fn main() {
    let m = fixtures::sp_fixture_4x4();
    println!("4x4 example has a SP: {}", m.has_sp());
    for k in 0..4 {
        println!("  without row {}: {:?}, without column {}: {:?}", k + 1, m.without_row(k).saddle_points(), k + 1, m.without_col(k).saddle_points());
    }
    let two = fixtures::two_sp_fixture_2x3();
    println!("2x3 example saddle points {:?}, values {:?}", two.saddle_points(), two.values());
    let pennies = MatrixGame::from_ints(&[&[1, 0], &[0, 1]]);
    println!("matching pennies: SP-free 2x2 {}", pennies.is_sp_free_2x2().unwrap());
    let ordered = MatrixGame::from_ints(&[&[3, 2, 1], &[2, 1, 0], &[1, 0, 0]]);
    println!("every 2x2 has a SP: {}, absolutely determined: {}", ordered.all_2x2_have_sp(), ordered.is_absolutely_determined());
}
