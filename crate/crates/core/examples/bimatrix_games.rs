//! NE-free bimatrix games and the structural local-minimality test.

use convexfam::game::{fixtures, BimatrixGame};

fn main() {
    let g = BimatrixGame::make_ne_free_3x3();
    println!("A = {:?}\nB = {:?}", g.a_rows(), g.b_rows());
    println!("NE-free {}, locally minimal {}", g.is_ne_free(), g.is_locally_minimal_ne_free());
    println!("witness {:?}", g.theorem3_check());
    for k in 0..3 {
        println!("  without row {}: NE {:?}", k + 1, g.without_row(k).nash_equilibria());
    }
    let h = fixtures::ne_free_lm_4x4();
    println!("4x4 example: locally minimal NE-free {}", h.is_locally_minimal_ne_free());
}
