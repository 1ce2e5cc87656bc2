//! Tightness of game forms.

use convexfam::game::fixtures;

fn main() {
    for (i, f) in fixtures::nine_forms().iter().enumerate() {
        println!("g{} {:?}: tight {}", i + 1, f.to_labels(), f.tight());
    }
    println!("g3 totally tight: {}", fixtures::g3().is_totally_tight());
    for f in fixtures::not_tight_catalog() {
        println!("{:?}: {:?}", f.to_labels(), f.not_tight_2x2_type().unwrap());
    }
    let ab = fixtures::ab_form_4x4();
    println!("4x4 form tight {}; without last row {}, without first row {}", ab.tight(), ab.without_row(3).tight(), ab.without_row(0).tight());
}
