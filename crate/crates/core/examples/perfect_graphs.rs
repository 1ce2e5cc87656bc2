//! Perfection, critical edges and partitionable graphs on small examples.

use convexfam::graph::{self, fixtures, Graph};

fn main() {
    let examples: Vec<(&str, Graph)> = vec![
        ("C5", fixtures::cycle(5)),
        ("C6", fixtures::cycle(6)),
        ("house with chord", fixtures::house_with_chord()),
        ("K4", fixtures::complete(4)),
        ("complement of C7", fixtures::cycle(7).complement()),
    ];
    for (name, g) in examples {
        let perfect = graph::is_perfect_spgt(&g);
        let chi = graph::chromatic_number(&g).unwrap();
        let omega = graph::clique_number(&g).unwrap();
        print!("{name:<18} chi {chi} omega {omega} perfect {perfect:<5} partitionable {:<5}", graph::is_partitionable(&g).unwrap());
        if perfect {
            print!(" Meyniel {:<5} critical edges {:?}", graph::is_meyniel(&g), graph::critical_edges(&g).unwrap());
        }
        println!();
    }
}
