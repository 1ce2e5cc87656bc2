//! d-graphs: Π, Δ, the bull and one substitution.

use convexfam::dgraph::{fixtures, DGraph};

fn describe(name: &str, g: &DGraph) {
    println!(
        "{name:<10} n={} d={} CC {:<5} CIS {:<5} Π {:?} Δ {:?}",
        g.n(),
        g.d(),
        g.is_cc(),
        g.cis(),
        g.contains_pi(),
        g.contains_delta()
    );
}

fn main() {
    describe("Π", &fixtures::pi());
    describe("Δ", &fixtures::delta());
    let bull = fixtures::bull();
    describe("bull", &bull);
    describe("bull - v5", &bull.without_vertex(4));
    describe("Π(v4->Π)", &fixtures::pi_sub_pi());
    describe("L(K3,3)", &fixtures::line_knn_2graph(3));
}
