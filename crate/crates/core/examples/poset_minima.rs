//! Minima and local minima of a hand-written family: connected induced
//! subgraphs of a path, then connected spanning subgraphs of a triangle.

use convexfam::graph::{fixtures, Graph};
use convexfam::poset::{classify, FamilyPredicate, GroundPoset, Order};

fn show(name: &str, poset: &GroundPoset, pred: &FamilyPredicate) {
    let r = classify(pred, poset).expect("small poset");
    println!("{name}: {} elements, {} members", r.element_count, r.member_count);
    println!("  minima       {:?}", poset.describe_all(&r.minima));
    println!("  local minima {:?}", poset.describe_all(&r.local_minima));
    let [c, sc, wh, h] = r.verdicts();
    println!("  convex {c}, strongly convex {sc}, weakly hereditary {wh}, hereditary {h}");
    if let Some((f, p, m)) = &r.witnesses.weakly_hereditary {
        println!("  not WH: {} > {} >= {}", poset.describe(f), poset.describe(p), poset.describe(m));
    }
}

fn main() {
    let connected = FamilyPredicate::graphs("connected", Graph::is_connected);
    let p4 = Graph::from_labeled_edges(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
    show("P4, vertex order", &GroundPoset::new(p4, Order::Vertex).unwrap(), &connected);
    let k3 = fixtures::complete(3);
    show("K3, edge order", &GroundPoset::new(k3, Order::Edge).unwrap(), &connected);
}
