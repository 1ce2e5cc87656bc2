//! Classifies a registry family on a JSON object, as `convexfam classify` does.

use convexfam::cli::{classify_text, ObjectKind};
use convexfam::poset::Order;

fn main() {
    let c5 = r#"{"directed": true, "n": 5, "edges": [[1,2],[2,3],[3,4],[4,5],[5,1]]}"#;
    let report = classify_text(c5, ObjectKind::Digraph, Order::Edge, "kernel-less").unwrap();
    print!("{}", report.render(convexfam::cli::Format::Text));
    let game = r#"{"a": [[1,0],[0,1]]}"#;
    let report = classify_text(game, ObjectKind::Matrix, Order::Line, "sp-free").unwrap();
    print!("{}", report.render(convexfam::cli::Format::Json));
}
