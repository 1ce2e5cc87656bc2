//! Kernels of circulant digraphs G_n(1,7,8): i -> i+1, i+7, i+8 (mod n).

use convexfam::graph::{self, Digraph, DEFAULT_KERNEL_BUDGET};
use convexfam::{IdSet, Search};

fn kernel(d: &Digraph) -> String {
    match graph::find_kernel(d, DEFAULT_KERNEL_BUDGET) {
        Search::Decided(Some(k)) => format!("{:?}", k.labels()),
        Search::Decided(None) => "none".into(),
        Search::Undecided { explored } => format!("undecided after {explored} nodes"),
    }
}

fn main() {
    for n in [15, 16, 29, 43] {
        println!("G{n}(1,7,8): kernel {}", kernel(&Digraph::circulant(n, &[1, 7, 8]).unwrap()));
    }
    let g43 = Digraph::circulant(43, &[1, 7, 8]).unwrap();
    for j in [1, 7, 8] {
        println!("G43 - (43,{j}): kernel {}", kernel(&g43.without_arc(42, j - 1)));
    }
    let g16 = Digraph::circulant(16, &[1, 7, 8]).unwrap();
    let h = g16.induced_subgraph(IdSet::full(15)).unwrap().reverse();
    println!("{{1,3,5,7}} is a kernel of reversed G16 - 16: {}", graph::is_kernel(&h, IdSet::from_labels([1, 3, 5, 7])).unwrap());
    for n in 2..=6 {
        let c = graph::count_kernels(&graph::fixtures::directed_cycle(n), DEFAULT_KERNEL_BUDGET);
        println!("directed C{n}: {:?} kernels", c.decided());
    }
}
