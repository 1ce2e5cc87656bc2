//! d-graphs used as worked examples, and the bounded Δ-conjecture search.

use rayon::prelude::*;
use serde::Serialize;

use super::DGraph;

/// Π: colour 1 on the path v1 v2 v3 v4, colour 2 on the complementary path.
pub fn pi() -> DGraph {
    DGraph::from_labeled_edges(4, 2, &[(1, 2, 1), (2, 3, 1), (3, 4, 1), (2, 4, 2), (4, 1, 2), (1, 3, 2)])
        .unwrap()
}

/// Δ: a triangle with three colours.
pub fn delta() -> DGraph {
    DGraph::from_labeled_edges(3, 3, &[(1, 2, 1), (2, 3, 2), (3, 1, 3)]).unwrap()
}

/// The bull 2-graph; v1..v4 induce a Π and v5 is the top vertex.
pub fn bull() -> DGraph {
    DGraph::from_labeled_edges(
        5,
        2,
        &[
            (1, 2, 1),
            (2, 3, 1),
            (3, 4, 1),
            (2, 5, 1),
            (3, 5, 1),
            (2, 4, 2),
            (4, 1, 2),
            (1, 3, 2),
            (1, 5, 2),
            (4, 5, 2),
        ],
    )
    .unwrap()
}

/// Π(v4 → Π′) on 7 vertices: v1, v2, v3, then v1′..v4′.
pub fn pi_sub_pi() -> DGraph {
    pi().substitute(3, &pi()).unwrap()
}

/// 𝓑′ = 𝓑(v5 → Π′) on 8 vertices: v1..v4, then v1′..v4′.
pub fn bull_sub_pi() -> DGraph {
    bull().substitute(4, &pi()).unwrap()
}

/// 𝓑″ = 𝓑(v5 → Δ) on 7 vertices: v1..v4, then v1′, v2′, v3′. `colors` are the
/// 0-based colours of (v1′,v2′), (v2′,v3′), (v3′,v1′) and must be distinct.
pub fn bull_sub_delta(colors: [usize; 3]) -> DGraph {
    assert!(colors[0] != colors[1] && colors[1] != colors[2] && colors[0] != colors[2]);
    let d = colors.iter().max().unwrap() + 1;
    let mut tri = DGraph::monochromatic(3, d.max(2));
    tri.set(0, 1, colors[0]);
    tri.set(1, 2, colors[1]);
    tri.set(2, 0, colors[2]);
    bull().substitute(4, &tri).unwrap()
}

/// 𝓑″ with fresh colours 3, 4, 5 on the triangle.
pub fn bull_sub_delta_default() -> DGraph {
    bull_sub_delta([2, 3, 4])
}

/// L(K_{n,n}) and its complement as colours 1 and 2. Vertex `i * n + j` is
/// the edge between the i-th left and j-th right vertex.
pub fn line_knn_2graph(n: usize) -> DGraph {
    let m = n * n;
    let mut g = DGraph::monochromatic(m, 2);
    for x in 0..m {
        for y in x + 1..m {
            let share = x / n == y / n || x % n == y % n;
            g.set(x, y, if share { 0 } else { 1 });
        }
    }
    g
}

#[derive(Clone, Debug, Serialize)]
pub struct DeltaSearchReport {
    pub n_max: usize,
    pub checked: u64,
    pub complete: bool,
    pub counterexamples: Vec<Vec<(usize, usize, usize)>>,
}

/// Looks for a CIS 3-graph containing Δ on at most `n_max` vertices.
///
/// Up to relabelling vertices and colours the Δ sits on vertices 0, 1, 2 with
/// colours 0, 1, 2, so only the remaining pairs are enumerated. Stops with
/// `complete = false` once more than `budget` d-graphs would be checked.
pub fn delta_conjecture_search(n_max: usize, budget: u64) -> DeltaSearchReport {
    let mut report = DeltaSearchReport { n_max, checked: 0, complete: true, counterexamples: Vec::new() };
    for n in 3..=n_max {
        let free = n * (n - 1) / 2 - 3;
        let total = 3u64.pow(free as u32);
        if report.checked + total > budget {
            report.complete = false;
            break;
        }
        let found: Vec<DGraph> = (0..total)
            .into_par_iter()
            .map(|code| with_fixed_delta(n, code))
            .filter(|g| g.cis())
            .collect();
        report.checked += total;
        report.counterexamples.extend(found.iter().map(DGraph::edges));
    }
    report
}

fn with_fixed_delta(n: usize, mut code: u64) -> DGraph {
    let mut g = DGraph::monochromatic(n, 3);
    g.set(0, 1, 0);
    g.set(1, 2, 1);
    g.set(0, 2, 2);
    for u in 0..n {
        for v in (u + 1).max(3)..n {
            g.set(u, v, (code % 3) as usize);
            code /= 3;
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::IdSet;

    #[test]
    fn bull_contains_pi_and_is_cis() {
        let b = bull();
        assert_eq!(b.sub_dgraph(IdSet::from_labels([1, 2, 3, 4])).unwrap(), pi());
        assert!(b.is_cc() && b.cis());
        assert!(!b.without_vertex(4).cis());
    }

    #[test]
    fn pi_sub_pi_is_cc_but_only_reduces_to_pi() {
        let g = pi_sub_pi();
        assert_eq!(g.n(), 7);
        assert!(g.is_cc());
        for v in 0..3 {
            assert!(!g.without_vertex(v).is_cc(), "deleting v{}", v + 1);
        }
    }

    #[test]
    fn line_graph_is_locally_minimal_cis() {
        let g = line_knn_2graph(3);
        assert!(g.cis());
        for v in 0..9 {
            assert!(!g.without_vertex(v).cis());
        }
    }

    #[test]
    fn fixed_delta_enumeration() {
        let g = with_fixed_delta(4, 0);
        assert_eq!(g.contains_delta(), Some([0, 1, 2]));
        let r = delta_conjecture_search(4, 28);
        assert!(r.complete && r.counterexamples.is_empty());
        assert_eq!(r.checked, 1 + 27);
        assert!(!delta_conjecture_search(5, 100).complete);
    }
}
