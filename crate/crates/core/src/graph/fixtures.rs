//! Named graph and digraph constructions.

use super::{Digraph, Graph};

pub fn path(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let mut g = path(n);
    g.add_edge(n - 1, 0);
    g
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n).complement()
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v);
        }
    }
    g
}

/// Vertices are the edges of `g` in [`Graph::edges`] order.
pub fn line_graph(g: &Graph) -> Graph {
    let edges = g.edges();
    let mut l = Graph::new(edges.len());
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                l.add_edge(i, j);
            }
        }
    }
    l
}

/// Skeleton of the cube: 3-bit words, adjacent when they differ in one bit.
pub fn cube() -> Graph {
    let mut g = Graph::new(8);
    for u in 0..8usize {
        for b in 0..3 {
            let v = u ^ 1 << b;
            if u < v {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Ternary graph on 15 vertices in which every edge deletion creates an
/// induced cycle of length divisible by 3.
///
/// A 10-cycle `u_1..u_10` (ids 0..9) and a 5-cycle `w_1..w_5` (ids 10..14);
/// `w_c` is joined to the opposite pair `u_c`, `u_{c+5}`. Stepping through the
/// opposite pairs two at a time instead gives a graph with induced 6-cycles.
pub fn wrochna() -> Graph {
    let mut g = Graph::new(15);
    for i in 0..10 {
        g.add_edge(i, (i + 1) % 10);
    }
    for c in 0..5 {
        g.add_edge(10 + c, 10 + (c + 1) % 5);
        g.add_edge(10 + c, c);
        g.add_edge(10 + c, c + 5);
    }
    g
}

/// `GP(n, k)`: outer cycle `0..n`, spokes `i ~ n+i`, inner edges `n+i ~ n+(i+k mod n)`.
pub fn generalized_petersen(n: usize, k: usize) -> Graph {
    let mut g = Graph::new(2 * n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(i, n + i);
        let j = (i + k) % n;
        if !g.has_edge(n + i, n + j) {
            g.add_edge(n + i, n + j);
        }
    }
    g
}

pub fn dodecahedron() -> Graph {
    generalized_petersen(10, 2)
}

/// The medial graph of the dodecahedron, which for a cubic polyhedron is its
/// line graph: 30 vertices, 4-regular, 60 edges.
pub fn icosidodecahedron() -> Graph {
    line_graph(&dodecahedron())
}

/// `C_n^k`: `i ~ j` when their circular distance is at most `k`.
pub fn web(n: usize, k: usize) -> Graph {
    let mut g = Graph::new(n);
    for i in 0..n {
        for d in 1..=k {
            let j = (i + d) % n;
            if i != j && !g.has_edge(i, j) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Five-cycle `v1..v5` plus the chord `(v1, v3)`: perfect, with `(v1, v3)`
/// (ids `(0, 2)`) its only critical edge.
pub fn house_with_chord() -> Graph {
    let mut g = cycle(5);
    g.add_edge(0, 2);
    g
}

pub fn directed_cycle(n: usize) -> Digraph {
    Digraph::circulant(n, &[1]).expect("n >= 2")
}

pub fn directed_path(n: usize) -> Digraph {
    let arcs: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Digraph::from_arcs(n, &arcs).expect("valid arcs")
}

/// Two directed cycles of lengths `a, b >= 3` sharing vertex 0.
pub fn cycles_sharing_vertex(a: usize, b: usize) -> Digraph {
    assert!(a >= 3 && b >= 3);
    let n = a + b - 1;
    let mut d = Digraph::new(n);
    let first: Vec<usize> = (0..a).collect();
    let second: Vec<usize> = std::iter::once(0).chain(a..n).collect();
    for cyc in [first, second] {
        for i in 0..cyc.len() {
            d.add_arc(cyc[i], cyc[(i + 1) % cyc.len()]);
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let c = cube();
        assert_eq!((c.n(), c.edge_count()), (8, 12));
        assert!(c.is_bipartite());
        let w = wrochna();
        assert_eq!((w.n(), w.edge_count()), (15, 25));
        let i = icosidodecahedron();
        assert_eq!((i.n(), i.edge_count()), (30, 60));
        assert!((0..30).all(|v| i.degree(v) == 4));
        let d = dodecahedron();
        assert!((0..20).all(|v| d.degree(v) == 3));
    }

    #[test]
    fn wrochna_is_edge_critically_ternary() {
        let w = wrochna();
        assert!(crate::graph::is_ternary(&w).unwrap());
        for (u, v) in w.edges() {
            assert!(!crate::graph::is_ternary(&w.without_edge(u, v)).unwrap(), "edge ({u},{v})");
        }
    }

    #[test]
    fn wrochna_joins_opposite_pairs() {
        let w = wrochna();
        for c in 0..5 {
            let outer: Vec<usize> = (0..10).filter(|&u| w.has_edge(10 + c, u)).collect();
            assert_eq!(outer.len(), 2);
            assert_eq!(outer[1] - outer[0], 5);
        }
    }

    #[test]
    fn c5_is_self_complementary() {
        let c = cycle(5).complement();
        assert!(c.is_cycle() && c.n() == 5);
    }

    #[test]
    fn web_special_cases() {
        assert_eq!(web(7, 1), cycle(7));
        let w = web(7, 2).complement();
        assert!(w.is_cycle() && w.n() == 7);
    }

    #[test]
    fn two_triangles() {
        let d = cycles_sharing_vertex(3, 3);
        assert_eq!((d.n(), d.arc_count()), (5, 6));
    }
}
