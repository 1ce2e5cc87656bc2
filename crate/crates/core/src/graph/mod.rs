//! Simple graphs and digraphs on at most 64 vertices, plus the graph-side
//! predicates: connectivity, induced cycles, colouring, perfection, kernels.
//!
//! Vertices are `0..n`. 1-based labels only appear at the I/O
//! boundary ([`io`]) and in [`IdSet::from_labels`](crate::IdSet::from_labels).

mod coloring;
mod cycles;
mod digraph;
pub mod fixtures;
pub mod io;
mod kernel;
mod perfect;

pub use coloring::{chromatic_number, chromatic_number_within, clique_number, clique_number_within};
pub use cycles::{
    directed_cycle_lengths, has_induced_cycle, induced_cycles, induced_cycles_up_to, CYCLE_CAP,
};
pub use digraph::{all_digraphs, Digraph};
pub use kernel::{
    count_kernels, find_kernel, is_kernel, kernel_certificate, KernelCertificate,
    DEFAULT_KERNEL_BUDGET,
};
pub use perfect::{
    critical_edges, has_odd_antihole, has_odd_hole, is_meyniel, is_partitionable,
    is_perfect_bruteforce, is_perfect_spgt, is_ternary, PERFECT_BRUTEFORCE_CAP,
};

use crate::{Error, IdSet, Result};

/// Vertex masks are `u64`, so graphs are limited to this many vertices.
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn mask_iter(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

/// Checks `set ⊆ {0..n}` and returns it as a vertex mask.
pub(crate) fn vertex_mask(set: IdSet, n: usize) -> Result<u64> {
    if set.bound() > n {
        return Err(Error::IdOutOfRange { id: set.bound() - 1, size: n });
    }
    Ok(set.0 as u64)
}

/// Undirected simple graph.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edge-free graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        Graph { n, adj: vec![0; n] }
    }

    pub fn null() -> Self {
        Graph::new(0)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Same as [`Graph::from_edges`] with 1-based endpoints.
    pub fn from_labeled_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            if u == 0 || v == 0 {
                return Err(Error::IdOutOfRange { id: 0, size: n });
            }
            g.try_add_edge(u - 1, v - 1)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency masks. Panics on asymmetric input.
    pub fn from_adjacency(adj: Vec<u64>) -> Self {
        let n = adj.len();
        assert!(n <= MAX_VERTICES);
        for (u, &m) in adj.iter().enumerate() {
            assert_eq!(m & bit(u), 0, "loop at {u}");
            assert_eq!(m & !low_mask(n), 0);
            for v in mask_iter(m) {
                assert!(adj[v] & bit(u) != 0, "asymmetric adjacency");
            }
        }
        Graph { n, adj }
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n;
        for x in [u, v] {
            if x >= n {
                return Err(Error::IdOutOfRange { id: x, size: n });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("invalid edge");
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order. Edge ids used by
    /// the edge order are positions in this list.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in mask_iter(self.adj[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn vertex_set(&self) -> IdSet {
        IdSet::full(self.n)
    }

    /// Subgraph induced by `set`, relabelled to `0..|set|` in increasing order.
    pub fn induced_subgraph(&self, set: IdSet) -> Result<Graph> {
        let mask = vertex_mask(set, self.n)?;
        Ok(self.induced_by_mask(mask))
    }

    pub(crate) fn induced_by_mask(&self, mask: u64) -> Graph {
        let verts: Vec<usize> = mask_iter(mask).collect();
        let mut adj = vec![0u64; verts.len()];
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.adj[u] & bit(v) != 0 {
                    adj[i] |= bit(j);
                    adj[j] |= bit(i);
                }
            }
        }
        Graph { n: verts.len(), adj }
    }

    /// Spanning subgraph keeping only the edges whose ids are in `edge_ids`.
    pub fn spanning_subgraph(&self, edge_ids: IdSet) -> Result<Graph> {
        let edges = self.edges();
        if edge_ids.bound() > edges.len() {
            return Err(Error::IdOutOfRange { id: edge_ids.bound() - 1, size: edges.len() });
        }
        let mut g = Graph::new(self.n);
        for id in edge_ids.iter() {
            let (u, v) = edges[id];
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.remove_edge(u, v);
        g
    }

    pub fn without_vertex(&self, v: usize) -> Graph {
        self.induced_by_mask(low_mask(self.n) & !bit(v))
    }

    pub fn complement(&self) -> Graph {
        let full = low_mask(self.n);
        let adj = (0..self.n).map(|v| full & !self.adj[v] & !bit(v)).collect();
        Graph { n: self.n, adj }
    }

    /// Null and one-vertex graphs count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.reach(0, low_mask(self.n)) == low_mask(self.n)
    }

    /// Vertices reachable from `start` inside `within`.
    pub(crate) fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in mask_iter(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![None::<bool>; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let su = side[u].unwrap();
                for v in mask_iter(self.adj[u]) {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            stack.push(v);
                        }
                        Some(sv) if sv == su => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// True when the graph is a single cycle through all of its vertices.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && (0..self.n).all(|v| self.degree(v) == 2) && self.is_connected()
    }

    /// Compact code for graphs with at most 11 vertices: `n` in the top bits,
    /// upper-triangle adjacency below.
    pub fn code(&self) -> u64 {
        assert!(self.n <= 11);
        let mut code = 0u64;
        let mut k = 0;
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    code |= 1 << k;
                }
                k += 1;
            }
        }
        code | (self.n as u64) << 56
    }
}

/// All labelled graphs on `n` vertices, in edge-mask order.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let m = pairs.len();
    (0u64..1 << m).map(move |mask| {
        let mut g = Graph::new(n);
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        g
    })
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn induced_subgraph_of_path() {
        let p3 = path(3);
        let sub = p3.induced_subgraph(IdSet::from_ids([0, 2])).unwrap();
        assert_eq!(sub.n(), 2);
        assert_eq!(sub.edge_count(), 0);
        assert_eq!(p3.induced_subgraph(p3.vertex_set()).unwrap(), p3);
        assert_eq!(p3.induced_subgraph(IdSet::empty()).unwrap(), Graph::null());
        assert!(p3.induced_subgraph(IdSet::from_ids([3])).is_err());
    }

    #[test]
    fn connectivity_conventions() {
        assert!(Graph::null().is_connected());
        assert!(Graph::new(1).is_connected());
        assert!(!Graph::new(2).is_connected());
        assert!(cycle(5).is_connected());
    }

    #[test]
    fn loops_rejected() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::Loop(1)));
        assert!(Graph::from_edges(3, &[(1, 3)]).is_err());
    }

    #[test]
    fn spanning_subgraph_keeps_vertices() {
        let k3 = complete(3);
        let g = k3.spanning_subgraph(IdSet::from_ids([0])).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn all_graphs_counts() {
        assert_eq!(all_graphs(4).count(), 64);
        assert_eq!(all_graphs(0).count(), 1);
    }
}
