use super::{bit, low_mask, mask_iter, vertex_mask, MAX_VERTICES};
use crate::{Error, IdSet, Result};

/// Directed graph with at most one arc per ordered pair.
///
/// Loops are rejected by the ordinary constructors. Circulants whose
/// generator is `0 mod n` are built with [`Digraph::from_arcs_with_loops`]; a
/// looped vertex can never belong to a kernel.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Digraph {
    n: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        Digraph { n, out: vec![0; n], inn: vec![0; n] }
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut d = Digraph::new(n);
        for &(u, v) in arcs {
            if u == v {
                return Err(Error::Loop(u));
            }
            d.insert(u, v)?;
        }
        Ok(d)
    }

    pub fn from_arcs_with_loops(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut d = Digraph::new(n);
        for &(u, v) in arcs {
            d.insert(u, v)?;
        }
        Ok(d)
    }

    /// 1-based arcs, loops rejected.
    pub fn from_labeled_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        if arcs.iter().any(|&(u, v)| u == 0 || v == 0) {
            return Err(Error::IdOutOfRange { id: 0, size: n });
        }
        let arcs: Vec<_> = arcs.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
        Digraph::from_arcs(n, &arcs)
    }

    fn insert(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::IdOutOfRange { id: x, size: self.n });
            }
        }
        self.out[u] |= bit(v);
        self.inn[v] |= bit(u);
        Ok(())
    }

    pub fn add_arc(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "use from_arcs_with_loops for loops");
        self.insert(u, v).expect("invalid arc");
    }

    pub fn remove_arc(&mut self, u: usize, v: usize) {
        self.out[u] &= !bit(v);
        self.inn[v] &= !bit(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u] & bit(v) != 0
    }

    pub fn has_loops(&self) -> bool {
        (0..self.n).any(|v| self.has_arc(v, v))
    }

    pub fn out_neighbors(&self, v: usize) -> u64 {
        self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> u64 {
        self.inn[v]
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|m| m.count_ones() as usize).sum()
    }

    /// Arcs in lexicographic order; arc ids for the edge order index this list.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|u| mask_iter(self.out[u]).map(move |v| (u, v))).collect()
    }

    pub fn vertex_set(&self) -> IdSet {
        IdSet::full(self.n)
    }

    /// Induced subdigraph, relabelled to `0..|set|` in increasing order.
    pub fn induced_subgraph(&self, set: IdSet) -> Result<Digraph> {
        let mask = vertex_mask(set, self.n)?;
        Ok(self.induced_by_mask(mask))
    }

    pub(crate) fn induced_by_mask(&self, mask: u64) -> Digraph {
        let verts: Vec<usize> = mask_iter(mask).collect();
        let mut d = Digraph::new(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if self.out[u] & bit(v) != 0 {
                    d.out[i] |= bit(j);
                    d.inn[j] |= bit(i);
                }
            }
        }
        d
    }

    pub fn spanning_subgraph(&self, arc_ids: IdSet) -> Result<Digraph> {
        let arcs = self.arcs();
        if arc_ids.bound() > arcs.len() {
            return Err(Error::IdOutOfRange { id: arc_ids.bound() - 1, size: arcs.len() });
        }
        let mut d = Digraph::new(self.n);
        for id in arc_ids.iter() {
            let (u, v) = arcs[id];
            d.insert(u, v)?;
        }
        Ok(d)
    }

    pub fn without_arc(&self, u: usize, v: usize) -> Digraph {
        let mut d = self.clone();
        d.remove_arc(u, v);
        d
    }

    pub fn without_vertex(&self, v: usize) -> Digraph {
        self.induced_by_mask(low_mask(self.n) & !bit(v))
    }

    pub fn reverse(&self) -> Digraph {
        Digraph { n: self.n, out: self.inn.clone(), inn: self.out.clone() }
    }

    fn reach(&self, start: usize, next: &[u64]) -> u64 {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut step = 0;
            for v in mask_iter(frontier) {
                step |= next[v];
            }
            step &= !seen;
            seen |= step;
            frontier = step;
        }
        seen
    }

    /// Null and one-vertex digraphs are strongly connected.
    pub fn is_strongly_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let all = low_mask(self.n);
        self.reach(0, &self.out) == all && self.reach(0, &self.inn) == all
    }

    pub fn is_acyclic(&self) -> bool {
        let mut indeg: Vec<u32> = self.inn.iter().map(|m| m.count_ones()).collect();
        let mut stack: Vec<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(u) = stack.pop() {
            seen += 1;
            for v in mask_iter(self.out[u]) {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    stack.push(v);
                }
            }
        }
        seen == self.n
    }

    /// Circulant `G_n(l_1, .., l_q)`: arcs `i -> i + l_j (mod n)`. Vertex label
    /// `i` in `1..=n` is id `i - 1`. Generators are reduced mod `n`; one that is
    /// `0 mod n` would be a loop and is rejected.
    pub fn circulant(n: usize, gens: &[usize]) -> Result<Digraph> {
        if n == 0 {
            return Err(Error::Shape("circulant needs n >= 1".into()));
        }
        if let Some(&g) = gens.iter().find(|&&g| g % n == 0) {
            return Err(Error::ZeroGenerator { gen: g, n });
        }
        Digraph::circulant_with_loops(n, gens)
    }

    /// Like [`Digraph::circulant`], but a generator `0 mod n` puts a loop on
    /// every vertex instead of being rejected.
    pub fn circulant_with_loops(n: usize, gens: &[usize]) -> Result<Digraph> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::Shape(format!("circulant needs 1 <= n <= {MAX_VERTICES}")));
        }
        let mut d = Digraph::new(n);
        for i in 0..n {
            for &g in gens {
                d.insert(i, (i + g) % n)?;
            }
        }
        Ok(d)
    }
}

/// All labelled loopless digraphs on `n` vertices.
pub fn all_digraphs(n: usize) -> impl Iterator<Item = Digraph> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
    let m = pairs.len();
    (0u64..1 << m).map(move |mask| {
        let mut d = Digraph::new(n);
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                d.add_arc(u, v);
            }
        }
        d
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn directed_cycle(n: usize) -> Digraph {
        Digraph::circulant(n, &[1]).unwrap()
    }

    #[test]
    fn strong_connectivity() {
        assert!(directed_cycle(4).is_strongly_connected());
        assert!(!Digraph::from_arcs(2, &[(0, 1)]).unwrap().is_strongly_connected());
        assert!(Digraph::new(0).is_strongly_connected());
        assert!(Digraph::new(1).is_strongly_connected());
        let two_triangles =
            Digraph::from_arcs(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        assert!(two_triangles.is_strongly_connected());
    }

    #[test]
    fn circulant_sizes() {
        let c5 = Digraph::circulant(5, &[1]).unwrap();
        assert_eq!(c5.arc_count(), 5);
        assert!(c5.is_strongly_connected());
        let g43 = Digraph::circulant(43, &[1, 7, 8]).unwrap();
        assert_eq!(g43.n(), 43);
        assert_eq!(g43.arc_count(), 129);
        assert!(g43.has_arc(42, 0) && g43.has_arc(42, 6) && g43.has_arc(42, 7));
    }

    #[test]
    fn circulant_zero_generator() {
        assert_eq!(
            Digraph::circulant(7, &[1, 7, 8]),
            Err(Error::ZeroGenerator { gen: 7, n: 7 })
        );
        let d = Digraph::circulant_with_loops(7, &[1, 7, 8]).unwrap();
        assert!(d.has_loops());
        assert!(Digraph::from_arcs(2, &[(1, 1)]).is_err());
    }

    #[test]
    fn acyclicity() {
        assert!(Digraph::from_arcs(3, &[(0, 1), (1, 2), (0, 2)]).unwrap().is_acyclic());
        assert!(!directed_cycle(3).is_acyclic());
    }

    #[test]
    fn induced_keeps_arcs() {
        let d = directed_cycle(4).induced_subgraph(IdSet::from_ids([0, 1, 2])).unwrap();
        assert_eq!(d.arcs(), vec![(0, 1), (1, 2)]);
    }
}
