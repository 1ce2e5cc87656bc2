//! d-graphs: complete graphs whose edges are partitioned into `d` chromatic
//! components. Colours are `0..d` internally and `1..=d` in JSON.

pub mod fixtures;
pub mod io;

use serde::Serialize;

use crate::graph::{bit, low_mask, mask_iter, vertex_mask, Graph};
use crate::{Error, IdSet, Result};

/// d-graphs are kept small; CIS checks enumerate maximal independent sets.
pub const MAX_DGRAPH_VERTICES: usize = 32;

/// Per-colour limit on the number of maximal independent sets in a CIS check.
pub const MIS_CAP: usize = 1 << 16;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DGraph {
    n: usize,
    d: usize,
    colors: Vec<u8>,
}

/// One maximal independent set per chromatic component and their intersection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Selection {
    pub sets: Vec<IdSet>,
    pub intersection: IdSet,
}

impl DGraph {
    /// Monochromatic d-graph: every edge gets colour 0.
    pub fn monochromatic(n: usize, d: usize) -> Self {
        assert!(n <= MAX_DGRAPH_VERTICES && (1..=255).contains(&d));
        DGraph { n, d, colors: vec![0; n * n] }
    }

    pub fn null(d: usize) -> Self {
        Self::monochromatic(0, d)
    }

    /// Colour of each unordered pair, listed lexicographically `(0,1), (0,2), ..`.
    pub fn from_pair_colors(n: usize, d: usize, pair_colors: &[usize]) -> Result<Self> {
        if n > MAX_DGRAPH_VERTICES {
            return Err(Error::Shape(format!("{n} vertices, at most {MAX_DGRAPH_VERTICES}")));
        }
        if !(1..=255).contains(&d) {
            return Err(Error::Shape(format!("d = {d} outside 1..=255")));
        }
        if pair_colors.len() != n * n.saturating_sub(1) / 2 {
            return Err(Error::Shape(format!(
                "{} pair colours for {n} vertices, need {}",
                pair_colors.len(),
                n * n.saturating_sub(1) / 2
            )));
        }
        let mut g = Self::monochromatic(n, d);
        let mut k = 0;
        for u in 0..n {
            for v in u + 1..n {
                g.try_set(u, v, pair_colors[k])?;
                k += 1;
            }
        }
        Ok(g)
    }

    /// Every pair must appear exactly once in `edges` as `(u, v, colour)`.
    pub fn from_edges(n: usize, d: usize, edges: &[(usize, usize, usize)]) -> Result<Self> {
        let mut g = Self::monochromatic(n, d);
        let mut seen = vec![false; n * n];
        for &(u, v, c) in edges {
            if u == v {
                return Err(Error::Loop(u));
            }
            if u >= n || v >= n {
                return Err(Error::IdOutOfRange { id: u.max(v), size: n });
            }
            let (a, b) = (u.min(v), u.max(v));
            if std::mem::replace(&mut seen[a * n + b], true) {
                return Err(Error::Shape(format!("pair ({a}, {b}) coloured twice")));
            }
            g.try_set(u, v, c)?;
        }
        let missing = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).find(|&(u, v)| !seen[u * n + v]);
        if let Some((u, v)) = missing {
            return Err(Error::Shape(format!("pair ({u}, {v}) has no colour")));
        }
        Ok(g)
    }

    /// Like [`DGraph::from_edges`] but with 1-based vertices and colours.
    pub fn from_labeled_edges(n: usize, d: usize, edges: &[(usize, usize, usize)]) -> Result<Self> {
        let shifted: Result<Vec<_>> = edges
            .iter()
            .map(|&(u, v, c)| {
                if u == 0 || v == 0 || c == 0 {
                    Err(Error::InvalidElement("labels and colours are 1-based".into()))
                } else {
                    Ok((u - 1, v - 1, c - 1))
                }
            })
            .collect();
        Self::from_edges(n, d, &shifted?)
    }

    fn try_set(&mut self, u: usize, v: usize, c: usize) -> Result<()> {
        if c >= self.d {
            return Err(Error::InvalidElement(format!("colour {} outside 1..={}", c + 1, self.d)));
        }
        self.set(u, v, c);
        Ok(())
    }

    pub fn set(&mut self, u: usize, v: usize, c: usize) {
        assert!(u != v && c < self.d);
        self.colors[u * self.n + v] = c as u8;
        self.colors[v * self.n + u] = c as u8;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn color(&self, u: usize, v: usize) -> usize {
        debug_assert!(u != v);
        self.colors[u * self.n + v] as usize
    }

    /// Same colouring with a larger palette.
    pub fn with_palette(&self, d: usize) -> DGraph {
        assert!(d >= self.d);
        DGraph { d, ..self.clone() }
    }

    /// Pairs `(u, v, c)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        (0..self.n).flat_map(|u| (u + 1..self.n).map(move |v| (u, v))).map(|(u, v)| (u, v, self.color(u, v))).collect()
    }

    /// Adjacency masks of chromatic component `c`.
    pub fn component(&self, c: usize) -> Vec<u64> {
        (0..self.n)
            .map(|u| (0..self.n).filter(|&v| v != u && self.color(u, v) == c).fold(0, |m, v| m | bit(v)))
            .collect()
    }

    pub fn component_graph(&self, c: usize) -> Graph {
        Graph::from_adjacency(self.component(c))
    }

    pub fn sub_dgraph(&self, set: IdSet) -> Result<DGraph> {
        Ok(self.sub_by_mask(vertex_mask(set, self.n)?))
    }

    pub(crate) fn sub_by_mask(&self, mask: u64) -> DGraph {
        let keep: Vec<usize> = mask_iter(mask).collect();
        let m = keep.len();
        let mut colors = vec![0u8; m * m];
        for (a, &u) in keep.iter().enumerate() {
            for (b, &v) in keep.iter().enumerate() {
                colors[a * m + b] = self.colors[u * self.n + v];
            }
        }
        DGraph { n: m, d: self.d, colors }
    }

    pub fn without_vertex(&self, v: usize) -> DGraph {
        self.sub_by_mask(low_mask(self.n) & !bit(v))
    }

    /// Four vertices inducing a Π: two colours, each forming a P₄.
    pub fn contains_pi(&self) -> Option<[usize; 4]> {
        self.contains_pi_within(low_mask(self.n))
    }

    pub(crate) fn contains_pi_within(&self, mask: u64) -> Option<[usize; 4]> {
        let vs: Vec<usize> = mask_iter(mask).collect();
        let k = vs.len();
        for a in 0..k {
            for b in a + 1..k {
                for c in b + 1..k {
                    for e in c + 1..k {
                        let q = [vs[a], vs[b], vs[c], vs[e]];
                        if self.is_pi(q) {
                            return Some(q);
                        }
                    }
                }
            }
        }
        None
    }

    fn is_pi(&self, q: [usize; 4]) -> bool {
        let first = self.color(q[0], q[1]);
        let mut other = None;
        let mut deg = [0u8; 4];
        let mut count = 0;
        for x in 0..4 {
            for y in x + 1..4 {
                let c = self.color(q[x], q[y]);
                if c == first {
                    deg[x] += 1;
                    deg[y] += 1;
                    count += 1;
                } else if *other.get_or_insert(c) != c {
                    return false;
                }
            }
        }
        deg.sort_unstable();
        count == 3 && deg == [1, 1, 2, 2]
    }

    /// A triangle with three distinct colours.
    pub fn contains_delta(&self) -> Option<[usize; 3]> {
        self.contains_delta_within(low_mask(self.n))
    }

    pub(crate) fn contains_delta_within(&self, mask: u64) -> Option<[usize; 3]> {
        let vs: Vec<usize> = mask_iter(mask).collect();
        let k = vs.len();
        for a in 0..k {
            for b in a + 1..k {
                let cab = self.color(vs[a], vs[b]);
                for c in b + 1..k {
                    let cac = self.color(vs[a], vs[c]);
                    let cbc = self.color(vs[b], vs[c]);
                    if cab != cac && cab != cbc && cac != cbc {
                        return Some([vs[a], vs[b], vs[c]]);
                    }
                }
            }
        }
        None
    }

    /// Complementary connected: the complement of every chromatic component is
    /// connected. The null and one-vertex d-graphs are not CC.
    pub fn is_cc(&self) -> bool {
        self.is_cc_within(low_mask(self.n))
    }

    pub(crate) fn is_cc_within(&self, mask: u64) -> bool {
        if mask.count_ones() <= 1 {
            return false;
        }
        let start = mask.trailing_zeros() as usize;
        (0..self.d).all(|c| {
            // BFS in the complement of component c, restricted to `mask`
            let mut seen = bit(start);
            let mut frontier = bit(start);
            while frontier != 0 {
                let mut next = 0;
                for u in mask_iter(frontier) {
                    for v in mask_iter(mask & !seen) {
                        if self.color(u, v) != c {
                            next |= bit(v);
                        }
                    }
                }
                seen |= next;
                frontier = next;
            }
            seen == mask
        })
    }

    /// Maximal independent sets of component `c` inside `mask`, i.e. maximal
    /// cliques of the graph joining pairs of any other colour.
    fn maximal_independent_sets(&self, c: usize, mask: u64) -> Result<Vec<u64>> {
        let nbr: Vec<u64> = (0..self.n)
            .map(|u| mask_iter(mask).filter(|&v| v != u && self.color(u, v) != c).fold(0, |m, v| m | bit(v)))
            .collect();
        let mut out = Vec::new();
        bron_kerbosch(&nbr, 0, mask, 0, &mut out)?;
        Ok(out)
    }

    /// Every selection of one maximal independent set per component has a
    /// common vertex. The null d-graph counts as CIS.
    pub fn is_cis(&self) -> Result<(bool, Option<Selection>)> {
        self.cis_within(low_mask(self.n))
    }

    pub(crate) fn cis_within(&self, mask: u64) -> Result<(bool, Option<Selection>)> {
        if mask == 0 {
            return Ok((true, None));
        }
        let mut per_color = Vec::with_capacity(self.d);
        for c in 0..self.d {
            per_color.push((c, self.maximal_independent_sets(c, mask)?));
        }
        // components with few MIS first keep the search tree narrow
        per_color.sort_by_key(|(_, sets)| sets.len());
        let mut chosen = vec![0u64; self.d];
        if find_empty_selection(&per_color, 0, mask, &mut chosen) {
            let sets = chosen.iter().map(|&m| IdSet(m as u128)).collect();
            return Ok((false, Some(Selection { sets, intersection: IdSet::empty() })));
        }
        Ok((true, None))
    }

    pub fn cis(&self) -> bool {
        self.is_cis().expect("MIS enumeration within cap").0
    }

    /// Replaces vertex `v` by `inner`. Vertices of `inner` take ids `v..v+m`,
    /// later vertices of `self` shift up; the palette is the larger of the two.
    pub fn substitute(&self, v: usize, inner: &DGraph) -> Result<DGraph> {
        if v >= self.n {
            return Err(Error::IdOutOfRange { id: v, size: self.n });
        }
        let m = inner.n;
        let n = self.n - 1 + m;
        if n > MAX_DGRAPH_VERTICES {
            return Err(Error::Shape(format!("{n} vertices, at most {MAX_DGRAPH_VERTICES}")));
        }
        // origin of each new vertex: Ok(old id in self) or Err(id in inner)
        let origin = |x: usize| -> std::result::Result<usize, usize> {
            if x < v {
                Ok(x)
            } else if x < v + m {
                Err(x - v)
            } else {
                Ok(x - m + 1)
            }
        };
        let mut g = DGraph::monochromatic(n, self.d.max(inner.d));
        for x in 0..n {
            for y in x + 1..n {
                let c = match (origin(x), origin(y)) {
                    (Ok(a), Ok(b)) => self.color(a, b),
                    (Err(a), Err(b)) => inner.color(a, b),
                    (Ok(a), Err(_)) | (Err(_), Ok(a)) => self.color(a, v),
                };
                g.set(x, y, c);
            }
        }
        Ok(g)
    }

    /// Merges colour classes: colour `c` becomes the index of the block holding it.
    pub fn project(&self, blocks: &[Vec<usize>]) -> Result<DGraph> {
        let delta = blocks.len();
        if delta < 2 || delta > self.d {
            return Err(Error::Partition(format!("{delta} blocks, need 2..={}", self.d)));
        }
        let mut block_of = vec![usize::MAX; self.d];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::Partition(format!("block {b} is empty")));
            }
            for &c in block {
                if c >= self.d {
                    return Err(Error::Partition(format!("colour {} outside 1..={}", c + 1, self.d)));
                }
                if block_of[c] != usize::MAX {
                    return Err(Error::Partition(format!("colour {} appears twice", c + 1)));
                }
                block_of[c] = b;
            }
        }
        if let Some(c) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::Partition(format!("colour {} is not covered", c + 1)));
        }
        let colors = self.colors.iter().map(|&c| block_of[c as usize] as u8).collect();
        Ok(DGraph { n: self.n, d: delta, colors })
    }

    /// Applies a vertex permutation: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> DGraph {
        assert_eq!(perm.len(), self.n);
        let mut g = DGraph::monochromatic(self.n, self.d);
        for u in 0..self.n {
            for v in u + 1..self.n {
                g.set(perm[u], perm[v], self.color(u, v));
            }
        }
        g
    }
}

fn bron_kerbosch(nbr: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) -> Result<()> {
    if p == 0 && x == 0 {
        if out.len() >= MIS_CAP {
            return Err(Error::CapExceeded { count: out.len() as u128 + 1, cap: MIS_CAP as u128 });
        }
        out.push(r);
        return Ok(());
    }
    let pivot = mask_iter(p | x).max_by_key(|&u| (p & nbr[u]).count_ones()).unwrap();
    for v in mask_iter(p & !nbr[pivot]) {
        bron_kerbosch(nbr, r | bit(v), p & nbr[v], x & nbr[v], out)?;
        p &= !bit(v);
        x |= bit(v);
    }
    Ok(())
}

fn find_empty_selection(per_color: &[(usize, Vec<u64>)], depth: usize, acc: u64, chosen: &mut [u64]) -> bool {
    let Some((c, sets)) = per_color.get(depth) else {
        return acc == 0;
    };
    for &s in sets {
        chosen[*c] = s;
        let next = acc & s;
        if next == 0 {
            // the remaining components can take any of their sets
            for (c2, sets2) in &per_color[depth + 1..] {
                chosen[*c2] = sets2[0];
            }
            return true;
        }
        if find_empty_selection(per_color, depth + 1, next, chosen) {
            return true;
        }
    }
    false
}

/// All complete colourings of K_n with `d` colours, in lexicographic order of
/// the pair-colour sequence.
pub fn all_dgraphs(n: usize, d: usize) -> impl Iterator<Item = DGraph> {
    let pairs = n * n.saturating_sub(1) / 2;
    let total = (d as u64).pow(pairs as u32);
    (0..total).map(move |mut code| {
        let mut cs = vec![0; pairs];
        for slot in cs.iter_mut().rev() {
            *slot = (code % d as u64) as usize;
            code /= d as u64;
        }
        DGraph::from_pair_colors(n, d, &cs).unwrap()
    })
}

#[cfg(test)]
mod tests {
    use super::fixtures::{delta, pi};
    use super::*;

    #[test]
    fn pi_and_delta_detection() {
        assert!(pi().contains_pi().is_some());
        assert!(pi().contains_delta().is_none());
        assert_eq!(delta().contains_delta(), Some([0, 1, 2]));
        let mono = DGraph::monochromatic(5, 3);
        assert!(mono.contains_pi().is_none() && mono.contains_delta().is_none());
    }

    #[test]
    fn cc_conventions() {
        assert!(pi().is_cc() && delta().is_cc());
        assert!(!DGraph::null(2).is_cc());
        assert!(!DGraph::monochromatic(1, 2).is_cc());
        for g in all_dgraphs(2, 3) {
            assert!(!g.is_cc());
        }
    }

    #[test]
    fn cis_basics() {
        let (ok, sel) = pi().is_cis().unwrap();
        assert!(!ok);
        let sel = sel.unwrap();
        assert!(sel.sets.iter().fold(IdSet::full(4), |a, &s| a.intersection(s)).is_empty());
        assert!(!delta().cis());
        assert!(DGraph::null(2).cis());
        for g in all_dgraphs(3, 2) {
            assert!(g.cis());
        }
    }

    #[test]
    fn substitution_of_single_vertex_is_identity() {
        let one = DGraph::monochromatic(1, 2);
        for v in 0..4 {
            assert_eq!(pi().substitute(v, &one).unwrap(), pi());
        }
        assert!(pi().substitute(4, &one).is_err());
    }

    #[test]
    fn projection() {
        let d = delta();
        assert_eq!(d.project(&[vec![0], vec![1], vec![2]]).unwrap(), d);
        let p = d.project(&[vec![0, 1], vec![2]]).unwrap();
        assert_eq!(p.d(), 2);
        assert!(p.contains_delta().is_none());
        assert!(d.project(&[vec![0, 1, 2]]).is_err());
        assert!(d.project(&[vec![0, 1], vec![1, 2]]).is_err());
        assert!(d.project(&[vec![0], vec![1]]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(all_dgraphs(4, 2).count(), 64);
        assert_eq!(all_dgraphs(0, 3).count(), 1);
    }
}
