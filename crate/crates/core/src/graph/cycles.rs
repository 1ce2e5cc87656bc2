//! Chordless-cycle enumeration for graphs and simple-cycle lengths for digraphs.

use std::ops::ControlFlow;

use super::{bit, low_mask, mask_iter, Digraph, Graph};
use crate::{Error, Result};

/// Cycle enumeration refuses graphs with more vertices than this.
pub const CYCLE_CAP: usize = 64;

/// Visits every chordless cycle of length `3..=max_len` inside `verts` once.
/// Cycles start at their smallest vertex and the second vertex is smaller than
/// the last one.
pub(crate) fn visit_induced_cycles<F>(adj: &[u64], verts: u64, max_len: usize, visit: &mut F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    fn extend<F>(
        adj: &[u64],
        allowed: u64,
        start: usize,
        path: &mut Vec<usize>,
        path_mask: u64,
        interior_nbhd: u64,
        max_len: usize,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let last = *path.last().unwrap();
        let cycle_len = path.len() + 1;
        let cands = adj[last] & allowed & !path_mask & !interior_nbhd;
        for x in mask_iter(cands) {
            if adj[x] & bit(start) != 0 {
                if path[1] < x {
                    path.push(x);
                    let flow = visit(path);
                    path.pop();
                    flow?;
                }
            } else if cycle_len < max_len {
                let nbhd = interior_nbhd | adj[last];
                path.push(x);
                let flow =
                    extend(adj, allowed, start, path, path_mask | bit(x), nbhd, max_len, visit);
                path.pop();
                flow?;
            }
        }
        ControlFlow::Continue(())
    }

    let mut path = Vec::with_capacity(max_len);
    for s in mask_iter(verts) {
        let allowed = verts & !low_mask(s + 1);
        for p1 in mask_iter(adj[s] & allowed) {
            path.clear();
            path.extend([s, p1]);
            if extend(adj, allowed, s, &mut path, bit(s) | bit(p1), 0, max_len, visit).is_break()
            {
                return;
            }
        }
    }
}

fn check_cap(g: &Graph) -> Result<()> {
    if g.n() > CYCLE_CAP {
        return Err(Error::CapExceeded { count: g.n() as u128, cap: CYCLE_CAP as u128 });
    }
    Ok(())
}

/// All chordless cycles of length at least 3, each reported once starting at
/// its smallest vertex.
pub fn induced_cycles(g: &Graph) -> Result<Vec<Vec<usize>>> {
    induced_cycles_up_to(g, g.n())
}

pub fn induced_cycles_up_to(g: &Graph, max_len: usize) -> Result<Vec<Vec<usize>>> {
    check_cap(g)?;
    let mut out = Vec::new();
    visit_induced_cycles(g.adjacency(), low_mask(g.n()), max_len, &mut |c| {
        out.push(c.to_vec());
        ControlFlow::Continue(())
    });
    Ok(out)
}

/// Whether some chordless cycle (of length at most `max_len`) satisfies `pred`.
pub fn has_induced_cycle(g: &Graph, max_len: usize, pred: impl Fn(usize) -> bool) -> Result<bool> {
    check_cap(g)?;
    Ok(has_induced_cycle_within(g.adjacency(), low_mask(g.n()), max_len, pred))
}

pub(crate) fn has_induced_cycle_within(
    adj: &[u64],
    verts: u64,
    max_len: usize,
    pred: impl Fn(usize) -> bool,
) -> bool {
    let mut found = false;
    visit_induced_cycles(adj, verts, max_len, &mut |c| {
        if pred(c.len()) {
            found = true;
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found
}

/// Visits every simple cycle (not necessarily induced) of length `>= 3` once.
pub(crate) fn visit_simple_cycles<F>(g: &Graph, visit: &mut F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    fn extend<F>(
        adj: &[u64],
        allowed: u64,
        start: usize,
        path: &mut Vec<usize>,
        path_mask: u64,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let last = *path.last().unwrap();
        for x in mask_iter(adj[last] & allowed & !path_mask) {
            path.push(x);
            if adj[x] & bit(start) != 0 && path[1] < x {
                visit(path)?;
            }
            extend(adj, allowed, start, path, path_mask | bit(x), visit)?;
            path.pop();
        }
        ControlFlow::Continue(())
    }

    let adj = g.adjacency();
    let mut path = Vec::new();
    for s in 0..g.n() {
        let allowed = low_mask(g.n()) & !low_mask(s + 1);
        for p1 in mask_iter(adj[s] & allowed) {
            path.clear();
            path.extend([s, p1]);
            if extend(adj, allowed, s, &mut path, bit(s) | bit(p1), visit).is_break() {
                return;
            }
        }
    }
}

/// Distinct lengths of the simple directed cycles of `d`, ascending. Loops
/// count as cycles of length 1.
pub fn directed_cycle_lengths(d: &Digraph) -> Vec<usize> {
    fn extend(d: &Digraph, start: usize, v: usize, len: usize, path: u64, seen: &mut u128) {
        let out = d.out_neighbors(v);
        if out & bit(start) != 0 {
            *seen |= 1u128 << len;
        }
        let allowed = !low_mask(start + 1) & !path;
        for w in mask_iter(out & allowed) {
            extend(d, start, w, len + 1, path | bit(w), seen);
        }
    }
    let mut seen = 0u128;
    for s in 0..d.n() {
        extend(d, s, s, 1, bit(s), &mut seen);
    }
    (1..128).filter(|&l| seen >> l & 1 == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn cycle_graph_has_one_cycle() {
        let cs = induced_cycles(&cycle(6)).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].len(), 6);
    }

    #[test]
    fn k4_has_only_triangles() {
        let cs = induced_cycles(&complete(4)).unwrap();
        assert_eq!(cs.len(), 4);
        assert!(cs.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn chord_splits_cycle() {
        // 5-cycle with chord (0,2): triangle 0-1-2 and 4-cycle 0-2-3-4
        let mut g = cycle(5);
        g.add_edge(0, 2);
        let mut lens: Vec<_> = induced_cycles(&g).unwrap().iter().map(Vec::len).collect();
        lens.sort();
        assert_eq!(lens, vec![3, 4]);
    }

    #[test]
    fn simple_cycles_of_k4() {
        let mut count = 0;
        visit_simple_cycles(&complete(4), &mut |_| {
            count += 1;
            ControlFlow::Continue(())
        });
        // 4 triangles + 3 four-cycles
        assert_eq!(count, 7);
    }

    #[test]
    fn directed_lengths() {
        let d = Digraph::from_arcs(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 0)]).unwrap();
        assert_eq!(directed_cycle_lengths(&d), vec![2, 3]);
        assert!(directed_cycle_lengths(&Digraph::circulant(4, &[1]).unwrap()) == vec![4]);
    }
}
