//! Exact clique and chromatic numbers by branch and bound over vertex masks.

use super::{low_mask, mask_iter, Graph};
use crate::{Error, Result};

/// Exact colouring refuses larger inputs.
pub const COLORING_CAP: usize = 40;

fn check_cap(g: &Graph) -> Result<()> {
    if g.n() > COLORING_CAP {
        return Err(Error::CapExceeded { count: g.n() as u128, cap: COLORING_CAP as u128 });
    }
    Ok(())
}

pub fn clique_number(g: &Graph) -> Result<usize> {
    check_cap(g)?;
    Ok(clique_number_within(g.adjacency(), low_mask(g.n())))
}

pub fn chromatic_number(g: &Graph) -> Result<usize> {
    check_cap(g)?;
    Ok(chromatic_number_within(g.adjacency(), low_mask(g.n())))
}

/// ω of the subgraph induced by `verts`.
pub fn clique_number_within(adj: &[u64], verts: u64) -> usize {
    fn expand(adj: &[u64], size: usize, mut cand: u64, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        while cand != 0 {
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            expand(adj, size + 1, cand & adj[v], best);
        }
        *best = (*best).max(size);
    }
    let mut best = 0;
    expand(adj, 0, verts, &mut best);
    best
}

/// χ of the subgraph induced by `verts`.
pub fn chromatic_number_within(adj: &[u64], verts: u64) -> usize {
    if verts == 0 {
        return 0;
    }
    let lower = clique_number_within(adj, verts);
    let order = saturation_order(adj, verts);
    let upper = greedy_colors(adj, &order);
    (lower..upper).find(|&k| colorable(adj, &order, k)).unwrap_or(upper)
}

/// Largest-degree-first ordering restricted to `verts`.
fn saturation_order(adj: &[u64], verts: u64) -> Vec<usize> {
    let mut order: Vec<usize> = mask_iter(verts).collect();
    order.sort_by_key(|&v| std::cmp::Reverse((adj[v] & verts).count_ones()));
    order
}

fn greedy_colors(adj: &[u64], order: &[usize]) -> usize {
    let mut classes: Vec<u64> = Vec::new();
    for &v in order {
        match classes.iter().position(|&c| c & adj[v] == 0) {
            Some(i) => classes[i] |= 1 << v,
            None => classes.push(1 << v),
        }
    }
    classes.len()
}

fn colorable(adj: &[u64], order: &[usize], k: usize) -> bool {
    fn go(adj: &[u64], order: &[usize], idx: usize, classes: &mut Vec<u64>, k: usize) -> bool {
        if idx == order.len() {
            return true;
        }
        let v = order[idx];
        for c in 0..classes.len() {
            if classes[c] & adj[v] == 0 {
                classes[c] |= 1 << v;
                if go(adj, order, idx + 1, classes, k) {
                    return true;
                }
                classes[c] &= !(1 << v);
            }
        }
        if classes.len() < k {
            classes.push(1 << v);
            if go(adj, order, idx + 1, classes, k) {
                return true;
            }
            classes.pop();
        }
        false
    }
    go(adj, order, 0, &mut Vec::with_capacity(k), k)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn small_values() {
        let c5 = cycle(5);
        assert_eq!((chromatic_number(&c5).unwrap(), clique_number(&c5).unwrap()), (3, 2));
        let k4 = complete(4);
        assert_eq!((chromatic_number(&k4).unwrap(), clique_number(&k4).unwrap()), (4, 4));
        assert_eq!(chromatic_number(&Graph::null()).unwrap(), 0);
        assert_eq!(chromatic_number(&Graph::new(3)).unwrap(), 1);
    }

    #[test]
    fn cap_refusal() {
        assert!(matches!(chromatic_number(&Graph::new(41)), Err(Error::CapExceeded { .. })));
    }
}
