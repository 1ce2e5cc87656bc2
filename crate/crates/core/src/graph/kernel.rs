//! Kernels of digraphs: independent sets `K` such that every vertex outside
//! `K` has an arc into `K`.
//!
//! Recognising kernel existence is NP-complete, so the search is exponential
//! backtracking with unit propagation, bounded by a node budget. Running out
//! of budget yields [`Search::Undecided`], never a negative answer.

use serde::Serialize;

use super::{bit, low_mask, mask_iter, vertex_mask, Digraph};
use crate::{IdSet, Result, Search};

pub const DEFAULT_KERNEL_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelCertificate {
    pub kernel: IdSet,
    /// For each vertex `v` outside the kernel, an arc `(v, w)` with `w` inside.
    pub dominating_arcs: Vec<(usize, usize)>,
}

pub fn kernel_certificate(d: &Digraph, kernel: IdSet) -> Result<Option<KernelCertificate>> {
    let k = vertex_mask(kernel, d.n())?;
    if mask_iter(k).any(|v| d.out_neighbors(v) & k != 0) {
        return Ok(None);
    }
    let mut dominating_arcs = Vec::new();
    for v in mask_iter(low_mask(d.n()) & !k) {
        let hit = d.out_neighbors(v) & k;
        if hit == 0 {
            return Ok(None);
        }
        dominating_arcs.push((v, hit.trailing_zeros() as usize));
    }
    Ok(Some(KernelCertificate { kernel, dominating_arcs }))
}

pub fn is_kernel(d: &Digraph, kernel: IdSet) -> Result<bool> {
    Ok(kernel_certificate(d, kernel)?.is_some())
}

struct Solver<'a> {
    d: &'a Digraph,
    all: u64,
    nodes: u64,
    budget: u64,
}

#[derive(Clone, Copy)]
struct State {
    inside: u64,
    outside: u64,
}

impl Solver<'_> {
    /// Unit propagation to a fixpoint; `None` on conflict.
    fn propagate(&self, mut st: State) -> Option<State> {
        let d = self.d;
        loop {
            let before = (st.inside, st.outside);
            for v in mask_iter(st.inside) {
                let nbrs = (d.out_neighbors(v) | d.in_neighbors(v)) & !bit(v);
                if nbrs & st.inside != 0 || d.has_arc(v, v) {
                    return None;
                }
                st.outside |= nbrs;
            }
            let unknown = self.all & !st.inside & !st.outside;
            for v in mask_iter(st.outside) {
                if d.out_neighbors(v) & st.inside != 0 {
                    continue;
                }
                let cands = d.out_neighbors(v) & unknown;
                match cands.count_ones() {
                    0 => return None,
                    1 => st.inside |= cands,
                    _ => {}
                }
            }
            for v in mask_iter(unknown) {
                if d.has_arc(v, v) {
                    st.outside |= bit(v);
                } else if d.out_neighbors(v) & !st.outside == 0 {
                    st.inside |= bit(v);
                }
            }
            if st.inside & st.outside != 0 {
                return None;
            }
            if (st.inside, st.outside) == before {
                return Some(st);
            }
        }
    }

    /// Calls `found` for each kernel; stops when it returns `false`.
    /// Returns `false` if the budget ran out.
    fn search(&mut self, st: State, found: &mut dyn FnMut(u64) -> bool) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let Some(st) = self.propagate(st) else {
            return Some(true);
        };
        let unknown = self.all & !st.inside & !st.outside;
        if unknown == 0 {
            debug_assert!(is_kernel(self.d, IdSet(st.inside as u128)).unwrap());
            return Some(found(st.inside));
        }
        let v = unknown.trailing_zeros() as usize;
        let with = State { inside: st.inside | bit(v), ..st };
        if !self.search(with, found)? {
            return Some(false);
        }
        let without = State { outside: st.outside | bit(v), ..st };
        self.search(without, found)
    }
}

fn run(d: &Digraph, budget: u64, found: &mut dyn FnMut(u64) -> bool) -> (bool, u64) {
    let mut solver = Solver { d, all: low_mask(d.n()), nodes: 0, budget };
    let complete = solver.search(State { inside: 0, outside: 0 }, found).is_some();
    (complete, solver.nodes)
}

/// Some kernel of `d`, the lexicographically first in branching order.
pub fn find_kernel(d: &Digraph, budget: u64) -> Search<Option<IdSet>> {
    let mut kernel = None;
    let (complete, nodes) = run(d, budget, &mut |k| {
        kernel = Some(IdSet(k as u128));
        false
    });
    if kernel.is_some() || complete {
        Search::Decided(kernel)
    } else {
        Search::Undecided { explored: nodes }
    }
}

pub fn count_kernels(d: &Digraph, budget: u64) -> Search<u64> {
    let mut count = 0;
    let (complete, nodes) = run(d, budget, &mut |_| {
        count += 1;
        true
    });
    if complete {
        Search::Decided(count)
    } else {
        Search::Undecided { explored: nodes }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn directed_cycle(n: usize) -> Digraph {
        Digraph::circulant(n, &[1]).unwrap()
    }

    #[test]
    fn even_and_odd_cycles() {
        assert!(is_kernel(&directed_cycle(4), IdSet::from_ids([0, 2])).unwrap());
        assert!(!is_kernel(&directed_cycle(3), IdSet::from_ids([0])).unwrap());
        assert_eq!(count_kernels(&directed_cycle(4), 1000), Search::Decided(2));
        assert_eq!(count_kernels(&directed_cycle(3), 1000), Search::Decided(0));
        assert_eq!(find_kernel(&directed_cycle(5), 1000), Search::Decided(None));
    }

    #[test]
    fn directed_path() {
        let p = Digraph::from_arcs(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(find_kernel(&p, 1000), Search::Decided(Some(IdSet::from_ids([0, 2]))));
        assert_eq!(count_kernels(&p, 1000), Search::Decided(1));
    }

    #[test]
    fn certificate_lists_dominating_arcs() {
        let c = kernel_certificate(&directed_cycle(4), IdSet::from_ids([1, 3])).unwrap().unwrap();
        assert_eq!(c.dominating_arcs, vec![(0, 1), (2, 3)]);
        assert!(kernel_certificate(&directed_cycle(4), IdSet::from_ids([4])).is_err());
    }

    #[test]
    fn looped_vertices_stay_outside() {
        let d = Digraph::from_arcs_with_loops(2, &[(0, 0), (0, 1)]).unwrap();
        assert_eq!(find_kernel(&d, 100), Search::Decided(Some(IdSet::from_ids([1]))));
        let all_loops = Digraph::circulant_with_loops(4, &[1, 7, 8]).unwrap();
        assert_eq!(count_kernels(&all_loops, 1000), Search::Decided(0));
    }

    #[test]
    fn tiny_budget_is_undecided() {
        let g = Digraph::circulant(16, &[1, 7, 8]).unwrap();
        assert!(matches!(find_kernel(&g, 1), Search::Undecided { .. }));
    }
}
