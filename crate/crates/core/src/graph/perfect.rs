//! Ternary graphs, perfection (by definition and by forbidden odd holes),
//! partitionable graphs, Meyniel graphs and critical edges.

use std::ops::ControlFlow;

use super::coloring::{chromatic_number_within, clique_number_within};
use super::cycles::{has_induced_cycle_within, visit_simple_cycles};
use super::{bit, low_mask, Graph};
use crate::{Error, Result};

/// Largest graph accepted by [`is_perfect_bruteforce`] (2^n induced subgraphs).
pub const PERFECT_BRUTEFORCE_CAP: usize = 16;

/// No chordless cycle whose length is a multiple of 3.
pub fn is_ternary(g: &Graph) -> Result<bool> {
    super::has_induced_cycle(g, g.n(), |len| len % 3 == 0).map(|found| !found)
}

/// Induced odd cycle of length at least 5.
pub fn has_odd_hole(g: &Graph) -> bool {
    has_induced_cycle_within(g.adjacency(), low_mask(g.n()), g.n(), |len| len >= 5 && len % 2 == 1)
}

pub fn has_odd_antihole(g: &Graph) -> bool {
    has_odd_hole(&g.complement())
}

/// χ = ω on every induced subgraph, checked subgraph by subgraph.
pub fn is_perfect_bruteforce(g: &Graph) -> Result<bool> {
    if g.n() > PERFECT_BRUTEFORCE_CAP {
        return Err(Error::CapExceeded {
            count: g.n() as u128,
            cap: PERFECT_BRUTEFORCE_CAP as u128,
        });
    }
    let adj = g.adjacency();
    Ok((0..=low_mask(g.n())).all(|s| {
        chromatic_number_within(adj, s) == clique_number_within(adj, s)
    }))
}

/// Perfection via forbidden odd holes and odd antiholes.
pub fn is_perfect_spgt(g: &Graph) -> bool {
    !has_odd_hole(g) && !has_odd_antihole(g)
}

/// χ > ω, but χ = ω after deleting any single vertex.
pub fn is_partitionable(g: &Graph) -> Result<bool> {
    if g.n() > super::coloring::COLORING_CAP {
        return Err(Error::CapExceeded {
            count: g.n() as u128,
            cap: super::coloring::COLORING_CAP as u128,
        });
    }
    let adj = g.adjacency();
    let all = low_mask(g.n());
    if chromatic_number_within(adj, all) == clique_number_within(adj, all) {
        return Ok(false);
    }
    Ok((0..g.n()).all(|v| {
        let s = all & !bit(v);
        chromatic_number_within(adj, s) == clique_number_within(adj, s)
    }))
}

/// Every odd cycle of length at least 5 (induced or not) has two or more chords.
pub fn is_meyniel(g: &Graph) -> bool {
    let mut ok = true;
    visit_simple_cycles(g, &mut |cycle| {
        let len = cycle.len();
        if len < 5 || len % 2 == 0 {
            return ControlFlow::Continue(());
        }
        let mut on_cycle = 0u64;
        for &v in cycle {
            on_cycle |= bit(v);
        }
        // each cycle vertex sees its two cycle neighbours plus any chords
        let incidences: usize =
            cycle.iter().map(|&v| (g.neighbors(v) & on_cycle).count_ones() as usize).sum();
        let chords = (incidences - 2 * len) / 2;
        if chords < 2 {
            ok = false;
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    ok
}

/// Edges of a perfect graph whose deletion leaves an imperfect graph.
pub fn critical_edges(g: &Graph) -> Result<Vec<(usize, usize)>> {
    if !is_perfect_spgt(g) {
        return Err(Error::NotPerfect);
    }
    Ok(g.edges().into_iter().filter(|&(u, v)| !is_perfect_spgt(&g.without_edge(u, v))).collect())
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn ternary_cycles() {
        assert!(is_ternary(&cycle(5)).unwrap());
        assert!(!is_ternary(&cycle(6)).unwrap());
        assert!(!is_ternary(&cycle(3)).unwrap());
    }

    #[test]
    fn perfection_of_small_graphs() {
        assert!(!is_perfect_bruteforce(&cycle(5)).unwrap());
        assert!(is_perfect_bruteforce(&Graph::null()).unwrap());
        assert!(!is_perfect_spgt(&cycle(5)));
        assert!(!is_perfect_spgt(&cycle(7).complement()));
        assert!(is_perfect_spgt(&path(4)));
        assert!(is_perfect_bruteforce(&path(4)).unwrap());
    }

    #[test]
    fn partitionable_examples() {
        assert!(is_partitionable(&cycle(5)).unwrap());
        assert!(!is_partitionable(&cycle(6)).unwrap());
        assert!(!is_partitionable(&complete(4)).unwrap());
    }

    #[test]
    fn house_with_chord_has_one_critical_edge() {
        let g = house_with_chord();
        assert_eq!(critical_edges(&g).unwrap(), vec![(0, 2)]);
        assert!(!is_meyniel(&g));
        assert_eq!(critical_edges(&cycle(5)), Err(Error::NotPerfect));
    }

    #[test]
    fn bipartite_graphs_are_meyniel() {
        assert!(is_meyniel(&complete_bipartite(3, 3)));
        assert!(is_meyniel(&cube()));
    }
}
