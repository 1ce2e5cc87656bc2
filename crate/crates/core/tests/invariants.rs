//! Property tests: the containment orders, minima against brute force, the
//! upward-closed families lemma, Shapley's criterion and kernel search.

use convexfam::game::{GameForm, MatrixGame};
use convexfam::graph::{self, Digraph, Graph};
use convexfam::poset::{
    classify, immediate_successors, precedes, FamilyPredicate, GroundPoset, Order, PosetElement,
};
use convexfam::{IdSet, Search};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges: Vec<_> = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(e, _)| *e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn digraph_strategy(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |keep| {
            let arcs: Vec<_> = (0..n * n)
                .filter(|&k| keep[k] && k / n != k % n)
                .map(|k| (k / n, k % n))
                .collect();
            Digraph::from_arcs(n, &arcs).unwrap()
        })
    })
}

fn matrix_strategy(max: usize, alphabet: i64) -> impl Strategy<Value = MatrixGame> {
    (1..=max, 1..=max).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(proptest::collection::vec(0..alphabet, c), r).prop_map(|rows| {
            MatrixGame::from_rows(rows.into_iter().map(|r| r.into_iter().map(|x| x as f64).collect()).collect()).unwrap()
        })
    })
}

/// Every element of `poset` in the order the brute-force checks want: all
/// vertex or edge subsets, or all line subsets with rows and columns both
/// empty or both non-empty.
fn all_elements(poset: &GroundPoset, rows: usize, cols: usize) -> Vec<PosetElement> {
    match poset.order() {
        Order::Line => {
            let mut out = vec![PosetElement::lines(IdSet::default(), IdSet::default())];
            for r in 1..1u128 << rows {
                for c in 1..1u128 << cols {
                    out.push(PosetElement::lines(IdSet(r), IdSet(c)));
                }
            }
            out
        }
        _ => {
            let atoms = match poset.full() {
                PosetElement::VertexSubset { vertices } => vertices,
                PosetElement::EdgeSubset { edges, .. } => edges,
                PosetElement::LineSubset { .. } => unreachable!(),
            };
            let mut out = Vec::new();
            let mut sub = atoms.0;
            loop {
                out.push(poset.element(IdSet(sub)).unwrap());
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & atoms.0;
            }
            out
        }
    }
}

/// Minima and local minima straight from the definitions.
fn brute_minima(
    pred: &FamilyPredicate,
    poset: &GroundPoset,
    elems: &[PosetElement],
) -> (Vec<PosetElement>, Vec<PosetElement>) {
    let member = |e: &PosetElement| pred.eval(poset.ground(), e);
    let mut minima = Vec::new();
    let mut local = Vec::new();
    for e in elems.iter().filter(|e| member(e)) {
        if !elems.iter().any(|f| f != e && precedes(f, e).unwrap() && member(f)) {
            minima.push(*e);
        }
        if !immediate_successors(e, poset).unwrap().iter().any(member) {
            local.push(*e);
        }
    }
    minima.sort();
    local.sort();
    (minima, local)
}

fn check_against_brute(pred: &FamilyPredicate, poset: &GroundPoset, rows: usize, cols: usize) -> Result<(), TestCaseError> {
    let elems = all_elements(poset, rows, cols);
    let (minima, local) = brute_minima(pred, poset, &elems);
    let r = classify(pred, poset).unwrap();
    let mut got_min = r.minima.clone();
    let mut got_local = r.local_minima.clone();
    got_min.sort();
    got_local.sort();
    prop_assert_eq!(&got_min, &minima);
    prop_assert_eq!(&got_local, &local);
    prop_assert_eq!(r.convex, minima == local);
    let h = elems.iter().all(|e| {
        !pred.eval(poset.ground(), e)
            || immediate_successors(e, poset).unwrap().iter().all(|s| pred.eval(poset.ground(), s))
    });
    prop_assert_eq!(r.hereditary, h);
    let chain = r.verdicts();
    for k in 0..3 {
        prop_assert!(!chain[k + 1] || chain[k]);
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn containment_is_a_partial_order(g in graph_strategy(7), a: u8, b: u8, c: u8) {
        let n = g.n();
        let poset = GroundPoset::new(g, Order::Vertex).unwrap();
        let e = |m: u8| poset.element(IdSet(u128::from(m) & IdSet::full(n).0)).unwrap();
        let (a, b, c) = (e(a), e(b), e(c));
        prop_assert!(precedes(&a, &a).unwrap());
        if precedes(&a, &b).unwrap() && precedes(&b, &a).unwrap() {
            prop_assert_eq!(a, b);
        }
        if precedes(&a, &b).unwrap() && precedes(&b, &c).unwrap() {
            prop_assert!(precedes(&a, &c).unwrap());
        }
        for s in immediate_successors(&a, &poset).unwrap() {
            prop_assert!(precedes(&s, &a).unwrap() && s != a);
            prop_assert_eq!(s.size() + 1, a.size());
        }
    }

    #[test]
    fn line_order_successors_stay_canonical(m in matrix_strategy(4, 3), rows: u8, cols: u8) {
        let (r, c) = (m.rows(), m.cols());
        let rows = IdSet(u128::from(rows) & IdSet::full(r).0);
        let cols = IdSet(u128::from(cols) & IdSet::full(c).0);
        prop_assume!(!rows.is_empty() && !cols.is_empty());
        let poset = GroundPoset::new(m, Order::Line).unwrap();
        let e = PosetElement::lines(rows, cols);
        for s in immediate_successors(&e, &poset).unwrap() {
            prop_assert!(precedes(&s, &e).unwrap());
            match s {
                PosetElement::LineSubset { rows, cols } => prop_assert_eq!(rows.is_empty(), cols.is_empty()),
                _ => prop_assert!(false, "line order produced {:?}", s),
            }
        }
    }

    #[test]
    fn vertex_minima_match_brute_force(g in graph_strategy(6), pick in 0usize..3) {
        let pred = [
            FamilyPredicate::graphs("connected", Graph::is_connected),
            FamilyPredicate::graphs("has an edge", |g| g.edge_count() > 0),
            FamilyPredicate::graphs("not bipartite", |g| !g.is_bipartite()),
        ][pick].clone();
        let poset = GroundPoset::new(g, Order::Vertex).unwrap();
        check_against_brute(&pred, &poset, 0, 0)?;
    }

    #[test]
    fn edge_minima_match_brute_force(g in graph_strategy(5), pick in 0usize..2) {
        let pred = [
            FamilyPredicate::graphs("connected", Graph::is_connected),
            FamilyPredicate::graphs("not bipartite", |g| !g.is_bipartite()),
        ][pick].clone();
        let poset = GroundPoset::new(g, Order::Edge).unwrap();
        check_against_brute(&pred, &poset, 0, 0)?;
    }

    #[test]
    fn line_minima_match_brute_force(m in matrix_strategy(4, 3), pick in 0usize..2) {
        let pred = [
            FamilyPredicate::matrices("SP-free", |m| !m.is_empty() && !m.has_sp()),
            FamilyPredicate::matrices("with SP", |m| !m.is_empty() && m.has_sp()),
        ][pick].clone();
        let (r, c) = (m.rows(), m.cols());
        let poset = GroundPoset::new(m, Order::Line).unwrap();
        check_against_brute(&pred, &poset, r, c)?;
    }

    /// Subgraphs containing one of a few fixed subgraphs form a weakly
    /// hereditary family; hereditary only when one of them is empty.
    #[test]
    fn upward_closed_families_are_weakly_hereditary(
        g in graph_strategy(6),
        seeds in proptest::collection::vec(any::<u64>(), 1..4),
        edge_order: bool,
    ) {
        let order = if edge_order { Order::Edge } else { Order::Vertex };
        let atoms = if edge_order { g.edge_count() } else { g.n() };
        let poset = GroundPoset::new(g, order).unwrap();
        let fixed: Vec<u128> = seeds.iter().map(|s| u128::from(*s) & IdSet::full(atoms).0).collect();
        let sets = fixed.clone();
        let pred = FamilyPredicate::new("contains a fixed subgraph", move |_, e| {
            let m = match e {
                PosetElement::VertexSubset { vertices } => vertices.0,
                PosetElement::EdgeSubset { edges, .. } => edges.0,
                PosetElement::LineSubset { .. } => return false,
            };
            sets.iter().any(|s| s & !m == 0)
        });
        let r = classify(&pred, &poset).unwrap();
        prop_assert!(r.weakly_hereditary);
        prop_assert_eq!(r.hereditary, fixed.contains(&0));
    }

    #[test]
    fn shapley_criterion(m in matrix_strategy(5, 3)) {
        prop_assert_eq!(m.all_2x2_have_sp(), m.is_absolutely_determined());
    }

    #[test]
    fn kernel_search_matches_brute_force(d in digraph_strategy(7)) {
        let n = d.n();
        let kernels = (0u128..1 << n).filter(|&m| graph::is_kernel(&d, IdSet(m)).unwrap()).count() as u64;
        prop_assert_eq!(graph::count_kernels(&d, 1 << 30), Search::Decided(kernels));
        match graph::find_kernel(&d, 1 << 30) {
            Search::Decided(Some(k)) => prop_assert!(graph::is_kernel(&d, k).unwrap()),
            Search::Decided(None) => prop_assert_eq!(kernels, 0),
            Search::Undecided { .. } => prop_assert!(false, "budget"),
        }
    }

    #[test]
    fn total_tightness_matches_brute_force(cells in proptest::collection::vec(0usize..4, 6), wide: bool) {
        let (r, c) = if wide { (2, 3) } else { (3, 2) };
        let rows: Vec<&[usize]> = cells.chunks(c).take(r).collect();
        let f = GameForm::from_indices(&rows);
        prop_assert_eq!(f.is_totally_tight(), f.is_totally_tight_bruteforce());
    }
}
