//! `verify`: fixed check bundles for the worked examples.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{GlobalArgs, Line, Report};
use crate::dgraph::{self, DGraph};
use crate::game::{self, BimatrixGame, GameForm, MatrixGame};
use crate::graph::{self, Digraph, Graph, DEFAULT_KERNEL_BUDGET};
use crate::poset::{
    certify_non_convex, classify, immediate_successors, is_local_minimum, GroundPoset, Order,
    PosetElement,
};
use crate::registry::{self, predicates as p, AuditBounds, Check, MinimaRule, Universe};
use crate::{Error, IdSet, Result, Search};

pub const VERIFY_BUNDLES: &[(&str, &str)] = &[
    ("circulant43", "K1, K7, K8 are kernels of G43(1,7,8) minus (43,1), (43,7), (43,8); --slow adds kernel-lessness and all 129 arc deletions"),
    ("g16", "G16(1,7,8) is kernel-less and every vertex deletion has a kernel"),
    ("circulants", "G_n(1,7,8) for n = 3..21 has a kernel iff 3 divides n"),
    ("kernel-properties", "10^4 seeded random digraphs on at most 8 vertices: cycle parity versus kernel counts"),
    ("wrochna", "ternary, every edge deletion is not, so ternary graphs are not convex under edge deletion"),
    ("cube", "the cube has induced 6-cycles and every edge deletion creates a new one"),
    ("icosidodecahedron", "triangles and induced 9-cycles; every edge deletion creates an induced 6-cycle (--slow)"),
    ("house-with-chord", "the 5-cycle with one chord has exactly that chord as critical edge"),
    ("perfect-suite", "perfection, critical edges, imperfect minima and partitionable graphs on all graphs up to 6 vertices (7 with --slow)"),
    ("sp-4x4", "SP-free 4x4 matrix that reduces to its lower-right block but not to its upper-left one"),
    ("shapley", "10^4 seeded random matrices up to 6x6: every submatrix has a SP iff every 2x2 one does"),
    ("sp-free-scan", "every SP-free matrix up to 4x4 over {0,1,2} larger than 2x2 has a deletable line"),
    ("two-sp-2x3", "matrices with a SP are strongly convex but not weakly hereditary"),
    ("ne-free-3x3", "the 3x3 NE-free instance is locally minimal and every 2x2 subgame has a NE"),
    ("theorem3", "structural local-minimality test agrees with brute force on 10^3 seeded tie-free games"),
    ("zero-sum-scan", "no 3x3 zero-sum game over {0,1,2} is locally minimal NE-free"),
    ("ne-free-lm-4x4", "locally minimal NE-free 4x4 game containing an NE-free 2x2 subgame"),
    ("nine-forms", "g1..g6 are tight, g7..g9 are not"),
    ("not-tight-catalog", "the three 2x2 forms are exactly the not-tight 2x2 forms"),
    ("ab-form-4x4", "not tight; only deleting the last row or column makes it tight"),
    ("tight-lm-4x4", "tight 4x4 form whose line deletions are all not tight"),
    ("not-tight-theorem", "exhaustive two-outcome forms up to 4x4: not-tight is strongly convex, not weakly hereditary"),
    ("pi-delta", "Π and Δ are CC, not CIS, and minimal in both families"),
    ("pi-sub-pi", "Π(v4 -> Π′) breaks strong convexity of CC d-graphs"),
    ("bull", "the bull is CIS and deleting its top vertex leaves Π"),
    ("bull-sub-pi", "𝓑′ is not CIS, deleting any substituted vertex restores CIS"),
    ("bull-sub-delta", "𝓑″ is not CIS, deleting any substituted vertex restores CIS"),
    ("line-k33", "the L(K3,3) 2-graph is CIS and all 9 vertex deletions are not"),
    ("dgraph-theorems", "CC and not-CIS d-graphs up to 5 vertices and 3 colours have minima = local minima = {Π, Δ}"),
    ("delta-conjecture", "no CIS 3-graph on at most 6 vertices contains Δ"),
];

pub fn verify(name: &str, g: &GlobalArgs) -> Result<Report> {
    let budget = g.budget.unwrap_or(DEFAULT_KERNEL_BUDGET);
    let lines = match name {
        "circulant43" => circulant43(budget, g.slow),
        "g16" => g16(budget),
        "circulants" => circulants(budget),
        "kernel-properties" => kernel_properties(g.seed, budget),
        "wrochna" => wrochna(budget),
        "cube" => cube(),
        "icosidodecahedron" => icosidodecahedron(g.slow),
        "house-with-chord" => house_with_chord(),
        "perfect-suite" => perfect_suite(if g.slow { 7 } else { 6 }),
        "sp-4x4" => sp_4x4(),
        "shapley" => shapley(g.seed),
        "sp-free-scan" => sp_free_scan(),
        "two-sp-2x3" => two_sp_2x3(),
        "ne-free-3x3" => ne_free_3x3(),
        "theorem3" => theorem3(g.seed),
        "zero-sum-scan" => zero_sum_scan(),
        "ne-free-lm-4x4" => ne_free_lm_4x4(),
        "nine-forms" => nine_forms(),
        "not-tight-catalog" => not_tight_catalog(),
        "ab-form-4x4" => ab_form_4x4(),
        "tight-lm-4x4" => tight_lm_4x4(),
        "not-tight-theorem" => not_tight_theorem(),
        "pi-delta" => pi_delta(),
        "pi-sub-pi" => pi_sub_pi(),
        "bull" => bull(),
        "bull-sub-pi" => substituted_bull(dgraph::fixtures::bull_sub_pi(), 4..8),
        "bull-sub-delta" => substituted_bull(dgraph::fixtures::bull_sub_delta_default(), 4..7),
        "line-k33" => line_k33(),
        "dgraph-theorems" => dgraph_theorems(),
        "delta-conjecture" => delta_conjecture(budget),
        _ => {
            let valid = VERIFY_BUNDLES.iter().map(|(n, _)| *n).collect::<Vec<_>>().join(", ");
            return Err(Error::Unknown { name: name.to_string(), valid });
        }
    }?;
    Ok(Report::new(format!("convexfam verify {name}"), lines))
}

fn labels(s: IdSet) -> String {
    format!("{{{}}}", s.labels().iter().map(usize::to_string).collect::<Vec<_>>().join(","))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Kernel search outcome as a line: `want` says whether a kernel should exist.
fn kernel_line(name: impl Into<String>, d: &Digraph, want: bool, budget: u64) -> Line {
    match graph::find_kernel(d, budget) {
        Search::Decided(k) => {
            let detail = match k {
                Some(k) => format!("kernel {}", labels(k)),
                None => "kernel-less".into(),
            };
            Line::check(name, k.is_some() == want, detail)
        }
        Search::Undecided { explored } => Line::undecided(name, format!("budget exhausted after {explored} nodes")),
    }
}

fn circulant43(budget: u64, slow: bool) -> Result<Vec<Line>> {
    let g = Digraph::circulant(43, &[1, 7, 8])?;
    let kernels: [(usize, &[usize]); 3] = [
        (1, &[1, 5, 10, 14, 16, 19, 25, 28, 30, 34, 39, 43]),
        (7, &[7, 9, 11, 13, 22, 24, 26, 28, 37, 39, 41, 43]),
        (8, &[3, 5, 8, 14, 17, 19, 23, 28, 32, 34, 37, 43]),
    ];
    let mut lines = Vec::new();
    for (j, k) in kernels {
        let h = g.without_arc(42, j - 1);
        let set = IdSet::from_labels(k.iter().copied());
        lines.push(Line::check(
            format!("K{j} is a kernel of G43 - (43,{j})"),
            graph::is_kernel(&h, set)?,
            labels(set),
        ));
    }
    if slow {
        lines.push(kernel_line("G43(1,7,8) is kernel-less", &g, false, budget));
        let mut missing = Vec::new();
        let mut undecided = 0;
        for (u, v) in g.arcs() {
            match graph::find_kernel(&g.without_arc(u, v), budget) {
                Search::Decided(Some(_)) => {}
                Search::Decided(None) => missing.push(format!("({},{})", u + 1, v + 1)),
                Search::Undecided { .. } => undecided += 1,
            }
        }
        let name = "every arc deletion of G43 has a kernel";
        lines.push(if undecided > 0 && missing.is_empty() {
            Line::undecided(name, format!("{undecided} deletions undecided"))
        } else {
            Line::check(name, missing.is_empty(), format!("{} arcs, kernel-less after deleting: {}", g.arc_count(), if missing.is_empty() { "none".into() } else { missing.join(" ") }))
        });
    }
    Ok(lines)
}

fn g16(budget: u64) -> Result<Vec<Line>> {
    let g = Digraph::circulant(16, &[1, 7, 8])?;
    let mut lines = vec![kernel_line("G16(1,7,8) is kernel-less", &g, false, budget)];
    let mut bad = Vec::new();
    for v in 0..16 {
        if graph::find_kernel(&g.without_vertex(v), budget).decided().flatten().is_none() {
            bad.push(v + 1);
        }
    }
    lines.push(Line::check("every vertex deletion has a kernel", bad.is_empty(), format!("failing: {bad:?}")));
    let minus16 = g.induced_subgraph(IdSet::full(15))?;
    let set = IdSet::from_labels([1, 3, 5, 7]);
    lines.push(Line::check(
        "{1,3,5,7} is a kernel of G16 - 16 with arcs reversed",
        graph::is_kernel(&minus16.reverse(), set)?,
        "independent, and every other vertex is entered from the set",
    ));
    // 1 -> 2 -> 9 -> 1 uses steps 1, 7, 8. Step 8 is half of 16, so 1 -> 9 is an
    // arc too and the induced triangle has the kernel {9}; the bare cycle does not.
    let mut tri = Digraph::new(16);
    for (u, v) in [(0, 1), (1, 8), (8, 0)] {
        tri.add_arc(u, v);
    }
    lines.push(kernel_line("the directed triangle 1 -> 2 -> 9 -> 1 is a kernel-less subgraph", &tri, false, budget));
    let on = IdSet::from_labels([1, 2, 9]);
    let name = "the induced subgraph on {1,2,9} has a kernel";
    lines.push(match graph::find_kernel(&g.induced_subgraph(on)?, budget).decided() {
        Some(k) => {
            let ids: Vec<usize> = on.to_vec();
            let k = k.map(|k| IdSet::from_ids(k.iter().map(|i| ids[i])));
            Line::check(name, k.is_some(), k.map_or("kernel-less".into(), |k| format!("kernel {}", labels(k))))
        }
        None => Line::undecided(name, "budget exhausted"),
    });
    let square = g.induced_subgraph(IdSet::from_labels([1, 2, 9, 10]))?;
    lines.push(kernel_line("the induced subgraph on {1,2,9,10} is kernel-less, so G16 is not vertex-minimal", &square, false, budget));
    Ok(lines)
}

fn circulants(budget: u64) -> Result<Vec<Line>> {
    let mut lines = Vec::new();
    for n in 3..=21 {
        let d = Digraph::circulant_with_loops(n, &[1, 7, 8])?;
        lines.push(kernel_line(format!("G{n}(1,7,8)"), &d, n % 3 == 0, budget));
    }
    Ok(lines)
}

fn random_digraph(rng: &mut ChaCha8Rng) -> Digraph {
    let n = rng.gen_range(1..=8);
    let mut d = Digraph::new(n);
    let mode = rng.gen_range(0..4);
    let p: f64 = rng.gen_range(0.1..0.6);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let side: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
    for u in 0..n {
        for v in 0..n {
            if u == v || !rng.gen_bool(p) {
                continue;
            }
            let keep = match mode {
                // acyclic: arcs follow a random linear order
                0 => order[u] < order[v],
                // bipartite: every cycle is even
                1 => side[u] != side[v],
                // sparse: odd cycles only show up now and then
                2 => rng.gen_bool(0.3),
                _ => true,
            };
            if keep {
                d.add_arc(u, v);
            }
        }
    }
    d
}

fn kernel_properties(seed: u64, budget: u64) -> Result<Vec<Line>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let digraphs: Vec<Digraph> = (0..10_000).map(|_| random_digraph(&mut rng)).collect();
    let results: Vec<(Vec<usize>, Option<u64>)> = digraphs
        .par_iter()
        .map(|d| (graph::directed_cycle_lengths(d), graph::count_kernels(d, budget).decided()))
        .collect();
    let mut lines = Vec::new();
    let mut class = |name: &str, pick: &dyn Fn(&[usize]) -> bool, ok: &dyn Fn(u64) -> bool| {
        let (mut seen, mut bad, mut undecided) = (0, 0, 0);
        for (lens, count) in &results {
            if !pick(lens) {
                continue;
            }
            seen += 1;
            match count {
                Some(c) if !ok(*c) => bad += 1,
                None => undecided += 1,
                _ => {}
            }
        }
        let detail = format!("{seen} digraphs, {bad} violations, {undecided} undecided");
        lines.push(if undecided > 0 && bad == 0 {
            Line::undecided(name, detail)
        } else {
            Line::check(name, bad == 0 && seen > 0, detail)
        });
    };
    class("acyclic => exactly one kernel", &|l| l.is_empty(), &|c| c == 1);
    class("only even cycles => a kernel", &|l| !l.is_empty() && l.iter().all(|x| x % 2 == 0), &|c| c >= 1);
    class("only odd cycles => at most one kernel", &|l| !l.is_empty() && l.iter().all(|x| x % 2 == 1), &|c| c <= 1);
    let mut cyc = Vec::new();
    let mut ok = true;
    for n in 2..=8 {
        let c = graph::count_kernels(&graph::fixtures::directed_cycle(n), budget).decided();
        ok &= c == Some(if n % 2 == 0 { 2 } else { 0 });
        cyc.push(format!("C{n}:{}", c.map_or("?".into(), |c| c.to_string())));
    }
    lines.push(Line::check("directed cycles: 2 kernels if even, 0 if odd", ok, cyc.join(" ")));
    Ok(lines)
}

fn wrochna(budget: u64) -> Result<Vec<Line>> {
    let w = graph::fixtures::wrochna();
    let mut lines = vec![Line::check("ternary", graph::is_ternary(&w)?, format!("{} vertices, {} edges", w.n(), w.edge_count()))];
    let bad: Vec<String> = w
        .edges()
        .into_iter()
        .filter(|&(u, v)| graph::is_ternary(&w.without_edge(u, v)).unwrap_or(true))
        .map(|(u, v)| format!("({},{})", u + 1, v + 1))
        .collect();
    lines.push(Line::check("every edge deletion is non-ternary", bad.is_empty(), format!("{} edges, still ternary after: {bad:?}", w.edge_count())));
    let poset = GroundPoset::new(w, Order::Edge)?;
    let name = "ternary graphs under edge deletion are not convex";
    lines.push(match certify_non_convex(&p::ternary(), &poset, &poset.full(), budget)? {
        Search::Decided(Some(c)) => Line::check(
            name,
            true,
            format!("the whole graph is a local minimum; {} is a smaller member", poset.describe(&c.smaller_member)),
        ),
        Search::Decided(None) => Line::check(name, false, "no certificate"),
        Search::Undecided { explored } => Line::undecided(name, format!("{explored} elements explored")),
    });
    Ok(lines)
}

/// Induced `len`-cycles as vertex sets.
fn induced_cycle_sets(g: &Graph, len: usize) -> Result<BTreeSet<u64>> {
    Ok(graph::induced_cycles_up_to(g, len)?
        .into_iter()
        .filter(|c| c.len() == len)
        .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
        .collect())
}

/// Edges after whose deletion no new induced `len`-cycle appears.
fn edges_without_new_cycle(g: &Graph, len: usize) -> Result<Vec<(usize, usize)>> {
    let before = induced_cycle_sets(g, len)?;
    let edges = g.edges();
    let found: Vec<Result<Option<(usize, usize)>>> = edges
        .par_iter()
        .map(|&(u, v)| {
            let after = induced_cycle_sets(&g.without_edge(u, v), len)?;
            Ok((after.difference(&before).next().is_none()).then_some((u, v)))
        })
        .collect();
    let mut out = Vec::new();
    for f in found {
        out.extend(f?);
    }
    Ok(out)
}

fn cube() -> Result<Vec<Line>> {
    let c = graph::fixtures::cube();
    let six = induced_cycle_sets(&c, 6)?;
    let bad = edges_without_new_cycle(&c, 6)?;
    Ok(vec![
        Line::check("the cube has induced 6-cycles", !six.is_empty(), format!("{} of them", six.len())),
        Line::check("every edge deletion creates a new induced 6-cycle", bad.is_empty(), format!("{} edges, failing: {bad:?}", c.edge_count())),
    ])
}

fn icosidodecahedron(slow: bool) -> Result<Vec<Line>> {
    if !slow {
        return Ok(vec![Line::undecided("icosidodecahedron", "skipped; rerun with --slow")]);
    }
    let g = graph::fixtures::icosidodecahedron();
    let triangles = induced_cycle_sets(&g, 3)?.len();
    let nine = graph::has_induced_cycle(&g, 9, |l| l == 9)?;
    let bad = edges_without_new_cycle(&g, 6)?;
    Ok(vec![
        Line::check("30 vertices, 60 edges, 4-regular", g.n() == 30 && g.edge_count() == 60 && (0..30).all(|v| g.degree(v) == 4), ""),
        Line::check("contains triangles", triangles == 20, format!("{triangles} triangles")),
        Line::check("contains induced 9-cycles", nine, ""),
        Line::check("every edge deletion creates an induced 6-cycle", bad.is_empty(), format!("failing: {bad:?}")),
    ])
}

fn house_with_chord() -> Result<Vec<Line>> {
    let g = graph::fixtures::house_with_chord();
    let crit = graph::critical_edges(&g)?;
    Ok(vec![
        Line::check("perfect", graph::is_perfect_spgt(&g), ""),
        Line::check("critical edges = {(1,3)}", crit == [(0, 2)], format!("{crit:?} (0-based)")),
    ])
}

fn all_graphs_upto(n_max: usize) -> Result<Vec<(usize, registry::Enumeration)>> {
    (1..=n_max).map(|n| Ok((n, Universe::Graphs { n }.enumerate()?))).collect()
}

fn count_failures(n_max: usize, f: impl Fn(&Graph) -> Result<bool> + Sync) -> Result<(u64, u64)> {
    let (mut seen, mut bad) = (0, 0);
    for (_, e) in all_graphs_upto(n_max)? {
        let fails: Result<u64> = (0..e.len())
            .into_par_iter()
            .map(|i| {
                let g = e.get(i);
                f(g.as_graph().expect("graph universe")).map(|ok| u64::from(!ok))
            })
            .sum();
        seen += e.len();
        bad += fails?;
    }
    Ok((seen, bad))
}

fn perfect_suite(n_max: usize) -> Result<Vec<Line>> {
    let mut lines = Vec::new();
    let (seen, bad) = count_failures(n_max, |g| Ok(graph::is_perfect_spgt(g) == graph::is_perfect_bruteforce(g)?))?;
    lines.push(Line::check(
        format!("odd-hole test agrees with the definition, n <= {n_max}"),
        bad == 0,
        format!("{seen} labelled graphs, {bad} disagreements"),
    ));
    let (seen, bad) = count_failures(n_max, |g| {
        Ok(!graph::is_perfect_spgt(g) || graph::critical_edges(g)?.is_empty() == graph::is_meyniel(g))
    })?;
    lines.push(Line::check(
        format!("perfect graphs: no critical edge iff Meyniel, n <= {n_max}"),
        bad == 0,
        format!("{seen} labelled graphs, {bad} disagreements"),
    ));
    let chi_gt = p::chi_gt_omega();
    let (seen, bad) = count_failures(n_max, |g| {
        let poset = GroundPoset::new(g.clone(), Order::Vertex)?;
        Ok(graph::is_partitionable(g)? == is_local_minimum(&chi_gt, &poset, &poset.full())?)
    })?;
    lines.push(Line::check(
        format!("partitionable iff a local minimum of chi > omega, n <= {n_max}"),
        bad == 0,
        format!("{seen} labelled graphs, {bad} disagreements"),
    ));
    let k = graph::fixtures::complete(n_max);
    let poset = GroundPoset::new(k, Order::Edge)?.with_cap(1 << 21);
    let report = classify(&p::imperfect(), &poset)?;
    let classes: BTreeSet<Option<String>> =
        report.local_minima.iter().map(|m| MinimaRule::OddHolePlusIsolated.classify(poset.ground(), m)).collect();
    let all_holes = !classes.contains(&None);
    let names: Vec<String> = classes.into_iter().flatten().collect();
    lines.push(Line::check(
        format!("imperfect spanning subgraphs of K{n_max}: minima = local minima = odd hole + isolated vertices"),
        report.convex && all_holes && !report.minima.is_empty(),
        format!("{} minima: {}", report.minima.len(), names.join(", ")),
    ));
    Ok(lines)
}

fn sp_4x4() -> Result<Vec<Line>> {
    let m = game::fixtures::sp_fixture_4x4();
    let mut lines = vec![Line::check("SP-free", !m.has_sp(), "")];
    let pattern: Vec<String> = (0..4)
        .map(|k| format!("{}:{}/{}", k + 1, yes(m.without_row(k).has_sp()), yes(m.without_col(k).has_sp())))
        .collect();
    let ok = (0..4).all(|k| m.without_row(k).has_sp() == (k >= 2) && m.without_col(k).has_sp() == (k >= 2));
    lines.push(Line::check("a SP appears after deleting row/column 3 or 4, not 1 or 2", ok, format!("line:row/col {}", pattern.join(" "))));
    let poset = GroundPoset::new(m, Order::Line)?;
    let pred = p::sp_free();
    let mut reach = BTreeSet::from([poset.full()]);
    let mut stack = vec![poset.full()];
    while let Some(e) = stack.pop() {
        for s in immediate_successors(&e, &poset)? {
            if pred.eval(poset.ground(), &s) && reach.insert(s) {
                stack.push(s);
            }
        }
    }
    let m1 = PosetElement::lines(IdSet::from_ids([0, 1]), IdSet::from_ids([0, 1]));
    let m2 = PosetElement::lines(IdSet::from_ids([2, 3]), IdSet::from_ids([2, 3]));
    lines.push(Line::check("reduces to M2 within the SP-free family", reach.contains(&m2), poset.describe(&m2)));
    lines.push(Line::check("does not reduce to M1 within the SP-free family", !reach.contains(&m1), poset.describe(&m1)));
    let report = classify(&pred, &poset)?;
    lines.push(Line::check("so SP-free matrices are not strongly convex", !report.strongly_convex && report.convex, ""));
    Ok(lines)
}

fn shapley(seed: u64) -> Result<Vec<Line>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let matrices: Vec<MatrixGame> = (0..10_000)
        .map(|_| {
            let (r, c) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
            let alphabet = rng.gen_range(2..=4);
            let rows = (0..r).map(|_| (0..c).map(|_| rng.gen_range(0..alphabet) as f64).collect()).collect();
            MatrixGame::from_rows(rows).expect("rectangular")
        })
        .collect();
    let (premise, bad): (u64, u64) = matrices
        .par_iter()
        .map(|m| {
            let two = m.all_2x2_have_sp();
            (u64::from(two), u64::from(two != m.is_absolutely_determined()))
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    Ok(vec![Line::check(
        "every submatrix has a SP iff every 2x2 submatrix has one",
        bad == 0,
        format!("10000 matrices, {premise} with all 2x2 submatrices determined, {bad} disagreements"),
    )])
}

fn sp_free_scan() -> Result<Vec<Line>> {
    let s = game::sp_free_convexity_scan(4, 3);
    Ok(vec![Line::check(
        "SP-free matrices up to 4x4 over {0,1,2}: local minima are 2x2",
        s.convex(),
        format!("{} matrices, {} SP-free, {} local minima, counterexample {:?}", s.checked, s.sp_free, s.local_minima, s.counterexample),
    )])
}

fn two_sp_2x3() -> Result<Vec<Line>> {
    let m = game::fixtures::two_sp_fixture_2x3();
    let sps = m.saddle_points();
    let poset = GroundPoset::new(m, Order::Line)?;
    let r = classify(&p::with_sp(), &poset)?;
    Ok(vec![
        Line::check("saddle points at (1,1) and (2,1)", sps == [(0, 0), (1, 0)], ""),
        Line::check("strongly convex", r.strongly_convex, ""),
        Line::check("not weakly hereditary", !r.weakly_hereditary, ""),
    ])
}

fn has_ne_2x2_everywhere(g: &BimatrixGame) -> bool {
    let pairs: Vec<IdSet> = (0..g.rows())
        .flat_map(|i| (i + 1..g.rows()).map(move |j| IdSet::from_ids([i, j])))
        .collect();
    let cpairs: Vec<IdSet> = (0..g.cols())
        .flat_map(|i| (i + 1..g.cols()).map(move |j| IdSet::from_ids([i, j])))
        .collect();
    pairs.iter().all(|&r| cpairs.iter().all(|&c| g.subgame(r, c).expect("in range").has_ne()))
}

fn ne_free_3x3() -> Result<Vec<Line>> {
    let g = BimatrixGame::make_ne_free_3x3();
    let deletions = (0..3).all(|k| g.without_row(k).has_ne() && g.without_col(k).has_ne());
    let w = g.theorem3_check();
    Ok(vec![
        Line::check("satisfies the 3x3 inequality system", g.satisfies_3x3_system(), ""),
        Line::check("NE-free", g.is_ne_free(), ""),
        Line::check("each of the 6 line deletions has a NE", deletions, ""),
        Line::check("each 2x2 subgame has a NE", has_ne_2x2_everywhere(&g), ""),
        Line::check("structural test finds a witness", w.is_some(), format!("{w:?}")),
    ])
}

fn tie_free_game(rng: &mut ChaCha8Rng, k: usize) -> BimatrixGame {
    let perm = |rng: &mut ChaCha8Rng| {
        let mut v: Vec<f64> = (0..k * k).map(|x| x as f64).collect();
        v.shuffle(rng);
        v.chunks(k).map(<[f64]>::to_vec).collect::<Vec<_>>()
    };
    let a = perm(rng);
    let b = perm(rng);
    BimatrixGame::from_rows(a, b).expect("square")
}

fn theorem3(seed: u64) -> Result<Vec<Line>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let games: Vec<BimatrixGame> = (0..1000).map(|i| tie_free_game(&mut rng, 3 + i % 2)).collect();
    let (lm, bad) = games
        .par_iter()
        .map(|g| {
            let brute = g.is_locally_minimal_ne_free();
            (u64::from(brute), u64::from(brute != g.theorem3_check().is_some()))
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    Ok(vec![Line::check(
        "structural test agrees with brute-force local minimality",
        bad == 0,
        format!("1000 tie-free 3x3/4x4 games, {lm} locally minimal NE-free, {bad} disagreements"),
    )])
}

fn zero_sum_scan() -> Result<Vec<Line>> {
    let two = game::zero_sum_lm_scan(2, 3);
    let three = game::zero_sum_lm_scan(3, 3);
    Ok(vec![
        Line::check(
            "2x2 zero-sum games over {0,1,2}: locally minimal NE-free ones exist",
            !two.locally_minimal.is_empty(),
            format!("{} of {}", two.locally_minimal.len(), two.checked),
        ),
        Line::check(
            "no 3x3 zero-sum game over {0,1,2} is locally minimal NE-free",
            three.locally_minimal.is_empty(),
            format!("{} games checked", three.checked),
        ),
    ])
}

fn ne_free_lm_4x4() -> Result<Vec<Line>> {
    let g = game::fixtures::ne_free_lm_4x4();
    let corner = g.subgame(IdSet::from_ids([0, 1]), IdSet::from_ids([0, 1]))?;
    Ok(vec![
        Line::check("locally minimal NE-free", g.is_locally_minimal_ne_free(), ""),
        Line::check("structural test finds a witness", g.theorem3_check().is_some(), ""),
        Line::check("upper-left 2x2 subgame is NE-free, so not a minimum", corner.is_ne_free(), ""),
    ])
}

fn nine_forms() -> Result<Vec<Line>> {
    let mut lines: Vec<Line> = game::fixtures::nine_forms()
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let want = i < 6;
            Line::check(format!("g{} {}", i + 1, if want { "tight" } else { "not tight" }), f.tight() == want, "")
        })
        .collect();
    lines.push(Line::check("g3 totally tight", game::fixtures::g3().is_totally_tight(), ""));
    Ok(lines)
}

/// Smallest row-major relabelling over the four line permutations of a 2×2 form.
fn canonical_2x2(f: &GameForm) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    for (r0, r1) in [(0, 1), (1, 0)] {
        for (c0, c1) in [(0, 1), (1, 0)] {
            let cells = [f.outcome(r0, c0), f.outcome(r0, c1), f.outcome(r1, c0), f.outcome(r1, c1)];
            let mut map = Vec::new();
            let code: Vec<usize> = cells
                .iter()
                .map(|x| match map.iter().position(|y| y == x) {
                    Some(p) => p,
                    None => {
                        map.push(*x);
                        map.len() - 1
                    }
                })
                .collect();
            if best.as_ref().map_or(true, |b| code < *b) {
                best = Some(code);
            }
        }
    }
    best.expect("four permutations")
}

fn not_tight_catalog() -> Result<Vec<Line>> {
    let catalog = game::fixtures::not_tight_catalog();
    let mut lines = Vec::new();
    for (i, f) in catalog.iter().enumerate() {
        let lines_tight = (0..2).all(|k| f.without_row(k).tight() && f.without_col(k).tight());
        lines.push(Line::check(format!("catalog form {} is a minimal not-tight form", i + 1), !f.tight() && lines_tight, ""));
    }
    let wanted: BTreeSet<Vec<usize>> = catalog.iter().map(canonical_2x2).collect();
    let e = Universe::Forms { rows: 2, cols: 2, outcomes: 4 }.enumerate()?;
    let found: BTreeSet<Vec<usize>> = (0..e.len())
        .map(|i| e.get(i))
        .filter_map(|g| g.as_form().filter(|f| !f.tight()).map(canonical_2x2))
        .collect();
    lines.push(Line::check(
        "every not-tight 2x2 form is a catalog form up to line order and renaming",
        found == wanted,
        format!("{} classes found", found.len()),
    ));
    Ok(lines)
}

fn ab_form_4x4() -> Result<Vec<Line>> {
    let g = game::fixtures::ab_form_4x4();
    let pattern = (0..4).all(|k| g.without_row(k).tight() == (k == 3) && g.without_col(k).tight() == (k == 3));
    let two_rows = g.subform(IdSet::from_ids([0, 1]), IdSet::full(4))?.tight();
    let two_cols = g.subform(IdSet::full(4), IdSet::from_ids([0, 1]))?.tight();
    let poset = GroundPoset::new(g.clone(), Order::Line)?;
    let r = classify(&p::not_tight(), &poset)?;
    Ok(vec![
        Line::check("not tight", !g.tight(), ""),
        Line::check("deleting the last row or column makes it tight, any other line does not", pattern, ""),
        Line::check("deleting the last two rows or columns makes it tight", two_rows && two_cols, ""),
        Line::check("so not-tight forms are not weakly hereditary here", !r.weakly_hereditary, ""),
        Line::check("but strongly convex here", r.strongly_convex, ""),
    ])
}

fn tight_lm_4x4() -> Result<Vec<Line>> {
    let g = game::fixtures::tight_lm_4x4();
    let all_break = (0..4).all(|k| !g.without_row(k).tight() && !g.without_col(k).tight());
    Ok(vec![
        Line::check("tight", g.tight(), ""),
        Line::check("every line deletion is not tight", all_break, ""),
        Line::check("so a local minimum of the tight family above the 1x1 minima", g.rows() > 1, ""),
    ])
}

/// Audits `family` on the given universes only.
fn audit_on(family: &str, universes: Vec<Universe>) -> Result<registry::AuditReport> {
    let mut entry = registry::find_family(family)?;
    entry.checks = universes.into_iter().map(Check::classify).collect();
    registry::audit_entry(&entry, &AuditBounds::default())
}

fn not_tight_theorem() -> Result<Vec<Line>> {
    let mut lines = Vec::new();
    for (r, c) in [(3, 3), (3, 4), (4, 4)] {
        let rep = audit_on("not-tight", vec![Universe::Forms { rows: r, cols: c, outcomes: 2 }])?;
        let [_, sc, wh, _] = rep.verdicts;
        lines.push(Line::check(
            format!("two-outcome forms {r}x{c}: strongly convex"),
            sc == Some(true),
            format!("weakly hereditary: {}", wh.map_or("?", yes)),
        ));
        if (r, c) == (4, 4) {
            let witness = rep.parts.iter().find_map(|p| p.witnesses[2].clone()).unwrap_or_default();
            lines.push(Line::check("two-outcome forms 4x4: not weakly hereditary", wh == Some(false), witness));
        }
    }
    Ok(lines)
}

fn minimal_in(g: &DGraph, in_family: impl Fn(&DGraph) -> bool) -> bool {
    in_family(g) && (0..g.n()).all(|v| !in_family(&g.without_vertex(v)))
}

fn pi_delta() -> Result<Vec<Line>> {
    let mut lines = Vec::new();
    for (name, g) in [("Π", dgraph::fixtures::pi()), ("Δ", dgraph::fixtures::delta())] {
        lines.push(Line::check(format!("{name} is CC and minimal CC"), minimal_in(&g, DGraph::is_cc), ""));
        lines.push(Line::check(format!("{name} is not CIS and minimal not CIS"), minimal_in(&g, |h| !h.cis()), ""));
    }
    let two_vertex_cc = (1..=3).any(|d| dgraph::all_dgraphs(2, d).any(|g| g.is_cc()));
    lines.push(Line::check("no 2-vertex d-graph is CC", !two_vertex_cc, ""));
    Ok(lines)
}

fn pi_sub_pi() -> Result<Vec<Line>> {
    let g = dgraph::fixtures::pi_sub_pi();
    let kills: Vec<bool> = (0..3).map(|v| !g.without_vertex(v).is_cc()).collect();
    let poset = GroundPoset::new(g.clone(), Order::Vertex)?;
    let r = classify(&p::cc(), &poset)?;
    Ok(vec![
        Line::check("CC", g.is_cc(), ""),
        Line::check("deleting v1, v2 or v3 destroys CC", kills.iter().all(|&k| k), ""),
        Line::check("CC d-graphs are convex but not strongly convex here", r.convex && !r.strongly_convex, ""),
    ])
}

fn bull() -> Result<Vec<Line>> {
    let b = dgraph::fixtures::bull();
    Ok(vec![
        Line::check("CIS", b.cis(), ""),
        Line::check("deleting the top vertex leaves Π", b.without_vertex(4) == dgraph::fixtures::pi(), ""),
        Line::check("so CIS d-graphs are not hereditary", !b.without_vertex(4).cis(), ""),
    ])
}

fn substituted_bull(g: DGraph, substituted: std::ops::Range<usize>) -> Result<Vec<Line>> {
    let restored: Vec<usize> = substituted.clone().filter(|&v| g.without_vertex(v).cis()).map(|v| v + 1).collect();
    let poset = GroundPoset::new(g.clone(), Order::Vertex)?;
    let r = classify(&p::not_cis(), &poset)?;
    Ok(vec![
        Line::check("not CIS", !g.cis(), format!("{} vertices, {} colours", g.n(), g.d())),
        Line::check(
            "deleting any substituted vertex restores CIS",
            restored.len() == substituted.len(),
            format!("restoring: {restored:?}"),
        ),
        Line::check("not-CIS d-graphs are not strongly convex here", !r.strongly_convex, ""),
    ])
}

fn line_k33() -> Result<Vec<Line>> {
    let g = dgraph::fixtures::line_knn_2graph(3);
    let all = (0..9).all(|v| !g.without_vertex(v).cis());
    Ok(vec![
        Line::check("CIS", g.cis(), ""),
        Line::check("all 9 vertex deletions are not CIS", all, ""),
        Line::check("so a local minimum of the CIS family that is not the null 2-graph", g.n() > 0, ""),
    ])
}

fn dgraph_theorems() -> Result<Vec<Line>> {
    let mut lines = Vec::new();
    for family in ["cc", "not-cis"] {
        let rep = audit_on(family, vec![Universe::Dgraphs { n: 5, d: 3 }])?;
        let classes: Vec<String> = rep.minima_classes().into_iter().collect();
        lines.push(Line::check(
            format!("{family}: minima = local minima = {{Π, Δ}} up to 5 vertices, 3 colours"),
            rep.verdicts[0] == Some(true) && classes == ["Δ", "Π"],
            classes.join(", "),
        ));
    }
    Ok(lines)
}

fn delta_conjecture(budget: u64) -> Result<Vec<Line>> {
    let r = dgraph::fixtures::delta_conjecture_search(6, budget.max(1 << 20));
    let name = "no CIS 3-graph up to 6 vertices contains Δ";
    let detail = format!("{} d-graphs checked", r.checked);
    Ok(vec![if r.complete {
        Line::check(name, r.counterexamples.is_empty(), detail)
    } else {
        Line::undecided(name, detail)
    }])
}
