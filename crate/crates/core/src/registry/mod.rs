//! Catalogue of (family, order) pairs with their expected classification and
//! the universe on which each is audited.

mod audit;
mod universe;

use serde::Serialize;

use crate::dgraph::DGraph;
use crate::game::GameForm;
use crate::graph::{self, Digraph, Graph};
use crate::poset::{FamilyPredicate, Order, PosetElement};
use crate::{Error, Ground, Kind, Result};

pub use audit::{audit_entry, audit_family, AuditBounds, AuditReport, Mismatch, PartReport, PROPERTIES};
pub use universe::{complete_digraph, fixture, Enumeration, Universe, FIXTURES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    Holds,
    Fails,
    /// Not checked against the engine; carries the claimed value, if any.
    Unverified(Option<bool>),
}

impl Expectation {
    pub fn as_bool(self) -> Option<bool> {
        match self {
            Expectation::Holds => Some(true),
            Expectation::Fails => Some(false),
            Expectation::Unverified(_) => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub convex: Expectation,
    pub strongly_convex: Expectation,
    pub weakly_hereditary: Expectation,
    pub hereditary: Expectation,
}

impl Expected {
    pub fn as_array(&self) -> [Expectation; 4] {
        [self.convex, self.strongly_convex, self.weakly_hereditary, self.hereditary]
    }

    /// Hereditary ⇒ weakly hereditary ⇒ strongly convex ⇒ convex.
    pub fn respects_chain(&self) -> bool {
        let v = self.as_array();
        (0..3).all(|i| v[i + 1] != Expectation::Holds || v[i] == Expectation::Holds)
            && (0..3).all(|i| v[i] != Expectation::Fails || v[i + 1] == Expectation::Fails)
    }
}

/// How a minimum of the family must look.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MinimaRule {
    /// The empty element.
    Empty,
    SpanningTree,
    NonAdjacentPair,
    OddHoleOrAntihole,
    OddHolePlusIsolated,
    PiOrDelta,
    OneByOne,
    SpFree2x2,
    NotTight2x2,
}

impl MinimaRule {
    /// Class label of a conforming minimum, `None` when it breaks the rule.
    pub fn classify(self, ground: &Ground, elem: &PosetElement) -> Option<String> {
        let sub = ground.materialize(elem).ok()?;
        match self {
            MinimaRule::Empty => (elem.size() == 0).then(|| "empty".into()),
            MinimaRule::SpanningTree => {
                let g = sub.as_graph()?;
                (g.is_connected() && g.edge_count() + 1 == g.n()).then(|| "spanning tree".into())
            }
            MinimaRule::NonAdjacentPair => {
                let g = sub.as_graph()?;
                (g.n() == 2 && g.edge_count() == 0).then(|| "non-adjacent pair".into())
            }
            MinimaRule::OddHoleOrAntihole => {
                let g = sub.as_graph()?;
                if g.n() < 5 || g.n() % 2 == 0 {
                    None
                } else if g.is_cycle() {
                    Some(format!("C{}", g.n()))
                } else if g.complement().is_cycle() {
                    Some(format!("antihole C{}", g.n()))
                } else {
                    None
                }
            }
            MinimaRule::OddHolePlusIsolated => {
                let g = sub.as_graph()?;
                let support: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
                let k = support.len();
                let hole = g.induced_subgraph(crate::IdSet::from_ids(support)).ok()?;
                (k >= 5 && k % 2 == 1 && hole.is_cycle()).then(|| format!("C{k} + {} isolated", g.n() - k))
            }
            MinimaRule::PiOrDelta => {
                let g: &DGraph = sub.as_dgraph()?;
                match g.n() {
                    4 if g.contains_pi().is_some() => Some("Π".into()),
                    3 if g.contains_delta().is_some() => Some("Δ".into()),
                    _ => None,
                }
            }
            MinimaRule::OneByOne => (sub.shape() == (1, 1)).then(|| "1x1".into()),
            MinimaRule::SpFree2x2 => {
                let m = sub.as_matrix()?;
                m.is_sp_free_2x2().ok()?.then(|| "SP-free 2x2".into())
            }
            MinimaRule::NotTight2x2 => {
                let f: &GameForm = sub.as_form()?;
                f.not_tight_2x2_type().ok()?.map(|t| format!("{t:?}").to_lowercase())
            }
        }
    }
}

/// How an entry is checked on its universe.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "check", rename_all = "kebab-case")]
pub enum Check {
    /// Full classification of every ground.
    Classify { universe: Universe },
    /// The whole fixture is a local minimum with a smaller member below it.
    NonConvexCertificate { fixture: String },
    /// Kernel-lessness of a digraph too large for the generic poset: the
    /// digraph is kernel-less, every arc deletion has a kernel, and the
    /// spanning cycle of its first generator is a smaller kernel-less member.
    KernelArcCertificate { fixture: String },
    /// Local minima of the SP-free family over all small matrices.
    SpFreeConvexityScan { max: usize, alphabet: u8 },
}

impl Check {
    pub fn classify(universe: Universe) -> Self {
        Check::Classify { universe }
    }

    pub fn describe(&self) -> String {
        match self {
            Check::Classify { universe } => universe.describe(),
            Check::NonConvexCertificate { fixture } => format!("fixture {fixture} (local-minimum certificate)"),
            Check::KernelArcCertificate { fixture } => format!("fixture {fixture} (arc-deletion certificate)"),
            Check::SpFreeConvexityScan { max, alphabet } => {
                format!("all matrices up to {max}x{max} over {{0..{}}} (local-minimum scan)", alphabet - 1)
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyEntry {
    pub name: &'static str,
    pub family: &'static str,
    pub kind: Kind,
    pub order: Order,
    pub expected: Expected,
    pub expected_minima: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minima_rule: Option<MinimaRule>,
    /// Phrase from the source text that states the classification.
    pub anchor: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
    pub checks: Vec<Check>,
    #[serde(skip)]
    predicate: fn() -> FamilyPredicate,
}

impl FamilyEntry {
    pub fn predicate(&self) -> FamilyPredicate {
        (self.predicate)()
    }
}

fn graphs(name: &'static str, f: fn(&Graph) -> bool) -> FamilyPredicate {
    FamilyPredicate::graphs(name, f)
}

fn digraphs(name: &'static str, f: fn(&Digraph) -> bool) -> FamilyPredicate {
    FamilyPredicate::digraphs(name, f)
}

fn ternary(g: &Graph) -> bool {
    graph::is_ternary(g).unwrap_or(false)
}

fn chi_eq_omega(g: &Graph) -> bool {
    graph::chromatic_number(g).ok() == graph::clique_number(g).ok()
}

fn kernel_less(d: &Digraph) -> bool {
    matches!(graph::find_kernel(d, graph::DEFAULT_KERNEL_BUDGET), crate::Search::Decided(None))
}

fn kernel_having(d: &Digraph) -> bool {
    matches!(graph::find_kernel(d, graph::DEFAULT_KERNEL_BUDGET), crate::Search::Decided(Some(_)))
}

fn pi_delta_free(g: &DGraph) -> bool {
    g.contains_pi().is_none() && g.contains_delta().is_none()
}

pub mod predicates {
    //! Family predicates shared by the registry and the CLI.
    use super::*;

    pub fn connected() -> FamilyPredicate {
        graphs("connected", Graph::is_connected)
    }
    pub fn disconnected() -> FamilyPredicate {
        graphs("disconnected", |g| !g.is_connected())
    }
    pub fn strongly_connected() -> FamilyPredicate {
        digraphs("strongly connected", Digraph::is_strongly_connected)
    }
    pub fn not_strongly_connected() -> FamilyPredicate {
        digraphs("not strongly connected", |d| !d.is_strongly_connected())
    }
    pub fn ternary() -> FamilyPredicate {
        graphs("ternary", super::ternary)
    }
    pub fn non_ternary() -> FamilyPredicate {
        graphs("non-ternary", |g| !super::ternary(g))
    }
    pub fn perfect() -> FamilyPredicate {
        graphs("perfect", graph::is_perfect_spgt)
    }
    pub fn imperfect() -> FamilyPredicate {
        graphs("imperfect", |g| !graph::is_perfect_spgt(g))
    }
    pub fn chi_eq_omega() -> FamilyPredicate {
        graphs("chi = omega", super::chi_eq_omega)
    }
    pub fn chi_gt_omega() -> FamilyPredicate {
        graphs("chi > omega", |g| !super::chi_eq_omega(g))
    }
    pub fn kernel_less() -> FamilyPredicate {
        digraphs("kernel-less", super::kernel_less)
    }
    pub fn kernel_having() -> FamilyPredicate {
        digraphs("with a kernel", super::kernel_having)
    }
    pub fn cc() -> FamilyPredicate {
        FamilyPredicate::dgraphs("CC", DGraph::is_cc)
    }
    pub fn not_cc() -> FamilyPredicate {
        FamilyPredicate::dgraphs("not CC", |g| !g.is_cc())
    }
    pub fn cis() -> FamilyPredicate {
        FamilyPredicate::dgraphs("CIS", DGraph::cis)
    }
    pub fn not_cis() -> FamilyPredicate {
        FamilyPredicate::dgraphs("not CIS", |g| !g.cis())
    }
    pub fn pi_delta_free() -> FamilyPredicate {
        FamilyPredicate::dgraphs("Π- and Δ-free", super::pi_delta_free)
    }
    pub fn sp_free() -> FamilyPredicate {
        FamilyPredicate::matrices("SP-free", |m| !m.is_empty() && !m.has_sp())
    }
    pub fn with_sp() -> FamilyPredicate {
        FamilyPredicate::matrices("with SP", |m| !m.is_empty() && m.has_sp())
    }
    pub fn absolutely_determined() -> FamilyPredicate {
        FamilyPredicate::matrices("absolutely determined", |m| m.is_absolutely_determined())
    }
    pub fn ne_free() -> FamilyPredicate {
        FamilyPredicate::bimatrices("NE-free", |g| g.is_ne_free())
    }
    pub fn with_ne() -> FamilyPredicate {
        FamilyPredicate::bimatrices("with NE", |g| !g.is_empty() && g.has_ne())
    }
    pub fn tight() -> FamilyPredicate {
        FamilyPredicate::forms("tight", |f| f.tight())
    }
    pub fn not_tight() -> FamilyPredicate {
        FamilyPredicate::forms("not tight", |f| !f.is_empty() && !f.tight())
    }
    pub fn totally_tight() -> FamilyPredicate {
        FamilyPredicate::forms("totally tight", |f| f.is_totally_tight())
    }
    pub fn not_totally_tight() -> FamilyPredicate {
        FamilyPredicate::forms("not totally tight", |f| !f.is_empty() && !f.is_totally_tight())
    }
}

use Expectation::{Fails as F, Holds as H};

const U: Expectation = Expectation::Unverified(None);
const UF: Expectation = Expectation::Unverified(Some(false));

const fn exp(c: Expectation, s: Expectation, w: Expectation, h: Expectation) -> Expected {
    Expected { convex: c, strongly_convex: s, weakly_hereditary: w, hereditary: h }
}

const HEREDITARY: Expected = exp(H, H, H, H);
const WEAKLY: Expected = exp(H, H, H, F);
const STRONGLY: Expected = exp(H, H, F, F);
const CONVEX_ONLY: Expected = exp(H, F, F, F);
const NOT_CONVEX: Expected = exp(F, F, F, F);

struct Row {
    name: &'static str,
    family: &'static str,
    kind: Kind,
    order: Order,
    expected: Expected,
    minima: &'static str,
    rule: Option<MinimaRule>,
    anchor: &'static str,
    note: Option<&'static str>,
    checks: Vec<Check>,
    predicate: fn() -> FamilyPredicate,
}

fn fx(name: &str) -> Check {
    Check::classify(Universe::fixture(name))
}

fn rows() -> Vec<Row> {
    use predicates as p;
    use Kind::*;
    use MinimaRule as R;
    use Order::{Edge, Line, Vertex};
    let graphs6 = || Check::classify(Universe::Graphs { n: 6 });
    let complete6 = || Check::classify(Universe::CompleteGraphs { n: 6 });
    let digraphs4 = || Check::classify(Universe::Digraphs { n: 4 });
    let complete_di4 = || Check::classify(Universe::CompleteDigraphs { n: 4 });
    let dgraphs53 = || Check::classify(Universe::Dgraphs { n: 5, d: 3 });
    let matrices33 = || Check::classify(Universe::Matrices { rows: 3, cols: 3, alphabet: 3 });
    let forms33 = |k| Check::classify(Universe::Forms { rows: 3, cols: 3, outcomes: k });
    macro_rules! row {
        ($name:expr, $family:expr, $kind:expr, $order:expr, $exp:expr, $min:expr, $rule:expr, $anchor:expr, $note:expr, [$($c:expr),* $(,)?], $pred:expr) => {
            Row { name: $name, family: $family, kind: $kind, order: $order, expected: $exp, minima: $min,
                   rule: $rule, anchor: $anchor, note: $note, checks: vec![$($c),*], predicate: $pred }
        };
    }
    vec![
        row!("connected-vertex", "connected graphs", Graph, Vertex, STRONGLY,
            "the null graph", Some(R::Empty),
            r"of all connected induced subgraphs of a given graph", None,
            [graphs6()], p::connected),
        row!("connected-edge", "connected graphs", Graph, Edge, WEAKLY,
            "spanning trees", Some(R::SpanningTree),
            r"all spanning trees of $G$ are in $\mathcal{F}$", None,
            [complete6()], p::connected),
        row!("disconnected-vertex", "disconnected graphs", Graph, Vertex, STRONGLY,
            "pairs of non-adjacent vertices", Some(R::NonAdjacentPair),
            r"This property means that $\mathcal{F}$ is strongly convex.", None,
            [graphs6()], p::disconnected),
        row!("disconnected-edge", "disconnected graphs", Graph, Edge, HEREDITARY,
            "the edgeless graph", Some(R::Empty),
            r"family $\mathcal{F}$ has a unique minimum", None,
            [complete6()], p::disconnected),
        row!("strongly-connected-vertex", "strongly connected digraphs", Digraph, Vertex, NOT_CONVEX,
            "the null digraph", Some(R::Empty),
            r"two directed cycles of length at least 3 each sharing a unique vertex", None,
            [digraphs4(), fx("two-triangles")], p::strongly_connected),
        row!("strongly-connected-edge", "strongly connected digraphs", Digraph, Edge, WEAKLY,
            "minimal strongly connected spanning subdigraphs", None,
            "family is weakly hereditary but not hereditary", None,
            [complete_di4()], p::strongly_connected),
        row!("not-strongly-connected-vertex", "digraphs that are not strongly connected", Digraph, Vertex, STRONGLY,
            "two vertices with at most one arc", None,
            "strongly convex but not weakly hereditary", None,
            [digraphs4()], p::not_strongly_connected),
        row!("not-strongly-connected-edge", "digraphs that are not strongly connected", Digraph, Edge, HEREDITARY,
            "the arcless digraph", Some(R::Empty),
            r"all these subgraphs are not SC whenever $G$ is not SC", None,
            [complete_di4()], p::not_strongly_connected),
        row!("ternary-vertex", "ternary graphs", Graph, Vertex, HEREDITARY,
            "the null graph", Some(R::Empty),
            r"of ternary graphs is hereditary in order $\succ_V$", None,
            [graphs6()], p::ternary),
        row!("ternary-edge", "ternary graphs", Graph, Edge, NOT_CONVEX,
            "the edgeless graph", None,
            r"is not even convex, as the following example shows", None,
            [Check::NonConvexCertificate { fixture: "wrochna".into() }], p::ternary),
        row!("non-ternary-vertex", "non-ternary graphs", Graph, Vertex, WEAKLY,
            "induced cycles of length divisible by 3", None,
            r"family $\mathcal{F}(G)$ is weakly hereditary but not hereditary.", None,
            [graphs6()], p::non_ternary),
        row!("non-ternary-edge", "non-ternary graphs", Graph, Edge, WEAKLY,
            "a cycle of length divisible by 3 plus isolated vertices", None,
            r"by Lemma \ref{WH}, family $\mathcal{F}(G)$ is weakly hereditary.",
            Some("disputed: weak heredity fails on 6 vertices, a ternary graph sits between a non-ternary graph and a 6-cycle it contains"),
            [complete6()], p::non_ternary),
        row!("perfect-vertex", "perfect graphs", Graph, Vertex, HEREDITARY,
            "the null graph", Some(R::Empty),
            r"the family of perfect graphs is hereditary", None,
            [graphs6()], p::perfect),
        row!("perfect-edge", "perfect graphs", Graph, Edge, exp(UF, UF, UF, UF),
            "the edgeless graph", Some(R::Empty),
            r"of perfect graphs in order $\succ_E$, is not convex",
            Some("claimed not convex; the witnesses are critically perfect graphs whose construction lies outside this library"),
            [complete6()], p::perfect),
        row!("imperfect-vertex", "imperfect graphs", Graph, Vertex, WEAKLY,
            "odd holes and odd antiholes", Some(R::OddHoleOrAntihole),
            r"are minimal imperfect graphs in order $\succ_V$", None,
            [graphs6()], p::imperfect),
        row!("imperfect-edge", "imperfect graphs", Graph, Edge, WEAKLY,
            "an odd hole plus isolated vertices", Some(R::OddHolePlusIsolated),
            r"He proved that it is convex",
            Some("disputed: weak heredity fails, the 5-wheel contains C5 plus an isolated vertex but some intermediate edge-subgraph is perfect"),
            [complete6()], p::imperfect),
        row!("chi-eq-omega-vertex", "graphs with chi = omega", Graph, Vertex, exp(H, U, U, F),
            "the null graph", Some(R::Empty),
            r"in other words, both families are convex",
            Some("strong convexity and weak heredity are not stated"),
            [graphs6()], p::chi_eq_omega),
        row!("chi-eq-omega-edge", "graphs with chi = omega", Graph, Edge, exp(H, U, U, F),
            "the edgeless graph", Some(R::Empty),
            r"in other words, both families are convex",
            Some("strong convexity and weak heredity are not stated"),
            [complete6()], p::chi_eq_omega),
        row!("chi-gt-omega-vertex", "graphs with chi > omega", Graph, Vertex, NOT_CONVEX,
            "odd holes and odd antiholes; local minima are the partitionable graphs", None,
            r"Thus, the considered family is not convex.", None,
            [graphs6(), fx("web-10-2")], p::chi_gt_omega),
        row!("chi-gt-omega-edge", "graphs with chi > omega", Graph, Edge, WEAKLY,
            "an odd hole plus isolated vertices", Some(R::OddHolePlusIsolated),
            r"the corresponding family $\mathcal{F}$ is weakly hereditary",
            Some("disputed: not even convex, the 5-wheel has chi > omega but loses it under every edge deletion"),
            [complete6()], p::chi_gt_omega),
        row!("kernel-less-vertex", "kernel-less subdigraphs", Digraph, Vertex, NOT_CONVEX,
            "minimal kernel-less induced subdigraphs, e.g. the directed triangle on 1, 2, 9", None,
            r"In this case also family $\mathcal{F}$ of the kernel-less digraphs is not convex.", None,
            [fx("g16")], p::kernel_less),
        row!("kernel-less-edge", "kernel-less subdigraphs", Digraph, Edge, NOT_CONVEX,
            "odd directed cycles plus isolated vertices", None,
            r"a locally minimal but not minimal kernel-free digraph", None,
            [Check::KernelArcCertificate { fixture: "g43".into() }], p::kernel_less),
        row!("kernel-vertex", "digraphs with a kernel", Digraph, Vertex, STRONGLY,
            "the null digraph", Some(R::Empty),
            "strongly convex but not weakly hereditary", None,
            [digraphs4()], p::kernel_having),
        row!("kernel-edge", "digraphs with a kernel", Digraph, Edge, STRONGLY,
            "the arcless digraph", Some(R::Empty),
            "strongly convex but not weakly hereditary", None,
            [complete_di4()], p::kernel_having),
        row!("cc", "CC d-graphs", Dgraph, Vertex, CONVEX_ONLY,
            "Π and Δ", Some(R::PiOrDelta),
            r"of CC $d$-graphs is convex and", None,
            [dgraphs53(), fx("pi-sub-pi")], p::cc),
        row!("not-cc", "d-graphs that are not CC", Dgraph, Vertex, STRONGLY,
            "the null d-graph", Some(R::Empty),
            "strongly convex but not weakly hereditary", None,
            [dgraphs53()], p::not_cc),
        row!("cis", "CIS d-graphs", Dgraph, Vertex, NOT_CONVEX,
            "the null d-graph", Some(R::Empty),
            r"family $\mathcal{F}_2^{CIS}$ is not even convex", None,
            [fx("line-k33"), fx("bull")], p::cis),
        row!("not-cis", "d-graphs that are not CIS", Dgraph, Vertex, CONVEX_ONLY,
            "Π and Δ", Some(R::PiOrDelta),
            r"of not CIS $d$-graphs is convex and", None,
            [dgraphs53(), fx("bull-sub-pi"), fx("bull-sub-delta")], p::not_cis),
        row!("pi-delta-free", "Π- and Δ-free d-graphs", Dgraph, Vertex, HEREDITARY,
            "the null d-graph", Some(R::Empty),
            r"$\Delta$-free $d$-graphs is hereditary", None,
            [dgraphs53()], p::pi_delta_free),
        row!("sp-free", "SP-free matrices", Matrix, Line, CONVEX_ONLY,
            "SP-free 2x2 matrices", Some(R::SpFree2x2),
            r"family $\mathcal{F}$ is convex. Yet, it is not strongly convex", None,
            [Check::SpFreeConvexityScan { max: 4, alphabet: 3 }, matrices33(), fx("sp-4x4")], p::sp_free),
        row!("with-sp", "matrices with a saddle point", Matrix, Line, STRONGLY,
            "1x1 matrices", Some(R::OneByOne),
            r"However, family $\mathcal{F}(M)$ is not weakly hereditary.", None,
            [matrices33(), fx("two-sp-2x3")], p::with_sp),
        row!("absolutely-determined", "absolutely determined matrices", Matrix, Line, HEREDITARY,
            "the empty matrix", Some(R::Empty),
            r"By definition the considered family is hereditary.", None,
            [matrices33()], p::absolutely_determined),
        row!("ne-free", "NE-free bimatrix games", Bimatrix, Line, NOT_CONVEX,
            "NE-free games all of whose proper subgames have a NE", None,
            r"Thus, the family of NE-free bibatrix games is not convex.", None,
            [fx("ne-free-3x3"), fx("ne-free-lm-4x4")], p::ne_free),
        row!("with-ne", "bimatrix games with a NE", Bimatrix, Line, exp(H, H, H, F),
            "1x1 games", Some(R::OneByOne),
            "This family is weakly hereditary",
            Some("disputed: weak heredity fails on the zero-sum form of the 2x3 matrix with two saddle points"),
            [Check::classify(Universe::Bimatrices { rows: 2, cols: 2, alphabet: 3 }), fx("two-sp-2x3-zero-sum")],
            p::with_ne),
        row!("tight", "tight game forms", Gameform, Line, NOT_CONVEX,
            "1x1 game forms", Some(R::OneByOne),
            r"the family $\mathcal{F}$ of tight game forms is not convex", None,
            [forms33(3), fx("tight-lm-4x4")], p::tight),
        row!("not-tight", "game forms that are not tight", Gameform, Line, STRONGLY,
            "the three 2x2 forms without a constant line", Some(R::NotTight2x2),
            "strongly convex but not weakly hereditary", None,
            [forms33(4),
             Check::classify(Universe::Forms { rows: 3, cols: 4, outcomes: 2 }),
             Check::classify(Universe::Forms { rows: 4, cols: 4, outcomes: 2 }),
             fx("ab-form-4x4")],
            p::not_tight),
        row!("totally-tight", "totally tight game forms", Gameform, Line, HEREDITARY,
            "the empty form", Some(R::Empty),
            "this family is hereditary", None,
            [forms33(3)], p::totally_tight),
        row!("not-totally-tight", "game forms that are not totally tight", Gameform, Line, WEAKLY,
            "the three 2x2 forms without a constant line", Some(R::NotTight2x2),
            "weakly hereditary. Obviously, it is not hereditary", None,
            [forms33(3)], p::not_totally_tight),
    ]
}

pub fn list_families() -> Vec<FamilyEntry> {
    rows()
        .into_iter()
        .map(|s| FamilyEntry {
            name: s.name,
            family: s.family,
            kind: s.kind,
            order: s.order,
            expected: s.expected,
            expected_minima: s.minima,
            minima_rule: s.rule,
            anchor: s.anchor,
            note: s.note,
            checks: s.checks,
            predicate: s.predicate,
        })
        .collect()
}

pub fn find_family(name: &str) -> Result<FamilyEntry> {
    let all = list_families();
    let valid = all.iter().map(|e| e.name).collect::<Vec<_>>().join(", ");
    all.into_iter().find(|e| e.name == name).ok_or(Error::Unknown { name: name.to_string(), valid })
}

/// The registry as the JSON document shipped in `data/registry.json`.
pub fn registry_json() -> String {
    serde_json::to_string_pretty(&list_families()).expect("serialisable") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries_are_consistent() {
        let all = list_families();
        assert!(all.len() >= 28);
        let mut names: Vec<_> = all.iter().map(|e| e.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), all.len());
        for e in &all {
            assert!(e.expected.respects_chain(), "{}", e.name);
            assert!(e.kind.admits(e.order), "{}", e.name);
            let unverified = e.expected.as_array().iter().any(|x| matches!(x, Expectation::Unverified(_)));
            assert!(!unverified || e.note.is_some(), "{}: unverified entries carry a note", e.name);
        }
    }

    #[test]
    fn golden_file_matches() {
        let golden = include_str!("../../data/registry.json");
        assert_eq!(golden, registry_json(), "regenerate with `cargo run --example registry_dump`");
    }
}
