//! Running registry entries against the engine.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use super::{find_family, Check, Expected, FamilyEntry, MinimaRule, Universe};
use crate::game::sp_free_convexity_scan;
use crate::graph::{find_kernel, DEFAULT_KERNEL_BUDGET};
use crate::poset::{certify_non_convex, classify, FamilyPredicate, GroundPoset, Order, DEFAULT_CAP};
use crate::{Error, Ground, Kind, Result, Search};

pub const PROPERTIES: [&str; 4] = ["convex", "strongly convex", "weakly hereditary", "hereditary"];

/// Largest number of element evaluations a single audit may schedule.
pub const WORK_CAP: u128 = 1 << 36;

const DEFAULT_CERTIFICATE_BUDGET: u64 = 1 << 24;

/// Overrides for the size parameters of an entry's universes. `max` sets the
/// size of the SP-free scan but only lowers the exhaustive matrix, bimatrix and
/// form universes: classifying every 4x4 matrix over three letters is out of reach.
#[derive(Clone, Debug, Default, Serialize)]
pub struct AuditBounds {
    pub n: Option<usize>,
    pub d: Option<usize>,
    pub max: Option<usize>,
    pub alphabet: Option<usize>,
    pub outcomes: Option<usize>,
    /// Per-ground poset cap; larger grounds are skipped and the report is partial.
    pub cap: Option<u128>,
    /// Node budget for certificate searches.
    pub budget: Option<u64>,
}

impl AuditBounds {
    fn apply(&self, check: &Check) -> Check {
        let or = |o: Option<usize>, x: usize| o.unwrap_or(x);
        let below = |x: usize| self.max.map_or(x, |m| m.min(x));
        match check.clone() {
            Check::Classify { universe } => Check::Classify {
                universe: match universe {
                    Universe::Graphs { n } => Universe::Graphs { n: or(self.n, n) },
                    Universe::CompleteGraphs { n } => Universe::CompleteGraphs { n: or(self.n, n) },
                    Universe::Digraphs { n } => Universe::Digraphs { n: or(self.n, n) },
                    Universe::CompleteDigraphs { n } => Universe::CompleteDigraphs { n: or(self.n, n) },
                    Universe::Dgraphs { n, d } => Universe::Dgraphs { n: or(self.n, n), d: or(self.d, d) },
                    Universe::Matrices { rows, cols, alphabet } => Universe::Matrices {
                        rows: below(rows),
                        cols: below(cols),
                        alphabet: or(self.alphabet, alphabet),
                    },
                    Universe::Bimatrices { rows, cols, alphabet } => Universe::Bimatrices {
                        rows: below(rows),
                        cols: below(cols),
                        alphabet: or(self.alphabet, alphabet),
                    },
                    Universe::Forms { rows, cols, outcomes } => Universe::Forms {
                        rows: below(rows),
                        cols: below(cols),
                        outcomes: or(self.outcomes, outcomes),
                    },
                    u @ Universe::Fixture { .. } => u,
                },
            },
            Check::SpFreeConvexityScan { max, alphabet } => Check::SpFreeConvexityScan {
                max: or(self.max, max),
                alphabet: self.alphabet.map_or(alphabet, |a| a as u8),
            },
            c => c,
        }
    }
}

/// Outcome of one check of an entry.
#[derive(Clone, Debug, Serialize)]
pub struct PartReport {
    pub check: String,
    pub grounds: u64,
    /// Grounds whose poset exceeded the cap and were not classified.
    pub skipped: u64,
    /// `None` where this check says nothing about the property.
    pub verdicts: [Option<bool>; 4],
    pub witnesses: [Option<String>; 4],
    /// Labels of the minima seen, when the entry has a minima rule.
    pub minima_classes: Vec<String>,
    pub minima_violation: Option<String>,
    pub undecided: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub property: String,
    pub expected: String,
    pub found: String,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub name: String,
    pub family: String,
    pub kind: Kind,
    pub order: Order,
    pub expected: Expected,
    /// Aggregate over all checks, closed under the implication chain.
    pub verdicts: [Option<bool>; 4],
    pub parts: Vec<PartReport>,
    pub mismatches: Vec<Mismatch>,
    pub partial: bool,
    pub undecided: bool,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && !self.partial && !self.undecided
    }

    pub fn minima_classes(&self) -> BTreeSet<String> {
        self.parts.iter().flat_map(|p| p.minima_classes.iter().cloned()).collect()
    }
}

pub fn audit_family(name: &str, bounds: &AuditBounds) -> Result<AuditReport> {
    audit_entry(&find_family(name)?, bounds)
}

pub fn audit_entry(entry: &FamilyEntry, bounds: &AuditBounds) -> Result<AuditReport> {
    let pred = entry.predicate();
    let checks: Vec<Check> = entry.checks.iter().map(|c| bounds.apply(c)).collect();
    for c in &checks {
        if let Check::Classify { universe } = c {
            let work = estimate_work(universe, entry.order)?;
            if work > WORK_CAP {
                return Err(Error::CapExceeded { count: work, cap: WORK_CAP });
            }
        }
    }
    let parts = checks.iter().map(|c| run_check(entry, &pred, c, bounds)).collect::<Result<Vec<_>>>()?;

    let mut verdicts = [None; 4];
    for k in 0..4 {
        let vs: Vec<bool> = parts.iter().filter_map(|p| p.verdicts[k]).collect();
        if !vs.is_empty() {
            verdicts[k] = Some(vs.iter().all(|&b| b));
        }
    }
    for k in 0..3 {
        if verdicts[k] == Some(false) {
            verdicts[k + 1] = Some(false);
        }
    }
    for k in (1..4).rev() {
        if verdicts[k] == Some(true) && verdicts[k - 1].is_none() {
            verdicts[k - 1] = Some(true);
        }
    }

    let mut mismatches = Vec::new();
    for (k, want) in entry.expected.as_array().iter().enumerate() {
        let Some(want) = want.as_bool() else { continue };
        if verdicts[k] != Some(want) {
            mismatches.push(Mismatch {
                property: PROPERTIES[k].into(),
                expected: want.to_string(),
                found: verdicts[k].map_or("not examined".into(), |b| b.to_string()),
                witness: parts.iter().find_map(|p| p.witnesses[k].clone()),
            });
        }
    }
    if let Some(v) = parts.iter().find_map(|p| p.minima_violation.clone()) {
        mismatches.push(Mismatch {
            property: "minima".into(),
            expected: entry.expected_minima.into(),
            found: "a minimum of another shape".into(),
            witness: Some(v),
        });
    }
    Ok(AuditReport {
        name: entry.name.into(),
        family: entry.family.into(),
        kind: entry.kind,
        order: entry.order,
        expected: entry.expected,
        verdicts,
        partial: parts.iter().any(|p| p.skipped > 0),
        undecided: parts.iter().any(|p| p.undecided),
        parts,
        mismatches,
    })
}

fn estimate_work(universe: &Universe, order: Order) -> Result<u128> {
    let e = universe.enumerate()?;
    if e.is_empty() {
        return Ok(0);
    }
    let largest = GroundPoset::new(e.get(e.len() - 1), order)?.element_count();
    Ok((e.len() as u128).saturating_mul(largest))
}

fn run_check(entry: &FamilyEntry, pred: &FamilyPredicate, check: &Check, bounds: &AuditBounds) -> Result<PartReport> {
    let mut part = PartReport {
        check: check.describe(),
        grounds: 1,
        skipped: 0,
        verdicts: [None; 4],
        witnesses: Default::default(),
        minima_classes: Vec::new(),
        minima_violation: None,
        undecided: false,
    };
    let budget = bounds.budget.unwrap_or(DEFAULT_CERTIFICATE_BUDGET);
    match check {
        Check::Classify { universe } => {
            let cap = bounds.cap.unwrap_or(DEFAULT_CAP);
            return classify_universe(entry, pred, universe, cap, part);
        }
        Check::NonConvexCertificate { fixture } => {
            let poset = GroundPoset::new(super::fixture(fixture)?, entry.order)?;
            match certify_non_convex(pred, &poset, &poset.full(), budget)? {
                Search::Decided(Some(cert)) => {
                    part.verdicts = [Some(false); 4];
                    part.witnesses[0] = Some(format!(
                        "{}: the whole ground is a local minimum and {} is a smaller member",
                        fixture,
                        poset.describe(&cert.smaller_member)
                    ));
                }
                Search::Decided(None) => {
                    part.witnesses[0] = Some(format!("{fixture}: the whole ground is not a non-minimal local minimum"));
                }
                Search::Undecided { .. } => part.undecided = true,
            }
        }
        Check::KernelArcCertificate { fixture } => {
            let g = super::fixture(fixture)?;
            let d = g.as_digraph().ok_or(Error::OrderMismatch { order: "edge", kind: g.kind().name() })?;
            let decided = |d: &crate::graph::Digraph| find_kernel(d, budget.max(DEFAULT_KERNEL_BUDGET));
            let whole = decided(d);
            let deletions: Vec<_> = d.arcs().par_iter().map(|&(u, v)| decided(&d.without_arc(u, v))).collect();
            let n = d.n();
            let cycle: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            let spanning = cycle.iter().all(|&(u, v)| d.has_arc(u, v));
            let below = crate::graph::Digraph::from_arcs(n, &cycle)?;
            let smaller = decided(&below);
            if [&whole, &smaller].iter().any(|s| matches!(s, Search::Undecided { .. }))
                || deletions.iter().any(|s| matches!(s, Search::Undecided { .. }))
            {
                part.undecided = true;
            } else if whole == Search::Decided(None)
                && deletions.iter().all(|s| matches!(s, Search::Decided(Some(_))))
                && spanning
                && smaller == Search::Decided(None)
            {
                part.verdicts = [Some(false); 4];
                part.witnesses[0] = Some(format!(
                    "{fixture}: kernel-less, all {} arc deletions have a kernel, and the spanning cycle i -> i+1 is kernel-less",
                    deletions.len()
                ));
            } else {
                part.witnesses[0] = Some(format!("{fixture}: certificate does not hold"));
            }
        }
        Check::SpFreeConvexityScan { max, alphabet } => {
            let scan = sp_free_convexity_scan(*max, *alphabet);
            part.grounds = scan.checked;
            part.verdicts[0] = Some(scan.convex());
            if !scan.convex() {
                part.verdicts = [Some(false); 4];
                part.witnesses[0] = Some(format!("locally minimal SP-free matrix {:?}", scan.counterexample.unwrap()));
            }
        }
    }
    Ok(part)
}

#[derive(Default)]
struct Acc {
    fails: [Option<(u64, String)>; 4],
    violation: Option<(u64, String)>,
    classes: BTreeSet<String>,
    skipped: u64,
}

fn first(a: Option<(u64, String)>, b: Option<(u64, String)>) -> Option<(u64, String)> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if x.0 <= y.0 { x } else { y }),
        (x, None) => x,
        (None, y) => y,
    }
}

impl Acc {
    fn merge(mut self, o: Acc) -> Acc {
        for k in 0..4 {
            self.fails[k] = first(self.fails[k].take(), o.fails[k].clone());
        }
        self.violation = first(self.violation.take(), o.violation);
        self.classes.extend(o.classes);
        self.skipped += o.skipped;
        self
    }
}

fn classify_universe(
    entry: &FamilyEntry,
    pred: &FamilyPredicate,
    universe: &Universe,
    cap: u128,
    mut part: PartReport,
) -> Result<PartReport> {
    let e = universe.enumerate()?;
    let acc = (0..e.len())
        .into_par_iter()
        .map(|i| classify_ground(i, e.get(i), entry.order, entry.minima_rule, pred, cap))
        .collect::<Result<Vec<Acc>>>()?
        .into_iter()
        .fold(Acc::default(), Acc::merge);
    part.grounds = e.len();
    part.skipped = acc.skipped;
    for k in 0..4 {
        part.verdicts[k] = Some(acc.fails[k].is_none());
        part.witnesses[k] = acc.fails[k].as_ref().map(|w| w.1.clone());
    }
    part.minima_classes = acc.classes.into_iter().collect();
    part.minima_violation = acc.violation.map(|v| v.1);
    Ok(part)
}

fn classify_ground(
    index: u64,
    ground: Ground,
    order: Order,
    rule: Option<MinimaRule>,
    pred: &FamilyPredicate,
    cap: u128,
) -> Result<Acc> {
    let mut acc = Acc::default();
    let poset = GroundPoset::new(ground, order)?.with_cap(cap);
    if poset.check_cap().is_err() {
        acc.skipped = 1;
        return Ok(acc);
    }
    let report = classify(pred, &poset)?;
    let on = poset.ground().describe();
    let d = |e| poset.describe(e);
    let w = &report.witnesses;
    let texts = [
        w.convex.as_ref().map(|l| format!("{on}: {} is a local minimum but not a minimum", d(l))),
        w.strongly_convex.as_ref().map(|(f, m)| {
            format!("{on}: no member covered by {} lies above the minimum {}", d(f), d(m))
        }),
        w.weakly_hereditary.as_ref().map(|(f, p, m)| {
            format!("{on}: {} > {} >= {} with the middle element outside the family", d(f), d(p), d(m))
        }),
        w.hereditary.as_ref().map(|(f, p)| format!("{on}: {} covers {} which is outside the family", d(f), d(p))),
    ];
    for (k, t) in texts.into_iter().enumerate() {
        acc.fails[k] = t.map(|t| (index, t));
    }
    if let Some(rule) = rule {
        for m in &report.minima {
            match rule.classify(poset.ground(), m) {
                Some(label) => {
                    acc.classes.insert(label);
                }
                None => {
                    acc.violation = Some((index, format!("{on}: minimum {}", d(m))));
                    break;
                }
            }
        }
    }
    Ok(acc)
}
