//! Finite containment posets over a ground object and the four structural
//! properties of a family inside them.
//!
//! An element is a subset of the ground's atoms: vertices (vertex order),
//! edges or arcs (edge order), or rows and columns (line order). Internally an
//! element is an atom mask; in line order rows come first, then columns, and
//! every mask with no row or no column collapses to the empty element `0`.
//!
//! Classification evaluates the predicate once per element (in parallel) and
//! then runs a few linear passes over the mask table. Witnesses are the
//! smallest violating elements under [`PosetElement`]'s ordering, so reports
//! do not depend on evaluation order.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::ground::Ground;
use crate::{Error, IdSet, Result, Search};

/// Default limit on the number of poset elements.
pub const DEFAULT_CAP: u128 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Order {
    Vertex,
    Edge,
    Line,
}

impl Order {
    pub fn name(self) -> &'static str {
        match self {
            Order::Vertex => "vertex",
            Order::Edge => "edge",
            Order::Line => "line",
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Order {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vertex" | "V" => Ok(Order::Vertex),
            "edge" | "E" => Ok(Order::Edge),
            "line" => Ok(Order::Line),
            _ => Err(Error::Unknown { name: s.into(), valid: "vertex, edge, line".into() }),
        }
    }
}

/// A subobject of the ground. Ordering is by the sorted id sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum PosetElement {
    VertexSubset { vertices: IdSet },
    /// `vertices` is always the ground's full vertex set.
    EdgeSubset { vertices: IdSet, edges: IdSet },
    /// Either both sets are empty or neither is.
    LineSubset { rows: IdSet, cols: IdSet },
}

impl PosetElement {
    pub fn order(&self) -> Order {
        match self {
            PosetElement::VertexSubset { .. } => Order::Vertex,
            PosetElement::EdgeSubset { .. } => Order::Edge,
            PosetElement::LineSubset { .. } => Order::Line,
        }
    }

    pub fn vertices(vertices: IdSet) -> Self {
        PosetElement::VertexSubset { vertices }
    }

    /// Line subset, collapsed to the empty element if either side is empty.
    pub fn lines(rows: IdSet, cols: IdSet) -> Self {
        if rows.is_empty() || cols.is_empty() {
            PosetElement::LineSubset { rows: IdSet::empty(), cols: IdSet::empty() }
        } else {
            PosetElement::LineSubset { rows, cols }
        }
    }

    /// Number of atoms (vertices, edges, or rows plus columns).
    pub fn size(&self) -> usize {
        match self {
            PosetElement::VertexSubset { vertices } => vertices.len(),
            PosetElement::EdgeSubset { edges, .. } => edges.len(),
            PosetElement::LineSubset { rows, cols } => rows.len() + cols.len(),
        }
    }
}

/// Family membership test. Must be deterministic and free of side effects.
#[derive(Clone)]
pub struct FamilyPredicate {
    name: String,
    eval: Arc<dyn Fn(&Ground, &PosetElement) -> bool + Send + Sync>,
}

impl fmt::Debug for FamilyPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FamilyPredicate").field("name", &self.name).finish()
    }
}

macro_rules! subobject_predicate {
    ($fn_name:ident, $ty:ty, $accessor:ident) => {
        /// Predicate on the materialised subobject; false on grounds of another kind.
        pub fn $fn_name(name: impl Into<String>, f: impl Fn(&$ty) -> bool + Send + Sync + 'static) -> Self {
            Self::on_subobject(name, move |sub| sub.$accessor().is_some_and(&f))
        }
    };
}

impl FamilyPredicate {
    pub fn new(
        name: impl Into<String>,
        eval: impl Fn(&Ground, &PosetElement) -> bool + Send + Sync + 'static,
    ) -> Self {
        FamilyPredicate { name: name.into(), eval: Arc::new(eval) }
    }

    /// Predicate on the subobject an element stands for.
    pub fn on_subobject(name: impl Into<String>, f: impl Fn(&Ground) -> bool + Send + Sync + 'static) -> Self {
        Self::new(name, move |ground, elem| ground.materialize(elem).is_ok_and(|sub| f(&sub)))
    }

    subobject_predicate!(graphs, crate::graph::Graph, as_graph);
    subobject_predicate!(digraphs, crate::graph::Digraph, as_digraph);
    subobject_predicate!(dgraphs, crate::dgraph::DGraph, as_dgraph);
    subobject_predicate!(matrices, crate::game::MatrixGame, as_matrix);
    subobject_predicate!(bimatrices, crate::game::BimatrixGame, as_bimatrix);
    subobject_predicate!(forms, crate::game::GameForm, as_form);

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, ground: &Ground, elem: &PosetElement) -> bool {
        (self.eval)(ground, elem)
    }

    /// Complement family under a new name.
    pub fn negate(&self, name: impl Into<String>) -> Self {
        let inner = self.clone();
        Self::new(name, move |g, e| !inner.eval(g, e))
    }
}

/// The poset of all subobjects of `ground` under one containment order.
#[derive(Clone, Debug)]
pub struct GroundPoset {
    ground: Ground,
    order: Order,
    cap: u128,
    atoms: usize,
    rows: usize,
}

impl GroundPoset {
    pub fn new(ground: impl Into<Ground>, order: Order) -> Result<Self> {
        let ground = ground.into();
        if !ground.kind().admits(order) {
            return Err(Error::OrderMismatch { order: order.name(), kind: ground.kind().name() });
        }
        let (atoms, rows) = match order {
            Order::Vertex => (ground.vertex_count(), 0),
            Order::Edge => (ground.edge_count(), 0),
            Order::Line => {
                let (r, c) = ground.shape();
                (r + c, r)
            }
        };
        if atoms > IdSet::CAPACITY {
            return Err(Error::Shape(format!("{atoms} atoms, at most {}", IdSet::CAPACITY)));
        }
        Ok(GroundPoset { ground, order, cap: DEFAULT_CAP, atoms, rows })
    }

    pub fn with_cap(mut self, cap: u128) -> Self {
        self.cap = cap;
        self
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn cap(&self) -> u128 {
        self.cap
    }

    /// Exact element count, saturating at `u128::MAX`.
    pub fn element_count(&self) -> u128 {
        let pow = |k: usize| if k >= 128 { u128::MAX } else { 1u128 << k };
        match self.order {
            Order::Line => {
                let (r, c) = (self.rows, self.atoms - self.rows);
                (pow(r) - 1).saturating_mul(pow(c) - 1).saturating_add(1)
            }
            _ => pow(self.atoms),
        }
    }

    /// Refuses posets above the cap or with more than 40 atoms.
    pub fn check_cap(&self) -> Result<()> {
        let count = self.element_count();
        if count > self.cap || self.atoms > 40 {
            return Err(Error::CapExceeded { count, cap: self.cap });
        }
        Ok(())
    }

    pub fn full(&self) -> PosetElement {
        self.element_of(IdSet::full(self.atoms).0)
    }

    pub fn bottom(&self) -> PosetElement {
        self.element_of(0)
    }

    fn col_shift(&self) -> usize {
        self.rows
    }

    fn split(&self, mask: u128) -> (u128, u128) {
        let rows = mask & IdSet::full(self.rows).0;
        let cols = if self.rows >= 128 { 0 } else { mask >> self.col_shift() };
        (rows, cols)
    }

    fn canonical(&self, mask: u128) -> bool {
        if self.order != Order::Line || mask == 0 {
            return true;
        }
        let (r, c) = self.split(mask);
        r != 0 && c != 0
    }

    pub(crate) fn element_of(&self, mask: u128) -> PosetElement {
        match self.order {
            Order::Vertex => PosetElement::VertexSubset { vertices: IdSet(mask) },
            Order::Edge => PosetElement::EdgeSubset {
                vertices: IdSet::full(self.ground.vertex_count()),
                edges: IdSet(mask),
            },
            Order::Line => {
                let (r, c) = self.split(mask);
                PosetElement::lines(IdSet(r), IdSet(c))
            }
        }
    }

    /// Validates an element and returns its atom mask.
    pub(crate) fn mask_of(&self, elem: &PosetElement) -> Result<u128> {
        if elem.order() != self.order {
            return Err(Error::MixedKinds);
        }
        let in_range = |set: IdSet, size: usize| {
            if set.bound() > size {
                Err(Error::IdOutOfRange { id: set.bound() - 1, size })
            } else {
                Ok(set.0)
            }
        };
        match *elem {
            PosetElement::VertexSubset { vertices } => in_range(vertices, self.atoms),
            PosetElement::EdgeSubset { vertices, edges } => {
                if vertices != IdSet::full(self.ground.vertex_count()) {
                    return Err(Error::InvalidElement("edge subsets keep every vertex".into()));
                }
                in_range(edges, self.atoms)
            }
            PosetElement::LineSubset { rows, cols } => {
                if rows.is_empty() != cols.is_empty() {
                    return Err(Error::InvalidElement("a line subset with no rows must have no columns".into()));
                }
                let r = in_range(rows, self.rows)?;
                let c = in_range(cols, self.atoms - self.rows)?;
                Ok(r | c << self.col_shift())
            }
        }
    }

    fn covers(&self, mask: u128) -> Vec<u128> {
        if self.order != Order::Line {
            return IdSet(mask).iter().map(|a| mask & !(1u128 << a)).collect();
        }
        let (r, c) = self.split(mask);
        let (nr, nc) = (r.count_ones(), c.count_ones());
        if mask == 0 {
            return Vec::new();
        }
        if nr == 1 && nc == 1 {
            return vec![0];
        }
        let mut out = Vec::new();
        if nr >= 2 {
            out.extend(IdSet(r).iter().map(|a| mask & !(1u128 << a)));
        }
        if nc >= 2 {
            out.extend(IdSet(c).iter().map(|a| mask & !(1u128 << (a + self.col_shift()))));
        }
        out
    }

    /// `a ⪯ b` for canonical masks.
    fn below_or_equal(a: u128, b: u128) -> bool {
        a & !b == 0
    }

    /// Human-readable form with 1-based labels.
    pub fn describe(&self, elem: &PosetElement) -> String {
        let labels = |s: IdSet| s.labels().iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        match *elem {
            PosetElement::VertexSubset { vertices } => format!("{{{}}}", labels(vertices)),
            PosetElement::EdgeSubset { edges, .. } => {
                let list = match &self.ground {
                    Ground::Graph(g) => g.edges(),
                    Ground::Digraph(d) => d.arcs(),
                    _ => Vec::new(),
                };
                let parts: Vec<String> =
                    edges.iter().filter_map(|e| list.get(e)).map(|(u, v)| format!("({},{})", u + 1, v + 1)).collect();
                format!("{{{}}}", parts.join(","))
            }
            PosetElement::LineSubset { rows, .. } if rows.is_empty() => "empty".into(),
            PosetElement::LineSubset { rows, cols } => format!("rows {{{}}} x cols {{{}}}", labels(rows), labels(cols)),
        }
    }
}

/// All elements obtained by deleting one atom; in line order a 1×1 element
/// covers only the empty element.
pub fn immediate_successors(elem: &PosetElement, poset: &GroundPoset) -> Result<Vec<PosetElement>> {
    let mask = poset.mask_of(elem)?;
    let mut out: Vec<PosetElement> = poset.covers(mask).into_iter().map(|m| poset.element_of(m)).collect();
    out.sort();
    Ok(out)
}

/// `b ⪰ a`: every id set of `a` is contained in the matching set of `b`.
pub fn precedes(a: &PosetElement, b: &PosetElement) -> Result<bool> {
    use PosetElement as E;
    match (a, b) {
        (E::VertexSubset { vertices: x }, E::VertexSubset { vertices: y }) => Ok(x.is_subset(*y)),
        (E::EdgeSubset { vertices: vx, edges: x }, E::EdgeSubset { vertices: vy, edges: y }) => {
            if vx != vy {
                return Err(Error::InvalidElement("edge subsets over different vertex sets".into()));
            }
            Ok(x.is_subset(*y))
        }
        (E::LineSubset { rows: ra, cols: ca }, E::LineSubset { rows: rb, cols: cb }) => {
            Ok(ra.is_empty() || (ra.is_subset(*rb) && ca.is_subset(*cb)))
        }
        _ => Err(Error::MixedKinds),
    }
}

/// Counterexamples for each property that fails.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    /// A local minimum that is not a minimum.
    pub convex: Option<PosetElement>,
    /// `(F, F′)`: no family member covered by `F` lies above the minimum `F′`.
    pub strongly_convex: Option<(PosetElement, PosetElement)>,
    /// `(F, P, F′)` with `F ≻ P ⪰ F′`, `F` a member, `F′` a minimum, `P` outside.
    pub weakly_hereditary: Option<(PosetElement, PosetElement, PosetElement)>,
    /// `(F, P)`: `P` is covered by the member `F` but is not a member.
    pub hereditary: Option<(PosetElement, PosetElement)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub family: String,
    pub order: Order,
    pub element_count: u128,
    pub member_count: u64,
    pub minima: Vec<PosetElement>,
    pub local_minima: Vec<PosetElement>,
    pub convex: bool,
    pub strongly_convex: bool,
    pub weakly_hereditary: bool,
    pub hereditary: bool,
    pub witnesses: Witnesses,
}

impl ClassificationReport {
    #[allow(clippy::too_many_arguments)]
    fn new(
        family: String,
        order: Order,
        element_count: u128,
        member_count: u64,
        minima: Vec<PosetElement>,
        local_minima: Vec<PosetElement>,
        witnesses: Witnesses,
    ) -> Self {
        let report = ClassificationReport {
            family,
            order,
            element_count,
            member_count,
            convex: witnesses.convex.is_none(),
            strongly_convex: witnesses.strongly_convex.is_none(),
            weakly_hereditary: witnesses.weakly_hereditary.is_none(),
            hereditary: witnesses.hereditary.is_none(),
            minima,
            local_minima,
            witnesses,
        };
        assert!(
            report.minima.iter().all(|m| report.local_minima.binary_search(m).is_ok()),
            "minima must be local minima"
        );
        assert!(!report.hereditary || report.weakly_hereditary, "hereditary but not weakly hereditary");
        assert!(!report.weakly_hereditary || report.strongly_convex, "weakly hereditary but not strongly convex");
        assert!(!report.strongly_convex || report.convex, "strongly convex but not convex");
        report
    }

    /// `(convex, strongly convex, weakly hereditary, hereditary)`.
    pub fn verdicts(&self) -> [bool; 4] {
        [self.convex, self.strongly_convex, self.weakly_hereditary, self.hereditary]
    }
}

/// Membership and the derived tables, indexed by atom mask.
struct Table<'a> {
    poset: &'a GroundPoset,
    fam: Vec<bool>,
    /// Some member lies strictly below.
    below: Vec<bool>,
}

impl<'a> Table<'a> {
    fn build(pred: &FamilyPredicate, poset: &'a GroundPoset) -> Result<Self> {
        poset.check_cap()?;
        let size = 1usize << poset.atoms;
        let fam: Vec<bool> = (0..size)
            .into_par_iter()
            .map(|m| {
                let m = m as u128;
                poset.canonical(m) && pred.eval(&poset.ground, &poset.element_of(m))
            })
            .collect();
        let mut below = vec![false; size];
        for m in 0..size {
            if poset.canonical(m as u128) {
                below[m] = poset.covers(m as u128).iter().any(|&c| fam[c as usize] || below[c as usize]);
            }
        }
        Ok(Table { poset, fam, below })
    }

    fn masks(&self) -> impl Iterator<Item = u128> + '_ {
        (0..self.fam.len() as u128).filter(|&m| self.poset.canonical(m))
    }

    fn member(&self, m: u128) -> bool {
        self.fam[m as usize]
    }

    fn is_min(&self, m: u128) -> bool {
        self.fam[m as usize] && !self.below[m as usize]
    }

    fn is_local_min(&self, m: u128) -> bool {
        self.fam[m as usize] && !self.poset.covers(m).iter().any(|&c| self.fam[c as usize])
    }

    fn elem(&self, m: u128) -> PosetElement {
        self.poset.element_of(m)
    }

    fn sorted(&self, masks: impl Iterator<Item = u128>) -> Vec<PosetElement> {
        let mut v: Vec<PosetElement> = masks.map(|m| self.elem(m)).collect();
        v.sort();
        v
    }

    fn minima(&self) -> Vec<PosetElement> {
        self.sorted(self.masks().filter(|&m| self.is_min(m)))
    }

    fn local_minima(&self) -> Vec<PosetElement> {
        self.sorted(self.masks().filter(|&m| self.is_local_min(m)))
    }

    /// Canonical masks `⪰ base`, excluding `base` itself.
    fn strict_supersets(&self, base: u128) -> Vec<u128> {
        let all = self.fam.len() as u128 - 1;
        let free = all & !base;
        let mut out = Vec::new();
        let mut sub = free;
        loop {
            let m = base | sub;
            if m != base && self.poset.canonical(m) {
                out.push(m);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & free;
        }
        out
    }

    /// Smallest minimum below or equal to `m`.
    fn min_below(&self, m: u128) -> Option<PosetElement> {
        let mut best: Option<PosetElement> = None;
        let mut sub = m;
        loop {
            if self.poset.canonical(sub) && self.is_min(sub) {
                let e = self.elem(sub);
                if best.is_none_or(|b| e < b) {
                    best = Some(e);
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & m;
        }
        best
    }

    fn convex_witness(&self) -> Option<PosetElement> {
        self.masks().filter(|&m| self.is_local_min(m) && !self.is_min(m)).map(|m| self.elem(m)).min()
    }

    fn hereditary_witness(&self) -> Option<(PosetElement, PosetElement)> {
        self.masks()
            .filter(|&m| self.member(m))
            .flat_map(|m| {
                self.poset.covers(m).into_iter().filter(|&c| !self.member(c)).map(move |c| (m, c))
            })
            .map(|(f, p)| (self.elem(f), self.elem(p)))
            .min()
    }

    fn weakly_hereditary_witness(&self) -> Option<(PosetElement, PosetElement, PosetElement)> {
        let size = self.fam.len();
        let mut above_min = vec![false; size];
        for m in self.masks() {
            let i = m as usize;
            above_min[i] = self.is_min(m) || self.poset.covers(m).iter().any(|&c| above_min[c as usize]);
        }
        let mut strict_above = vec![false; size];
        for m in (0..size as u128).rev().filter(|&m| self.poset.canonical(m)) {
            let up = self.member(m) || strict_above[m as usize];
            if up {
                for c in self.poset.covers(m) {
                    strict_above[c as usize] = true;
                }
            }
        }
        let p = self
            .masks()
            .filter(|&m| !self.member(m) && above_min[m as usize] && strict_above[m as usize])
            .min_by_key(|&m| self.elem(m))?;
        let f = self.strict_supersets(p).into_iter().filter(|&m| self.member(m)).map(|m| self.elem(m)).min()?;
        let fmin = self.min_below(p)?;
        Some((f, self.elem(p), fmin))
    }

    fn strongly_convex_witness(&self) -> Option<(PosetElement, PosetElement)> {
        if let Some(l) = self.convex_witness() {
            let m = self.poset.mask_of(&l).unwrap();
            let below = self.min_below(m).expect("a member that is not minimal has a minimum below it");
            return Some((l, below));
        }
        let minima: Vec<u128> = self.masks().filter(|&m| self.is_min(m)).collect();
        minima
            .par_iter()
            .filter_map(|&fmin| {
                self.strict_supersets(fmin)
                    .into_iter()
                    .filter(|&f| self.member(f))
                    .filter(|&f| {
                        !self
                            .poset
                            .covers(f)
                            .iter()
                            .any(|&c| self.member(c) && GroundPoset::below_or_equal(fmin, c))
                    })
                    .map(|f| (self.elem(f), self.elem(fmin)))
                    .min()
            })
            .min()
    }
}

/// Members with no member strictly below them.
pub fn minima(pred: &FamilyPredicate, poset: &GroundPoset) -> Result<Vec<PosetElement>> {
    Ok(Table::build(pred, poset)?.minima())
}

/// Members none of whose immediate successors is a member.
pub fn local_minima(pred: &FamilyPredicate, poset: &GroundPoset) -> Result<Vec<PosetElement>> {
    Ok(Table::build(pred, poset)?.local_minima())
}

pub fn is_convex(pred: &FamilyPredicate, poset: &GroundPoset) -> Result<(bool, Option<PosetElement>)> {
    let w = Table::build(pred, poset)?.convex_witness();
    Ok((w.is_none(), w))
}

pub fn is_strongly_convex(
    pred: &FamilyPredicate,
    poset: &GroundPoset,
) -> Result<(bool, Option<(PosetElement, PosetElement)>)> {
    let w = Table::build(pred, poset)?.strongly_convex_witness();
    Ok((w.is_none(), w))
}

pub fn is_hereditary(
    pred: &FamilyPredicate,
    poset: &GroundPoset,
) -> Result<(bool, Option<(PosetElement, PosetElement)>)> {
    let w = Table::build(pred, poset)?.hereditary_witness();
    Ok((w.is_none(), w))
}

pub fn is_weakly_hereditary(
    pred: &FamilyPredicate,
    poset: &GroundPoset,
) -> Result<(bool, Option<(PosetElement, PosetElement, PosetElement)>)> {
    let w = Table::build(pred, poset)?.weakly_hereditary_witness();
    Ok((w.is_none(), w))
}

pub fn classify(pred: &FamilyPredicate, poset: &GroundPoset) -> Result<ClassificationReport> {
    let t = Table::build(pred, poset)?;
    let witnesses = Witnesses {
        convex: t.convex_witness(),
        strongly_convex: t.strongly_convex_witness(),
        weakly_hereditary: t.weakly_hereditary_witness(),
        hereditary: t.hereditary_witness(),
    };
    let member_count = t.fam.iter().filter(|&&b| b).count() as u64;
    Ok(ClassificationReport::new(
        pred.name().to_string(),
        poset.order,
        poset.element_count(),
        member_count,
        t.minima(),
        t.local_minima(),
        witnesses,
    ))
}

/// Member whose immediate successors are all outside the family. Needs no
/// enumeration, so it works on posets above the cap.
pub fn is_local_minimum(pred: &FamilyPredicate, poset: &GroundPoset, elem: &PosetElement) -> Result<bool> {
    let mask = poset.mask_of(elem)?;
    Ok(pred.eval(&poset.ground, elem)
        && !poset.covers(mask).iter().any(|&c| pred.eval(&poset.ground, &poset.element_of(c))))
}

/// A local minimum with a member strictly below it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonConvexCertificate {
    pub local_minimum: PosetElement,
    pub smaller_member: PosetElement,
}

/// Checks that `candidate` is a local minimum, then looks for a member strictly
/// below it, smallest elements first. `Decided(None)` means the candidate is
/// not a local minimum or is a true minimum; at most `budget` elements are
/// evaluated.
pub fn certify_non_convex(
    pred: &FamilyPredicate,
    poset: &GroundPoset,
    candidate: &PosetElement,
    budget: u64,
) -> Result<Search<Option<NonConvexCertificate>>> {
    if !is_local_minimum(pred, poset, candidate)? {
        return Ok(Search::Decided(None));
    }
    let mask = poset.mask_of(candidate)?;
    let atoms: Vec<usize> = IdSet(mask).to_vec();
    let w = atoms.len();
    let mut explored = 0u64;
    for size in 0..w {
        // Gosper's hack over positions in `atoms`
        let mut pick: u128 = if size == 0 { 0 } else { (1u128 << size) - 1 };
        loop {
            let sub = IdSet(pick).iter().fold(0u128, |m, i| m | 1u128 << atoms[i]);
            if poset.canonical(sub) && (sub != 0 || size == 0) {
                if explored >= budget {
                    return Ok(Search::Undecided { explored });
                }
                explored += 1;
                let e = poset.element_of(sub);
                if pred.eval(&poset.ground, &e) {
                    return Ok(Search::Decided(Some(NonConvexCertificate {
                        local_minimum: *candidate,
                        smaller_member: e,
                    })));
                }
            }
            if size == 0 {
                break;
            }
            let c = pick & pick.wrapping_neg();
            let r = pick + c;
            pick = (((r ^ pick) >> 2) / c) | r;
            if pick >> w != 0 {
                break;
            }
        }
    }
    Ok(Search::Decided(None))
}

/// Member with no member strictly below it, checked by scanning the down-set.
pub fn is_minimum(pred: &FamilyPredicate, poset: &GroundPoset, elem: &PosetElement) -> Result<bool> {
    let mask = poset.mask_of(elem)?;
    if !pred.eval(&poset.ground, elem) {
        return Ok(false);
    }
    if mask.count_ones() > 40 {
        return Err(Error::CapExceeded { count: 1u128 << mask.count_ones().min(127), cap: poset.cap });
    }
    let mut sub = mask;
    while sub != 0 {
        sub = (sub - 1) & mask;
        if poset.canonical(sub) && pred.eval(&poset.ground, &poset.element_of(sub)) {
            return Ok(false);
        }
    }
    Ok(true)
}

impl GroundPoset {
    /// Element described by vertex, edge or line ids; convenience for callers
    /// that do not want to build a [`PosetElement`] by hand.
    pub fn element(&self, ids: IdSet) -> Result<PosetElement> {
        let e = match self.order {
            Order::Vertex => PosetElement::vertices(ids),
            Order::Edge => {
                PosetElement::EdgeSubset { vertices: IdSet::full(self.ground.vertex_count()), edges: ids }
            }
            Order::Line => {
                return Err(Error::InvalidElement("line elements need rows and columns".into()));
            }
        };
        self.mask_of(&e)?;
        Ok(e)
    }

    pub fn describe_all(&self, elems: &[PosetElement]) -> Vec<String> {
        elems.iter().map(|e| self.describe(e)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::fixtures::{sp_fixture_4x4, two_sp_fixture_2x3};
    use crate::graph::fixtures::{complete, path};
    use crate::graph::Graph;

    fn connected() -> FamilyPredicate {
        FamilyPredicate::graphs("connected", Graph::is_connected)
    }

    fn with_sp() -> FamilyPredicate {
        FamilyPredicate::matrices("with-sp", |m| !m.is_empty() && m.has_sp())
    }

    fn sp_free() -> FamilyPredicate {
        FamilyPredicate::matrices("sp-free", |m| !m.has_sp())
    }

    #[test]
    fn successors() {
        let p4 = GroundPoset::new(path(4), Order::Vertex).unwrap();
        let succ = immediate_successors(&p4.full(), &p4).unwrap();
        assert_eq!(succ.len(), 4);
        assert!(succ.iter().all(|e| e.size() == 3));
        assert!(immediate_successors(&p4.bottom(), &p4).unwrap().is_empty());
        let k3 = GroundPoset::new(complete(3), Order::Edge).unwrap();
        let succ = immediate_successors(&k3.full(), &k3).unwrap();
        assert_eq!(succ.len(), 3);
        assert!(immediate_successors(&PosetElement::vertices(IdSet::from_ids([7])), &p4).is_err());
    }

    #[test]
    fn line_covers() {
        let m = GroundPoset::new(sp_fixture_4x4(), Order::Line).unwrap();
        let one = PosetElement::lines(IdSet::from_ids([0]), IdSet::from_ids([1]));
        assert_eq!(immediate_successors(&one, &m).unwrap(), vec![m.bottom()]);
        let row = PosetElement::lines(IdSet::from_ids([0]), IdSet::from_ids([1, 2]));
        let succ = immediate_successors(&row, &m).unwrap();
        assert_eq!(succ.len(), 2);
        assert!(succ.iter().all(|e| e.size() == 2));
        assert_eq!(m.element_count(), 15 * 15 + 1);
    }

    #[test]
    fn precedes_rules() {
        let a = PosetElement::vertices(IdSet::from_ids([0, 1]));
        let b = PosetElement::vertices(IdSet::from_ids([0, 1, 2]));
        let c = PosetElement::vertices(IdSet::from_ids([1, 2]));
        assert!(precedes(&a, &b).unwrap());
        assert!(precedes(&a, &a).unwrap());
        assert!(!precedes(&a, &c).unwrap() && !precedes(&c, &a).unwrap());
        let l = PosetElement::lines(IdSet::empty(), IdSet::empty());
        assert_eq!(precedes(&a, &l), Err(Error::MixedKinds));
    }

    #[test]
    fn connected_vertex_order() {
        let p3 = GroundPoset::new(path(3), Order::Vertex).unwrap();
        let r = classify(&connected(), &p3).unwrap();
        assert_eq!(r.verdicts(), [true, true, false, false]);
        assert_eq!(r.minima, vec![p3.bottom()]);
        assert_eq!(
            r.witnesses.hereditary,
            Some((p3.full(), PosetElement::vertices(IdSet::from_ids([0, 2]))))
        );
    }

    #[test]
    fn connected_edge_order_minima_are_spanning_trees() {
        let k4 = GroundPoset::new(complete(4), Order::Edge).unwrap();
        let r = classify(&connected(), &k4).unwrap();
        assert_eq!(r.minima.len(), 16);
        assert_eq!(r.minima, r.local_minima);
    }

    #[test]
    fn sp_free_fixture() {
        let m = GroundPoset::new(sp_fixture_4x4(), Order::Line).unwrap();
        let r = classify(&sp_free(), &m).unwrap();
        assert!(r.convex && !r.strongly_convex);
        let m1 = PosetElement::lines(IdSet::from_ids([0, 1]), IdSet::from_ids([0, 1]));
        assert!(r.minima.contains(&m1));
        assert_eq!(r.witnesses.strongly_convex, Some((m.full(), m1)));
    }

    #[test]
    fn with_sp_not_weakly_hereditary() {
        let m = GroundPoset::new(two_sp_fixture_2x3(), Order::Line).unwrap();
        let r = classify(&with_sp(), &m).unwrap();
        assert!(r.strongly_convex && !r.weakly_hereditary);
        let (f, p, _) = r.witnesses.weakly_hereditary.unwrap();
        assert_eq!(f, m.full());
        assert_eq!(p, PosetElement::lines(IdSet::full(2), IdSet::from_ids([1, 2])));
    }

    #[test]
    fn empty_family_is_everything() {
        let never = FamilyPredicate::new("never", |_, _| false);
        let p = GroundPoset::new(path(3), Order::Edge).unwrap();
        assert_eq!(classify(&never, &p).unwrap().verdicts(), [true; 4]);
    }

    #[test]
    fn cap_is_enforced() {
        let p = GroundPoset::new(complete(7), Order::Edge).unwrap();
        assert!(matches!(classify(&connected(), &p), Err(Error::CapExceeded { .. })));
        let p = p.with_cap(1 << 21);
        assert!(p.check_cap().is_ok());
    }

    #[test]
    fn certificate_search() {
        // a disconnected pair of vertices is a local minimum of "edge-free and n = 2 or n = 0"
        let odd = FamilyPredicate::graphs("size 0 or 2", |g| g.n() == 0 || g.n() == 2);
        let p = GroundPoset::new(Graph::new(2), Order::Vertex).unwrap();
        let cert = certify_non_convex(&odd, &p, &p.full(), 100).unwrap().decided().unwrap().unwrap();
        assert_eq!(cert.smaller_member, p.bottom());
        assert!(!is_minimum(&odd, &p, &p.full()).unwrap());
        assert_eq!(certify_non_convex(&odd, &p, &p.full(), 0).unwrap(), Search::Undecided { explored: 0 });
    }
}
