//! `classify`: a registry family on a user-supplied ground object.

use clap::ValueEnum;
use serde::Serialize;

use super::{Line, Report, Status};
use crate::graph::io::AnyGraph;
use crate::poset::{classify, is_minimum, GroundPoset, Order, PosetElement};
use crate::registry::{self, FamilyEntry};
use crate::{dgraph, game, graph, Error, Ground, Kind, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ObjectKind {
    Graph,
    Digraph,
    Dgraph,
    Matrix,
    Bimatrix,
    Form,
}

impl ObjectKind {
    pub fn name(self) -> &'static str {
        match self {
            ObjectKind::Graph => "graph",
            ObjectKind::Digraph => "digraph",
            ObjectKind::Dgraph => "dgraph",
            ObjectKind::Matrix => "matrix",
            ObjectKind::Bimatrix => "bimatrix",
            ObjectKind::Form => "form",
        }
    }

    fn kind(self) -> Kind {
        match self {
            ObjectKind::Graph => Kind::Graph,
            ObjectKind::Digraph => Kind::Digraph,
            ObjectKind::Dgraph => Kind::Dgraph,
            ObjectKind::Matrix => Kind::Matrix,
            ObjectKind::Bimatrix => Kind::Bimatrix,
            ObjectKind::Form => Kind::Gameform,
        }
    }
}

/// Reads `text` in the JSON format of `kind`.
pub fn parse_object(text: &str, kind: ObjectKind) -> Result<Ground> {
    if text.trim().is_empty() {
        return Err(Error::Parse("line 1, column 1: empty input".into()));
    }
    let mismatch = |found: &str| Error::Parse(format!("expected a {}, the file holds a {found}", kind.name()));
    Ok(match kind {
        ObjectKind::Graph | ObjectKind::Digraph => match (graph::io::parse_json(text)?, kind) {
            (AnyGraph::Graph(g), ObjectKind::Graph) => g.into(),
            (AnyGraph::Digraph(d), ObjectKind::Digraph) => d.into(),
            (AnyGraph::Graph(_), _) => return Err(mismatch("graph (\"directed\": false)")),
            (AnyGraph::Digraph(_), _) => return Err(mismatch("digraph (\"directed\": true)")),
        },
        ObjectKind::Dgraph => dgraph::io::parse_json(text)?.into(),
        ObjectKind::Matrix | ObjectKind::Bimatrix => match (game::io::parse_game(text)?, kind) {
            (game::io::AnyGame::Matrix(m), ObjectKind::Matrix) => m.into(),
            (game::io::AnyGame::Bimatrix(b), ObjectKind::Bimatrix) => b.into(),
            (game::io::AnyGame::Matrix(_), _) => return Err(mismatch("matrix game (no `b`)")),
            (game::io::AnyGame::Bimatrix(_), _) => return Err(mismatch("bimatrix game")),
        },
        ObjectKind::Form => game::io::parse_form(text)?.into(),
    })
}

/// `kernel-less` with edge order resolves to `kernel-less-edge`; the entry's
/// predicate is then used whatever order the entry itself is audited in.
fn family_for(name: &str, order: Order, kind: Kind) -> Result<FamilyEntry> {
    let entry = registry::find_family(&format!("{name}-{}", order.name())).or_else(|_| registry::find_family(name))?;
    if entry.kind != kind {
        let valid: Vec<&str> =
            registry::list_families().iter().filter(|e| e.kind == kind).map(|e| e.name).collect();
        return Err(Error::Unknown {
            name: format!("{name} (a {} family) for a {}", entry.kind.name(), kind.name()),
            valid: valid.join(", "),
        });
    }
    Ok(entry)
}

#[derive(Serialize)]
struct Payload<'a> {
    ground: String,
    family: &'a str,
    order: Order,
    member: bool,
    minimum: bool,
    local_minimum: bool,
    minima: Vec<String>,
    local_minima: Vec<String>,
    report: &'a crate::poset::ClassificationReport,
}

pub fn classify_text(text: &str, kind: ObjectKind, order: Order, family: &str) -> Result<Report> {
    let ground = parse_object(text, kind)?;
    let entry = family_for(family, order, kind.kind())?;
    let pred = entry.predicate();
    let poset = GroundPoset::new(ground, order)?;
    let report = classify(&pred, &poset)?;
    let full = poset.full();
    let member = pred.eval(poset.ground(), &full);
    let minimum = is_minimum(&pred, &poset, &full)?;
    let local_minimum = report.local_minima.contains(&full);
    let show = |v: &[PosetElement]| poset.describe_all(v);
    let minima = show(&report.minima);
    let local_minima = show(&report.local_minima);

    let info = |name: &str, detail: String| Line { name: name.into(), status: Status::Pass, detail };
    let yes = |b: bool| if b { "yes" } else { "no" }.to_string();
    let list = |v: &[String]| {
        const SHOWN: usize = 8;
        let mut s = v.iter().take(SHOWN).cloned().collect::<Vec<_>>().join(" ");
        if v.len() > SHOWN {
            s += &format!(" ... ({} in total)", v.len());
        }
        if v.is_empty() {
            s = "none".into();
        }
        s
    };
    let mut lines = vec![
        info("ground", poset.ground().describe()),
        info("family", format!("{} ({}), {} order, {} elements, {} in the family", pred.name(), entry.family, order, report.element_count, report.member_count)),
        info("member", yes(member)),
        info("minimal", yes(minimum)),
        info("locally minimal", yes(local_minimum)),
        info("minima", list(&minima)),
        info("local minima", list(&local_minima)),
    ];
    for (k, prop) in registry::PROPERTIES.iter().enumerate() {
        let holds = report.verdicts()[k];
        let witness = match k {
            0 => report.witnesses.convex.as_ref().map(|e| format!("{} is a local minimum but not a minimum", poset.describe(e))),
            1 => report.witnesses.strongly_convex.as_ref().map(|(f, m)| {
                format!("no member covered by {} lies above the minimum {}", poset.describe(f), poset.describe(m))
            }),
            2 => report.witnesses.weakly_hereditary.as_ref().map(|(f, p, m)| {
                format!("{} > {} >= {}, the middle one outside", poset.describe(f), poset.describe(p), poset.describe(m))
            }),
            _ => report.witnesses.hereditary.as_ref().map(|(f, p)| {
                format!("{} covers {}, which is outside", poset.describe(f), poset.describe(p))
            }),
        };
        let detail = match witness {
            Some(w) => format!("no; {w}"),
            None => yes(holds),
        };
        lines.push(info(prop, detail));
    }
    let mut out = Report::new(format!("convexfam classify --kind {} --order {order} --family {family}", kind.name()), lines);
    let payload = Payload {
        ground: poset.ground().describe(),
        family: pred.name(),
        order,
        member,
        minimum,
        local_minimum,
        minima,
        local_minima,
        report: &report,
    };
    out.data = Some(serde_json::to_value(&payload).expect("serialisable"));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_cycle_is_its_own_kernel_less_minimum() {
        let c5 = r#"{"directed": true, "n": 5, "edges": [[1,2],[2,3],[3,4],[4,5],[5,1]]}"#;
        let r = classify_text(c5, ObjectKind::Digraph, Order::Edge, "kernel-less").unwrap();
        let data = r.data.unwrap();
        assert_eq!(data["minima"], serde_json::json!(["{(1,2),(2,3),(3,4),(4,5),(5,1)}"]));
        assert_eq!(data["minimum"], true);
    }

    #[test]
    fn pi_is_a_minimal_not_cis_dgraph() {
        let pi = serde_json::to_string(&dgraph::io::DGraphJson::from_dgraph(&dgraph::fixtures::pi())).unwrap();
        let r = classify_text(&pi, ObjectKind::Dgraph, Order::Vertex, "not-cis").unwrap();
        let data = r.data.unwrap();
        assert_eq!((data["member"].as_bool(), data["minimum"].as_bool()), (Some(true), Some(true)));
    }

    #[test]
    fn empty_and_mismatched_input_are_parse_errors() {
        assert!(matches!(parse_object("", ObjectKind::Graph), Err(Error::Parse(_))));
        assert!(matches!(parse_object("{\"n\": 2, \"edges\": [[1,2]]}", ObjectKind::Digraph), Err(Error::Parse(_))));
        let e = classify_text("{\"n\": 2, \"edges\": []}", ObjectKind::Graph, Order::Vertex, "kernel-less");
        assert!(matches!(e, Err(Error::Unknown { .. })));
    }
}
