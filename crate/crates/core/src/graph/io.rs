//! Graph JSON (`{"directed": bool, "n": int, "edges": [[u, v], ...]}`, 1-based)
//! and DIMACS-style `p`/`e` text.

use serde::{Deserialize, Serialize};

use super::{Digraph, Graph};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    #[serde(default)]
    pub directed: bool,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

/// Either kind of graph read from a file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyGraph {
    Graph(Graph),
    Digraph(Digraph),
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        let edges = g.edges().into_iter().map(|(u, v)| [u + 1, v + 1]).collect();
        GraphJson { directed: false, n: g.n(), edges }
    }

    pub fn from_digraph(d: &Digraph) -> Self {
        let edges = d.arcs().into_iter().map(|(u, v)| [u + 1, v + 1]).collect();
        GraphJson { directed: true, n: d.n(), edges }
    }

    pub fn build(&self) -> Result<AnyGraph> {
        if self.n > super::MAX_VERTICES {
            return Err(Error::Parse(format!("field `n`: at most {} vertices", super::MAX_VERTICES)));
        }
        let mut pairs = Vec::with_capacity(self.edges.len());
        for (i, &[u, v]) in self.edges.iter().enumerate() {
            if u == 0 || v == 0 || u > self.n || v > self.n {
                return Err(Error::Parse(format!(
                    "field `edges[{i}]`: endpoint outside 1..={}",
                    self.n
                )));
            }
            pairs.push((u - 1, v - 1));
        }
        let wrap = |e: Error| Error::Parse(format!("field `edges`: {e}"));
        Ok(if self.directed {
            AnyGraph::Digraph(Digraph::from_arcs(self.n, &pairs).map_err(wrap)?)
        } else {
            AnyGraph::Graph(Graph::from_edges(self.n, &pairs).map_err(wrap)?)
        })
    }
}

pub fn parse_json(text: &str) -> Result<AnyGraph> {
    let doc: GraphJson = serde_json::from_str(text).map_err(|e| {
        Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column()))
    })?;
    doc.build()
}

/// DIMACS-like text: `c` comment lines, one `p <kind> <n> <m>` line and `e u v`
/// (undirected) or `a u v` (directed) lines with 1-based ids.
pub fn parse_dimacs(text: &str) -> Result<AnyGraph> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut directed = false;
    for (lineno, line) in text.lines().enumerate() {
        let err = |msg: &str| Error::Parse(format!("line {}: {msg}", lineno + 1));
        let mut tok = line.split_whitespace();
        match tok.next() {
            None | Some("c") => {}
            Some("p") => {
                let _kind = tok.next().ok_or_else(|| err("missing problem kind"))?;
                let count = tok.next().and_then(|t| t.parse().ok());
                n = Some(count.ok_or_else(|| err("bad vertex count"))?);
            }
            Some(kind @ ("e" | "a")) => {
                directed |= kind == "a";
                let mut ends = tok.map(|t| t.parse::<usize>());
                match (ends.next(), ends.next()) {
                    (Some(Ok(u)), Some(Ok(v))) => edges.push([u, v]),
                    _ => return Err(err("expected two vertex ids")),
                }
            }
            Some(other) => return Err(err(&format!("unknown line type `{other}`"))),
        }
    }
    let n = n.ok_or_else(|| Error::Parse("missing `p` line".into()))?;
    GraphJson { directed, n, edges }.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::cycle;

    #[test]
    fn json_round_trip() {
        let g = cycle(5);
        let text = serde_json::to_string(&GraphJson::from_graph(&g)).unwrap();
        assert_eq!(parse_json(&text).unwrap(), AnyGraph::Graph(g));
    }

    #[test]
    fn json_errors_name_the_field() {
        let e = parse_json(r#"{"n": 2, "edges": [[1, 3]]}"#).unwrap_err();
        assert!(e.to_string().contains("edges[0]"), "{e}");
        assert!(parse_json("").is_err());
        assert!(parse_json(r#"{"n": 2, "edges": [[1, 1]]}"#).is_err());
    }

    #[test]
    fn dimacs() {
        let text = "c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 3 1\n";
        let AnyGraph::Graph(g) = parse_dimacs(text).unwrap() else { panic!() };
        assert_eq!(g.edge_count(), 3);
        assert!(parse_dimacs("p edge 2 1\ne 1\n").unwrap_err().to_string().contains("line 2"));
    }
}
