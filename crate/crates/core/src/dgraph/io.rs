//! d-graph JSON: `{"n": 4, "d": 2, "edges": [[1, 2, 1], ...]}` with 1-based
//! vertices and colours and one entry per unordered pair.

use serde::{Deserialize, Serialize};

use super::DGraph;
use crate::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DGraphJson {
    pub n: usize,
    pub d: usize,
    pub edges: Vec<[usize; 3]>,
}

impl DGraphJson {
    pub fn from_dgraph(g: &DGraph) -> Self {
        let edges = g.edges().into_iter().map(|(u, v, c)| [u + 1, v + 1, c + 1]).collect();
        DGraphJson { n: g.n(), d: g.d(), edges }
    }

    pub fn build(&self) -> Result<DGraph> {
        let need = self.n * self.n.saturating_sub(1) / 2;
        if self.edges.len() != need {
            return Err(Error::Parse(format!(
                "field `edges`: {} entries, a complete colouring on {} vertices needs {need}",
                self.edges.len(),
                self.n
            )));
        }
        for (i, &[u, v, c]) in self.edges.iter().enumerate() {
            if u == 0 || v == 0 || u > self.n || v > self.n || c == 0 || c > self.d {
                return Err(Error::Parse(format!("edges[{i}]: [{u}, {v}, {c}] out of range")));
            }
        }
        let edges: Vec<_> = self.edges.iter().map(|&[u, v, c]| (u, v, c)).collect();
        DGraph::from_labeled_edges(self.n, self.d, &edges).map_err(|e| Error::Parse(format!("field `edges`: {e}")))
    }
}

pub fn parse_json(text: &str) -> Result<DGraph> {
    let doc: DGraphJson = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {} column {}: {e}", e.line(), e.column())))?;
    doc.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dgraph::fixtures::bull;

    #[test]
    fn round_trip() {
        let text = serde_json::to_string(&DGraphJson::from_dgraph(&bull())).unwrap();
        assert_eq!(parse_json(&text).unwrap(), bull());
    }

    #[test]
    fn rejects_incomplete_colourings() {
        let err = parse_json(r#"{"n": 3, "d": 2, "edges": [[1,2,1],[2,3,1]]}"#).unwrap_err();
        assert!(err.to_string().contains("needs 3"), "{err}");
        let err = parse_json(r#"{"n": 3, "d": 2, "edges": [[1,2,1],[2,3,1],[2,1,2]]}"#).unwrap_err();
        assert!(err.to_string().contains("twice"), "{err}");
        assert!(parse_json(r#"{"n": 2, "d": 2, "edges": [[1,2,3]]}"#).is_err());
    }
}
