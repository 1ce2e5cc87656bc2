//! Ground objects and their subobjects.

use serde::Serialize;

use crate::dgraph::DGraph;
use crate::game::{BimatrixGame, GameForm, MatrixGame};
use crate::graph::{Digraph, Graph};
use crate::poset::{Order, PosetElement};
use crate::{Error, Result};

/// Any object a poset can be built over.
#[derive(Clone, Debug, PartialEq)]
pub enum Ground {
    Graph(Graph),
    Digraph(Digraph),
    DGraph(DGraph),
    Matrix(MatrixGame),
    Bimatrix(BimatrixGame),
    GameForm(GameForm),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Graph,
    Digraph,
    Dgraph,
    Matrix,
    Bimatrix,
    Gameform,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Graph => "graph",
            Kind::Digraph => "digraph",
            Kind::Dgraph => "dgraph",
            Kind::Matrix => "matrix",
            Kind::Bimatrix => "bimatrix",
            Kind::Gameform => "gameform",
        }
    }

    pub fn admits(self, order: Order) -> bool {
        match order {
            Order::Vertex => matches!(self, Kind::Graph | Kind::Digraph | Kind::Dgraph),
            Order::Edge => matches!(self, Kind::Graph | Kind::Digraph),
            Order::Line => matches!(self, Kind::Matrix | Kind::Bimatrix | Kind::Gameform),
        }
    }
}

impl Ground {
    pub fn kind(&self) -> Kind {
        match self {
            Ground::Graph(_) => Kind::Graph,
            Ground::Digraph(_) => Kind::Digraph,
            Ground::DGraph(_) => Kind::Dgraph,
            Ground::Matrix(_) => Kind::Matrix,
            Ground::Bimatrix(_) => Kind::Bimatrix,
            Ground::GameForm(_) => Kind::Gameform,
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            Ground::Graph(g) => g.n(),
            Ground::Digraph(d) => d.n(),
            Ground::DGraph(g) => g.n(),
            _ => 0,
        }
    }

    pub fn edge_count(&self) -> usize {
        match self {
            Ground::Graph(g) => g.edge_count(),
            Ground::Digraph(d) => d.arc_count(),
            _ => 0,
        }
    }

    /// `(rows, cols)` of a game-like ground.
    pub fn shape(&self) -> (usize, usize) {
        match self {
            Ground::Matrix(m) => (m.rows(), m.cols()),
            Ground::Bimatrix(g) => (g.rows(), g.cols()),
            Ground::GameForm(g) => (g.rows(), g.cols()),
            _ => (0, 0),
        }
    }

    /// The subobject an element stands for. Vertex subsets are relabelled to
    /// `0..k`, edge subsets keep every vertex.
    pub fn materialize(&self, elem: &PosetElement) -> Result<Ground> {
        use PosetElement as E;
        Ok(match (self, elem) {
            (Ground::Graph(g), E::VertexSubset { vertices }) => Ground::Graph(g.induced_subgraph(*vertices)?),
            (Ground::Graph(g), E::EdgeSubset { edges, .. }) => Ground::Graph(g.spanning_subgraph(*edges)?),
            (Ground::Digraph(d), E::VertexSubset { vertices }) => Ground::Digraph(d.induced_subgraph(*vertices)?),
            (Ground::Digraph(d), E::EdgeSubset { edges, .. }) => Ground::Digraph(d.spanning_subgraph(*edges)?),
            (Ground::DGraph(g), E::VertexSubset { vertices }) => Ground::DGraph(g.sub_dgraph(*vertices)?),
            (Ground::Matrix(m), E::LineSubset { rows, cols }) => Ground::Matrix(m.submatrix(*rows, *cols)?),
            (Ground::Bimatrix(g), E::LineSubset { rows, cols }) => Ground::Bimatrix(g.subgame(*rows, *cols)?),
            (Ground::GameForm(g), E::LineSubset { rows, cols }) => Ground::GameForm(g.subform(*rows, *cols)?),
            (g, e) => return Err(Error::OrderMismatch { order: e.order().name(), kind: g.kind().name() }),
        })
    }

    /// One-line description with 1-based labels.
    pub fn describe(&self) -> String {
        let pairs = |v: Vec<(usize, usize)>| {
            v.iter().map(|(a, b)| format!("({},{})", a + 1, b + 1)).collect::<Vec<_>>().join(",")
        };
        let grid = |rows: Vec<Vec<f64>>| {
            let rows: Vec<String> = rows
                .iter()
                .map(|r| r.iter().map(|x| format!("{}", x + 0.0)).collect::<Vec<_>>().join(" "))
                .collect();
            format!("[{}]", rows.join("; "))
        };
        match self {
            Ground::Graph(g) => format!("graph n={} edges {{{}}}", g.n(), pairs(g.edges())),
            Ground::Digraph(d) => format!("digraph n={} arcs {{{}}}", d.n(), pairs(d.arcs())),
            Ground::DGraph(g) => {
                let e: Vec<String> =
                    g.edges().iter().map(|(u, v, c)| format!("({},{}):{}", u + 1, v + 1, c + 1)).collect();
                format!("{}-graph n={} {{{}}}", g.d(), g.n(), e.join(","))
            }
            Ground::Matrix(m) => format!("matrix {}", grid(m.to_rows())),
            Ground::Bimatrix(g) => format!("bimatrix a={} b={}", grid(g.a_rows()), grid(g.b_rows())),
            Ground::GameForm(f) => {
                let rows: Vec<String> = f.to_labels().iter().map(|r| r.join(" ")).collect();
                format!("form [{}]", rows.join("; "))
            }
        }
    }

    pub fn as_graph(&self) -> Option<&Graph> {
        match self {
            Ground::Graph(g) => Some(g),
            _ => None,
        }
    }

    pub fn as_digraph(&self) -> Option<&Digraph> {
        match self {
            Ground::Digraph(d) => Some(d),
            _ => None,
        }
    }

    pub fn as_dgraph(&self) -> Option<&DGraph> {
        match self {
            Ground::DGraph(g) => Some(g),
            _ => None,
        }
    }

    pub fn as_matrix(&self) -> Option<&MatrixGame> {
        match self {
            Ground::Matrix(m) => Some(m),
            _ => None,
        }
    }

    pub fn as_bimatrix(&self) -> Option<&BimatrixGame> {
        match self {
            Ground::Bimatrix(g) => Some(g),
            _ => None,
        }
    }

    pub fn as_form(&self) -> Option<&GameForm> {
        match self {
            Ground::GameForm(g) => Some(g),
            _ => None,
        }
    }
}

impl From<Graph> for Ground {
    fn from(g: Graph) -> Self {
        Ground::Graph(g)
    }
}

impl From<Digraph> for Ground {
    fn from(d: Digraph) -> Self {
        Ground::Digraph(d)
    }
}

impl From<DGraph> for Ground {
    fn from(g: DGraph) -> Self {
        Ground::DGraph(g)
    }
}

impl From<MatrixGame> for Ground {
    fn from(m: MatrixGame) -> Self {
        Ground::Matrix(m)
    }
}

impl From<BimatrixGame> for Ground {
    fn from(g: BimatrixGame) -> Self {
        Ground::Bimatrix(g)
    }
}

impl From<GameForm> for Ground {
    fn from(g: GameForm) -> Self {
        Ground::GameForm(g)
    }
}
