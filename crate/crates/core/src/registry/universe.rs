//! Audit universes: enumerable collections of ground objects, plus the named
//! fixtures the registry and the CLI refer to.

use serde::Serialize;

use crate::dgraph::{self, DGraph};
use crate::game::{self, BimatrixGame, GameForm, MatrixGame};
use crate::graph::{self, Digraph, Graph};
use crate::{Error, Ground, Result};

/// A collection of grounds. Parametric universes list objects of one exact
/// size; smaller objects are covered because they occur as subobjects.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Universe {
    /// All labelled graphs on `n` vertices.
    Graphs { n: usize },
    /// `K_1, …, K_n`; with edge order these cover every graph on at most `n` vertices.
    CompleteGraphs { n: usize },
    Digraphs { n: usize },
    CompleteDigraphs { n: usize },
    /// All complete colourings of `K_n` with `d` colours.
    Dgraphs { n: usize, d: usize },
    Matrices { rows: usize, cols: usize, alphabet: usize },
    Bimatrices { rows: usize, cols: usize, alphabet: usize },
    /// Forms with at most `outcomes` outcomes, one per relabelling class
    /// (outcomes numbered in order of first appearance).
    Forms { rows: usize, cols: usize, outcomes: usize },
    Fixture { name: String },
}

/// Indexed access to the grounds of a universe.
pub struct Enumeration {
    count: u64,
    make: Box<dyn Fn(u64) -> Ground + Send + Sync>,
}

impl Enumeration {
    pub fn len(&self) -> u64 {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn get(&self, i: u64) -> Ground {
        (self.make)(i)
    }
}

fn pow(base: usize, exp: usize) -> Result<u64> {
    (base as u64)
        .checked_pow(exp as u32)
        .filter(|&x| x <= 1 << 40)
        .ok_or_else(|| Error::CapExceeded { count: u128::MAX, cap: 1 << 40 })
}

fn digits(mut code: u64, len: usize, base: usize) -> Vec<usize> {
    (0..len)
        .map(|_| {
            let x = (code % base as u64) as usize;
            code /= base as u64;
            x
        })
        .collect()
}

/// Restricted growth strings of length `len` with at most `max` symbols.
fn growth_strings(len: usize, max: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, len: usize, max: usize, used: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for x in 0..(used + 1).min(max) {
            cur.push(x);
            rec(cur, len, max, used.max(x + 1), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(len), len, max, 0, &mut out);
    out
}

pub fn complete_digraph(n: usize) -> Digraph {
    let arcs: Vec<_> = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
    Digraph::from_arcs(n, &arcs).expect("loopless")
}

impl Universe {
    pub fn fixture(name: &str) -> Self {
        Universe::Fixture { name: name.to_string() }
    }

    pub fn describe(&self) -> String {
        match self {
            Universe::Graphs { n } => format!("all labelled graphs on {n} vertices (and their induced subgraphs)"),
            Universe::CompleteGraphs { n } => format!("K_1..K_{n}: every graph on at most {n} vertices"),
            Universe::Digraphs { n } => format!("all labelled digraphs on {n} vertices"),
            Universe::CompleteDigraphs { n } => format!("complete digraphs on 1..{n} vertices"),
            Universe::Dgraphs { n, d } => format!("all {d}-colourings of K_{n}"),
            Universe::Matrices { rows, cols, alphabet } => {
                format!("all {rows}x{cols} matrices over {{0..{}}}", alphabet - 1)
            }
            Universe::Bimatrices { rows, cols, alphabet } => {
                format!("all {rows}x{cols} bimatrix games over {{0..{}}}", alphabet - 1)
            }
            Universe::Forms { rows, cols, outcomes } => {
                format!("all {rows}x{cols} game forms with at most {outcomes} outcomes, up to renaming")
            }
            Universe::Fixture { name } => format!("fixture {name}"),
        }
    }

    pub fn enumerate(&self) -> Result<Enumeration> {
        Ok(match *self {
            Universe::Graphs { n } => {
                let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
                Enumeration {
                    count: pow(2, pairs.len())?,
                    make: Box::new(move |mask| {
                        let mut g = Graph::new(n);
                        for (k, &(u, v)) in pairs.iter().enumerate() {
                            if mask >> k & 1 == 1 {
                                g.add_edge(u, v);
                            }
                        }
                        g.into()
                    }),
                }
            }
            Universe::CompleteGraphs { n } => Enumeration {
                count: n as u64,
                make: Box::new(|i| graph::fixtures::complete(i as usize + 1).into()),
            },
            Universe::Digraphs { n } => {
                let pairs: Vec<(usize, usize)> =
                    (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
                Enumeration {
                    count: pow(2, pairs.len())?,
                    make: Box::new(move |mask| {
                        let mut d = Digraph::new(n);
                        for (k, &(u, v)) in pairs.iter().enumerate() {
                            if mask >> k & 1 == 1 {
                                d.add_arc(u, v);
                            }
                        }
                        d.into()
                    }),
                }
            }
            Universe::CompleteDigraphs { n } => Enumeration {
                count: n as u64,
                make: Box::new(|i| complete_digraph(i as usize + 1).into()),
            },
            Universe::Dgraphs { n, d } => {
                let pairs = n * n.saturating_sub(1) / 2;
                Enumeration {
                    count: pow(d, pairs)?,
                    make: Box::new(move |code| {
                        DGraph::from_pair_colors(n, d, &digits(code, pairs, d)).expect("valid colours").into()
                    }),
                }
            }
            Universe::Matrices { rows, cols, alphabet } => Enumeration {
                count: pow(alphabet, rows * cols)?,
                make: Box::new(move |code| {
                    let cells = digits(code, rows * cols, alphabet).into_iter().map(|x| x as f64).collect();
                    MatrixGame::from_flat(rows, cols, cells).into()
                }),
            },
            Universe::Bimatrices { rows, cols, alphabet } => {
                let len = rows * cols;
                Enumeration {
                    count: pow(alphabet, 2 * len)?,
                    make: Box::new(move |code| {
                        let ds = digits(code, 2 * len, alphabet);
                        let to_rows = |xs: &[usize]| -> Vec<Vec<f64>> {
                            xs.chunks(cols).map(|r| r.iter().map(|&x| x as f64).collect()).collect()
                        };
                        BimatrixGame::from_rows(to_rows(&ds[..len]), to_rows(&ds[len..])).expect("rectangular").into()
                    }),
                }
            }
            Universe::Forms { rows, cols, outcomes } => {
                pow(outcomes, rows * cols)?;
                let all = growth_strings(rows * cols, outcomes);
                Enumeration {
                    count: all.len() as u64,
                    make: Box::new(move |i| {
                        let cells = all[i as usize].clone();
                        let k = cells.iter().max().map_or(0, |&m| m + 1);
                        GameForm::from_flat(rows, cols, cells, k).into()
                    }),
                }
            }
            Universe::Fixture { ref name } => {
                let g = fixture(name)?;
                Enumeration { count: 1, make: Box::new(move |_| g.clone()) }
            }
        })
    }
}

/// Named grounds, in the order the CLI lists them.
pub const FIXTURES: &[(&str, &str)] = &[
    ("g16", "circulant digraph G_16(1,7,8)"),
    ("g43", "circulant digraph G_43(1,7,8)"),
    ("two-triangles", "two directed triangles sharing a vertex"),
    ("wrochna", "ternary graph whose edge deletions all create holes of length divisible by 3"),
    ("cube", "the 3-cube"),
    ("web-10-2", "the web C_10^2"),
    ("pi", "the 2-graph Π"),
    ("delta", "the 3-graph Δ"),
    ("bull", "the bull 2-graph"),
    ("pi-sub-pi", "Π with v4 substituted by Π"),
    ("bull-sub-pi", "the bull with v5 substituted by Π"),
    ("bull-sub-delta", "the bull with v5 substituted by Δ in three new colours"),
    ("line-k33", "L(K_3,3) and its complement as a 2-graph"),
    ("sp-4x4", "SP-free 4x4 matrix with two SP-free 2x2 blocks"),
    ("two-sp-2x3", "2x3 matrix with two saddle points"),
    ("two-sp-2x3-zero-sum", "the 2x3 two-saddle matrix as a zero-sum bimatrix game"),
    ("ne-free-3x3", "locally minimal NE-free 3x3 game"),
    ("ne-free-lm-4x4", "locally minimal NE-free 4x4 game with an NE-free 2x2 subgame"),
    ("ab-form-4x4", "not tight 4x4 form on outcomes a, b"),
    ("tight-lm-4x4", "tight 4x4 form with every line deletion not tight"),
];

pub fn fixture(name: &str) -> Result<Ground> {
    use dgraph::fixtures as dg;
    use game::fixtures as gm;
    use graph::fixtures as gr;
    Ok(match name {
        "g16" => Digraph::circulant(16, &[1, 7, 8])?.into(),
        "g43" => Digraph::circulant(43, &[1, 7, 8])?.into(),
        "two-triangles" => gr::cycles_sharing_vertex(3, 3).into(),
        "wrochna" => gr::wrochna().into(),
        "cube" => gr::cube().into(),
        "web-10-2" => gr::web(10, 2).into(),
        "pi" => dg::pi().into(),
        "delta" => dg::delta().into(),
        "bull" => dg::bull().into(),
        "pi-sub-pi" => dg::pi_sub_pi().into(),
        "bull-sub-pi" => dg::bull_sub_pi().into(),
        "bull-sub-delta" => dg::bull_sub_delta_default().into(),
        "line-k33" => dg::line_knn_2graph(3).into(),
        "sp-4x4" => gm::sp_fixture_4x4().into(),
        "two-sp-2x3" => gm::two_sp_fixture_2x3().into(),
        "two-sp-2x3-zero-sum" => BimatrixGame::zero_sum(&gm::two_sp_fixture_2x3()).into(),
        "ne-free-3x3" => BimatrixGame::make_ne_free_3x3().into(),
        "ne-free-lm-4x4" => gm::ne_free_lm_4x4().into(),
        "ab-form-4x4" => gm::ab_form_4x4().into(),
        "tight-lm-4x4" => gm::tight_lm_4x4().into(),
        _ => {
            return Err(Error::Unknown {
                name: name.to_string(),
                valid: FIXTURES.iter().map(|f| f.0).collect::<Vec<_>>().join(", "),
            })
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(Universe::Graphs { n: 4 }.enumerate().unwrap().len(), 64);
        assert_eq!(Universe::Digraphs { n: 3 }.enumerate().unwrap().len(), 64);
        assert_eq!(Universe::Dgraphs { n: 4, d: 3 }.enumerate().unwrap().len(), 729);
        // Stirling numbers S(9,1) + … + S(9,4)
        assert_eq!(Universe::Forms { rows: 3, cols: 3, outcomes: 4 }.enumerate().unwrap().len(), 1 + 255 + 3025 + 7770);
        assert_eq!(Universe::Forms { rows: 2, cols: 2, outcomes: 2 }.enumerate().unwrap().len(), 8);
    }

    #[test]
    fn decoding_matches_library_enumerators() {
        let e = Universe::Graphs { n: 4 }.enumerate().unwrap();
        for (i, g) in graph::all_graphs(4).enumerate() {
            assert_eq!(e.get(i as u64).as_graph(), Some(&g));
        }
        let e = Universe::Digraphs { n: 3 }.enumerate().unwrap();
        for (i, d) in graph::all_digraphs(3).enumerate() {
            assert_eq!(e.get(i as u64).as_digraph(), Some(&d));
        }
    }

    #[test]
    fn every_fixture_builds() {
        for (name, _) in FIXTURES {
            fixture(name).unwrap();
        }
        assert!(matches!(fixture("nope"), Err(Error::Unknown { .. })));
    }
}
