//! JSON formats for games and game forms.

use serde::{Deserialize, Serialize};

use super::{BimatrixGame, GameForm, MatrixGame};
use crate::{Error, Result};

/// `{"a": [[..]], "b": [[..]]}`; without `b` the document is a matrix game.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameJson {
    pub a: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<Vec<f64>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormJson {
    pub outcomes: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum AnyGame {
    Matrix(MatrixGame),
    Bimatrix(BimatrixGame),
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(format!("line {} column {}: {e}", e.line(), e.column()))
}

pub fn parse_game(text: &str) -> Result<AnyGame> {
    let doc: GameJson = serde_json::from_str(text).map_err(parse_err)?;
    match doc.b {
        None => Ok(AnyGame::Matrix(MatrixGame::from_rows(doc.a).map_err(field("a"))?)),
        Some(b) => Ok(AnyGame::Bimatrix(BimatrixGame::from_rows(doc.a, b).map_err(field("a/b"))?)),
    }
}

pub fn parse_form(text: &str) -> Result<GameForm> {
    let doc: FormJson = serde_json::from_str(text).map_err(parse_err)?;
    GameForm::from_labels(&doc.outcomes).map_err(field("outcomes"))
}

fn field(name: &'static str) -> impl Fn(Error) -> Error {
    move |e| Error::Parse(format!("field `{name}`: {e}"))
}

impl From<&MatrixGame> for GameJson {
    fn from(m: &MatrixGame) -> Self {
        GameJson { a: m.to_rows(), b: None }
    }
}

impl From<&BimatrixGame> for GameJson {
    fn from(g: &BimatrixGame) -> Self {
        GameJson { a: g.a_rows(), b: Some(g.b_rows()) }
    }
}

impl From<&GameForm> for FormJson {
    fn from(g: &GameForm) -> Self {
        FormJson { outcomes: g.to_labels() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_game_kinds() {
        assert!(matches!(parse_game(r#"{"a": [[0, 1], [1, 0]]}"#).unwrap(), AnyGame::Matrix(_)));
        let g = parse_game(r#"{"a": [[1]], "b": [[2]]}"#).unwrap();
        assert!(matches!(g, AnyGame::Bimatrix(_)));
        let err = parse_game(r#"{"a": [[1, 2], [3]]}"#).unwrap_err();
        assert!(err.to_string().contains("field `a`"), "{err}");
        assert!(parse_game("").is_err());
    }

    #[test]
    fn form_round_trip() {
        let g = parse_form(r#"{"outcomes": [["w1","w1"],["w2","w3"]]}"#).unwrap();
        let back = serde_json::to_string(&FormJson::from(&g)).unwrap();
        assert_eq!(parse_form(&back).unwrap(), g);
    }
}
