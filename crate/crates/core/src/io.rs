//! Reading and writing the JSON artifacts: character tables, quivers,
//! quiver representations and graphs.

use std::fmt;

use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::chartab::CharacterTable;
use crate::quiverrep::{Quiver, QuiverRep};
use crate::rootsys::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("not a {kind}: {message}")]
    Invalid { kind: &'static str, message: String },
    #[error("unrecognized artifact: {0}")]
    Unrecognized(String),
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        let message = e.to_string();
        let message = match message.rfind(" at line ") {
            Some(i) => message[..i].to_string(),
            None => message,
        };
        IoError::Syntax { line: e.line(), column: e.column(), message }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Artifact {
    Table(CharacterTable),
    Representation(QuiverRep),
    Quiver(Quiver),
    Graph(Graph),
}

impl Artifact {
    pub fn kind(&self) -> &'static str {
        match self {
            Artifact::Table(_) => "character table",
            Artifact::Representation(_) => "quiver representation",
            Artifact::Quiver(_) => "quiver",
            Artifact::Graph(_) => "graph",
        }
    }

    pub fn to_value(&self) -> Value {
        let v = match self {
            Artifact::Table(t) => serde_json::to_value(t),
            Artifact::Representation(r) => serde_json::to_value(r),
            Artifact::Quiver(q) => serde_json::to_value(q),
            Artifact::Graph(g) => serde_json::to_value(g),
        };
        v.expect("artifacts serialize")
    }

    pub fn to_json(&self) -> String {
        to_pretty(&self.to_value())
    }
}

impl fmt::Display for Artifact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind())
    }
}

pub fn to_pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn typed<T: serde::de::DeserializeOwned>(v: Value, kind: &'static str) -> Result<T, IoError> {
    serde_json::from_value(v).map_err(|e| IoError::Invalid { kind, message: e.to_string() })
}

/// Parses any artifact, telling the kinds apart by their top-level keys.
pub fn parse_artifact(text: &str) -> Result<Artifact, IoError> {
    let v: Value = serde_json::from_str(text)?;
    let obj = v.as_object().ok_or_else(|| IoError::Unrecognized("top level is not an object".into()))?;
    let has = |k: &str| obj.contains_key(k);
    if has("rows") && has("classes") {
        typed(v, "character table").map(Artifact::Table)
    } else if has("maps") {
        typed(v, "quiver representation").map(Artifact::Representation)
    } else if has("arrows") {
        typed(v, "quiver").map(Artifact::Quiver)
    } else if has("edges") {
        typed(v, "graph").map(Artifact::Graph)
    } else {
        let keys: Vec<&str> = obj.keys().map(String::as_str).collect();
        Err(IoError::Unrecognized(format!("keys {keys:?}")))
    }
}

pub fn parse_table(text: &str) -> Result<CharacterTable, IoError> {
    typed(serde_json::from_str(text)?, "character table")
}

pub fn parse_rep(text: &str) -> Result<QuiverRep, IoError> {
    typed(serde_json::from_str(text)?, "quiver representation")
}

pub fn parse_quiver(text: &str) -> Result<Quiver, IoError> {
    typed(serde_json::from_str(text)?, "quiver")
}

pub fn parse_graph(text: &str) -> Result<Graph, IoError> {
    typed(serde_json::from_str(text)?, "graph")
}

/// Parse, serialize, parse again; true when both parses agree.
pub fn roundtrip(text: &str) -> Result<(Artifact, bool), IoError> {
    let first = parse_artifact(text)?;
    let second = parse_artifact(&first.to_json())?;
    let same = first == second && first.to_value() == second.to_value();
    Ok((first, same))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::builtin_table;
    use crate::quiverrep::enumerate_indecomposables;
    use crate::rootsys::DynkinType;

    #[test]
    fn table_roundtrip() {
        let t = builtin_table("S4").unwrap();
        let (a, ok) = roundtrip(&to_pretty(&t)).unwrap();
        assert!(ok);
        assert_eq!(a, Artifact::Table(t));
    }

    #[test]
    fn rep_quiver_graph_roundtrip() {
        let q = Quiver::dynkin(DynkinType::a(3));
        let reps = enumerate_indecomposables(&q).unwrap();
        let v = QuiverRep::direct_sum_all(&q, reps.iter().map(|(_, r)| r)).unwrap();
        assert!(roundtrip(&to_pretty(&v)).unwrap().1);
        assert!(roundtrip(&to_pretty(&q)).unwrap().1);
        assert!(roundtrip(&to_pretty(&Graph::dynkin(DynkinType::e(8)))).unwrap().1);
    }

    #[test]
    fn truncated_file_reports_position() {
        let text = to_pretty(&builtin_table("S3").unwrap());
        let cut = &text[..text.len() / 2];
        match roundtrip(cut) {
            Err(IoError::Syntax { line, column, .. }) => {
                assert_eq!(line, cut.lines().count());
                assert!(column > 0);
            }
            other => panic!("expected a syntax error, got {other:?}"),
        }
    }

    #[test]
    fn wrong_shapes_rejected() {
        let bad = r#"{"quiver": {"vertices": 2, "arrows": [[0, 1]]}, "dims": [1, 2], "maps": [{"rows": 1, "cols": 1, "entries": [["1"]]}]}"#;
        assert!(matches!(parse_artifact(bad), Err(IoError::Invalid { .. })));
        assert!(matches!(parse_artifact(r#"{"foo": 1}"#), Err(IoError::Unrecognized(_))));
        assert!(matches!(parse_artifact("[1, 2]"), Err(IoError::Unrecognized(_))));
    }
}
