//! The machine-readable output shared by every subcommand.
//!
//! Field names are stable. Sections that do not apply to a command are
//! omitted from the JSON rather than written as `null`.

use dynnikov_core::{DynnikovCoord, EcfExpansion, TorusCoord};
use serde::{Deserialize, Serialize};

use crate::int::Int;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ab {
    pub a: Int,
    pub b: Int,
}

impl From<&DynnikovCoord> for Ab {
    fn from(d: &DynnikovCoord) -> Self {
        Ab {
            a: d.a().into(),
            b: d.b().into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pq {
    pub p: Int,
    pub q: Int,
}

impl From<&TorusCoord> for Pq {
    fn from(t: &TorusCoord) -> Self {
        Pq {
            p: t.p().into(),
            q: t.q().into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EcfRecord {
    pub quotients: Vec<Int>,
    pub trailing_one: bool,
    pub epsilon: i8,
    pub terminal: Pq,
    pub length: Int,
}

impl From<&EcfExpansion> for EcfRecord {
    fn from(e: &EcfExpansion) -> Self {
        EcfRecord {
            quotients: e.quotients.iter().map(Int::from).collect(),
            trailing_one: e.trailing_one,
            epsilon: e.epsilon,
            terminal: (&e.terminal).into(),
            length: e.length().into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceRecord {
    /// Graph distance to the reference curves.
    pub graph: u32,
    /// Number of vertices searched.
    pub explored: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphVertex {
    pub coords: [Int; 2],
    pub distance: u32,
    pub orbit: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphEdge {
    pub from: [Int; 2],
    pub to: [Int; 2],
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub plane: String,
    pub depth: u32,
    pub vertices: Vec<GraphVertex>,
    pub edges: Vec<GraphEdge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
    pub checked: u64,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRecord {
    pub bound: u64,
    pub depth: u32,
    pub passed: bool,
    pub checks: Vec<CheckRecord>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<[Int; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dynnikov: Option<Ab>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub torus: Option<Pq>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<Int>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub primitive: Option<Ab>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub length: Option<Int>,
    /// Letters in application order, first applied first.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<Vec<Ab>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub terminal: Option<Ab>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ecf: Option<EcfRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distance: Option<DistanceRecord>,
    /// Track points in clockwise order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<[Int; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verify: Option<VerifyRecord>,
}

impl OutputRecord {
    pub fn new(command: &str) -> Self {
        OutputRecord {
            command: command.to_string(),
            ..Default::default()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records always serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_sections_are_omitted() {
        let r = OutputRecord::new("classify");
        assert_eq!(r.to_json(), "{\n  \"command\": \"classify\"\n}");
    }

    #[test]
    fn round_trip() {
        let d = DynnikovCoord::new(10, 3).unwrap();
        let mut r = OutputRecord::new("classify");
        r.input = Some([Int::from(10), Int::from(3)]);
        r.dynnikov = Some((&d).into());
        r.word = Some(vec!["tc".into(), "td-".into()]);
        r.ecf = Some((&dynnikov_core::ecf_expand(13, -10).unwrap()).into());
        let back: OutputRecord = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
