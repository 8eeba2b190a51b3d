//! Medium files: a line-oriented text format and a JSON equivalent.
//!
//! ```text
//! # comment
//! medium 1
//! dim 2
//! meta generator grid
//! state a 0 0
//! state b 1 0
//! edge a b
//! ```
//!
//! Coordinates are integer vectors (hypercube bits or lattice points). When
//! no `edge` lines are present, states at L1 distance one are adjacent.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::FileError;
use crate::graph::Graph;
use crate::medium::{medium_from_partial_cube_named, Medium};
use crate::partial_cube::{hypercube_embedding, is_isometric_embedding, l1, theta_classes, HypercubeEmbedding};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateRecord {
    pub name: String,
    pub coords: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MediumFile {
    pub version: u32,
    pub dim: usize,
    pub states: Vec<StateRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<(String, String)>>,
    #[serde(default)]
    pub meta: BTreeMap<String, String>,
}

impl MediumFile {
    pub fn new(states: Vec<StateRecord>) -> Self {
        let dim = states.first().map_or(0, |s| s.coords.len());
        MediumFile {
            version: FORMAT_VERSION,
            dim,
            states,
            edges: None,
            meta: BTreeMap::new(),
        }
    }

    pub fn coords(&self) -> Vec<Vec<i64>> {
        self.states.iter().map(|s| s.coords.clone()).collect()
    }

    /// Adjacency: explicit edges if present, otherwise L1 unit pairs.
    pub fn graph(&self) -> Result<Graph, FileError> {
        let n = self.states.len();
        let mut g = Graph::new(n);
        match &self.edges {
            Some(edges) => {
                let index: HashMap<&str, usize> =
                    self.states.iter().enumerate().map(|(i, s)| (s.name.as_str(), i)).collect();
                for (a, b) in edges {
                    let lookup = |x: &String| {
                        index.get(x.as_str()).copied().ok_or_else(|| FileError::Parse {
                            line: 0,
                            message: format!("edge names unknown state {x:?}"),
                        })
                    };
                    let (u, v) = (lookup(a)?, lookup(b)?);
                    if u == v || g.has_edge(u, v) {
                        return Err(FileError::Parse {
                            line: 0,
                            message: format!("invalid or repeated edge {a} {b}"),
                        });
                    }
                    g.add_edge(u, v);
                }
            }
            None => {
                for u in 0..n {
                    for v in u + 1..n {
                        if l1(&self.states[u].coords, &self.states[v].coords) == 1 {
                            g.add_edge(u, v);
                        }
                    }
                }
            }
        }
        Ok(g)
    }

    fn check(&self) -> Result<(), FileError> {
        let parse = |message: String| Err(FileError::Parse { line: 0, message });
        if self.version != FORMAT_VERSION {
            return parse(format!("unsupported version {}", self.version));
        }
        if self.states.is_empty() {
            return parse("no states".into());
        }
        let mut names = std::collections::HashSet::new();
        for s in &self.states {
            if s.coords.len() != self.dim {
                return parse(format!("state {} has {} coordinates, expected {}", s.name, s.coords.len(), self.dim));
            }
            if !names.insert(&s.name) {
                return parse(format!("duplicate state {}", s.name));
            }
            if s.name.is_empty() || s.name.contains(char::is_whitespace) {
                return parse(format!("invalid state name {:?}", s.name));
            }
        }
        Ok(())
    }
}

/// A parsed file together with its graph, canonical hypercube embedding and
/// medium.
#[derive(Clone, Debug)]
pub struct LoadedMedium {
    pub file: MediumFile,
    pub graph: Graph,
    pub embedding: HypercubeEmbedding,
    pub medium: Medium,
}

impl LoadedMedium {
    pub fn names(&self) -> Vec<String> {
        self.file.states.iter().map(|s| s.name.clone()).collect()
    }
}

/// Validates a file and builds its medium.
pub fn load(file: MediumFile) -> Result<LoadedMedium, FileError> {
    file.check()?;
    let graph = file.graph()?;
    is_isometric_embedding(&graph, &file.coords()).map_err(FileError::NotIsometric)?;
    let classes = theta_classes(&graph)?;
    let embedding = hypercube_embedding(&graph, &classes)?;
    let labels: Vec<String> = (0..embedding.tau()).map(|i| format!("c{i}")).collect();
    let names = file.states.iter().map(|s| s.name.clone()).collect();
    let medium = medium_from_partial_cube_named(&embedding, names, &labels);
    Ok(LoadedMedium {
        file,
        graph,
        embedding,
        medium,
    })
}

/// Parses text or JSON (detected by a leading `{`) and loads the medium.
pub fn parse_medium_file(bytes: &[u8]) -> Result<LoadedMedium, FileError> {
    load(parse_file(bytes)?)
}

/// Parses without validating isometry.
pub fn parse_file(bytes: &[u8]) -> Result<MediumFile, FileError> {
    let text = std::str::from_utf8(bytes).map_err(|e| FileError::Parse {
        line: 0,
        message: format!("not UTF-8: {e}"),
    })?;
    if text.trim_start().starts_with('{') {
        return serde_json::from_str(text).map_err(|e| FileError::Parse {
            line: e.line(),
            message: e.to_string(),
        });
    }
    parse_text(text)
}

fn parse_text(text: &str) -> Result<MediumFile, FileError> {
    let mut version = None;
    let mut dim = None;
    let mut states = Vec::new();
    let mut edges: Vec<(String, String)> = Vec::new();
    let mut meta = BTreeMap::new();
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last = line_no;
        let err = |message: String| FileError::Parse { line: line_no, message };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        let key = words.next().expect("non-empty line");
        if version.is_none() && key != "medium" {
            return Err(err("expected header `medium <version>`".into()));
        }
        match key {
            "medium" => {
                if version.is_some() {
                    return Err(err("repeated header".into()));
                }
                let v: u32 = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| err("header needs a version number".into()))?;
                if v != FORMAT_VERSION {
                    return Err(err(format!("unsupported version {v}")));
                }
                version = Some(v);
            }
            "dim" => {
                let d: usize = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or_else(|| err("dim needs a number".into()))?;
                dim = Some(d);
            }
            "meta" => {
                let k = words.next().ok_or_else(|| err("meta needs a key".into()))?;
                let v: Vec<&str> = words.collect();
                meta.insert(k.to_string(), v.join(" "));
                continue;
            }
            "state" => {
                let name = words.next().ok_or_else(|| err("state needs a name".into()))?;
                let coords: Vec<i64> = words
                    .by_ref()
                    .map(|w| w.parse().map_err(|_| err(format!("bad coordinate {w:?}"))))
                    .collect::<Result<_, _>>()?;
                let d = *dim.get_or_insert(coords.len());
                if coords.len() != d {
                    return Err(err(format!("expected {d} coordinates, found {}", coords.len())));
                }
                states.push(StateRecord {
                    name: name.to_string(),
                    coords,
                });
            }
            "edge" => {
                let (Some(a), Some(b)) = (words.next(), words.next()) else {
                    return Err(err("edge needs two state names".into()));
                };
                edges.push((a.to_string(), b.to_string()));
            }
            other => return Err(err(format!("unknown keyword {other:?}"))),
        }
        if words.next().is_some() {
            return Err(err("trailing tokens".into()));
        }
    }
    if version.is_none() {
        return Err(FileError::Parse {
            line: last,
            message: "missing header".into(),
        });
    }
    if states.is_empty() {
        return Err(FileError::Parse {
            line: last,
            message: "no states".into(),
        });
    }
    Ok(MediumFile {
        version: FORMAT_VERSION,
        dim: dim.unwrap_or(0),
        states,
        edges: (!edges.is_empty()).then_some(edges),
        meta,
    })
}

/// Text serialization; `parse_file` inverts it.
pub fn serialize(file: &MediumFile) -> String {
    let mut out = String::new();
    writeln!(out, "medium {}", file.version).unwrap();
    writeln!(out, "dim {}", file.dim).unwrap();
    for (k, v) in &file.meta {
        writeln!(out, "meta {k} {v}").unwrap();
    }
    for s in &file.states {
        write!(out, "state {}", s.name).unwrap();
        for c in &s.coords {
            write!(out, " {c}").unwrap();
        }
        out.push('\n');
    }
    for (a, b) in file.edges.iter().flatten() {
        writeln!(out, "edge {a} {b}").unwrap();
    }
    out
}

pub fn serialize_json(file: &MediumFile) -> String {
    serde_json::to_string_pretty(file).expect("medium file serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQUARE: &str = "medium 1\n# unit square\nstate a 0 0\nstate b 1 0\nstate c 1 1\nstate d 0 1\n";

    #[test]
    fn parses_square() {
        let m = parse_medium_file(SQUARE.as_bytes()).unwrap();
        assert_eq!(m.graph.m(), 4);
        assert_eq!(m.embedding.tau(), 2);
        assert_eq!(m.medium.state_count(), 4);
    }

    #[test]
    fn text_and_json_round_trip() {
        let f = parse_file(SQUARE.as_bytes()).unwrap();
        assert_eq!(parse_file(serialize(&f).as_bytes()).unwrap(), f);
        assert_eq!(parse_file(serialize_json(&f).as_bytes()).unwrap(), f);
    }

    #[test]
    fn empty_state_list_is_parse_error() {
        assert!(matches!(parse_file(b"medium 1\ndim 2\n"), Err(FileError::Parse { .. })));
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_file(b"medium 1\nstate a 0 0\nstate b 1\n").unwrap_err();
        assert!(matches!(err, FileError::Parse { line: 3, .. }), "{err}");
    }

    #[test]
    fn explicit_edges_can_break_isometry() {
        // A path bent so its ends touch.
        let text = "medium 1\nstate a 0 0\nstate b 0 1\nstate c 1 1\nstate d 1 0\nedge a b\nedge b c\nedge c d\n";
        assert!(matches!(parse_medium_file(text.as_bytes()), Err(FileError::NotIsometric(_))));
    }
}
