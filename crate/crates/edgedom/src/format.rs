//! Edge-list text format with optional label sections.
//!
//! ```text
//! # a path on four vertices
//! a b
//! b c
//! c d
//! v a L
//! e a b L1
//! ```
//!
//! Lines with two tokens are edges. `v <vertex> <C|L>` labels a vertex and
//! `e <u> <v> <S|L1|L2>` labels an edge. `#` starts a comment.

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use edgedom_core::families::{ELabel, EdgeLabelledTree, VLabel, VertexLabelledTree};
use edgedom_core::{EdgeId, EdgeSet, Graph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// A graph whose vertices carry the names used in the file, numbered in
/// order of first appearance.
#[derive(Clone, Debug, Default)]
pub struct NamedGraph {
    pub graph: Graph,
    pub names: Vec<String>,
    index: HashMap<String, VertexId>,
}

impl NamedGraph {
    pub fn new() -> NamedGraph {
        NamedGraph::default()
    }

    /// Names vertices by their ids.
    pub fn numbered(graph: Graph) -> NamedGraph {
        let names: Vec<String> = (0..graph.vertex_count()).map(|v| v.to_string()).collect();
        let index = names.iter().cloned().zip(0..).collect();
        NamedGraph {
            graph,
            names,
            index,
        }
    }

    /// Names vertices with the given strings, which must be distinct.
    pub fn with_names(graph: Graph, names: Vec<String>) -> NamedGraph {
        assert_eq!(graph.vertex_count(), names.len());
        let index = names.iter().cloned().zip(0..).collect();
        NamedGraph {
            graph,
            names,
            index,
        }
    }

    pub fn id(&self, name: &str) -> Option<VertexId> {
        self.index.get(name).copied()
    }

    fn intern(&mut self, name: &str) -> VertexId {
        if let Some(&v) = self.index.get(name) {
            return v;
        }
        let v = self.graph.add_vertex();
        self.names.push(name.to_owned());
        self.index.insert(name.to_owned(), v);
        v
    }

    pub fn edge_names(&self, e: EdgeId) -> [&str; 2] {
        let (u, v) = self.graph.endpoints(e);
        [&self.names[u], &self.names[v]]
    }

    pub fn set_names(&self, f: &EdgeSet) -> Vec<[&str; 2]> {
        f.iter().map(|e| self.edge_names(e)).collect()
    }
}

#[derive(Clone, Debug, Default)]
pub struct GraphFile {
    pub graph: NamedGraph,
    pub vertex_labels: Vec<(VertexId, VLabel)>,
    pub edge_labels: Vec<(EdgeId, ELabel)>,
}

fn valid_name(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

fn parse_vlabel(s: &str) -> Option<VLabel> {
    match s {
        "C" => Some(VLabel::C),
        "L" => Some(VLabel::L),
        _ => None,
    }
}

fn parse_elabel(s: &str) -> Option<ELabel> {
    match s {
        "S" => Some(ELabel::S),
        "L1" => Some(ELabel::L1),
        "L2" => Some(ELabel::L2),
        _ => None,
    }
}

pub fn parse_graph(text: &str) -> Result<GraphFile, ParseError> {
    let mut file = GraphFile::default();
    let mut label_lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            [u, v] => {
                for name in [u, v] {
                    if !valid_name(name) {
                        return err(line, format!("invalid vertex name {name:?}"));
                    }
                }
                let a = file.graph.intern(u);
                let b = file.graph.intern(v);
                if let Err(e) = file.graph.graph.add_edge(a, b) {
                    return err(line, format!("edge {u} {v}: {e}"));
                }
            }
            ["v", _, _] | ["e", _, _, _] => label_lines.push((line, tokens)),
            _ => return err(line, format!("cannot read {:?}", content.trim())),
        }
    }
    let g = &file.graph;
    let lookup = |line: usize, name: &str| match g.id(name) {
        Some(v) => Ok(v),
        None => err(line, format!("label for unknown vertex {name:?}")),
    };
    let mut vertex_seen = vec![false; g.graph.vertex_count()];
    let mut edge_seen = vec![false; g.graph.edge_count()];
    for (line, tokens) in label_lines {
        match tokens.as_slice() {
            ["v", x, l] => {
                let v = lookup(line, x)?;
                let Some(label) = parse_vlabel(l) else {
                    return err(line, format!("vertex label must be C or L, got {l:?}"));
                };
                if std::mem::replace(&mut vertex_seen[v], true) {
                    return err(line, format!("vertex {x} labelled twice"));
                }
                file.vertex_labels.push((v, label));
            }
            ["e", x, y, l] => {
                let (u, v) = (lookup(line, x)?, lookup(line, y)?);
                let Some(e) = g.graph.edge_between(u, v) else {
                    return err(line, format!("label for missing edge {x} {y}"));
                };
                let Some(label) = parse_elabel(l) else {
                    return err(line, format!("edge label must be S, L1 or L2, got {l:?}"));
                };
                if std::mem::replace(&mut edge_seen[e], true) {
                    return err(line, format!("edge {x} {y} labelled twice"));
                }
                file.edge_labels.push((e, label));
            }
            _ => unreachable!("only label lines are collected"),
        }
    }
    Ok(file)
}

impl GraphFile {
    pub fn has_labels(&self) -> bool {
        !self.vertex_labels.is_empty() || !self.edge_labels.is_empty()
    }

    pub fn vertex_labelled(&self) -> Result<VertexLabelledTree, String> {
        let n = self.graph.graph.vertex_count();
        if self.vertex_labels.len() != n || !self.edge_labels.is_empty() {
            return Err(format!(
                "expected a C/L label for each of the {n} vertices and no edge labels"
            ));
        }
        let mut labels = vec![VLabel::L; n];
        for &(v, l) in &self.vertex_labels {
            labels[v] = l;
        }
        VertexLabelledTree::new(self.graph.graph.clone(), labels).map_err(|e| e.to_string())
    }

    pub fn edge_labelled(&self) -> Result<EdgeLabelledTree, String> {
        let m = self.graph.graph.edge_count();
        if self.edge_labels.len() != m || !self.vertex_labels.is_empty() {
            return Err(format!(
                "expected an S/L1/L2 label for each of the {m} edges and no vertex labels"
            ));
        }
        let mut labels = vec![ELabel::S; m];
        for &(e, l) in &self.edge_labels {
            labels[e] = l;
        }
        EdgeLabelledTree::new(self.graph.graph.clone(), labels).map_err(|e| e.to_string())
    }
}

pub fn write_graph(g: &NamedGraph) -> String {
    let mut out = String::new();
    for e in 0..g.graph.edge_count() {
        let [u, v] = g.edge_names(e);
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_vertex_labelled(t: &VertexLabelledTree) -> String {
    let g = NamedGraph::numbered(t.graph().clone());
    let mut out = write_graph(&g);
    for (v, l) in t.labels().iter().enumerate() {
        let _ = writeln!(out, "v {v} {l}");
    }
    out
}

pub fn write_edge_labelled(t: &EdgeLabelledTree) -> String {
    let g = NamedGraph::numbered(t.graph().clone());
    let mut out = write_graph(&g);
    for (e, l) in t.labels().iter().enumerate() {
        let [u, v] = g.edge_names(e);
        let _ = writeln!(out, "e {u} {v} {l}");
    }
    out
}
