//! Trees with vertex labels C and L, grown from a labelled P4.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VLabel {
    C,
    L,
}

impl fmt::Display for VLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VLabel::C => "C",
            VLabel::L => "L",
        })
    }
}

/// How to read "u has a leaf other than v" in the first operation's second
/// precondition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum LeafReading {
    /// u has a leaf neighbor distinct from v.
    #[default]
    Distinct,
    /// u has some leaf neighbor, possibly v itself.
    AnyLeaf,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexLabelledTree {
    graph: Graph,
    labels: Vec<VLabel>,
}

impl VertexLabelledTree {
    /// Wraps a tree and its labels without checking the observation rules.
    pub fn new(graph: Graph, labels: Vec<VLabel>) -> Result<VertexLabelledTree> {
        if !graph.is_tree() {
            return Err(Error::NotATree("labelled graph is not a tree".into()));
        }
        if labels.len() != graph.vertex_count() {
            return Err(Error::InvalidLabelledTree(format!(
                "{} labels for {} vertices",
                labels.len(),
                graph.vertex_count()
            )));
        }
        Ok(VertexLabelledTree { graph, labels })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn labels(&self) -> &[VLabel] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> VLabel {
        self.labels[v]
    }

    pub fn into_parts(self) -> (Graph, Vec<VLabel>) {
        (self.graph, self.labels)
    }

    fn is_c(&self, v: VertexId) -> bool {
        self.labels[v] == VLabel::C
    }

    fn has_leaf_neighbor(&self, v: VertexId, except: Option<VertexId>) -> bool {
        self.graph
            .neighbors(v)
            .any(|w| Some(w) != except && self.graph.is_leaf(w))
    }

    fn c_partner(&self, v: VertexId) -> Option<VertexId> {
        self.graph.neighbors(v).find(|&w| self.is_c(w))
    }

    /// The first violated rule of the four structural observations, if any.
    pub fn observation_violation(&self) -> Option<String> {
        let g = &self.graph;
        for v in 0..g.vertex_count() {
            if g.is_leaf(v) && self.is_c(v) {
                return Some(format!("leaf {v} is labelled C"));
            }
            if g.is_support(v) && !self.is_c(v) {
                return Some(format!("support vertex {v} is labelled L"));
            }
            if self.is_c(v) {
                let c = g.neighbors(v).filter(|&w| self.is_c(w)).count();
                if c != 1 {
                    return Some(format!("C-vertex {v} has {c} C-neighbors"));
                }
            } else if let Some(w) = g.neighbors(v).find(|&w| !self.is_c(w)) {
                return Some(format!("L-vertices {v} and {w} are adjacent"));
            }
        }
        for (_, u, w) in g.edges() {
            if !(self.is_c(u) && self.is_c(w)) {
                continue;
            }
            for (x, y) in [(u, w), (w, u)] {
                let inner_l = g.neighbors(x).any(|z| !self.is_c(z) && !g.is_leaf(z));
                if inner_l && !self.has_leaf_neighbor(y, None) {
                    return Some(format!(
                        "C-C edge {x}{y}: {x} has a non-leaf L-neighbor but {y} has no leaf"
                    ));
                }
            }
        }
        None
    }

    pub fn satisfies_observations(&self) -> bool {
        self.observation_violation().is_none()
    }

    /// Why the first operation cannot be applied at `v`, if it cannot.
    pub fn o1_blocker(&self, v: VertexId, reading: LeafReading) -> Option<String> {
        let g = &self.graph;
        if v >= g.vertex_count() {
            return Some(format!("vertex {v} does not exist"));
        }
        if self.is_c(v) {
            return Some("vertex is labelled C".into());
        }
        let dist = g.bfs(v);
        for (w, &d) in dist.iter().enumerate() {
            if d == Some(2) && self.is_c(w) && !self.has_leaf_neighbor(w, None) {
                return Some(format!("C-vertex {w} at distance 2 has no leaf neighbor"));
            }
        }
        for u in g.neighbors(v) {
            let Some(w) = (self.is_c(u)).then(|| self.c_partner(u)).flatten() else {
                continue;
            };
            let except = match reading {
                LeafReading::Distinct => Some(v),
                LeafReading::AnyLeaf => None,
            };
            let u_ok = self.has_leaf_neighbor(u, except);
            let w_ok = g.neighbors(w).filter(|&z| z != u).all(|z| g.is_leaf(z));
            if !u_ok && !w_ok {
                return Some(format!(
                    "C-C edge {u}{w}: {u} has no other leaf and {w} has a non-leaf neighbor"
                ));
            }
        }
        None
    }

    pub fn o2_blocker(&self, v: VertexId) -> Option<String> {
        if v >= self.graph.vertex_count() {
            return Some(format!("vertex {v} does not exist"));
        }
        (!self.is_c(v)).then(|| "vertex is labelled L".into())
    }
}

/// The labelled P4 `L C C L`.
pub fn init_family_t() -> VertexLabelledTree {
    VertexLabelledTree {
        graph: Graph::path(4),
        labels: vec![VLabel::L, VLabel::C, VLabel::C, VLabel::L],
    }
}

/// Glues a labelled P4 onto the L-vertex `v` by one of its leaves.
pub fn apply_t_o1(t: &VertexLabelledTree, v: VertexId) -> Result<VertexLabelledTree> {
    apply_t_o1_with(t, v, LeafReading::default())
}

pub fn apply_t_o1_with(
    t: &VertexLabelledTree,
    v: VertexId,
    reading: LeafReading,
) -> Result<VertexLabelledTree> {
    if let Some(reason) = t.o1_blocker(v, reading) {
        return Err(Error::OperationInapplicable {
            op: "O1",
            site: v,
            reason,
        });
    }
    let mut out = t.clone();
    let mut prev = v;
    for label in [VLabel::C, VLabel::C, VLabel::L] {
        let u = out.graph.add_vertex();
        out.graph.add_edge(prev, u)?;
        out.labels.push(label);
        prev = u;
    }
    Ok(out)
}

/// Hangs a new L-leaf on the C-vertex `v`.
pub fn apply_t_o2(t: &VertexLabelledTree, v: VertexId) -> Result<VertexLabelledTree> {
    if let Some(reason) = t.o2_blocker(v) {
        return Err(Error::OperationInapplicable {
            op: "O2",
            site: v,
            reason,
        });
    }
    let mut out = t.clone();
    let u = out.graph.add_vertex();
    out.graph.add_edge(v, u)?;
    out.labels.push(VLabel::L);
    Ok(out)
}

/// All edges with both ends labelled C.
pub fn cc_edge_set(t: &VertexLabelledTree) -> Result<EdgeSet> {
    if let Some(why) = t.observation_violation() {
        return Err(Error::InvalidLabelledTree(why));
    }
    Ok(t.graph
        .edges()
        .filter(|&(_, u, v)| t.is_c(u) && t.is_c(v))
        .map(|(e, _, _)| e)
        .collect())
}
