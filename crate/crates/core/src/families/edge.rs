//! Trees with edge labels S, L1 and L2, grown from trees of diameter 4.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::{diameter, EdgeId, EdgeSet, Graph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ELabel {
    S,
    L1,
    L2,
}

impl fmt::Display for ELabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ELabel::S => "S",
            ELabel::L1 => "L1",
            ELabel::L2 => "L2",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexClass {
    /// Exactly one incident S-edge.
    A1,
    /// At least two incident S-edges.
    A2,
    /// Every incident edge is an L2-edge.
    B,
    C,
}

/// How to read "adjacent to one leaf edge" in the third operation's guard
/// for an L1-edge `vw`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum GuardReading {
    /// Some leaf edge other than `vw` is incident with `w`.
    #[default]
    FarEnd,
    /// Some leaf edge other than `vw` shares an endpoint with `vw`.
    EitherEnd,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeLabelledTree {
    graph: Graph,
    labels: Vec<ELabel>,
}

impl EdgeLabelledTree {
    /// Wraps a tree and its labels without checking the observation rules.
    pub fn new(graph: Graph, labels: Vec<ELabel>) -> Result<EdgeLabelledTree> {
        if !graph.is_tree() {
            return Err(Error::NotATree("labelled graph is not a tree".into()));
        }
        if labels.len() != graph.edge_count() {
            return Err(Error::InvalidLabelledTree(format!(
                "{} labels for {} edges",
                labels.len(),
                graph.edge_count()
            )));
        }
        Ok(EdgeLabelledTree { graph, labels })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn labels(&self) -> &[ELabel] {
        &self.labels
    }

    pub fn label(&self, e: EdgeId) -> ELabel {
        self.labels[e]
    }

    pub fn into_parts(self) -> (Graph, Vec<ELabel>) {
        (self.graph, self.labels)
    }

    fn s_degree(&self, v: VertexId) -> usize {
        self.graph
            .incident(v)
            .iter()
            .filter(|&&(_, e)| self.labels[e] == ELabel::S)
            .count()
    }

    pub fn vertex_class(&self, v: VertexId) -> VertexClass {
        match self.s_degree(v) {
            1 => VertexClass::A1,
            0 => {
                let inc = self.graph.incident(v);
                if !inc.is_empty() && inc.iter().all(|&(_, e)| self.labels[e] == ELabel::L2) {
                    VertexClass::B
                } else {
                    VertexClass::C
                }
            }
            _ => VertexClass::A2,
        }
    }

    /// The first violated rule of the four structural observations, if any.
    pub fn observation_violation(&self) -> Option<String> {
        let g = &self.graph;
        let sdeg: Vec<usize> = (0..g.vertex_count()).map(|v| self.s_degree(v)).collect();
        for (e, u, v) in g.edges() {
            let (a, b) = (sdeg[u], sdeg[v]);
            match self.labels[e] {
                ELabel::L1 => {
                    if !((a == 1 && b != 1) || (b == 1 && a != 1)) {
                        return Some(format!("L1-edge {u}{v} has S-degrees {a} and {b}"));
                    }
                }
                ELabel::L2 => {
                    if a + b < 2 {
                        return Some(format!("L2-edge {u}{v} meets {} S-edges", a + b));
                    }
                }
                ELabel::S => {
                    if g.is_leaf_edge(e) {
                        return Some(format!("leaf edge {u}{v} is labelled S"));
                    }
                    if a.min(b) != 1 || a.max(b) < 2 {
                        return Some(format!(
                            "S-edge {u}{v} is not in a star of S-edges with at least two edges"
                        ));
                    }
                }
            }
            if self.labels[e] != ELabel::S && a + b == 0 {
                return Some(format!("edge {u}{v} is not adjacent to any S-edge"));
            }
        }
        None
    }

    pub fn satisfies_observations(&self) -> bool {
        self.observation_violation().is_none()
    }

    fn check_site(&self, v: VertexId) -> Option<String> {
        (v >= self.graph.vertex_count()).then(|| format!("vertex {v} does not exist"))
    }

    pub fn o1_blocker(&self, v: VertexId) -> Option<String> {
        self.check_site(v).or_else(|| match self.vertex_class(v) {
            VertexClass::A1 | VertexClass::A2 => None,
            c => Some(format!("vertex is in class {c:?}, not A1 or A2")),
        })
    }

    pub fn o2_blocker(&self, v: VertexId) -> Option<String> {
        self.check_site(v).or_else(|| {
            let c = self.vertex_class(v);
            (c != VertexClass::A2).then(|| format!("vertex is in class {c:?}, not A2"))
        })
    }

    pub fn o3_blocker(&self, v: VertexId, reading: GuardReading) -> Option<String> {
        if let Some(why) = self.check_site(v) {
            return Some(why);
        }
        match self.vertex_class(v) {
            VertexClass::A1 => Some("vertex is in class A1".into()),
            VertexClass::A2 | VertexClass::B => None,
            VertexClass::C => self.o3_c_guard(v, reading),
        }
    }

    fn o3_c_guard(&self, v: VertexId, reading: GuardReading) -> Option<String> {
        let g = &self.graph;
        for &(w, e) in g.incident(v) {
            if self.labels[e] != ELabel::L1 {
                continue;
            }
            let leaf_at = |x: VertexId| {
                g.incident(x)
                    .iter()
                    .any(|&(_, f)| f != e && g.is_leaf_edge(f))
            };
            let near_leaf = match reading {
                GuardReading::FarEnd => leaf_at(w),
                GuardReading::EitherEnd => leaf_at(w) || leaf_at(v),
            };
            if near_leaf || self.has_l1_l1_l2_path(v, w, e) {
                continue;
            }
            return Some(format!(
                "L1-edge {v}{w} has no adjacent leaf edge and starts no L1,L1,L2 path"
            ));
        }
        None
    }

    /// A path `v w x y` labelled L1, L1, L2 where every edge at `x` other
    /// than `wx` is an L2-edge.
    fn has_l1_l1_l2_path(&self, v: VertexId, w: VertexId, vw: EdgeId) -> bool {
        let g = &self.graph;
        g.incident(w).iter().any(|&(x, wx)| {
            if wx == vw || x == v || self.labels[wx] != ELabel::L1 {
                return false;
            }
            let rest = || g.incident(x).iter().filter(|&&(_, f)| f != wx);
            rest().next().is_some() && rest().all(|&(_, f)| self.labels[f] == ELabel::L2)
        })
    }

    pub fn o4_blocker(&self, v: VertexId) -> Option<String> {
        self.check_site(v).or_else(|| {
            let c = self.vertex_class(v);
            (c != VertexClass::B).then(|| format!("vertex is in class {c:?}, not B"))
        })
    }

    pub fn o5_blocker(&self, v: VertexId) -> Option<String> {
        self.check_site(v)
    }

    /// Adds `path.len()` new vertices as a path, joins `v` to the one at
    /// `join`, and labels the join edge then the path edges in order.
    fn grow(
        &self,
        v: VertexId,
        len: usize,
        join: usize,
        join_label: ELabel,
        path: &[ELabel],
    ) -> EdgeLabelledTree {
        let mut out = self.clone();
        let first = out.graph.vertex_count();
        for _ in 0..len {
            out.graph.add_vertex();
        }
        out.graph.add_edge(v, first + join).expect("fresh vertices");
        out.labels.push(join_label);
        for (i, &l) in path.iter().enumerate() {
            out.graph
                .add_edge(first + i, first + i + 1)
                .expect("fresh vertices");
            out.labels.push(l);
        }
        out
    }
}

fn inapplicable(op: &'static str, site: VertexId, reason: String) -> Error {
    Error::OperationInapplicable { op, site, reason }
}

/// Labels a tree of diameter 4: support edges S, leaf edges at the center
/// L2, the other leaf edges L1.
pub fn init_family_tt(g: &Graph) -> Result<EdgeLabelledTree> {
    if !g.is_tree() {
        return Err(Error::NotATree("shape is not a tree".into()));
    }
    let d = diameter(g)?;
    if d != 4 {
        return Err(Error::InvalidInput(format!(
            "shape has diameter {d}, expected 4"
        )));
    }
    let non_leaf_at = |v: VertexId| {
        g.incident(v)
            .iter()
            .filter(|&&(_, e)| !g.is_leaf_edge(e))
            .count()
    };
    let labels = g
        .edges()
        .map(|(e, u, v)| {
            if !g.is_leaf_edge(e) {
                ELabel::S
            } else if non_leaf_at(u) + non_leaf_at(v) >= 2 {
                ELabel::L2
            } else {
                ELabel::L1
            }
        })
        .collect();
    Ok(EdgeLabelledTree {
        graph: g.clone(),
        labels,
    })
}

pub fn vertex_class(t: &EdgeLabelledTree, v: VertexId) -> VertexClass {
    t.vertex_class(v)
}

/// Pendant edge at `v`, labelled L1 when `v` is in A1 and L2 when in A2.
pub fn apply_tt_o1(t: &EdgeLabelledTree, v: VertexId) -> Result<EdgeLabelledTree> {
    if let Some(why) = t.o1_blocker(v) {
        return Err(inapplicable("O1", v, why));
    }
    let label = match t.vertex_class(v) {
        VertexClass::A1 => ELabel::L1,
        _ => ELabel::L2,
    };
    Ok(t.grow(v, 1, 0, label, &[]))
}

/// Path `v u1 u2` with `v u1` an S-edge and `u1 u2` an L1-edge.
pub fn apply_tt_o2(t: &EdgeLabelledTree, v: VertexId) -> Result<EdgeLabelledTree> {
    if let Some(why) = t.o2_blocker(v) {
        return Err(inapplicable("O2", v, why));
    }
    Ok(t.grow(v, 2, 0, ELabel::S, &[ELabel::L1]))
}

/// New path `u1..u5` joined to `v` at `u2`.
pub fn apply_tt_o3(t: &EdgeLabelledTree, v: VertexId) -> Result<EdgeLabelledTree> {
    apply_tt_o3_with(t, v, GuardReading::default())
}

pub fn apply_tt_o3_with(
    t: &EdgeLabelledTree,
    v: VertexId,
    reading: GuardReading,
) -> Result<EdgeLabelledTree> {
    if let Some(why) = t.o3_blocker(v, reading) {
        return Err(inapplicable("O3", v, why));
    }
    use ELabel::*;
    Ok(t.grow(v, 5, 1, L1, &[L1, S, S, L1]))
}

/// New path `u1..u4` joined to the B-vertex `v` at `u1`.
pub fn apply_tt_o4(t: &EdgeLabelledTree, v: VertexId) -> Result<EdgeLabelledTree> {
    if let Some(why) = t.o4_blocker(v) {
        return Err(inapplicable("O4", v, why));
    }
    use ELabel::*;
    Ok(t.grow(v, 4, 0, L1, &[S, S, L1]))
}

/// New path `u1..u5` joined to `v` at its middle vertex by an L2-edge.
pub fn apply_tt_o5(t: &EdgeLabelledTree, v: VertexId) -> Result<EdgeLabelledTree> {
    if let Some(why) = t.o5_blocker(v) {
        return Err(inapplicable("O5", v, why));
    }
    use ELabel::*;
    Ok(t.grow(v, 5, 2, L2, &[L1, S, S, L1]))
}

/// All S-edges.
pub fn s_edge_set(t: &EdgeLabelledTree) -> Result<EdgeSet> {
    if let Some(why) = t.observation_violation() {
        return Err(Error::InvalidLabelledTree(why));
    }
    Ok(t.labels
        .iter()
        .enumerate()
        .filter(|&(_, &l)| l == ELabel::S)
        .map(|(e, _)| e)
        .collect())
}

/// Diameter-4 tree: a center joined to `legs.len()` support vertices, the
/// i-th carrying `legs[i]` leaves, plus `center_leaves` leaves on the center.
pub fn diameter_four_shape(legs: &[usize], center_leaves: usize) -> Result<Graph> {
    if legs.len() < 2 || legs.contains(&0) {
        return Err(Error::InvalidInput(
            "need at least two legs, each with at least one leaf".into(),
        ));
    }
    let mut g = Graph::with_vertices(1);
    for &k in legs {
        let s = g.add_vertex();
        g.add_edge(0, s)?;
        for _ in 0..k {
            let l = g.add_vertex();
            g.add_edge(s, l)?;
        }
    }
    for _ in 0..center_leaves {
        let l = g.add_vertex();
        g.add_edge(0, l)?;
    }
    Ok(g)
}
