//! Breadth-first search over operation applications, up to isomorphism of
//! labelled trees, compared against all free trees of a given size.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::enumerate::{canonical_code, free_trees_up_to};
use crate::families::check::{check_ratio, Ratio};
use crate::families::edge::{init_family_tt, ELabel};
use crate::families::generate::{FamilyKind, LabelledTree, Readings};
use crate::families::vertex::{init_family_t, VLabel};
use crate::graph::{diameter, Graph};

fn labelled_code(t: &LabelledTree) -> Vec<u8> {
    match t {
        LabelledTree::Vertex(t) => {
            let labels: Vec<u8> = t.labels().iter().map(|&l| (l == VLabel::L) as u8).collect();
            canonical_code(t.graph(), Some(&labels), None)
        }
        LabelledTree::Edge(t) => {
            let labels: Vec<u8> = t
                .labels()
                .iter()
                .map(|&l| match l {
                    ELabel::S => 0,
                    ELabel::L1 => 1,
                    ELabel::L2 => 2,
                })
                .collect();
            canonical_code(t.graph(), None, Some(&labels))
        }
    }
}

/// Initial trees with at most `max_vertices` vertices.
pub fn initial_trees(kind: FamilyKind, max_vertices: usize) -> Vec<LabelledTree> {
    match kind {
        FamilyKind::T if max_vertices >= 4 => alloc::vec![LabelledTree::Vertex(init_family_t())],
        FamilyKind::T => Vec::new(),
        FamilyKind::Tt => free_trees_up_to(max_vertices)
            .into_iter()
            .filter(|g| diameter(g).ok() == Some(4))
            .map(|g| LabelledTree::Edge(init_family_tt(&g).expect("diameter 4")))
            .collect(),
    }
}

#[derive(Clone, Debug)]
pub struct Reach {
    /// Labelled trees visited, one per isomorphism class.
    pub states: usize,
    /// Canonical codes of the underlying unlabelled trees.
    pub shapes: BTreeSet<Vec<u8>>,
    /// Visited labelled trees that fail the structural observations.
    pub observation_failures: Vec<LabelledTree>,
}

pub fn reachable(kind: FamilyKind, max_vertices: usize, readings: Readings) -> Reach {
    let mut seen = BTreeSet::new();
    let mut shapes = BTreeSet::new();
    let mut observation_failures = Vec::new();
    let mut queue = VecDeque::new();
    for t in initial_trees(kind, max_vertices) {
        if seen.insert(labelled_code(&t)) {
            queue.push_back(t);
        }
    }
    while let Some(t) = queue.pop_front() {
        shapes.insert(canonical_code(t.graph(), None, None));
        if !t.satisfies_observations() {
            observation_failures.push(t.clone());
        }
        let n = t.graph().vertex_count();
        for step in t.applicable_steps(readings) {
            if n + step.op.growth(kind) > max_vertices {
                continue;
            }
            let next = t.apply_with(step, readings).expect("applicable");
            if seen.insert(labelled_code(&next)) {
                queue.push_back(next);
            }
        }
    }
    Reach {
        states: seen.len(),
        shapes,
        observation_failures,
    }
}

#[derive(Clone, Debug)]
pub struct CompletenessReport {
    pub kind: FamilyKind,
    pub max_vertices: usize,
    pub states: usize,
    /// Trees on at most `max_vertices` vertices with the family's ratio
    /// (stars excluded for the vertex-labelled family).
    pub targets: usize,
    /// Targets that no operation sequence reaches.
    pub missing: Vec<Graph>,
    /// Reached trees that do not have the family's ratio.
    pub unsound: Vec<Graph>,
    pub observation_failures: usize,
}

impl CompletenessReport {
    pub fn is_exact(&self) -> bool {
        self.missing.is_empty() && self.unsound.is_empty() && self.observation_failures == 0
    }
}

pub fn completeness(
    kind: FamilyKind,
    max_vertices: usize,
    readings: Readings,
) -> CompletenessReport {
    let reach = reachable(kind, max_vertices, readings);
    let mode = match kind {
        FamilyKind::T => Ratio::Double,
        FamilyKind::Tt => Ratio::Equal,
    };
    let mut targets = 0;
    let mut missing = Vec::new();
    let mut unsound = Vec::new();
    for g in free_trees_up_to(max_vertices) {
        let r = check_ratio(&g).expect("free trees are trees");
        let target = r.holds(mode) && !(kind == FamilyKind::T && r.star);
        let reached = reach.shapes.contains(&canonical_code(&g, None, None));
        if target {
            targets += 1;
            if !reached {
                missing.push(g);
            }
        } else if reached {
            unsound.push(g);
        }
    }
    CompletenessReport {
        kind,
        max_vertices,
        states: reach.states,
        targets,
        missing,
        unsound,
        observation_failures: reach.observation_failures.len(),
    }
}
