use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::families::edge::{
    apply_tt_o1, apply_tt_o2, apply_tt_o3_with, apply_tt_o4, apply_tt_o5, diameter_four_shape,
    init_family_tt, EdgeLabelledTree, GuardReading,
};
use crate::families::vertex::{
    apply_t_o1_with, apply_t_o2, init_family_t, LeafReading, VertexLabelledTree,
};
use crate::graph::{Graph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// Vertex labels; γ'_t = 2γ'.
    T,
    /// Edge labels; γ'_t = γ'.
    Tt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    O1,
    O2,
    O3,
    O4,
    O5,
}

impl Op {
    pub const ALL: [Op; 5] = [Op::O1, Op::O2, Op::O3, Op::O4, Op::O5];

    pub fn name(self) -> &'static str {
        match self {
            Op::O1 => "O1",
            Op::O2 => "O2",
            Op::O3 => "O3",
            Op::O4 => "O4",
            Op::O5 => "O5",
        }
    }

    pub fn from_name(s: &str) -> Option<Op> {
        Op::ALL.into_iter().find(|op| op.name() == s)
    }

    /// Operations defined for a family.
    pub fn for_kind(kind: FamilyKind) -> &'static [Op] {
        match kind {
            FamilyKind::T => &Op::ALL[..2],
            FamilyKind::Tt => &Op::ALL,
        }
    }

    /// Vertices the operation adds.
    pub fn growth(self, kind: FamilyKind) -> usize {
        match (kind, self) {
            (FamilyKind::T, Op::O1) => 3,
            (FamilyKind::T, _) => 1,
            (FamilyKind::Tt, Op::O1) => 1,
            (FamilyKind::Tt, Op::O2) => 2,
            (FamilyKind::Tt, Op::O4) => 4,
            (FamilyKind::Tt, _) => 5,
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub op: Op,
    pub site: VertexId,
}

/// Precondition readings where the wording admits two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Readings {
    pub leaf: LeafReading,
    pub guard: GuardReading,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LabelledTree {
    Vertex(VertexLabelledTree),
    Edge(EdgeLabelledTree),
}

impl LabelledTree {
    pub fn kind(&self) -> FamilyKind {
        match self {
            LabelledTree::Vertex(_) => FamilyKind::T,
            LabelledTree::Edge(_) => FamilyKind::Tt,
        }
    }

    pub fn graph(&self) -> &Graph {
        match self {
            LabelledTree::Vertex(t) => t.graph(),
            LabelledTree::Edge(t) => t.graph(),
        }
    }

    pub fn satisfies_observations(&self) -> bool {
        match self {
            LabelledTree::Vertex(t) => t.satisfies_observations(),
            LabelledTree::Edge(t) => t.satisfies_observations(),
        }
    }

    pub fn is_applicable(&self, step: Step, readings: Readings) -> bool {
        let v = step.site;
        if v >= self.graph().vertex_count() {
            return false;
        }
        match self {
            LabelledTree::Vertex(t) => match step.op {
                Op::O1 => t.o1_blocker(v, readings.leaf).is_none(),
                Op::O2 => t.o2_blocker(v).is_none(),
                _ => false,
            },
            LabelledTree::Edge(t) => match step.op {
                Op::O1 => t.o1_blocker(v).is_none(),
                Op::O2 => t.o2_blocker(v).is_none(),
                Op::O3 => t.o3_blocker(v, readings.guard).is_none(),
                Op::O4 => t.o4_blocker(v).is_none(),
                Op::O5 => t.o5_blocker(v).is_none(),
            },
        }
    }

    /// Every applicable step, by operation then vertex.
    pub fn applicable_steps(&self, readings: Readings) -> Vec<Step> {
        let n = self.graph().vertex_count();
        Op::for_kind(self.kind())
            .iter()
            .flat_map(|&op| (0..n).map(move |site| Step { op, site }))
            .filter(|&s| self.is_applicable(s, readings))
            .collect()
    }

    pub fn apply(&self, step: Step) -> Result<LabelledTree> {
        self.apply_with(step, Readings::default())
    }

    pub fn apply_with(&self, step: Step, readings: Readings) -> Result<LabelledTree> {
        let v = step.site;
        Ok(match self {
            LabelledTree::Vertex(t) => LabelledTree::Vertex(match step.op {
                Op::O1 => apply_t_o1_with(t, v, readings.leaf)?,
                Op::O2 => apply_t_o2(t, v)?,
                op => {
                    return Err(Error::OperationInapplicable {
                        op: op.name(),
                        site: v,
                        reason: "the vertex-labelled family has only O1 and O2".into(),
                    })
                }
            }),
            LabelledTree::Edge(t) => LabelledTree::Edge(match step.op {
                Op::O1 => apply_tt_o1(t, v)?,
                Op::O2 => apply_tt_o2(t, v)?,
                Op::O3 => apply_tt_o3_with(t, v, readings.guard)?,
                Op::O4 => apply_tt_o4(t, v)?,
                Op::O5 => apply_tt_o5(t, v)?,
            }),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generation {
    pub start: LabelledTree,
    pub steps: Vec<Step>,
    pub tree: LabelledTree,
}

/// Random diameter-4 tree: 2 or 3 support vertices with 1 or 2 leaves
/// each, and up to one leaf on the center.
pub fn random_diameter_four(rng: &mut impl Rng) -> Graph {
    let legs: Vec<usize> = (0..rng.gen_range(2..=3))
        .map(|_| rng.gen_range(1..=2))
        .collect();
    diameter_four_shape(&legs, rng.gen_range(0..=1)).expect("at least two legs")
}

/// Starts from the family's initial tree and applies up to `budget`
/// uniformly chosen applicable steps.
pub fn generate(kind: FamilyKind, seed: u64, budget: usize) -> Generation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let start = match kind {
        FamilyKind::T => LabelledTree::Vertex(init_family_t()),
        FamilyKind::Tt => {
            let shape = random_diameter_four(&mut rng);
            LabelledTree::Edge(init_family_tt(&shape).expect("diameter 4"))
        }
    };
    let mut tree = start.clone();
    let mut steps = Vec::with_capacity(budget);
    for _ in 0..budget {
        let options = tree.applicable_steps(Readings::default());
        if options.is_empty() {
            break;
        }
        let step = options[rng.gen_range(0..options.len())];
        tree = tree.apply(step).expect("step was listed as applicable");
        steps.push(step);
    }
    Generation { start, steps, tree }
}

pub fn replay(start: &LabelledTree, steps: &[Step]) -> Result<LabelledTree> {
    steps.iter().try_fold(start.clone(), |t, &s| t.apply(s))
}
