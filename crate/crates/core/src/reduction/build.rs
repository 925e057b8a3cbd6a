use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::brute::{constrained_min, OracleConfig};
use crate::error::{Error, Result};
use crate::ext::ExtNat;
use crate::graph::{is_total_edge_dominating, EdgeId, EdgeSet, Graph, VertexId};
use crate::reduction::gadget::{H_ATTACH, H_EDGES, H_PATTERN_ATTACHED, H_PATTERN_NONE, H_VERTICES};
use crate::reduction::sat3::{brute_sat, validate_sat3, Assignment, Sat3Instance};

/// Role of a vertex in the reduction graph. Indices are 1-based in the
/// text form: `a1`, `a1_0`, `d2`, `dp2`, `h3_15`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    A(usize),
    APath(usize, u8),
    B(usize),
    BPath(usize, u8),
    C(usize),
    CPath(usize, u8),
    D(usize),
    DPrime(usize),
    H { clause: usize, index: u8 },
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Role::A(i) => write!(f, "a{}", i + 1),
            Role::APath(i, j) => write!(f, "a{}_{j}", i + 1),
            Role::B(i) => write!(f, "b{}", i + 1),
            Role::BPath(i, j) => write!(f, "b{}_{j}", i + 1),
            Role::C(i) => write!(f, "c{}", i + 1),
            Role::CPath(i, j) => write!(f, "c{}_{j}", i + 1),
            Role::D(l) => write!(f, "d{}", l + 1),
            Role::DPrime(l) => write!(f, "dp{}", l + 1),
            Role::H { clause, index } => write!(f, "h{}_{index}", clause + 1),
        }
    }
}

/// Vertices of one variable gadget: three paths `a a0 a1 a2`, `b b0 b1 b2`,
/// `c c0 c1 c2` plus the edges `a c` and `c b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VarGadget {
    pub a: [VertexId; 4],
    pub b: [VertexId; 4],
    pub c: [VertexId; 4],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClauseGadget {
    Pair { d: VertexId, dp: VertexId },
    H { first: VertexId },
}

impl ClauseGadget {
    fn attachment(&self, position: usize, positive: bool) -> VertexId {
        match *self {
            ClauseGadget::Pair { d, dp } => {
                if positive {
                    d
                } else {
                    dp
                }
            }
            ClauseGadget::H { first } => first + H_ATTACH[position],
        }
    }
}

/// The literal edges of one variable: first and second positive
/// occurrence (to `a0` and `b0`), and the negated one (to `c0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Occurrences {
    pub positive: [EdgeId; 2],
    pub negative: EdgeId,
}

#[derive(Clone, Debug)]
pub struct ReductionOutput {
    pub instance: Sat3Instance,
    pub graph: Graph,
    pub k: usize,
    pub tags: Vec<Role>,
    pub homogeneous_clauses: Vec<usize>,
    pub vars: Vec<VarGadget>,
    pub clauses: Vec<ClauseGadget>,
    pub occurrences: Vec<Occurrences>,
}

impl ReductionOutput {
    fn edge(&self, u: VertexId, v: VertexId) -> EdgeId {
        self.graph.edge_between(u, v).expect("gadget edge exists")
    }

    pub fn tag(&self, v: VertexId) -> String {
        format!("{}", self.tags[v])
    }
}

/// Builds the graph G and bound k = 6n + 8s for a SAT-3 instance.
pub fn build_reduction(inst: &Sat3Instance) -> Result<ReductionOutput> {
    let report = validate_sat3(inst);
    if let Some(v) = report.violations.first() {
        return Err(Error::InvalidInput(format!("{v}")));
    }
    let n = inst.num_vars;
    let mut g = Graph::with_vertices(0);
    let mut tags = Vec::new();
    let mut fresh = |g: &mut Graph, role: Role| {
        tags.push(role);
        g.add_vertex()
    };

    let mut vars = Vec::with_capacity(n);
    for i in 0..n {
        let a0 = fresh(&mut g, Role::A(i));
        let a = [
            a0,
            fresh(&mut g, Role::APath(i, 0)),
            fresh(&mut g, Role::APath(i, 1)),
            fresh(&mut g, Role::APath(i, 2)),
        ];
        let b0 = fresh(&mut g, Role::B(i));
        let b = [
            b0,
            fresh(&mut g, Role::BPath(i, 0)),
            fresh(&mut g, Role::BPath(i, 1)),
            fresh(&mut g, Role::BPath(i, 2)),
        ];
        let c0 = fresh(&mut g, Role::C(i));
        let c = [
            c0,
            fresh(&mut g, Role::CPath(i, 0)),
            fresh(&mut g, Role::CPath(i, 1)),
            fresh(&mut g, Role::CPath(i, 2)),
        ];
        for path in [a, b, c] {
            for w in path.windows(2) {
                g.add_edge(w[0], w[1])?;
            }
        }
        g.add_edge(a[0], c[0])?;
        g.add_edge(c[0], b[0])?;
        vars.push(VarGadget { a, b, c });
    }

    let mut clauses = Vec::with_capacity(inst.clauses.len());
    let mut homogeneous = Vec::new();
    for l in 0..inst.clauses.len() {
        if inst.is_homogeneous(l) {
            homogeneous.push(l);
            let first = g.vertex_count();
            for index in 0..H_VERTICES {
                fresh(
                    &mut g,
                    Role::H {
                        clause: l,
                        index: index as u8,
                    },
                );
            }
            for (u, v) in H_EDGES {
                g.add_edge(first + u, first + v)?;
            }
            clauses.push(ClauseGadget::H { first });
        } else {
            let d = fresh(&mut g, Role::D(l));
            let dp = fresh(&mut g, Role::DPrime(l));
            g.add_edge(d, dp)?;
            clauses.push(ClauseGadget::Pair { d, dp });
        }
    }

    // Literal edges; positive occurrences go to a0 then b0, in clause order.
    let mut seen_positive = vec![0usize; n];
    let mut positive = vec![[usize::MAX; 2]; n];
    let mut negative = vec![usize::MAX; n];
    for (l, clause) in inst.clauses.iter().enumerate() {
        for (pos, lit) in clause.iter().enumerate() {
            let at = clauses[l].attachment(pos, lit.positive);
            let gadget = &vars[lit.var];
            if lit.positive {
                let which = seen_positive[lit.var];
                seen_positive[lit.var] += 1;
                let target = if which == 0 { gadget.a[1] } else { gadget.b[1] };
                positive[lit.var][which] = g.add_edge(at, target)?;
            } else {
                negative[lit.var] = g.add_edge(at, gadget.c[1])?;
            }
        }
    }
    let occurrences = (0..n)
        .map(|i| Occurrences {
            positive: positive[i],
            negative: negative[i],
        })
        .collect();

    Ok(ReductionOutput {
        instance: inst.clone(),
        graph: g,
        k: 6 * n + 8 * homogeneous.len(),
        tags,
        homogeneous_clauses: homogeneous,
        vars,
        clauses,
        occurrences,
    })
}

/// The TED-set of size k built from a satisfying assignment.
pub fn encode_assignment(out: &ReductionOutput, a: &Assignment) -> Result<EdgeSet> {
    if !a.satisfies(&out.instance) {
        return Err(Error::EncodingInfeasible(
            "assignment does not satisfy every clause".into(),
        ));
    }
    let mut f = Vec::with_capacity(out.k);
    for (i, gadget) in out.vars.iter().enumerate() {
        let [_, a0, a1, _] = gadget.a;
        let [_, b0, b1, _] = gadget.b;
        let [c, c0, c1, _] = gadget.c;
        let occ = out.occurrences[i];
        f.push(out.edge(a0, a1));
        f.push(out.edge(b0, b1));
        f.push(out.edge(c0, c1));
        if a.values[i] {
            f.push(occ.positive[0]);
            f.push(occ.positive[1]);
            f.push(out.edge(c, c0));
        } else {
            f.push(out.edge(gadget.a[0], a0));
            f.push(out.edge(gadget.b[0], b0));
            f.push(occ.negative);
        }
    }
    for &l in &out.homogeneous_clauses {
        let ClauseGadget::H { first } = out.clauses[l] else {
            unreachable!("homogeneous clauses use the replacement gadget")
        };
        let inside = |w: VertexId| (first..first + H_VERTICES).contains(&w);
        let selected = H_ATTACH.iter().position(|&x| {
            out.graph
                .incident(first + x)
                .iter()
                .any(|&(w, e)| !inside(w) && f.contains(&e))
        });
        let pattern: &[(VertexId, VertexId)] = match selected {
            Some(i) => &H_PATTERN_ATTACHED[i],
            None => &H_PATTERN_NONE,
        };
        f.extend(pattern.iter().map(|&(u, v)| out.edge(first + u, first + v)));
    }
    let f = EdgeSet::from_ids(f);
    debug_assert!(is_total_edge_dominating(&out.graph, &f).unwrap_or(false));
    Ok(f)
}

/// Reads an assignment off a TED-set of size at most k: `x_i = 1` exactly
/// when `c_i c_{i,0}` is in the set.
///
/// Each of the 3n gadget paths needs two of its own edges and each
/// replacement gadget at least 8, so a set of size k has no slack: the edges
/// `a_i c_i`, `c_i b_i` and `d_l d'_l` are all absent, every clause is
/// dominated through a literal edge, and a selected positive (negated)
/// literal edge forces `c_i c_{i,0}` in (out). The decoded assignment
/// therefore satisfies every clause without any exchange step.
pub fn decode_ted_set(out: &ReductionOutput, f: &EdgeSet) -> Result<Assignment> {
    f.check_within(&out.graph)
        .map_err(|e| Error::InvalidCertificate(format!("{e}")))?;
    if !is_total_edge_dominating(&out.graph, f)? {
        return Err(Error::InvalidCertificate(
            "not a total edge dominating set".into(),
        ));
    }
    if f.len() > out.k {
        return Err(Error::InvalidCertificate(format!(
            "set has {} edges, bound is {}",
            f.len(),
            out.k
        )));
    }
    let values = out
        .vars
        .iter()
        .map(|gadget| f.contains(out.edge(gadget.c[0], gadget.c[1])))
        .collect();
    let a = Assignment::new(values);
    if !a.satisfies(&out.instance) {
        return Err(Error::InvalidCertificate(
            "decoded assignment leaves a clause unsatisfied".into(),
        ));
    }
    Ok(a)
}

/// The canonical set for the assignment a set encodes.
pub fn normalize_ted_set(out: &ReductionOutput, f: &EdgeSet) -> Result<EdgeSet> {
    let a = decode_ted_set(out, f)?;
    encode_assignment(out, &a)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub satisfiable: bool,
    pub gamma_t: ExtNat,
    pub k: usize,
    /// Satisfiable exactly when γ'_t ≤ k.
    pub agree: bool,
}

/// Compares exhaustive SAT with the exact γ'_t of the reduction graph.
pub fn reduction_equivalence_check(
    inst: &Sat3Instance,
    cfg: &OracleConfig,
) -> Result<EquivalenceReport> {
    let out = build_reduction(inst)?;
    let satisfiable = brute_sat(inst).is_some();
    let none = EdgeSet::new();
    let gamma_t = constrained_min(&out.graph, true, &none, &none, cfg)?.value;
    let within = gamma_t <= ExtNat::from_usize(out.k);
    Ok(EquivalenceReport {
        satisfiable,
        gamma_t,
        k: out.k,
        agree: satisfiable == within,
    })
}
