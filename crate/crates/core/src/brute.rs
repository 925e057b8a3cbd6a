//! Exact exponential-time oracle.
//!
//! Both problems are hitting-set problems over the edges: for ED every edge
//! must meet its closed neighborhood N[e], for TED its open neighborhood. The
//! search is iterative deepening on the set size. At each node it branches on
//! the unhit edge with the fewest remaining candidates c_1..c_m, where branch
//! i takes c_i and forbids c_1..c_{i-1}. Every hitting set is therefore
//! reachable along exactly one path, which lets the same search enumerate all
//! minimum sets without duplicates.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ext::ExtNat;
use crate::graph::{EdgeId, EdgeSet, Graph, SolveResult};
use crate::tree::FourValues;

type Mask = u128;

/// Size limit for the oracle. Masks are 128 bits wide, so `edge_cap` is
/// clamped to 128.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub edge_cap: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { edge_cap: 24 }
    }
}

impl OracleConfig {
    pub fn with_cap(edge_cap: usize) -> OracleConfig {
        OracleConfig {
            edge_cap: edge_cap.min(Mask::BITS as usize),
        }
    }
}

struct Instance {
    /// `targets[e]`: edges that dominate `e`.
    targets: Vec<Mask>,
    /// For every candidate, the targets it hits.
    hits: Vec<Mask>,
}

impl Instance {
    fn new(g: &Graph, total: bool) -> Instance {
        let m = g.edge_count();
        let mut targets = alloc::vec![0 as Mask; m];
        for (e, t) in targets.iter_mut().enumerate() {
            for f in g.edge_neighbors(e) {
                *t |= 1 << f;
            }
            if !total {
                *t |= 1 << e;
            }
        }
        let mut hits = alloc::vec![0 as Mask; m];
        for (e, &t) in targets.iter().enumerate() {
            for c in bits(t) {
                hits[c] |= 1 << e;
            }
        }
        Instance { targets, hits }
    }

    fn all(&self) -> Mask {
        full(self.targets.len())
    }
}

fn full(m: usize) -> Mask {
    if m == Mask::BITS as usize {
        Mask::MAX
    } else {
        (1 << m) - 1
    }
}

fn bits(mut x: Mask) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if x == 0 {
            return None;
        }
        let i = x.trailing_zeros() as usize;
        x &= x - 1;
        Some(i)
    })
}

struct Search<'a> {
    inst: &'a Instance,
    /// Stop after the first solution.
    first_only: bool,
    found: Vec<Mask>,
}

impl Search<'_> {
    /// Greedy packing of unhit targets with pairwise disjoint candidate sets.
    fn lower_bound(&self, unhit: Mask, allowed: Mask) -> usize {
        let mut used: Mask = 0;
        let mut bound = 0;
        for e in bits(unhit) {
            let cand = self.inst.targets[e] & allowed;
            if cand & used == 0 {
                used |= cand;
                bound += 1;
            }
        }
        bound
    }

    /// Returns true when the caller should stop.
    fn run(&mut self, chosen: Mask, unhit: Mask, allowed: Mask, budget: usize) -> bool {
        if unhit == 0 {
            self.found.push(chosen);
            return self.first_only;
        }
        if budget == 0 {
            return false;
        }
        let mut pick = None;
        let mut best = u32::MAX;
        for e in bits(unhit) {
            let n = (self.inst.targets[e] & allowed).count_ones();
            if n < best {
                best = n;
                pick = Some(e);
                if n <= 1 {
                    break;
                }
            }
        }
        let Some(pick) = pick else { return false };
        if best == 0 || self.lower_bound(unhit, allowed) > budget {
            return false;
        }
        let mut allowed = allowed;
        for c in bits(self.inst.targets[pick] & allowed) {
            let next_unhit = unhit & !self.inst.hits[c];
            allowed &= !(1 << c);
            if self.run(chosen | 1 << c, next_unhit, allowed, budget - 1) {
                return true;
            }
        }
        false
    }
}

/// Minimum hitting sets with `forced` members included and `forbidden`
/// members excluded. Returns `INF` and no sets when no feasible set exists.
fn solve(g: &Graph, total: bool, forced: Mask, forbidden: Mask, all: bool) -> (ExtNat, Vec<Mask>) {
    let inst = Instance::new(g, total);
    let everything = inst.all();
    let mut unhit = everything;
    for c in bits(forced) {
        unhit &= !inst.hits[c];
    }
    let allowed = everything & !forbidden & !forced;
    if bits(unhit).any(|e| inst.targets[e] & allowed == 0) {
        return (ExtNat::INF, Vec::new());
    }
    let mut search = Search {
        inst: &inst,
        first_only: !all,
        found: Vec::new(),
    };
    let base = forced.count_ones() as usize;
    let mut k = search.lower_bound(unhit, allowed);
    loop {
        search.run(forced, unhit, allowed, k);
        if !search.found.is_empty() {
            return (ExtNat::from_usize(base + k), search.found);
        }
        k += 1;
    }
}

fn admit(g: &Graph, cfg: &OracleConfig) -> Result<()> {
    let cap = cfg.edge_cap.min(Mask::BITS as usize);
    if g.edge_count() > cap {
        return Err(Error::OracleTooLarge {
            edges: g.edge_count(),
            cap,
        });
    }
    if !g.is_connected() {
        return Err(Error::InvalidInput("graph is disconnected".into()));
    }
    Ok(())
}

fn to_set(mask: Mask) -> EdgeSet {
    EdgeSet::from_ids(bits(mask))
}

fn to_mask(set: &EdgeSet) -> Mask {
    set.iter().fold(0, |m, e| m | 1 << e)
}

fn min_with(g: &Graph, total: bool, cfg: &OracleConfig) -> Result<SolveResult> {
    admit(g, cfg)?;
    let (value, sets) = solve(g, total, 0, 0, false);
    Ok(match sets.first() {
        Some(&s) => SolveResult {
            value,
            witness: Some(to_set(s)),
        },
        None => SolveResult::infeasible(),
    })
}

/// γ'(g) with a witness, under the default size cap.
pub fn brute_min_ed(g: &Graph) -> Result<SolveResult> {
    min_with(g, false, &OracleConfig::default())
}

/// γ'_t(g) with a witness; `INF` when `g` has no TED-set (a single edge).
pub fn brute_min_ted(g: &Graph) -> Result<SolveResult> {
    min_with(g, true, &OracleConfig::default())
}

pub fn brute_min_ed_with(g: &Graph, cfg: &OracleConfig) -> Result<SolveResult> {
    min_with(g, false, cfg)
}

pub fn brute_min_ted_with(g: &Graph, cfg: &OracleConfig) -> Result<SolveResult> {
    min_with(g, true, cfg)
}

/// The optimum and every set attaining it.
pub fn enumerate_min_sets(
    g: &Graph,
    total: bool,
    cfg: &OracleConfig,
) -> Result<(ExtNat, Vec<EdgeSet>)> {
    admit(g, cfg)?;
    let (value, sets) = solve(g, total, 0, 0, true);
    let mut sets: Vec<EdgeSet> = sets.into_iter().map(to_set).collect();
    sets.sort_unstable_by(|a, b| a.as_slice().cmp(b.as_slice()));
    Ok((value, sets))
}

/// Optimum over sets that contain `forced` and avoid `forbidden`. Unlike the
/// unconstrained entry points this accepts disconnected graphs.
pub fn constrained_min(
    g: &Graph,
    total: bool,
    forced: &EdgeSet,
    forbidden: &EdgeSet,
    cfg: &OracleConfig,
) -> Result<SolveResult> {
    let cap = cfg.edge_cap.min(Mask::BITS as usize);
    if g.edge_count() > cap {
        return Err(Error::OracleTooLarge {
            edges: g.edge_count(),
            cap,
        });
    }
    forced.check_within(g)?;
    forbidden.check_within(g)?;
    let (value, sets) = solve(g, total, to_mask(forced), to_mask(forbidden), false);
    Ok(match sets.first() {
        Some(&s) => SolveResult {
            value,
            witness: Some(to_set(s)),
        },
        None => SolveResult::infeasible(),
    })
}

/// Whether some minimum ED-set (or TED-set) uses no leaf edge.
pub fn exists_min_set_avoiding_leaf_edges(g: &Graph, total: bool) -> Result<bool> {
    exists_min_set_avoiding_leaf_edges_with(g, total, &OracleConfig::default())
}

pub fn exists_min_set_avoiding_leaf_edges_with(
    g: &Graph,
    total: bool,
    cfg: &OracleConfig,
) -> Result<bool> {
    admit(g, cfg)?;
    let (best, _) = solve(g, total, 0, 0, false);
    if best.is_infinite() {
        return Ok(false);
    }
    let leafy = (0..g.edge_count())
        .filter(|&e| g.is_leaf_edge(e))
        .fold(0, |m, e| m | 1 << e);
    let (avoiding, _) = solve(g, total, 0, leafy, false);
    Ok(avoiding == best)
}

/// The four per-edge values of the subtree made of `edges` (which must
/// contain `e`), by scanning every subset. Independent of the tree DP; meant
/// for checking it on subtrees of at most 20 edges.
pub fn four_values_exhaustive(g: &Graph, edges: &[EdgeId], e: EdgeId) -> Result<FourValues> {
    let m = edges.len();
    if m > 20 {
        return Err(Error::OracleTooLarge { edges: m, cap: 20 });
    }
    let pos = edges
        .iter()
        .position(|&x| x == e)
        .ok_or_else(|| Error::InvalidInput("edge is not part of the subtree".into()))?;
    // Local adjacency as bit masks over positions in `edges`.
    let mut adj = alloc::vec![0u32; m];
    for i in 0..m {
        let (a, b) = g.endpoints(edges[i]);
        for (j, &other) in edges.iter().enumerate() {
            let (c, d) = g.endpoints(other);
            if i != j && (a == c || a == d || b == c || b == d) {
                adj[i] |= 1 << j;
            }
        }
    }
    let eb = 1u32 << pos;
    let mut best = [ExtNat::INF; 4];
    for f in 0u32..(1 << m) {
        let size = ExtNat::from(f.count_ones());
        let covered = |i: usize| adj[i] & f != 0;
        let others_total = (0..m).filter(|&i| i != pos).all(covered);
        let slot = if f & eb != 0 {
            if !others_total {
                continue;
            }
            if covered(pos) {
                0
            } else {
                2
            }
        } else if !others_total {
            continue;
        } else if covered(pos) {
            1
        } else {
            3
        };
        best[slot] = best[slot].min(size);
    }
    Ok(FourValues::new(best[0], best[1], best[2], best[3]))
}
