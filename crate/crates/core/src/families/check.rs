use alloc::format;
use alloc::vec;

use crate::brute::{brute_min_ed_with, brute_min_ted_with, OracleConfig};
use crate::error::{Error, Result};
use crate::ext::ExtNat;
use crate::graph::{diameter, is_edge_dominating, is_total_edge_dominating, EdgeSet, Graph};
use crate::tree::{build_rooted, gamma_t_tree, gamma_tree, Root};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ratio {
    Equal,
    Double,
    Neither,
}

impl Ratio {
    pub fn as_str(self) -> &'static str {
        match self {
            Ratio::Equal => "equal",
            Ratio::Double => "double",
            Ratio::Neither => "neither",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RatioReport {
    pub gamma: ExtNat,
    pub gamma_t: ExtNat,
    pub ratio: Ratio,
    /// Diameter at most 2.
    pub star: bool,
    /// Diameter exactly 3.
    pub double_star: bool,
}

impl RatioReport {
    pub fn holds(&self, mode: Ratio) -> bool {
        self.ratio == mode
    }
}

/// γ' and γ'_t of a tree from the two tree programs, and how they compare.
pub fn check_ratio(t: &Graph) -> Result<RatioReport> {
    let rt = build_rooted(t, Root::Auto)?;
    let gamma = gamma_tree(&rt).value;
    let gamma_t = gamma_t_tree(&rt).value;
    let ratio = if gamma_t == gamma {
        Ratio::Equal
    } else if gamma_t.is_finite() && gamma_t == gamma + gamma {
        Ratio::Double
    } else {
        Ratio::Neither
    };
    let d = diameter(t)?;
    Ok(RatioReport {
        gamma,
        gamma_t,
        ratio,
        star: d <= 2,
        double_star: d == 3,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinSetProperty {
    /// `f` is a minimum ED-set whose closed edge neighborhoods are pairwise
    /// disjoint.
    DisjointNeighborhoods,
    /// `f` is a minimum TED-set whose induced components are stars with at
    /// least two edges.
    NontrivialStars,
}

/// Checks that `f` is a minimum (total) edge dominating set of `g`, then
/// reports whether it has the requested shape.
pub fn check_min_set_structure(g: &Graph, f: &EdgeSet, which: MinSetProperty) -> Result<bool> {
    let total = which == MinSetProperty::NontrivialStars;
    let dominating = if total {
        is_total_edge_dominating(g, f)?
    } else {
        is_edge_dominating(g, f)?
    };
    if !dominating {
        return Err(Error::InvalidCertificate(format!(
            "not {}edge dominating",
            if total { "total " } else { "" }
        )));
    }
    let optimum = optimum(g, total)?;
    if ExtNat::from_usize(f.len()) != optimum {
        return Err(Error::InvalidCertificate(format!(
            "set has {} edges, optimum is {optimum}",
            f.len()
        )));
    }
    Ok(match which {
        MinSetProperty::DisjointNeighborhoods => disjoint_neighborhoods(g, f),
        MinSetProperty::NontrivialStars => nontrivial_star_components(g, f),
    })
}

fn optimum(g: &Graph, total: bool) -> Result<ExtNat> {
    if g.edge_count() > 0 && g.is_tree() {
        let rt = build_rooted(g, Root::Auto)?;
        return Ok(if total {
            gamma_t_tree(&rt)
        } else {
            gamma_tree(&rt)
        }
        .value);
    }
    let cfg = OracleConfig::default();
    Ok(if total {
        brute_min_ted_with(g, &cfg)?
    } else {
        brute_min_ed_with(g, &cfg)?
    }
    .value)
}

/// No edge lies in two of the closed neighborhoods.
fn disjoint_neighborhoods(g: &Graph, f: &EdgeSet) -> bool {
    let mut closed = vec![false; g.edge_count()];
    for e in f.iter() {
        for x in core::iter::once(e).chain(g.edge_neighbors(e)) {
            if closed[x] {
                return false;
            }
            closed[x] = true;
        }
    }
    true
}

fn nontrivial_star_components(g: &Graph, f: &EdgeSet) -> bool {
    let mut deg = vec![0usize; g.vertex_count()];
    for e in f.iter() {
        let (u, v) = g.endpoints(e);
        deg[u] += 1;
        deg[v] += 1;
    }
    // Every edge having an end of degree 1 rules out cycles and leaves
    // only stars; the other end having degree >= 2 rules out lone edges.
    f.iter().all(|e| {
        let (u, v) = g.endpoints(e);
        deg[u].min(deg[v]) == 1 && deg[u].max(deg[v]) >= 2
    })
}
