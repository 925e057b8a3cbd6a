//! Simple undirected graphs with dense vertex and edge identifiers, the
//! domination predicates, and the structural measurements used to validate
//! reduction outputs.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::ext::ExtNat;

pub type VertexId = usize;
pub type EdgeId = usize;

/// Incidences of one vertex; most tree vertices have at most two.
type Adjacency = SmallVec<[(VertexId, EdgeId); 2]>;

/// A simple undirected graph. Vertices are `0..vertex_count()`, edges are
/// numbered in insertion order and stored with the smaller endpoint first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Adjacency>,
}

impl Graph {
    pub fn with_vertices(n: usize) -> Graph {
        Graph {
            edges: Vec::new(),
            adj: vec![Adjacency::new(); n],
        }
    }

    /// Builds a graph on `n` vertices, rejecting loops, repeated edges and
    /// endpoints outside `0..n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = Graph::with_vertices(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.adj.push(Adjacency::new());
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return Err(Error::InvalidInput(format!(
                "edge ({u}, {v}) references a vertex outside 0..{n}"
            )));
        }
        if u == v {
            return Err(Error::InvalidInput(format!("loop at vertex {u}")));
        }
        if self.edge_between(u, v).is_some() {
            return Err(Error::InvalidInput(format!("repeated edge ({u}, {v})")));
        }
        let id = self.edges.len();
        self.edges.push((u.min(v), u.max(v)));
        self.adj[u].push((v, id));
        self.adj[v].push((u, id));
        Ok(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        self.edges.iter().enumerate().map(|(i, &(u, v))| (i, u, v))
    }

    /// `(neighbor, edge)` pairs at `v`, in insertion order.
    pub fn incident(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let (probe, target) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[probe]
            .iter()
            .find(|&&(w, _)| w == target)
            .map(|&(_, e)| e)
    }

    /// Edges sharing an endpoint with `e`, excluding `e` itself.
    pub fn edge_neighbors(&self, e: EdgeId) -> impl Iterator<Item = EdgeId> + '_ {
        let (u, v) = self.edges[e];
        self.adj[u]
            .iter()
            .chain(self.adj[v].iter())
            .map(|&(_, f)| f)
            .filter(move |&f| f != e)
    }

    pub fn is_leaf(&self, v: VertexId) -> bool {
        self.adj[v].len() == 1
    }

    /// An edge with at least one endpoint of degree one.
    pub fn is_leaf_edge(&self, e: EdgeId) -> bool {
        let (u, v) = self.edges[e];
        self.is_leaf(u) || self.is_leaf(v)
    }

    pub fn is_support(&self, v: VertexId) -> bool {
        self.neighbors(v).any(|w| self.is_leaf(w))
    }

    pub fn leaves(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_count()).filter(|&v| self.is_leaf(v))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let dist = self.bfs(0);
        dist.iter().all(Option::is_some)
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count() > 0
            && self.edge_count() + 1 == self.vertex_count()
            && self.is_connected()
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn bfs(&self, source: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &(w, _) in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    /// `S_{1,k}`: center 0 with leaves `1..=k`.
    pub fn star(k: usize) -> Graph {
        Graph::from_edges(k + 1, (1..=k).map(|i| (0, i))).expect("star is simple")
    }

    /// Centers 0 and 1 joined by an edge, with `a` and `b` leaves respectively.
    pub fn double_star(a: usize, b: usize) -> Graph {
        let mut g = Graph::with_vertices(2);
        g.add_edge(0, 1).expect("fresh");
        for _ in 0..a {
            let leaf = g.add_vertex();
            g.add_edge(0, leaf).expect("fresh");
        }
        for _ in 0..b {
            let leaf = g.add_vertex();
            g.add_edge(1, leaf).expect("fresh");
        }
        g
    }

    pub fn complete(n: usize) -> Graph {
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, pairs).expect("complete graph is simple")
    }
}

/// A set of edge ids, kept sorted and free of repeats.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    members: Vec<EdgeId>,
}

impl EdgeSet {
    pub fn new() -> EdgeSet {
        EdgeSet::default()
    }

    pub fn from_ids<I: IntoIterator<Item = EdgeId>>(ids: I) -> EdgeSet {
        let mut members: Vec<EdgeId> = ids.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        EdgeSet { members }
    }

    /// Looks up each endpoint pair in `g`.
    pub fn from_pairs<I>(g: &Graph, pairs: I) -> Result<EdgeSet>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut ids = Vec::new();
        for (u, v) in pairs {
            if u >= g.vertex_count() || v >= g.vertex_count() {
                return Err(Error::InvalidInput(format!("({u}, {v}) is not an edge")));
            }
            let e = g
                .edge_between(u, v)
                .ok_or_else(|| Error::InvalidInput(format!("({u}, {v}) is not an edge")))?;
            ids.push(e);
        }
        Ok(EdgeSet::from_ids(ids))
    }

    pub fn insert(&mut self, e: EdgeId) -> bool {
        match self.members.binary_search(&e) {
            Ok(_) => false,
            Err(pos) => {
                self.members.insert(pos, e);
                true
            }
        }
    }

    pub fn remove(&mut self, e: EdgeId) -> bool {
        match self.members.binary_search(&e) {
            Ok(pos) => {
                self.members.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.members.binary_search(&e).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = EdgeId> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[EdgeId] {
        &self.members
    }

    /// Members as `(min, max)` endpoint pairs, sorted.
    pub fn to_pairs(&self, g: &Graph) -> Vec<(VertexId, VertexId)> {
        let mut pairs: Vec<_> = self.members.iter().map(|&e| g.endpoints(e)).collect();
        pairs.sort_unstable();
        pairs
    }

    pub fn check_within(&self, g: &Graph) -> Result<()> {
        match self.members.last() {
            Some(&e) if e >= g.edge_count() => Err(Error::InvalidInput(format!(
                "edge id {e} is not an edge of a graph with {} edges",
                g.edge_count()
            ))),
            _ => Ok(()),
        }
    }

    pub(crate) fn membership(&self, g: &Graph) -> Vec<bool> {
        let mut inset = vec![false; g.edge_count()];
        for &e in &self.members {
            inset[e] = true;
        }
        inset
    }
}

impl FromIterator<EdgeId> for EdgeSet {
    fn from_iter<T: IntoIterator<Item = EdgeId>>(iter: T) -> Self {
        EdgeSet::from_ids(iter)
    }
}

/// Optimal value of a domination problem together with an optional optimal set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub value: ExtNat,
    pub witness: Option<EdgeSet>,
}

impl SolveResult {
    pub fn infeasible() -> SolveResult {
        SolveResult {
            value: ExtNat::INF,
            witness: None,
        }
    }

    pub fn with_witness(witness: EdgeSet) -> SolveResult {
        SolveResult {
            value: ExtNat::from_usize(witness.len()),
            witness: Some(witness),
        }
    }
}

/// Every edge outside `f` shares an endpoint with some member of `f`.
pub fn is_edge_dominating(g: &Graph, f: &EdgeSet) -> Result<bool> {
    f.check_within(g)?;
    let inset = f.membership(g);
    Ok((0..g.edge_count()).all(|e| inset[e] || g.edge_neighbors(e).any(|x| inset[x])))
}

/// Every edge, members included, shares an endpoint with a different member.
pub fn is_total_edge_dominating(g: &Graph, f: &EdgeSet) -> Result<bool> {
    f.check_within(g)?;
    let inset = f.membership(g);
    Ok((0..g.edge_count()).all(|e| g.edge_neighbors(e).any(|x| inset[x])))
}

pub fn diameter(g: &Graph) -> Result<usize> {
    let mut best = 0;
    for s in 0..g.vertex_count() {
        for d in g.bfs(s) {
            match d {
                Some(d) => best = best.max(d),
                None => return Err(Error::InvalidInput("graph is disconnected".into())),
            }
        }
    }
    Ok(best)
}

/// Length of a shortest cycle, `INF` for forests.
pub fn girth(g: &Graph) -> ExtNat {
    let n = g.vertex_count();
    let mut best = ExtNat::INF;
    let mut dist = vec![usize::MAX; n];
    let mut via = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        via[s] = usize::MAX;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &(w, e) in g.incident(u) {
                if e == via[u] {
                    continue;
                }
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    via[w] = e;
                    queue.push_back(w);
                } else {
                    best = best.min(ExtNat::from_usize(dist[u] + dist[w] + 1));
                }
            }
        }
    }
    best
}

pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let su = side[u] == Some(true);
            for w in g.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructuralReport {
    pub bipartite: bool,
    pub max_degree: usize,
    pub girth: ExtNat,
    /// `None` when the graph is disconnected.
    pub diameter: Option<usize>,
}

pub fn structural_report(g: &Graph) -> StructuralReport {
    StructuralReport {
        bipartite: is_bipartite(g),
        max_degree: g.max_degree(),
        girth: girth(g),
        diameter: diameter(g).ok(),
    }
}
