use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};

/// Root selection for [`build_rooted`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Root {
    /// The lowest-numbered leaf.
    Auto,
    Vertex(VertexId),
}

/// A tree rooted at a leaf, with the edge parent array and children lists.
///
/// Edges are numbered in BFS order from the root edge (position 0). The
/// children of the edge at position `k` occupy the contiguous positions
/// `kid_start[k]..kid_start[k + 1]`, in ascending edge id. `edge_order`
/// lists edges by decreasing position, so every edge comes after all of its
/// children and the root edge is last.
#[derive(Clone, Debug)]
pub struct RootedTree<'g> {
    graph: &'g Graph,
    root: VertexId,
    /// Edge id at each BFS position.
    bfs: Vec<EdgeId>,
    /// BFS position of each edge id.
    pos: Vec<usize>,
    kid_start: Vec<usize>,
    /// Position of the parent edge, by position; the root edge has none.
    parent: Vec<usize>,
    /// Endpoint farther from the root, by position.
    lower: Vec<VertexId>,
    order: Vec<EdgeId>,
}

pub fn build_rooted(g: &Graph, root: Root) -> Result<RootedTree<'_>> {
    let n = g.vertex_count();
    let m = g.edge_count();
    if m == 0 {
        return Err(Error::NotATree(
            "a rooted tree needs at least one edge".into(),
        ));
    }
    if m + 1 != n {
        return Err(Error::NotATree(alloc::format!(
            "{n} vertices and {m} edges"
        )));
    }
    let root = match root {
        Root::Auto => g
            .leaves()
            .next()
            .ok_or_else(|| Error::NotATree("no leaf".into()))?,
        Root::Vertex(v) if v >= n => {
            return Err(Error::InvalidInput(alloc::format!(
                "vertex {v} does not exist"
            )))
        }
        Root::Vertex(v) => v,
    };
    match g.degree(root) {
        0 => return Err(Error::NotATree("graph is disconnected".into())),
        1 => {}
        _ => return Err(Error::InvalidRoot(root)),
    }

    // BFS over edges: the edge at position k was reached through its upper
    // endpoint, and lower[k] is the endpoint found through it. With m = n - 1
    // the walk never revisits an edge unless the root's component has a
    // cycle, in which case it grows past m.
    let mut bfs = Vec::with_capacity(m);
    let mut lower = Vec::with_capacity(m);
    let mut parent = Vec::with_capacity(m);
    let mut kid_start = Vec::with_capacity(m + 1);
    let (first_end, first) = g.incident(root)[0];
    bfs.push(first);
    lower.push(first_end);
    parent.push(usize::MAX);
    let mut k = 0;
    while k < bfs.len() {
        let e = bfs[k];
        kid_start.push(bfs.len());
        for &(w, f) in g.incident(lower[k]) {
            if f != e {
                bfs.push(f);
                lower.push(w);
                parent.push(k);
            }
        }
        if bfs.len() > m {
            return Err(Error::NotATree("graph has a cycle".into()));
        }
        k += 1;
    }
    kid_start.push(bfs.len());
    if bfs.len() != m {
        return Err(Error::NotATree("graph is disconnected".into()));
    }
    let mut pos = vec![0; m];
    for (k, &e) in bfs.iter().enumerate() {
        pos[e] = k;
    }
    let order = bfs.iter().rev().copied().collect();

    Ok(RootedTree {
        graph: g,
        root,
        bfs,
        pos,
        kid_start,
        parent,
        lower,
        order,
    })
}

impl<'g> RootedTree<'g> {
    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn edge_order(&self) -> &[EdgeId] {
        &self.order
    }

    pub fn root_edge(&self) -> EdgeId {
        self.bfs[0]
    }

    pub fn parent(&self, e: EdgeId) -> Option<EdgeId> {
        match self.parent[self.pos[e]] {
            usize::MAX => None,
            k => Some(self.bfs[k]),
        }
    }

    /// Children neighbors N_c(e): the other edges at the lower endpoint.
    pub fn children(&self, e: EdgeId) -> &[EdgeId] {
        &self.bfs[self.kid_range(self.pos[e])]
    }

    pub fn lower_end(&self, e: EdgeId) -> VertexId {
        self.lower[self.pos[e]]
    }

    /// Edge ids by BFS position.
    pub fn bfs_edges(&self) -> &[EdgeId] {
        &self.bfs
    }

    /// BFS position of an edge.
    pub fn position(&self, e: EdgeId) -> usize {
        self.pos[e]
    }

    /// Positions of the children of the edge at position `k`.
    pub fn kid_range(&self, k: usize) -> core::ops::Range<usize> {
        self.kid_start[k]..self.kid_start[k + 1]
    }

    /// Edges of the subtree T_e: `e` and everything below it.
    pub fn subtree_edges(&self, e: EdgeId) -> Vec<EdgeId> {
        let mut out = vec![e];
        let mut i = 0;
        while i < out.len() {
            out.extend_from_slice(self.children(out[i]));
            i += 1;
        }
        out.sort_unstable();
        out
    }
}
