//! Free (unrooted, unlabelled) trees up to isomorphism, and a canonical code
//! for trees that may carry vertex and edge labels.
//!
//! Trees on n + 1 vertices are produced by hanging a leaf on every vertex of
//! every tree on n vertices and keeping one tree per canonical code.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, VertexId};

const OPEN: u8 = 0;
const CLOSE: u8 = 1;
const LABEL: u8 = 2;

/// The one or two center vertices of a tree.
pub fn centers(g: &Graph) -> Vec<VertexId> {
    let n = g.vertex_count();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut layer: Vec<VertexId> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for w in g.neighbors(v) {
                deg[w] -= 1;
                if deg[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

struct Coder<'a> {
    g: &'a Graph,
    vlabels: Option<&'a [u8]>,
    elabels: Option<&'a [u8]>,
}

impl Coder<'_> {
    fn rooted(&self, v: VertexId, from: Option<VertexId>) -> Vec<u8> {
        let mut kids: Vec<Vec<u8>> = self
            .g
            .incident(v)
            .iter()
            .filter(|&&(w, _)| Some(w) != from)
            .map(|&(w, e)| {
                let mut c = Vec::new();
                if let Some(el) = self.elabels {
                    c.push(LABEL + el[e]);
                }
                c.extend(self.rooted(w, Some(v)));
                c
            })
            .collect();
        kids.sort_unstable();
        let mut out = vec![OPEN];
        if let Some(vl) = self.vlabels {
            out.push(LABEL + vl[v]);
        }
        for k in kids {
            out.extend(k);
        }
        out.push(CLOSE);
        out
    }
}

/// A byte string equal for two trees exactly when they are isomorphic by a
/// map preserving the given labels. Labels must be below 254.
pub fn canonical_code(g: &Graph, vlabels: Option<&[u8]>, elabels: Option<&[u8]>) -> Vec<u8> {
    let coder = Coder {
        g,
        vlabels,
        elabels,
    };
    match centers(g).as_slice() {
        [] => Vec::new(),
        [c] => {
            let mut out = vec![b'V'];
            out.extend(coder.rooted(*c, None));
            out
        }
        [a, b] => {
            let e = g.edge_between(*a, *b).expect("centers are adjacent");
            let mut halves = [coder.rooted(*a, Some(*b)), coder.rooted(*b, Some(*a))];
            halves.sort_unstable();
            let mut out = vec![b'E'];
            if let Some(el) = elabels {
                out.push(LABEL + el[e]);
            }
            out.extend_from_slice(&halves[0]);
            out.extend_from_slice(&halves[1]);
            out
        }
        _ => unreachable!("a tree has at most two centers"),
    }
}

/// All trees on exactly `n` vertices, one per isomorphism class, in order
/// of canonical code.
pub fn free_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![Graph::with_vertices(1)];
    for _ in 1..n {
        let mut next: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
        for t in &level {
            for v in 0..t.vertex_count() {
                let mut g = t.clone();
                let leaf = g.add_vertex();
                g.add_edge(v, leaf).expect("fresh vertex");
                next.entry(canonical_code(&g, None, None)).or_insert(g);
            }
        }
        level = next.into_values().collect();
    }
    level
}

/// All trees with 2 to `max` vertices.
pub fn free_trees_up_to(max: usize) -> Vec<Graph> {
    (2..=max).flat_map(free_trees).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        let counts: Vec<usize> = (1..=11).map(|n| free_trees(n).len()).collect();
        assert_eq!(counts, [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235]);
    }

    #[test]
    fn codes_ignore_numbering() {
        let a = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (2, 4)]).unwrap();
        let b = Graph::from_edges(5, [(4, 3), (3, 0), (0, 1), (0, 2)]).unwrap();
        assert_eq!(
            canonical_code(&a, None, None),
            canonical_code(&b, None, None)
        );
        let p5 = Graph::path(5);
        assert_ne!(
            canonical_code(&a, None, None),
            canonical_code(&p5, None, None)
        );
    }

    #[test]
    fn labels_separate_codes() {
        let g = Graph::path(4);
        let x = canonical_code(&g, Some(&[0, 1, 1, 0]), None);
        let y = canonical_code(&g, Some(&[1, 0, 0, 1]), None);
        let z = canonical_code(&Graph::path(4), Some(&[0, 1, 1, 0]), None);
        assert_ne!(x, y);
        assert_eq!(x, z);
        let e1 = canonical_code(&g, None, Some(&[0, 1, 2]));
        let e2 = canonical_code(&g, None, Some(&[2, 1, 0]));
        let e3 = canonical_code(&g, None, Some(&[0, 2, 1]));
        assert_eq!(e1, e2);
        assert_ne!(e1, e3);
    }

    #[test]
    fn centers_of_paths() {
        assert_eq!(centers(&Graph::path(5)), [2]);
        assert_eq!(centers(&Graph::path(6)), [2, 3]);
        assert_eq!(centers(&Graph::path(2)), [0, 1]);
    }
}
