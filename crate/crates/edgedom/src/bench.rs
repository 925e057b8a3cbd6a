//! Timing of the tree program on random recursive trees.

use std::fmt::Write as _;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use edgedom_core::{build_rooted, gamma_t_tree, Graph, Root};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BenchRow {
    /// Edges in the tree.
    pub size: usize,
    /// Fastest observed solve, rooting included.
    pub ns: u128,
    pub ns_per_edge: f64,
}

/// Vertex i > 0 attaches to a uniformly random earlier vertex.
pub fn random_recursive_tree(edges: usize, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::with_vertices(edges + 1);
    for v in 1..=edges {
        let p = rng.gen_range(0..v);
        g.add_edge(p, v).expect("fresh vertex");
    }
    g
}

/// Repetitions for a size: enough to total about two million edges, at
/// least three and at most 200.
fn repetitions(size: usize) -> usize {
    (2_000_000 / size.max(1)).clamp(3, 200)
}

pub fn time_solve(g: &Graph, reps: usize) -> u128 {
    (0..reps)
        .map(|_| {
            let start = Instant::now();
            let rt = build_rooted(g, Root::Auto).expect("random trees are trees");
            let r = gamma_t_tree(&rt);
            std::hint::black_box(r);
            start.elapsed().as_nanos()
        })
        .min()
        .unwrap_or(0)
}

pub fn run_bench(sizes: &[usize], seed: u64) -> Vec<BenchRow> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sizes
        .iter()
        .map(|&size| {
            let g = random_recursive_tree(size, &mut rng);
            let ns = time_solve(&g, repetitions(size));
            BenchRow {
                size,
                ns,
                ns_per_edge: ns as f64 / size.max(1) as f64,
            }
        })
        .collect()
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("size,ns,ns_per_edge\n");
    for r in rows {
        let _ = writeln!(out, "{},{},{:.3}", r.size, r.ns, r.ns_per_edge);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trees_are_reproducible() {
        let a = random_recursive_tree(50, &mut ChaCha8Rng::seed_from_u64(1));
        let b = random_recursive_tree(50, &mut ChaCha8Rng::seed_from_u64(1));
        assert_eq!(a, b);
        assert!(a.is_tree());
    }

    #[test]
    fn csv_shape() {
        assert_eq!(to_csv(&[]), "size,ns,ns_per_edge\n");
        let rows = run_bench(&[100], 5);
        assert_eq!(rows.len(), 1);
        assert_eq!(to_csv(&rows).lines().count(), 2);
    }
}
