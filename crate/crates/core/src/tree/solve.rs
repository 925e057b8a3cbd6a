use alloc::vec;
use alloc::vec::Vec;

use crate::ext::ExtNat;
use crate::graph::{EdgeSet, SolveResult};
use crate::tree::four::{assignment_into, combine, leaf_base_values, FourValues, State};
use crate::tree::rooted::RootedTree;

/// Edge ids flagged in `chosen`, already in ascending order.
fn members(chosen: &[bool]) -> EdgeSet {
    EdgeSet::from_ids((0..chosen.len()).filter(|&e| chosen[e]))
}

/// The four values by BFS position.
fn four_values_by_position(rt: &RootedTree) -> Vec<FourValues> {
    let base = leaf_base_values();
    let m = rt.bfs_edges().len();
    let mut vals = vec![base; m];
    for k in (0..m).rev() {
        let kids = rt.kid_range(k);
        if !kids.is_empty() {
            let (head, tail) = vals.split_at_mut(kids.start);
            head[k] = combine(&base, &tail[..kids.len()]);
        }
    }
    vals
}

/// The four values of every edge, indexed by edge id.
pub fn four_values(rt: &RootedTree) -> Vec<FourValues> {
    let by_pos = four_values_by_position(rt);
    let mut vals = by_pos.clone();
    for (k, &e) in rt.bfs_edges().iter().enumerate() {
        vals[e] = by_pos[k];
    }
    vals
}

/// γ'_t of the tree with a minimum TED-set; `INF` without witness for K2.
pub fn gamma_t_tree(rt: &RootedTree) -> SolveResult {
    let vals = four_values_by_position(rt);
    let v = vals[0];
    let value = v.total();
    if value.is_infinite() {
        return SolveResult::infeasible();
    }
    let base = leaf_base_values();
    let mut want = vec![State::In; vals.len()];
    want[0] = if v.g1 <= v.g0 { State::In } else { State::Out };
    let mut chosen = vec![false; vals.len()];
    let mut table = Vec::new();
    let mut states = Vec::new();
    for (k, &e) in rt.bfs_edges().iter().enumerate() {
        let kids = rt.kid_range(k);
        let s0 = assignment_into(&base, &vals[kids.clone()], want[k], &mut table, &mut states)
            .expect("finite state has a realization");
        chosen[e] = s0.in_set();
        want[kids].copy_from_slice(&states);
    }
    let witness = members(&chosen);
    debug_assert_eq!(ExtNat::from_usize(witness.len()), value);
    SolveResult {
        value,
        witness: Some(witness),
    }
}

#[derive(Clone, Copy)]
struct Three {
    inside: ExtNat,
    dominated: ExtNat,
    open: ExtNat,
}

impl Three {
    fn best(&self) -> ExtNat {
        self.inside.min(self.dominated).min(self.open)
    }
}

/// γ' of the tree with a minimum ED-set.
///
/// Per edge: in the set; out and dominated from below; out and not yet
/// dominated from below (a parent or a sibling must cover it).
pub fn gamma_tree(rt: &RootedTree) -> SolveResult {
    let m = rt.bfs_edges().len();
    let leaf = Three {
        inside: ExtNat::ONE,
        dominated: ExtNat::INF,
        open: ExtNat::ZERO,
    };
    let mut vals = vec![leaf; m];
    for k in (0..m).rev() {
        let kids = rt.kid_range(k);
        if kids.is_empty() {
            continue;
        }
        let mut any = ExtNat::ZERO;
        let mut all_dominated = ExtNat::ZERO;
        let mut upgrade = u32::MAX;
        for t in &vals[kids] {
            let b = t.best();
            any += b;
            all_dominated += t.dominated;
            // `inside` is always finite, so this never fails.
            upgrade = upgrade.min(t.inside.checked_sub(b).expect("finite"));
        }
        vals[k] = Three {
            inside: any + 1,
            dominated: any + upgrade,
            open: all_dominated,
        };
    }

    let top = vals[0];
    let value = top.inside.min(top.dominated);

    #[derive(Clone, Copy, PartialEq)]
    enum Want {
        Inside,
        Dominated,
        Open,
    }
    let free = |t: &Three| {
        if t.inside == t.best() {
            Want::Inside
        } else if t.dominated == t.best() {
            Want::Dominated
        } else {
            Want::Open
        }
    };
    let mut want = vec![Want::Open; m];
    let mut chosen = vec![false; m];
    want[0] = if top.inside <= top.dominated {
        Want::Inside
    } else {
        Want::Dominated
    };
    for (k, &e) in rt.bfs_edges().iter().enumerate() {
        let kids = rt.kid_range(k);
        match want[k] {
            Want::Inside => {
                chosen[e] = true;
                for c in kids {
                    want[c] = free(&vals[c]);
                }
            }
            Want::Open => {
                for c in kids {
                    want[c] = Want::Dominated;
                }
            }
            Want::Dominated => {
                // Cheapest child to force into the set; the rest take their best.
                let forced = kids
                    .clone()
                    .min_by_key(|&c| {
                        let t = vals[c];
                        t.inside.checked_sub(t.best()).unwrap_or(u32::MAX)
                    })
                    .expect("dominated state needs a child");
                for c in kids {
                    want[c] = if c == forced {
                        Want::Inside
                    } else {
                        free(&vals[c])
                    };
                }
            }
        }
    }
    let witness = members(&chosen);
    debug_assert_eq!(ExtNat::from_usize(witness.len()), value);
    SolveResult {
        value,
        witness: Some(witness),
    }
}
