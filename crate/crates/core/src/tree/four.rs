//! The four per-edge values and the combine step.
//!
//! For an edge e and the subtree T_e hanging below it:
//! - `g1`: smallest TED-set of T_e containing e;
//! - `g0`: smallest TED-set of T_e avoiding e;
//! - `g1bar`: smallest ED-set of T_e in which e is the only isolated member;
//! - `g0bar`: smallest TED-set of T_e - e that leaves e undominated.
//!
//! `combine` assigns a state to e (cost taken from `t0`) and to each child
//! edge, then minimizes over feasible assignments. Feasibility only depends on
//! how many children provide domination (state `In` or `Isolated`, capped at
//! 2) and on whether any child is `Isolated` or `Undominated`, so a 12-state
//! automaton over the children gives every output in O(q).

use alloc::vec::Vec;

use crate::ext::ExtNat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum State {
    /// 1: in the set and totally dominated.
    In,
    /// 0: out of the set and dominated.
    Out,
    /// 1̄: in the set with no set neighbor.
    Isolated,
    /// 0̄: out of the set and not dominated.
    Undominated,
}

impl State {
    pub const ALL: [State; 4] = [State::In, State::Out, State::Isolated, State::Undominated];

    pub fn in_set(self) -> bool {
        matches!(self, State::In | State::Isolated)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FourValues {
    pub g1: ExtNat,
    pub g0: ExtNat,
    pub g1bar: ExtNat,
    pub g0bar: ExtNat,
}

impl FourValues {
    pub fn new(g1: ExtNat, g0: ExtNat, g1bar: ExtNat, g0bar: ExtNat) -> FourValues {
        FourValues {
            g1,
            g0,
            g1bar,
            g0bar,
        }
    }

    pub fn get(&self, s: State) -> ExtNat {
        match s {
            State::In => self.g1,
            State::Out => self.g0,
            State::Isolated => self.g1bar,
            State::Undominated => self.g0bar,
        }
    }

    pub fn theta(&self) -> ExtNat {
        self.g1.min(self.g0).min(self.g1bar).min(self.g0bar)
    }

    /// γ'_t of the subtree: the best TED-set, with or without the edge.
    pub fn total(&self) -> ExtNat {
        self.g1.min(self.g0)
    }

    /// The four pairwise bounds that hold whenever all values are finite.
    pub fn satisfies_bounds(&self) -> bool {
        let all = [self.g1, self.g0, self.g1bar, self.g0bar];
        if all.iter().any(|v| v.is_infinite()) {
            return true;
        }
        self.g1 <= self.g0 + 1
            && self.g1 <= self.g1bar + 1
            && self.g1 <= self.g0bar + 2
            && self.g1bar <= self.g0bar + 1
    }
}

/// Values of an edge that has no children: its subtree is a single edge.
pub fn leaf_base_values() -> FourValues {
    FourValues::new(ExtNat::INF, ExtNat::INF, ExtNat::ONE, ExtNat::ZERO)
}

/// θ of a child and the states attaining it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChildSummary {
    pub theta: ExtNat,
    pub attainers: [bool; 4],
}

impl ChildSummary {
    pub fn of(v: &FourValues) -> ChildSummary {
        let theta = v.theta();
        let mut attainers = [false; 4];
        for (i, s) in State::ALL.into_iter().enumerate() {
            attainers[i] = theta.is_finite() && v.get(s) == theta;
        }
        ChildSummary { theta, attainers }
    }

    pub fn attains(&self, s: State) -> bool {
        self.attainers[s as usize]
    }
}

const SLOTS: usize = 12;

const fn slot(providers: usize, has_undom: bool, has_isolated: bool) -> usize {
    providers * 4 + (has_undom as usize) * 2 + has_isolated as usize
}

const fn unslot(i: usize) -> (usize, bool, bool) {
    (i / 4, i & 2 != 0, i & 1 != 0)
}

// State discriminants: In 0, Out 1, Isolated 2, Undominated 3.
const fn advance_raw(i: usize, s: usize) -> usize {
    let (p, u, iso) = unslot(i);
    let mut p = p + (s == 0 || s == 2) as usize;
    if p > 2 {
        p = 2;
    }
    slot(p, u || s == 3, iso || s == 2)
}

/// Whether `target` may be produced with e in state `s0` and the children
/// summarized by slot `i`.
const fn accepts_raw(target: usize, s0: usize, i: usize) -> bool {
    let (p, has_undom, has_isolated) = unslot(i);
    let children_ok = (!has_undom || p >= 1) && (!has_isolated || p >= 2);
    match (target, s0) {
        (0, 0) => true,
        (0, 2) => p >= 1,
        (1, 1) => children_ok,
        (1, 3) => children_ok && p >= 1,
        (2, 2) => p == 0,
        (3, 3) => i == slot(0, false, false),
        _ => false,
    }
}

const ADVANCE: [[u8; 4]; SLOTS] = {
    let mut t = [[0u8; 4]; SLOTS];
    let mut i = 0;
    while i < SLOTS {
        let mut s = 0;
        while s < 4 {
            t[i][s] = advance_raw(i, s) as u8;
            s += 1;
        }
        i += 1;
    }
    t
};

/// For each target and state of e, the bitmask of accepted slots.
const ACCEPTS: [[u16; 4]; 4] = {
    let mut t = [[0u16; 4]; 4];
    let mut target = 0;
    while target < 4 {
        let mut s0 = 0;
        while s0 < 4 {
            let mut i = 0;
            while i < SLOTS {
                if accepts_raw(target, s0, i) {
                    t[target][s0] |= 1 << i;
                }
                i += 1;
            }
            s0 += 1;
        }
        target += 1;
    }
    t
};

/// For each slot `i` and child state `s`, the slots `p` with
/// `advance(p, s) == i` as a bitmask.
const PREDECESSORS: [[u16; 4]; SLOTS] = {
    let mut t = [[0u16; 4]; SLOTS];
    let mut p = 0;
    while p < SLOTS {
        let mut s = 0;
        while s < 4 {
            t[ADVANCE[p][s] as usize][s] |= 1 << p;
            s += 1;
        }
        p += 1;
    }
    t
};

#[inline]
fn advance(i: usize, s: State) -> usize {
    ADVANCE[i][s as usize] as usize
}

#[inline]
fn accepts(target: State, s0: State, i: usize) -> bool {
    ACCEPTS[target as usize][s0 as usize] & (1 << i) != 0
}

fn start() -> [ExtNat; SLOTS] {
    let mut acc = [ExtNat::INF; SLOTS];
    acc[0] = ExtNat::ZERO;
    acc
}

fn step(acc: &[ExtNat; SLOTS], child: &FourValues) -> [ExtNat; SLOTS] {
    let mut next = [ExtNat::INF; SLOTS];
    for (i, &c) in acc.iter().enumerate() {
        if c.is_infinite() {
            continue;
        }
        for s in State::ALL {
            let v = child.get(s);
            if v.is_finite() {
                let j = advance(i, s);
                next[j] = next[j].min(c + v);
            }
        }
    }
    next
}

fn finish(t0: &FourValues, acc: &[ExtNat; SLOTS]) -> FourValues {
    let best = |target: State| {
        let mut m = ExtNat::INF;
        for s0 in State::ALL {
            let own = t0.get(s0);
            if own.is_infinite() {
                continue;
            }
            let mut mask = ACCEPTS[target as usize][s0 as usize];
            while mask != 0 {
                let i = mask.trailing_zeros() as usize;
                mask &= mask - 1;
                m = m.min(own + acc[i]);
            }
        }
        m
    };
    FourValues::new(
        best(State::In),
        best(State::Out),
        best(State::Isolated),
        best(State::Undominated),
    )
}

/// Values of an edge from its own values `t0` (as a leaf edge of its side)
/// and the values of its children.
pub fn combine<'a, I>(t0: &FourValues, children: I) -> FourValues
where
    I: IntoIterator<Item = &'a FourValues>,
{
    let mut acc = start();
    for c in children {
        acc = step(&acc, c);
    }
    finish(t0, &acc)
}

/// One optimal assignment realizing `target`: the state of e and of each
/// child, or `None` when the target value is infinite.
pub fn assignment(
    t0: &FourValues,
    children: &[FourValues],
    target: State,
) -> Option<(State, Vec<State>)> {
    let mut table = Vec::new();
    let mut states = Vec::new();
    let s0 = assignment_into(t0, children, target, &mut table, &mut states)?;
    Some((s0, states))
}

/// [`assignment`] writing the child states into `states`, with `table` as
/// scratch space.
pub(crate) fn assignment_into(
    t0: &FourValues,
    children: &[FourValues],
    target: State,
    table: &mut Vec<[ExtNat; SLOTS]>,
    states: &mut Vec<State>,
) -> Option<State> {
    let q = children.len();
    table.clear();
    table.push(start());
    for (j, c) in children.iter().enumerate() {
        let next = step(&table[j], c);
        table.push(next);
    }
    let mut pick = None;
    let mut best = ExtNat::INF;
    for s0 in State::ALL {
        for (i, &c) in table[q].iter().enumerate() {
            let total = t0.get(s0) + c;
            if accepts(target, s0, i) && total < best {
                best = total;
                pick = Some((s0, i));
            }
        }
    }
    let (s0, mut i) = pick?;
    states.clear();
    states.resize(q, State::In);
    for j in (0..q).rev() {
        let want = table[j + 1][i];
        let child = &children[j];
        let mut found = None;
        'search: for s in State::ALL {
            let v = child.get(s);
            if v.is_infinite() {
                continue;
            }
            let mut preds = PREDECESSORS[i][s as usize];
            while preds != 0 {
                let p = preds.trailing_zeros() as usize;
                preds &= preds - 1;
                let c = table[j][p];
                if c.is_finite() && c + v == want {
                    found = Some((p, s));
                    break 'search;
                }
            }
        }
        let (prev, s) = found.expect("table entries are consistent");
        states[j] = s;
        i = prev;
    }
    Some(s0)
}
