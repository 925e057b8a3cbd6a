//! The closed-form recurrences with the A1..A4 case split, evaluated
//! literally. `combine` is the reference; this exists to be compared with it.

use crate::ext::ExtNat;
use crate::tree::four::{ChildSummary, FourValues, State};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub g1: ExtNat,
    /// `None` when none of the case guards applies.
    pub g0: Option<ExtNat>,
    pub g1bar: ExtNat,
    pub g0bar: ExtNat,
}

pub fn closed_form(t0: &FourValues, children: &[FourValues]) -> ClosedForm {
    let summaries: alloc::vec::Vec<ChildSummary> = children.iter().map(ChildSummary::of).collect();
    let theta_sum: ExtNat = summaries.iter().map(|s| s.theta).sum();
    let count = |s: State| summaries.iter().filter(|c| c.attains(s)).count();
    let a1 = count(State::In);
    let a2 = count(State::Out);
    let a3 = count(State::Isolated);
    let a4 = count(State::Undominated);

    let g1 = if a1 + a3 > 0 {
        t0.g1.min(t0.g1bar) + theta_sum
    } else {
        t0.g1.min(t0.g1bar + 1) + theta_sum
    };

    let base0 = t0.g0.min(t0.g0bar);
    let diff = |c: &FourValues| c.g1.checked_sub(c.g0bar);
    let in_a4 = || {
        children
            .iter()
            .zip(&summaries)
            .filter(|(_, s)| s.attains(State::Undominated))
            .map(|(c, _)| c)
    };
    let g0 = if a1 > 0 || a3 >= 2 {
        Some(base0 + theta_sum)
    } else if (a1 == 0 && a3 == 1) || (a1 == 0 && a3 == 0 && a2 > 0 && a4 > 0) {
        Some(base0 + theta_sum + 1)
    } else if a1 == 0 && a3 == 0 && a4 == 0 {
        Some(t0.g0.min(t0.g0bar + 1) + theta_sum)
    } else if a1 == 0 && a2 == 0 && a3 == 0 && in_a4().any(|c| diff(c) == Some(1)) {
        Some(base0 + theta_sum + 1)
    } else if a1 == 0 && a2 == 0 && a3 == 0 && in_a4().all(|c| diff(c) == Some(2)) {
        Some(base0 + theta_sum + 2)
    } else {
        None
    };

    let g1bar = children
        .iter()
        .fold(t0.g1bar, |acc, c| acc + c.g0.min(c.g0bar));
    let g0bar = children.iter().fold(t0.g0bar, |acc, c| acc + c.g0);

    ClosedForm {
        g1,
        g0,
        g1bar,
        g0bar,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::four::{combine, leaf_base_values};

    #[test]
    fn k2_child_has_no_case() {
        // A single-edge child has g1 = INF, so the difference test is undefined.
        let b = leaf_base_values();
        let cf = closed_form(&b, &[b]);
        assert_eq!(cf.g0, None);
        let v = combine(&b, [&b]);
        assert_eq!(cf.g1, v.g1);
        assert_eq!(cf.g1bar, v.g1bar);
        assert_eq!(cf.g0bar, v.g0bar);
    }
}
