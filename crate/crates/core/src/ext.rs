use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign};

/// A natural number extended with infinity.
///
/// Addition is absorbing (`INF + x = INF`) and the ordering puts `INF` above
/// every finite value, so `min` behaves as expected for "no solution".
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExtNat(u32);

impl ExtNat {
    pub const INF: ExtNat = ExtNat(u32::MAX);
    pub const ZERO: ExtNat = ExtNat(0);
    pub const ONE: ExtNat = ExtNat(1);

    /// Panics if `value` is `u32::MAX`, which is reserved for infinity.
    pub const fn finite(value: u32) -> ExtNat {
        assert!(value != u32::MAX, "u32::MAX is reserved for infinity");
        ExtNat(value)
    }

    pub fn from_usize(value: usize) -> ExtNat {
        match u32::try_from(value) {
            Ok(v) if v != u32::MAX => ExtNat(v),
            _ => panic!("edge count {value} does not fit an extended natural"),
        }
    }

    pub const fn is_finite(self) -> bool {
        self.0 != u32::MAX
    }

    pub const fn is_infinite(self) -> bool {
        self.0 == u32::MAX
    }

    pub fn get(self) -> Option<u32> {
        self.is_finite().then_some(self.0)
    }

    /// `self - rhs` when both are finite and `self >= rhs`.
    pub fn checked_sub(self, rhs: ExtNat) -> Option<u32> {
        match (self.get(), rhs.get()) {
            (Some(a), Some(b)) => a.checked_sub(b),
            _ => None,
        }
    }
}

impl Default for ExtNat {
    fn default() -> Self {
        ExtNat::ZERO
    }
}

impl From<u32> for ExtNat {
    fn from(value: u32) -> Self {
        ExtNat::finite(value)
    }
}

impl Add for ExtNat {
    type Output = ExtNat;

    fn add(self, rhs: ExtNat) -> ExtNat {
        if self.is_infinite() || rhs.is_infinite() {
            return ExtNat::INF;
        }
        let sum = self
            .0
            .checked_add(rhs.0)
            .expect("extended natural overflow");
        ExtNat::finite(sum)
    }
}

impl Add<u32> for ExtNat {
    type Output = ExtNat;

    fn add(self, rhs: u32) -> ExtNat {
        self + ExtNat::finite(rhs)
    }
}

impl AddAssign for ExtNat {
    fn add_assign(&mut self, rhs: ExtNat) {
        *self = *self + rhs;
    }
}

impl PartialOrd for ExtNat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtNat {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl core::iter::Sum for ExtNat {
    fn sum<I: Iterator<Item = ExtNat>>(iter: I) -> ExtNat {
        iter.fold(ExtNat::ZERO, Add::add)
    }
}

impl fmt::Debug for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.get() {
            Some(v) => write!(f, "{v}"),
            None => f.write_str("∞"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn infinity_absorbs() {
        assert_eq!(ExtNat::INF + 3, ExtNat::INF);
        assert_eq!(ExtNat::from(2) + ExtNat::INF, ExtNat::INF);
        assert!(ExtNat::from(u32::MAX - 1) < ExtNat::INF);
        assert_eq!(ExtNat::INF.min(ExtNat::from(7)), ExtNat::from(7));
    }

    #[test]
    fn sum_and_sub() {
        let s: ExtNat = [1u32, 2, 3].into_iter().map(ExtNat::from).sum();
        assert_eq!(s, ExtNat::from(6));
        assert_eq!(ExtNat::from(5).checked_sub(ExtNat::from(3)), Some(2));
        assert_eq!(ExtNat::INF.checked_sub(ExtNat::from(3)), None);
    }

    proptest! {
        #[test]
        fn addition_matches_u64(a in 0u32..1_000_000, b in 0u32..1_000_000) {
            let s = ExtNat::from(a) + ExtNat::from(b);
            prop_assert_eq!(s.get().map(u64::from), Some(u64::from(a) + u64::from(b)));
            prop_assert!(s >= ExtNat::from(a).max(ExtNat::from(b)));
        }
    }
}
