//! Vertex sets as 64-bit masks.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub, SubAssign};

/// Vertex identifier. Graphs hold at most [`MAX_VERTICES`] vertices with ids below that bound.
pub type Vertex = usize;

/// Upper bound (exclusive) on vertex ids.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices, stored as a bitmask over ids `0..64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VSet(pub u64);

impl VSet {
    pub const EMPTY: VSet = VSet(0);

    pub fn single(v: Vertex) -> VSet {
        VSet(1u64 << v)
    }

    /// The set `{0, .., n-1}`.
    pub fn range(n: usize) -> VSet {
        if n >= 64 {
            VSet(u64::MAX)
        } else {
            VSet((1u64 << n) - 1)
        }
    }

    pub fn contains(self, v: Vertex) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: Vertex) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: Vertex) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: Vertex) -> VSet {
        VSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: Vertex) -> VSet {
        VSet(self.0 & !(1u64 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn min(self) -> Option<Vertex> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as Vertex)
    }

    pub fn max(self) -> Option<Vertex> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as Vertex)
    }

    pub fn iter(self) -> VSetIter {
        VSetIter(self.0)
    }

    pub fn to_vec(self) -> Vec<Vertex> {
        self.iter().collect()
    }

    /// Image under a vertex map.
    pub fn map(self, f: impl Fn(Vertex) -> Vertex) -> VSet {
        self.iter().map(f).collect()
    }
}

pub struct VSetIter(u64);

impl Iterator for VSetIter {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as Vertex;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VSetIter {}

impl IntoIterator for VSet {
    type Item = Vertex;
    type IntoIter = VSetIter;
    fn into_iter(self) -> VSetIter {
        self.iter()
    }
}

impl FromIterator<Vertex> for VSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut s = VSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a Vertex> for VSet {
    fn from_iter<I: IntoIterator<Item = &'a Vertex>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl BitOr for VSet {
    type Output = VSet;
    fn bitor(self, rhs: VSet) -> VSet {
        VSet(self.0 | rhs.0)
    }
}

impl BitAnd for VSet {
    type Output = VSet;
    fn bitand(self, rhs: VSet) -> VSet {
        VSet(self.0 & rhs.0)
    }
}

impl Sub for VSet {
    type Output = VSet;
    fn sub(self, rhs: VSet) -> VSet {
        VSet(self.0 & !rhs.0)
    }
}

impl Not for VSet {
    type Output = VSet;
    fn not(self) -> VSet {
        VSet(!self.0)
    }
}

impl BitOrAssign for VSet {
    fn bitor_assign(&mut self, rhs: VSet) {
        self.0 |= rhs.0;
    }
}

impl BitAndAssign for VSet {
    fn bitand_assign(&mut self, rhs: VSet) {
        self.0 &= rhs.0;
    }
}

impl SubAssign for VSet {
    fn sub_assign(&mut self, rhs: VSet) {
        self.0 &= !rhs.0;
    }
}

impl fmt::Debug for VSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a: VSet = [0, 3, 5].iter().collect();
        let b: VSet = [3, 4].iter().collect();
        assert_eq!((a | b).to_vec(), vec![0, 3, 4, 5]);
        assert_eq!((a & b).to_vec(), vec![3]);
        assert_eq!((a - b).to_vec(), vec![0, 5]);
        assert_eq!(a.len(), 3);
        assert_eq!(a.min(), Some(0));
        assert_eq!(a.max(), Some(5));
        assert!(VSet::single(3).is_subset(a));
        assert_eq!(VSet::range(64).len(), 64);
        assert!(VSet::EMPTY.min().is_none());
    }
}
