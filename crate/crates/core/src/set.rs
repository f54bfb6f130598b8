use std::fmt;

/// A subset of an effect-algebra carrier, one bit per element index.
///
/// Carriers are capped at [`ElemSet::CAPACITY`] elements, so a single word
/// suffices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet(pub u64);

impl ElemSet {
    pub const CAPACITY: usize = 64;
    pub const EMPTY: ElemSet = ElemSet(0);

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> ElemSet {
        debug_assert!(n <= Self::CAPACITY);
        if n == Self::CAPACITY {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(x: usize) -> ElemSet {
        ElemSet(1u64 << x)
    }

    pub fn contains(self, x: usize) -> bool {
        self.0 >> x & 1 == 1
    }

    pub fn insert(&mut self, x: usize) {
        self.0 |= 1u64 << x;
    }

    pub fn remove(&mut self, x: usize) {
        self.0 &= !(1u64 << x);
    }

    pub fn with(self, x: usize) -> ElemSet {
        ElemSet(self.0 | 1u64 << x)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & other.0)
    }

    pub fn difference(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & !other.0)
    }

    /// Complement relative to `{0, .., n-1}`.
    pub fn complement(self, n: usize) -> ElemSet {
        ElemSet(!self.0 & ElemSet::full(n).0)
    }

    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: ElemSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn iter(self) -> Elems {
        Elems(self.0)
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElemSet::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl IntoIterator for ElemSet {
    type Item = usize;
    type IntoIter = Elems;

    fn into_iter(self) -> Elems {
        self.iter()
    }
}

/// Ascending iterator over the members of an [`ElemSet`].
pub struct Elems(u64);

impl Iterator for Elems {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

/// All subsets of `{0, .., n-1}` in increasing integer order.
pub(crate) fn all_subsets(n: usize) -> impl Iterator<Item = ElemSet> {
    debug_assert!(n < 64);
    (0u64..1u64 << n).map(ElemSet)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a: ElemSet = [0, 2, 5].into_iter().collect();
        assert_eq!(a.len(), 3);
        assert!(a.contains(2) && !a.contains(1));
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 2, 5]);
        assert_eq!(a.complement(6), [1, 3, 4].into_iter().collect());
        assert!(ElemSet::singleton(5).is_subset(a));
        assert_eq!(ElemSet::full(64).len(), 64);
        assert_eq!(a.first(), Some(0));
        assert_eq!(ElemSet::EMPTY.first(), None);
    }
}
