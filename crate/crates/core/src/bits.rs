//! Fixed-width bit set used for element subsets and adjacency rows.
//!
//! Rings are capped at 256 elements, so four machine words always suffice.

use std::fmt;

/// Capacity of a [`Bits256`] in bits.
pub const CAPACITY: usize = 256;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bits256([u64; 4]);

impl Bits256 {
    pub const fn empty() -> Self {
        Bits256([0; 4])
    }

    /// The set `{0, 1, ..., n - 1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= CAPACITY);
        let mut b = Self::empty();
        for w in 0..4 {
            let lo = w * 64;
            if n >= lo + 64 {
                b.0[w] = u64::MAX;
            } else if n > lo {
                b.0[w] = (1u64 << (n - lo)) - 1;
            }
        }
        b
    }

    pub fn singleton(i: usize) -> Self {
        let mut b = Self::empty();
        b.insert(i);
        b
    }

    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        let (w, m) = (i >> 6, 1u64 << (i & 63));
        let fresh = self.0[w] & m == 0;
        self.0[w] |= m;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0[i >> 6] &= !(1u64 << (i & 63));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.0[i >> 6] & (1u64 << (i & 63)) != 0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0 == [0; 4]
    }

    #[inline]
    pub fn union(&self, o: &Self) -> Self {
        Bits256(std::array::from_fn(|w| self.0[w] | o.0[w]))
    }

    #[inline]
    pub fn intersection(&self, o: &Self) -> Self {
        Bits256(std::array::from_fn(|w| self.0[w] & o.0[w]))
    }

    #[inline]
    pub fn difference(&self, o: &Self) -> Self {
        Bits256(std::array::from_fn(|w| self.0[w] & !o.0[w]))
    }

    #[inline]
    pub fn is_subset(&self, o: &Self) -> bool {
        (0..4).all(|w| self.0[w] & !o.0[w] == 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + t)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for Bits256 {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut b = Bits256::empty();
        for i in iter {
            b.insert(i);
        }
        b
    }
}

impl fmt::Debug for Bits256 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_iter() {
        for n in [0, 1, 63, 64, 65, 130, 256] {
            let b = Bits256::full(n);
            assert_eq!(b.len(), n);
            assert_eq!(b.to_vec(), (0..n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn set_algebra() {
        let a: Bits256 = [1, 5, 70, 200].into_iter().collect();
        let b: Bits256 = [5, 70, 255].into_iter().collect();
        assert_eq!(a.intersection(&b).to_vec(), vec![5, 70]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 200]);
        assert_eq!(a.union(&b).len(), 5);
        assert!(a.intersection(&b).is_subset(&a));
        assert_eq!(b.first(), Some(5));
        assert_eq!(Bits256::empty().first(), None);
    }
}
