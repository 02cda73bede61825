//! The ternary relation `Δ` as a set of index triples.

use alloc::vec::Vec;

use crate::error::StructureError;

pub type Triple = [usize; 3];

/// Carriers up to this size also get a dense `n³` membership bitmap.
const DENSE_LIMIT: usize = 64;

/// Set of index triples over a carrier of `n` elements.
///
/// Triples are kept sorted lexicographically, so the slice for a pair
/// `(a, b)` is a contiguous run of the list.
#[derive(Debug, Clone)]
pub struct TripleSet {
    n: usize,
    triples: Vec<Triple>,
    dense: Option<Vec<u64>>,
}

impl PartialEq for TripleSet {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.triples == other.triples
    }
}

impl Eq for TripleSet {}

impl TripleSet {
    /// Builds the set, rejecting out-of-range indices and duplicates.
    pub fn new<I>(n: usize, triples: I) -> Result<Self, StructureError>
    where
        I: IntoIterator<Item = Triple>,
    {
        let mut list: Vec<Triple> = triples.into_iter().collect();
        if let Some(t) = list.iter().find(|t| t.iter().any(|&i| i >= n)) {
            return Err(StructureError::TripleOutOfRange { triple: *t, n });
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(StructureError::DuplicateTriple(w[0]));
        }
        Ok(Self::from_sorted(n, list))
    }

    /// Builds the set from arbitrary triples, silently merging duplicates.
    /// Indices must be in range.
    pub(crate) fn collect_dedup<I>(n: usize, triples: I) -> Self
    where
        I: IntoIterator<Item = Triple>,
    {
        let mut list: Vec<Triple> = triples.into_iter().collect();
        debug_assert!(list.iter().all(|t| t.iter().all(|&i| i < n)));
        list.sort_unstable();
        list.dedup();
        Self::from_sorted(n, list)
    }

    fn from_sorted(n: usize, triples: Vec<Triple>) -> Self {
        let dense = (n <= DENSE_LIMIT).then(|| {
            let mut bits = alloc::vec![0u64; (n * n * n).div_ceil(64)];
            for t in &triples {
                let k = (t[0] * n + t[1]) * n + t[2];
                bits[k / 64] |= 1 << (k % 64);
            }
            bits
        });
        Self { n, triples, dense }
    }

    pub fn carrier_size(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// All triples in lexicographic order.
    pub fn as_slice(&self) -> &[Triple] {
        &self.triples
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Triple> {
        self.triples.iter()
    }

    pub fn contains(&self, a: usize, b: usize, c: usize) -> bool {
        if a >= self.n || b >= self.n || c >= self.n {
            return false;
        }
        match &self.dense {
            Some(bits) => {
                let k = (a * self.n + b) * self.n + c;
                bits[k / 64] & (1 << (k % 64)) != 0
            }
            None => self.triples.binary_search(&[a, b, c]).is_ok(),
        }
    }

    pub fn contains_triple(&self, t: Triple) -> bool {
        self.contains(t[0], t[1], t[2])
    }

    /// `{ c : (a, b, c) ∈ Δ }` in increasing order.
    pub fn slice(&self, a: usize, b: usize) -> impl Iterator<Item = usize> + '_ {
        let lo = self.triples.partition_point(|t| (t[0], t[1]) < (a, b));
        let hi = self.triples.partition_point(|t| (t[0], t[1]) <= (a, b));
        self.triples[lo..hi].iter().map(|t| t[2])
    }

    pub fn slice_len(&self, a: usize, b: usize) -> usize {
        let lo = self.triples.partition_point(|t| (t[0], t[1]) < (a, b));
        let hi = self.triples.partition_point(|t| (t[0], t[1]) <= (a, b));
        hi - lo
    }
}

impl<'a> IntoIterator for &'a TripleSet {
    type Item = &'a Triple;
    type IntoIter = core::slice::Iter<'a, Triple>;

    fn into_iter(self) -> Self::IntoIter {
        self.triples.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn slice_matches_membership() {
        let set = TripleSet::new(3, vec![[0, 1, 2], [0, 1, 0], [1, 1, 1], [2, 0, 1]]).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                let s: Vec<usize> = set.slice(a, b).collect();
                let brute: Vec<usize> = (0..3).filter(|&c| set.contains(a, b, c)).collect();
                assert_eq!(s, brute);
                assert_eq!(set.slice_len(a, b), brute.len());
            }
        }
    }

    #[test]
    fn rejects_duplicates_and_range() {
        assert_eq!(
            TripleSet::new(2, vec![[0, 1, 1], [0, 1, 1]]),
            Err(StructureError::DuplicateTriple([0, 1, 1]))
        );
        assert!(matches!(
            TripleSet::new(2, vec![[0, 2, 1]]),
            Err(StructureError::TripleOutOfRange { .. })
        ));
    }

    #[test]
    fn sparse_representation_agrees() {
        let n = 70;
        let triples: Vec<Triple> = (0..n).map(|i| [i, (i + 1) % n, (2 * i) % n]).collect();
        let set = TripleSet::new(n, triples.clone()).unwrap();
        assert!(set.dense.is_none());
        for t in &triples {
            assert!(set.contains_triple(*t));
        }
        assert!(!set.contains(0, 0, 0));
        assert_eq!(set.slice(5, 6).collect::<Vec<_>>(), vec![10]);
    }
}
