//! Subsets of rows or columns, used for subarray counts and discrepancy.

use crate::error::{Error, Result};
use crate::matrix::BinaryMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Rows,
    Cols,
}

/// A subset of the rows or the columns of a matrix, as a bitmask over the
/// full index range. The empty set is legal and yields zero counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexSet {
    side: Side,
    universe: usize,
    words: Vec<u64>,
}

impl IndexSet {
    pub fn empty(side: Side, universe: usize) -> Self {
        IndexSet {
            side,
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(side: Side, universe: usize) -> Self {
        let mut out = Self::empty(side, universe);
        for i in 0..universe {
            out.insert(i);
        }
        out
    }

    /// Build from 0-based indices.
    pub fn from_indices(side: Side, universe: usize, indices: &[usize]) -> Result<Self> {
        let mut out = Self::empty(side, universe);
        for &i in indices {
            if i >= universe {
                return Err(Error::OutOfRange(format!(
                    "index {i} outside 0..{universe}"
                )));
            }
            out.insert(i);
        }
        Ok(out)
    }

    /// Build from the low `universe` bits of a word. Requires universe <= 64.
    pub fn from_mask(side: Side, universe: usize, mask: u64) -> Self {
        assert!(universe <= 64);
        assert!(universe == 64 || mask >> universe == 0, "mask out of range");
        let mut out = Self::empty(side, universe);
        out.words[0] = mask;
        out
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.universe);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe).filter(move |&i| self.contains(i))
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

/// Exact count of ones in the subarray M[R, C].
pub fn ones_in_subarray(m: &BinaryMatrix, r: &IndexSet, c: &IndexSet) -> Result<u64> {
    if r.side() != Side::Rows || c.side() != Side::Cols {
        return Err(Error::SideMismatch);
    }
    if r.universe() != m.m() || c.universe() != m.n() {
        return Err(Error::SideMismatch);
    }
    let mut total = 0u64;
    for i in r.iter() {
        let row = m.row_words(i);
        for (w, cw) in row.iter().zip(c.words()) {
            total += (w & cw).count_ones() as u64;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_identity() {
        let m = BinaryMatrix::identity(2);
        let r = IndexSet::full(Side::Rows, 2);
        let c = IndexSet::full(Side::Cols, 2);
        assert_eq!(ones_in_subarray(&m, &r, &c).unwrap(), 2);
    }

    #[test]
    fn empty_set_counts_zero() {
        let m = BinaryMatrix::ones(3, 3);
        let r = IndexSet::empty(Side::Rows, 3);
        let c = IndexSet::full(Side::Cols, 3);
        assert_eq!(ones_in_subarray(&m, &r, &c).unwrap(), 0);
    }

    #[test]
    fn row_one_cols_two_three() {
        let m = BinaryMatrix::parse("2 3\n110\n101").unwrap();
        let r = IndexSet::from_indices(Side::Rows, 2, &[0]).unwrap();
        let c = IndexSet::from_indices(Side::Cols, 3, &[1, 2]).unwrap();
        assert_eq!(ones_in_subarray(&m, &r, &c).unwrap(), 1);
    }

    #[test]
    fn side_mismatch_is_an_error() {
        let m = BinaryMatrix::identity(2);
        let r = IndexSet::full(Side::Cols, 2);
        let c = IndexSet::full(Side::Cols, 2);
        assert_eq!(ones_in_subarray(&m, &r, &c), Err(Error::SideMismatch));
    }

    #[test]
    fn additive_over_disjoint_columns() {
        let m = BinaryMatrix::parse("3 4\n1010\n0110\n1001").unwrap();
        let r = IndexSet::from_indices(Side::Rows, 3, &[0, 2]).unwrap();
        let c1 = IndexSet::from_indices(Side::Cols, 4, &[0, 1]).unwrap();
        let c2 = IndexSet::from_indices(Side::Cols, 4, &[2, 3]).unwrap();
        let all = IndexSet::full(Side::Cols, 4);
        assert_eq!(
            ones_in_subarray(&m, &r, &c1).unwrap() + ones_in_subarray(&m, &r, &c2).unwrap(),
            ones_in_subarray(&m, &r, &all).unwrap()
        );
    }
}
