//! South-East walks, permutations, and good-form witnesses.
//!
//! A walk is encoded by its threshold vector f: row i (0-based) has its
//! first f(i) cells below-left of the walk and the rest above-right.
//! f is weakly increasing down the rows, so the walk only ever steps
//! right or down.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::{BinaryMatrix, PartialMatrix};

/// A permutation of 0..k. `perm[p]` is the original index placed at
/// position p, i.e. permuted[p] = original[perm[p]].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Permutation((0..k).collect())
    }

    pub fn new(v: Vec<usize>) -> Result<Self> {
        let k = v.len();
        let mut seen = vec![false; k];
        for &x in &v {
            if x >= k || seen[x] {
                return Err(Error::InvalidPermutation);
            }
            seen[x] = true;
        }
        Ok(Permutation(v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn source(&self, position: usize) -> usize {
        self.0[position]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// 1-based copy for external formats.
    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x + 1).collect()
    }
}

/// Threshold vector of a South-East walk; f(0) = 0 and f is weakly
/// increasing with every value at most n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk {
    f: Vec<usize>,
}

impl Walk {
    /// From per-row thresholds f(1..m); validates monotonicity and range.
    pub fn from_thresholds(thresholds: &[usize], n: usize) -> Result<Self> {
        let mut f = Vec::with_capacity(thresholds.len() + 1);
        f.push(0);
        let mut prev = 0usize;
        for &x in thresholds {
            if x < prev || x > n {
                return Err(Error::OutOfRange(format!(
                    "walk threshold {x} breaks monotonicity or exceeds {n}"
                )));
            }
            f.push(x);
            prev = x;
        }
        Ok(Walk { f })
    }

    /// Number of rows the walk spans.
    pub fn rows(&self) -> usize {
        self.f.len() - 1
    }

    /// Threshold of 0-based row i: number of cells of that row below the walk.
    #[inline]
    pub fn threshold(&self, row: usize) -> usize {
        self.f[row + 1]
    }

    /// f(1..m), the external form.
    pub fn thresholds(&self) -> &[usize] {
        &self.f[1..]
    }
}

/// Row order, column order, and walk certifying a good-form arrangement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodFormWitness {
    pub row_perm: Permutation,
    pub col_perm: Permutation,
    pub walk: Walk,
}

impl GoodFormWitness {
    pub fn permute_partial(&self, p: &PartialMatrix) -> PartialMatrix {
        let mut out = PartialMatrix::empty(p.m(), p.n());
        for i in 0..p.m() {
            for j in 0..p.n() {
                if let Some(v) = p.get(self.row_perm.source(i), self.col_perm.source(j)) {
                    out.set_value(i, j, v);
                }
            }
        }
        out
    }

    pub fn permute_matrix(&self, m: &BinaryMatrix) -> BinaryMatrix {
        BinaryMatrix::from_fn(m.m(), m.n(), |i, j| {
            m.get(self.row_perm.source(i), self.col_perm.source(j))
        })
    }

    /// True when the permuted partial matrix has only revealed ones below
    /// the walk and only revealed zeros above it.
    pub fn certifies(&self, p: &PartialMatrix) -> bool {
        if self.row_perm.len() != p.m()
            || self.col_perm.len() != p.n()
            || self.walk.rows() != p.m()
        {
            return false;
        }
        for i in 0..p.m() {
            let f = self.walk.threshold(i);
            for j in 0..p.n() {
                if let Some(v) = p.get(self.row_perm.source(i), self.col_perm.source(j)) {
                    if (j < f) != v {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Zeros/ones of the full matrix split by the witness walk.
    pub fn split_counts(&self, m: &BinaryMatrix) -> WalkSplitCounts {
        let permuted = self.permute_matrix(m);
        let mut counts = WalkSplitCounts::default();
        for i in 0..permuted.m() {
            let f = self.walk.threshold(i);
            for j in 0..permuted.n() {
                let one = permuted.get(i, j);
                match (j < f, one) {
                    (true, true) => counts.beta1 += 1,
                    (true, false) => counts.beta0 += 1,
                    (false, true) => counts.alpha1 += 1,
                    (false, false) => counts.alpha0 += 1,
                }
            }
        }
        counts
    }
}

impl Serialize for GoodFormWitness {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("GoodFormWitness", 3)?;
        st.serialize_field("rows", &self.row_perm.one_based())?;
        st.serialize_field("cols", &self.col_perm.one_based())?;
        st.serialize_field("f", self.walk.thresholds())?;
        st.end()
    }
}

/// Zeros/ones above (alpha) and below (beta) a walk. The defining-set
/// cost of the arrangement is alpha1 + beta0.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct WalkSplitCounts {
    pub alpha0: u64,
    pub alpha1: u64,
    pub beta0: u64,
    pub beta1: u64,
}

impl WalkSplitCounts {
    pub fn total(&self) -> u64 {
        self.alpha0 + self.alpha1 + self.beta0 + self.beta1
    }

    pub fn ones(&self) -> u64 {
        self.alpha1 + self.beta1
    }

    pub fn defining_cost(&self) -> u64 {
        self.alpha1 + self.beta0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![1, 0]).is_ok());
        assert_eq!(Permutation::new(vec![0, 0]), Err(Error::InvalidPermutation));
        assert_eq!(Permutation::new(vec![0, 2]), Err(Error::InvalidPermutation));
    }

    #[test]
    fn walk_monotonicity() {
        assert!(Walk::from_thresholds(&[0, 2], 2).is_ok());
        assert!(Walk::from_thresholds(&[2, 1], 2).is_err());
        assert!(Walk::from_thresholds(&[3], 2).is_err());
    }

    #[test]
    fn split_counts_account_for_everything() {
        let m = BinaryMatrix::parse("2 2\n00\n11").unwrap();
        let w = GoodFormWitness {
            row_perm: Permutation::identity(2),
            col_perm: Permutation::identity(2),
            walk: Walk::from_thresholds(&[0, 2], 2).unwrap(),
        };
        let counts = w.split_counts(&m);
        assert_eq!(counts.total(), 4);
        assert_eq!(counts.ones(), 2);
        assert_eq!(counts.defining_cost(), 0);
        assert!(w.certifies(&m.reveal_all()));
    }

    #[test]
    fn witness_json_shape() {
        let w = GoodFormWitness {
            row_perm: Permutation::new(vec![1, 0]).unwrap(),
            col_perm: Permutation::identity(2),
            walk: Walk::from_thresholds(&[0, 2], 2).unwrap(),
        };
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, r#"{"rows":[2,1],"cols":[1,2],"f":[0,2]}"#);
    }
}
