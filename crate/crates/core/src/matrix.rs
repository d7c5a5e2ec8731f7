//! Dense 0/1 matrices and partial matrices over {0, 1, *}.
//!
//! Rows are bit-packed into 64-bit words so that subarray counts and
//! margin sums reduce to masked popcounts. The text format is
//! `"m n"` on the first line followed by `m` lines of `n` characters
//! from `{0,1,*}`, LF separated, no trailing whitespace. Indices are
//! 1-based in external formats and 0-based in this API.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// Mask selecting the valid low bits of the last word of an n-column row.
#[inline]
fn tail_mask(n: usize) -> u64 {
    let r = n % WORD_BITS;
    if r == 0 {
        u64::MAX
    } else {
        (1u64 << r) - 1
    }
}

/// A dense m x n matrix of zeros and ones, bit-packed row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    m: usize,
    n: usize,
    wpr: usize,
    bits: Vec<u64>,
}

impl BinaryMatrix {
    pub fn zeros(m: usize, n: usize) -> Self {
        assert!(m >= 1 && n >= 1, "dimensions must be at least 1");
        let wpr = words_for(n);
        BinaryMatrix {
            m,
            n,
            wpr,
            bits: vec![0u64; m * wpr],
        }
    }

    pub fn ones(m: usize, n: usize) -> Self {
        let mut out = Self::zeros(m, n);
        let tm = tail_mask(n);
        for i in 0..m {
            let row = out.row_words_mut(i);
            for w in row.iter_mut() {
                *w = u64::MAX;
            }
            let last = row.len() - 1;
            row[last] &= tm;
        }
        out
    }

    pub fn identity(k: usize) -> Self {
        let mut out = Self::zeros(k, k);
        for i in 0..k {
            out.set(i, i, true);
        }
        out
    }

    pub fn from_fn(m: usize, n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut out = Self::zeros(m, n);
        for i in 0..m {
            for j in 0..n {
                if f(i, j) {
                    out.set(i, j, true);
                }
            }
        }
        out
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> u64 {
        (self.m * self.n) as u64
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.m && j < self.n);
        let w = self.bits[i * self.wpr + j / WORD_BITS];
        (w >> (j % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        debug_assert!(i < self.m && j < self.n);
        let w = &mut self.bits[i * self.wpr + j / WORD_BITS];
        if v {
            *w |= 1 << (j % WORD_BITS);
        } else {
            *w &= !(1 << (j % WORD_BITS));
        }
    }

    #[inline]
    pub fn row_words(&self, i: usize) -> &[u64] {
        &self.bits[i * self.wpr..(i + 1) * self.wpr]
    }

    fn row_words_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.bits[i * self.wpr..(i + 1) * self.wpr]
    }

    /// The row as a single word, bit j = column j. Requires n <= 64.
    #[inline]
    pub fn row_mask(&self, i: usize) -> u64 {
        assert!(self.n <= 64, "row_mask requires n <= 64");
        self.bits[i * self.wpr]
    }

    pub fn set_row_mask(&mut self, i: usize, mask: u64) {
        assert!(self.n <= 64 && mask & !tail_mask(self.n) == 0);
        self.bits[i * self.wpr] = mask;
    }

    pub fn count_ones(&self) -> u64 {
        self.bits.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn row_ones(&self, i: usize) -> u64 {
        self.row_words(i).iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn col_ones(&self, j: usize) -> u64 {
        (0..self.m).filter(|&i| self.get(i, j)).count() as u64
    }

    /// Flip every cell. Margins become (n - s_i, m - t_j).
    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        let tm = tail_mask(self.n);
        for i in 0..self.m {
            let row = out.row_words_mut(i);
            for w in row.iter_mut() {
                *w = !*w;
            }
            let last = row.len() - 1;
            row[last] &= tm;
        }
        out
    }

    pub fn transpose(&self) -> Self {
        BinaryMatrix::from_fn(self.n, self.m, |i, j| self.get(j, i))
    }

    /// The partial matrix M \ D: M's entries where D is empty, * elsewhere.
    pub fn remove(&self, d: &PartialMatrix) -> PartialMatrix {
        assert_eq!((self.m, self.n), (d.m, d.n), "dimension mismatch");
        let mut out = PartialMatrix::empty(self.m, self.n);
        for w in 0..self.bits.len() {
            out.known[w] = !d.known[w];
            out.values[w] = self.bits[w] & out.known[w];
        }
        let tm = tail_mask(self.n);
        for i in 0..self.m {
            let last = (i + 1) * self.wpr - 1;
            out.known[last] &= tm;
            out.values[last] &= tm;
        }
        out
    }

    /// The fully revealed partial matrix equal to M.
    pub fn reveal_all(&self) -> PartialMatrix {
        let mut out = PartialMatrix::empty(self.m, self.n);
        let tm = tail_mask(self.n);
        for i in 0..self.m {
            for w in 0..self.wpr {
                let idx = i * self.wpr + w;
                out.known[idx] = if w + 1 == self.wpr { tm } else { u64::MAX };
                out.values[idx] = self.bits[idx];
            }
        }
        out
    }

    /// The sub-matrix restricted to a reveal mask: cell (i,j) revealed iff
    /// mask bit i*n+j is set. Used by subset sweeps over candidate D.
    pub fn restrict_to_mask(&self, mask: &[bool]) -> PartialMatrix {
        assert_eq!(mask.len(), self.m * self.n);
        let mut out = PartialMatrix::empty(self.m, self.n);
        for i in 0..self.m {
            for j in 0..self.n {
                if mask[i * self.n + j] {
                    out.set_value(i, j, self.get(i, j));
                }
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        match parse_matrix(text)? {
            ParsedMatrix::Full(m) => Ok(m),
            ParsedMatrix::Partial(_) => Err(Error::IllegalCharacter('*')),
        }
    }
}

impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.m, self.n)?;
        for i in 0..self.m {
            write!(f, "\n")?;
            for j in 0..self.n {
                write!(f, "{}", if self.get(i, j) { '1' } else { '0' })?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryMatrix({}x{})\n{}", self.m, self.n, self)
    }
}

impl FromStr for BinaryMatrix {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BinaryMatrix::parse(s)
    }
}

/// An m x n matrix over {0, 1, *}; the unrevealed cells are *.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartialMatrix {
    m: usize,
    n: usize,
    wpr: usize,
    known: Vec<u64>,
    values: Vec<u64>,
}

impl PartialMatrix {
    pub fn empty(m: usize, n: usize) -> Self {
        assert!(m >= 1 && n >= 1, "dimensions must be at least 1");
        let wpr = words_for(n);
        PartialMatrix {
            m,
            n,
            wpr,
            known: vec![0; m * wpr],
            values: vec![0; m * wpr],
        }
    }

    pub fn from_cells(m: usize, n: usize, cells: &[(usize, usize, bool)]) -> Self {
        let mut out = Self::empty(m, n);
        for &(i, j, v) in cells {
            out.set_value(i, j, v);
        }
        out
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// None when the cell is unrevealed.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Option<bool> {
        debug_assert!(i < self.m && j < self.n);
        let idx = i * self.wpr + j / WORD_BITS;
        let bit = 1u64 << (j % WORD_BITS);
        if self.known[idx] & bit == 0 {
            None
        } else {
            Some(self.values[idx] & bit != 0)
        }
    }

    pub fn set_value(&mut self, i: usize, j: usize, v: bool) {
        debug_assert!(i < self.m && j < self.n);
        let idx = i * self.wpr + j / WORD_BITS;
        let bit = 1u64 << (j % WORD_BITS);
        self.known[idx] |= bit;
        if v {
            self.values[idx] |= bit;
        } else {
            self.values[idx] &= !bit;
        }
    }

    pub fn clear(&mut self, i: usize, j: usize) {
        debug_assert!(i < self.m && j < self.n);
        let idx = i * self.wpr + j / WORD_BITS;
        let bit = 1u64 << (j % WORD_BITS);
        self.known[idx] &= !bit;
        self.values[idx] &= !bit;
    }

    /// Number of revealed cells, |D|.
    pub fn size(&self) -> u64 {
        self.known.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Revealed cells in row-major order.
    pub fn filled_cells(&self) -> Vec<(usize, usize, bool)> {
        let mut out = Vec::new();
        for i in 0..self.m {
            for j in 0..self.n {
                if let Some(v) = self.get(i, j) {
                    out.push((i, j, v));
                }
            }
        }
        out
    }

    /// True when every revealed cell agrees with M (the relation D ⊆ M).
    pub fn is_subset_of(&self, m: &BinaryMatrix) -> bool {
        if (self.m, self.n) != (m.m(), m.n()) {
            return false;
        }
        for i in 0..self.m {
            let mr = m.row_words(i);
            for w in 0..self.wpr {
                let idx = i * self.wpr + w;
                if (mr[w] ^ self.values[idx]) & self.known[idx] != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Known-cell mask of a row as a single word. Requires n <= 64.
    #[inline]
    pub fn known_row_mask(&self, i: usize) -> u64 {
        assert!(self.n <= 64);
        self.known[i * self.wpr]
    }

    /// Revealed ones of a row as a single word. Requires n <= 64.
    #[inline]
    pub fn ones_row_mask(&self, i: usize) -> u64 {
        assert!(self.n <= 64);
        self.values[i * self.wpr]
    }

    pub fn row_known_ones(&self, i: usize) -> u64 {
        let base = i * self.wpr;
        (0..self.wpr)
            .map(|w| (self.values[base + w] & self.known[base + w]).count_ones() as u64)
            .sum()
    }

    pub fn row_known_zeros(&self, i: usize) -> u64 {
        let base = i * self.wpr;
        (0..self.wpr)
            .map(|w| (!self.values[base + w] & self.known[base + w]).count_ones() as u64)
            .sum()
    }

    pub fn col_known_ones(&self, j: usize) -> u64 {
        (0..self.m).filter(|&i| self.get(i, j) == Some(true)).count() as u64
    }

    pub fn col_known_zeros(&self, j: usize) -> u64 {
        (0..self.m).filter(|&i| self.get(i, j) == Some(false)).count() as u64
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::empty(self.n, self.m);
        for i in 0..self.m {
            for j in 0..self.n {
                if let Some(v) = self.get(i, j) {
                    out.set_value(j, i, v);
                }
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        match parse_matrix(text)? {
            ParsedMatrix::Full(m) => Ok(m.reveal_all()),
            ParsedMatrix::Partial(p) => Ok(p),
        }
    }
}

impl fmt::Display for PartialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.m, self.n)?;
        for i in 0..self.m {
            write!(f, "\n")?;
            for j in 0..self.n {
                let c = match self.get(i, j) {
                    Some(true) => '1',
                    Some(false) => '0',
                    None => '*',
                };
                write!(f, "{c}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PartialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PartialMatrix({}x{})\n{}", self.m, self.n, self)
    }
}

impl FromStr for PartialMatrix {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        PartialMatrix::parse(s)
    }
}

/// Result of parsing the shared text format.
pub enum ParsedMatrix {
    Full(BinaryMatrix),
    Partial(PartialMatrix),
}

/// Parse the text format. A text without '*' yields a full matrix.
/// A single trailing LF is tolerated; the canonical serialization has none.
pub fn parse_matrix(text: &str) -> Result<ParsedMatrix> {
    if text.is_empty() {
        return Err(Error::EmptyInput);
    }
    let body = text.strip_suffix('\n').unwrap_or(text);
    let mut lines = body.split('\n');
    let header = lines.next().ok_or(Error::EmptyInput)?;
    let mut parts = header.split(' ');
    let m: usize = parts
        .next()
        .and_then(|p| p.parse().ok())
        .ok_or(Error::BadHeader)?;
    let n: usize = parts
        .next()
        .and_then(|p| p.parse().ok())
        .ok_or(Error::BadHeader)?;
    if parts.next().is_some() {
        return Err(Error::BadHeader);
    }
    if m == 0 || n == 0 {
        return Err(Error::OutOfRange("m and n must be at least 1".into()));
    }
    let mut partial = PartialMatrix::empty(m, n);
    let mut any_star = false;
    let mut rows = 0usize;
    for (i, line) in lines.enumerate() {
        if i >= m {
            return Err(Error::DimensionMismatch(format!(
                "expected {m} rows, found more"
            )));
        }
        let mut cols = 0usize;
        for (j, c) in line.chars().enumerate() {
            if j >= n {
                return Err(Error::DimensionMismatch(format!(
                    "row {} longer than {n} columns",
                    i + 1
                )));
            }
            match c {
                '0' => partial.set_value(i, j, false),
                '1' => partial.set_value(i, j, true),
                '*' => any_star = true,
                other => return Err(Error::IllegalCharacter(other)),
            }
            cols += 1;
        }
        if cols != n {
            return Err(Error::DimensionMismatch(format!(
                "row {} has {cols} columns, expected {n}",
                i + 1
            )));
        }
        rows += 1;
    }
    if rows != m {
        return Err(Error::DimensionMismatch(format!(
            "expected {m} rows, found {rows}"
        )));
    }
    if any_star {
        Ok(ParsedMatrix::Partial(partial))
    } else {
        let full = BinaryMatrix::from_fn(m, n, |i, j| partial.get(i, j) == Some(true));
        Ok(ParsedMatrix::Full(full))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_identity() {
        let m = BinaryMatrix::parse("2 2\n10\n01").unwrap();
        assert_eq!(m, BinaryMatrix::identity(2));
        assert!(m.get(0, 0) && m.get(1, 1));
        assert!(!m.get(0, 1) && !m.get(1, 0));
    }

    #[test]
    fn round_trip_is_identity() {
        for text in ["2 2\n10\n01", "1 1\n*", "3 2\n1*\n00\n*1"] {
            match parse_matrix(text).unwrap() {
                ParsedMatrix::Full(m) => assert_eq!(m.to_string(), text),
                ParsedMatrix::Partial(p) => assert_eq!(p.to_string(), text),
            }
        }
    }

    #[test]
    fn illegal_character() {
        assert_eq!(
            BinaryMatrix::parse("2 2\n1x\n01"),
            Err(Error::IllegalCharacter('x'))
        );
    }

    #[test]
    fn empty_input() {
        assert!(matches!(parse_matrix(""), Err(Error::EmptyInput)));
    }

    #[test]
    fn dimension_mismatch() {
        assert!(matches!(
            parse_matrix("2 2\n10"),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            parse_matrix("2 2\n101\n01"),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn complement_is_involution() {
        let m = BinaryMatrix::parse("2 3\n110\n101").unwrap();
        assert_eq!(m.complement().complement(), m);
        assert_eq!(
            BinaryMatrix::identity(2).complement(),
            BinaryMatrix::parse("2 2\n01\n10").unwrap()
        );
        assert_eq!(BinaryMatrix::zeros(2, 2).complement(), BinaryMatrix::ones(2, 2));
    }

    #[test]
    fn remove_splits_cells() {
        let m = BinaryMatrix::identity(2);
        let d = PartialMatrix::from_cells(2, 2, &[(0, 0, true)]);
        let rest = m.remove(&d);
        assert_eq!(rest.get(0, 0), None);
        assert_eq!(rest.get(0, 1), Some(false));
        assert_eq!(rest.get(1, 0), Some(false));
        assert_eq!(rest.get(1, 1), Some(true));
        assert_eq!(rest.size() + d.size(), 4);
    }

    #[test]
    fn subset_relation() {
        let m = BinaryMatrix::identity(2);
        let d = PartialMatrix::from_cells(2, 2, &[(0, 0, true)]);
        assert!(d.is_subset_of(&m));
        let bad = PartialMatrix::from_cells(2, 2, &[(0, 0, false)]);
        assert!(!bad.is_subset_of(&m));
    }

    #[test]
    fn wide_matrix_words() {
        // exercise the multi-word path
        let m = BinaryMatrix::from_fn(2, 70, |i, j| (i + j) % 3 == 0);
        let t = m.transpose();
        for i in 0..2 {
            for j in 0..70 {
                assert_eq!(m.get(i, j), t.get(j, i));
            }
        }
        assert_eq!(m.count_ones(), t.count_ones());
        let text = m.to_string();
        assert_eq!(BinaryMatrix::parse(&text).unwrap(), m);
    }
}
