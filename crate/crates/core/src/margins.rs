//! Row/column sum vectors, density, and the Gale-Ryser feasibility test.

use num_rational::Ratio;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrix::BinaryMatrix;

/// Exact density as a rational number of ones per cell.
pub type Density = Ratio<u64>;

/// Validated margins (s, t): row sums, column sums, equal totals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarginSpec {
    s: Vec<u64>,
    t: Vec<u64>,
    total: u64,
}

impl MarginSpec {
    pub fn new(s: Vec<u64>, t: Vec<u64>) -> Result<Self> {
        if s.is_empty() || t.is_empty() {
            return Err(Error::OutOfRange("margins must be nonempty".into()));
        }
        let m = s.len() as u64;
        let n = t.len() as u64;
        for (i, &si) in s.iter().enumerate() {
            if si > n {
                return Err(Error::OutOfRange(format!("s[{}] = {si} > n = {n}", i + 1)));
            }
        }
        for (j, &tj) in t.iter().enumerate() {
            if tj > m {
                return Err(Error::OutOfRange(format!("t[{}] = {tj} > m = {m}", j + 1)));
            }
        }
        let rows: u64 = s.iter().sum();
        let cols: u64 = t.iter().sum();
        if rows != cols {
            return Err(Error::TotalMismatch { rows, cols });
        }
        Ok(MarginSpec { s, t, total: rows })
    }

    pub fn of_matrix(m: &BinaryMatrix) -> Self {
        let s = (0..m.m()).map(|i| m.row_ones(i)).collect();
        let t = (0..m.n()).map(|j| m.col_ones(j)).collect();
        MarginSpec::new(s, t).expect("margins of a matrix are always consistent")
    }

    /// Square margins with constant row and column sum k.
    pub fn constant_square(n: usize, k: u64) -> Result<Self> {
        MarginSpec::new(vec![k; n], vec![k; n])
    }

    /// The class Lambda^k_{2k}: 2k x 2k, every row and column sum k.
    pub fn lambda_k2k(k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::OutOfRange("k must be at least 1".into()));
        }
        MarginSpec::constant_square(2 * k as usize, k)
    }

    pub fn m(&self) -> usize {
        self.s.len()
    }

    pub fn n(&self) -> usize {
        self.t.len()
    }

    pub fn row_sums(&self) -> &[u64] {
        &self.s
    }

    pub fn col_sums(&self) -> &[u64] {
        &self.t
    }

    /// Total number of ones, E.
    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn cells(&self) -> u64 {
        (self.m() * self.n()) as u64
    }

    /// Density lambda = E / (mn), exact.
    pub fn density(&self) -> Density {
        Ratio::new(self.total, self.cells())
    }

    pub fn transpose(&self) -> Self {
        MarginSpec {
            s: self.t.clone(),
            t: self.s.clone(),
            total: self.total,
        }
    }

    /// Margins of the complemented class: (n - s_i, m - t_j).
    pub fn complement(&self) -> Self {
        let n = self.n() as u64;
        let m = self.m() as u64;
        MarginSpec {
            s: self.s.iter().map(|&x| n - x).collect(),
            t: self.t.iter().map(|&x| m - x).collect(),
            total: self.cells() - self.total,
        }
    }

    /// True iff A(s, t) is nonempty.
    pub fn feasible(&self) -> bool {
        gale_ryser_core(&self.s, &self.t)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Raw {
            s: Vec<u64>,
            t: Vec<u64>,
        }
        let raw: Raw = serde_json::from_str(text)
            .map_err(|e| Error::OutOfRange(format!("bad margins JSON: {e}")))?;
        MarginSpec::new(raw.s, raw.t)
    }
}

impl Serialize for MarginSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("MarginSpec", 2)?;
        st.serialize_field("s", &self.s)?;
        st.serialize_field("t", &self.t)?;
        st.end()
    }
}

impl BinaryMatrix {
    pub fn margins(&self) -> MarginSpec {
        MarginSpec::of_matrix(self)
    }
}

/// Decide whether any 0-1 matrix realizes the given margins.
///
/// Structural violations (unequal totals, sums out of range) are errors;
/// a structurally valid but unrealizable pair returns Ok(false).
pub fn gale_ryser_feasible(s: &[u64], t: &[u64]) -> Result<bool> {
    let spec = MarginSpec::new(s.to_vec(), t.to_vec())?;
    Ok(spec.feasible())
}

/// Dominance test on sorted row sums against column-sum conjugates:
/// for every k, sum of the k largest s_i <= sum_j min(t_j, k).
pub(crate) fn gale_ryser_core(s: &[u64], t: &[u64]) -> bool {
    let total_s: u64 = s.iter().sum();
    let total_t: u64 = t.iter().sum();
    if total_s != total_t {
        return false;
    }
    let n = t.len() as u64;
    let m = s.len();
    if s.iter().any(|&x| x > n) || t.iter().any(|&x| x > m as u64) {
        return false;
    }
    let mut sorted = s.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    // ge[k] = #{j : t_j >= k}, so sum_j min(t_j, k) = ge[1] + ... + ge[k]
    let mut freq = vec![0u64; m + 1];
    for &tj in t {
        freq[tj as usize] += 1;
    }
    let mut ge = vec![0u64; m + 2];
    for k in (1..=m).rev() {
        ge[k] = ge[k + 1] + freq[k];
    }
    let mut lhs = 0u64;
    let mut rhs = 0u64;
    for (k, &sk) in sorted.iter().enumerate() {
        lhs += sk;
        rhs += ge[k + 1];
        if lhs > rhs {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn margins_of_identity() {
        let spec = BinaryMatrix::identity(2).margins();
        assert_eq!(spec.row_sums(), &[1, 1]);
        assert_eq!(spec.col_sums(), &[1, 1]);
        assert_eq!(spec.density(), Ratio::new(1, 2));
    }

    #[test]
    fn margins_of_all_ones() {
        let spec = BinaryMatrix::ones(3, 3).margins();
        assert_eq!(spec.row_sums(), &[3, 3, 3]);
        assert_eq!(spec.density(), Ratio::new(1, 1));
    }

    #[test]
    fn margins_of_rectangle() {
        let m = BinaryMatrix::parse("2 3\n110\n101").unwrap();
        let spec = m.margins();
        assert_eq!(spec.row_sums(), &[2, 2]);
        assert_eq!(spec.col_sums(), &[2, 1, 1]);
        assert_eq!(spec.density(), Ratio::new(2, 3));
    }

    #[test]
    fn gale_ryser_examples() {
        assert_eq!(gale_ryser_feasible(&[2, 0], &[1, 1]), Ok(true));
        assert_eq!(gale_ryser_feasible(&[2, 0], &[2, 0]), Ok(false));
        assert_eq!(
            gale_ryser_feasible(&[2, 2], &[2, 1]),
            Err(Error::TotalMismatch { rows: 4, cols: 3 })
        );
        assert!(matches!(
            gale_ryser_feasible(&[3, 0], &[1, 1, 1]),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn complement_margins() {
        let m = BinaryMatrix::parse("2 3\n110\n101").unwrap();
        let spec = m.margins();
        assert_eq!(m.complement().margins(), spec.complement());
    }

    #[test]
    fn json_round_trip() {
        let spec = MarginSpec::from_json(r#"{"s":[1,1],"t":[1,1]}"#).unwrap();
        assert_eq!(serde_json::to_string(&spec).unwrap(), r#"{"s":[1,1],"t":[1,1]}"#);
        assert!(MarginSpec::from_json(r#"{"s":[2,2],"t":[2,1]}"#).is_err());
    }
}
