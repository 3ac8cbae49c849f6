use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{MellinError, Result};

/// Inclusive range of the leading parameter of a suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellRange {
    pub lo: usize,
    pub hi: usize,
}

impl CellRange {
    pub fn new(lo: usize, hi: usize) -> Self {
        CellRange { lo, hi }
    }

    pub fn iter(&self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

impl fmt::Display for CellRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

/// Parses `a..b` or `a..=b` (both inclusive) or a single `a`.
impl FromStr for CellRange {
    type Err = MellinError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || MellinError::Parse(format!("range `{s}` is not of the form a..b"));
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let r = match s.split_once("..") {
            Some((a, b)) => CellRange::new(num(a)?, num(b.trim_start_matches('='))?),
            None => {
                let a = num(s)?;
                CellRange::new(a, a)
            }
        };
        if r.lo > r.hi {
            return Err(MellinError::Parse(format!("range `{s}` is empty")));
        }
        Ok(r)
    }
}

/// One checked instance of an identity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Cell {
    pub index: usize,
    pub params: BTreeMap<String, Value>,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl Cell {
    pub fn new(params: &[(&str, Value)], expected: impl fmt::Display, actual: impl fmt::Display, pass: bool) -> Self {
        Cell {
            index: 0,
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass,
            detail: None,
        }
    }

    pub fn with_detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }

    pub fn params_text(&self) -> String {
        self.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(",")
    }
}

/// Outcome of one suite. Serialises deterministically: cells are ordered by
/// their position in the parameter grid and wall time is not part of the
/// JSON.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyReport {
    pub family: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub range: Option<CellRange>,
    /// Working precision in digits for the numeric suites; absent for exact
    /// ones.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub precision: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tolerance: Option<String>,
    pub exact: bool,
    pub passed: usize,
    pub failed: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_counterexample: Option<Cell>,
    pub cells: Vec<Cell>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn from_cells(family: &str, mut cells: Vec<Cell>) -> Self {
        for (i, c) in cells.iter_mut().enumerate() {
            c.index = i;
        }
        let passed = cells.iter().filter(|c| c.pass).count();
        let first_counterexample = cells.iter().find(|c| !c.pass).cloned();
        VerifyReport {
            family: family.to_string(),
            range: None,
            precision: None,
            tolerance: None,
            exact: true,
            passed,
            failed: cells.len() - passed,
            first_counterexample,
            cells,
            elapsed: Duration::ZERO,
        }
    }

    pub fn numeric(mut self, precision: u32, tolerance: impl Into<String>) -> Self {
        self.exact = false;
        self.precision = Some(precision);
        self.tolerance = Some(tolerance.into());
        self
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0 && !self.cells.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    /// One line: family, verdict and counts.
    pub fn summary(&self) -> String {
        let verdict = if self.all_passed() { "PASS" } else { "FAIL" };
        let mut s = format!("{verdict} {} ({}/{} cells)", self.family, self.passed, self.cells.len());
        if let Some(c) = &self.first_counterexample {
            s.push_str(&format!(
                "; first counterexample at {}: expected {}, got {}",
                c.params_text(),
                c.expected,
                c.actual
            ));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn range_parsing() {
        assert_eq!("1..25".parse::<CellRange>().unwrap(), CellRange::new(1, 25));
        assert_eq!("3..=4".parse::<CellRange>().unwrap(), CellRange::new(3, 4));
        assert_eq!("7".parse::<CellRange>().unwrap(), CellRange::new(7, 7));
        assert!("5..2".parse::<CellRange>().is_err());
        assert!("x..2".parse::<CellRange>().is_err());
    }

    #[test]
    fn counterexample_and_json_round_trip() {
        let cells = vec![
            Cell::new(&[("n", json!(1))], 0, 0, true),
            Cell::new(&[("n", json!(2))], 0, 5, false),
        ];
        let r = VerifyReport::from_cells("demo", cells);
        assert_eq!(r.failed, 1);
        assert_eq!(r.first_counterexample.as_ref().unwrap().index, 1);
        let back: VerifyReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back.cells, r.cells);
        assert!(!r.to_json().contains("elapsed"));
    }
}
