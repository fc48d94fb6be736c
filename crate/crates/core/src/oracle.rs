//! Exhaustive reference solvers for small instances.
//!
//! [`brute_matrices`] walks every (0,1)-matrix with the prescribed row sums;
//! [`brute_tuples`] walks every column-sum tuple with the right total and
//! keeps those passing the majorization test. Both are exponential and
//! guarded by caps.

use crate::error::{Error, Result};
use crate::instance::Instance;
use crate::matrix::BinaryMatrix;
use crate::tuple::{is_majorized, sort_descending, ColumnSumTuple, ConjugateTuple};

pub const DEFAULT_MAX_CELLS: usize = 20;
pub const DEFAULT_MAX_TUPLES: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub objective: i64,
    pub column_sums: ColumnSumTuple,
    /// Optimal matrix; only the matrix enumeration produces one.
    pub matrix: Option<BinaryMatrix>,
    /// Matrices (or feasible tuples) evaluated.
    pub examined: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    /// Largest `m * n` accepted by the matrix enumeration.
    pub max_cells: usize,
    /// Largest `(m + 1)^n` accepted by the tuple enumeration.
    pub max_tuples: u128,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            max_cells: DEFAULT_MAX_CELLS,
            max_tuples: DEFAULT_MAX_TUPLES,
        }
    }
}

pub fn brute_matrices(instance: &Instance) -> Result<OracleResult> {
    Oracle::default().brute_matrices(instance)
}

pub fn brute_tuples(instance: &Instance) -> Result<OracleResult> {
    Oracle::default().brute_tuples(instance)
}

fn to_i64(total: i128) -> Result<i64> {
    i64::try_from(total)
        .map_err(|_| Error::Overflow(format!("objective {total} does not fit in 64 bits")))
}

impl Oracle {
    /// Minimum over all matrices with the prescribed row sums. Among optimal
    /// matrices the first in row-major lexicographic order is returned.
    pub fn brute_matrices(&self, instance: &Instance) -> Result<OracleResult> {
        let (m, n) = (instance.m(), instance.n());
        let cells = m.saturating_mul(n);
        if cells > self.max_cells || n >= 32 {
            return Err(Error::TooLarge {
                what: "matrix enumeration (m * n)",
                size: cells as u128,
                cap: self.max_cells as u128,
            });
        }
        // row patterns in increasing lexicographic order; column 0 is the
        // most significant bit
        let patterns: Vec<Vec<u32>> = instance
            .rows()
            .iter()
            .map(|&ri| {
                (0u32..1 << n)
                    .filter(|p| p.count_ones() as usize == ri)
                    .collect()
            })
            .collect();

        let mut search = MatrixSearch {
            instance,
            patterns: &patterns,
            chosen: vec![0; m],
            columns: vec![0; n],
            best: None,
            examined: 0,
        };
        search.descend(0);
        let (objective, chosen) = search
            .best
            .ok_or_else(|| Error::Internal("no matrix has the prescribed row sums".into()))?;
        let mut matrix = BinaryMatrix::zeros(m, n);
        for (i, p) in chosen.iter().enumerate() {
            for j in 0..n {
                matrix.set(i, j, p >> (n - 1 - j) & 1 == 1);
            }
        }
        Ok(OracleResult {
            objective: to_i64(objective)?,
            column_sums: matrix.column_sums(),
            matrix: Some(matrix),
            examined: search.examined,
        })
    }

    /// Minimum over column-sum tuples `c` in `{0..m}^n` with the right total
    /// whose sorted form is majorized by the conjugate of the row sums. Ties
    /// go to the lexicographically smallest tuple.
    pub fn brute_tuples(&self, instance: &Instance) -> Result<OracleResult> {
        let (m, n) = (instance.m(), instance.n());
        let size = u32::try_from(n)
            .ok()
            .and_then(|e| (m as u128 + 1).checked_pow(e))
            .unwrap_or(u128::MAX);
        if size > self.max_tuples {
            return Err(Error::TooLarge {
                what: "tuple enumeration ((m + 1)^n)",
                size,
                cap: self.max_tuples,
            });
        }
        let d = instance.conjugate();
        let mut search = TupleSearch {
            instance,
            d: &d,
            current: vec![0; n],
            best: None,
            examined: 0,
        };
        search.descend(0, d.total());
        let (objective, columns) = search
            .best
            .ok_or_else(|| Error::Internal("no column-sum tuple passed the test".into()))?;
        Ok(OracleResult {
            objective: to_i64(objective)?,
            column_sums: ColumnSumTuple::new(columns),
            matrix: None,
            examined: search.examined,
        })
    }
}

struct MatrixSearch<'a> {
    instance: &'a Instance,
    patterns: &'a [Vec<u32>],
    chosen: Vec<u32>,
    columns: Vec<usize>,
    best: Option<(i128, Vec<u32>)>,
    examined: u64,
}

impl MatrixSearch<'_> {
    fn descend(&mut self, row: usize) {
        let n = self.columns.len();
        if row == self.patterns.len() {
            self.examined += 1;
            let value: i128 = self
                .columns
                .iter()
                .enumerate()
                .map(|(j, &c)| self.instance.function(j).get(c) as i128)
                .sum();
            if self.best.as_ref().map_or(true, |(b, _)| value < *b) {
                self.best = Some((value, self.chosen.clone()));
            }
            return;
        }
        for &p in &self.patterns[row] {
            for j in 0..n {
                self.columns[j] += (p >> (n - 1 - j) & 1) as usize;
            }
            self.chosen[row] = p;
            self.descend(row + 1);
            for j in 0..n {
                self.columns[j] -= (p >> (n - 1 - j) & 1) as usize;
            }
        }
    }
}

struct TupleSearch<'a> {
    instance: &'a Instance,
    d: &'a ConjugateTuple,
    current: Vec<usize>,
    best: Option<(i128, Vec<usize>)>,
    examined: u64,
}

impl TupleSearch<'_> {
    fn descend(&mut self, j: usize, remaining: u64) {
        let (m, n) = (self.instance.m(), self.instance.n());
        if j == n {
            if remaining != 0 {
                return;
            }
            let sorted = sort_descending(&self.current);
            if !is_majorized(&sorted, self.d).expect("sorted tuple of matching length") {
                return;
            }
            self.examined += 1;
            let value: i128 = self
                .current
                .iter()
                .enumerate()
                .map(|(j, &c)| self.instance.function(j).get(c) as i128)
                .sum();
            if self.best.as_ref().map_or(true, |(b, _)| value < *b) {
                self.best = Some((value, self.current.clone()));
            }
            return;
        }
        let slots_after = (n - j - 1) as u64;
        for c in 0..=m {
            let c64 = c as u64;
            if c64 > remaining {
                break;
            }
            if remaining - c64 > slots_after * m as u64 {
                continue;
            }
            self.current[j] = c;
            self.descend(j + 1, remaining - c64);
        }
    }
}
