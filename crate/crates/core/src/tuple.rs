//! Conjugate tuples, majorization and the Ryser feasibility test.

use std::ops::Deref;

use crate::error::{domain, Result, Violation};

/// The tuple `d` conjugate to a row-sum tuple `r`: `d_j = |{i : r_i >= j}|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugateTuple {
    d: Vec<usize>,
    // prefix[k] = d_1 + ... + d_k, prefix[0] = 0
    prefix: Vec<u64>,
}

impl ConjugateTuple {
    pub fn values(&self) -> &[usize] {
        &self.d
    }

    pub fn len(&self) -> usize {
        self.d.len()
    }

    pub fn is_empty(&self) -> bool {
        self.d.is_empty()
    }

    /// `d_1 + ... + d_k`; `prefix(0) == 0`.
    #[inline]
    pub fn prefix(&self, k: usize) -> u64 {
        self.prefix[k]
    }

    pub fn total(&self) -> u64 {
        *self.prefix.last().expect("prefix always holds the empty sum")
    }

    /// Largest entry `d_1`, or 0 when `n == 0`.
    pub fn first(&self) -> usize {
        self.d.first().copied().unwrap_or(0)
    }
}

/// Computes the conjugate of `rows` with respect to `n` columns.
pub fn conjugate(rows: &[usize], n: usize) -> Result<ConjugateTuple> {
    // counts[v] = number of rows with sum exactly v
    let mut counts = vec![0usize; n + 1];
    for (i, &ri) in rows.iter().enumerate() {
        if ri > n {
            return Err(domain(format!("row sum r_{} = {ri} exceeds n = {n}", i + 1)));
        }
        counts[ri] += 1;
    }
    let mut d = vec![0usize; n];
    let mut at_least = 0usize;
    for j in (1..=n).rev() {
        at_least += counts[j];
        d[j - 1] = at_least;
    }
    let mut prefix = Vec::with_capacity(n + 1);
    prefix.push(0u64);
    let mut acc = 0u64;
    for &dj in &d {
        acc += dj as u64;
        prefix.push(acc);
    }
    Ok(ConjugateTuple { d, prefix })
}

/// Column sums of a matrix, in column order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ColumnSumTuple(Vec<usize>);

impl ColumnSumTuple {
    pub fn new(values: Vec<usize>) -> Self {
        ColumnSumTuple(values)
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&c| c as u64).sum()
    }

    pub fn is_nonincreasing(&self) -> bool {
        is_nonincreasing(&self.0)
    }

    pub fn sorted_descending(&self) -> ColumnSumTuple {
        ColumnSumTuple(sort_descending(&self.0))
    }
}

impl Deref for ColumnSumTuple {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl From<Vec<usize>> for ColumnSumTuple {
    fn from(values: Vec<usize>) -> Self {
        ColumnSumTuple(values)
    }
}

/// Stable descending sort; equal entries keep their relative order.
pub fn sort_descending(values: &[usize]) -> Vec<usize> {
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| b.cmp(a));
    sorted
}

pub fn is_nonincreasing(values: &[usize]) -> bool {
    values.windows(2).all(|w| w[0] >= w[1])
}

/// First reason why the nonincreasing tuple `c` is not majorized by `d`.
///
/// The totals are compared first, then prefixes `k = 1..n` in order.
pub fn majorization_violation(c: &[usize], d: &ConjugateTuple) -> Result<Option<Violation>> {
    if c.len() != d.len() {
        return Err(domain(format!(
            "tuple lengths differ: {} column sums vs {} conjugate entries",
            c.len(),
            d.len()
        )));
    }
    if !is_nonincreasing(c) {
        return Err(domain("column-sum tuple is not nonincreasing"));
    }
    let column_total: u64 = c.iter().map(|&x| x as u64).sum();
    if column_total != d.total() {
        return Ok(Some(Violation::TotalMismatch {
            row_total: d.total(),
            column_total,
        }));
    }
    let mut acc = 0u64;
    for (k, &cj) in c.iter().enumerate() {
        acc += cj as u64;
        if acc > d.prefix(k + 1) {
            return Ok(Some(Violation::Prefix {
                k: k + 1,
                column_prefix: acc,
                conjugate_prefix: d.prefix(k + 1),
            }));
        }
    }
    Ok(None)
}

/// Whether the nonincreasing tuple `c` is majorized by `d`.
pub fn is_majorized(c: &[usize], d: &ConjugateTuple) -> Result<bool> {
    majorization_violation(c, d).map(|v| v.is_none())
}

/// Ryser's criterion: why no (0,1)-matrix has row sums `rows` and column
/// sums `columns`, or `None` when one exists. The number of columns is
/// `columns.len()`.
pub fn line_sum_violation(rows: &[usize], columns: &[usize]) -> Result<Option<Violation>> {
    let d = conjugate(rows, columns.len())?;
    majorization_violation(&sort_descending(columns), &d)
}
