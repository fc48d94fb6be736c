//! Problem input: dimensions, prescribed row sums and one value table per column.

use crate::error::{domain, Error, Result};
use crate::tuple::{conjugate, ColumnSumTuple, ConjugateTuple};

/// An integer-valued function on `{0, ..., m}` stored extensionally.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ValueTable(Vec<i64>);

impl ValueTable {
    pub fn new(values: Vec<i64>) -> Self {
        ValueTable(values)
    }

    /// Table of zeros on `{0, ..., m}`.
    pub fn zeros(m: usize) -> Self {
        ValueTable(vec![0; m + 1])
    }

    /// Tabulates `f(x) = a_0 + a_1 x + ... + a_k x^k` on `{0, ..., m}`.
    ///
    /// Evaluation is exact; a value that does not fit in `i64` is an
    /// [`Error::Overflow`].
    pub fn from_poly(coefficients: &[i64], m: usize) -> Result<Self> {
        let mut values = Vec::with_capacity(m + 1);
        for x in 0..=m {
            let x = x as i128;
            let mut acc: i128 = 0;
            for &a in coefficients.iter().rev() {
                acc = acc
                    .checked_mul(x)
                    .and_then(|v| v.checked_add(a as i128))
                    .ok_or_else(|| poly_overflow(x))?;
            }
            values.push(i64::try_from(acc).map_err(|_| poly_overflow(x))?);
        }
        Ok(ValueTable(values))
    }

    /// Tabulates an arbitrary closure on `{0, ..., m}`.
    pub fn from_fn(m: usize, f: impl FnMut(usize) -> i64) -> Self {
        ValueTable((0..=m).map(f).collect())
    }

    #[inline]
    pub fn get(&self, x: usize) -> i64 {
        self.0[x]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }
}

fn poly_overflow(x: i128) -> Error {
    Error::Overflow(format!("polynomial value at x = {x} does not fit in 64 bits"))
}

/// A column sum optimization instance.
///
/// Holds `m` rows with prescribed sums `r_i <= n` and `n` value tables
/// `f_j` on `{0, ..., m}`. The goal is a (0,1)-matrix with these row sums
/// minimizing `sum_j f_j(c_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    m: usize,
    n: usize,
    rows: Vec<usize>,
    functions: Vec<ValueTable>,
}

impl Instance {
    pub fn new(m: usize, n: usize, rows: Vec<usize>, functions: Vec<ValueTable>) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(domain(format!(
                "dimensions must be positive, got m = {m}, n = {n}"
            )));
        }
        if rows.len() != m {
            return Err(domain(format!(
                "expected {m} row sums, got {}",
                rows.len()
            )));
        }
        if let Some((i, &ri)) = rows.iter().enumerate().find(|(_, &ri)| ri > n) {
            return Err(domain(format!("row sum r_{} = {ri} exceeds n = {n}", i + 1)));
        }
        if functions.len() != n {
            return Err(domain(format!(
                "expected {n} column functions, got {}",
                functions.len()
            )));
        }
        if let Some((j, t)) = functions.iter().enumerate().find(|(_, t)| t.len() != m + 1) {
            return Err(domain(format!(
                "value table of column {} has {} entries, expected {}",
                j + 1,
                t.len(),
                m + 1
            )));
        }
        Ok(Instance {
            m,
            n,
            rows,
            functions,
        })
    }

    /// Instance where every column uses the same table.
    pub fn shared(m: usize, n: usize, rows: Vec<usize>, table: ValueTable) -> Result<Self> {
        Instance::new(m, n, rows, vec![table; n])
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn functions(&self) -> &[ValueTable] {
        &self.functions
    }

    pub fn function(&self, j: usize) -> &ValueTable {
        &self.functions[j]
    }

    pub fn max_row_sum(&self) -> usize {
        self.rows.iter().copied().max().unwrap_or(0)
    }

    pub fn row_total(&self) -> u64 {
        self.rows.iter().map(|&r| r as u64).sum()
    }

    /// Index of the first column whose table differs from column 1, if any.
    pub fn first_distinct_column(&self) -> Option<usize> {
        let first = &self.functions[0];
        self.functions.iter().position(|t| t != first)
    }

    pub fn is_uniform(&self) -> bool {
        self.first_distinct_column().is_none()
    }

    pub fn conjugate(&self) -> ConjugateTuple {
        conjugate(&self.rows, self.n).expect("row sums validated at construction")
    }
}

/// `sum_j f_j(c_j)`, rejecting column sums outside `{0, ..., m}`.
///
/// The sum is accumulated exactly and must fit in `i64`.
pub fn evaluate_objective(instance: &Instance, columns: &ColumnSumTuple) -> Result<i64> {
    if columns.len() != instance.n() {
        return Err(domain(format!(
            "expected {} column sums, got {}",
            instance.n(),
            columns.len()
        )));
    }
    let mut total: i128 = 0;
    for (j, &cj) in columns.iter().enumerate() {
        if cj > instance.m() {
            return Err(domain(format!(
                "column sum c_{} = {cj} exceeds m = {}",
                j + 1,
                instance.m()
            )));
        }
        total += instance.function(j).get(cj) as i128;
    }
    i64::try_from(total)
        .map_err(|_| Error::Overflow(format!("objective {total} does not fit in 64 bits")))
}
