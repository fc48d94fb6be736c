use std::fmt;

use crate::error::{domain, Result};
use crate::tuple::ColumnSumTuple;

/// Dense `m x n` matrix with entries in {0,1}, stored row-major one byte per entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    m: usize,
    n: usize,
    entries: Vec<u8>,
}

impl BinaryMatrix {
    pub fn zeros(m: usize, n: usize) -> Self {
        BinaryMatrix {
            m,
            n,
            entries: vec![0; m * n],
        }
    }

    pub fn ones(m: usize, n: usize) -> Self {
        BinaryMatrix {
            m,
            n,
            entries: vec![1; m * n],
        }
    }

    /// Builds a matrix from rows of equal length holding only 0 and 1.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(m * n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(domain(format!(
                    "row {} has length {}, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x > 1) {
                return Err(domain(format!("row {} holds entry {bad}", i + 1)));
            }
            entries.extend_from_slice(row);
        }
        Ok(BinaryMatrix { m, n, entries })
    }

    /// Parses rows written as strings over `'0'` and `'1'`.
    pub fn from_row_strings<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let parsed = rows
            .iter()
            .enumerate()
            .map(|(i, s)| {
                s.as_ref()
                    .chars()
                    .map(|ch| match ch {
                        '0' => Ok(0u8),
                        '1' => Ok(1u8),
                        other => Err(domain(format!(
                            "row {} holds character {other:?}",
                            i + 1
                        ))),
                    })
                    .collect::<Result<Vec<u8>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        BinaryMatrix::from_rows(&parsed)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.entries[i * self.n + j] = value as u8;
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn row_sums(&self) -> Vec<usize> {
        (0..self.m)
            .map(|i| self.row(i).iter().map(|&x| x as usize).sum())
            .collect()
    }

    pub fn column_sums(&self) -> ColumnSumTuple {
        let mut sums = vec![0usize; self.n];
        for i in 0..self.m {
            for (s, &x) in sums.iter_mut().zip(self.row(i)) {
                *s += x as usize;
            }
        }
        ColumnSumTuple::new(sums)
    }

    pub fn to_row_strings(&self) -> Vec<String> {
        (0..self.m)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|&x| if x == 1 { '1' } else { '0' })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.m {
            let line: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Row sums and column sums of `a`.
pub fn line_sums(a: &BinaryMatrix) -> (Vec<usize>, ColumnSumTuple) {
    (a.row_sums(), a.column_sums())
}
