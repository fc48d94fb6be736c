//! Construction of a (0,1)-matrix with prescribed row and column sums.
//!
//! Two independent constructions are provided: a maximum flow on the
//! bipartite row/column network ([`realize_flow`]) and the greedy Gale-Ryser
//! procedure ([`realize_greedy`]). Both return a matrix whose line sums are
//! exactly `(rows, columns)`, or [`Error::Infeasible`] carrying the
//! majorization witness.

mod flow;
mod greedy;

use std::fmt;
use std::str::FromStr;

pub use flow::{Arc, FlowNetwork};

use crate::error::{domain, Error, Result};
use crate::matrix::{line_sums, BinaryMatrix};
use crate::tuple::line_sum_violation;

/// Which construction to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Flow,
    Greedy,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Flow => "flow",
            Method::Greedy => "greedy",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "flow" => Ok(Method::Flow),
            "greedy" => Ok(Method::Greedy),
            other => Err(domain(format!("unknown realization method {other:?}"))),
        }
    }
}

pub fn realize(rows: &[usize], columns: &[usize], method: Method) -> Result<BinaryMatrix> {
    match method {
        Method::Flow => realize_flow(rows, columns),
        Method::Greedy => realize_greedy(rows, columns),
    }
}

/// Realizes `(rows, columns)` from a maximum flow.
pub fn realize_flow(rows: &[usize], columns: &[usize]) -> Result<BinaryMatrix> {
    check_rows(rows, columns.len())?;
    let row_total: u64 = rows.iter().map(|&r| r as u64).sum();
    let column_total: u64 = columns.iter().map(|&c| c as u64).sum();
    let mut net = FlowNetwork::new(rows, columns);
    if row_total == column_total && net.max_flow() == row_total {
        return finish(net.matrix(), rows, columns);
    }
    Err(infeasible(rows, columns, Method::Flow))
}

/// Realizes `(rows, columns)` with the greedy Gale-Ryser procedure.
pub fn realize_greedy(rows: &[usize], columns: &[usize]) -> Result<BinaryMatrix> {
    check_rows(rows, columns.len())?;
    match greedy::greedy_matrix(rows, columns) {
        Some(a) => finish(a, rows, columns),
        None => Err(infeasible(rows, columns, Method::Greedy)),
    }
}

fn check_rows(rows: &[usize], n: usize) -> Result<()> {
    match rows.iter().position(|&r| r > n) {
        Some(i) => Err(domain(format!(
            "row sum r_{} = {} exceeds n = {n}",
            i + 1,
            rows[i]
        ))),
        None => Ok(()),
    }
}

fn finish(a: BinaryMatrix, rows: &[usize], columns: &[usize]) -> Result<BinaryMatrix> {
    let (r, c) = line_sums(&a);
    if r != rows || &*c != columns {
        return Err(Error::Internal(
            "realized matrix has wrong line sums".to_string(),
        ));
    }
    Ok(a)
}

fn infeasible(rows: &[usize], columns: &[usize], method: Method) -> Error {
    match line_sum_violation(rows, columns) {
        Ok(Some(v)) => Error::Infeasible(v),
        Ok(None) => Error::Internal(format!(
            "{method} realization failed on line sums satisfying the majorization test"
        )),
        Err(e) => e,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Violation;

    fn both(rows: &[usize], columns: &[usize]) -> [Result<BinaryMatrix>; 2] {
        [realize_flow(rows, columns), realize_greedy(rows, columns)]
    }

    #[test]
    fn golden_line_sums() {
        for a in both(&[3, 3, 2, 2], &[3, 3, 3, 1]) {
            let (r, c) = line_sums(&a.unwrap());
            assert_eq!(r, vec![3, 3, 2, 2]);
            assert_eq!(&*c, &[3, 3, 3, 1]);
        }
    }

    #[test]
    fn zero_and_saturated() {
        for a in both(&[0, 0, 0], &[0, 0]) {
            assert_eq!(a.unwrap(), BinaryMatrix::zeros(3, 2));
        }
        for a in both(&[2, 2], &[2, 2]) {
            assert_eq!(a.unwrap(), BinaryMatrix::ones(2, 2));
        }
        for a in both(&[3, 3], &[2, 2, 2]) {
            assert_eq!(a.unwrap(), BinaryMatrix::ones(2, 3));
        }
    }

    #[test]
    fn permutation_like() {
        for a in both(&[1, 1], &[1, 1]) {
            let a = a.unwrap();
            assert!(a == BinaryMatrix::from_row_strings(&["10", "01"]).unwrap()
                || a == BinaryMatrix::from_row_strings(&["01", "10"]).unwrap());
        }
    }

    #[test]
    fn unique_realizer() {
        for a in both(&[1, 1], &[2, 0]) {
            assert_eq!(a.unwrap().to_row_strings(), vec!["10", "10"]);
        }
    }

    #[test]
    fn column_exceeding_rows_is_infeasible() {
        // c_1 = 3 > m = 2
        for a in both(&[1, 1], &[3, 0]) {
            assert!(matches!(a, Err(Error::Infeasible(_))));
        }
        for a in both(&[2, 1], &[3, 0]) {
            assert_eq!(
                a.unwrap_err(),
                Error::Infeasible(Violation::Prefix {
                    k: 1,
                    column_prefix: 3,
                    conjugate_prefix: 2
                })
            );
        }
    }

    #[test]
    fn total_mismatch_witness() {
        for a in both(&[1, 1], &[2, 1]) {
            assert_eq!(
                a.unwrap_err(),
                Error::Infeasible(Violation::TotalMismatch {
                    row_total: 2,
                    column_total: 3
                })
            );
        }
    }

    #[test]
    fn long_row_is_domain_error() {
        for a in both(&[3], &[1, 1]) {
            assert!(matches!(a, Err(Error::Domain(_))));
        }
    }

    #[test]
    fn deterministic() {
        let r = [4, 3, 3, 2, 1, 1];
        let c = [3, 3, 2, 2, 2, 1, 1];
        assert_eq!(realize_flow(&r, &c).unwrap(), realize_flow(&r, &c).unwrap());
        assert_eq!(
            realize_greedy(&r, &c).unwrap(),
            realize_greedy(&r, &c).unwrap()
        );
    }

    #[test]
    fn method_parsing() {
        assert_eq!("flow".parse::<Method>().unwrap(), Method::Flow);
        assert_eq!("greedy".parse::<Method>().unwrap(), Method::Greedy);
        assert!("lp".parse::<Method>().is_err());
    }
}
