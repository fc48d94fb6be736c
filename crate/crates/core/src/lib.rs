//! # colsum
//!
//! Exact solvers for column sum optimization: given row sums
//! `r_1, ..., r_m <= n` and functions `f_j : {0, ..., m} -> Z`, find a
//! (0,1)-matrix with those row sums minimizing `sum_j f_j(c_j)` over its
//! column sums `c_j`.
//!
//! By Ryser's theorem a column-sum tuple is attainable exactly when, sorted
//! in nonincreasing order, it is majorized by the conjugate of the row
//! sums. The solvers search attainable tuples as shortest paths in layered
//! digraphs and then build a matrix for the winner:
//!
//! - [`uniform`]: all `f_j` equal. Polynomial for any row sums.
//! - [`bounded`]: arbitrary `f_j`, all row sums at most a fixed `b`.
//! - [`oracle`]: exhaustive search for small instances, used as ground truth.
//! - [`realize`]: matrix construction by maximum flow or the greedy
//!   Gale-Ryser procedure.
//!
//! ```
//! use colsum::{solve, Instance, ValueTable};
//!
//! // f(x) = (x - 1)^2 (x - 3)^2 on {0, ..., 4}
//! let f = ValueTable::from_poly(&[9, -24, 22, -8, 1], 4).unwrap();
//! let instance = Instance::shared(4, 4, vec![3, 3, 2, 2], f).unwrap();
//! let solution = solve(&instance).unwrap();
//! assert_eq!(solution.objective, 0);
//! assert_eq!(&*solution.column_sums, &[3, 3, 3, 1]);
//! assert_eq!(solution.matrix.row_sums(), vec![3, 3, 2, 2]);
//! ```
//!
//! The `examples/` directory has one runnable program per capability.

pub mod bounded;
pub mod cli;
pub mod document;
pub mod error;
pub mod instance;
pub mod matrix;
pub mod oracle;
pub mod realize;
pub mod solution;
pub mod tuple;
pub mod uniform;

pub use bounded::{solve_bounded, BoundedSolver};
pub use error::{Error, Result, Violation};
pub use instance::{evaluate_objective, Instance, ValueTable};
pub use matrix::{line_sums, BinaryMatrix};
pub use oracle::{brute_matrices, brute_tuples, Oracle, OracleResult};
pub use realize::{realize, realize_flow, realize_greedy, FlowNetwork, Method};
pub use solution::{Solution, SolverStats};
pub use tuple::{
    conjugate, is_majorized, line_sum_violation, majorization_violation, sort_descending,
    ColumnSumTuple, ConjugateTuple,
};
pub use uniform::{solve_uniform, UniformSolver};

/// Solves with the uniform solver when all tables coincide, otherwise with
/// the bounded solver at `b = max r_i`.
pub fn solve(instance: &Instance) -> Result<Solution> {
    if instance.is_uniform() {
        solve_uniform(instance)
    } else {
        BoundedSolver::default().solve(instance)
    }
}
