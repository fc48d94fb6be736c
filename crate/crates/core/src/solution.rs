use crate::error::{Error, Result};
use crate::instance::{evaluate_objective, Instance};
use crate::matrix::BinaryMatrix;
use crate::realize::{realize, Method};
use crate::tuple::ColumnSumTuple;

/// Work counters reported by the shortest-path solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SolverStats {
    /// Digraph vertices materialized, including the two terminals.
    pub states_created: u64,
    /// Edge relaxations performed.
    pub edges_relaxed: u64,
}

/// An optimal column-sum tuple together with a matrix realizing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub objective: i64,
    pub column_sums: ColumnSumTuple,
    pub matrix: BinaryMatrix,
    pub stats: SolverStats,
}

/// Realizes `columns`, and checks that the path length found by a solver
/// matches the objective recomputed from scratch.
pub(crate) fn assemble(
    instance: &Instance,
    columns: Vec<usize>,
    path_length: i128,
    stats: SolverStats,
    method: Method,
) -> Result<Solution> {
    let objective = i64::try_from(path_length).map_err(|_| {
        Error::Overflow(format!("objective {path_length} does not fit in 64 bits"))
    })?;
    let column_sums = ColumnSumTuple::new(columns);
    let recomputed = evaluate_objective(instance, &column_sums)?;
    if recomputed != objective {
        return Err(Error::Internal(format!(
            "path length {objective} disagrees with objective {recomputed}"
        )));
    }
    let matrix = realize(instance.rows(), &column_sums, method)?;
    Ok(Solution {
        objective,
        column_sums,
        matrix,
        stats,
    })
}
