//! JSON documents read and written by the command-line tool.
//!
//! An instance document looks like
//!
//! ```json
//! {"m": 4, "n": 4, "r": [3, 3, 2, 2],
//!  "functions": {"shared": {"poly": [9, -24, 22, -8, 1]}}}
//! ```
//!
//! where `functions` is either `{"shared": spec}` or
//! `{"per_column": [spec, ...]}` and a spec is `{"table": [f(0), ..., f(m)]}`
//! or `{"poly": [a_0, ..., a_k]}` for `f(x) = sum a_i x^i`. Polynomials are
//! tabulated on `{0, ..., m}` at parse time.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::instance::{evaluate_objective, Instance, ValueTable};
use crate::matrix::BinaryMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FunctionSpec {
    Table(Vec<i64>),
    Poly(Vec<i64>),
}

impl FunctionSpec {
    pub fn to_table(&self, m: usize) -> Result<ValueTable> {
        match self {
            FunctionSpec::Table(values) => Ok(ValueTable::new(values.clone())),
            FunctionSpec::Poly(coefficients) => ValueTable::from_poly(coefficients, m),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Functions {
    Shared(FunctionSpec),
    PerColumn(Vec<FunctionSpec>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub m: usize,
    pub n: usize,
    pub r: Vec<usize>,
    pub functions: Functions,
}

impl InstanceDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| domain(format!("invalid instance document: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("instance documents always serialize")
    }

    /// Document listing every table explicitly, shared when all coincide.
    pub fn from_instance(instance: &Instance) -> Self {
        let spec = |t: &ValueTable| FunctionSpec::Table(t.values().to_vec());
        let functions = if instance.is_uniform() {
            Functions::Shared(spec(instance.function(0)))
        } else {
            Functions::PerColumn(instance.functions().iter().map(spec).collect())
        };
        InstanceDocument {
            m: instance.m(),
            n: instance.n(),
            r: instance.rows().to_vec(),
            functions,
        }
    }

    pub fn to_instance(&self) -> Result<Instance> {
        let tables = match &self.functions {
            Functions::Shared(spec) => vec![spec.to_table(self.m)?; self.n],
            Functions::PerColumn(specs) => specs
                .iter()
                .map(|s| s.to_table(self.m))
                .collect::<Result<Vec<_>>>()?,
        };
        Instance::new(self.m, self.n, self.r.clone(), tables)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct StatsDocument {
    pub states_created: u64,
    pub edges_relaxed: u64,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionDocument {
    pub objective: i64,
    pub column_sums: Vec<usize>,
    /// Row-major rows over `'0'`/`'1'`; omitted when not requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<String>>,
    pub algorithm: String,
    pub stats: StatsDocument,
}

impl SolutionDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| domain(format!("invalid solution document: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("solution documents always serialize")
    }
}

/// Output of the `realize` subcommand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RealizationDocument {
    pub method: String,
    pub r: Vec<usize>,
    pub column_sums: Vec<usize>,
    pub matrix: Vec<String>,
}

/// Checks that `matrix` has row sums `r` and column sums `column_sums`, and
/// that the objective recomputed from its column sums equals `objective`.
pub fn verify_solution(
    instance: &Instance,
    matrix: &BinaryMatrix,
    column_sums: &[usize],
    objective: i64,
) -> Result<()> {
    if matrix.m() != instance.m() || matrix.n() != instance.n() {
        return Err(Error::Internal(format!(
            "matrix is {}x{}, instance is {}x{}",
            matrix.m(),
            matrix.n(),
            instance.m(),
            instance.n()
        )));
    }
    if matrix.row_sums() != instance.rows() {
        return Err(Error::Internal("matrix row sums differ from r".into()));
    }
    let actual = matrix.column_sums();
    if &*actual != column_sums {
        return Err(Error::Internal(
            "matrix column sums differ from the reported column sums".into(),
        ));
    }
    let recomputed = evaluate_objective(instance, &actual)?;
    if recomputed != objective {
        return Err(Error::Internal(format!(
            "reported objective {objective} but the matrix scores {recomputed}"
        )));
    }
    Ok(())
}
