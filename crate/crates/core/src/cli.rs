//! Command implementations behind the `colsum` binary.
//!
//! Every command returns the text to print on standard output, or a
//! [`CliError`] carrying the process exit code and a diagnostic. Exit codes:
//! 0 success, 1 internal error, 2 input or domain error, 3 state budget
//! exceeded, 4 arithmetic overflow, 5 infeasible realization.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::bounded::{BoundedSolver, DEFAULT_MAX_STATES};
use crate::document::{
    verify_solution, InstanceDocument, RealizationDocument, SolutionDocument, StatsDocument,
};
use crate::error::{domain, Error, Result};
use crate::matrix::BinaryMatrix;
use crate::oracle::Oracle;
use crate::realize::{realize, Method};
use crate::tuple::{conjugate, line_sum_violation};
use crate::uniform::{UniformSolver, DEFAULT_UNIFORM_MAX_STATES};
use crate::Violation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Algorithm {
    #[default]
    Auto,
    Uniform,
    Bounded,
    BruteMatrix,
    BruteTuple,
}

impl Algorithm {
    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Auto => "auto",
            Algorithm::Uniform => "uniform",
            Algorithm::Bounded => "bounded",
            Algorithm::BruteMatrix => "brute-matrix",
            Algorithm::BruteTuple => "brute-tuple",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "auto" => Algorithm::Auto,
            "uniform" => Algorithm::Uniform,
            "bounded" => Algorithm::Bounded,
            "brute-matrix" => Algorithm::BruteMatrix,
            "brute-tuple" => Algorithm::BruteTuple,
            other => return Err(domain(format!("unknown algorithm {other:?}"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Json,
    Pretty,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "pretty" => Ok(OutputFormat::Pretty),
            other => Err(domain(format!("unknown output format {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub algorithm: Algorithm,
    pub bound: Option<usize>,
    pub method: Method,
    pub max_states: Option<u64>,
    pub emit_matrix: bool,
    pub output: OutputFormat,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            algorithm: Algorithm::Auto,
            bound: None,
            method: Method::Flow,
            max_states: None,
            emit_matrix: true,
            output: OutputFormat::Json,
        }
    }
}

/// A failed command: exit code plus diagnostic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

pub fn exit_code(error: &Error) -> i32 {
    match error {
        Error::Domain(_)
        | Error::NotUniform { .. }
        | Error::BoundViolation { .. }
        | Error::TooLarge { .. } => 2,
        Error::StateBudgetExceeded { .. } => 3,
        Error::Overflow(_) => 4,
        Error::Infeasible(_) => 5,
        Error::Internal(_) => 1,
    }
}

impl From<Error> for CliError {
    fn from(error: Error) -> Self {
        CliError {
            code: exit_code(&error),
            message: error.to_string(),
        }
    }
}

/// Parses a tuple written as integers separated by commas and/or spaces.
pub fn parse_tuple(text: &str) -> Result<Vec<usize>> {
    text.split(|ch: char| ch == ',' || ch.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| domain(format!("{t:?} is not a nonnegative integer")))
        })
        .collect()
}

/// Solves an instance document and returns the verified result.
pub fn solve_document(doc: &InstanceDocument, options: &SolveOptions) -> Result<SolutionDocument> {
    let instance = doc.to_instance()?;
    let algorithm = match options.algorithm {
        Algorithm::Auto if instance.is_uniform() => Algorithm::Uniform,
        Algorithm::Auto => Algorithm::Bounded,
        explicit => explicit,
    };
    let started = Instant::now();
    let (objective, column_sums, matrix, states_created, edges_relaxed) = match algorithm {
        Algorithm::Uniform => {
            let solver = UniformSolver::default()
                .with_method(options.method)
                .with_max_states(options.max_states.unwrap_or(DEFAULT_UNIFORM_MAX_STATES));
            let s = solver.solve(&instance)?;
            let stats = s.stats;
            (s.objective, s.column_sums.into_inner(), s.matrix, stats.states_created, stats.edges_relaxed)
        }
        Algorithm::Bounded => {
            let mut solver = BoundedSolver::default()
                .with_method(options.method)
                .with_max_states(options.max_states.unwrap_or(DEFAULT_MAX_STATES));
            solver.bound = options.bound;
            let s = solver.solve(&instance)?;
            let stats = s.stats;
            (s.objective, s.column_sums.into_inner(), s.matrix, stats.states_created, stats.edges_relaxed)
        }
        Algorithm::BruteMatrix => {
            let o = Oracle::default().brute_matrices(&instance)?;
            let matrix = o
                .matrix
                .ok_or_else(|| Error::Internal("matrix oracle returned no matrix".into()))?;
            (o.objective, o.column_sums.into_inner(), matrix, o.examined, 0)
        }
        Algorithm::BruteTuple => {
            let o = Oracle::default().brute_tuples(&instance)?;
            let matrix = realize(instance.rows(), &o.column_sums, options.method)?;
            (o.objective, o.column_sums.into_inner(), matrix, o.examined, 0)
        }
        Algorithm::Auto => unreachable!("resolved above"),
    };
    let elapsed_ms = started.elapsed().as_millis() as u64;
    verify_solution(&instance, &matrix, &column_sums, objective)?;
    Ok(SolutionDocument {
        objective,
        column_sums,
        matrix: options.emit_matrix.then(|| matrix.to_row_strings()),
        algorithm: algorithm.as_str().to_string(),
        stats: StatsDocument {
            states_created,
            edges_relaxed,
            elapsed_ms,
        },
    })
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn render_solution(doc: &SolutionDocument, output: OutputFormat) -> String {
    match output {
        OutputFormat::Json => doc.to_json() + "\n",
        OutputFormat::Pretty => {
            let mut out = format!(
                "algorithm:   {}\nobjective:   {}\ncolumn sums: {}\n",
                doc.algorithm,
                doc.objective,
                join(&doc.column_sums)
            );
            if let Some(rows) = &doc.matrix {
                out.push_str("matrix:\n");
                for row in rows {
                    out.push_str("  ");
                    out.push_str(row);
                    out.push('\n');
                }
            }
            out.push_str(&format!(
                "states created: {}, edges relaxed: {}, elapsed: {} ms\n",
                doc.stats.states_created, doc.stats.edges_relaxed, doc.stats.elapsed_ms
            ));
            out
        }
    }
}

/// `solve`: reads an instance document and prints the solution.
pub fn cmd_solve(input: &str, options: &SolveOptions) -> std::result::Result<String, CliError> {
    let doc = InstanceDocument::parse(input)?;
    let solution = solve_document(&doc, options)?;
    Ok(render_solution(&solution, options.output))
}

/// `realize`: builds a matrix with row sums `rows` and column sums `columns`.
pub fn cmd_realize(
    rows: &[usize],
    columns: &[usize],
    method: Method,
    output: OutputFormat,
) -> std::result::Result<String, CliError> {
    let matrix = realize(rows, columns, method)?;
    if matrix.row_sums() != rows || &*matrix.column_sums() != columns {
        return Err(Error::Internal("realized matrix failed verification".into()).into());
    }
    Ok(render_realization(&matrix, rows, columns, method, output))
}

fn render_realization(
    matrix: &BinaryMatrix,
    rows: &[usize],
    columns: &[usize],
    method: Method,
    output: OutputFormat,
) -> String {
    match output {
        OutputFormat::Json => {
            let doc = RealizationDocument {
                method: method.as_str().to_string(),
                r: rows.to_vec(),
                column_sums: columns.to_vec(),
                matrix: matrix.to_row_strings(),
            };
            serde_json::to_string(&doc).expect("realization documents always serialize") + "\n"
        }
        OutputFormat::Pretty => matrix.to_string(),
    }
}

/// `conjugate`: prints the tuple conjugate to `rows` over `n` columns.
pub fn cmd_conjugate(rows: &[usize], n: usize) -> std::result::Result<String, CliError> {
    let d = conjugate(rows, n)?;
    Ok(join(d.values()) + "\n")
}

/// `check`: reports whether a matrix with line sums `(rows, columns)` exists.
pub fn cmd_check(
    rows: &[usize],
    columns: &[usize],
    n: Option<usize>,
) -> std::result::Result<String, CliError> {
    if let Some(n) = n {
        if n != columns.len() {
            return Err(CliError::from(domain(format!(
                "n = {n} but {} column sums were given",
                columns.len()
            ))));
        }
    }
    let verdict = match line_sum_violation(rows, columns)? {
        None => "feasible".to_string(),
        Some(Violation::Prefix {
            k,
            column_prefix,
            conjugate_prefix,
        }) => format!("infeasible at prefix {k} ({column_prefix} > {conjugate_prefix})"),
        Some(Violation::TotalMismatch {
            row_total,
            column_total,
        }) => format!(
            "infeasible: total mismatch (column sums {column_total}, row sums {row_total})"
        ),
    };
    Ok(verdict + "\n")
}
