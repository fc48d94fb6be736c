use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgAction, Parser, Subcommand};

use colsum::cli::{
    cmd_check, cmd_conjugate, cmd_realize, cmd_solve, parse_tuple, Algorithm, CliError,
    OutputFormat, SolveOptions,
};
use colsum::Method;

#[derive(Parser)]
#[command(name = "colsum", version, about = "Column sum optimization over (0,1)-matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance document (JSON).
    Solve {
        /// Instance file, or `-` for standard input.
        #[arg(long, default_value = "-")]
        input: PathBuf,
        /// auto | uniform | bounded | brute-matrix | brute-tuple
        #[arg(long, default_value = "auto")]
        algorithm: Algorithm,
        /// Row-sum bound for the bounded solver (default: largest row sum).
        #[arg(long)]
        bound: Option<usize>,
        /// Matrix construction: flow | greedy
        #[arg(long, default_value = "flow")]
        method: Method,
        /// Cap on digraph vertices.
        #[arg(long)]
        max_states: Option<u64>,
        #[arg(long, default_value_t = true, action = ArgAction::Set)]
        emit_matrix: bool,
        /// json | pretty
        #[arg(long, default_value = "json")]
        output: OutputFormat,
    },
    /// Build a matrix with the given row and column sums.
    Realize {
        #[arg(long, value_parser = tuple)]
        rows: Tuple,
        #[arg(long, value_parser = tuple)]
        columns: Tuple,
        #[arg(long, default_value = "flow")]
        method: Method,
        #[arg(long, default_value = "json")]
        output: OutputFormat,
    },
    /// Print the tuple conjugate to the row sums.
    Conjugate {
        #[arg(long, value_parser = tuple)]
        rows: Tuple,
        #[arg(short, long)]
        n: usize,
    },
    /// Decide whether the row and column sums are attainable.
    Check {
        #[arg(long, value_parser = tuple)]
        rows: Tuple,
        #[arg(long, value_parser = tuple)]
        columns: Tuple,
        #[arg(short, long)]
        n: Option<usize>,
    },
}

#[derive(Clone)]
struct Tuple(Vec<usize>);

fn tuple(s: &str) -> Result<Tuple, String> {
    parse_tuple(s).map(Tuple).map_err(|e| e.to_string())
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    let io_error = |e: std::io::Error| CliError {
        code: 2,
        message: format!("cannot read {}: {e}", path.display()),
    };
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(io_error)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(io_error)
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Solve {
            input,
            algorithm,
            bound,
            method,
            max_states,
            emit_matrix,
            output,
        } => {
            let text = read_input(&input)?;
            let options = SolveOptions {
                algorithm,
                bound,
                method,
                max_states,
                emit_matrix,
                output,
            };
            cmd_solve(&text, &options)
        }
        Command::Realize {
            rows,
            columns,
            method,
            output,
        } => cmd_realize(&rows.0, &columns.0, method, output),
        Command::Conjugate { rows, n } => cmd_conjugate(&rows.0, n),
        Command::Check { rows, columns, n } => cmd_check(&rows.0, &columns.0, n),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("colsum: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
