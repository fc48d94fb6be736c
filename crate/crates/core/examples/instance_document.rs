//! Reads a JSON instance document, solves it, and prints the solution
//! document the command-line tool would emit.
//!
//!     cargo run -p colsum --example instance_document

use colsum::cli::{solve_document, SolveOptions};
use colsum::document::InstanceDocument;

const INSTANCE: &str = r#"{
    "m": 3, "n": 4, "r": [2, 2, 1],
    "functions": {"per_column": [
        {"table": [0, 4, 1, 9]},
        {"poly": [1, -2, 1]},
        {"table": [3, 0, 0, 3]},
        {"poly": [0, 0, 1]}
    ]}
}"#;

fn main() -> colsum::Result<()> {
    let doc = InstanceDocument::parse(INSTANCE)?;
    let instance = doc.to_instance()?;
    for (j, table) in instance.functions().iter().enumerate() {
        println!("f_{}: {:?}", j + 1, table.values());
    }
    let solution = solve_document(&doc, &SolveOptions::default())?;
    println!("{}", solution.to_json());
    Ok(())
}
