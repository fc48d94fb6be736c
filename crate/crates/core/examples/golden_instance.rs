//! The 4x4 instance with row sums (3,3,2,2) and f(x) = (x-1)^2 (x-3)^2 in
//! every column. The optimum is 0, attained by column sums (3,3,3,1).
//!
//!     cargo run -p colsum --example golden_instance

use colsum::{line_sums, solve_uniform, Instance, ValueTable};

fn main() -> colsum::Result<()> {
    let f = ValueTable::from_fn(4, |x| {
        let x = x as i64;
        (x - 1).pow(2) * (x - 3).pow(2)
    });
    println!("f on 0..=4: {:?}", f.values());

    let instance = Instance::shared(4, 4, vec![3, 3, 2, 2], f)?;
    let solution = solve_uniform(&instance)?;

    println!("objective:   {}", solution.objective);
    println!("column sums: {:?}", &*solution.column_sums);
    print!("{}", solution.matrix);

    let (rows, columns) = line_sums(&solution.matrix);
    assert_eq!(rows, instance.rows());
    assert_eq!(columns, solution.column_sums);
    println!(
        "{} digraph vertices, {} edge relaxations",
        solution.stats.states_created, solution.stats.edges_relaxed
    );
    Ok(())
}
