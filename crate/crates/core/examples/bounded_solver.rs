//! Distinct per-column functions with row sums at most 3.
//!
//!     cargo run --release -p colsum --example bounded_solver [size] [seed]

use std::time::Instant;

use colsum::{BoundedSolver, Instance, ValueTable};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> colsum::Result<()> {
    let mut args = std::env::args().skip(1);
    let size: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(40);
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(11);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let rows: Vec<usize> = (0..size).map(|_| rng.gen_range(0..=3)).collect();
    let tables = (0..size)
        .map(|_| ValueTable::from_fn(size, |_| rng.gen_range(-50..=50)))
        .collect();
    let instance = Instance::new(size, size, rows, tables)?;

    let started = Instant::now();
    let solution = BoundedSolver::default().with_bound(3).solve(&instance)?;
    println!("m = n = {size}, b = 3, seed {seed}");
    println!("objective {} in {:.2?}", solution.objective, started.elapsed());
    println!(
        "{} vertices, {} relaxations",
        solution.stats.states_created, solution.stats.edges_relaxed
    );
    println!("column sums: {:?}", &*solution.column_sums);
    Ok(())
}
