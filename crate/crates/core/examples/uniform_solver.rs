//! Solves a random 300 x 300 instance with one shared random function.
//!
//!     cargo run --release -p colsum --example uniform_solver [size] [seed]

use std::time::Instant;

use colsum::{solve_uniform, Instance, ValueTable};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> colsum::Result<()> {
    let mut args = std::env::args().skip(1);
    let size: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(300);
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(7);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let rows: Vec<usize> = (0..size).map(|_| rng.gen_range(0..=size)).collect();
    let f = ValueTable::from_fn(size, |_| rng.gen_range(-1000..=1000));
    let instance = Instance::shared(size, size, rows, f)?;

    let started = Instant::now();
    let solution = solve_uniform(&instance)?;
    println!("m = n = {size}, seed {seed}");
    println!("objective {} in {:.2?}", solution.objective, started.elapsed());
    println!(
        "{} vertices, {} relaxations",
        solution.stats.states_created, solution.stats.edges_relaxed
    );
    println!("largest column sums: {:?}", &solution.column_sums[..8.min(size)]);
    Ok(())
}
