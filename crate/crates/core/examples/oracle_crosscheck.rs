//! Compares both shortest-path solvers with exhaustive search on random
//! small instances.
//!
//!     cargo run -p colsum --example oracle_crosscheck

use colsum::{brute_matrices, brute_tuples, solve_bounded, solve_uniform, Instance, ValueTable};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> colsum::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checked = 0;
    for _ in 0..200 {
        let m = rng.gen_range(1..=4);
        let n = rng.gen_range(1..=4);
        let rows: Vec<usize> = (0..m).map(|_| rng.gen_range(0..=n)).collect();
        let b = rows.iter().copied().max().unwrap_or(0);

        let shared = ValueTable::from_fn(m, |_| rng.gen_range(-9..=9));
        let uniform = Instance::shared(m, n, rows.clone(), shared)?;
        let truth = brute_matrices(&uniform)?.objective;
        assert_eq!(solve_uniform(&uniform)?.objective, truth);
        assert_eq!(brute_tuples(&uniform)?.objective, truth);

        let tables = (0..n)
            .map(|_| ValueTable::from_fn(m, |_| rng.gen_range(-9..=9)))
            .collect();
        let distinct = Instance::new(m, n, rows, tables)?;
        let truth = brute_matrices(&distinct)?.objective;
        assert_eq!(solve_bounded(&distinct, b)?.objective, truth);
        assert_eq!(brute_tuples(&distinct)?.objective, truth);
        checked += 2;
    }
    println!("{checked} instances agree with exhaustive search");
    Ok(())
}
