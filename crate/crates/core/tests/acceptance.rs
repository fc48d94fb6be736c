//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.
//!
//!     cargo test -p colsum --test acceptance

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use colsum::bounded::bounded_state_bound;
use colsum::uniform::uniform_state_bound;
use colsum::{
    brute_matrices, conjugate, is_majorized, realize_flow, realize_greedy, solve_bounded,
    solve_uniform, sort_descending, Instance, Solution, ValueTable,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5EED_C015;
const TABLES_PER_SHAPE: usize = 50;
const MAX_DIM: usize = 4;

/// Every tuple in `{0..=hi}^len`, in lexicographic order.
fn all_tuples(len: usize, hi: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::with_capacity(len)];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..=hi).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

fn random_table(rng: &mut ChaCha8Rng, m: usize) -> ValueTable {
    ValueTable::from_fn(m, |_| rng.gen_range(-9..=9))
}

/// Records state counts of every solved instance against the vertex bounds.
#[derive(Default)]
struct BoundLog {
    uniform_checked: usize,
    bounded_checked: usize,
    violations: Vec<String>,
}

impl BoundLog {
    fn uniform(&mut self, inst: &Instance, sol: &Solution) {
        self.uniform_checked += 1;
        let bound = uniform_state_bound(inst.m(), inst.n());
        if sol.stats.states_created as u128 > bound {
            self.violations.push(format!(
                "uniform m={} n={}: {} > {bound}",
                inst.m(),
                inst.n(),
                sol.stats.states_created
            ));
        }
    }

    fn bounded(&mut self, inst: &Instance, b: usize, sol: &Solution) {
        self.bounded_checked += 1;
        let bound = bounded_state_bound(inst.m(), inst.n(), b).unwrap_or(u128::MAX);
        if sol.stats.states_created as u128 > bound {
            self.violations.push(format!(
                "bounded m={} n={} b={b}: {} > {bound}",
                inst.m(),
                inst.n(),
                sol.stats.states_created
            ));
        }
    }
}

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn golden_example(log: &mut BoundLog) -> Outcome {
    let started = Instant::now();
    let f = ValueTable::from_fn(4, |x| {
        let x = x as i64;
        (x - 1).pow(2) * (x - 3).pow(2)
    });
    let inst = Instance::shared(4, 4, vec![3, 3, 2, 2], f).map_err(|e| e.to_string())?;
    let sol = solve_uniform(&inst).map_err(|e| e.to_string())?;
    let elapsed = started.elapsed();
    log.uniform(&inst, &sol);
    ensure(sol.objective == 0, || format!("objective {}", sol.objective))?;
    ensure(sort_descending(&sol.column_sums) == vec![3, 3, 3, 1], || {
        format!("column sums {:?}", &*sol.column_sums)
    })?;
    ensure(sol.matrix.row_sums() == vec![3, 3, 2, 2], || {
        format!("row sums {:?}", sol.matrix.row_sums())
    })?;
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "objective 0, column sums {:?}, {elapsed:.2?}",
        &*sol.column_sums
    ))
}

fn conjugate_golden() -> Outcome {
    let d = conjugate(&[3, 3, 2, 2], 4).map_err(|e| e.to_string())?;
    ensure(d.values() == [4, 4, 2, 0], || format!("got {:?}", d.values()))?;
    Ok("d = (4,4,2,0)".into())
}

fn oracle_uniform(log: &mut BoundLog) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut count = 0usize;
    for m in 1..=MAX_DIM {
        let tables: Vec<ValueTable> = (0..TABLES_PER_SHAPE)
            .map(|_| random_table(&mut rng, m))
            .collect();
        for n in 1..=MAX_DIM {
            for rows in all_tuples(m, n) {
                for table in &tables {
                    let inst = Instance::shared(m, n, rows.clone(), table.clone())
                        .map_err(|e| e.to_string())?;
                    let sol = solve_uniform(&inst).map_err(|e| e.to_string())?;
                    let truth = brute_matrices(&inst).map_err(|e| e.to_string())?;
                    log.uniform(&inst, &sol);
                    ensure(sol.objective == truth.objective, || {
                        format!(
                            "m={m} n={n} r={rows:?} f={:?}: solver {} vs oracle {}",
                            table.values(),
                            sol.objective,
                            truth.objective
                        )
                    })?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} instances match exhaustive search"))
}

fn oracle_bounded(log: &mut BoundLog) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0xB0);
    let mut count = 0usize;
    for m in 1..=MAX_DIM {
        for n in 1..=MAX_DIM {
            let table_sets: Vec<Vec<ValueTable>> = (0..TABLES_PER_SHAPE)
                .map(|_| (0..n).map(|_| random_table(&mut rng, m)).collect())
                .collect();
            for rows in all_tuples(m, n) {
                let b = rows.iter().copied().max().unwrap_or(0);
                for tables in &table_sets {
                    let inst = Instance::new(m, n, rows.clone(), tables.clone())
                        .map_err(|e| e.to_string())?;
                    let sol = solve_bounded(&inst, b).map_err(|e| e.to_string())?;
                    let truth = brute_matrices(&inst).map_err(|e| e.to_string())?;
                    log.bounded(&inst, b, &sol);
                    ensure(sol.objective == truth.objective, || {
                        format!(
                            "m={m} n={n} r={rows:?} b={b}: solver {} vs oracle {}",
                            sol.objective, truth.objective
                        )
                    })?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} instances match exhaustive search"))
}

fn ryser_cross_validation() -> Outcome {
    let mut pairs = 0usize;
    for m in 1..=MAX_DIM {
        for n in 1..=MAX_DIM {
            // line sums of all 2^(mn) matrices
            let mut attainable: HashSet<(Vec<usize>, Vec<usize>)> = HashSet::new();
            for mask in 0u32..1 << (m * n) {
                let mut r = vec![0; m];
                let mut c = vec![0; n];
                for i in 0..m {
                    for j in 0..n {
                        if mask >> (i * n + j) & 1 == 1 {
                            r[i] += 1;
                            c[j] += 1;
                        }
                    }
                }
                attainable.insert((r, c));
            }
            let column_tuples = all_tuples(n, m);
            for rows in all_tuples(m, n) {
                let d = conjugate(&rows, n).map_err(|e| e.to_string())?;
                for columns in &column_tuples {
                    let exists = attainable.contains(&(rows.clone(), columns.clone()));
                    let majorized =
                        is_majorized(&sort_descending(columns), &d).map_err(|e| e.to_string())?;
                    let flow = realize_flow(&rows, columns);
                    let greedy = realize_greedy(&rows, columns);
                    let agree = exists == majorized
                        && exists == flow.is_ok()
                        && exists == greedy.is_ok();
                    ensure(agree, || {
                        format!(
                            "r={rows:?} c={columns:?}: enumeration {exists}, majorized {majorized}, flow {}, greedy {}",
                            flow.is_ok(),
                            greedy.is_ok()
                        )
                    })?;
                    for a in [flow, greedy].into_iter().flatten() {
                        ensure(
                            a.row_sums() == rows && &*a.column_sums() == columns.as_slice(),
                            || format!("r={rows:?} c={columns:?}: wrong line sums"),
                        )?;
                    }
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{pairs} (r, c) pairs agree across four tests"))
}

fn state_bounds(log: &BoundLog) -> Outcome {
    ensure(log.violations.is_empty(), || log.violations.join("; "))?;
    ensure(log.uniform_checked > 0 && log.bounded_checked > 0, || {
        "no solved instances recorded".into()
    })?;
    Ok(format!(
        "{} uniform and {} bounded solves within the vertex bounds",
        log.uniform_checked, log.bounded_checked
    ))
}

fn conservation(log: &mut BoundLog) -> Outcome {
    let (m, n) = (50, 50);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0xC0);
    let identity = ValueTable::from_fn(m, |x| x as i64);
    for trial in 0..100 {
        let rows: Vec<usize> = (0..m).map(|_| rng.gen_range(0..=n)).collect();
        let total: i64 = rows.iter().map(|&r| r as i64).sum();
        let inst = Instance::shared(m, n, rows.clone(), identity.clone())
            .map_err(|e| e.to_string())?;
        let sol = solve_uniform(&inst).map_err(|e| e.to_string())?;
        log.uniform(&inst, &sol);
        ensure(sol.objective == total, || {
            format!("trial {trial}: objective {} vs sum r {total}", sol.objective)
        })?;
        let zero = Instance::shared(m, n, rows, ValueTable::zeros(m)).map_err(|e| e.to_string())?;
        let sol = solve_uniform(&zero).map_err(|e| e.to_string())?;
        log.uniform(&zero, &sol);
        ensure(sol.objective == 0, || {
            format!("trial {trial}: zero function gave {}", sol.objective)
        })?;
    }
    Ok("f(x)=x gives sum r and f=0 gives 0 on 100 random 50x50 instances".into())
}

fn scale_smoke(log: &mut BoundLog) -> Outcome {
    let budget = Duration::from_secs(60);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x300);

    let size = 300;
    let rows: Vec<usize> = (0..size).map(|_| rng.gen_range(0..=size)).collect();
    let f = ValueTable::from_fn(size, |_| rng.gen_range(-1000..=1000));
    let inst = Instance::shared(size, size, rows, f).map_err(|e| e.to_string())?;
    let started = Instant::now();
    let sol = solve_uniform(&inst).map_err(|e| e.to_string())?;
    let uniform_time = started.elapsed();
    log.uniform(&inst, &sol);
    ensure(uniform_time < budget, || format!("uniform 300x300 took {uniform_time:?}"))?;

    let size = 40;
    let rows: Vec<usize> = (0..size).map(|_| rng.gen_range(0..=3)).collect();
    let tables = (0..size)
        .map(|_| ValueTable::from_fn(size, |_| rng.gen_range(-1000..=1000)))
        .collect();
    let inst = Instance::new(size, size, rows, tables).map_err(|e| e.to_string())?;
    let started = Instant::now();
    let sol = solve_bounded(&inst, 3).map_err(|e| e.to_string())?;
    let bounded_time = started.elapsed();
    log.bounded(&inst, 3, &sol);
    ensure(bounded_time < budget, || format!("bounded 40x40 took {bounded_time:?}"))?;

    Ok(format!(
        "uniform 300x300 in {uniform_time:.2?}, bounded b=3 40x40 in {bounded_time:.2?}"
    ))
}

fn guarded(f: impl FnOnce() -> Outcome) -> Outcome {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    })
}

fn main() -> ExitCode {
    let mut log = BoundLog::default();
    let mut results: Vec<(u32, &str, Outcome)> = Vec::new();
    results.push((1, "golden example", guarded(|| golden_example(&mut log))));
    results.push((2, "conjugate golden value", guarded(conjugate_golden)));
    results.push((3, "oracle equivalence, uniform", guarded(|| oracle_uniform(&mut log))));
    results.push((4, "oracle equivalence, bounded", guarded(|| oracle_bounded(&mut log))));
    results.push((5, "Ryser cross-validation", guarded(ryser_cross_validation)));
    results.push((7, "conservation", guarded(|| conservation(&mut log))));
    results.push((8, "scale smoke test", guarded(|| scale_smoke(&mut log))));
    results.push((6, "state-bound conformance", guarded(|| state_bounds(&log))));
    results.sort_by_key(|(id, _, _)| *id);

    let mut failed = 0;
    for (id, name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("AC{id} PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("AC{id} FAIL  {name}: {detail}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
