//! Exact solver for instances whose columns all share one function `f`.
//!
//! Since the objective no longer depends on column order, it suffices to
//! search nonincreasing column-sum tuples `c` majorized by the conjugate
//! `d` of the row sums. These are the paths of a layered digraph whose
//! vertices are triples `(k, c_k, s_k)`: layer `k` fixes the `k`-th column
//! sum `c_k <= c_{k-1}` and the running sum `s_k = s_{k-1} + c_k`, which must
//! stay at most `d_1 + ... + d_k`. Entering a vertex costs `f(c_k)`, and the
//! last layer must reach `s_n = sum d`. A shortest path is an optimal tuple.
//!
//! The digraph is acyclic and layered, so the shortest path is computed by
//! dynamic programming over the layers (edge lengths may be negative). The
//! pass runs backwards from the last layer, computing for each vertex the
//! cheapest completion. Out of `(k, c, s)` the edges go to every
//! `(k + 1, c', s + c')` with `c' <= c`, so the best completion satisfies
//!
//! ```text
//! h(c, s) = min(h(c - 1, s), f(c) + g(k + 1, c, s + c))
//! ```
//!
//! and each vertex is settled in constant time. Only vertices that can
//! lie on a complete path are materialized: `k c <= s` (all earlier
//! entries are at least `c`), `s <= d_1 + ... + d_k`, and
//! `s + (n - k) c >= sum d` (the remaining columns can still reach the
//! total). One bit per vertex records whether the minimum above was
//! attained by `c' = c`, which is enough to walk the optimal path forward
//! again. Ties go to the larger `c'`, so the returned tuple is the
//! lexicographically largest optimal one.

use crate::error::{Error, Result};
use crate::instance::{Instance, ValueTable};
use crate::realize::Method;
use crate::solution::{assemble, Solution, SolverStats};
use crate::tuple::ConjugateTuple;

/// Default cap on materialized vertices. At one bit per vertex this keeps
/// the path bookkeeping under 250 MiB.
pub const DEFAULT_UNIFORM_MAX_STATES: u64 = 2_000_000_000;

const UNREACHABLE: i128 = i128::MAX;

/// `n (m + 1) (mn + 1) + 2`, the vertex count bound of the layered digraph.
pub fn uniform_state_bound(m: usize, n: usize) -> u128 {
    let (m, n) = (m as u128, n as u128);
    n * (m + 1) * (m * n + 1) + 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UniformSolver {
    pub method: Method,
    pub max_states: u64,
}

impl Default for UniformSolver {
    fn default() -> Self {
        UniformSolver {
            method: Method::Flow,
            max_states: DEFAULT_UNIFORM_MAX_STATES,
        }
    }
}

/// Solves an instance whose value tables are all identical.
pub fn solve_uniform(instance: &Instance) -> Result<Solution> {
    UniformSolver::default().solve(instance)
}

impl UniformSolver {
    pub fn with_method(mut self, method: Method) -> Self {
        self.method = method;
        self
    }

    pub fn with_max_states(mut self, max_states: u64) -> Self {
        self.max_states = max_states;
        self
    }

    pub fn solve(&self, instance: &Instance) -> Result<Solution> {
        if let Some(j) = instance.first_distinct_column() {
            return Err(Error::NotUniform { column: j + 1 });
        }
        let d = instance.conjugate();
        let dag = Layers::new(&d, instance.n());
        let states = dag.total_states() + 2;
        if states > self.max_states as u128 {
            return Err(Error::StateBudgetExceeded {
                limit: self.max_states,
            });
        }
        let (columns, length, edges) = dag.shortest_path(instance.function(0))?;
        let stats = SolverStats {
            states_created: states as u64,
            edges_relaxed: edges,
        };
        assemble(instance, columns, length, stats, self.method)
    }
}

/// Vertex ranges of one layer: for each value `c`, the admissible running
/// sums form the interval `lo[c]..=hi` (empty when `lo[c] > hi`).
struct Shape {
    lo: Vec<u64>,
    hi: u64,
    offset: Vec<usize>,
    size: usize,
}

impl Shape {
    #[inline]
    fn index(&self, c: usize, s: u64) -> Option<usize> {
        (s >= self.lo[c] && s <= self.hi).then(|| self.offset[c] + (s - self.lo[c]) as usize)
    }
}

struct Layers<'a> {
    d: &'a ConjugateTuple,
    n: usize,
    top: usize,
    total: u64,
}

impl<'a> Layers<'a> {
    fn new(d: &'a ConjugateTuple, n: usize) -> Self {
        Layers {
            d,
            n,
            top: d.first(),
            total: d.total(),
        }
    }

    /// Shape of layer `k` (1-based).
    fn shape(&self, k: usize) -> Shape {
        let hi = self.d.prefix(k);
        let remaining = (self.n - k) as u64;
        let mut lo = Vec::with_capacity(self.top + 1);
        let mut offset = Vec::with_capacity(self.top + 1);
        let mut size = 0usize;
        for c in 0..=self.top as u64 {
            let l = (k as u64 * c).max(self.total.saturating_sub(remaining * c));
            lo.push(l);
            offset.push(size);
            if l <= hi {
                size += (hi - l + 1) as usize;
            }
        }
        Shape {
            lo,
            hi,
            offset,
            size,
        }
    }

    fn total_states(&self) -> u128 {
        (1..=self.n).map(|k| self.shape(k).size as u128).sum()
    }

    /// Returns the lexicographically largest optimal nonincreasing tuple,
    /// its length, and the number of relaxed edges.
    fn shortest_path(&self, f: &ValueTable) -> Result<(Vec<usize>, i128, u64)> {
        let n = self.n;
        let shapes: Vec<Shape> = (1..=n).map(|k| self.shape(k)).collect();
        let mut edges = 0u64;

        // last layer: only s = total survives, with a zero-length edge to the sink
        let last = &shapes[n - 1];
        let mut next = vec![UNREACHABLE; last.size];
        for c in 0..=self.top {
            if let Some(ix) = last.index(c, self.total) {
                next[ix] = 0;
                edges += 1;
            }
        }

        // took[k - 1]: bit set when vertex (k, c, s) continues with c' = c
        let mut took: Vec<Vec<u64>> = vec![Vec::new(); n];
        for k in (1..n).rev() {
            let shape = &shapes[k - 1];
            let after = &shapes[k];
            let mut cost = vec![UNREACHABLE; shape.size];
            let mut bits = vec![0u64; shape.size.div_ceil(64)];
            let mut best = vec![UNREACHABLE; shape.hi as usize + 1];
            for c in 0..=self.top {
                let lo = shape.lo[c];
                if lo > shape.hi {
                    continue;
                }
                let fc = f.get(c) as i128;
                let base = shape.offset[c];
                // (k + 1, c, s + c) shares the lower end: lo_{k+1}(c) = lo_k(c) + c
                let after_base = after.offset[c];
                for s in lo..=shape.hi {
                    let ix = base + (s - lo) as usize;
                    if s + c as u64 <= after.hi {
                        let tail = next[after_base + (s - lo) as usize];
                        if tail != UNREACHABLE {
                            edges += 1;
                            let cand = tail + fc;
                            let slot = &mut best[s as usize];
                            if cand <= *slot {
                                *slot = cand;
                                bits[ix / 64] |= 1 << (ix % 64);
                            }
                        }
                    }
                    cost[ix] = best[s as usize];
                }
            }
            took[k - 1] = bits;
            next = cost;
        }

        // edges out of the source: (1, c_1, c_1) for 0 <= c_1 <= d_1
        let first = &shapes[0];
        let mut best: Option<(usize, i128)> = None;
        for c in 0..=self.top {
            if let Some(ix) = first.index(c, c as u64) {
                if next[ix] != UNREACHABLE {
                    edges += 1;
                    let cand = next[ix] + f.get(c) as i128;
                    if best.map_or(true, |(_, b)| cand <= b) {
                        best = Some((c, cand));
                    }
                }
            }
        }
        let (mut c, length) =
            best.ok_or_else(|| Error::Internal("no source-to-sink path".to_string()))?;

        let mut columns = Vec::with_capacity(n);
        columns.push(c);
        let mut s = c as u64;
        for k in 1..n {
            let shape = &shapes[k - 1];
            let bits = &took[k - 1];
            loop {
                let ix = shape
                    .index(c, s)
                    .ok_or_else(|| Error::Internal("path left the vertex set".to_string()))?;
                if bits[ix / 64] >> (ix % 64) & 1 == 1 {
                    break;
                }
                c = c
                    .checked_sub(1)
                    .ok_or_else(|| Error::Internal("broken path bookkeeping".to_string()))?;
            }
            columns.push(c);
            s += c as u64;
        }
        debug_assert_eq!(s, self.total);
        Ok((columns, length, edges))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::line_sums;
    use crate::tuple::is_majorized;

    fn shared(m: usize, n: usize, rows: Vec<usize>, values: Vec<i64>) -> Instance {
        Instance::shared(m, n, rows, ValueTable::new(values)).unwrap()
    }

    #[test]
    fn golden_instance() {
        let inst = shared(4, 4, vec![3, 3, 2, 2], vec![9, 0, 1, 0, 9]);
        let sol = solve_uniform(&inst).unwrap();
        assert_eq!(sol.objective, 0);
        assert_eq!(&*sol.column_sums, &[3, 3, 3, 1]);
        let (r, c) = line_sums(&sol.matrix);
        assert_eq!(r, vec![3, 3, 2, 2]);
        assert_eq!(c, sol.column_sums);
        assert!((sol.stats.states_created as u128) <= uniform_state_bound(4, 4));
    }

    #[test]
    fn squares_two_by_two() {
        let sol = solve_uniform(&shared(2, 2, vec![1, 1], vec![0, 1, 4])).unwrap();
        assert_eq!(sol.objective, 2);
        assert_eq!(&*sol.column_sums, &[1, 1]);
    }

    #[test]
    fn identity_function_sums_rows() {
        let inst = shared(3, 4, vec![4, 1, 3], vec![0, 1, 2, 3]);
        assert_eq!(solve_uniform(&inst).unwrap().objective, 8);
    }

    #[test]
    fn zero_function() {
        let inst = shared(3, 2, vec![2, 0, 1], vec![0; 4]);
        let sol = solve_uniform(&inst).unwrap();
        assert_eq!(sol.objective, 0);
        // all tuples tie; the lexicographically largest is the conjugate
        assert_eq!(&*sol.column_sums, &[2, 1]);
    }

    #[test]
    fn negative_values() {
        // feasible nonincreasing tuples: (3,2,0) -> -11, (3,1,1) -> -12,
        // (2,2,1) -> -3
        let inst = shared(3, 3, vec![2, 2, 1], vec![0, -1, -1, -10]);
        let sol = solve_uniform(&inst).unwrap();
        assert_eq!(&*sol.column_sums, &[3, 1, 1]);
        assert_eq!(sol.objective, -12);
    }

    #[test]
    fn single_column_and_empty_rows() {
        let sol = solve_uniform(&shared(3, 1, vec![1, 0, 1], vec![5, 6, 7, 8])).unwrap();
        assert_eq!(&*sol.column_sums, &[2]);
        assert_eq!(sol.objective, 7);
        let sol = solve_uniform(&shared(2, 3, vec![0, 0], vec![1, 2, 3])).unwrap();
        assert_eq!(&*sol.column_sums, &[0, 0, 0]);
        assert_eq!(sol.objective, 3);
    }

    #[test]
    fn output_is_majorized_and_nonincreasing() {
        let inst = shared(5, 6, vec![6, 3, 3, 1, 0], vec![2, -3, 4, 0, -1, 6]);
        let sol = solve_uniform(&inst).unwrap();
        assert!(sol.column_sums.is_nonincreasing());
        assert!(is_majorized(&sol.column_sums, &inst.conjugate()).unwrap());
    }

    #[test]
    fn rejects_distinct_tables() {
        let inst = Instance::new(
            1,
            2,
            vec![1],
            vec![ValueTable::new(vec![0, 1]), ValueTable::new(vec![0, 2])],
        )
        .unwrap();
        assert_eq!(
            solve_uniform(&inst).unwrap_err(),
            Error::NotUniform { column: 2 }
        );
    }

    #[test]
    fn budget() {
        let inst = shared(4, 4, vec![3, 3, 2, 2], vec![9, 0, 1, 0, 9]);
        let err = UniformSolver::default()
            .with_max_states(5)
            .solve(&inst)
            .unwrap_err();
        assert_eq!(err, Error::StateBudgetExceeded { limit: 5 });
    }

    #[test]
    fn overflowing_objective() {
        let inst = shared(1, 2, vec![1], vec![i64::MAX, i64::MAX]);
        assert!(matches!(solve_uniform(&inst), Err(Error::Overflow(_))));
    }
}
