//! Exact solver for arbitrary per-column functions when every row sum is
//! at most a bound `b`.
//!
//! With `r_i <= b` the conjugate satisfies `d_j = 0` for `j > b`, so a
//! tuple is majorized by `d` as soon as its total is right and the prefix
//! inequalities hold for its `b` largest entries. Column sums are chosen
//! in column order, and a vertex of the layered digraph remembers the `b`
//! largest values chosen so far (`top`, nonincreasing, zero padded)
//! together with the running sum `s`. Choosing `c_k` inserts it into
//! `top`, keeps the `b` largest, and is allowed only when
//! `top_1 + ... + top_i <= d_1 + ... + d_i` for `i = 1..b`. The edge costs
//! `f_k(c_k)` and the last layer must reach `s = sum d`.
//!
//! The value `c_k` is carried on the edge rather than in the vertex label:
//! two labels differing only in `c_k` have the same outgoing edges.
//! Vertices are created only when reached from the source, hashed per
//! layer, and relaxed in topological (layer) order, which is valid with
//! negative costs. Among optimal paths the one with the lexicographically
//! smallest `(c_1, ..., c_n)` wins: every vertex keeps the smallest
//! optimal prefix, compared through the rank of its predecessor.

use rustc_hash::FxHashMap;

use crate::error::{domain, Error, Result};
use crate::instance::Instance;
use crate::realize::Method;
use crate::solution::{assemble, Solution, SolverStats};
use crate::tuple::ConjugateTuple;

pub const DEFAULT_MAX_STATES: u64 = 100_000_000;

/// `n (m + 1)^(b + 1) (mn + 1) + 2`, or `None` when it exceeds `u128`.
pub fn bounded_state_bound(m: usize, n: usize, b: usize) -> Option<u128> {
    let (m, n) = (m as u128, n as u128);
    let power = (m + 1).checked_pow(u32::try_from(b + 1).ok()?)?;
    n.checked_mul(power)?
        .checked_mul(m * n + 1)?
        .checked_add(2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundedSolver {
    /// Row-sum bound `b`; the largest row sum when `None`.
    pub bound: Option<usize>,
    pub max_states: u64,
    pub method: Method,
}

impl Default for BoundedSolver {
    fn default() -> Self {
        BoundedSolver {
            bound: None,
            max_states: DEFAULT_MAX_STATES,
            method: Method::Flow,
        }
    }
}

/// Solves `instance` assuming every row sum is at most `b`.
pub fn solve_bounded(instance: &Instance, b: usize) -> Result<Solution> {
    BoundedSolver::default().with_bound(b).solve(instance)
}

impl BoundedSolver {
    pub fn with_bound(mut self, b: usize) -> Self {
        self.bound = Some(b);
        self
    }

    pub fn with_max_states(mut self, max_states: u64) -> Self {
        self.max_states = max_states;
        self
    }

    pub fn with_method(mut self, method: Method) -> Self {
        self.method = method;
        self
    }

    pub fn solve(&self, instance: &Instance) -> Result<Solution> {
        let n = instance.n();
        let b = self.bound.unwrap_or_else(|| instance.max_row_sum());
        if b > n {
            return Err(domain(format!("bound b = {b} exceeds n = {n}")));
        }
        if let Some(i) = instance.rows().iter().position(|&r| r > b) {
            return Err(Error::BoundViolation {
                row: i + 1,
                value: instance.rows()[i],
                bound: b,
            });
        }
        if u32::try_from(instance.m()).is_err() {
            return Err(domain("m does not fit in 32 bits"));
        }
        let d = instance.conjugate();
        if d.values()[b..].iter().any(|&dj| dj != 0) {
            return Err(Error::Internal(format!(
                "conjugate has nonzero entries beyond b = {b}"
            )));
        }
        let search = Search {
            instance,
            d: &d,
            b,
            max_states: self.max_states,
        };
        let (columns, length, stats) = search.run()?;
        assemble(instance, columns, length, stats, self.method)
    }
}

struct Search<'a> {
    instance: &'a Instance,
    d: &'a ConjugateTuple,
    b: usize,
    max_states: u64,
}

/// Vertices of one layer, in creation order.
struct Layer {
    // stride b + 1: top_1..top_b, s
    keys: Vec<usize>,
    cost: Vec<i128>,
    pred: Vec<u32>,
    via: Vec<u32>,
    index: FxHashMap<Box<[usize]>, u32>,
}

impl Layer {
    fn new() -> Self {
        Layer {
            keys: Vec::new(),
            cost: Vec::new(),
            pred: Vec::new(),
            via: Vec::new(),
            index: FxHashMap::default(),
        }
    }

    fn len(&self) -> usize {
        self.cost.len()
    }
}

impl Search<'_> {
    fn run(&self) -> Result<(Vec<usize>, i128, SolverStats)> {
        let n = self.instance.n();
        let b = self.b;
        let stride = b + 1;
        let top_value = self.d.first();
        let total = self.d.total() as usize;

        let mut stats = SolverStats {
            states_created: 2,
            edges_relaxed: 0,
        };
        // the source: empty prefix, all-zero top
        let mut prev = Layer::new();
        prev.keys = vec![0; stride];
        prev.cost.push(0);
        let mut prev_order: Vec<u32> = vec![0];
        let mut prev_rank: Vec<u32> = vec![0];

        // (pred, via) of every layer, for walking the path back
        let mut trail: Vec<(Vec<u32>, Vec<u32>)> = Vec::with_capacity(n);
        let mut buf = vec![0usize; stride];

        for k in 1..=n {
            let f = self.instance.function(k - 1);
            let reserve = ((n - k) * top_value) as u64;
            let mut layer = Layer::new();
            for &p in &prev_order {
                let p = p as usize;
                let key = &prev.keys[p * stride..(p + 1) * stride];
                let s = key[b];
                let base_cost = prev.cost[p];
                for c in 0..=top_value {
                    let next_s = s + c;
                    if next_s > total {
                        break;
                    }
                    if ((total - next_s) as u64) > reserve {
                        continue;
                    }
                    buf.copy_from_slice(key);
                    buf[b] = next_s;
                    if !self.insert_admissible(&mut buf[..b], c) {
                        continue;
                    }
                    stats.edges_relaxed += 1;
                    let cand = base_cost + f.get(c) as i128;
                    match layer.index.get(&buf[..]) {
                        // predecessors arrive in rank order and c ascends, so
                        // an equal cost never beats the incumbent
                        Some(&ix) => {
                            let ix = ix as usize;
                            if cand < layer.cost[ix] {
                                layer.cost[ix] = cand;
                                layer.pred[ix] = p as u32;
                                layer.via[ix] = c as u32;
                            }
                        }
                        None => {
                            stats.states_created += 1;
                            if stats.states_created > self.max_states
                                || layer.len() >= u32::MAX as usize
                            {
                                return Err(Error::StateBudgetExceeded {
                                    limit: self.max_states,
                                });
                            }
                            let ix = layer.len() as u32;
                            layer.index.insert(buf.clone().into_boxed_slice(), ix);
                            layer.keys.extend_from_slice(&buf);
                            layer.cost.push(cand);
                            layer.pred.push(p as u32);
                            layer.via.push(c as u32);
                        }
                    }
                }
            }
            // rank vertices by their best prefix (pred's prefix, then c)
            let mut order: Vec<u32> = (0..layer.len() as u32).collect();
            order.sort_unstable_by_key(|&i| {
                let i = i as usize;
                ((prev_rank[layer.pred[i] as usize] as u64) << 32) | layer.via[i] as u64
            });
            let mut rank = vec![0u32; layer.len()];
            for (r, &i) in order.iter().enumerate() {
                rank[i as usize] = r as u32;
            }
            layer.index = FxHashMap::default();
            let Layer {
                keys, cost, pred, via, ..
            } = layer;
            trail.push((pred, via));
            prev = Layer {
                keys,
                cost,
                pred: Vec::new(),
                via: Vec::new(),
                index: FxHashMap::default(),
            };
            prev_order = order;
            prev_rank = rank;
        }

        // edges into the sink: s = sum d, ties to the smallest prefix
        let mut best: Option<usize> = None;
        for &i in &prev_order {
            let i = i as usize;
            if prev.keys[i * stride + b] != total {
                continue;
            }
            stats.edges_relaxed += 1;
            if best.map_or(true, |j| prev.cost[i] < prev.cost[j]) {
                best = Some(i);
            }
        }
        let end = best.ok_or_else(|| Error::Internal("no source-to-sink path".to_string()))?;
        let length = prev.cost[end];

        let mut columns = vec![0usize; n];
        let mut at = end;
        for k in (0..n).rev() {
            let (pred, via) = &trail[k];
            columns[k] = via[at] as usize;
            at = pred[at] as usize;
        }
        Ok((columns, length, stats))
    }

    /// Inserts `c` into the nonincreasing `top`, keeping the `b` largest,
    /// and checks the prefix inequalities against `d`.
    fn insert_admissible(&self, top: &mut [usize], c: usize) -> bool {
        let b = top.len();
        let Some(pos) = top.iter().position(|&t| t < c) else {
            return true;
        };
        top.copy_within(pos..b - 1, pos + 1);
        top[pos] = c;
        let mut acc: u64 = top[..pos].iter().map(|&t| t as u64).sum();
        for (i, &t) in top.iter().enumerate().skip(pos) {
            acc += t as u64;
            if acc > self.d.prefix(i + 1) {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::ValueTable;
    use crate::uniform::solve_uniform;

    #[test]
    fn distinct_functions_two_by_two() {
        let inst = Instance::new(
            2,
            2,
            vec![1, 1],
            vec![ValueTable::zeros(2), ValueTable::new(vec![0, 1, 2])],
        )
        .unwrap();
        let sol = solve_bounded(&inst, 1).unwrap();
        assert_eq!(sol.objective, 0);
        assert_eq!(&*sol.column_sums, &[2, 0]);
        assert_eq!(sol.matrix.to_row_strings(), vec!["10", "10"]);
    }

    #[test]
    fn golden_instance() {
        let f = ValueTable::new(vec![9, 0, 1, 0, 9]);
        let inst = Instance::shared(4, 4, vec![3, 3, 2, 2], f).unwrap();
        let sol = solve_bounded(&inst, 3).unwrap();
        assert_eq!(sol.objective, 0);
        // lexicographically smallest optimal tuple
        assert_eq!(&*sol.column_sums, &[1, 3, 3, 3]);
        assert_eq!(sol.objective, solve_uniform(&inst).unwrap().objective);
    }

    #[test]
    fn zero_tables() {
        let inst = Instance::shared(3, 4, vec![2, 0, 1], ValueTable::zeros(3)).unwrap();
        assert_eq!(solve_bounded(&inst, 2).unwrap().objective, 0);
    }

    #[test]
    fn larger_bound_is_still_exact() {
        let tables = vec![
            ValueTable::new(vec![4, -2, 3, 1]),
            ValueTable::new(vec![0, 5, -1, 2]),
            ValueTable::new(vec![-3, 0, 0, 7]),
        ];
        let inst = Instance::new(3, 3, vec![1, 2, 1], tables).unwrap();
        let tight = solve_bounded(&inst, 2).unwrap();
        let loose = solve_bounded(&inst, 3).unwrap();
        assert_eq!(tight.objective, loose.objective);
    }

    #[test]
    fn errors() {
        let inst = Instance::shared(2, 3, vec![3, 1], ValueTable::zeros(2)).unwrap();
        assert_eq!(
            solve_bounded(&inst, 2).unwrap_err(),
            Error::BoundViolation {
                row: 1,
                value: 3,
                bound: 2
            }
        );
        assert!(matches!(solve_bounded(&inst, 4), Err(Error::Domain(_))));
        let tiny = BoundedSolver::default().with_max_states(3);
        assert!(matches!(
            tiny.solve(&inst),
            Err(Error::StateBudgetExceeded { limit: 3 })
        ));
    }

    #[test]
    fn default_bound_is_max_row_sum() {
        let inst = Instance::shared(3, 3, vec![1, 2, 0], ValueTable::new(vec![0, 1, 4, 9]))
            .unwrap();
        let sol = BoundedSolver::default().solve(&inst).unwrap();
        assert_eq!(sol.objective, 3);
        let limit = bounded_state_bound(3, 3, 2).unwrap();
        assert!((sol.stats.states_created as u128) <= limit);
    }

    #[test]
    fn state_bound_formula() {
        assert_eq!(bounded_state_bound(2, 3, 1), Some(3 * 9 * 7 + 2));
        assert_eq!(bounded_state_bound(1000, 1000, 40), None);
    }
}
