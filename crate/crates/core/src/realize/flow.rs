//! Realization by maximum flow.
//!
//! The network has a source `s`, a sink `t`, one node `u_i` per row and one
//! node `w_j` per column. Arcs `s -> u_i` carry capacity `r_i`, every
//! `u_i -> w_j` has capacity 1, and `w_j -> t` has capacity `c_j`. An
//! integral maximum flow saturating all source arcs gives the matrix
//! `A_ij = flow(u_i -> w_j)`. The flow is computed with Dinic's blocking
//! flow method.

use std::collections::VecDeque;

use crate::matrix::BinaryMatrix;

/// One directed arc with its capacity and current flow.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub capacity: u64,
    pub flow: u64,
}

#[derive(Debug, Clone)]
pub struct FlowNetwork {
    m: usize,
    n: usize,
    // residual graph: arcs come in pairs (2e forward, 2e+1 reverse)
    head: Vec<usize>,
    tail: Vec<usize>,
    residual: Vec<u64>,
    capacity: Vec<u64>,
    adjacency: Vec<Vec<usize>>,
}

impl FlowNetwork {
    pub const SOURCE: usize = 0;
    pub const SINK: usize = 1;

    /// Builds the dense network for row sums `rows` and column sums `columns`.
    pub fn new(rows: &[usize], columns: &[usize]) -> Self {
        let m = rows.len();
        let n = columns.len();
        let nodes = 2 + m + n;
        let arcs = m + m * n + n;
        let mut net = FlowNetwork {
            m,
            n,
            head: Vec::with_capacity(2 * arcs),
            tail: Vec::with_capacity(2 * arcs),
            residual: Vec::with_capacity(2 * arcs),
            capacity: Vec::with_capacity(arcs),
            adjacency: vec![Vec::new(); nodes],
        };
        for (i, &ri) in rows.iter().enumerate() {
            net.add_arc(Self::SOURCE, net.row_node(i), ri as u64);
        }
        for i in 0..m {
            for j in 0..n {
                net.add_arc(net.row_node(i), net.column_node(j), 1);
            }
        }
        for (j, &cj) in columns.iter().enumerate() {
            net.add_arc(net.column_node(j), Self::SINK, cj as u64);
        }
        net
    }

    pub fn row_node(&self, i: usize) -> usize {
        2 + i
    }

    pub fn column_node(&self, j: usize) -> usize {
        2 + self.m + j
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    fn add_arc(&mut self, from: usize, to: usize, capacity: u64) {
        let id = self.head.len();
        self.head.push(to);
        self.tail.push(from);
        self.residual.push(capacity);
        self.head.push(from);
        self.tail.push(to);
        self.residual.push(0);
        self.capacity.push(capacity);
        self.adjacency[from].push(id);
        self.adjacency[to].push(id + 1);
    }

    fn middle_arc(&self, i: usize, j: usize) -> usize {
        2 * (self.m + i * self.n + j)
    }

    /// All forward arcs with their current flow.
    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        self.capacity.iter().enumerate().map(move |(e, &capacity)| Arc {
            from: self.tail[2 * e],
            to: self.head[2 * e],
            capacity,
            flow: capacity - self.residual[2 * e],
        })
    }

    /// Net flow leaving the source.
    pub fn flow_value(&self) -> u64 {
        self.arcs()
            .filter(|a| a.from == Self::SOURCE)
            .map(|a| a.flow)
            .sum()
    }

    /// Capacity bounds and conservation at every node except `s` and `t`.
    pub fn is_valid_flow(&self) -> bool {
        let mut balance = vec![0i128; self.node_count()];
        for a in self.arcs() {
            if a.flow > a.capacity {
                return false;
            }
            balance[a.from] -= a.flow as i128;
            balance[a.to] += a.flow as i128;
        }
        balance
            .iter()
            .enumerate()
            .all(|(v, &b)| v == Self::SOURCE || v == Self::SINK || b == 0)
    }

    /// Runs Dinic's algorithm to completion and returns the flow value.
    pub fn max_flow(&mut self) -> u64 {
        let nodes = self.node_count();
        let mut total = 0u64;
        let mut level = vec![usize::MAX; nodes];
        let mut next = vec![0usize; nodes];
        while self.bfs(&mut level) {
            next.iter_mut().for_each(|x| *x = 0);
            loop {
                let pushed = self.dfs(Self::SOURCE, u64::MAX, &level, &mut next);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
        total
    }

    fn bfs(&self, level: &mut [usize]) -> bool {
        level.iter_mut().for_each(|x| *x = usize::MAX);
        level[Self::SOURCE] = 0;
        let mut queue = VecDeque::from([Self::SOURCE]);
        while let Some(v) = queue.pop_front() {
            for &e in &self.adjacency[v] {
                let w = self.head[e];
                if self.residual[e] > 0 && level[w] == usize::MAX {
                    level[w] = level[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        level[Self::SINK] != usize::MAX
    }

    fn dfs(&mut self, v: usize, limit: u64, level: &[usize], next: &mut [usize]) -> u64 {
        if v == Self::SINK {
            return limit;
        }
        while next[v] < self.adjacency[v].len() {
            let e = self.adjacency[v][next[v]];
            let w = self.head[e];
            if self.residual[e] > 0 && level[w] == level[v] + 1 {
                let pushed = self.dfs(w, limit.min(self.residual[e]), level, next);
                if pushed > 0 {
                    self.residual[e] -= pushed;
                    self.residual[e ^ 1] += pushed;
                    return pushed;
                }
            }
            next[v] += 1;
        }
        0
    }

    /// Reads `A_ij` off the flow on the arc `u_i -> w_j`.
    pub fn matrix(&self) -> BinaryMatrix {
        let mut a = BinaryMatrix::zeros(self.m, self.n);
        for i in 0..self.m {
            for j in 0..self.n {
                let e = self.middle_arc(i, j);
                a.set(i, j, self.residual[e] == 0);
            }
        }
        a
    }
}
