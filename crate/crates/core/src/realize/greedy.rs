//! Gale-Ryser greedy realization.
//!
//! Rows are processed by nonincreasing sum (ties by index). Each row puts
//! its ones into the columns with the largest residual demand (ties by
//! index), and those demands drop by one. The construction succeeds exactly
//! when every demand reaches zero.

use crate::matrix::BinaryMatrix;

/// Returns the matrix, or `None` when the demands cannot be met.
pub(crate) fn greedy_matrix(rows: &[usize], columns: &[usize]) -> Option<BinaryMatrix> {
    let m = rows.len();
    let n = columns.len();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| rows[b].cmp(&rows[a]).then(a.cmp(&b)));

    let mut residual = columns.to_vec();
    let mut by_demand: Vec<usize> = (0..n).collect();
    let mut a = BinaryMatrix::zeros(m, n);
    for i in order {
        let ri = rows[i];
        if ri > n {
            return None;
        }
        by_demand.sort_by(|&x, &y| residual[y].cmp(&residual[x]).then(x.cmp(&y)));
        for &j in &by_demand[..ri] {
            if residual[j] == 0 {
                return None;
            }
            residual[j] -= 1;
            a.set(i, j, true);
        }
    }
    residual.iter().all(|&x| x == 0).then_some(a)
}
