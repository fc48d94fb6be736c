//! Conjugate tuples and the majorization test deciding whether a
//! (0,1)-matrix with given row and column sums exists.
//!
//!     cargo run -p colsum --example conjugate_majorization

use colsum::{conjugate, is_majorized, line_sum_violation, sort_descending};

fn main() -> colsum::Result<()> {
    let rows = [3, 3, 2, 2];
    let d = conjugate(&rows, 4)?;
    println!("r = {rows:?}  ->  d = {:?}", d.values());

    for columns in [[3, 3, 3, 1], [1, 3, 3, 3], [5, 3, 1, 1], [3, 3, 3, 0]] {
        let sorted = sort_descending(&columns);
        let verdict = match line_sum_violation(&rows, &columns)? {
            None => "attainable".to_string(),
            Some(v) => format!("not attainable: {v}"),
        };
        println!(
            "c = {columns:?}  sorted {sorted:?}  majorized: {:5}  {verdict}",
            is_majorized(&sorted, &d)?
        );
    }
    Ok(())
}
