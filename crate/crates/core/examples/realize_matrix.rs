//! Builds matrices with prescribed line sums by maximum flow and by the
//! greedy Gale-Ryser procedure, and shows the witness for an impossible pair.
//!
//!     cargo run -p colsum --example realize_matrix

use colsum::{realize_flow, realize_greedy, Error, FlowNetwork};

fn main() -> colsum::Result<()> {
    let rows = [3, 3, 2, 2];
    let columns = [3, 3, 3, 1];

    let mut network = FlowNetwork::new(&rows, &columns);
    let value = network.max_flow();
    println!(
        "network: {} nodes, {} arcs, max flow {value}",
        network.node_count(),
        network.arcs().count()
    );

    println!("flow:\n{}", realize_flow(&rows, &columns)?);
    println!("greedy:\n{}", realize_greedy(&rows, &columns)?);

    match realize_flow(&[3, 1], &[2, 2, 0]) {
        Err(Error::Infeasible(witness)) => println!("(3,1) x (2,2,0): {witness}"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
