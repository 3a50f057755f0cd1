// Toggling one edge of a graph moves the Kirchhoff spectrum by at most 4 in l1.

use isospectral::graph::Graph;
use isospectral::spectral::{kirchhoff, lidskii_check};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = Graph::cycle(8)?;
    let mut edges = g.edges();
    edges.push((0, 4));
    let h = Graph::new(8, edges)?;
    let check = lidskii_check(&kirchhoff(&g), &kirchhoff(&h))?;
    println!("sum |a_j - b_j| = {:.6}, entrywise bound = {}", check.lhs, check.rhs);
    assert!(check.ok && check.lhs <= 4.0 + 1e-9);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
