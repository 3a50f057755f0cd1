// Curvature of the icosahedron: 1/6 at every vertex, summing to 2.

use isospectral::builtins::icosahedron;
use isospectral::topology::{curvatures, gauss_bonnet};
use num_rational::Rational64;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (g, _) = icosahedron().skeleton_graph();
    let k = curvatures(&g);
    println!("curvatures {:?}", k.0.iter().map(ToString::to_string).collect::<Vec<_>>());
    assert!(k.0.iter().all(|&x| x == Rational64::new(1, 6)));
    let gb = gauss_bonnet(&g);
    println!("sum = {}, chi = {}", gb.sum, gb.chi);
    assert!(gb.ok);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
