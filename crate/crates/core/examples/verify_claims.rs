// Recursive sphere, manifold and contractibility checks on graphs.

use isospectral::builtins::builtin;
use isospectral::potts::verification_graph;
use isospectral::topology::{is_contractible, is_sphere, Search};
use isospectral::Error;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let oct = verification_graph(&builtin("octahedron", None)?);
    println!("octahedron is a 2-sphere: {}", is_sphere(&oct, 2)?);
    let c4 = verification_graph(&builtin("cycle:4", None)?);
    println!("C_4 is a 2-sphere: {}, a 1-sphere: {}", is_sphere(&c4, 2)?, is_sphere(&c4, 1)?);
    let k3 = verification_graph(&builtin("complete:3", None)?);
    println!("K_3 is contractible: {}", is_contractible(&k3)?);

    let s4 = verification_graph(&builtin("octahedron*cycle:7", None)?);
    let mut search = Search::new(&s4);
    println!("Oct * C_7 is a 4-manifold: {} ({} nodes)", search.is_manifold(4)?, search.nodes_used());
    match Search::new(&s4).with_budget(10).is_sphere(4) {
        Err(Error::BudgetExhausted(n)) => println!("a budget of {n} nodes is not enough"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
