// The 5-dimensional cross-polytope: 64 facets, a 728x728 Dirac matrix.

use std::time::Instant;

use isospectral::builtins::cross_polytope;
use isospectral::spectral::{self, DEFAULT_TOL};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let start = Instant::now();
    let c = cross_polytope(5);
    let d = spectral::dirac(&c);
    let betti = d.hodge().betti(DEFAULT_TOL)?;
    println!("f = {:?}", c.f_vector().0);
    println!("n = {}, betti = {betti:?}, {:.2?}", d.n(), start.elapsed());
    assert_eq!(d.n(), 728);
    assert_eq!(betti, vec![1, 0, 0, 0, 0, 1]);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
