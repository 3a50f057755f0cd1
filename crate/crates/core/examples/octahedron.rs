// Dirac matrix, Hodge blocks and the McKean–Singer supertrace of the octahedron.

use isospectral::builtins::octahedron;
use isospectral::spectral::{self, DEFAULT_TOL};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let c = octahedron();
    let d = spectral::dirac(&c);
    let h = d.hodge();
    println!("f = {:?}, chi = {}", c.f_vector().0, c.euler_characteristic());
    println!("Dirac matrix {}x{}, blocks {:?}", d.n(), d.n(), h.sizes());
    let betti = h.betti(DEFAULT_TOL)?;
    println!("betti = {betti:?}");
    assert_eq!(betti, vec![1, 0, 1]);
    for t in [0.0, 0.5, 1.0, 2.0] {
        let s = h.supertrace(t)?;
        println!("str exp(-{t} L) = {s:.12}");
        assert!((s - 2.0).abs() < 1e-9);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
