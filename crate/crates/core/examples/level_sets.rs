// A three-valued coloring of the 4-sphere `Oct * C_7` cuts out a surface.

use isospectral::builtins::builtin;
use isospectral::potts::{random_coloring, verify_interface, InterfaceReport};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let host = builtin("octahedron*cycle:7", None)?;
    for seed in 0..3 {
        let f = random_coloring(&host, 2, seed);
        match verify_interface(&host, &f, 4)? {
            InterfaceReport::Manifold { dim, f_vector, betti, chi, gauss_bonnet_ok, .. } => {
                println!("seed {seed}: {dim}-manifold, f = {f_vector:?}, betti = {betti:?}, chi = {chi}");
                assert_eq!(dim, 2);
                assert!(gauss_bonnet_ok);
            }
            InterfaceReport::Empty => println!("seed {seed}: empty"),
            InterfaceReport::Violation { witness, .. } => panic!("not a manifold near {witness:?}"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
