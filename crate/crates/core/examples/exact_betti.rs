// Betti numbers three ways: floating nullity, exact rational rank, rank mod p.

use isospectral::builtins::builtin;
use isospectral::spectral::exact::{betti_exact, betti_modular};
use isospectral::spectral::{betti, DEFAULT_TOL};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["octahedron", "cycle:5*path:2", "tetrahedron*point", "octahedron^1"] {
        let c = builtin(name, None)?;
        let float = betti(&c, DEFAULT_TOL)?;
        let exact = betti_exact(&c)?;
        let modular = betti_modular(&c);
        println!("{name:>18}: {float:?} {exact:?} {modular:?}");
        assert_eq!(float, exact);
        assert_eq!(exact, modular);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
