// Isospectral QR deformation of the icosahedron's Dirac matrix.

use isospectral::builtins::icosahedron;
use isospectral::deform::{diagnose, qr_deform, GSpec};
use isospectral::spectral::{self, DEFAULT_TOL};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let d0 = spectral::dirac(&icosahedron());
    let g = GSpec::monomial(1);
    for t in [0.25, 0.5, 1.0] {
        let state = qr_deform(&d0, &g, t)?;
        let r = diagnose(&d0, &g, &state, DEFAULT_TOL)?;
        println!(
            "t={t}: drift {:.1e}, leakage {:.1e}, |cc| {:.1e}, |M| {:.3}, betti {:?}, str {:.9}",
            r.spectral_drift, r.band_leakage, r.cc_norm, r.diagonal_block_norm, r.betti_after, r.mckean_singer
        );
        assert!(r.spectral_drift < 1e-8 && r.band_leakage < 1e-8 && r.betti_ok);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
