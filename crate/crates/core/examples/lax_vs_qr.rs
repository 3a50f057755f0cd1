// Integrating the Lax equation reproduces the QR flow; the block-wise
// generator does not.

use isospectral::builtins::octahedron;
use isospectral::deform::{lax_integrate, lax_integrate_with, lax_rhs_blockwise, qr_deform, GSpec};
use isospectral::linalg::max_abs;
use isospectral::spectral;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let d0 = spectral::dirac(&octahedron());
    let g = GSpec::monomial(1);
    let qr = qr_deform(&d0, &g, 1.0)?;
    let lax = lax_integrate(&d0, &g, 1.0, 2000)?;
    let block = lax_integrate_with(&d0, 1.0, 2000, |d| lax_rhs_blockwise(d, &g, &d0.offsets))?;
    let diff = max_abs(&(&lax - &qr.d_t));
    let block_diff = max_abs(&(&block - &qr.d_t));
    println!("elementwise split: {diff:.2e}");
    println!("block split:       {block_diff:.2e}");
    assert!(diff < 1e-8);
    assert!(block_diff > 1e-2);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
