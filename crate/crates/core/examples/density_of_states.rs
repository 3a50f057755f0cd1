// Refining the 4-cycle six times: the spectral function of the Kirchhoff
// Laplacian approaches the arcsin law, and the l1 distances between
// generations of a refined triangle shrink geometrically.

use isospectral::builtins::{complete, cycle};
use isospectral::dos::{convergence_report, generations, operator_spectrum, Operator, DEFAULT_MAX_DENSE};
use isospectral::spectral::Spectrum;
use isospectral::Complex;

fn spectra(c: &Complex, refinements: usize) -> Result<Vec<Spectrum>, isospectral::Error> {
    generations(c, refinements)
        .iter()
        .map(|g| operator_spectrum(g, Operator::Kirchhoff, DEFAULT_MAX_DENSE))
        .collect()
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let c4 = cycle(4)?;
    let report = convergence_report(&c4, Operator::Kirchhoff, &spectra(&c4, 6)?);
    let sup = report.arcsin_sup.expect("one-dimensional input");
    println!("C_4 -> C_256: sup |F - arcsin| = {sup:.4}");
    assert!(sup <= 0.05);

    let k3 = complete(3)?;
    let report = convergence_report(&k3, Operator::Kirchhoff, &spectra(&k3, 4)?);
    println!("K_3 sizes {:?}", report.sizes);
    println!("distances {:?}", report.distances);
    println!("ratios    {:?}", report.ratios);
    assert!(report.ratios[1..].iter().all(|&r| r < 0.6));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
