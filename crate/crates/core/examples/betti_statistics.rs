// Mean Betti numbers of random hypersurfaces in the 3-sphere `C_4 * C_4`.

use isospectral::builtins::builtin;
use isospectral::potts::betti_statistics;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let host = builtin("cycle:4*cycle:4", None)?;
    let stats = betti_statistics(&host, 1, 100, 7)?;
    println!("samples {}, empty {}", stats.samples, stats.empty);
    println!("mean betti {:?}", stats.mean_betti);
    for r in stats.records.iter().take(3) {
        println!("sample {}: f = {:?}, betti = {:?}, chi = {}", r.sample, r.f_vector, r.betti, r.chi);
    }
    assert!(stats.records.iter().all(|r| r.empty || r.gauss_bonnet_ok));
    // In a 3-manifold the open count of the level set has the opposite sign.
    assert!(stats.records.iter().all(|r| r.chi == -r.chi_open));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
