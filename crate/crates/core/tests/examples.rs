mod octahedron_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/octahedron.rs"));
}

#[test]
fn octahedron_example_runs() {
    octahedron_example::run_example().expect("octahedron example should run");
}

mod cross_polytope_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cross_polytope.rs"));
}

#[test]
fn cross_polytope_example_runs() {
    cross_polytope_example::run_example().expect("cross polytope example should run");
}

mod qr_flow_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/qr_flow.rs"));
}

#[test]
fn qr_flow_example_runs() {
    qr_flow_example::run_example().expect("qr flow example should run");
}

mod lax_vs_qr_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/lax_vs_qr.rs"));
}

#[test]
fn lax_vs_qr_example_runs() {
    lax_vs_qr_example::run_example().expect("lax vs qr example should run");
}

mod density_of_states_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/density_of_states.rs"));
}

#[test]
fn density_of_states_example_runs() {
    density_of_states_example::run_example().expect("density of states example should run");
}

mod level_sets_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/level_sets.rs"));
}

#[test]
fn level_sets_example_runs() {
    level_sets_example::run_example().expect("level sets example should run");
}

mod betti_statistics_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/betti_statistics.rs"));
}

#[test]
fn betti_statistics_example_runs() {
    betti_statistics_example::run_example().expect("betti statistics example should run");
}

mod gauss_bonnet_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/gauss_bonnet.rs"));
}

#[test]
fn gauss_bonnet_example_runs() {
    gauss_bonnet_example::run_example().expect("gauss bonnet example should run");
}

mod lidskii_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/lidskii.rs"));
}

#[test]
fn lidskii_example_runs() {
    lidskii_example::run_example().expect("lidskii example should run");
}

mod exact_betti_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/exact_betti.rs"));
}

#[test]
fn exact_betti_example_runs() {
    exact_betti_example::run_example().expect("exact betti example should run");
}

mod verify_claims_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/verify_claims.rs"));
}

#[test]
fn verify_claims_example_runs() {
    verify_claims_example::run_example().expect("verify claims example should run");
}

mod file_formats_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/file_formats.rs"));
}

#[test]
fn file_formats_example_runs() {
    file_formats_example::run_example().expect("file formats example should run");
}
