// Reading and writing complexes, edge lists and eigenvalue CSV.

use isospectral::io::{complex_to_json, parse_complex, parse_edge_list, parse_values_csv, whitney_with_ids};
use isospectral::spectral::{self, Spectrum};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let c = parse_complex(r#"{"simplices": [[1,2,3],[1,3,4]]}"#, true)?;
    let json = complex_to_json(&c)?;
    println!("{json}");
    assert_eq!(parse_complex(&json, false)?, c);

    let (g, ids) = parse_edge_list("1 2\n2 3\n3 1\n3 4\n")?;
    let w = whitney_with_ids(&g, &ids)?;
    println!("Whitney complex of the edge list: f = {:?}", w.f_vector().0);

    let s: Spectrum = spectral::spectrum(&spectral::kirchhoff(&g))?;
    let csv = s.to_csv();
    print!("{csv}");
    assert_eq!(parse_values_csv(&csv)?, s.values());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
