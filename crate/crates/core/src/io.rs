//! File formats: complex JSON, graph edge lists, eigenvalue and matrix CSV.

use std::collections::BTreeSet;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::complex::{Complex, Simplex, VertexId};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

#[derive(Debug, Deserialize)]
struct ComplexFile {
    simplices: Vec<Vec<VertexId>>,
}

/// Canonical JSON with the f-vector and Euler characteristic alongside.
#[derive(Debug, Serialize)]
pub struct ComplexRecord<'a> {
    pub simplices: Vec<&'a [VertexId]>,
    pub f_vector: &'a [usize],
    pub chi: i64,
}

/// Parses `{"simplices": [[1],[2],[1,2]]}`. Lines holding a `meta` object
/// are skipped so the output of `build` can be read back. Duplicates are
/// merged; with `close` the downward closure is taken, otherwise a missing
/// face is an error.
pub fn parse_complex(text: &str, close: bool) -> Result<Complex> {
    let body = strip_meta(text)?;
    let file: ComplexFile = serde_json::from_str(&body)?;
    let mut simplices = BTreeSet::new();
    for s in file.simplices {
        simplices.insert(Simplex::new(s)?);
    }
    if close {
        Complex::generate(simplices.into_iter().map(|s| s.vertices().to_vec()))
    } else {
        Complex::from_simplices(simplices)
    }
}

fn strip_meta(text: &str) -> Result<String> {
    let mut kept = Vec::new();
    for line in text.lines() {
        if line.trim_start().starts_with('{') {
            if let Ok(Value::Object(map)) = serde_json::from_str::<Value>(line) {
                if map.contains_key("meta") && map.len() == 1 {
                    continue;
                }
            }
        }
        kept.push(line);
    }
    Ok(kept.join("\n"))
}

pub fn complex_to_json(c: &Complex) -> Result<String> {
    let f = c.f_vector();
    let record = ComplexRecord {
        simplices: c.simplices().iter().map(Simplex::vertices).collect(),
        f_vector: f.as_slice(),
        chi: c.euler_characteristic(),
    };
    Ok(serde_json::to_string(&record)?)
}

/// Reads an edge list: one `a b` pair per line (whitespace or comma
/// separated), `#` starts a comment, a lone id declares an isolated vertex.
/// Returns the graph on the sorted distinct ids together with those ids.
pub fn parse_edge_list(text: &str) -> Result<(Graph, Vec<VertexId>)> {
    let mut pairs = Vec::new();
    let mut ids = BTreeSet::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(|c: char| c == ',' || c.is_whitespace()).filter(|f| !f.is_empty()).collect();
        let parse = |f: &str| {
            f.parse::<VertexId>()
                .map_err(|_| Error::InvalidInput(format!("line {}: bad vertex id '{f}'", lineno + 1)))
        };
        match fields.as_slice() {
            [a] => {
                ids.insert(parse(a)?);
            }
            [a, b] => {
                let (a, b) = (parse(a)?, parse(b)?);
                if a == b {
                    return invalid(format!("line {}: self-loop at {a}", lineno + 1));
                }
                ids.insert(a);
                ids.insert(b);
                pairs.push((a, b));
            }
            _ => return invalid(format!("line {}: expected one or two vertex ids", lineno + 1)),
        }
    }
    let ids: Vec<VertexId> = ids.into_iter().collect();
    let pos = |v: VertexId| ids.binary_search(&v).expect("id was collected");
    let g = Graph::new(ids.len(), pairs.into_iter().map(|(a, b)| (pos(a), pos(b))))?;
    Ok((g, ids))
}

/// Whitney complex of `g` with vertex `i` labelled `ids[i]`.
pub fn whitney_with_ids(g: &Graph, ids: &[VertexId]) -> Result<Complex> {
    let facets: Vec<Vec<VertexId>> =
        g.maximal_cliques().into_iter().map(|c| c.into_iter().map(|i| ids[i]).collect()).collect();
    if facets.is_empty() {
        return Ok(Complex::empty());
    }
    Complex::generate(facets)
}

/// One value per line in shortest round-trip form.
pub fn values_to_csv(values: &[f64]) -> String {
    values.iter().map(|v| format!("{v:?}\n")).collect()
}

pub fn parse_values_csv(text: &str) -> Result<Vec<f64>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| l.parse::<f64>().map_err(|_| Error::InvalidInput(format!("bad number '{l}'"))))
        .collect()
}

pub fn matrix_to_csv(m: &DMatrix<f64>) -> String {
    let mut out = String::new();
    for i in 0..m.nrows() {
        let row: Vec<String> = (0..m.ncols()).map(|j| format!("{:?}", m[(i, j)])).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn parse_matrix_csv(text: &str) -> Result<DMatrix<f64>> {
    let rows: Vec<Vec<f64>> = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split(',')
                .map(|x| x.trim().parse::<f64>().map_err(|_| Error::InvalidInput(format!("bad number '{x}'"))))
                .collect()
        })
        .collect::<Result<_>>()?;
    let n = rows.len();
    let m = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != m) {
        return invalid("ragged matrix CSV");
    }
    Ok(DMatrix::from_fn(n, m, |i, j| rows[i][j]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::octahedron;
    use proptest::prelude::*;

    #[test]
    fn complex_json_round_trip() {
        let c = octahedron();
        let text = complex_to_json(&c).unwrap();
        assert!(text.contains("\"f_vector\":[6,12,8]"));
        assert!(text.contains("\"chi\":2"));
        assert_eq!(parse_complex(&text, false).unwrap(), c);
        let with_meta = format!("{{\"meta\":{{\"version\":\"x\"}}}}\n{text}\n");
        assert_eq!(parse_complex(&with_meta, false).unwrap(), c);
    }

    #[test]
    fn complex_json_validation() {
        let open = r#"{"simplices": [[1,2]]}"#;
        assert!(matches!(parse_complex(open, false), Err(Error::NotClosed { .. })));
        assert_eq!(parse_complex(open, true).unwrap().len(), 3);
        let dup = r#"{"simplices": [[2],[1],[1],[1,2],[2,1]]}"#;
        assert_eq!(parse_complex(dup, false).unwrap().len(), 3);
        assert!(parse_complex(r#"{"simplices": [[1,1]]}"#, false).is_err());
        assert!(parse_complex(r#"{"simplices": [[]]}"#, false).is_err());
        assert!(parse_complex("[1,2]", false).is_err());
    }

    #[test]
    fn edge_lists() {
        let (g, ids) = parse_edge_list("# square\n10 20\n20,30\n30 40\n40 10\n99\n").unwrap();
        assert_eq!(ids, vec![10, 20, 30, 40, 99]);
        assert_eq!(g.edge_count(), 4);
        let c = whitney_with_ids(&g, &ids).unwrap();
        assert_eq!(c.f_vector().0, vec![5, 4]);
        assert!(parse_edge_list("1 1").is_err());
        assert!(parse_edge_list("1 2 3").is_err());
        assert!(parse_edge_list("a b").is_err());
    }

    #[test]
    fn matrix_csv_round_trip() {
        let m = DMatrix::from_row_slice(2, 3, &[0.1, -2.0, 1e-300, 3.0, 0.0, 1.0 / 7.0]);
        assert_eq!(parse_matrix_csv(&matrix_to_csv(&m)).unwrap(), m);
        assert!(parse_matrix_csv("1,2\n3\n").is_err());
    }

    proptest! {
        #[test]
        fn values_csv_round_trips(values in proptest::collection::vec(-1e6f64..1e6, 0..50)) {
            prop_assert_eq!(parse_values_csv(&values_to_csv(&values)).unwrap(), values);
        }
    }
}
