//! Named complexes.
//!
//! A name is a join of factors separated by `*`. A factor is one of
//!
//! | factor             | complex                                   |
//! |--------------------|-------------------------------------------|
//! | `point`            | a single vertex                           |
//! | `octahedron`       | boundary of the octahedron, ids 1..6      |
//! | `icosahedron`      | boundary of the icosahedron, ids 1..12    |
//! | `tetrahedron`      | boundary of the tetrahedron, ids 1..4     |
//! | `cross-polytope:d` | the d-sphere as a join of d+1 zero-spheres |
//! | `cycle:n`          | the n-cycle, ids 1..n                     |
//! | `complete:n`       | Whitney complex of K_n (a full simplex)   |
//! | `path:n`           | the path with n vertices                  |
//!
//! optionally followed by `^r` for `r` Barycentric refinements, e.g.
//! `octahedron^1*cycle:7`. Refined vertices are renumbered from 1.

use crate::complex::{Complex, Simplex};
use crate::error::{invalid, Error, Result};

pub const NAMES: &[&str] =
    &["point", "octahedron", "icosahedron", "tetrahedron", "cross-polytope:d", "cycle:n", "complete:n", "path:n"];

/// The eight triangles of the octahedron with vertex pairs {1,2}, {3,4}, {5,6}.
pub fn octahedron() -> Complex {
    let mut facets = Vec::new();
    for a in [1, 2] {
        for b in [3, 4] {
            for c in [5, 6] {
                facets.push(vec![a, b, c]);
            }
        }
    }
    Complex::generate(facets).expect("octahedron facets are valid")
}

/// Poles 1 and 12, upper ring 2..6, lower ring 7..11.
pub fn icosahedron() -> Complex {
    let up = |j: u32| 2 + j % 5;
    let low = |j: u32| 7 + j % 5;
    let mut facets = Vec::new();
    for j in 0..5 {
        facets.push(vec![1, up(j), up(j + 1)]);
        facets.push(vec![up(j), up(j + 1), low(j + 1)]);
        facets.push(vec![up(j), low(j), low(j + 1)]);
        facets.push(vec![12, low(j), low(j + 1)]);
    }
    Complex::generate(facets).expect("icosahedron facets are valid")
}

pub fn tetrahedron() -> Complex {
    Complex::generate([[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]).expect("valid facets")
}

/// The `d`-sphere `S⁰ * ... * S⁰` on ids `1..=2d+2`, antipodes `2i-1, 2i`;
/// `d = 2` is the octahedron, `d = 5` has 64 facets.
pub fn cross_polytope(d: usize) -> Complex {
    let s0 = Complex::generate([[1], [2]]).expect("valid facets");
    relabel_consecutive(&(0..d).fold(s0.clone(), |acc, _| acc.join(&s0)))
}

pub fn cycle(n: usize) -> Result<Complex> {
    if n < 3 {
        return invalid(format!("cycle needs at least 3 vertices, got {n}"));
    }
    let n = n as u32;
    Complex::generate((1..=n).map(|i| vec![i, i % n + 1]))
}

pub fn complete(n: usize) -> Result<Complex> {
    if n == 0 || n > 24 {
        return invalid(format!("complete:n needs 1 <= n <= 24, got {n}"));
    }
    Complex::generate([(1..=n as u32).collect::<Vec<_>>()])
}

pub fn path(n: usize) -> Result<Complex> {
    match n {
        0 => invalid("path needs at least one vertex"),
        1 => Complex::generate([[1]]),
        _ => Complex::generate((1..n as u32).map(|i| vec![i, i + 1])),
    }
}

/// Shifts canonical-index vertex ids (as produced by refinement) to start at 1.
pub fn renumber_from_one(c: &Complex) -> Complex {
    let shifted = c
        .simplices()
        .iter()
        .map(|s| Simplex::new(s.vertices().iter().map(|v| v + 1)).expect("shift keeps ids distinct"));
    Complex::from_simplices(shifted).expect("shift keeps the complex closed")
}

/// Maps the sorted vertex ids to `1..=n`.
pub fn relabel_consecutive(c: &Complex) -> Complex {
    let ids = c.vertices();
    let pos = |v: &u32| ids.binary_search(v).expect("vertex of c") as u32 + 1;
    let mapped = c.simplices().iter().map(|s| Simplex::new(s.vertices().iter().map(pos)).expect("bijection"));
    Complex::from_simplices(mapped).expect("bijection keeps the complex closed")
}

fn parse_count(name: &str, arg: Option<&str>, default: Option<usize>) -> Result<usize> {
    match (arg, default) {
        (Some(a), _) => a.parse().map_err(|_| Error::InvalidInput(format!("bad parameter in '{name}'"))),
        (None, Some(d)) => Ok(d),
        (None, None) => invalid(format!("'{name}' needs a parameter, e.g. {name}:5")),
    }
}

fn factor(text: &str, dim: Option<usize>) -> Result<Complex> {
    let (body, refinements) = match text.split_once('^') {
        Some((b, r)) => {
            let r: usize = r.parse().map_err(|_| Error::InvalidInput(format!("bad refinement count in '{text}'")))?;
            (b, r)
        }
        None => (text, 0),
    };
    let (name, arg) = match body.split_once(':') {
        Some((n, a)) => (n, Some(a)),
        None => (body, None),
    };
    let mut c = match name {
        "point" => Complex::generate([[1]])?,
        "octahedron" => octahedron(),
        "icosahedron" => icosahedron(),
        "tetrahedron" => tetrahedron(),
        "cross-polytope" => {
            let d = parse_count(name, arg, dim)?;
            if d > 12 {
                return invalid(format!("cross-polytope dimension {d} is too large"));
            }
            cross_polytope(d)
        }
        "cycle" => cycle(parse_count(name, arg, None)?)?,
        "complete" => complete(parse_count(name, arg, None)?)?,
        "path" => path(parse_count(name, arg, None)?)?,
        other => {
            return invalid(format!("unknown builtin '{other}'; known: {}", NAMES.join(", ")));
        }
    };
    for _ in 0..refinements {
        c = renumber_from_one(&c.barycentric_refine());
    }
    Ok(c)
}

/// Resolves a builtin name. `dim` supplies the dimension of a bare
/// `cross-polytope`.
pub fn builtin(name: &str, dim: Option<usize>) -> Result<Complex> {
    let mut parts = name.split('*').map(str::trim);
    let first = parts.next().filter(|p| !p.is_empty()).ok_or_else(|| Error::InvalidInput("empty builtin name".into()))?;
    let mut c = factor(first, dim)?;
    for p in parts {
        c = c.join(&factor(p, dim)?);
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potts::verification_graph;
    use crate::topology::is_sphere;

    #[test]
    fn named_spheres() {
        assert_eq!(octahedron().f_vector().0, vec![6, 12, 8]);
        assert_eq!(icosahedron().f_vector().0, vec![12, 30, 20]);
        assert_eq!(tetrahedron().f_vector().0, vec![4, 6, 4]);
        assert!(!tetrahedron().is_flag());
        assert_eq!(cross_polytope(2), octahedron());
        assert_eq!(cross_polytope(5).f_vector().0, vec![12, 60, 160, 240, 192, 64]);
        for c in [octahedron(), icosahedron(), tetrahedron()] {
            assert!(is_sphere(&verification_graph(&c), 2).unwrap());
        }
    }

    #[test]
    fn parsing() {
        assert_eq!(builtin("cycle:7", None).unwrap().f_vector().0, vec![7, 7]);
        assert_eq!(builtin("cross-polytope", Some(3)).unwrap().f_vector().0, vec![8, 24, 32, 16]);
        let j = builtin("octahedron*cycle:7", None).unwrap();
        assert_eq!(j.dim(), Some(4));
        assert_eq!(j.euler_characteristic(), 2);
        let refined = builtin("octahedron^1*cycle:7", None).unwrap();
        assert_eq!(refined.vertices().len(), 33);
        assert_eq!(refined.len(), 2204);
        assert_eq!(builtin("complete:3", None).unwrap().f_vector().0, vec![3, 3, 1]);
        assert_eq!(builtin("path:1", None).unwrap().len(), 1);
        for bad in ["", "cycle", "cycle:2", "nope", "cycle:x", "octahedron^x", "cross-polytope"] {
            assert!(builtin(bad, None).is_err(), "{bad}");
        }
    }
}
