//! Alexandrov topology of a complex, recursive recognition of contractible
//! graphs, spheres and manifolds, and vertex curvature.
//!
//! Contractibility is defined inductively: `K_1` is contractible, and a graph
//! is contractible if some vertex `v` has both its unit sphere `S(v)` and the
//! remainder `G \ v` contractible. Recognition is a search. [`Search`] bounds
//! it with a node budget and memoises results per vertex subset of the host
//! graph; every graph visited during a search is an induced subgraph of the
//! host, so the subset identifies it exactly.

use std::collections::HashMap;

use num_rational::Rational64;

use crate::complex::{Complex, Simplex};
use crate::error::{invalid, Error, Result};
use crate::graph::{intersect, Graph};

pub const DEFAULT_BUDGET: usize = 2_000_000;

/// Simplices `y ⊇ x`, including `x`.
pub fn star(c: &Complex, x: &Simplex) -> Result<Vec<Simplex>> {
    require_member(c, x)?;
    Ok(c.simplices().iter().filter(|y| x.is_subset_of(y)).cloned().collect())
}

/// Simplices `y ⊆ x`, including `x`.
pub fn core(c: &Complex, x: &Simplex) -> Result<Vec<Simplex>> {
    require_member(c, x)?;
    let mut out: Vec<Simplex> = x.subsets().collect();
    out.sort();
    Ok(out)
}

fn require_member(c: &Complex, x: &Simplex) -> Result<()> {
    if c.contains(x) {
        Ok(())
    } else {
        invalid(format!("{x:?} is not a simplex of the complex"))
    }
}

/// The unit sphere of a simplex in the refinement, split into the part below
/// it (`stable`, the boundary of `x`) and the part above it (`unstable`, the
/// strict star).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereSplit {
    pub simplex: Simplex,
    pub stable: Complex,
    pub unstable: Vec<Simplex>,
}

impl SphereSplit {
    /// The link `{ y \ x : y in unstable }`, a complex whose refinement is
    /// the containment graph of `unstable`.
    pub fn link(&self) -> Complex {
        let x = self.simplex.vertices();
        Complex::from_simplices(self.unstable.iter().map(|y| {
            Simplex::new(y.vertices().iter().copied().filter(|v| !x.contains(v)))
                .expect("strict superset leaves a non-empty remainder")
        }))
        .expect("the link of a simplex is closed")
    }

    /// Containment graph on `stable ∪ unstable` (stable elements first). Every
    /// stable element lies below every unstable one, so this is the graph join
    /// of the two containment graphs.
    pub fn containment_graph(&self) -> Graph {
        let elems: Vec<&Simplex> =
            self.stable.simplices().iter().chain(self.unstable.iter()).collect();
        let mut edges = Vec::new();
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate().skip(i + 1) {
                if a.is_subset_of(b) || b.is_subset_of(a) {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(elems.len(), edges).expect("valid edges")
    }
}

pub fn sphere_split(c: &Complex, x: &Simplex) -> Result<SphereSplit> {
    require_member(c, x)?;
    let stable = Complex::from_simplices(x.subsets().filter(|y| y != x))
        .expect("faces of a simplex form a complex");
    let unstable =
        c.simplices().iter().filter(|y| *y != x && x.is_subset_of(y)).cloned().collect();
    Ok(SphereSplit { simplex: x.clone(), stable, unstable })
}

/// Subgraph induced on the neighbours of `v`.
pub fn graph_unit_sphere(g: &Graph, v: usize) -> Result<Graph> {
    if v >= g.n() {
        return invalid(format!("vertex {v} out of range for {} vertices", g.n()));
    }
    Ok(g.induced(g.neighbors(v)))
}

/// Budgeted, memoised recognition of contractible graphs, spheres and manifolds
/// on induced subgraphs of one host graph.
pub struct Search<'g> {
    host: &'g Graph,
    budget: usize,
    used: usize,
    contractible: HashMap<Vec<usize>, bool>,
    spheres: HashMap<(Vec<usize>, i64), bool>,
}

impl<'g> Search<'g> {
    pub fn new(host: &'g Graph) -> Self {
        Search {
            host,
            budget: DEFAULT_BUDGET,
            used: 0,
            contractible: HashMap::new(),
            spheres: HashMap::new(),
        }
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    /// Search nodes expanded so far.
    pub fn nodes_used(&self) -> usize {
        self.used
    }

    fn all(&self) -> Vec<usize> {
        (0..self.host.n()).collect()
    }

    pub fn is_contractible(&mut self) -> Result<bool> {
        let all = self.all();
        self.contractible_on(&all)
    }

    pub fn is_sphere(&mut self, d: i64) -> Result<bool> {
        if d < -1 {
            return invalid(format!("sphere dimension must be >= -1, got {d}"));
        }
        let all = self.all();
        self.sphere_on(&all, d)
    }

    pub fn is_manifold(&mut self, m: i64) -> Result<bool> {
        Ok(self.manifold_violation(m)?.is_none())
    }

    /// First vertex whose unit sphere is not an `(m-1)`-sphere, if any.
    pub fn manifold_violation(&mut self, m: i64) -> Result<Option<usize>> {
        if m < 0 {
            return invalid(format!("manifold dimension must be >= 0, got {m}"));
        }
        let all = self.all();
        self.violation_on(&all, m)
    }

    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.budget {
            Err(Error::BudgetExhausted(self.budget))
        } else {
            Ok(())
        }
    }

    fn nbhd(&self, w: &[usize], v: usize) -> Vec<usize> {
        intersect(self.host.neighbors(v), w)
    }

    fn contractible_on(&mut self, w: &[usize]) -> Result<bool> {
        match w.len() {
            0 => return Ok(false),
            1 => return Ok(true),
            _ => {}
        }
        if let Some(&hit) = self.contractible.get(w) {
            return Ok(hit);
        }
        self.tick()?;
        let sub = self.host.induced(w);
        // necessary conditions: contractible graphs are connected with χ = 1
        let result = if !sub.is_connected() || sub.euler_characteristic() != 1 {
            false
        } else {
            let mut order: Vec<usize> = (0..w.len()).collect();
            order.sort_by_key(|&i| (sub.degree(i), i));
            let mut found = false;
            for i in order {
                let v = w[i];
                let sphere = self.nbhd(w, v);
                if !self.contractible_on(&sphere)? {
                    continue;
                }
                let rest: Vec<usize> = w.iter().copied().filter(|&u| u != v).collect();
                if self.contractible_on(&rest)? {
                    found = true;
                    break;
                }
            }
            found
        };
        self.contractible.insert(w.to_vec(), result);
        Ok(result)
    }

    fn sphere_on(&mut self, w: &[usize], d: i64) -> Result<bool> {
        if d < -1 {
            return Ok(false);
        }
        if d == -1 {
            return Ok(w.is_empty());
        }
        if w.is_empty() {
            return Ok(false);
        }
        let key = (w.to_vec(), d);
        if let Some(&hit) = self.spheres.get(&key) {
            return Ok(hit);
        }
        self.tick()?;
        let sub = self.host.induced(w);
        let gem = if d % 2 == 0 { 2 } else { 0 };
        let result = if sub.euler_characteristic() != gem || self.violation_on(w, d)?.is_some() {
            false
        } else {
            let mut found = false;
            for &v in w {
                let rest: Vec<usize> = w.iter().copied().filter(|&u| u != v).collect();
                if self.contractible_on(&rest)? {
                    found = true;
                    break;
                }
            }
            found
        };
        self.spheres.insert(key, result);
        Ok(result)
    }

    fn violation_on(&mut self, w: &[usize], m: i64) -> Result<Option<usize>> {
        for &v in w {
            let sphere = self.nbhd(w, v);
            if !self.sphere_on(&sphere, m - 1)? {
                return Ok(Some(v));
            }
        }
        Ok(None)
    }
}

pub fn is_contractible(g: &Graph) -> Result<bool> {
    Search::new(g).is_contractible()
}

pub fn is_sphere(g: &Graph, d: i64) -> Result<bool> {
    Search::new(g).is_sphere(d)
}

pub fn is_manifold(g: &Graph, m: i64) -> Result<bool> {
    Search::new(g).is_manifold(m)
}

/// Per-vertex curvature values; they sum to the Euler characteristic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureVector(pub Vec<Rational64>);

impl CurvatureVector {
    pub fn total(&self) -> Rational64 {
        self.0.iter().copied().sum()
    }
}

/// `K(v) = Σ_k (-1)^k f_{k-1}(S(v)) / (k+1)` with `f_{-1} = 1`.
pub fn curvature(g: &Graph, v: usize) -> Result<Rational64> {
    let sphere = graph_unit_sphere(g, v)?;
    Ok(curvature_from_counts(&sphere.clique_counts()))
}

fn curvature_from_counts(f: &[usize]) -> Rational64 {
    let mut k = Rational64::from_integer(1);
    for (j, &count) in f.iter().enumerate() {
        let term = Rational64::new(count as i64, j as i64 + 2);
        if j % 2 == 0 {
            k -= term;
        } else {
            k += term;
        }
    }
    k
}

pub fn curvatures(g: &Graph) -> CurvatureVector {
    CurvatureVector((0..g.n()).map(|v| curvature(g, v).expect("vertex in range")).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussBonnet {
    pub sum: Rational64,
    pub chi: i64,
    pub ok: bool,
}

pub fn gauss_bonnet(g: &Graph) -> GaussBonnet {
    let sum = curvatures(g).total();
    let chi = g.euler_characteristic();
    GaussBonnet { sum, chi, ok: sum == Rational64::from_integer(chi) }
}
