//! Vertex colorings and their level sets.
//!
//! A coloring takes the values `0..=k`. Its level set is the set of host
//! simplices on which every value occurs. The level set is open (closed under
//! taking larger simplices) and is realized as the containment graph on its
//! members, an induced subgraph of the refinement graph of the host. On an
//! `m`-manifold host a nonempty level set is an `(m - k)`-manifold.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, HashMap};
use std::hash::{Hash, Hasher};
use std::sync::{Mutex, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{Complex, Simplex, VertexId};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::spectral::exact::betti_modular;
use crate::topology::{gauss_bonnet, Search};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coloring {
    values: BTreeMap<VertexId, u32>,
    k: u32,
    seed: Option<u64>,
}

impl Coloring {
    pub fn new(values: BTreeMap<VertexId, u32>, k: u32) -> Result<Self> {
        if let Some((v, x)) = values.iter().find(|(_, &x)| x > k) {
            return invalid(format!("vertex {v} has value {x} outside 0..={k}"));
        }
        Ok(Coloring { values, k, seed: None })
    }

    pub fn constant(c: &Complex, value: u32, k: u32) -> Result<Self> {
        Coloring::new(c.vertices().into_iter().map(|v| (v, value)).collect(), k)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn value(&self, v: VertexId) -> Option<u32> {
        self.values.get(&v).copied()
    }

    pub fn values(&self) -> &BTreeMap<VertexId, u32> {
        &self.values
    }
}

/// Independent uniform values in `0..=k` from ChaCha8 seeded with `seed`.
pub fn random_coloring(c: &Complex, k: u32, seed: u64) -> Coloring {
    random_coloring_stream(c, k, seed, 0)
}

/// As [`random_coloring`], drawing from substream `stream` of the seed.
/// Sample `i` of a batch uses stream `i`, so results do not depend on the
/// number of worker threads.
pub fn random_coloring_stream(c: &Complex, k: u32, seed: u64, stream: u64) -> Coloring {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let values = c.vertices().into_iter().map(|v| (v, rng.gen_range(0..=k))).collect();
    Coloring { values, k, seed: Some(seed) }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LevelSet {
    /// Members in canonical order.
    pub simplices: Vec<Simplex>,
    /// Vertex `i` is `simplices[i]`; edges join strictly nested members.
    pub graph: Graph,
}

impl LevelSet {
    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// `Σ (-1)^{dim x}` over the members.
    pub fn open_euler_characteristic(&self) -> i64 {
        self.simplices.iter().map(|s| if s.dim() % 2 == 0 { 1 } else { -1 }).sum()
    }

    pub fn complex(&self) -> Complex {
        Complex::whitney(&self.graph)
    }
}

pub fn level_set(c: &Complex, f: &Coloring) -> Result<LevelSet> {
    let colors = (f.k + 1) as usize;
    let mut simplices = Vec::new();
    for s in c.simplices() {
        if s.len() < colors {
            continue;
        }
        let mut seen = vec![false; colors];
        for &v in s.vertices() {
            let x = f.value(v).ok_or_else(|| Error::InvalidInput(format!("vertex {v} has no value")))?;
            seen[x as usize] = true;
        }
        if seen.iter().all(|&b| b) {
            simplices.push(s.clone());
        }
    }
    // every vertex must be colored even if it lies in no member
    if let Some(v) = c.vertices().into_iter().find(|&v| f.value(v).is_none()) {
        return invalid(format!("vertex {v} has no value"));
    }
    let position: HashMap<&Simplex, usize> = simplices.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut edges = Vec::new();
    for (i, s) in simplices.iter().enumerate() {
        for sub in s.subsets().filter(|t| t.len() < s.len()) {
            if let Some(&j) = position.get(&sub) {
                edges.push((j, i));
            }
        }
    }
    let graph = Graph::new(simplices.len(), edges)?;
    Ok(LevelSet { simplices, graph })
}

/// The graph on which manifold properties of a complex are decided: its
/// 1-skeleton when the complex is flag, its refinement graph otherwise.
pub fn verification_graph(c: &Complex) -> Graph {
    if c.is_flag() {
        c.skeleton_graph().0
    } else {
        c.to_graph()
    }
}

fn host_cache() -> &'static Mutex<HashMap<(u64, i64), bool>> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, i64), bool>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn complex_key(c: &Complex) -> u64 {
    let mut h = DefaultHasher::new();
    c.simplices().hash(&mut h);
    h.finish()
}

/// Whether `c` is an `m`-manifold; the answer is remembered per complex.
pub fn host_is_manifold(c: &Complex, m: i64) -> Result<bool> {
    let key = (complex_key(c), m);
    if let Some(&hit) = host_cache().lock().expect("cache lock").get(&key) {
        return Ok(hit);
    }
    let g = verification_graph(c);
    let ok = Search::new(&g).is_manifold(m)?;
    host_cache().lock().expect("cache lock").insert(key, ok);
    Ok(ok)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum InterfaceReport {
    Empty,
    Manifold {
        dim: i64,
        f_vector: Vec<usize>,
        betti: Vec<usize>,
        chi: i64,
        chi_open: i64,
        gauss_bonnet_ok: bool,
    },
    Violation {
        dim: i64,
        witness: Vec<VertexId>,
    },
}

impl InterfaceReport {
    pub fn is_violation(&self) -> bool {
        matches!(self, InterfaceReport::Violation { .. })
    }
}

/// Checks that the level set of `f` in the `m`-manifold `c` is an
/// `(m - k)`-manifold, where `k = f.k()` is the codimension.
pub fn verify_interface(c: &Complex, f: &Coloring, m: i64) -> Result<InterfaceReport> {
    verify_interface_with_budget(c, f, m, crate::topology::DEFAULT_BUDGET)
}

pub fn verify_interface_with_budget(c: &Complex, f: &Coloring, m: i64, budget: usize) -> Result<InterfaceReport> {
    let k = f.k as i64;
    if k > m {
        return invalid(format!("codimension {k} exceeds host dimension {m}"));
    }
    if !host_is_manifold(c, m)? {
        return invalid(format!("host is not a {m}-manifold"));
    }
    let h = level_set(c, f)?;
    if h.is_empty() {
        return Ok(InterfaceReport::Empty);
    }
    let dim = m - k;
    if let Some(v) = Search::new(&h.graph).with_budget(budget).manifold_violation(dim)? {
        return Ok(InterfaceReport::Violation { dim, witness: h.simplices[v].vertices().to_vec() });
    }
    let whitney = h.complex();
    let gb = gauss_bonnet(&h.graph);
    Ok(InterfaceReport::Manifold {
        dim,
        f_vector: whitney.f_vector().0,
        betti: betti_modular(&whitney),
        chi: gb.chi,
        chi_open: h.open_euler_characteristic(),
        gauss_bonnet_ok: gb.ok,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SampleRecord {
    pub seed: u64,
    pub sample: u64,
    pub empty: bool,
    pub f_vector: Vec<usize>,
    pub betti: Vec<usize>,
    pub chi: i64,
    pub chi_open: i64,
    pub gauss_bonnet_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BettiStatistics {
    pub samples: usize,
    pub empty: usize,
    pub mean_betti: Vec<f64>,
    pub records: Vec<SampleRecord>,
}

pub fn sample_record(c: &Complex, k: u32, seed: u64, sample: u64) -> Result<SampleRecord> {
    let f = random_coloring_stream(c, k, seed, sample);
    let h = level_set(c, &f)?;
    let whitney = h.complex();
    let gb = gauss_bonnet(&h.graph);
    Ok(SampleRecord {
        seed,
        sample,
        empty: h.is_empty(),
        f_vector: whitney.f_vector().0,
        betti: betti_modular(&whitney),
        chi: gb.chi,
        chi_open: h.open_euler_characteristic(),
        gauss_bonnet_ok: gb.ok,
    })
}

/// Mean Betti vector of the level sets of `samples` random colorings; an
/// empty level set contributes the zero vector.
pub fn betti_statistics(c: &Complex, k: u32, samples: usize, seed: u64) -> Result<BettiStatistics> {
    if samples == 0 {
        return invalid("need at least one sample");
    }
    let records = (0..samples as u64)
        .into_par_iter()
        .map(|i| sample_record(c, k, seed, i))
        .collect::<Result<Vec<_>>>()?;
    let width = records.iter().map(|r| r.betti.len()).max().unwrap_or(0);
    let mut mean_betti = vec![0.0; width];
    for r in &records {
        for (acc, &b) in mean_betti.iter_mut().zip(&r.betti) {
            *acc += b as f64;
        }
    }
    for acc in &mut mean_betti {
        *acc /= samples as f64;
    }
    Ok(BettiStatistics {
        samples,
        empty: records.iter().filter(|r| r.empty).count(),
        mean_betti,
        records,
    })
}
