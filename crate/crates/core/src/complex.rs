//! Finite abstract simplicial complexes.
//!
//! A [`Complex`] stores its simplices in canonical order: by dimension, then
//! lexicographically on the sorted vertex lists. Every matrix built from a
//! complex indexes its rows by this order, so block offsets and incidence
//! signs are reproducible.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

pub type VertexId = u32;

/// A non-empty, strictly increasing list of vertex ids.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Simplex(Vec<VertexId>);

impl Simplex {
    pub fn new(vertices: impl IntoIterator<Item = VertexId>) -> Result<Self> {
        let mut v: Vec<VertexId> = vertices.into_iter().collect();
        if v.is_empty() {
            return invalid("simplex must be non-empty");
        }
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return invalid(format!("simplex {v:?} repeats a vertex"));
        }
        Ok(Simplex(v))
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// `self ⊆ other`
    pub fn is_subset_of(&self, other: &Simplex) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|v| it.any(|w| w == v))
    }

    /// The codimension-one face obtained by dropping the vertex at `index`.
    pub fn face(&self, index: usize) -> Option<Simplex> {
        if self.0.len() < 2 || index >= self.0.len() {
            return None;
        }
        let mut v = self.0.clone();
        v.remove(index);
        Some(Simplex(v))
    }

    /// Non-empty subsets selected by the bits of `mask` (bit `i` keeps vertex `i`).
    fn subset(&self, mask: u64) -> Simplex {
        Simplex(
            self.0.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect(),
        )
    }

    /// All non-empty subsets, including the simplex itself.
    pub fn subsets(&self) -> impl Iterator<Item = Simplex> + '_ {
        let full = (1u64 << self.0.len()) - 1;
        (1..=full).map(move |m| self.subset(m))
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Simplex counts per dimension, `f_0 .. f_q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    pub fn euler_characteristic(&self) -> i64 {
        crate::graph::alternating_sum(&self.0)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

/// A finite abstract simplicial complex in canonical order. Immutable once built.
#[derive(Clone)]
pub struct Complex {
    simplices: Vec<Simplex>,
    index: HashMap<Simplex, usize>,
    offsets: Vec<usize>,
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.simplices == other.simplices
    }
}

impl Eq for Complex {}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.simplices).finish()
    }
}

impl Complex {
    /// Builds a complex from a list that must already be closed under taking faces.
    /// Duplicates are merged.
    pub fn from_simplices(simplices: impl IntoIterator<Item = Simplex>) -> Result<Self> {
        let c = Self::from_set(simplices.into_iter().collect());
        c.check_closed()?;
        Ok(c)
    }

    fn from_set(set: BTreeSet<Simplex>) -> Self {
        let simplices: Vec<Simplex> = set.into_iter().collect();
        Self::from_sorted(simplices)
    }

    fn from_sorted(simplices: Vec<Simplex>) -> Self {
        let index = simplices.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let mut offsets = vec![0];
        for (i, s) in simplices.iter().enumerate() {
            while offsets.len() <= s.dim() {
                offsets.push(i);
            }
        }
        if !simplices.is_empty() {
            offsets.push(simplices.len());
        }
        Complex { simplices, index, offsets }
    }

    fn check_closed(&self) -> Result<()> {
        for s in &self.simplices {
            for j in 0..s.len() {
                if let Some(face) = s.face(j) {
                    if !self.index.contains_key(&face) {
                        return Err(Error::NotClosed {
                            simplex: s.0.clone(),
                            face: face.0,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Downward closure of a list of facets.
    pub fn generate<I, F>(facets: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = VertexId>,
    {
        let mut set = BTreeSet::new();
        for facet in facets {
            let s = Simplex::new(facet)?;
            if s.len() > 63 {
                return invalid("facets with more than 63 vertices are not supported");
            }
            set.extend(s.subsets());
        }
        Ok(Self::from_set(set))
    }

    /// Whitney (clique) complex. Vertex `v` of the graph becomes id `v`.
    pub fn whitney(g: &Graph) -> Self {
        let cliques = g.maximal_cliques();
        Self::generate(cliques.into_iter().map(|c| c.into_iter().map(|v| v as VertexId)))
            .expect("cliques are non-empty sets")
    }

    pub fn empty() -> Self {
        Self::from_sorted(Vec::new())
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Maximal simplex dimension; `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.last().map(Simplex::dim)
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index.contains_key(s)
    }

    /// Block boundaries `b_0 = 0 < b_1 < ... < b_{q+1} = n`.
    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    /// Simplices of dimension `k`.
    pub fn simplices_of_dim(&self, k: usize) -> &[Simplex] {
        if k + 1 >= self.offsets.len() {
            return &[];
        }
        &self.simplices[self.offsets[k]..self.offsets[k + 1]]
    }

    pub fn vertices(&self) -> Vec<VertexId> {
        self.simplices_of_dim(0).iter().map(|s| s.0[0]).collect()
    }

    pub fn f_vector(&self) -> FVector {
        FVector(self.offsets.windows(2).map(|w| w[1] - w[0]).collect())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler_characteristic()
    }

    pub fn skeleton(&self, k: usize) -> Complex {
        let end = self.offsets.get(k + 1).copied().unwrap_or(self.simplices.len());
        Self::from_sorted(self.simplices[..end].to_vec())
    }

    /// Join `A ∪ B ∪ {x ∪ y}`; the ids of `other` are shifted by `max id of self + 1`.
    pub fn join(&self, other: &Complex) -> Complex {
        let shift = self.vertices().last().map_or(0, |&m| m + 1);
        let b: Vec<Simplex> = other
            .simplices
            .iter()
            .map(|s| Simplex(s.0.iter().map(|&v| v + shift).collect()))
            .collect();
        let mut set: BTreeSet<Simplex> = self.simplices.iter().cloned().collect();
        set.extend(b.iter().cloned());
        for x in &self.simplices {
            for y in &b {
                let mut v = x.0.clone();
                v.extend_from_slice(&y.0);
                set.insert(Simplex(v));
            }
        }
        Self::from_set(set)
    }

    /// For each simplex, the canonical indices of all its non-empty subsets,
    /// addressed by bitmask.
    fn subset_indices(&self, s: &Simplex) -> Vec<usize> {
        let full = 1usize << s.len();
        let mut idx = vec![usize::MAX; full];
        for m in 1..full {
            idx[m] = self.index[&s.subset(m as u64)];
        }
        idx
    }

    /// Containment graph: one vertex per simplex (canonical index), an edge
    /// whenever one simplex strictly contains the other.
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for (i, s) in self.simplices.iter().enumerate() {
            let idx = self.subset_indices(s);
            let full = idx.len() - 1;
            for m in 1..full {
                edges.push((idx[m], i));
            }
        }
        Graph::new(self.simplices.len(), edges).expect("containment edges are valid")
    }

    /// Graph on the vertices (in canonical order) with the 1-simplices as edges,
    /// together with the vertex ids.
    pub fn skeleton_graph(&self) -> (Graph, Vec<VertexId>) {
        let ids = self.vertices();
        let pos: HashMap<VertexId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges = self.simplices_of_dim(1).iter().map(|e| (pos[&e.0[0]], pos[&e.0[1]]));
        (Graph::new(ids.len(), edges).expect("skeleton edges are valid"), ids)
    }

    /// True when the complex is the Whitney complex of its 1-skeleton.
    pub fn is_flag(&self) -> bool {
        let (g, _) = self.skeleton_graph();
        g.clique_counts() == self.f_vector().0
    }

    /// Barycentric refinement: the complex of chains `x_0 ⊂ x_1 ⊂ ...` of the
    /// containment poset. Vertex ids are canonical indices into `self`.
    pub fn barycentric_refine(&self) -> Complex {
        let mut chains: Vec<Simplex> = Vec::new();
        let mut chain = Vec::new();
        for s in &self.simplices {
            let idx = self.subset_indices(s);
            let full = idx.len() - 1;
            chain.clear();
            collect_chains(full, &idx, &mut chain, &mut chains);
        }
        chains.sort_unstable();
        Self::from_sorted(chains)
    }
}

/// Emits every chain whose largest element is `mask`, appending to `chain`.
fn collect_chains(mask: usize, idx: &[usize], chain: &mut Vec<VertexId>, out: &mut Vec<Simplex>) {
    chain.push(idx[mask] as VertexId);
    let mut sorted = chain.clone();
    sorted.sort_unstable();
    out.push(Simplex(sorted));
    // proper non-empty submasks
    let mut sub = (mask - 1) & mask;
    while sub > 0 {
        collect_chains(sub, idx, chain, out);
        sub = (sub - 1) & mask;
    }
    chain.pop();
}

/// Stirling numbers of the second kind `S(n, k)` for `0 <= n, k <= size`.
fn stirling2_table(size: usize) -> Vec<Vec<u128>> {
    let mut s = vec![vec![0u128; size + 1]; size + 1];
    s[0][0] = 1;
    for n in 1..=size {
        for k in 1..=n {
            s[n][k] = (k as u128) * s[n - 1][k] + s[n - 1][k - 1];
        }
    }
    s
}

/// The upper-triangular matrix `A` with `f(G_1) = A · f(G)` for every complex
/// of dimension at most `q`: entry `(i, j)` (0-based) is `S(j+1, i+1) · (i+1)!`,
/// the number of `i`-chains topped by a fixed `j`-simplex.
pub fn stirling_refinement_matrix(q: i64) -> Result<Vec<Vec<u128>>> {
    if q < 0 {
        return invalid(format!("refinement matrix needs q >= 0, got {q}"));
    }
    let q = q as usize;
    if q > 25 {
        return invalid("refinement matrix entries overflow beyond q = 25");
    }
    let s = stirling2_table(q + 1);
    let mut fact = 1u128;
    let mut a = vec![vec![0u128; q + 1]; q + 1];
    for i in 0..=q {
        fact *= (i + 1) as u128;
        for j in i..=q {
            a[i][j] = s[j + 1][i + 1] * fact;
        }
    }
    Ok(a)
}

/// Applies the refinement matrix to an f-vector.
pub fn refine_f_vector(f: &FVector) -> Result<Vec<u128>> {
    let q = f.0.len() as i64 - 1;
    if q < 0 {
        return Ok(Vec::new());
    }
    let a = stirling_refinement_matrix(q)?;
    Ok(a.iter().map(|row| row.iter().zip(&f.0).map(|(&x, &y)| x * y as u128).sum()).collect())
}
