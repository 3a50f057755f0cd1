//! Finite simple graphs and clique enumeration.
//!
//! Vertices are `0..n`. Adjacency lists are kept sorted so that neighbourhood
//! intersections (the inner loop of every clique search) are linear merges.

use std::collections::BTreeSet;

use crate::error::{invalid, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate edges are merged; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut sets = vec![BTreeSet::new(); n];
        for (a, b) in edges {
            if a >= n || b >= n {
                return invalid(format!("edge ({a},{b}) out of range for {n} vertices"));
            }
            if a == b {
                return invalid(format!("self-loop at vertex {a}"));
            }
            sets[a].insert(b);
            sets[b].insert(a);
        }
        Ok(Graph { adj: sets.into_iter().map(|s| s.into_iter().collect()).collect() })
    }

    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    pub fn complete(n: usize) -> Self {
        Graph { adj: (0..n).map(|v| (0..n).filter(|&w| w != v).collect()).collect() }
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return invalid(format!("cycle graph needs at least 3 vertices, got {n}"));
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    /// Complete multipartite graph with the given part sizes. `K_{2,2,2}` is
    /// the octahedron graph.
    pub fn complete_multipartite(parts: &[usize]) -> Self {
        let mut part_of = Vec::new();
        for (p, &size) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(p, size));
        }
        let n = part_of.len();
        let edges = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| part_of[a] != part_of[b]);
        Graph::new(n, edges).expect("multipartite edges are valid")
    }

    /// Graph join: disjoint union plus every edge between the two parts.
    /// Vertices of `other` are shifted by `self.n()`.
    pub fn join(&self, other: &Graph) -> Graph {
        let n = self.n();
        let m = other.n();
        let mut edges: Vec<(usize, usize)> = self.edges();
        edges.extend(other.edges().into_iter().map(|(a, b)| (a + n, b + n)));
        for a in 0..n {
            for b in 0..m {
                edges.push((a, n + b));
            }
        }
        Graph::new(n + m, edges).expect("join edges are valid")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(a, nb)| nb.iter().filter(move |&&b| b > a).map(move |&b| (a, b)))
            .collect()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n() && self.adj[a].binary_search(&b).is_ok()
    }

    /// Subgraph induced on `vertices` (which must be distinct). Vertex `i` of
    /// the result corresponds to `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut nb: Vec<usize> =
                    self.adj[v].iter().map(|&w| index[w]).filter(|&i| i != usize::MAX).collect();
                nb.sort_unstable();
                nb
            })
            .collect();
        Graph { adj }
    }

    pub fn without_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n()).filter(|&w| w != v).collect();
        self.induced(&keep)
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n()
    }

    /// Maximal cliques via Bron–Kerbosch with Tomita pivoting. Each clique is
    /// sorted; the list is sorted.
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if self.n() == 0 {
            return out;
        }
        let mut r = Vec::new();
        let p: Vec<usize> = (0..self.n()).collect();
        self.bron_kerbosch(&mut r, p, Vec::new(), &mut out);
        for c in &mut out {
            c.sort_unstable();
        }
        out.sort();
        out
    }

    fn bron_kerbosch(
        &self,
        r: &mut Vec<usize>,
        mut p: Vec<usize>,
        mut x: Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r.clone());
            }
            return;
        }
        // pivot maximising |P ∩ N(u)|
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| intersect(&p, &self.adj[u]).len())
            .expect("p is non-empty");
        let candidates: Vec<usize> =
            p.iter().copied().filter(|v| self.adj[pivot].binary_search(v).is_err()).collect();
        for v in candidates {
            let nb = &self.adj[v];
            r.push(v);
            self.bron_kerbosch(r, intersect(&p, nb), intersect(&x, nb), out);
            r.pop();
            p.retain(|&w| w != v);
            let pos = x.binary_search(&v).unwrap_or_else(|e| e);
            x.insert(pos, v);
        }
    }

    /// Number of cliques of each size: entry `k` counts `K_{k+1}` subgraphs.
    /// This is the f-vector of the Whitney complex, computed without building it.
    pub fn clique_counts(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for v in 0..self.n() {
            let higher: Vec<usize> = self.adj[v].iter().copied().filter(|&w| w > v).collect();
            self.count_extensions(1, &higher, &mut counts);
        }
        counts
    }

    fn count_extensions(&self, size: usize, candidates: &[usize], counts: &mut Vec<usize>) {
        if counts.len() < size {
            counts.resize(size, 0);
        }
        counts[size - 1] += 1;
        for (i, &w) in candidates.iter().enumerate() {
            let next = intersect(&candidates[i + 1..], &self.adj[w]);
            self.count_extensions(size + 1, &next, counts);
        }
    }

    /// Euler characteristic of the Whitney complex.
    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.clique_counts())
    }
}

pub(crate) fn alternating_sum(counts: &[usize]) -> i64 {
    counts
        .iter()
        .enumerate()
        .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum()
}

/// Intersection of two sorted slices.
pub(crate) fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len().min(b.len()));
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_self_loops_and_bad_ids() {
        assert!(Graph::new(3, [(1, 1)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
        assert_eq!(Graph::new(3, [(0, 1), (1, 0)]).unwrap().edge_count(), 1);
    }

    #[test]
    fn clique_counts_of_small_graphs() {
        assert_eq!(Graph::complete(4).clique_counts(), vec![4, 6, 4, 1]);
        assert_eq!(Graph::cycle(4).unwrap().clique_counts(), vec![4, 4]);
        assert_eq!(Graph::complete_multipartite(&[2, 2, 2]).clique_counts(), vec![6, 12, 8]);
        assert!(Graph::empty(0).clique_counts().is_empty());
    }

    #[test]
    fn maximal_cliques_of_octahedron_are_its_eight_faces() {
        let oct = Graph::complete_multipartite(&[2, 2, 2]);
        let cliques = oct.maximal_cliques();
        assert_eq!(cliques.len(), 8);
        assert!(cliques.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn maximal_cliques_include_isolated_vertices() {
        let g = Graph::new(4, [(0, 1)]).unwrap();
        assert_eq!(g.maximal_cliques(), vec![vec![0, 1], vec![2], vec![3]]);
    }

    #[test]
    fn join_of_two_zero_spheres_is_c4() {
        let s0 = Graph::empty(2);
        let j = s0.join(&s0);
        assert_eq!(j.edge_count(), 4);
        assert!((0..4).all(|v| j.degree(v) == 2));
    }

    #[test]
    fn induced_subgraph_relabels() {
        let c5 = Graph::cycle(5).unwrap();
        let h = c5.induced(&[1, 2, 4]);
        assert_eq!(h.edges(), vec![(0, 1)]);
        assert!(c5.without_vertex(0).is_connected());
    }
}
