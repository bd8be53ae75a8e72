//! Finite simple graphs whose vertices are labeled by primes.
//!
//! Equality is label equality: two graphs are equal when they have the same
//! vertex labels and the same edges between them. Vertices are kept sorted, so
//! index `i` always refers to the `i`-th smallest prime.

mod holes;
mod solve;

use std::collections::BTreeSet;
use std::fmt;

use crate::arith::{is_prime, Integer};
use crate::error::{Error, Result};

pub use holes::{
    find_odd_antihole, find_odd_hole, is_perfect, HoleCertificate, HoleKind, Perfection,
};
pub use solve::{
    chromatic_number, clique_number, independence_number, is_perfect_by_definition, maximum_clique,
    maximum_independent_set, ColoringResult, ORACLE_CAP, SOLVER_CAP,
};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PrimeGraphOf<T: Integer> {
    vertices: Vec<T>,
    // Row-major n x n adjacency matrix over vertex indices.
    adj: Vec<bool>,
}

impl<T: Integer> PrimeGraphOf<T> {
    /// Builds a graph, rejecting non-prime labels, loops and edges to unknown vertices.
    /// Repeated vertices and edges collapse.
    pub fn new(
        vertices: impl IntoIterator<Item = T>,
        edges: impl IntoIterator<Item = (T, T)>,
    ) -> Result<Self> {
        let vertices: BTreeSet<T> = vertices.into_iter().collect();
        if let Some(bad) = vertices.iter().find(|&&v| !is_prime(v)) {
            return Err(Error::Validation(format!(
                "vertex label {bad} is not prime"
            )));
        }
        let mut g = Self::empty(vertices);
        for (a, b) in edges {
            if a == b {
                return Err(Error::Validation(format!("self-loop on {a}")));
            }
            let (i, j) = match (g.index_of(a), g.index_of(b)) {
                (Some(i), Some(j)) => (i, j),
                _ => {
                    return Err(Error::Validation(format!(
                        "edge {a}-{b} references a vertex outside the graph"
                    )))
                }
            };
            g.link(i, j);
        }
        Ok(g)
    }

    /// Graph on the given vertices with no edges. Labels are not checked for primality.
    pub(crate) fn empty(vertices: impl IntoIterator<Item = T>) -> Self {
        let vertices: Vec<T> = vertices
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let n = vertices.len();
        PrimeGraphOf {
            vertices,
            adj: vec![false; n * n],
        }
    }

    /// Edgeless graph on primes.
    pub fn edgeless(vertices: impl IntoIterator<Item = T>) -> Result<Self> {
        Self::new(vertices, std::iter::empty())
    }

    /// Complete graph on primes.
    pub fn complete(vertices: impl IntoIterator<Item = T>) -> Result<Self> {
        Ok(Self::edgeless(vertices)?.complement())
    }

    /// Induced cycle `v0 - v1 - ... - v(k-1) - v0`, for test fixtures and examples.
    pub fn cycle(order: &[T]) -> Result<Self> {
        let k = order.len();
        let edges = (0..k).map(|i| (order[i], order[(i + 1) % k]));
        if k < 3 {
            return Err(Error::Domain(format!(
                "a cycle needs at least 3 vertices, got {k}"
            )));
        }
        Self::new(order.iter().copied(), edges)
    }

    pub(crate) fn link(&mut self, i: usize, j: usize) {
        let n = self.order();
        self.adj[i * n + j] = true;
        self.adj[j * n + i] = true;
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().filter(|&&e| e).count() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Vertex labels, ascending.
    pub fn vertices(&self) -> &[T] {
        &self.vertices
    }

    pub fn contains(&self, v: T) -> bool {
        self.index_of(v).is_some()
    }

    pub fn index_of(&self, v: T) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    #[inline]
    pub(crate) fn adjacent_idx(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.order() + j]
    }

    pub fn has_edge(&self, a: T, b: T) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.adjacent_idx(i, j),
            _ => false,
        }
    }

    /// Edges as `(smaller, larger)` pairs in lexicographic order.
    pub fn edges(&self) -> Vec<(T, T)> {
        let n = self.order();
        let mut out = Vec::with_capacity(self.size());
        for i in 0..n {
            for j in i + 1..n {
                if self.adjacent_idx(i, j) {
                    out.push((self.vertices[i], self.vertices[j]));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, v: T) -> Vec<T> {
        let Some(i) = self.index_of(v) else {
            return Vec::new();
        };
        (0..self.order())
            .filter(|&j| self.adjacent_idx(i, j))
            .map(|j| self.vertices[j])
            .collect()
    }

    /// Same vertices; distinct vertices adjacent iff they were not.
    pub fn complement(&self) -> Self {
        let n = self.order();
        let mut adj = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                adj[i * n + j] = i != j && !self.adjacent_idx(i, j);
            }
        }
        PrimeGraphOf {
            vertices: self.vertices.clone(),
            adj,
        }
    }

    /// Induced subgraph on `subset`, which must lie inside the vertex set.
    pub fn induced(&self, subset: &[T]) -> Result<Self> {
        let missing: BTreeSet<T> = subset
            .iter()
            .copied()
            .filter(|&v| !self.contains(v))
            .collect();
        if !missing.is_empty() {
            let names: Vec<String> = missing.iter().map(|p| p.to_string()).collect();
            return Err(Error::Domain(format!(
                "primes {{{}}} are not vertices of the graph",
                names.join(", ")
            )));
        }
        let mut g = Self::empty(subset.iter().copied());
        let n = g.order();
        let idx: Vec<usize> = g
            .vertices
            .iter()
            .map(|&v| self.index_of(v).unwrap())
            .collect();
        for a in 0..n {
            for b in a + 1..n {
                if self.adjacent_idx(idx[a], idx[b]) {
                    g.link(a, b);
                }
            }
        }
        Ok(g)
    }

    fn overlay(&self, other: &Self, connect_across: bool) -> Result<Self> {
        let shared: Vec<String> = self
            .vertices
            .iter()
            .filter(|&&v| other.contains(v))
            .map(|v| v.to_string())
            .collect();
        if !shared.is_empty() {
            return Err(Error::Domain(format!(
                "vertex sets overlap on {{{}}}",
                shared.join(", ")
            )));
        }
        let mut g = Self::empty(self.vertices.iter().chain(other.vertices.iter()).copied());
        for part in [self, other] {
            for (a, b) in part.edges() {
                let (i, j) = (g.index_of(a).unwrap(), g.index_of(b).unwrap());
                g.link(i, j);
            }
        }
        if connect_across {
            for &a in &self.vertices {
                for &b in &other.vertices {
                    let (i, j) = (g.index_of(a).unwrap(), g.index_of(b).unwrap());
                    g.link(i, j);
                }
            }
        }
        Ok(g)
    }

    /// The join: both graphs side by side plus every edge between them.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.overlay(other, true)
    }

    /// Both graphs side by side with no edges between them.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        self.overlay(other, false)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<T>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(i) = stack.pop() {
                comp.push(self.vertices[i]);
                for j in 0..n {
                    if !seen[j] && self.adjacent_idx(i, j) {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    /// True when every pair of distinct vertices in `set` is adjacent.
    pub fn is_clique(&self, set: &[T]) -> bool {
        set.iter()
            .enumerate()
            .all(|(k, &a)| set[k + 1..].iter().all(|&b| a != b && self.has_edge(a, b)))
    }

    /// True when no two vertices of `set` are adjacent.
    pub fn is_independent(&self, set: &[T]) -> bool {
        set.iter()
            .enumerate()
            .all(|(k, &a)| set[k + 1..].iter().all(|&b| !self.has_edge(a, b)))
    }
}

impl<T: Integer> fmt::Debug for PrimeGraphOf<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PrimeGraph")
            .field("vertices", &self.vertices)
            .field("edges", &self.edges())
            .finish()
    }
}
