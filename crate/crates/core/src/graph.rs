//! Simple undirected graphs on at most [`MAX_ORDER`] vertices.
//!
//! Each vertex owns one `u64` neighbor row, so set operations over
//! neighborhoods are single machine-word instructions.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported order. Matches the single-byte graph6 header.
pub const MAX_ORDER: usize = 62;

/// Bitset of vertices.
pub type VertexSet = u64;

#[inline]
pub(crate) const fn bit(v: usize) -> VertexSet {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub const fn full_set(n: usize) -> VertexSet {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the members of a vertex bitset, lowest first.
#[derive(Clone, Copy)]
pub struct Members(VertexSet);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

#[inline]
pub fn members(set: VertexSet) -> Members {
    Members(set)
}

/// An undirected simple graph with vertices `0..n`.
///
/// Adjacency is symmetric and loop-free; every mutating method keeps it so.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// The null graph (no vertices).
    pub fn null() -> Self {
        Graph { n: 0, adj: Vec::new() }
    }

    /// Complete graph `K_m`.
    pub fn complete(m: usize) -> Result<Self> {
        let mut g = Graph::new(m)?;
        let all = full_set(m);
        for v in 0..m {
            g.adj[v] = all & !bit(v);
        }
        Ok(g)
    }

    /// Edgeless graph on `m` vertices, the complement of `K_m`.
    pub fn empty_graph(m: usize) -> Result<Self> {
        Graph::new(m)
    }

    /// Path on `m` vertices, `0 - 1 - ... - (m-1)`.
    pub fn path(m: usize) -> Result<Self> {
        let mut g = Graph::new(m)?;
        for v in 1..m {
            g.add_edge(v - 1, v)?;
        }
        Ok(g)
    }

    /// Cycle on `m >= 3` vertices.
    pub fn cycle(m: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::InvalidParams(format!("cycle needs at least 3 vertices, got {m}")));
        }
        let mut g = Graph::path(m)?;
        g.add_edge(0, m - 1)?;
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, validating every invariant.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        let g = Graph { n, adj };
        g.check_invariants()?;
        Ok(g)
    }

    /// Builds the graph whose edges are the set bits of `mask`, using the
    /// graph6 pair order `(0,1), (0,2), (1,2), (0,3), ...`.
    pub fn from_edge_mask(n: usize, mask: u64) -> Self {
        debug_assert!(n <= 11, "edge mask holds at most C(11,2) pairs");
        let mut adj = vec![0; n];
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> idx & 1 == 1 {
                    adj[i] |= bit(j);
                    adj[j] |= bit(i);
                }
                idx += 1;
            }
        }
        Graph { n, adj }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn is_null(&self) -> bool {
        self.n == 0
    }

    /// Set of all vertices.
    #[inline]
    pub fn vertex_set(&self) -> VertexSet {
        full_set(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, order: self.n })
        } else {
            Ok(())
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidParams(format!("loop at vertex {u}")));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
        Ok(())
    }

    /// Copy of the graph with edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    /// Edges as `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in members(self.adj[u] & !full_set(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Non-adjacent pairs `(u, v)` with `u < v` in lexicographic order.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let all = self.vertex_set();
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in members(all & !self.adj[u] & !full_set(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Subgraph induced by `keep`, relabeled so that kept vertices retain
    /// their relative order. Returns the graph and the old ids of its vertices.
    pub fn induced(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let keep = keep & self.vertex_set();
        let old_ids: Vec<usize> = members(keep).collect();
        let mut new_id = [usize::MAX; 64];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let adj = old_ids
            .iter()
            .map(|&v| members(self.adj[v] & keep).fold(0, |acc, w| acc | bit(new_id[w])))
            .collect();
        (Graph { n: old_ids.len(), adj }, old_ids)
    }

    /// The graph with vertex `v` deleted (remaining vertices shift down).
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.induced(self.vertex_set() & !bit(v)).0)
    }

    pub fn remove_vertices(&self, gone: VertexSet) -> Graph {
        self.induced(self.vertex_set() & !gone).0
    }

    /// Disjoint union `g + h`; `h`'s vertices are placed after `g`'s.
    pub fn disjoint_union(&self, h: &Graph) -> Result<Graph> {
        let n = self.n + h.n;
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(h.adj.iter().map(|row| row << self.n));
        Ok(Graph { n, adj })
    }

    /// Join `g ∨ h`: disjoint union plus every edge between the two sides.
    pub fn join(&self, h: &Graph) -> Result<Graph> {
        let mut out = self.disjoint_union(h)?;
        let left = self.vertex_set();
        let right = h.vertex_set() << self.n;
        for v in 0..self.n {
            out.adj[v] |= right;
        }
        for v in self.n..out.n {
            out.adj[v] |= left;
        }
        Ok(out)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_set();
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !bit(v)).collect();
        Graph { n: self.n, adj }
    }

    /// Checks symmetry, loop-freeness and that no bit lies outside `0..n`.
    pub fn check_invariants(&self) -> Result<()> {
        let all = self.vertex_set();
        for v in 0..self.n {
            let row = self.adj[v];
            if row & !all != 0 {
                return Err(Error::InvalidParams(format!("vertex {v} has neighbors outside 0..{}", self.n)));
            }
            if row & bit(v) != 0 {
                return Err(Error::InvalidParams(format!("loop at vertex {v}")));
            }
            for w in members(row) {
                if self.adj[w] & bit(v) == 0 {
                    return Err(Error::InvalidParams(format!("asymmetric adjacency between {v} and {w}")));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::graph6::to_graph6(self))
    }
}
