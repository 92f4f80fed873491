//! Undirected simple graphs on dense vertex indices `0..n`, stored as one
//! adjacency bitset row per vertex (multiple u64 words per row when n > 64).

mod coloring;
pub mod generate;
mod io;
mod subgraph;

pub use coloring::{chromatic_number, clique_number, greedy_color_classes};
pub use generate::{generate, GraphFamily, GraphFamilySpec};
pub use io::{parse_edge_list, parse_graph6, to_graph6, write_edge_list};
pub use subgraph::{contains_subgraph, find_subgraph};

use crate::error::{Error, Result};

/// Undirected simple graph with cached edge count.
///
/// Invariants: the adjacency relation is symmetric and irreflexive, and `m`
/// always equals half the sum of the row popcounts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    /// Row-major bitset: `adj[v * words ..][w]` holds bits for vertices 64w..64w+63.
    adj: Vec<u64>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph {
            n,
            words,
            adj: vec![0; n * words],
            m: 0,
        }
    }

    /// Build from an explicit edge list. Duplicate edges are merged; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop { v });
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Adds the edge if absent; returns true when the graph changed.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({u},{v})");
        if self.has_edge(u, v) {
            return false;
        }
        self.adj[u * self.words + v / 64] |= 1 << (v % 64);
        self.adj[v * self.words + u / 64] |= 1 << (u % 64);
        self.m += 1;
        true
    }

    /// Removes the edge if present; returns true when the graph changed.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if !self.has_edge(u, v) {
            return false;
        }
        self.adj[u * self.words + v / 64] &= !(1 << (v % 64));
        self.adj[v * self.words + u / 64] &= !(1 << (u % 64));
        self.m -= 1;
        true
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &w)| {
            BitIter { word: w }.map(move |b| wi * 64 + b)
        })
    }

    /// All edges as (u, v) pairs with u < v, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_edgeless(&self) -> bool {
        self.m == 0
    }

    /// Complement graph: uv is an edge iff u != v and uv is not an edge here.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Induced subgraph on the vertex set `s` (deduplicated, sorted), together
    /// with the index map `new -> old`.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut verts: Vec<usize> = s.to_vec();
        verts.sort_unstable();
        verts.dedup();
        for &v in &verts {
            self.check_vertex(v)?;
        }
        let mut g = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok((g, verts))
    }

    /// Neighborhood of `v` as a sorted vertex list.
    pub fn neighborhood(&self, v: usize) -> Vec<usize> {
        self.neighbors(v).collect()
    }

    /// Number of edges crossing the bipartition given by `side`, where bit i
    /// of `side[i / 64]` marks vertex i on the A side.
    pub fn cut_size(&self, side: &[u64]) -> usize {
        let mut cut = 0;
        for (u, v) in self.edges() {
            let a = side[u / 64] >> (u % 64) & 1;
            let b = side[v / 64] >> (v % 64) & 1;
            if a != b {
                cut += 1;
            }
        }
        cut
    }

    /// Adjacency row of `v` restricted to the low 64 vertices (n <= 64 only).
    #[inline]
    pub(crate) fn row_word(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.adj[v * self.words]
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m, self.edges())
    }
}

struct BitIter {
    word: u64,
}

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.word == 0 {
            return None;
        }
        let b = self.word.trailing_zeros() as usize;
        self.word &= self.word - 1;
        Some(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph_counts() {
        let g = Graph::empty(5);
        assert_eq!(g.n(), 5);
        assert_eq!(g.m(), 0);
        assert!(!g.has_edge(0, 1));
    }

    #[test]
    fn add_remove_edges() {
        let mut g = Graph::empty(4);
        assert!(g.add_edge(0, 1));
        assert!(!g.add_edge(1, 0));
        assert!(g.has_edge(1, 0));
        assert_eq!(g.m(), 1);
        assert!(g.remove_edge(0, 1));
        assert_eq!(g.m(), 0);
    }

    #[test]
    fn from_edges_rejects_self_loop() {
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let k4 = generate::complete(4);
        let c = k4.complement();
        assert_eq!(c.n(), 4);
        assert_eq!(c.m(), 0);
    }

    #[test]
    fn complement_of_c5_has_five_edges() {
        // C_5 is self-complementary.
        let c5 = generate::cycle(5);
        let c = c5.complement();
        assert_eq!(c.m(), 5);
        assert!((0..5).all(|v| c.degree(v) == 2));
    }

    #[test]
    fn complement_of_petersen() {
        let p = generate::petersen();
        let c = p.complement();
        assert_eq!(c.m(), 30);
        assert!((0..10).all(|v| c.degree(v) == 6));
    }

    #[test]
    fn induced_path_from_cycle() {
        let c5 = generate::cycle(5);
        let (g, map) = c5.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(g.m(), 2);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
    }

    #[test]
    fn induced_empty_set() {
        let c5 = generate::cycle(5);
        let (g, map) = c5.induced_subgraph(&[]).unwrap();
        assert_eq!(g.n(), 0);
        assert!(map.is_empty());
    }

    #[test]
    fn petersen_neighborhoods_are_independent() {
        let p = generate::petersen();
        for v in 0..10 {
            let nb = p.neighborhood(v);
            assert_eq!(nb.len(), 3);
            let (sub, _) = p.induced_subgraph(&nb).unwrap();
            assert_eq!(sub.m(), 0, "Petersen is triangle-free");
        }
    }

    #[test]
    fn multiword_rows() {
        let mut g = Graph::empty(130);
        g.add_edge(0, 129);
        g.add_edge(64, 65);
        assert!(g.has_edge(129, 0));
        assert!(g.has_edge(65, 64));
        assert_eq!(g.degree(129), 1);
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![129]);
        let c = g.complement();
        assert_eq!(c.m(), 130 * 129 / 2 - 2);
    }
}
