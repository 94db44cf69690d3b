//! Simple undirected graphs on `[0, n)` stored as adjacency bit rows.

use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

#[inline]
pub(crate) fn bit(row: &[u64], v: usize) -> bool {
    row[v >> 6] >> (v & 63) & 1 == 1
}

/// Set bits of `row`, ascending.
pub(crate) fn iter_bits(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        core::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(wi * 64 + b)
        })
    })
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "EdgeListRepr", try_from = "EdgeListRepr")]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

/// JSON form: vertex count plus edge list with `u < v`.
#[derive(Serialize, Deserialize)]
pub struct EdgeListRepr {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<Graph> for EdgeListRepr {
    fn from(g: Graph) -> Self {
        EdgeListRepr { n: g.n, edges: g.edges().collect() }
    }
}

impl TryFrom<EdgeListRepr> for Graph {
    type Error = Error;
    fn try_from(r: EdgeListRepr) -> Result<Self> {
        Graph::from_edges(r.n, r.edges)
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Self { n, words, rows: alloc::vec![0; n * words] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert(u, v);
            }
        }
        g
    }

    /// The cycle `0-1-...-(n-1)-0`.
    pub fn cycle(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            let j = (i + 1) % n;
            if i != j {
                g.insert(i, j);
            }
        }
        g
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Self::from_edges(10, edges).expect("valid")
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check(&self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }

    #[inline]
    fn insert(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + (v >> 6)] |= 1 << (v & 63);
        self.rows[v * self.words + (u >> 6)] |= 1 << (u & 63);
    }

    /// Adds `uv`; returns whether it was new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check(u, v)?;
        let fresh = !self.has_edge(u, v);
        self.insert(u, v);
        Ok(fresh)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check(u, v)?;
        let present = self.has_edge(u, v);
        self.rows[u * self.words + (v >> 6)] &= !(1 << (v & 63));
        self.rows[v * self.words + (u >> 6)] &= !(1 << (u & 63));
        Ok(present)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && bit(self.row(u), v)
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Neighbors of `v`, ascending.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// The complement on the same vertex set.
    pub fn complement(&self) -> Self {
        let mut g = Self::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.insert(u, v);
                }
            }
        }
        g
    }

    /// Whether the graph is connected (vacuously true for `n <= 1`).
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = alloc::vec![false; self.n];
        let mut stack = alloc::vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut g = Graph::empty(70);
        assert_eq!(g.add_edge(3, 68), Ok(true));
        assert_eq!(g.add_edge(68, 3), Ok(false));
        assert!(g.has_edge(68, 3));
        assert_eq!(g.degree(3), 1);
        assert_eq!(g.add_edge(2, 2), Err(Error::SelfLoop(2)));
        assert!(g.add_edge(2, 70).is_err());
        assert_eq!(g.edges().collect::<Vec<_>>(), [(3, 68)]);
        assert_eq!(g.remove_edge(3, 68), Ok(true));
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn named_graphs() {
        assert_eq!(Graph::complete(5).edge_count(), 10);
        assert_eq!(Graph::cycle(5).degrees(), [2; 5]);
        let p = Graph::petersen();
        assert_eq!(p.edge_count(), 15);
        assert!(p.degrees().iter().all(|&d| d == 3));
        assert!(p.is_connected());
        assert_eq!(Graph::complete(6).complement().edge_count(), 0);
    }

    #[test]
    fn neighbors_sorted() {
        let g = Graph::from_edges(130, [(5, 129), (5, 0), (5, 64), (5, 63)]).unwrap();
        assert_eq!(g.neighbors(5).collect::<Vec<_>>(), [0, 63, 64, 129]);
    }
}
