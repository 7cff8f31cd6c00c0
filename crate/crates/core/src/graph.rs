//! Immutable simple undirected graphs with dense `0..n` vertex ids.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A simple undirected graph. Neighbor lists are kept sorted and free of
/// duplicates, so two graphs compare equal exactly when they have the same
/// vertex count and edge set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges (in either
    /// orientation) collapse to one.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= vertex_count {
                    return Err(Error::OutOfRange {
                        vertex: x,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut twice_edges = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            twice_edges += list.len();
        }
        Ok(Self {
            adjacency,
            edge_count: twice_edges / 2,
        })
    }

    /// The graph with `vertex_count` vertices and no edges.
    pub fn empty(vertex_count: usize) -> Self {
        Self {
            adjacency: vec![Vec::new(); vertex_count],
            edge_count: 0,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    fn check(&self, u: usize) -> Result<()> {
        if u < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                vertex: u,
                vertex_count: self.vertex_count(),
            })
        }
    }

    /// Sorted neighbors of `u`.
    pub fn neighbors(&self, u: usize) -> Result<&[usize]> {
        self.check(u)?;
        Ok(&self.adjacency[u])
    }

    pub fn degree(&self, u: usize) -> Result<usize> {
        self.check(u)?;
        Ok(self.adjacency[u].len())
    }

    /// Sum of the degrees of the neighbors of `u`.
    pub fn neighbor_degree_sum(&self, u: usize) -> Result<u64> {
        self.check(u)?;
        Ok(self.adjacency[u]
            .iter()
            .map(|&x| self.adjacency[x].len() as u64)
            .sum())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> Result<bool> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.adjacency[u].binary_search(&v).is_ok())
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub(crate) fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adjacency.iter().map(Vec::len)
    }

    /// True for graphs with at most one vertex or a single component.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == n
    }
}
