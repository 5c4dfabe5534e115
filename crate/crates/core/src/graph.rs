//! Simple undirected graphs on at most 64 vertices, stored as one `u64`
//! neighbour mask per vertex, plus hop-count distance matrices.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// A simple labeled graph with vertices `0..n`.
///
/// `rows[v]` is the neighbour set of `v`. Rows are kept symmetric with an
/// empty diagonal; every constructor enforces this. The derived ordering
/// compares the order first and then the rows lexicographically, which is
/// the order used to pick canonical representatives.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        Ok(Graph {
            n,
            rows: vec![0; n],
        })
    }

    /// Builds a graph from unordered vertex pairs. Repeated pairs are ignored.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbour masks, validating symmetry.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        let mask = low_bits(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: 63 - (row & !mask).leading_zeros() as usize,
                    n,
                });
            }
            if row & bit(v) != 0 {
                return Err(Error::SelfLoop(v));
            }
            for u in bits(row) {
                if rows[u] & bit(v) == 0 {
                    return Err(Error::InvalidParams(format!(
                        "adjacency is not symmetric at ({v},{u})"
                    )));
                }
            }
        }
        Ok(Graph { n, rows })
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        self.rows[u] |= bit(v);
        self.rows[v] |= bit(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_pair(u, v)?;
        self.rows[u] &= !bit(v);
        self.rows[v] &= !bit(u);
        Ok(())
    }

    /// Copy of the graph with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    /// Copy of the graph with the edge `uv` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut g = self.clone();
        g.remove_edge(u, v)?;
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Neighbour mask of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.rows[u] & !low_bits(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Mask of vertices reachable from `source`.
    pub(crate) fn reach(&self, source: usize) -> u64 {
        let mut seen = bit(source);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.rows[v];
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0) == low_bits(self.n)
    }

    /// Hop counts from `source` to every vertex.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<u32>> {
        if source >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: source,
                n: self.n,
            });
        }
        let mut dist = vec![u32::MAX; self.n];
        dist[source] = 0;
        let mut seen = bit(source);
        let mut frontier = seen;
        let mut level = 0;
        while frontier != 0 {
            level += 1;
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.rows[v];
            }
            frontier = next & !seen;
            seen |= frontier;
            for v in bits(frontier) {
                dist[v] = level;
            }
        }
        if let Some(unreachable) = dist.iter().position(|&d| d == u32::MAX) {
            return Err(Error::Disconnected { unreachable });
        }
        Ok(dist)
    }

    pub fn distance_matrix(&self) -> Result<DistanceMatrix> {
        let mut d = Vec::with_capacity(self.n * self.n);
        for v in 0..self.n {
            d.extend(self.bfs_distances(v)?);
        }
        Ok(DistanceMatrix { n: self.n, d })
    }

    /// Relabels so that new vertex `i` is old vertex `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.n);
        let mut inverse = vec![0usize; self.n];
        for (i, &old) in perm.iter().enumerate() {
            inverse[old] = i;
        }
        let rows = perm
            .iter()
            .map(|&old| bits(self.rows[old]).fold(0u64, |acc, w| acc | bit(inverse[w])))
            .collect();
        Graph { n: self.n, rows }
    }

    /// Copy in which every pair inside `mask` is adjacent.
    pub fn complete_on(&self, mask: u64) -> Self {
        let mask = mask & low_bits(self.n);
        let mut g = self.clone();
        for v in bits(mask) {
            g.rows[v] |= mask & !bit(v);
        }
        g
    }

    /// True iff every pair of distinct vertices in `mask` is adjacent.
    pub fn is_clique(&self, mask: u64) -> bool {
        bits(mask).all(|v| self.rows[v] & mask == mask & !bit(v))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Pairwise hop counts of a connected graph, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    /// Row sums (vertex transmissions).
    pub fn transmissions(&self) -> Vec<u64> {
        (0..self.n)
            .map(|u| self.row(u).iter().map(|&x| x as u64).sum())
            .collect()
    }
}
