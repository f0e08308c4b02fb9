//! Simple undirected graphs on at most 64 vertices, stored as one adjacency
//! bitset per vertex.

use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// A labeled simple graph on vertices `0..n`.
///
/// Row `v` holds the neighborhood of `v` as a bitmask. Rows are kept
/// symmetric and loop-free by every constructor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Bitmask with the lowest `n` bits set.
#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
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

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "graph",
                n,
                bound: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            rows: vec![0; n],
        })
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = low_mask(n);
        for v in 0..n {
            g.rows[v] = all & !bit(v);
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw rows, symmetrizing nothing: rows must already
    /// describe a symmetric loop-free relation.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(rows.len() <= MAX_VERTICES);
        let g = Graph {
            n: rows.len(),
            rows,
        };
        debug_assert!(g.is_well_formed());
        g
    }

    fn is_well_formed(&self) -> bool {
        let all = low_mask(self.n);
        (0..self.n).all(|u| {
            self.rows[u] & !all == 0
                && self.rows[u] & bit(u) == 0
                && bits(self.rows[u]).all(|v| self.rows[v] & bit(u) != 0)
        })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        self.rows[u] |= bit(v);
        self.rows[v] |= bit(u);
        Ok(())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] & bit(v) != 0
    }

    /// Neighborhood of `v` as a bitmask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.rows[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Shortest-path hop count, `None` when `u` and `v` lie in different
    /// components.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let target = bit(v);
        let mut seen = bit(u);
        let mut frontier = bit(u);
        let mut d = 0;
        while frontier & target == 0 {
            let next = self.neighborhood_of(frontier) & !seen;
            if next == 0 {
                return Ok(None);
            }
            seen |= next;
            frontier = next;
            d += 1;
        }
        Ok(Some(d))
    }

    /// Union of the neighborhoods of every vertex in `set`.
    #[inline]
    pub fn neighborhood_of(&self, set: u64) -> u64 {
        bits(set).fold(0, |acc, v| acc | self.rows[v])
    }

    /// Vertices reachable from `v`, including `v`.
    pub fn component_of(&self, v: usize) -> u64 {
        let mut seen = bit(v);
        let mut frontier = seen;
        while frontier != 0 {
            frontier = self.neighborhood_of(frontier) & !seen;
            seen |= frontier;
        }
        seen
    }

    /// Connected; the graphs on zero and one vertex count as connected.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_of(0) == self.vertex_mask()
    }

    /// Every pair of distinct vertices adjacent (vacuous for `n <= 1`).
    pub fn is_clique(&self) -> bool {
        let all = self.vertex_mask();
        (0..self.n).all(|v| self.rows[v] | bit(v) == all)
    }

    pub fn is_universal(&self, v: usize) -> bool {
        self.rows[v] | bit(v) == self.vertex_mask()
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.rows[v] == 0
    }

    /// Subgraph induced on `set`, relabeled to `0..|set|` in increasing
    /// label order.
    pub fn induced(&self, set: u64) -> Graph {
        let set = set & self.vertex_mask();
        let keep: Vec<usize> = bits(set).collect();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let rows = keep
            .iter()
            .map(|&v| bits(self.rows[v] & set).fold(0, |acc, w| acc | bit(index[w])))
            .collect();
        Graph::from_rows_unchecked(rows)
    }

    /// `self` with vertex `v` deleted; labels above `v` shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.induced(self.vertex_mask() & !bit(v)))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Permutation(format!(
                "permutation has length {} for {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            self.check_vertex(p)?;
            seen |= bit(p);
        }
        if seen != self.vertex_mask() {
            return Err(Error::Permutation("repeated label".into()));
        }
        let mut rows = vec![0u64; self.n];
        for u in 0..self.n {
            rows[perm[u]] = bits(self.rows[u]).fold(0, |acc, w| acc | bit(perm[w]));
        }
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// Disjoint union with `other` placed after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        self.combine(other, false)
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        self.combine(other, true)
    }

    fn combine(&self, other: &Graph, cross: bool) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "graph",
                n,
                bound: MAX_VERTICES,
            });
        }
        let left = self.vertex_mask();
        let right = low_mask(n) & !left;
        let mut rows = Vec::with_capacity(n);
        for v in 0..self.n {
            rows.push(self.rows[v] | if cross { right } else { 0 });
        }
        for v in 0..other.n {
            rows.push((other.rows[v] << self.n) | if cross { left } else { 0 });
        }
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// `self` joined with a single new vertex, which gets label `n`.
    pub fn add_universal(&self) -> Result<Graph> {
        self.join(&Graph::empty(1)?)
    }

    /// `self` plus one new isolated vertex with label `n`.
    pub fn add_isolated(&self) -> Result<Graph> {
        self.disjoint_union(&Graph::empty(1)?)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let rows = (0..self.n).map(|v| !self.rows[v] & all & !bit(v)).collect();
        Graph::from_rows_unchecked(rows)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn distances_on_p4() {
        let g = path(4);
        assert_eq!(g.distance(0, 2).unwrap(), Some(2));
        assert_eq!(g.distance(0, 3).unwrap(), Some(3));
        assert_eq!(g.distance(1, 1).unwrap(), Some(0));
        assert!(g.distance(0, 4).is_err());
    }

    #[test]
    fn disjoint_edges_are_unreachable() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.distance(0, 2).unwrap(), None);
        assert!(!g.is_connected());
    }

    #[test]
    fn clique_and_connectivity() {
        assert!(Graph::complete(5).unwrap().is_clique());
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!c4.is_clique());
        assert!(c4.is_connected());
        assert!(Graph::empty(0).unwrap().is_clique());
        assert!(Graph::empty(1).unwrap().is_clique());
    }

    #[test]
    fn join_of_two_points_is_an_edge() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(k1.join(&k1).unwrap(), Graph::complete(2).unwrap());
    }

    #[test]
    fn loops_rejected() {
        let mut g = Graph::empty(2).unwrap();
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(0, 2).is_err());
    }

    #[test]
    fn remove_vertex_compacts_labels() {
        let g = path(4).remove_vertex(1).unwrap();
        assert_eq!(g.edges(), vec![(1, 2)]);
    }

    #[test]
    fn permute_preserves_edge_count() {
        let g = path(4);
        let h = g.permute(&[3, 1, 0, 2]).unwrap();
        assert_eq!(h.edges(), vec![(0, 1), (0, 2), (1, 3)]);
        assert!(g.permute(&[0, 0, 1, 2]).is_err());
    }
}
