//! Dense simple graphs with one bit-vector adjacency row per vertex, and
//! brute-force canonical codes for type-sized graphs.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::{and_count, words_for, BitSet, Ones};

/// Largest order accepted by [`canonical_code`].
pub const MAX_CANONICAL_ORDER: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange { vertex: usize, order: usize },
    Loop { vertex: usize },
    DuplicateVertex { vertex: usize },
    TooLargeForCanonical { order: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for graph of order {order}")
            }
            GraphError::Loop { vertex } => write!(f, "loop at vertex {vertex}"),
            GraphError::DuplicateVertex { vertex } => write!(f, "vertex {vertex} listed twice"),
            GraphError::TooLargeForCanonical { order } => {
                write!(f, "canonical codes are limited to order {MAX_CANONICAL_ORDER}, got {order}")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// Undirected loop-free graph on vertices `0..n`.
///
/// Immutable once built; every mutation goes through a builder method that
/// returns a new graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edge_count()).finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let stride = words_for(n).max(1);
        Graph { n, stride, rows: vec![0; n * stride] }
    }

    pub fn complete(n: usize) -> Self {
        Graph::empty(n).complement()
    }

    /// Builds a graph from an edge list. Repeated pairs collapse to one edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
                }
            }
            if a == b {
                return Err(GraphError::Loop { vertex: a });
            }
            g.set(a, b);
        }
        Ok(g)
    }

    /// Builds a graph on `n` vertices from a labeled mask in pair-bit order
    /// (see [`pair_bit`]). Only meaningful for `n <= 11`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let mut g = Graph::empty(n);
        for j in 1..n {
            for i in 0..j {
                if mask >> pair_bit(i, j) & 1 == 1 {
                    g.set(i, j);
                }
            }
        }
        g
    }

    #[inline]
    fn set(&mut self, a: usize, b: usize) {
        self.rows[a * self.stride + b / 64] |= 1 << (b % 64);
        self.rows[b * self.stride + a / 64] |= 1 << (a % 64);
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of 64-bit words in each adjacency row.
    pub fn stride(&self) -> usize {
        self.stride
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        (self.rows[a * self.stride + b / 64] >> (b % 64)) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> Ones<'_> {
        Ones::over(self.row(v))
    }

    pub fn neighborhood(&self, v: usize) -> BitSet {
        BitSet::from_words(self.n, self.row(v))
    }

    /// Size of the common neighbourhood of two vertices.
    #[inline]
    pub fn common_count(&self, a: usize, b: usize) -> usize {
        and_count(self.row(a), self.row(b))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |a| self.neighbors(a).filter(move |&b| b > a).map(move |b| (a, b)))
    }

    /// Non-adjacent pairs `(a, b)` with `a < b`, in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |a| (a + 1..self.n).filter(move |&b| !self.has_edge(a, b)).map(move |b| (a, b)))
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        let full = BitSet::full(self.n);
        for v in 0..self.n {
            let dst = &mut g.rows[v * self.stride..(v + 1) * self.stride];
            for (k, w) in dst.iter_mut().enumerate() {
                *w = !self.rows[v * self.stride + k] & full.words()[k];
            }
            dst[v / 64] &= !(1 << (v % 64));
        }
        g
    }

    /// Subgraph induced on `vs`, with vertex `i` of the result being `vs[i]`.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Result<Graph, GraphError> {
        let mut seen = BitSet::new(self.n);
        for &v in vs {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, order: self.n });
            }
            if seen.contains(v) {
                return Err(GraphError::DuplicateVertex { vertex: v });
            }
            seen.insert(v);
        }
        let mut g = Graph::empty(vs.len());
        for j in 1..vs.len() {
            for i in 0..j {
                if self.has_edge(vs[i], vs[j]) {
                    g.set(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Vertices adjacent to every member of `s`; all vertices when `s` is empty.
    pub fn common_neighbors(&self, s: &[usize]) -> BitSet {
        let mut acc = BitSet::full(self.n);
        for &v in s {
            acc.intersect_with(self.row(v));
        }
        acc
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        Graph::from_edges(self.n, self.edges().map(|(a, b)| (perm[a], perm[b]))).expect("permutation of a valid graph")
    }

    /// Labeled adjacency mask in pair-bit order. Only for `n <= 11`.
    pub fn mask(&self) -> u64 {
        assert!(self.n <= 11, "mask needs order <= 11");
        let mut m = 0u64;
        for j in 1..self.n {
            for i in 0..j {
                if self.has_edge(i, j) {
                    m |= 1 << pair_bit(i, j);
                }
            }
        }
        m
    }

    /// Checks the structural invariants: symmetric rows, empty diagonal and
    /// no bits beyond `n`.
    pub fn is_well_formed(&self) -> bool {
        let full = BitSet::full(self.n);
        for v in 0..self.n {
            if self.has_edge(v, v) {
                return false;
            }
            if self.row(v).iter().zip(full.words()).any(|(w, f)| w & !f != 0) {
                return false;
            }
            if self.neighbors(v).any(|u| !self.has_edge(u, v)) {
                return false;
            }
        }
        true
    }
}

/// Bit position of the unordered pair `{i, j}` (`i < j`) in a labeled mask:
/// pairs are ordered column by column, `(0,1), (0,2), (1,2), (0,3), ...`.
#[inline]
pub const fn pair_bit(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

/// Isomorphism-class code for a small graph, optionally with an ordered
/// distinguished pair occupying slots 0 and 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    pub order: u8,
    /// Whether the distinguished vertices are adjacent; `None` when no pair.
    pub pair_flag: Option<bool>,
    /// Minimum labeled mask over all admissible relabelings.
    pub bits: u64,
}

impl CanonicalCode {
    pub fn edge_count(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn graph(&self) -> Graph {
        Graph::from_mask(self.order as usize, self.bits)
    }
}

/// Brute-force canonical code: the least labeled mask over every relabeling
/// that keeps `pair.0` in slot 0 and `pair.1` in slot 1.
pub fn canonical_code(g: &Graph, pair: Option<(usize, usize)>) -> Result<CanonicalCode, GraphError> {
    let n = g.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(GraphError::TooLargeForCanonical { order: n });
    }
    let mut fixed: Vec<usize> = Vec::new();
    if let Some((u, v)) = pair {
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
            }
        }
        if u == v {
            return Err(GraphError::DuplicateVertex { vertex: u });
        }
        fixed.extend([u, v]);
    }
    let mut free: Vec<usize> = (0..n).filter(|v| !fixed.contains(v)).collect();
    let adj: Vec<u16> =
        (0..n).map(|v| (0..n).filter(|&u| g.has_edge(v, u)).fold(0u16, |acc, u| acc | 1 << u)).collect();
    let mut order = fixed.clone();
    order.extend_from_slice(&free);
    let mut best = labeled_mask(&adj, &order);
    let k = fixed.len();
    for_each_permutation(&mut free, |perm| {
        order[k..].copy_from_slice(perm);
        let m = labeled_mask(&adj, &order);
        if m < best {
            best = m;
        }
    });
    Ok(CanonicalCode { order: n as u8, pair_flag: pair.map(|(u, v)| g.has_edge(u, v)), bits: best })
}

fn labeled_mask(adj: &[u16], order: &[usize]) -> u64 {
    let mut m = 0u64;
    for j in 1..order.len() {
        let row = adj[order[j]];
        for (i, &oi) in order[..j].iter().enumerate() {
            if row >> oi & 1 == 1 {
                m |= 1 << pair_bit(i, j);
            }
        }
    }
    m
}

/// Heap's algorithm; calls `f` once per permutation of `items`, starting
/// with the identity.
pub(crate) fn for_each_permutation<T, F: FnMut(&[T])>(items: &mut [T], mut f: F) {
    let n = items.len();
    f(items);
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            f(items);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn edge_list_constructor() {
        let c6 = cycle(6);
        assert_eq!(c6.edge_count(), 6);
        assert!((0..6).all(|v| c6.degree(v) == 2));
        assert_eq!(Graph::from_edges(5, []).unwrap().edge_count(), 0);
        let k4e = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(k4e.edge_count(), 5);
        assert!(!k4e.has_edge(2, 3));
        let dup = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(dup.edge_count(), 1);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(Graph::from_edges(3, [(0, 3)]), Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 }));
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::Loop { vertex: 1 }));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::empty(5).complement(), Graph::complete(5));
        assert_eq!(Graph::complete(5).edge_count(), 10);
        let c5 = cycle(5);
        let cc = c5.complement();
        assert_eq!(canonical_code(&cc, None), canonical_code(&c5, None));
        assert!(cc.is_well_formed());
    }

    #[test]
    fn induced_examples() {
        let k5 = Graph::complete(5);
        assert_eq!(k5.induced_subgraph(&[0, 1, 2]).unwrap(), Graph::complete(3));
        assert_eq!(cycle(6).induced_subgraph(&[0, 2, 4]).unwrap(), Graph::empty(3));
        assert_eq!(cycle(6).induced_subgraph(&[0, 2, 0]), Err(GraphError::DuplicateVertex { vertex: 0 }));
    }

    #[test]
    fn common_neighbors_of_empty_set_is_everything() {
        let g = cycle(7);
        assert_eq!(g.common_neighbors(&[]).count(), 7);
        assert_eq!(g.common_neighbors(&[3]), g.neighborhood(3));
        assert_eq!(g.common_neighbors(&[0, 2]).to_vec(), [1]);
    }

    #[test]
    fn canonical_code_respects_pair_position() {
        let tri = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let relabeled = tri.permuted(&[2, 0, 1]);
        assert_eq!(canonical_code(&tri, None), canonical_code(&relabeled, None));
        // path a - x - b, pair (a, b): the pair sits at the ends
        let ends = Graph::from_edges(3, [(0, 2), (2, 1)]).unwrap();
        // path x - a - b, pair (a, b): the pair is an edge
        let inner = Graph::from_edges(3, [(2, 0), (0, 1)]).unwrap();
        assert_ne!(canonical_code(&ends, Some((0, 1))), canonical_code(&inner, Some((0, 1))));
        assert!(canonical_code(&Graph::empty(11), None).is_err());
    }

    #[test]
    fn anchored_codes_on_four_vertices_match_enumeration() {
        // Oracle: orbit enumeration over all 2^6 labeled graphs, acting by
        // the two permutations of slots 2 and 3.
        let mut orbits: BTreeSet<u64> = BTreeSet::new();
        let mut codes: BTreeSet<CanonicalCode> = BTreeSet::new();
        for mask in 0u64..64 {
            let g = Graph::from_mask(4, mask);
            let swapped = g.permuted(&[0, 1, 3, 2]).mask();
            orbits.insert(mask.min(swapped));
            codes.insert(canonical_code(&g, Some((0, 1))).unwrap());
        }
        assert_eq!(orbits.len(), 40);
        assert_eq!(codes.len(), 40);
    }

    #[test]
    fn heap_permutations_are_complete() {
        let mut items = [0, 1, 2, 3];
        let mut seen = BTreeSet::new();
        for_each_permutation(&mut items, |p| {
            seen.insert(p.to_vec());
        });
        assert_eq!(seen.len(), 24);
    }
}
