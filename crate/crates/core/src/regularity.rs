//! Regularity, strong regularity, subconstituents and k-isoregularity.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::{and_count, BitSet};
use crate::graph::{canonical_code, CanonicalCode, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SrgParams {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    /// `k (k - λ - 1) = (v - k - 1) μ`.
    pub fn is_feasible(&self) -> bool {
        let lhs = self.k as i128 * (self.k as i128 - self.lambda as i128 - 1);
        let rhs = (self.v as i128 - self.k as i128 - 1) * self.mu as i128;
        lhs == rhs
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.v, self.k, self.lambda, self.mu)
    }
}

/// Complete and edgeless graphs, where one of λ, μ is undefined.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Degenerate {
    pub complete: bool,
}

impl fmt::Display for Degenerate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = if self.complete { "complete" } else { "edgeless" };
        write!(f, "degenerate ({what}) graph")
    }
}

pub fn check_regular(g: &Graph) -> Option<usize> {
    let k = if g.order() == 0 { 0 } else { g.degree(0) };
    (0..g.order()).all(|v| g.degree(v) == k).then_some(k)
}

/// Parameters when common-neighbour counts are constant on edges and on
/// non-edges; `Ok(None)` when the graph is not strongly regular.
pub fn srg_parameters(g: &Graph) -> Result<Option<SrgParams>, Degenerate> {
    let n = g.order();
    let edges = g.edge_count();
    if n < 2 || edges == 0 || edges == n * (n - 1) / 2 {
        return Err(Degenerate { complete: edges != 0 && n > 1 });
    }
    let Some(k) = check_regular(g) else { return Ok(None) };
    let mut lambda = None;
    let mut mu = None;
    for a in 0..n {
        for b in a + 1..n {
            let c = g.common_count(a, b);
            let slot = if g.has_edge(a, b) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(c),
                Some(prev) if prev != c => return Ok(None),
                _ => {}
            }
        }
    }
    Ok(Some(SrgParams { v: n, k, lambda: lambda.unwrap(), mu: mu.unwrap() }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subconstituent {
    /// Neighbours of the vertex.
    First,
    /// Vertices at distance two.
    Second,
}

pub fn distance_set(g: &Graph, x: usize, which: Subconstituent) -> BitSet {
    match which {
        Subconstituent::First => g.neighborhood(x),
        Subconstituent::Second => {
            let mut reach = BitSet::new(g.order());
            for y in g.neighbors(x) {
                reach.union_with(g.row(y));
            }
            reach.subtract(g.row(x));
            reach.remove(x);
            reach
        }
    }
}

/// Subgraph induced on the vertices at distance one or two from `x`.
pub fn subconstituent(g: &Graph, x: usize, which: Subconstituent) -> Graph {
    let vs = distance_set(g, x, which).to_vec();
    g.induced_subgraph(&vs).expect("distance set holds distinct vertices")
}

/// Two isomorphic vertex sets with different common valencies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub code: CanonicalCode,
    pub first: (Vec<usize>, usize),
    pub second: (Vec<usize>, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoregularityReport {
    pub k: usize,
    /// Common valency per isomorphism class of sets of size at most `k`.
    /// Partial when the check failed.
    pub table: BTreeMap<CanonicalCode, usize>,
    pub witness: Option<IsoWitness>,
}

impl IsoregularityReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    /// Valency recorded for the class with the given order and edge count.
    /// Classes of order at most three are determined by their edge count.
    pub fn valency_by_edges(&self, order: usize, edges: u32) -> Option<usize> {
        self.table.iter().find(|(c, _)| c.order as usize == order && c.edge_count() == edges).map(|(_, &v)| v)
    }
}

pub const MAX_ISOREGULARITY_LEVEL: usize = 3;

/// Exhaustive k-isoregularity check over all vertex sets of size `1..=k`,
/// visited in lexicographic order; stops at the first witness.
///
/// # Panics
/// If `k` is outside `1..=3`.
pub fn check_isoregular(g: &Graph, k: usize) -> IsoregularityReport {
    assert!((1..=MAX_ISOREGULARITY_LEVEL).contains(&k), "isoregularity level must be in 1..={MAX_ISOREGULARITY_LEVEL}");
    let n = g.order();
    // Codes for every labeled graph on at most three vertices.
    let codes: Vec<Vec<CanonicalCode>> = (0..=k)
        .map(|m| {
            let bits = m * m.saturating_sub(1) / 2;
            (0..1u64 << bits).map(|mask| canonical_code(&Graph::from_mask(m, mask), None).unwrap()).collect()
        })
        .collect();
    let mut table: BTreeMap<CanonicalCode, (Vec<usize>, usize)> = BTreeMap::new();
    let mut record = |set: &[usize], mask: u64, val: usize| -> Option<IsoWitness> {
        let code = codes[set.len()][mask as usize];
        match table.get(&code) {
            None => {
                table.insert(code, (set.to_vec(), val));
                None
            }
            Some((prev, pv)) if *pv != val => {
                Some(IsoWitness { code, first: (prev.clone(), *pv), second: (set.to_vec(), val) })
            }
            _ => None,
        }
    };
    let mut witness = None;
    'outer: for a in 0..n {
        if let Some(w) = record(&[a], 0, g.degree(a)) {
            witness = Some(w);
            break;
        }
        if k < 2 {
            continue;
        }
        for b in a + 1..n {
            let ab = g.has_edge(a, b) as u64;
            if let Some(w) = record(&[a, b], ab, g.common_count(a, b)) {
                witness = Some(w);
                break 'outer;
            }
            if k < 3 {
                continue;
            }
            let mut common = BitSet::from_words(n, g.row(a));
            common.intersect_with(g.row(b));
            for c in b + 1..n {
                let mask = ab | (g.has_edge(a, c) as u64) << 1 | (g.has_edge(b, c) as u64) << 2;
                let val = and_count(common.words(), g.row(c));
                if let Some(w) = record(&[a, b, c], mask, val) {
                    witness = Some(w);
                    break 'outer;
                }
            }
        }
    }
    IsoregularityReport { k, table: table.into_iter().map(|(c, (_, v))| (c, v)).collect(), witness }
}

/// Largest level in `1..=3` at which the graph is isoregular, or 0.
pub fn isoregularity_level(g: &Graph) -> usize {
    (1..=MAX_ISOREGULARITY_LEVEL).take_while(|&k| check_isoregular(g, k).passed()).last().unwrap_or(0)
}

/// Returns an induced K₄−e as `[a, b, c, d]` with `a ≁ b` and `c ~ d`, if any.
pub fn check_k4e_free(g: &Graph) -> Result<(), [usize; 4]> {
    let n = g.order();
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            let mut common = BitSet::from_words(n, g.row(a));
            common.intersect_with(g.row(b));
            for c in common.iter() {
                if let Some(d) = crate::bitset::Ones::over(g.row(c)).find(|&d| common.contains(d)) {
                    return Err([a, b, c, d]);
                }
            }
        }
    }
    Ok(())
}

/// Histogram: number of common neighbours → number of triads (pairwise
/// non-adjacent triples) with that many.
pub fn triad_center_profile(g: &Graph) -> BTreeMap<usize, u64> {
    let n = g.order();
    let mut hist = BTreeMap::new();
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            let mut common = BitSet::from_words(n, g.row(a));
            common.intersect_with(g.row(b));
            let mut third = BitSet::full(n);
            third.subtract(g.row(a));
            third.subtract(g.row(b));
            for c in third.iter().filter(|&c| c > b) {
                *hist.entry(and_count(common.words(), g.row(c))).or_insert(0) += 1;
            }
        }
    }
    hist
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{build_elliptic_gq, build_symplectic_gq, build_t2star_gq, dualize, point_graph};

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn regular_examples() {
        assert_eq!(check_regular(&cycle(6)), Some(2));
        assert_eq!(check_regular(&Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()), None);
        let gq24 = point_graph(&build_elliptic_gq(2).unwrap());
        assert_eq!(check_regular(&gq24), Some(10));
    }

    #[test]
    fn srg_examples() {
        assert_eq!(srg_parameters(&cycle(5)), Ok(Some(SrgParams { v: 5, k: 2, lambda: 0, mu: 1 })));
        assert_eq!(srg_parameters(&cycle(6)), Ok(None));
        assert_eq!(srg_parameters(&Graph::complete(4)), Err(Degenerate { complete: true }));
        assert_eq!(srg_parameters(&Graph::empty(4)), Err(Degenerate { complete: false }));
        let w2 = point_graph(&build_symplectic_gq(2).unwrap());
        assert_eq!(srg_parameters(&w2), Ok(Some(SrgParams { v: 15, k: 6, lambda: 1, mu: 3 })));
        let schlafli = point_graph(&build_elliptic_gq(2).unwrap()).complement();
        assert_eq!(srg_parameters(&schlafli), Ok(Some(SrgParams { v: 27, k: 16, lambda: 10, mu: 8 })));
    }

    #[test]
    fn printed_gq_valency_fails_feasibility() {
        // (s - 1) t at s = t = 2 gives k = 2 for v = 15, λ = 1, μ = 3.
        assert!(!SrgParams { v: 15, k: 2, lambda: 1, mu: 3 }.is_feasible());
        assert!(SrgParams { v: 15, k: 6, lambda: 1, mu: 3 }.is_feasible());
    }

    #[test]
    fn subconstituent_examples() {
        let c6 = subconstituent(&cycle(6), 0, Subconstituent::Second);
        assert_eq!(c6, Graph::empty(2));
        let k4 = subconstituent(&Graph::complete(5), 2, Subconstituent::First);
        assert_eq!(k4, Graph::complete(4));
        let gq24 = point_graph(&build_elliptic_gq(2).unwrap());
        let local = subconstituent(&gq24, 7, Subconstituent::First);
        assert_eq!(local.order(), 10);
        assert_eq!(local.edge_count(), 5);
        assert_eq!(check_regular(&local), Some(1));
    }

    #[test]
    fn isoregularity_of_gq24() {
        let g = point_graph(&build_elliptic_gq(2).unwrap());
        let r = check_isoregular(&g, 3);
        assert!(r.passed());
        assert_eq!(r.valency_by_edges(3, 0), Some(3));
        assert_eq!(r.valency_by_edges(3, 1), Some(1));
        assert_eq!(r.valency_by_edges(3, 2), Some(0));
        assert_eq!(r.valency_by_edges(3, 3), Some(0));
        assert_eq!(isoregularity_level(&g), 3);
    }

    #[test]
    fn non_isoregular_at_three() {
        let w2 = point_graph(&build_symplectic_gq(2).unwrap());
        let r = check_isoregular(&w2, 3);
        let w = r.witness.expect("W(2) triads have 1 or 3 centres");
        assert_eq!(w.code.order, 3);
        assert_eq!(w.code.edge_count(), 0);
        assert!(check_isoregular(&w2, 2).passed());
        assert!(!check_isoregular(&cycle(6), 2).passed());
        assert!(check_isoregular(&cycle(6), 1).passed());
    }

    #[test]
    fn k4e_screen() {
        let k4e = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let w = check_k4e_free(&k4e).unwrap_err();
        let mut sorted = w;
        sorted.sort();
        assert_eq!(sorted, [0, 1, 2, 3]);
        assert!(!k4e.has_edge(w[0], w[1]) && k4e.has_edge(w[2], w[3]));
        let gq = point_graph(&dualize(&build_t2star_gq().unwrap()).unwrap());
        assert_eq!(check_k4e_free(&gq), Ok(()));
    }

    #[test]
    fn triad_profiles() {
        let gq24 = point_graph(&build_elliptic_gq(2).unwrap());
        let h = triad_center_profile(&gq24);
        assert_eq!(h.keys().copied().collect::<Vec<_>>(), [3]);
        let w2 = point_graph(&build_symplectic_gq(2).unwrap());
        assert!(triad_center_profile(&w2).len() >= 2);
    }
}
