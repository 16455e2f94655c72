//! The t-vertex condition.
//!
//! A *graph type* is a small graph with two fixed vertices in slots 0 and 1.
//! For a pair `(x, y)` of a host graph, the number of vertex sets `S ⊇ {x, y}`
//! whose induced subgraph is isomorphic to the type (sending slot 0 to `x`
//! and slot 1 to `y`) is the anchored count of that type. A graph satisfies
//! the t-vertex condition when, for every type of order at most t, the
//! anchored count is the same for all edges and the same for all non-edges.
//!
//! Two independent routes compute anchored counts:
//!
//! * exhaustive: every (t-2)-subset of the remaining vertices is classified
//!   through a lookup table indexed by labeled adjacency masks;
//! * anchored: a backtracking embedder for one type, pruning candidates with
//!   adjacency-row intersections, divided by the type's pair-fixing
//!   automorphism count.
//!
//! The reduced check only looks at types whose additional vertices all have
//! valency above the isoregularity level, which is enough once the graph is
//! known to be k-isoregular and to satisfy the (t-1)-vertex condition.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::BitSet;
use crate::exec::{map_indexed, scan_uniform, Ctx, Scan};
use crate::graph::{canonical_code, for_each_permutation, pair_bit, CanonicalCode, Graph};
use crate::regularity::{check_isoregular, check_regular, MAX_ISOREGULARITY_LEVEL};

/// Largest type order handled at all.
pub const MAX_TYPE_ORDER: usize = 8;
/// Largest order with a full classification table (2^21 labeled masks).
pub const MAX_EXHAUSTIVE_ORDER: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TvcError {
    OrderOutOfRange { t: usize },
    MinValencyOutOfRange { t: usize, min: usize },
    ExhaustiveTooLarge { t: usize },
    BadPair { x: usize, y: usize },
    NotIsoregular { k: usize },
    LowerLevelViolated { t: usize },
    BadType,
}

impl fmt::Display for TvcError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TvcError::OrderOutOfRange { t } => write!(f, "order {t} outside the supported range"),
            TvcError::MinValencyOutOfRange { t, min } => {
                write!(f, "minimum valency {min} impossible in a type of order {t}")
            }
            TvcError::ExhaustiveTooLarge { t } => {
                write!(f, "exhaustive mode supports t <= {MAX_EXHAUSTIVE_ORDER}, got {t}; use reduced mode")
            }
            TvcError::BadPair { x, y } => write!(f, "({x}, {y}) is not a pair of distinct vertices"),
            TvcError::NotIsoregular { k } => write!(f, "reduced mode needs a {k}-isoregular graph"),
            TvcError::LowerLevelViolated { t } => {
                write!(f, "reduced mode needs the {t}-vertex condition, which fails")
            }
            TvcError::BadType => write!(f, "a graph type needs between 2 and {MAX_TYPE_ORDER} vertices"),
        }
    }
}

impl core::error::Error for TvcError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairClass {
    Edge,
    NonEdge,
}

impl PairClass {
    pub fn of(g: &Graph, x: usize, y: usize) -> Self {
        if g.has_edge(x, y) {
            PairClass::Edge
        } else {
            PairClass::NonEdge
        }
    }
}

/// A small graph whose slots 0 and 1 are the fixed vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GraphType {
    pub base: Graph,
    pub pair_adjacent: bool,
    pub code: CanonicalCode,
}

impl GraphType {
    pub fn new(base: Graph) -> Result<Self, TvcError> {
        if !(2..=MAX_TYPE_ORDER).contains(&base.order()) {
            return Err(TvcError::BadType);
        }
        let code = canonical_code(&base, Some((0, 1))).map_err(|_| TvcError::BadType)?;
        Ok(GraphType { pair_adjacent: base.has_edge(0, 1), base, code })
    }

    fn from_code(code: CanonicalCode) -> Self {
        GraphType { base: code.graph(), pair_adjacent: code.bits & 1 == 1, code }
    }

    pub fn order(&self) -> usize {
        self.base.order()
    }

    pub fn pair_class(&self) -> PairClass {
        if self.pair_adjacent {
            PairClass::Edge
        } else {
            PairClass::NonEdge
        }
    }

    /// Smallest valency among the additional vertices (slots 2..).
    pub fn min_additional_valency(&self) -> Option<usize> {
        (2..self.order()).map(|v| self.base.degree(v)).min()
    }

    /// The same graph with the two fixed vertices exchanged.
    pub fn swapped(&self) -> GraphType {
        let mut perm: Vec<usize> = (0..self.order()).collect();
        perm.swap(0, 1);
        GraphType::new(self.base.permuted(&perm)).expect("same order")
    }

    /// Number of permutations of the additional slots preserving adjacency.
    pub fn automorphisms(&self) -> u64 {
        let t = self.order();
        let mask = self.base.mask();
        let mut free: Vec<usize> = (2..t).collect();
        let mut count = 0;
        let mut perm: Vec<usize> = (0..t).collect();
        for_each_permutation(&mut free, |p| {
            perm[2..].copy_from_slice(p);
            if self.base.permuted(&perm).mask() == mask {
                count += 1;
            }
        });
        count
    }
}

/// Classification table for labeled graphs of one order with slots 0 and 1
/// fixed: labeled mask → class, class → canonical (minimal) mask.
pub struct TypeTable {
    t: usize,
    class_of: Vec<u32>,
    reps: Vec<u64>,
    swap: Vec<u32>,
}

fn relabel_map(t: usize, perm: &[usize]) -> Vec<u8> {
    let mut map = vec![0u8; t * (t - 1) / 2];
    for j in 1..t {
        for i in 0..j {
            let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
            map[pair_bit(i, j)] = pair_bit(a, b) as u8;
        }
    }
    map
}

#[inline]
fn apply_map(map: &[u8], mask: u64) -> u64 {
    let mut out = 0;
    let mut m = mask;
    while m != 0 {
        let b = m.trailing_zeros() as usize;
        m &= m - 1;
        out |= 1 << map[b];
    }
    out
}

impl TypeTable {
    pub fn new(t: usize) -> Result<Self, TvcError> {
        if !(2..=MAX_EXHAUSTIVE_ORDER).contains(&t) {
            return Err(TvcError::ExhaustiveTooLarge { t });
        }
        let bits = t * (t - 1) / 2;
        let mut maps = Vec::new();
        let mut free: Vec<usize> = (2..t).collect();
        for_each_permutation(&mut free, |p| {
            let mut perm = vec![0, 1];
            perm.extend_from_slice(p);
            maps.push(relabel_map(t, &perm));
        });
        let mut class_of = vec![u32::MAX; 1 << bits];
        let mut reps = Vec::new();
        for mask in 0..1u64 << bits {
            if class_of[mask as usize] != u32::MAX {
                continue;
            }
            // Ascending scan: the first member met is the orbit minimum.
            let id = reps.len() as u32;
            reps.push(mask);
            for map in &maps {
                class_of[apply_map(map, mask) as usize] = id;
            }
        }
        let mut swap_perm: Vec<usize> = (0..t).collect();
        swap_perm.swap(0, 1);
        let swap_map = relabel_map(t, &swap_perm);
        let swap = reps.iter().map(|&r| class_of[apply_map(&swap_map, r) as usize]).collect();
        Ok(TypeTable { t, class_of, reps, swap })
    }

    pub fn order(&self) -> usize {
        self.t
    }

    pub fn num_classes(&self) -> usize {
        self.reps.len()
    }

    #[inline]
    pub fn class_of(&self, mask: u64) -> usize {
        self.class_of[mask as usize] as usize
    }

    pub fn code(&self, class: usize) -> CanonicalCode {
        let bits = self.reps[class];
        CanonicalCode { order: self.t as u8, pair_flag: Some(bits & 1 == 1), bits }
    }

    pub fn graph_type(&self, class: usize) -> GraphType {
        GraphType::from_code(self.code(class))
    }

    /// Class of the same labeled graph with slots 0 and 1 exchanged.
    pub fn swapped(&self, class: usize) -> usize {
        self.swap[class] as usize
    }

    /// Anchored counts of every class at `(x, y)`, indexed by class.
    pub fn dense_fingerprint(&self, g: &Graph, x: usize, y: usize) -> Vec<u64> {
        let mut counts = vec![0u64; self.reps.len()];
        let rest: Vec<usize> = (0..g.order()).filter(|&v| v != x && v != y).collect();
        let mut slots = [0usize; MAX_EXHAUSTIVE_ORDER];
        slots[0] = x;
        slots[1] = y;
        let start = g.has_edge(x, y) as u64;
        self.descend(g, &rest, &mut slots, 2, 0, start, &mut counts);
        counts
    }

    #[allow(clippy::too_many_arguments)]
    fn descend(
        &self,
        g: &Graph,
        rest: &[usize],
        slots: &mut [usize; MAX_EXHAUSTIVE_ORDER],
        depth: usize,
        from: usize,
        mask: u64,
        counts: &mut [u64],
    ) {
        if depth == self.t {
            counts[self.class_of[mask as usize] as usize] += 1;
            return;
        }
        let shift = depth * (depth - 1) / 2;
        let remaining = self.t - 1 - depth;
        for idx in from..rest.len().saturating_sub(remaining) {
            let v = rest[idx];
            let mut m = mask;
            for (i, &s) in slots[..depth].iter().enumerate() {
                if g.has_edge(s, v) {
                    m |= 1 << (shift + i);
                }
            }
            slots[depth] = v;
            self.descend(g, rest, slots, depth + 1, idx + 1, m, counts);
        }
    }
}

/// Anchored counts of every type of one order at one ordered pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub pair_class: PairClass,
    pub counts: BTreeMap<CanonicalCode, u64>,
}

impl Fingerprint {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

fn check_pair(g: &Graph, x: usize, y: usize) -> Result<(), TvcError> {
    if x == y || x >= g.order() || y >= g.order() {
        return Err(TvcError::BadPair { x, y });
    }
    Ok(())
}

/// Exhaustive census of the (t-2)-subsets around `(x, y)`.
pub fn pair_fingerprint(g: &Graph, t: usize, x: usize, y: usize) -> Result<Fingerprint, TvcError> {
    check_pair(g, x, y)?;
    if t < 3 {
        return Err(TvcError::OrderOutOfRange { t });
    }
    let table = TypeTable::new(t)?;
    Ok(fingerprint_with(&table, g, x, y))
}

pub fn fingerprint_with(table: &TypeTable, g: &Graph, x: usize, y: usize) -> Fingerprint {
    let dense = table.dense_fingerprint(g, x, y);
    let counts = dense.iter().enumerate().filter(|(_, &c)| c > 0).map(|(class, &c)| (table.code(class), c)).collect();
    Fingerprint { pair_class: PairClass::of(g, x, y), counts }
}

/// Backtracking plan for one type: additional slots in placement order,
/// each with the already-placed slots it must and must not be adjacent to.
///
/// Interchangeable additional slots (same neighbours apart from each other)
/// are placed in increasing vertex order, which removes a factor of
/// `∏ |class|!` from the labeled count; the rest of the automorphism group
/// is divided out at the end.
struct Embedder {
    steps: Vec<Step>,
    divisor: u64,
    pair_adjacent: bool,
}

struct Step {
    adj: Vec<usize>,
    non: Vec<usize>,
    /// Placement index of the previous slot of the same twin class.
    after: Option<usize>,
}

impl Embedder {
    fn new(ty: &GraphType) -> Self {
        let t = ty.order();
        let g = &ty.base;
        let twins = |u: usize, v: usize| (0..t).all(|w| w == u || w == v || g.has_edge(u, w) == g.has_edge(v, w));
        let mut class = vec![usize::MAX; t];
        let mut sizes = Vec::new();
        for v in 2..t {
            if class[v] == usize::MAX {
                class[v] = sizes.len();
                let members: Vec<usize> = (v + 1..t).filter(|&u| class[u] == usize::MAX && twins(u, v)).collect();
                for &u in &members {
                    class[u] = sizes.len();
                }
                sizes.push(members.len() as u64 + 1);
            }
        }
        let mut placed: Vec<usize> = vec![0, 1];
        let mut steps = Vec::new();
        while placed.len() < t {
            let next = (2..t)
                .filter(|v| !placed.contains(v))
                .max_by_key(|&v| (placed.iter().filter(|&&p| g.has_edge(p, v)).count(), core::cmp::Reverse(v)))
                .unwrap();
            let (adj, non): (Vec<usize>, Vec<usize>) = (0..placed.len()).partition(|&i| g.has_edge(placed[i], next));
            let after = (2..placed.len()).rev().find(|&i| class[placed[i]] == class[next]);
            steps.push(Step { adj, non, after });
            placed.push(next);
        }
        let ordered: u64 = sizes.iter().map(|&k| (1..=k).product::<u64>()).product();
        let automorphisms = ty.automorphisms();
        debug_assert_eq!(automorphisms % ordered, 0);
        Embedder { steps, divisor: automorphisms / ordered, pair_adjacent: ty.pair_adjacent }
    }

    fn count(&self, g: &Graph, x: usize, y: usize) -> u64 {
        if g.has_edge(x, y) != self.pair_adjacent {
            return 0;
        }
        if self.steps.is_empty() {
            return 1;
        }
        let mut images = Vec::with_capacity(self.steps.len() + 2);
        images.extend([x, y]);
        let mut scratch = vec![0u64; g.stride() * self.steps.len()];
        self.extend(g, &mut images, &mut scratch) / self.divisor
    }

    fn extend(&self, g: &Graph, images: &mut Vec<usize>, scratch: &mut [u64]) -> u64 {
        let depth = images.len() - 2;
        let stride = g.stride();
        let step = &self.steps[depth];
        let (cand, rest) = scratch.split_at_mut(stride);
        match step.adj.first() {
            Some(&first) => cand.copy_from_slice(g.row(images[first])),
            None => {
                cand.fill(!0);
                let tail = g.order() % 64;
                if tail != 0 {
                    cand[stride - 1] = (1 << tail) - 1;
                }
            }
        }
        for &i in step.adj.iter().skip(1) {
            for (c, r) in cand.iter_mut().zip(g.row(images[i])) {
                *c &= r;
            }
        }
        for &i in &step.non {
            for (c, r) in cand.iter_mut().zip(g.row(images[i])) {
                *c &= !r;
            }
        }
        for &v in images.iter() {
            cand[v / 64] &= !(1 << (v % 64));
        }
        if let Some(i) = step.after {
            // keep only vertices above the twin's image
            let bound = images[i] + 1;
            for w in cand.iter_mut().take(bound / 64) {
                *w = 0;
            }
            if !bound.is_multiple_of(64) {
                cand[bound / 64] &= !((1u64 << (bound % 64)) - 1);
            }
        }
        if depth + 1 == self.steps.len() {
            return cand.iter().map(|w| w.count_ones() as u64).sum();
        }
        let mut total = 0;
        for wi in 0..stride {
            let mut word = cand[wi];
            while word != 0 {
                let v = wi * 64 + word.trailing_zeros() as usize;
                word &= word - 1;
                images.push(v);
                total += self.extend(g, images, rest);
                images.pop();
            }
        }
        total
    }
}

/// Number of vertex sets around `(x, y)` inducing `ty` with slot 0 at `x`
/// and slot 1 at `y`.
pub fn count_type_anchored(g: &Graph, ty: &GraphType, x: usize, y: usize) -> Result<u64, TvcError> {
    check_pair(g, x, y)?;
    Ok(Embedder::new(ty).count(g, x, y))
}

/// Anchored counts of `ty` over every pair of its class, as a histogram
/// `count → number of pairs`. `None` if the budget ran out.
pub fn type_census(g: &Graph, ty: &GraphType, ctx: Ctx<'_>) -> Option<BTreeMap<u64, u64>> {
    let pairs: Vec<(usize, usize)> = if ty.pair_adjacent { g.edges().collect() } else { g.non_edges().collect() };
    let emb = Embedder::new(ty);
    let counts = map_indexed(ctx, pairs.len(), |i| emb.count(g, pairs[i].0, pairs[i].1))?;
    let mut histogram = BTreeMap::new();
    for c in counts {
        *histogram.entry(c).or_insert(0) += 1;
    }
    Some(histogram)
}

/// Every type of order exactly `t` whose additional vertices have valency at
/// least `min_add_valency`, both pair classes, ordered by edge count and then
/// canonical mask.
pub fn enumerate_types(t: usize, min_add_valency: usize) -> Result<Vec<GraphType>, TvcError> {
    if !(2..=MAX_TYPE_ORDER).contains(&t) {
        return Err(TvcError::OrderOutOfRange { t });
    }
    if min_add_valency > t - 1 {
        return Err(TvcError::MinValencyOutOfRange { t, min: min_add_valency });
    }
    let mut codes: Vec<CanonicalCode> = if t <= MAX_EXHAUSTIVE_ORDER {
        let table = TypeTable::new(t)?;
        (0..table.num_classes())
            .map(|c| table.code(c))
            .filter(|c| min_valency_of(t, c.bits) >= min_add_valency)
            .collect()
    } else {
        extend_by_one(&enumerate_types(t - 1, min_add_valency.saturating_sub(1))?, min_add_valency)
    };
    codes.sort_by_key(|c| (c.edge_count(), c.bits));
    Ok(codes.into_iter().map(GraphType::from_code).collect())
}

fn min_valency_of(t: usize, mask: u64) -> usize {
    (2..t)
        .map(|v| (0..t).filter(|&u| u != v && mask >> pair_bit(u.min(v), u.max(v)) & 1 == 1).count())
        .min()
        .unwrap_or(usize::MAX)
}

/// Types of order `t + 1` obtained by adding one vertex to each given type
/// of order `t`. Removing any additional vertex lowers the others' valency
/// by at most one, so every order-(t+1) type with minimum additional
/// valency `min` arises from an order-t type with minimum at least `min - 1`.
fn extend_by_one(smaller: &[GraphType], min: usize) -> Vec<CanonicalCode> {
    let mut found = BTreeSet::new();
    for ty in smaller {
        let t = ty.order();
        let base = ty.base.mask();
        for nbrs in 0u64..1 << t {
            let mut mask = base;
            for i in 0..t {
                if nbrs >> i & 1 == 1 {
                    mask |= 1 << pair_bit(i, t);
                }
            }
            if min_valency_of(t + 1, mask) < min {
                continue;
            }
            let code = canonical_code(&Graph::from_mask(t + 1, mask), Some((0, 1))).expect("order <= 8");
            found.insert(code);
        }
    }
    found.into_iter().collect()
}

/// Types grouped up to exchanging the fixed vertices and ignoring whether
/// they are adjacent: the granularity of a hand-drawn table where the edge
/// between the fixed vertices is optional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeShape {
    /// Canonical mask of the shape with the fixed pair non-adjacent.
    pub code: CanonicalCode,
    /// Anchored types (slot order and pair edge significant) in this shape.
    pub members: Vec<CanonicalCode>,
}

pub fn type_shapes(types: &[GraphType]) -> Vec<TypeShape> {
    let mut shapes: BTreeMap<CanonicalCode, Vec<CanonicalCode>> = BTreeMap::new();
    for ty in types {
        let mut plain = ty.base.clone();
        if ty.pair_adjacent {
            let t = plain.order();
            plain = Graph::from_mask(t, plain.mask() & !1);
        }
        let a = canonical_code(&plain, Some((0, 1))).unwrap();
        let b = canonical_code(&plain, Some((1, 0))).unwrap();
        shapes.entry(a.min(b)).or_default().push(ty.code);
    }
    shapes.into_iter().map(|(code, members)| TypeShape { code, members }).collect()
}

pub fn enumerate_type_shapes(t: usize, min_add_valency: usize) -> Result<Vec<TypeShape>, TvcError> {
    Ok(type_shapes(&enumerate_types(t, min_add_valency)?))
}

/// An orbit of edge sets on `{x, y, a, b, c}` (vertices 0..5, the pair
/// `{x, y}` never used) under `S({x,y}) × S({a,b,c})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementClass {
    pub size: usize,
    /// Lexicographically least edge list in the orbit.
    pub edges: Vec<(usize, usize)>,
    pub automorphisms: usize,
    pub orbit_length: usize,
}

/// All edge sets of size at most three on five vertices avoiding `{0, 1}`,
/// up to swapping 0,1 and permuting 2,3,4.
pub fn enumerate_order5_complements() -> Vec<ComplementClass> {
    let slots: Vec<(usize, usize)> =
        (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).filter(|&p| p != (0, 1)).collect();
    let mut group: Vec<[usize; 5]> = Vec::new();
    for swap in [false, true] {
        let mut tail = [2usize, 3, 4];
        for_each_permutation(&mut tail, |p| {
            let (x, y) = if swap { (1, 0) } else { (0, 1) };
            group.push([x, y, p[0], p[1], p[2]]);
        });
    }
    let index = |(a, b): (usize, usize)| slots.iter().position(|&s| s == (a.min(b), a.max(b))).unwrap();
    let act = |g: &[usize; 5], set: u32| -> u32 {
        (0..slots.len()).filter(|&i| set >> i & 1 == 1).fold(0u32, |acc, i| {
            let (a, b) = slots[i];
            acc | 1 << index((g[a], g[b]))
        })
    };
    let mut seen = BTreeSet::new();
    let mut classes = Vec::new();
    for size in 0..=3usize {
        let mut sets: Vec<u32> = (0..1u32 << slots.len()).filter(|s| s.count_ones() as usize == size).collect();
        sets.sort_by_key(|&s| {
            let mut e: Vec<usize> = (0..slots.len()).filter(|&i| s >> i & 1 == 1).collect();
            e.sort();
            e
        });
        for set in sets {
            if seen.contains(&set) {
                continue;
            }
            let orbit: BTreeSet<u32> = group.iter().map(|g| act(g, set)).collect();
            let automorphisms = group.iter().filter(|g| act(g, set) == set).count();
            seen.extend(orbit.iter().copied());
            classes.push(ComplementClass {
                size,
                edges: (0..slots.len()).filter(|&i| set >> i & 1 == 1).map(|i| slots[i]).collect(),
                automorphisms,
                orbit_length: orbit.len(),
            });
        }
    }
    classes
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    /// Only types whose additional vertices have valency above `k`; needs
    /// k-isoregularity and the (t-1)-vertex condition.
    Reduced {
        k: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Two vertices of different valency.
    Irregular { vertices: (usize, usize), degrees: (usize, usize) },
    /// A type whose anchored counts differ on two pairs of the same class.
    Pairs { ty: GraphType, first: ((usize, usize), u64), second: ((usize, usize), u64) },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TvcStatus {
    Satisfied,
    Violated(Witness),
    /// Budget exhausted before a verdict.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TvcVerdict {
    pub t: usize,
    pub mode: Mode,
    pub status: TvcStatus,
    /// Types (reduced) or classes (exhaustive) examined.
    pub types_checked: usize,
}

impl TvcVerdict {
    pub fn satisfied(&self) -> bool {
        self.status == TvcStatus::Satisfied
    }
}

fn pair_lists(g: &Graph) -> [Vec<(usize, usize)>; 2] {
    [g.edges().collect(), g.non_edges().collect()]
}

fn irregularity(g: &Graph) -> Option<Witness> {
    if check_regular(g).is_some() {
        return None;
    }
    let d0 = g.degree(0);
    let v = (1..g.order()).find(|&v| g.degree(v) != d0).unwrap();
    Some(Witness::Irregular { vertices: (0, v), degrees: (d0, g.degree(v)) })
}

/// Recounts a claimed witness through the backtracking route and keeps it
/// only if the two counts really differ.
fn confirmed(g: &Graph, ty: GraphType, a: (usize, usize), b: (usize, usize)) -> Witness {
    let emb = Embedder::new(&ty);
    let ca = emb.count(g, a.0, a.1);
    let cb = emb.count(g, b.0, b.1);
    assert_ne!(ca, cb, "witness recount agrees; the two counting routes disagree");
    Witness::Pairs { ty, first: (a, ca), second: (b, cb) }
}

/// Decides the t-vertex condition on edges and non-edges. Pairs `x = y` are
/// not inspected; regularity is checked directly instead.
pub fn check_tvc(g: &Graph, t: usize, mode: Mode, ctx: Ctx<'_>) -> Result<TvcVerdict, TvcError> {
    if !(2..=MAX_TYPE_ORDER).contains(&t) {
        return Err(TvcError::OrderOutOfRange { t });
    }
    let verdict = |status, types_checked| TvcVerdict { t, mode, status, types_checked };
    if let Some(w) = irregularity(g) {
        return Ok(verdict(TvcStatus::Violated(w), 0));
    }
    if t == 2 || g.order() < 3 {
        return Ok(verdict(TvcStatus::Satisfied, 0));
    }
    match mode {
        Mode::Exhaustive => {
            let table = TypeTable::new(t)?;
            let status = exhaustive_scan(g, &table, ctx);
            Ok(verdict(status, table.num_classes()))
        }
        Mode::Reduced { k } => {
            if let Some(status) = reduced_preconditions(g, t, k, ctx)? {
                return Ok(verdict(status, 0));
            }
            // No vertex of a type of order t can have valency above t - 1.
            let types = if k + 1 < t { enumerate_types(t, k + 1)? } else { Vec::new() };
            let status = scan_types(g, &types, ctx);
            Ok(verdict(status, types.len()))
        }
    }
}

fn exhaustive_scan(g: &Graph, table: &TypeTable, ctx: Ctx<'_>) -> TvcStatus {
    let mut exhausted = false;
    for pairs in pair_lists(g) {
        let Some(&(x0, y0)) = pairs.first() else { continue };
        let reference = table.dense_fingerprint(g, x0, y0);
        // (y0, x0) sees class c wherever (x0, y0) sees its swap.
        if let Some(c) = (0..reference.len()).find(|&c| reference[c] != reference[table.swapped(c)]) {
            return TvcStatus::Violated(confirmed(g, table.graph_type(c), (x0, y0), (y0, x0)));
        }
        match scan_uniform(ctx, 1, pairs.len(), &reference, |i| table.dense_fingerprint(g, pairs[i].0, pairs[i].1)) {
            Scan::Uniform => {}
            Scan::Exhausted => exhausted = true,
            Scan::Mismatch(i) => {
                let (x, y) = pairs[i];
                let other = table.dense_fingerprint(g, x, y);
                let c = (0..reference.len()).find(|&c| reference[c] != other[c]).unwrap();
                return TvcStatus::Violated(confirmed(g, table.graph_type(c), (x0, y0), (x, y)));
            }
        }
    }
    if exhausted {
        TvcStatus::Inconclusive
    } else {
        TvcStatus::Satisfied
    }
}

/// `Ok(Some(status))` short-circuits: the lower level ran out of budget.
fn reduced_preconditions(g: &Graph, t: usize, k: usize, ctx: Ctx<'_>) -> Result<Option<TvcStatus>, TvcError> {
    if !(1..=MAX_ISOREGULARITY_LEVEL).contains(&k) || !check_isoregular(g, k).passed() {
        return Err(TvcError::NotIsoregular { k });
    }
    if t > 3 {
        let lower = check_tvc(g, t - 1, Mode::Reduced { k }, ctx)?;
        match lower.status {
            TvcStatus::Satisfied => {}
            TvcStatus::Inconclusive => return Ok(Some(TvcStatus::Inconclusive)),
            TvcStatus::Violated(_) => return Err(TvcError::LowerLevelViolated { t: t - 1 }),
        }
    } else if crate::regularity::srg_parameters(g) == Ok(None) {
        return Err(TvcError::LowerLevelViolated { t: 2 });
    }
    Ok(None)
}

/// First type (in the given order) whose anchored counts are not constant
/// on its pair class.
fn scan_types(g: &Graph, types: &[GraphType], ctx: Ctx<'_>) -> TvcStatus {
    let [edges, non_edges] = pair_lists(g);
    let mut exhausted = false;
    let position: BTreeMap<CanonicalCode, usize> = types.iter().enumerate().map(|(i, ty)| (ty.code, i)).collect();
    let embedders: Vec<Embedder> = types.iter().map(Embedder::new).collect();
    for (ti, ty) in types.iter().enumerate() {
        let pairs = if ty.pair_adjacent { &edges } else { &non_edges };
        let Some(&(x0, y0)) = pairs.first() else { continue };
        let emb = &embedders[ti];
        let reference = emb.count(g, x0, y0);
        let swapped = ty.swapped();
        let mirror = match position.get(&swapped.code) {
            Some(&j) => embedders[j].count(g, x0, y0),
            None => Embedder::new(&swapped).count(g, x0, y0),
        };
        if mirror != reference {
            return TvcStatus::Violated(confirmed(g, ty.clone(), (x0, y0), (y0, x0)));
        }
        match scan_uniform(ctx, 1, pairs.len(), &reference, |i| emb.count(g, pairs[i].0, pairs[i].1)) {
            Scan::Uniform => {}
            Scan::Exhausted => {
                exhausted = true;
                break;
            }
            Scan::Mismatch(i) => return TvcStatus::Violated(confirmed(g, ty.clone(), (x0, y0), pairs[i])),
        }
    }
    if exhausted {
        TvcStatus::Inconclusive
    } else {
        TvcStatus::Satisfied
    }
}

/// First type of order `t` with additional valencies above `k` whose anchored
/// counts vary within a pair class. `Satisfied` means none exists, so the
/// t-vertex condition holds.
pub fn find_distinguisher(g: &Graph, t: usize, k: usize, ctx: Ctx<'_>) -> Result<TvcStatus, TvcError> {
    let verdict = check_tvc(g, t, Mode::Reduced { k }, ctx)?;
    Ok(verdict.status)
}

/// Per-edge census of induced K₄,₄ subgraphs with the two endpoints on
/// opposite sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K44Census {
    /// Edges scanned with their counts, in edge order.
    pub counts: Vec<((usize, usize), u64)>,
    pub distinct: BTreeSet<u64>,
    /// False when the scan stopped early (first two differing edges found,
    /// or budget exhausted).
    pub complete: bool,
    pub exhausted: bool,
}

/// Counts induced K₄,₄ containing edge `(x, y)` with `x` and `y` on
/// opposite sides.
pub fn count_k44_at_edge(g: &Graph, x: usize, y: usize) -> u64 {
    let n = g.order();
    let stride = g.stride();
    // Third-side candidates: neighbours of x off the closed neighbourhood of y.
    let mut bx = BitSet::from_words(n, g.row(x));
    bx.subtract(g.row(y));
    bx.remove(y);
    let mut ay = BitSet::from_words(n, g.row(y));
    ay.subtract(g.row(x));
    ay.remove(x);
    let bxs: Vec<usize> = bx.iter().collect();
    let mut total = 0u64;
    let mut c1 = vec![0u64; stride];
    let mut c2 = vec![0u64; stride];
    let mut b3c = vec![0u64; stride];
    for (i, &b1) in bxs.iter().enumerate() {
        for (w, (a, r)) in c1.iter_mut().zip(ay.words().iter().zip(g.row(b1))) {
            *w = a & r;
        }
        if c1.iter().map(|w| w.count_ones()).sum::<u32>() < 3 {
            continue;
        }
        for &b2 in &bxs[i + 1..] {
            if g.has_edge(b1, b2) {
                continue;
            }
            for (w, (a, r)) in c2.iter_mut().zip(c1.iter().zip(g.row(b2))) {
                *w = a & r;
            }
            let cands: Vec<usize> = crate::bitset::Ones::over(&c2).collect();
            if cands.len() < 3 {
                continue;
            }
            for (p, &a1) in cands.iter().enumerate() {
                for (q, &a2) in cands.iter().enumerate().skip(p + 1) {
                    if g.has_edge(a1, a2) {
                        continue;
                    }
                    for &a3 in &cands[q + 1..] {
                        if g.has_edge(a1, a3) || g.has_edge(a2, a3) {
                            continue;
                        }
                        // b3 > b2 adjacent to x, a1, a2, a3 and not to y, b1, b2
                        for (k, w) in b3c.iter_mut().enumerate() {
                            *w = bx.words()[k]
                                & g.row(a1)[k]
                                & g.row(a2)[k]
                                & g.row(a3)[k]
                                & !g.row(b1)[k]
                                & !g.row(b2)[k];
                        }
                        total += crate::bitset::Ones::over(&b3c).filter(|&b3| b3 > b2).count() as u64;
                    }
                }
            }
        }
    }
    total
}

/// Scans edges in order. With `stop_at_difference`, stops once two edges
/// with different counts are known.
pub fn count_k44_per_edge(g: &Graph, stop_at_difference: bool, ctx: Ctx<'_>) -> K44Census {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.is_empty() {
        return K44Census { counts: Vec::new(), distinct: BTreeSet::new(), complete: true, exhausted: false };
    }
    if stop_at_difference {
        let (x0, y0) = edges[0];
        let reference = count_k44_at_edge(g, x0, y0);
        let scan = scan_uniform(ctx, 1, edges.len(), &reference, |i| count_k44_at_edge(g, edges[i].0, edges[i].1));
        let mut counts = vec![(edges[0], reference)];
        let (complete, exhausted) = match scan {
            Scan::Uniform => (true, false),
            Scan::Exhausted => (false, true),
            Scan::Mismatch(i) => {
                counts.push((edges[i], count_k44_at_edge(g, edges[i].0, edges[i].1)));
                (false, false)
            }
        };
        let distinct = counts.iter().map(|&(_, c)| c).collect();
        return K44Census { counts, distinct, complete, exhausted };
    }
    match map_indexed(ctx, edges.len(), |i| count_k44_at_edge(g, edges[i].0, edges[i].1)) {
        Some(values) => {
            let distinct = values.iter().copied().collect();
            K44Census { counts: edges.into_iter().zip(values).collect(), distinct, complete: true, exhausted: false }
        }
        None => K44Census { counts: Vec::new(), distinct: BTreeSet::new(), complete: false, exhausted: true },
    }
}

/// Graphs that can remain as the additional-vertex subgraph of a minimal
/// distinguishing type for a GQ(s, s²) point graph at level `t0`.
///
/// Conditions: order `t0 - 2`, not complete, minimum valency at least 2, no
/// clique of size `t0 - 4`, every vertex outside a maximal clique sees at
/// most one of its vertices, and the valency-2 vertices fit one of the two
/// pair classes: for an adjacent pair they form a clique of at most three
/// vertices; for a non-adjacent pair they are independent, at least two
/// vertices have valency three or more, and no valency-3 vertex is adjacent
/// to two valency-2 vertices.
pub fn enumerate_s_candidates(t0: usize) -> Result<Vec<Graph>, TvcError> {
    if !(6..=8).contains(&t0) {
        return Err(TvcError::OrderOutOfRange { t: t0 });
    }
    let m = t0 - 2;
    let mut found: BTreeSet<CanonicalCode> = BTreeSet::new();
    for mask in 0..1u64 << (m * (m - 1) / 2) {
        let g = Graph::from_mask(m, mask);
        if admissible_s(&g, t0) {
            found.insert(canonical_code(&g, None).expect("order <= 6"));
        }
    }
    Ok(found.into_iter().map(|c| c.graph()).collect())
}

fn cliques(g: &Graph) -> Vec<u64> {
    let m = g.order();
    (1..1u64 << m)
        .filter(|&s| {
            let vs: Vec<usize> = (0..m).filter(|&v| s >> v & 1 == 1).collect();
            vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
        })
        .collect()
}

fn admissible_s(g: &Graph, t0: usize) -> bool {
    let m = g.order();
    let deg: Vec<usize> = (0..m).map(|v| g.degree(v)).collect();
    if deg.iter().any(|&d| d < 2) || g.edge_count() == m * (m - 1) / 2 {
        return false;
    }
    let all = cliques(g);
    if all.iter().any(|c| c.count_ones() as usize >= t0 - 4) {
        return false;
    }
    let maximal = all.iter().filter(|&&c| !all.iter().any(|&d| d != c && d & c == c));
    for &c in maximal {
        for z in (0..m).filter(|&z| c >> z & 1 == 0) {
            if (0..m).filter(|&v| c >> v & 1 == 1 && g.has_edge(z, v)).count() > 1 {
                return false;
            }
        }
    }
    let low: Vec<usize> = (0..m).filter(|&v| deg[v] == 2).collect();
    let low_edges =
        low.iter().enumerate().map(|(i, &a)| low[i + 1..].iter().filter(|&&b| g.has_edge(a, b)).count()).sum::<usize>();
    let low_complete = low_edges == low.len() * low.len().saturating_sub(1) / 2;
    let adjacent_ok = low_complete && low.len() <= 3;
    let non_adjacent_ok = low_edges == 0
        && deg.iter().filter(|&&d| d >= 3).count() >= 2
        && (0..m).filter(|&v| deg[v] == 3).all(|v| low.iter().filter(|&&u| g.has_edge(u, v)).count() <= 1);
    adjacent_ok || non_adjacent_ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial;
    use crate::geometry::{build_elliptic_gq, build_symplectic_gq, point_graph};

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn k_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)))).unwrap()
    }

    #[test]
    fn table_sizes() {
        assert_eq!(TypeTable::new(2).unwrap().num_classes(), 2);
        assert_eq!(TypeTable::new(3).unwrap().num_classes(), 8);
        assert_eq!(TypeTable::new(4).unwrap().num_classes(), 40);
        assert!(TypeTable::new(8).is_err());
    }

    #[test]
    fn table_codes_match_brute_force() {
        let table = TypeTable::new(5).unwrap();
        for mask in (0..1u64 << 10).step_by(7) {
            let code = canonical_code(&Graph::from_mask(5, mask), Some((0, 1))).unwrap();
            assert_eq!(table.code(table.class_of(mask)), code);
        }
    }

    #[test]
    fn type_counts() {
        assert_eq!(enumerate_types(2, 0).unwrap().len(), 2);
        assert_eq!(enumerate_types(4, 0).unwrap().len(), 40);
        assert_eq!(enumerate_types(5, 3).unwrap().len(), 26);
        assert_eq!(enumerate_type_shapes(5, 3).unwrap().len(), 8);
        assert!(enumerate_types(9, 0).is_err());
        assert!(enumerate_types(4, 4).is_err());
    }

    #[test]
    fn types_are_ordered_by_edges() {
        let types = enumerate_types(5, 3).unwrap();
        let keys: Vec<_> = types.iter().map(|t| (t.code.edge_count(), t.code.bits)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert!(types.iter().all(|t| t.min_additional_valency().unwrap() >= 3));
    }

    #[test]
    fn order8_extension_agrees_with_table_at_order7() {
        let direct = enumerate_types(7, 5).unwrap();
        let six = enumerate_types(6, 4).unwrap();
        let mut extended = extend_by_one(&six, 5);
        extended.sort_by_key(|c| (c.edge_count(), c.bits));
        assert_eq!(direct.iter().map(|t| t.code).collect::<Vec<_>>(), extended);
        let eight = enumerate_types(8, 6).unwrap();
        assert!(eight.iter().all(|t| t.order() == 8 && t.min_additional_valency().unwrap() >= 6));
        assert!(!eight.is_empty());
    }

    #[test]
    fn complement_census() {
        let classes = enumerate_order5_complements();
        for (size, n_classes, total) in [(0, 1, 1), (1, 2, 9), (2, 6, 36), (3, 12, 84)] {
            let of: Vec<_> = classes.iter().filter(|c| c.size == size).collect();
            assert_eq!(of.len(), n_classes);
            assert_eq!(of.iter().map(|c| c.orbit_length).sum::<usize>(), total);
            assert!(of.iter().all(|c| c.orbit_length * c.automorphisms == 12));
        }
    }

    #[test]
    fn fingerprint_in_complete_graph() {
        let k5 = Graph::complete(5);
        let fp = pair_fingerprint(&k5, 3, 0, 1).unwrap();
        assert_eq!(fp.counts.len(), 1);
        assert_eq!(fp.total(), 3);
        assert_eq!(fp.counts.keys().next().unwrap().bits, 0b111);
        assert!(pair_fingerprint(&k5, 3, 1, 1).is_err());
    }

    #[test]
    fn fingerprint_conservation() {
        let g = point_graph(&build_symplectic_gq(2).unwrap());
        let table = TypeTable::new(5).unwrap();
        for (x, y) in [(0, 1), (3, 9), (14, 2)] {
            let fp = fingerprint_with(&table, &g, x, y);
            assert_eq!(fp.total(), binomial(13, 3));
        }
    }

    #[test]
    fn anchored_count_matches_fingerprint() {
        let g = point_graph(&build_symplectic_gq(2).unwrap());
        let table = TypeTable::new(5).unwrap();
        let fp = table.dense_fingerprint(&g, 4, 11);
        for class in 0..table.num_classes() {
            let ty = table.graph_type(class);
            assert_eq!(count_type_anchored(&g, &ty, 4, 11).unwrap(), fp[class], "class {class}");
        }
    }

    #[test]
    fn small_verdicts() {
        let c6 = cycle(6);
        let v = check_tvc(&c6, 3, Mode::Exhaustive, Ctx::sequential()).unwrap();
        assert!(matches!(v.status, TvcStatus::Violated(Witness::Pairs { .. })));
        assert!(check_tvc(&c6, 2, Mode::Exhaustive, Ctx::sequential()).unwrap().satisfied());
        let w2 = point_graph(&build_symplectic_gq(2).unwrap());
        assert!(check_tvc(&w2, 4, Mode::Exhaustive, Ctx::sequential()).unwrap().satisfied());
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let v = check_tvc(&path, 3, Mode::Exhaustive, Ctx::sequential()).unwrap();
        assert!(matches!(v.status, TvcStatus::Violated(Witness::Irregular { .. })));
    }

    #[test]
    fn reduced_needs_preconditions() {
        let c6 = cycle(6);
        assert_eq!(check_tvc(&c6, 4, Mode::Reduced { k: 2 }, Ctx::sequential()), Err(TvcError::NotIsoregular { k: 2 }));
        let gq24 = point_graph(&build_elliptic_gq(2).unwrap());
        let v = check_tvc(&gq24, 5, Mode::Reduced { k: 3 }, Ctx::sequential()).unwrap();
        assert!(v.satisfied());
    }

    #[test]
    fn k44_small() {
        let k44 = k_bipartite(4, 4);
        let census = count_k44_per_edge(&k44, false, Ctx::sequential());
        assert_eq!(census.counts.len(), 16);
        assert!(census.counts.iter().all(|&(_, c)| c == 1));
        let census = count_k44_per_edge(&cycle(7), false, Ctx::sequential());
        assert!(census.counts.iter().all(|&(_, c)| c == 0));
        // K_{5,4}: an edge lies in C(4,3) * C(3,3) = 4 copies
        assert_eq!(count_k44_at_edge(&k_bipartite(5, 4), 0, 5), 4);
    }

    #[test]
    fn s_candidates() {
        assert!(enumerate_s_candidates(6).unwrap().is_empty());
        assert!(enumerate_s_candidates(7).unwrap().is_empty());
        let eight = enumerate_s_candidates(8).unwrap();
        assert_eq!(eight.len(), 5);
        let prism =
            Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
        let prism_minus =
            Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (1, 4), (2, 5)]).unwrap();
        let mut k33e = k_bipartite(3, 3).edges().collect::<Vec<_>>();
        k33e.retain(|&e| e != (0, 3));
        let named = [k_bipartite(3, 3), k_bipartite(4, 2), Graph::from_edges(6, k33e).unwrap(), prism, prism_minus];
        let got: BTreeSet<_> = eight.iter().map(|g| canonical_code(g, None).unwrap()).collect();
        let want: BTreeSet<_> = named.iter().map(|g| canonical_code(g, None).unwrap()).collect();
        assert_eq!(got, want);
        assert!(enumerate_s_candidates(9).is_err());
    }
}
