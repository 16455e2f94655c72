//! Closed-form anchored counts in generalised quadrangles, and a harness
//! comparing them with brute-force counts on a concrete quadrangle.
//!
//! Order-5 types are named by the non-edges among `x, y, a, b, c` other
//! than `{x, y}` (slots 0..5): type 0 has none, 1a `{x,a}`, 1b `{a,b}`,
//! 2a `{x,a},{x,b}`, 2b `{x,a},{y,b}`, 2c `{x,a},{b,c}`, 3a
//! `{x,a},{x,b},{x,c}`, 3b `{x,a},{x,b},{y,c}`. Types 1a, 1b, 2b, 2c and 3b
//! contain an induced K₄−e and never occur.
//!
//! Complete-S types put a clique `S` on slots `2..` and attach `x` and `y`
//! to it with `d_x ≥ d_y ∈ {0, 1, |S|}` neighbours. Their formulas assume a
//! quadrangle of order `(s, s²)`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::binomial;
use crate::exec::{scan_uniform, Ctx, Scan};
use crate::geometry::{check_gq_axiom, point_graph, validate_pls, GqWitness, PartialLinearSpace, PlsWitness};
use crate::graph::Graph;
use crate::tvc::{count_type_anchored, GraphType, MAX_TYPE_ORDER};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order5Type {
    T0,
    T1a,
    T1b,
    T2a,
    T2b,
    T2c,
    T3a,
    T3b,
}

impl Order5Type {
    pub const ALL: [Order5Type; 8] = [
        Order5Type::T0,
        Order5Type::T1a,
        Order5Type::T1b,
        Order5Type::T2a,
        Order5Type::T2b,
        Order5Type::T2c,
        Order5Type::T3a,
        Order5Type::T3b,
    ];

    fn name(self) -> &'static str {
        match self {
            Order5Type::T0 => "0",
            Order5Type::T1a => "1a",
            Order5Type::T1b => "1b",
            Order5Type::T2a => "2a",
            Order5Type::T2b => "2b",
            Order5Type::T2c => "2c",
            Order5Type::T3a => "3a",
            Order5Type::T3b => "3b",
        }
    }

    /// Missing edges besides `{x, y}`, with x=0, y=1, a=2, b=3, c=4.
    pub fn non_edges(self) -> &'static [(usize, usize)] {
        match self {
            Order5Type::T0 => &[],
            Order5Type::T1a => &[(0, 2)],
            Order5Type::T1b => &[(2, 3)],
            Order5Type::T2a => &[(0, 2), (0, 3)],
            Order5Type::T2b => &[(0, 2), (1, 3)],
            Order5Type::T2c => &[(0, 2), (3, 4)],
            Order5Type::T3a => &[(0, 2), (0, 3), (0, 4)],
            Order5Type::T3b => &[(0, 2), (0, 3), (1, 4)],
        }
    }

    /// True for the types that contain an induced K₄−e.
    pub fn excluded(self) -> bool {
        !matches!(self, Order5Type::T0 | Order5Type::T2a | Order5Type::T3a)
    }
}

/// Attachment of `x` and `y` to the clique `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CompleteCase {
    /// `(|S|, |S|)`.
    FullFull,
    /// `(|S|, 1)`; on an edge `y`'s neighbour on the line of `S` is `x`
    /// itself, so `y` sees no vertex of `S`.
    FullOne,
    /// `(|S|, 0)`; only defined on non-edges.
    FullZero,
    /// `(1, 1)`, with `same` when `x` and `y` see the same vertex of `S`.
    OneOne { same: bool },
    /// `(1, 0)`.
    OneZero,
    /// `(0, 0)`.
    ZeroZero,
}

impl CompleteCase {
    pub const ALL: [CompleteCase; 7] = [
        CompleteCase::FullFull,
        CompleteCase::FullOne,
        CompleteCase::FullZero,
        CompleteCase::OneOne { same: false },
        CompleteCase::OneOne { same: true },
        CompleteCase::OneZero,
        CompleteCase::ZeroZero,
    ];

    fn name(self) -> &'static str {
        match self {
            CompleteCase::FullFull => "full-full",
            CompleteCase::FullOne => "full-one",
            CompleteCase::FullZero => "full-zero",
            CompleteCase::OneOne { same: false } => "one-one-distinct",
            CompleteCase::OneOne { same: true } => "one-one-same",
            CompleteCase::OneZero => "one-zero",
            CompleteCase::ZeroZero => "zero-zero",
        }
    }

    pub fn defined(self, adjacent: bool) -> bool {
        !(self == CompleteCase::FullZero && adjacent)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormulaId {
    Order5(Order5Type),
    CompleteS {
        case: CompleteCase,
        size: usize,
    },
    /// A clique `{x, y, w, z, c}` glued at `c` to a clique `C'` of size
    /// `order - 4`; the configuration where `w` and `z` see the same vertex
    /// of `C'`.
    CliqueBridge {
        order: usize,
    },
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormulaId::Order5(t) => write!(f, "type{}", t.name()),
            FormulaId::CompleteS { case, size } => write!(f, "complete-{}/{size}", case.name()),
            FormulaId::CliqueBridge { order } => write!(f, "bridge/{order}"),
        }
    }
}

impl FromStr for FormulaId {
    type Err = FormulaError;

    fn from_str(s: &str) -> Result<Self, FormulaError> {
        if let Some(rest) = s.strip_prefix("type") {
            return Order5Type::ALL
                .into_iter()
                .find(|t| t.name() == rest)
                .map(FormulaId::Order5)
                .ok_or(FormulaError::UnknownId);
        }
        let (head, size) = s.split_once('/').ok_or(FormulaError::UnknownId)?;
        let size: usize = size.parse().map_err(|_| FormulaError::UnknownId)?;
        let id = if head == "bridge" {
            FormulaId::CliqueBridge { order: size }
        } else {
            let case = head.strip_prefix("complete-").ok_or(FormulaError::UnknownId)?;
            let case = CompleteCase::ALL.into_iter().find(|c| c.name() == case).ok_or(FormulaError::UnknownId)?;
            FormulaId::CompleteS { case, size }
        };
        id.graph_order()?;
        Ok(id)
    }
}

impl FormulaId {
    /// Every formula with complete-S sizes in `sizes`, and the bridge
    /// formula at every order its type fits.
    pub fn catalogue(sizes: core::ops::RangeInclusive<usize>) -> Vec<FormulaId> {
        let mut ids: Vec<FormulaId> = Order5Type::ALL.into_iter().map(FormulaId::Order5).collect();
        for size in sizes {
            ids.extend(CompleteCase::ALL.into_iter().map(|case| FormulaId::CompleteS { case, size }));
        }
        ids.extend((6..=MAX_TYPE_ORDER).map(|order| FormulaId::CliqueBridge { order }));
        ids
    }

    fn graph_order(self) -> Result<usize, FormulaError> {
        let order = match self {
            FormulaId::Order5(_) => 5,
            // With a single vertex in S the attachment cases coincide.
            FormulaId::CompleteS { size, .. } if size < 2 => return Err(FormulaError::BadSize),
            FormulaId::CompleteS { size, .. } => size + 2,
            FormulaId::CliqueBridge { order } if order < 6 => return Err(FormulaError::BadSize),
            FormulaId::CliqueBridge { order } => order,
        };
        if order > MAX_TYPE_ORDER {
            return Err(FormulaError::BadSize);
        }
        Ok(order)
    }

    fn needs_square_order(self) -> bool {
        !matches!(self, FormulaId::Order5(_))
    }

    /// The type counted by this formula, with the fixed pair adjacent or not.
    pub fn graph_type(self, adjacent: bool) -> Result<GraphType, FormulaError> {
        let n = self.graph_order()?;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        match self {
            FormulaId::Order5(t) => {
                for i in 0..5 {
                    for j in i + 1..5 {
                        if (i, j) != (0, 1) && !t.non_edges().contains(&(i, j)) {
                            edges.push((i, j));
                        }
                    }
                }
            }
            FormulaId::CompleteS { case, .. } => {
                if !case.defined(adjacent) {
                    return Err(FormulaError::UndefinedSubcase);
                }
                edges.extend((2..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))));
                // Vertices of S seen by x and by y.
                let (sx, sy): (Vec<usize>, Vec<usize>) = match case {
                    CompleteCase::FullFull => ((2..n).collect(), (2..n).collect()),
                    CompleteCase::FullOne if !adjacent => ((2..n).collect(), vec![2]),
                    CompleteCase::FullOne | CompleteCase::FullZero => ((2..n).collect(), vec![]),
                    CompleteCase::OneOne { same } => (vec![2], vec![if same { 2 } else { 3 }]),
                    CompleteCase::OneZero => (vec![2], vec![]),
                    CompleteCase::ZeroZero => (vec![], vec![]),
                };
                edges.extend(sx.into_iter().map(|v| (0, v)));
                edges.extend(sy.into_iter().map(|v| (1, v)));
            }
            FormulaId::CliqueBridge { order } => {
                // x=0, y=1, w=2, z=3, c=4, the rest of C' is 5..order
                let big = [0, 1, 2, 3, 4];
                for (i, &a) in big.iter().enumerate() {
                    for &b in &big[i + 1..] {
                        if (a, b) != (0, 1) {
                            edges.push((a, b));
                        }
                    }
                }
                let small: Vec<usize> = core::iter::once(4).chain(5..order).collect();
                for (i, &a) in small.iter().enumerate() {
                    for &b in &small[i + 1..] {
                        edges.push((a, b));
                    }
                }
            }
        }
        if adjacent {
            edges.push((0, 1));
        }
        let base = Graph::from_edges(n, edges).expect("vertices in range");
        GraphType::new(base).map_err(|_| FormulaError::BadSize)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormulaError {
    UnknownId,
    BadSize,
    /// The case analysis has no configuration for this pair class.
    UndefinedSubcase,
    /// The formula assumes a quadrangle of order `(s, s²)`.
    NeedsSquareOrder {
        s: u64,
        t: u64,
    },
    BadParameters,
    NotPls(PlsWitness),
    NotGq(GqWitness),
}

impl fmt::Display for FormulaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormulaError::UnknownId => write!(f, "unknown formula identifier"),
            FormulaError::BadSize => write!(f, "formula size outside the supported range"),
            FormulaError::UndefinedSubcase => write!(f, "no configuration exists for this pair class"),
            FormulaError::NeedsSquareOrder { s, t } => {
                write!(f, "formula needs a quadrangle of order (s, s^2), got ({s}, {t})")
            }
            FormulaError::BadParameters => write!(f, "order parameters must be positive"),
            FormulaError::NotPls(w) => write!(f, "not a partial linear space: {w}"),
            FormulaError::NotGq(w) => write!(
                f,
                "GQ axiom fails: point {} is collinear with {} points of line {}",
                w.point, w.collinear, w.line
            ),
        }
    }
}

impl core::error::Error for FormulaError {}

/// Anchored count the formula prescribes at an edge (`adjacent`) or a
/// non-edge of the point graph of a GQ(s, t).
pub fn expected_count(id: FormulaId, s: u64, t: u64, adjacent: bool) -> Result<u64, FormulaError> {
    if s == 0 || t == 0 {
        return Err(FormulaError::BadParameters);
    }
    id.graph_order()?;
    if id.needs_square_order() && t != s * s {
        return Err(FormulaError::NeedsSquareOrder { s, t });
    }
    let c = |n: u64, k: u64| binomial(n, k) as i128;
    let (si, ti) = (s as i128, t as i128);
    let value: i128 = match id {
        FormulaId::Order5(ty) => match (ty, adjacent) {
            (ty, _) if ty.excluded() => 0,
            (Order5Type::T0, true) => c(s - 1, 3),
            (Order5Type::T0, false) => 0,
            (Order5Type::T2a, true) => 0,
            (Order5Type::T2a, false) => (ti + 1) * c(s - 1, 2),
            (Order5Type::T3a, true) => ti * c(s, 3),
            (Order5Type::T3a, false) => (ti + 1) * c(s - 1, 3),
            _ => unreachable!(),
        },
        FormulaId::CompleteS { case, size } => {
            let m = size as u64;
            let mu = ti + 1;
            let lines = (ti + 1) * (si * ti + 1);
            let s2 = si * si;
            match (case, adjacent) {
                (CompleteCase::FullFull, true) => c(s - 1, m),
                (CompleteCase::FullFull, false) => 0,
                (CompleteCase::FullOne, true) => s2 * c(s, m),
                (CompleteCase::FullOne, false) => (s2 + 1) * c(s - 1, m - 1),
                (CompleteCase::FullZero, true) => return Err(FormulaError::UndefinedSubcase),
                (CompleteCase::FullZero, false) => (s2 + 1) * c(s - 1, m),
                (CompleteCase::OneOne { same: false }, false) => s2 * (s2 + 1) * (si - 1) * c(s - 1, m - 2),
                (CompleteCase::OneOne { same: false }, true) => si.pow(5) * c(s - 1, m - 2),
                (CompleteCase::OneOne { same: true }, false) => mu * (s2 - 1) * c(s, m - 1),
                (CompleteCase::OneOne { same: true }, true) => s2 * (si - 1) * c(s, m - 1),
                (CompleteCase::OneZero, false) => (s2 + 1) * (si - 1) * s2 * c(s - 1, m - 1),
                (CompleteCase::OneZero, true) => s2 * si * s2 * c(s - 1, m - 1),
                (CompleteCase::ZeroZero, false) => {
                    let l1 = mu * (s2 - 1);
                    let l2 = lines - l1 - 2 * (s2 + 1);
                    l1 * c(s, m) + l2 * c(s - 1, m)
                }
                (CompleteCase::ZeroZero, true) => {
                    let l2 = s2 * (si - 1);
                    let l3 = lines - 1 - 2 * s2 - l2;
                    l2 * c(s, m) + l3 * c(s - 1, m)
                }
            }
        }
        FormulaId::CliqueBridge { order } => {
            if adjacent {
                c(s - 1, 2) * (si - 3).max(0) * si * si * c(s, order as u64 - 5)
            } else {
                0
            }
        }
    };
    u64::try_from(value).map_err(|_| FormulaError::BadParameters)
}

/// Outcome for one pair class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassComparison {
    pub adjacent: bool,
    /// `None` when the formula is undefined for this class; the class is
    /// then skipped.
    pub expected: Option<u64>,
    pub pairs: usize,
    /// First pair (in pair order) whose brute-force count differs.
    pub mismatch: Option<((usize, usize), u64)>,
    pub exhausted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaReport {
    pub id: FormulaId,
    pub order: (usize, usize),
    pub classes: Vec<ClassComparison>,
}

impl FormulaReport {
    pub fn passed(&self) -> bool {
        self.classes.iter().all(|c| c.mismatch.is_none() && !c.exhausted)
    }

    pub fn exhausted(&self) -> bool {
        self.classes.iter().any(|c| c.exhausted)
    }
}

/// Compares the formula with brute-force anchored counts on every edge and
/// every non-edge of the point graph.
pub fn verify_formula(gq: &PartialLinearSpace, id: FormulaId, ctx: Ctx<'_>) -> Result<FormulaReport, FormulaError> {
    let (s, t) = validate_pls(gq).map_err(FormulaError::NotPls)?;
    check_gq_axiom(gq, ctx).map_err(FormulaError::NotGq)?;
    let g = point_graph(gq);
    verify_on_graph(&g, (s, t), id, ctx)
}

/// Same as [`verify_formula`] on an already built point graph of a GQ(s, t).
pub fn verify_on_graph(
    g: &Graph,
    order: (usize, usize),
    id: FormulaId,
    ctx: Ctx<'_>,
) -> Result<FormulaReport, FormulaError> {
    let (s, t) = (order.0 as u64, order.1 as u64);
    let mut classes = Vec::new();
    for adjacent in [true, false] {
        let pairs: Vec<(usize, usize)> = if adjacent { g.edges().collect() } else { g.non_edges().collect() };
        let expected = match expected_count(id, s, t, adjacent) {
            Ok(v) => v,
            Err(FormulaError::UndefinedSubcase) => {
                classes.push(ClassComparison { adjacent, expected: None, pairs: 0, mismatch: None, exhausted: false });
                continue;
            }
            Err(e) => return Err(e),
        };
        let ty = id.graph_type(adjacent)?;
        let count = |i: usize| count_type_anchored(g, &ty, pairs[i].0, pairs[i].1).expect("distinct vertices");
        let (mismatch, exhausted) = match scan_uniform(ctx, 0, pairs.len(), &expected, count) {
            Scan::Uniform => (None, false),
            Scan::Exhausted => (None, true),
            Scan::Mismatch(i) => (Some((pairs[i], count(i))), false),
        };
        classes.push(ClassComparison { adjacent, expected: Some(expected), pairs: pairs.len(), mismatch, exhausted });
    }
    Ok(FormulaReport { id, order, classes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{build_elliptic_gq, build_symplectic_gq};
    use crate::regularity::check_k4e_free;
    use crate::tvc::enumerate_type_shapes;
    use alloc::string::ToString;

    #[test]
    fn instantiations() {
        assert_eq!(expected_count(FormulaId::Order5(Order5Type::T0), 5, 3, true), Ok(4));
        assert_eq!(expected_count(FormulaId::Order5(Order5Type::T2a), 3, 9, false), Ok(10));
        assert_eq!(expected_count(FormulaId::Order5(Order5Type::T3a), 2, 4, true), Ok(0));
        let same = FormulaId::CompleteS { case: CompleteCase::OneOne { same: true }, size: 3 };
        assert_eq!(expected_count(same, 3, 9, false), Ok(240));
        assert_eq!(
            expected_count(FormulaId::CompleteS { case: CompleteCase::FullZero, size: 3 }, 3, 9, true),
            Err(FormulaError::UndefinedSubcase)
        );
        assert_eq!(expected_count(same, 3, 3, false), Err(FormulaError::NeedsSquareOrder { s: 3, t: 3 }));
    }

    #[test]
    fn full_full_shape() {
        for size in 2..=5 {
            let id = FormulaId::CompleteS { case: CompleteCase::FullFull, size };
            assert_eq!(expected_count(id, 4, 16, true).unwrap(), binomial(3, size as u64));
            assert_eq!(expected_count(id, 4, 16, false).unwrap(), 0);
        }
    }

    #[test]
    fn names_round_trip() {
        for id in FormulaId::catalogue(2..=5) {
            assert_eq!(id.to_string().parse::<FormulaId>(), Ok(id));
        }
        assert!("type4z".parse::<FormulaId>().is_err());
        assert!("complete-full-full/1".parse::<FormulaId>().is_err());
        assert!("bridge/5".parse::<FormulaId>().is_err());
        assert!("complete-zero-zero/7".parse::<FormulaId>().is_err());
    }

    #[test]
    fn order5_types_cover_the_shapes() {
        let shapes = enumerate_type_shapes(5, 3).unwrap();
        assert_eq!(shapes.len(), 8);
        for ty in Order5Type::ALL {
            let code = FormulaId::Order5(ty).graph_type(true).unwrap().code;
            assert!(shapes.iter().any(|sh| sh.members.contains(&code)), "{ty:?}");
        }
    }

    #[test]
    fn excluded_types_contain_k4_minus_e() {
        for ty in Order5Type::ALL {
            for adjacent in [true, false] {
                let base = FormulaId::Order5(ty).graph_type(adjacent).unwrap().base;
                let forced = match ty {
                    Order5Type::T0 => !adjacent,
                    Order5Type::T2a => adjacent,
                    Order5Type::T3a => false,
                    _ => true,
                };
                assert_eq!(check_k4e_free(&base).is_err(), forced, "{ty:?} {adjacent}");
            }
        }
    }

    #[test]
    fn small_quadrangles_match() {
        let w2 = build_symplectic_gq(2).unwrap();
        for ty in Order5Type::ALL {
            let report = verify_formula(&w2, FormulaId::Order5(ty), Ctx::sequential()).unwrap();
            assert!(report.passed(), "{ty:?}: {report:?}");
        }
        let gq24 = build_elliptic_gq(2).unwrap();
        for id in FormulaId::catalogue(2..=5) {
            let report = verify_formula(&gq24, id, Ctx::sequential()).unwrap();
            assert!(report.passed(), "{id}: {report:?}");
        }
    }

    #[test]
    fn square_order_required() {
        let w2 = build_symplectic_gq(2).unwrap();
        let id = FormulaId::CompleteS { case: CompleteCase::ZeroZero, size: 3 };
        assert_eq!(verify_formula(&w2, id, Ctx::sequential()), Err(FormulaError::NeedsSquareOrder { s: 2, t: 2 }));
    }
}
