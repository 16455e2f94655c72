//! Partial linear spaces, generalised quadrangles and their constructions.
//!
//! Four families are built here: the symplectic quadrangles W(q), the
//! elliptic quadric quadrangles Q⁻(5,q), T₂*(O) for the regular hyperoval
//! of PG(2,4), and flock quadrangles of order (q², q) coming from a q-clan
//! through the associated Kantor family. Every constructor validates its
//! output against the partial-linear-space axioms and the GQ axiom.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{anisotropic_difference_check, AlgebraError, Elem, Field, Matrix2};
use crate::bitset::{and_count, BitSet};
use crate::exec::{map_indexed, Ctx};
use crate::graph::Graph;

/// Points `0..num_points` and lines given as sorted point lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialLinearSpace {
    pub num_points: usize,
    pub lines: Vec<Vec<u32>>,
    /// `(s, t)`: points per line minus one, lines per point minus one.
    pub order: Option<(usize, usize)>,
}

/// Why a point-line incidence structure is not a partial linear space of
/// some order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlsWitness {
    NoLines,
    PointOutOfRange { line: usize, point: u32 },
    RepeatedPoint { line: usize, point: u32 },
    ShortLine { line: usize },
    SharedPair { lines: (usize, usize), points: (u32, u32) },
    LineSize { line: usize, size: usize, expected: usize },
    PointDegree { point: usize, degree: usize, expected: usize },
}

impl fmt::Display for PlsWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlsWitness::NoLines => write!(f, "no lines"),
            PlsWitness::PointOutOfRange { line, point } => write!(f, "line {line} names point {point} out of range"),
            PlsWitness::RepeatedPoint { line, point } => write!(f, "line {line} repeats point {point}"),
            PlsWitness::ShortLine { line } => write!(f, "line {line} has fewer than two points"),
            PlsWitness::SharedPair { lines, points } => {
                write!(f, "lines {} and {} share points {} and {}", lines.0, lines.1, points.0, points.1)
            }
            PlsWitness::LineSize { line, size, expected } => {
                write!(f, "line {line} has {size} points, expected {expected}")
            }
            PlsWitness::PointDegree { point, degree, expected } => {
                write!(f, "point {point} lies on {degree} lines, expected {expected}")
            }
        }
    }
}

/// A point off a line that sees the wrong number of points of that line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GqWitness {
    pub point: usize,
    pub line: usize,
    pub collinear: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeometryError {
    Algebra(AlgebraError),
    InvalidClan,
    NotPls(PlsWitness),
    NotGq(GqWitness),
    Unsupported(&'static str),
}

impl From<AlgebraError> for GeometryError {
    fn from(e: AlgebraError) -> Self {
        GeometryError::Algebra(e)
    }
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::Algebra(e) => write!(f, "{e}"),
            GeometryError::InvalidClan => write!(f, "matrix set is not a q-clan"),
            GeometryError::NotPls(w) => write!(f, "not a partial linear space: {w}"),
            GeometryError::NotGq(w) => {
                write!(f, "GQ axiom fails: point {} sees {} points of line {}", w.point, w.collinear, w.line)
            }
            GeometryError::Unsupported(what) => write!(f, "unsupported: {what}"),
        }
    }
}

impl core::error::Error for GeometryError {}

impl PartialLinearSpace {
    /// Sorts every line and the line list, dropping repeated lines. The
    /// result is not validated.
    pub fn new(num_points: usize, lines: Vec<Vec<u32>>) -> Self {
        let mut lines: Vec<Vec<u32>> = lines
            .into_iter()
            .map(|mut l| {
                l.sort_unstable();
                l
            })
            .collect();
        lines.sort();
        lines.dedup();
        PartialLinearSpace { num_points, lines, order: None }
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    /// Validates and records the order.
    pub fn validated(mut self) -> Result<Self, PlsWitness> {
        self.order = Some(validate_pls(&self)?);
        Ok(self)
    }

    /// For each point, the sorted list of lines through it.
    pub fn lines_through(&self) -> Vec<Vec<u32>> {
        let mut through = vec![Vec::new(); self.num_points];
        for (li, line) in self.lines.iter().enumerate() {
            for &p in line {
                through[p as usize].push(li as u32);
            }
        }
        through
    }

    pub fn line_set(&self, line: usize) -> BitSet {
        let mut s = BitSet::new(self.num_points);
        for &p in &self.lines[line] {
            s.insert(p as usize);
        }
        s
    }
}

/// Returns `(s, t)` when every line has `s + 1` points, every point is on
/// `t + 1` lines and no two lines share two points.
pub fn validate_pls(pls: &PartialLinearSpace) -> Result<(usize, usize), PlsWitness> {
    if pls.lines.is_empty() {
        return Err(PlsWitness::NoLines);
    }
    for (li, line) in pls.lines.iter().enumerate() {
        if line.len() < 2 {
            return Err(PlsWitness::ShortLine { line: li });
        }
        for w in line.windows(2) {
            if w[0] == w[1] {
                return Err(PlsWitness::RepeatedPoint { line: li, point: w[0] });
            }
        }
        if let Some(&p) = line.iter().find(|&&p| p as usize >= pls.num_points) {
            return Err(PlsWitness::PointOutOfRange { line: li, point: p });
        }
    }
    // Every collinear pair together with the line carrying it; a repeated
    // pair means two lines meet twice.
    let mut pairs: Vec<(u32, u32, u32)> = Vec::new();
    for (li, line) in pls.lines.iter().enumerate() {
        for (i, &a) in line.iter().enumerate() {
            for &b in &line[i + 1..] {
                pairs.push((a, b, li as u32));
            }
        }
    }
    pairs.sort_unstable();
    for w in pairs.windows(2) {
        if (w[0].0, w[0].1) == (w[1].0, w[1].1) {
            return Err(PlsWitness::SharedPair { lines: (w[0].2 as usize, w[1].2 as usize), points: (w[0].0, w[0].1) });
        }
    }
    let size = pls.lines[0].len();
    if let Some((li, l)) = pls.lines.iter().enumerate().find(|(_, l)| l.len() != size) {
        return Err(PlsWitness::LineSize { line: li, size: l.len(), expected: size });
    }
    let mut degree = vec![0usize; pls.num_points];
    for line in &pls.lines {
        for &p in line {
            degree[p as usize] += 1;
        }
    }
    let d0 = degree[0];
    if let Some((p, &d)) = degree.iter().enumerate().find(|(_, &d)| d != d0 || d == 0) {
        return Err(PlsWitness::PointDegree { point: p, degree: d, expected: d0.max(1) });
    }
    if d0 == 0 {
        return Err(PlsWitness::PointDegree { point: 0, degree: 0, expected: 1 });
    }
    Ok((size - 1, d0 - 1))
}

/// Collinearity graph: distinct points are adjacent iff some line holds both.
pub fn point_graph(pls: &PartialLinearSpace) -> Graph {
    let edges = pls.lines.iter().flat_map(|line| {
        line.iter().enumerate().flat_map(move |(i, &a)| line[i + 1..].iter().map(move |&b| (a as usize, b as usize)))
    });
    Graph::from_edges(pls.num_points, edges).expect("line entries are validated points")
}

/// Checks that every point off a line is collinear with exactly one point
/// of it. Runs one job per line.
pub fn check_gq_axiom(pls: &PartialLinearSpace, ctx: Ctx<'_>) -> Result<(), GqWitness> {
    let g = point_graph(pls);
    let line_sets: Vec<BitSet> = (0..pls.num_lines()).map(|l| pls.line_set(l)).collect();
    let first_bad = map_indexed(ctx, pls.num_lines(), |li| {
        let set = &line_sets[li];
        for p in 0..pls.num_points {
            if set.contains(p) {
                continue;
            }
            let c = and_count(g.row(p), set.words());
            if c != 1 {
                return ((p as u64) << 32) | c as u64;
            }
        }
        u64::MAX
    })
    .expect("axiom check runs without a budget limit");
    match first_bad.iter().enumerate().find(|(_, &v)| v != u64::MAX) {
        None => Ok(()),
        Some((line, &v)) => Err(GqWitness { point: (v >> 32) as usize, line, collinear: (v & 0xffff_ffff) as usize }),
    }
}

/// Swaps points and lines. Dual point `i` is line `i` of the input; dual
/// line `p` lists the lines through input point `p`.
pub fn dualize(pls: &PartialLinearSpace) -> Result<PartialLinearSpace, PlsWitness> {
    let (s, t) = validate_pls(pls)?;
    let through = pls.lines_through();
    Ok(PartialLinearSpace { num_points: pls.num_lines(), lines: through, order: Some((t, s)) })
}

/// Line list with each line sorted and the list sorted, for comparing
/// geometries up to the order in which lines were produced.
pub fn normalized_lines(pls: &PartialLinearSpace) -> Vec<Vec<u32>> {
    let mut lines: Vec<Vec<u32>> = pls
        .lines
        .iter()
        .map(|l| {
            let mut l = l.clone();
            l.sort_unstable();
            l
        })
        .collect();
    lines.sort();
    lines
}

/// Projective points of PG(dim-1, q) with first nonzero coordinate 1,
/// ordered by the base-q value of the coordinate vector.
struct ProjectiveSpace<'f> {
    field: &'f Field,
    dim: usize,
    points: Vec<Vec<Elem>>,
    index_of: Vec<u32>,
}

impl<'f> ProjectiveSpace<'f> {
    fn new(field: &'f Field, dim: usize) -> Self {
        let q = field.order();
        let total = q.pow(dim as u32);
        let mut points = Vec::new();
        let mut index_of = vec![u32::MAX; total];
        for code in 1..total {
            let v = decode(code, q, dim);
            if v.iter().find(|&&x| x != 0) == Some(&1) {
                index_of[code] = points.len() as u32;
                points.push(v);
            }
        }
        ProjectiveSpace { field, dim, points, index_of }
    }

    fn index(&self, v: &[Elem]) -> u32 {
        let f = self.field;
        let lead = *v.iter().find(|&&x| x != 0).expect("nonzero vector");
        let scale = f.inv(lead).unwrap();
        let code = v.iter().rev().fold(0usize, |acc, &x| acc * f.order() + f.mul(x, scale) as usize);
        self.index_of[code]
    }

    /// Points of the projective line through points `i < j`, sorted.
    fn line_through(&self, i: usize, j: usize) -> Vec<u32> {
        let f = self.field;
        let (a, b) = (&self.points[i], &self.points[j]);
        let mut line: Vec<u32> = f
            .elements()
            .map(|lambda| {
                let v: Vec<Elem> = (0..self.dim).map(|k| f.add(a[k], f.mul(lambda, b[k]))).collect();
                self.index(&v)
            })
            .collect();
        line.push(j as u32);
        line.sort_unstable();
        line
    }

    /// All lines spanned by pairs accepted by `joinable`, each produced
    /// once (from its two smallest points).
    fn lines_where<F: Fn(&[Elem], &[Elem]) -> bool>(&self, on: &[bool], joinable: F) -> Vec<Vec<u32>> {
        let mut lines = Vec::new();
        for i in 0..self.points.len() {
            if !on[i] {
                continue;
            }
            for j in i + 1..self.points.len() {
                if !on[j] || !joinable(&self.points[i], &self.points[j]) {
                    continue;
                }
                let line = self.line_through(i, j);
                if line[0] as usize == i && line[1] as usize == j {
                    lines.push(line);
                }
            }
        }
        lines
    }
}

fn decode(mut code: usize, q: usize, dim: usize) -> Vec<Elem> {
    let mut v = Vec::with_capacity(dim);
    for _ in 0..dim {
        v.push((code % q) as Elem);
        code /= q;
    }
    v
}

/// Keeps only the points flagged in `on`, renumbering them in order.
fn restrict(on: &[bool], lines: Vec<Vec<u32>>) -> PartialLinearSpace {
    let mut renumber = vec![u32::MAX; on.len()];
    let mut next = 0u32;
    for (i, &keep) in on.iter().enumerate() {
        if keep {
            renumber[i] = next;
            next += 1;
        }
    }
    let lines = lines.into_iter().map(|l| l.into_iter().map(|p| renumber[p as usize]).collect()).collect();
    PartialLinearSpace::new(next as usize, lines)
}

fn finish(
    pls: PartialLinearSpace,
    expected: (usize, usize),
    ctx: Ctx<'_>,
) -> Result<PartialLinearSpace, GeometryError> {
    let pls = pls.validated().map_err(GeometryError::NotPls)?;
    if pls.order != Some(expected) {
        return Err(GeometryError::Unsupported("construction produced an unexpected order"));
    }
    check_gq_axiom(&pls, ctx).map_err(GeometryError::NotGq)?;
    Ok(pls)
}

/// W(q): points of PG(3,q), lines the totally isotropic lines of
/// `x0 y1 - x1 y0 + x2 y3 - x3 y2`. Order (q, q).
pub fn build_symplectic_gq(q: u32) -> Result<PartialLinearSpace, GeometryError> {
    if q > 5 {
        return Err(GeometryError::Unsupported("symplectic quadrangles are built for q <= 5"));
    }
    let f = Field::of_order(q)?;
    let pg = ProjectiveSpace::new(&f, 4);
    let form = |x: &[Elem], y: &[Elem]| {
        let a = f.sub(f.mul(x[0], y[1]), f.mul(x[1], y[0]));
        let b = f.sub(f.mul(x[2], y[3]), f.mul(x[3], y[2]));
        f.add(a, b) == 0
    };
    let on = vec![true; pg.points.len()];
    let lines = pg.lines_where(&on, form);
    let q = q as usize;
    finish(PartialLinearSpace::new(pg.points.len(), lines), (q, q), Ctx::sequential())
}

/// Coefficients `(c0, c1)` of the least monic irreducible `x^2 + c1 x + c0`
/// over `f`, scanning `c0 + q c1` upwards.
pub fn least_irreducible_quadratic(f: &Field) -> (Elem, Elem) {
    let q = f.order();
    (0..q * q)
        .map(|i| ((i % q) as Elem, (i / q) as Elem))
        .find(|&(c0, c1)| f.elements().all(|x| f.add(f.add(f.mul(x, x), f.mul(c1, x)), c0) != 0))
        .expect("irreducible quadratics exist over every finite field")
}

/// Q⁻(5,q): singular points of `x0 x1 + x2 x3 + x4^2 + c1 x4 x5 + c0 x5^2`
/// with `x^2 + c1 x + c0` the least irreducible quadratic; lines are the
/// totally singular lines. Order (q, q²).
pub fn build_elliptic_gq(q: u32) -> Result<PartialLinearSpace, GeometryError> {
    if q > 4 {
        return Err(GeometryError::Unsupported("elliptic quadric quadrangles are built for q <= 4"));
    }
    let f = Field::of_order(q)?;
    let (c0, c1) = least_irreducible_quadratic(&f);
    let quad = |x: &[Elem]| {
        let hyp = f.add(f.mul(x[0], x[1]), f.mul(x[2], x[3]));
        let ell = f.add(f.add(f.mul(x[4], x[4]), f.mul(c1, f.mul(x[4], x[5]))), f.mul(c0, f.mul(x[5], x[5])));
        f.add(hyp, ell)
    };
    let two = f.from_int(2);
    let polar = |x: &[Elem], y: &[Elem]| {
        let hyp = f.add(f.add(f.mul(x[0], y[1]), f.mul(x[1], y[0])), f.add(f.mul(x[2], y[3]), f.mul(x[3], y[2])));
        let e1 = f.mul(two, f.mul(x[4], y[4]));
        let e2 = f.mul(c1, f.add(f.mul(x[4], y[5]), f.mul(x[5], y[4])));
        let e3 = f.mul(two, f.mul(c0, f.mul(x[5], y[5])));
        f.add(hyp, f.add(e1, f.add(e2, e3))) == 0
    };
    let pg = ProjectiveSpace::new(&f, 6);
    let on: Vec<bool> = pg.points.iter().map(|p| quad(p) == 0).collect();
    let lines = pg.lines_where(&on, polar);
    let q = q as usize;
    finish(restrict(&on, lines), (q, q * q), Ctx::sequential())
}

/// T₂*(O) over GF(4) with O the regular hyperoval `{(1,t,t²)} ∪ {(0,1,0),
/// (0,0,1)}`: affine points of AG(3,4), lines the affine lines whose
/// direction lies in O. Order (3, 5).
pub fn build_t2star_gq() -> Result<PartialLinearSpace, GeometryError> {
    let f = Field::of_order(4)?;
    let q = f.order();
    let mut directions: Vec<[Elem; 3]> = f.elements().map(|t| [1, t, f.mul(t, t)]).collect();
    directions.push([0, 1, 0]);
    directions.push([0, 0, 1]);
    let encode = |v: [Elem; 3]| v[0] as usize + q * (v[1] as usize + q * v[2] as usize);
    let mut lines = Vec::new();
    for code in 0..q * q * q {
        let p = decode(code, q, 3);
        for d in &directions {
            let mut line: Vec<u32> = f
                .elements()
                .map(|lambda| {
                    let v = [0, 1, 2].map(|k| f.add(p[k], f.mul(lambda, d[k])));
                    encode(v) as u32
                })
                .collect();
            line.sort_unstable();
            if line[0] as usize == code {
                lines.push(line);
            }
        }
    }
    finish(PartialLinearSpace::new(q * q * q, lines), (3, 5), Ctx::sequential())
}

/// A q-clan: one 2x2 matrix per field element, with anisotropic differences.
#[derive(Clone, Debug)]
pub struct QClan {
    field: Field,
    matrices: Vec<Matrix2>,
}

impl QClan {
    pub fn new(field: Field, matrices: Vec<Matrix2>) -> Result<Self, GeometryError> {
        if matrices.len() != field.order() || !anisotropic_difference_check(&field, &matrices)? {
            return Err(GeometryError::InvalidClan);
        }
        Ok(QClan { field, matrices })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Matrix indexed by field element `t`.
    pub fn matrix(&self, t: Elem) -> &Matrix2 {
        &self.matrices[t as usize]
    }

    pub fn matrices(&self) -> &[Matrix2] {
        &self.matrices
    }
}

/// `{ [[t, 3t²], [0, 3t³]] : t ∈ GF(5) }`.
pub fn payne_qclan() -> QClan {
    let f = Field::prime(5).expect("5 is prime");
    let three = f.from_int(3);
    let matrices = f
        .elements()
        .map(|t| {
            let t2 = f.mul(t, t);
            Matrix2::new(&f, t, f.mul(three, t2), 0, f.mul(three, f.mul(t2, t)))
        })
        .collect();
    QClan::new(f, matrices).expect("the Payne matrices form a q-clan")
}

/// Group of order q⁵ on triples `(α, c, β)` with
/// `(α, c, β)(α', c', β') = (α + α', c + c' + β·α', β + β')`.
struct CoordinateGroup<'f> {
    f: &'f Field,
    q: usize,
}

type GroupElem = ([Elem; 2], Elem, [Elem; 2]);

impl CoordinateGroup<'_> {
    fn size(&self) -> usize {
        self.q.pow(5)
    }

    fn encode(&self, (a, c, b): GroupElem) -> usize {
        let q = self.q;
        (((b[1] as usize * q + b[0] as usize) * q + c as usize) * q + a[1] as usize) * q + a[0] as usize
    }

    fn decode(&self, x: usize) -> GroupElem {
        let d = decode(x, self.q, 5);
        ([d[0], d[1]], d[2], [d[3], d[4]])
    }

    fn mul(&self, g: GroupElem, h: GroupElem) -> GroupElem {
        let f = self.f;
        let dot = f.add(f.mul(g.2[0], h.0[0]), f.mul(g.2[1], h.0[1]));
        (
            [f.add(g.0[0], h.0[0]), f.add(g.0[1], h.0[1])],
            f.add(f.add(g.1, h.1), dot),
            [f.add(g.2[0], h.2[0]), f.add(g.2[1], h.2[1])],
        )
    }

    /// Labels each element with the index of its right coset `H g`.
    fn right_cosets(&self, subgroup: &[GroupElem]) -> (Vec<u32>, usize) {
        let mut label = vec![u32::MAX; self.size()];
        let mut next = 0u32;
        for x in 0..self.size() {
            if label[x] != u32::MAX {
                continue;
            }
            let g = self.decode(x);
            for &h in subgroup {
                label[self.encode(self.mul(h, g))] = next;
            }
            next += 1;
        }
        (label, next as usize)
    }
}

/// Flock quadrangle of order (q², q) from the Kantor family of a q-clan.
///
/// Points: the q⁵ group elements, the right cosets of each tangent
/// subgroup A*(t), and a point ∞. Lines: the right cosets of each A(t)
/// (plus the A*(t) coset containing them) and one line [A(t)] per member
/// of the family, joining ∞ to the A*(t) cosets.
pub fn build_flock_gq(clan: &QClan, ctx: Ctx<'_>) -> Result<PartialLinearSpace, GeometryError> {
    let f = &clan.field;
    let q = f.order();
    let group = CoordinateGroup { f, q };
    let vectors: Vec<[Elem; 2]> = f.elements().flat_map(|a| f.elements().map(move |b| [a, b])).collect();
    let mut members: Vec<(Vec<GroupElem>, Vec<GroupElem>)> = Vec::with_capacity(q + 1);
    for t in f.elements() {
        let a = clan.matrix(t);
        let k = a.add(f, &a.transpose());
        let small = vectors.iter().map(|&v| (v, a.quadratic_form(f, v), k.left_mul(f, v))).collect();
        let tangent = vectors.iter().flat_map(|&v| f.elements().map(move |c| (v, c, k.left_mul(f, v)))).collect();
        members.push((small, tangent));
    }
    let small_inf = vectors.iter().map(|&v| ([0, 0], 0, v)).collect();
    let tangent_inf = vectors.iter().flat_map(|&v| f.elements().map(move |c| ([0, 0], c, v))).collect();
    members.push((small_inf, tangent_inf));

    let n_group = group.size();
    let mut next_point = n_group;
    let mut lines: Vec<Vec<u32>> = Vec::new();
    let mut tangent_points: Vec<Vec<u32>> = Vec::with_capacity(q + 1);
    for (small, tangent) in &members {
        let (tan_label, tan_count) = group.right_cosets(tangent);
        let (small_label, small_count) = group.right_cosets(small);
        let mut coset_lines: Vec<Vec<u32>> = vec![Vec::with_capacity(q * q + 1); small_count];
        for x in 0..n_group {
            coset_lines[small_label[x] as usize].push(x as u32);
        }
        for line in coset_lines.iter_mut() {
            let tangent_point = next_point + tan_label[line[0] as usize] as usize;
            line.push(tangent_point as u32);
        }
        lines.extend(coset_lines);
        tangent_points.push((next_point..next_point + tan_count).map(|p| p as u32).collect());
        next_point += tan_count;
    }
    let infinity = next_point as u32;
    for pts in tangent_points {
        let mut line = pts;
        line.push(infinity);
        lines.push(line);
    }
    finish(PartialLinearSpace::new(next_point + 1, lines), (q * q, q), ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regularity::srg_parameters;

    fn grid(n: u32) -> PartialLinearSpace {
        let rows = (0..n).map(|r| (0..n).map(|c| r * n + c).collect());
        let cols = (0..n).map(|c| (0..n).map(|r| r * n + c).collect());
        PartialLinearSpace::new((n * n) as usize, rows.chain(cols).collect())
    }

    fn fano() -> PartialLinearSpace {
        let lines = [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]];
        PartialLinearSpace::new(7, lines.iter().map(|l| l.to_vec()).collect())
    }

    #[test]
    fn pls_validation_examples() {
        assert_eq!(validate_pls(&grid(3)), Ok((2, 1)));
        assert_eq!(validate_pls(&fano()), Ok((2, 2)));
        let bad = PartialLinearSpace::new(4, vec![vec![0, 1, 2], vec![0, 1, 3]]);
        assert!(matches!(validate_pls(&bad), Err(PlsWitness::SharedPair { points: (0, 1), .. })));
        let short = PartialLinearSpace::new(2, vec![vec![0]]);
        assert_eq!(validate_pls(&short), Err(PlsWitness::ShortLine { line: 0 }));
        let isolated = PartialLinearSpace::new(3, vec![vec![0, 1]]);
        assert!(matches!(validate_pls(&isolated), Err(PlsWitness::PointDegree { point: 2, degree: 0, .. })));
        let uneven = PartialLinearSpace::new(5, vec![vec![0, 1, 2], vec![2, 3], vec![3, 4, 0]]);
        assert!(matches!(validate_pls(&uneven), Err(PlsWitness::LineSize { .. })));
    }

    #[test]
    fn gq_axiom_examples() {
        let g = grid(2);
        assert_eq!(validate_pls(&g), Ok((1, 1)));
        assert_eq!(check_gq_axiom(&g, Ctx::sequential()), Ok(()));
        let w = check_gq_axiom(&fano(), Ctx::sequential()).unwrap_err();
        assert_eq!(w.collinear, 3);
        assert!(check_gq_axiom(&grid(3), Ctx::sequential()).is_ok());
    }

    #[test]
    fn dual_of_grid() {
        let d = dualize(&grid(3)).unwrap();
        // the 3x3 grid has every line pair from different classes meeting
        assert_eq!(d.order, Some((1, 2)));
        assert_eq!(validate_pls(&d), Ok((1, 2)));
        let dd = dualize(&d).unwrap();
        assert_eq!(normalized_lines(&dd), normalized_lines(&grid(3)));
    }

    #[test]
    fn point_graph_of_a_line() {
        let line = PartialLinearSpace::new(4, vec![vec![0, 1, 2, 3]]);
        assert_eq!(point_graph(&line), Graph::complete(4));
    }

    #[test]
    fn symplectic_small() {
        let w2 = build_symplectic_gq(2).unwrap();
        assert_eq!((w2.num_points, w2.num_lines(), w2.order), (15, 15, Some((2, 2))));
        let p = srg_parameters(&point_graph(&w2)).unwrap().unwrap();
        assert_eq!((p.v, p.k, p.lambda, p.mu), (15, 6, 1, 3));
        let w3 = build_symplectic_gq(3).unwrap();
        assert_eq!((w3.num_points, w3.num_lines(), w3.order), (40, 40, Some((3, 3))));
        let w4 = build_symplectic_gq(4).unwrap();
        assert_eq!(w4.order, Some((4, 4)));
    }

    #[test]
    fn elliptic_small() {
        let q2 = build_elliptic_gq(2).unwrap();
        assert_eq!((q2.num_points, q2.num_lines(), q2.order), (27, 45, Some((2, 4))));
        let q3 = build_elliptic_gq(3).unwrap();
        assert_eq!((q3.num_points, q3.num_lines(), q3.order), (112, 280, Some((3, 9))));
    }

    #[test]
    fn t2star() {
        let t = build_t2star_gq().unwrap();
        assert_eq!((t.num_points, t.num_lines(), t.order), (64, 96, Some((3, 5))));
        let d = dualize(&t).unwrap();
        assert_eq!((d.num_points, d.order), (96, Some((5, 3))));
        assert!(check_gq_axiom(&d, Ctx::sequential()).is_ok());
    }

    #[test]
    fn payne_matrices() {
        let clan = payne_qclan();
        let f = clan.field();
        assert_eq!(clan.matrix(0).entries, [0, 0, 0, 0]);
        assert_eq!(clan.matrix(1).entries, [1, 3, 0, 3]);
        assert_eq!(anisotropic_difference_check(f, clan.matrices()), Ok(true));
    }

    #[test]
    fn rejects_non_clan() {
        let f = Field::prime(3).unwrap();
        let zero = Matrix2::zero(&f);
        assert_eq!(QClan::new(f, vec![zero; 3]).unwrap_err(), GeometryError::InvalidClan);
    }

    #[test]
    fn flock_from_a_classical_clan_over_gf3() {
        // {t I}: differences are multiples of x² + y², anisotropic over GF(3).
        let f = Field::prime(3).unwrap();
        let matrices = f.elements().map(|t| Matrix2::new(&f, t, 0, 0, t)).collect();
        let clan = QClan::new(f, matrices).unwrap();
        let gq = build_flock_gq(&clan, Ctx::sequential()).unwrap();
        assert_eq!((gq.num_points, gq.num_lines(), gq.order), (280, 112, Some((9, 3))));
    }
}
