//! Small finite fields GF(p^e) backed by full operation tables, and 2x2
//! matrices over them.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Field element, encoded as the base-p digits of its coefficient vector
/// (constant term first). `0` is zero and `1` is one.
pub type Elem = u8;

pub const MAX_FIELD_ORDER: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    NotPrime(u32),
    BadDegree(u32),
    TooLarge {
        q: u64,
    },
    /// Modulus must be monic of degree `e` (list of `e + 1` coefficients).
    BadModulus,
    Reducible,
    MixedFields,
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::NotPrime(p) => write!(f, "{p} is not prime"),
            AlgebraError::BadDegree(e) => write!(f, "extension degree {e} outside 1..=4"),
            AlgebraError::TooLarge { q } => write!(f, "field order {q} exceeds {MAX_FIELD_ORDER}"),
            AlgebraError::BadModulus => write!(f, "modulus must be monic of the extension degree"),
            AlgebraError::Reducible => write!(f, "modulus is reducible"),
            AlgebraError::MixedFields => write!(f, "matrices come from different fields"),
        }
    }
}

impl core::error::Error for AlgebraError {}

/// Identifies a field up to its defining data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldTag {
    pub p: u32,
    pub e: u32,
    pub modulus: [u8; 5],
}

#[derive(Clone, PartialEq, Eq)]
pub struct Field {
    p: u32,
    e: u32,
    q: usize,
    modulus: Vec<u8>,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}) modulus {:?}", self.q, self.modulus)
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Coefficients of the monic polynomial of degree `e` whose lower
/// coefficients are the base-p digits of `index`.
fn monic_from_index(p: u32, e: u32, mut index: u64) -> Vec<u8> {
    let mut c = Vec::with_capacity(e as usize + 1);
    for _ in 0..e {
        c.push((index % p as u64) as u8);
        index /= p as u64;
    }
    c.push(1);
    c
}

/// Remainder of `a` modulo the monic polynomial `m`, coefficients mod p.
fn poly_rem(p: u32, a: &[u8], m: &[u8]) -> Vec<u8> {
    let mut r: Vec<u32> = a.iter().map(|&x| x as u32).collect();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = r.pop().unwrap() % p;
        if lead != 0 {
            let base = r.len() - dm;
            for (i, &mi) in m[..dm].iter().enumerate() {
                r[base + i] = (r[base + i] + (p - lead) * mi as u32) % p;
            }
        }
    }
    r.into_iter().map(|x| (x % p) as u8).collect()
}

fn is_irreducible(p: u32, m: &[u8]) -> bool {
    let e = (m.len() - 1) as u32;
    for d in 1..=e / 2 {
        for idx in 0..(p as u64).pow(d) {
            let f = monic_from_index(p, d, idx);
            if poly_rem(p, m, &f).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// Builds GF(p^e). Without a modulus, the least monic irreducible of
    /// degree `e` is used, ordering candidates by their lower coefficients
    /// read as base-p digits, constant term first.
    pub fn new(p: u32, e: u32, modulus: Option<&[u8]>) -> Result<Field, AlgebraError> {
        if !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        if !(1..=4).contains(&e) {
            return Err(AlgebraError::BadDegree(e));
        }
        let q = (p as u64).pow(e);
        if q > MAX_FIELD_ORDER as u64 {
            return Err(AlgebraError::TooLarge { q });
        }
        let modulus = match modulus {
            Some(m) => {
                if m.len() != e as usize + 1 || m[e as usize] != 1 || m.iter().any(|&c| c as u32 >= p) {
                    return Err(AlgebraError::BadModulus);
                }
                if !is_irreducible(p, m) {
                    return Err(AlgebraError::Reducible);
                }
                m.to_vec()
            }
            None => (0..q)
                .map(|i| monic_from_index(p, e, i))
                .find(|m| is_irreducible(p, m))
                .expect("an irreducible polynomial of every degree exists"),
        };
        let q = q as usize;
        let digits = |x: usize| -> Vec<u8> {
            let mut v = Vec::with_capacity(e as usize);
            let mut x = x;
            for _ in 0..e {
                v.push((x % p as usize) as u8);
                x /= p as usize;
            }
            v
        };
        let encode = |c: &[u8]| -> usize { c.iter().rev().fold(0usize, |acc, &d| acc * p as usize + d as usize) };
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<u8> = da.iter().zip(&db).map(|(x, y)| ((*x as u32 + *y as u32) % p) as u8).collect();
                add[a * q + b] = encode(&sum) as Elem;
                let mut prod = vec![0u8; 2 * e as usize - 1];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = ((prod[i + j] as u32 + *x as u32 * *y as u32) % p) as u8;
                    }
                }
                let mut r = poly_rem(p, &prod, &modulus);
                r.resize(e as usize, 0);
                mul[a * q + b] = encode(&r) as Elem;
            }
        }
        let neg = (0..q).map(|a| (0..q).find(|&b| add[a * q + b] == 0).unwrap() as Elem).collect();
        let inv =
            (0..q).map(|a| if a == 0 { 0 } else { (1..q).find(|&b| mul[a * q + b] == 1).unwrap() as Elem }).collect();
        Ok(Field { p, e, q, modulus, add, mul, neg, inv })
    }

    pub fn prime(p: u32) -> Result<Field, AlgebraError> {
        Field::new(p, 1, None)
    }

    /// GF(q) for a prime power q, with the default modulus.
    pub fn of_order(q: u32) -> Result<Field, AlgebraError> {
        let p = (2..=q).find(|d| q.is_multiple_of(*d)).ok_or(AlgebraError::NotPrime(q))?;
        let mut e = 0;
        let mut r = q;
        while r.is_multiple_of(p) {
            r /= p;
            e += 1;
        }
        if r != 1 {
            return Err(AlgebraError::NotPrime(q));
        }
        Field::new(p, e, None)
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    /// Modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    pub fn tag(&self) -> FieldTag {
        let mut m = [0u8; 5];
        m[..self.modulus.len()].copy_from_slice(&self.modulus);
        FieldTag { p: self.p, e: self.e, modulus: m }
    }

    /// All elements, zero first and one second.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.q).map(|x| x as Elem)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        (a != 0).then(|| self.inv[a as usize])
    }

    pub fn pow(&self, a: Elem, k: u32) -> Elem {
        (0..k).fold(1, |acc, _| self.mul(acc, a))
    }

    /// The element `n * 1`.
    pub fn from_int(&self, n: u32) -> Elem {
        (n % self.p) as Elem
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: Elem) -> Option<usize> {
        if a == 0 {
            return None;
        }
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        Some(k)
    }

    pub fn is_square(&self, a: Elem) -> bool {
        self.elements().any(|x| self.mul(x, x) == a)
    }
}

/// Row-major 2x2 matrix `[[a, b], [c, d]]` over a tagged field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Matrix2 {
    pub field: FieldTag,
    pub entries: [Elem; 4],
}

impl Matrix2 {
    pub fn new(field: &Field, a: Elem, b: Elem, c: Elem, d: Elem) -> Self {
        Matrix2 { field: field.tag(), entries: [a, b, c, d] }
    }

    pub fn zero(field: &Field) -> Self {
        Matrix2::new(field, 0, 0, 0, 0)
    }

    pub fn sub(&self, field: &Field, other: &Matrix2) -> Matrix2 {
        let e: [Elem; 4] = core::array::from_fn(|i| field.sub(self.entries[i], other.entries[i]));
        Matrix2 { field: self.field, entries: e }
    }

    pub fn transpose(&self) -> Matrix2 {
        let [a, b, c, d] = self.entries;
        Matrix2 { field: self.field, entries: [a, c, b, d] }
    }

    pub fn add(&self, field: &Field, other: &Matrix2) -> Matrix2 {
        let e: [Elem; 4] = core::array::from_fn(|i| field.add(self.entries[i], other.entries[i]));
        Matrix2 { field: self.field, entries: e }
    }

    /// `v M v^T` for a row vector `v`.
    pub fn quadratic_form(&self, field: &Field, v: [Elem; 2]) -> Elem {
        let [a, b, c, d] = self.entries;
        let [x, y] = v;
        let xx = field.mul(field.mul(x, x), a);
        let xy = field.mul(field.mul(x, y), field.add(b, c));
        let yy = field.mul(field.mul(y, y), d);
        field.add(field.add(xx, xy), yy)
    }

    /// Row vector times matrix.
    pub fn left_mul(&self, field: &Field, v: [Elem; 2]) -> [Elem; 2] {
        let [a, b, c, d] = self.entries;
        [field.add(field.mul(v[0], a), field.mul(v[1], c)), field.add(field.mul(v[0], b), field.mul(v[1], d))]
    }
}

/// True iff every pairwise difference of the matrices defines a quadratic
/// form that vanishes only at the zero vector.
pub fn anisotropic_difference_check(field: &Field, clan: &[Matrix2]) -> Result<bool, AlgebraError> {
    if clan.iter().any(|m| m.field != field.tag()) {
        return Err(AlgebraError::MixedFields);
    }
    for (i, a) in clan.iter().enumerate() {
        for b in &clan[i + 1..] {
            let diff = a.sub(field, b);
            for x in field.elements() {
                for y in field.elements() {
                    if (x, y) != (0, 0) && diff.quadratic_form(field, [x, y]) == 0 {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}
