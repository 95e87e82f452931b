//! The module `R^n` with an ordered basis and its lexicographic order.
//!
//! Vectors are handled internally as integer keys: the standard coordinates
//! read as a base-`|R|` number, first coordinate most significant. Key order
//! is therefore the lexicographic order of standard coordinates by element
//! index, which is the tie-break used wherever a canonical choice is needed.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::order::RingOrder;
use crate::ring::{Elem, FiniteRing, RingError};

/// Default cap on `|R|^n` for anything that materializes the whole module.
pub const DEFAULT_CAP: usize = 1 << 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpaceError {
    #[error("|R|^n = {size} exceeds the cap of {cap}")]
    CapExceeded { size: u128, cap: usize },
    #[error("vectors do not form a basis: {0}")]
    NotABasis(String),
    #[error("family is not free: {0}")]
    NotFree(String),
    #[error("basis completion ran out of candidates")]
    CompletionExhausted,
    #[error("expected a vector of length {expected}, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("malformed vector `{0}`")]
    MalformedVector(String),
    #[error("malformed basis descriptor `{0}` (expected standard, reverse or a list of vectors)")]
    MalformedBasis(String),
    #[error("level {level} out of range 1..={n}")]
    LevelOutOfRange { level: usize, n: usize },
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// A vector of `R^n` in standard coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector(pub Vec<Elem>);

impl Vector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Elem] {
        &self.0
    }
}

/// `R^n` as a set of integer keys with coordinatewise arithmetic.
#[derive(Clone)]
pub struct Ambient {
    ring: Arc<FiniteRing>,
    n: usize,
    total: usize,
}

impl fmt::Debug for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ambient({}^{})", self.ring.spec(), self.n)
    }
}

impl Ambient {
    pub fn new(ring: Arc<FiniteRing>, n: usize, cap: usize) -> Result<Self, SpaceError> {
        let size = (ring.size() as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        if n == 0 || size > cap as u128 || size > u32::MAX as u128 {
            return Err(SpaceError::CapExceeded { size, cap });
        }
        Ok(Ambient {
            ring,
            n,
            total: size as usize,
        })
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn ring_arc(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `|R|^n`.
    pub fn total(&self) -> usize {
        self.total
    }

    pub fn encode(&self, coords: &[Elem]) -> usize {
        let q = self.ring.size();
        coords.iter().fold(0, |acc, &c| acc * q + c)
    }

    pub fn decode_into(&self, mut key: usize, out: &mut [Elem]) {
        let q = self.ring.size();
        for slot in out.iter_mut().rev() {
            *slot = key % q;
            key /= q;
        }
    }

    pub fn decode(&self, key: usize) -> Vec<Elem> {
        let mut out = vec![0; self.n];
        self.decode_into(key, &mut out);
        out
    }

    pub fn key(&self, v: &Vector) -> usize {
        self.encode(&v.0)
    }

    pub fn vector(&self, key: usize) -> Vector {
        Vector(self.decode(key))
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let q = self.ring.size();
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.n {
            out += self.ring.add(a % q, b % q) * place;
            a /= q;
            b /= q;
            place *= q;
        }
        out
    }

    /// Left scalar multiple `r * a`.
    pub fn scale(&self, r: Elem, a: usize) -> usize {
        let q = self.ring.size();
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.n {
            out += self.ring.mul(r, a % q) * place;
            a /= q;
            place *= q;
        }
        out
    }

    pub fn neg(&self, a: usize) -> usize {
        let q = self.ring.size();
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.n {
            out += self.ring.neg(a % q) * place;
            a /= q;
            place *= q;
        }
        out
    }

    /// Standard dot product `sum a_i b_i`.
    pub fn dot(&self, a: usize, b: usize) -> Elem {
        let q = self.ring.size();
        let (mut a, mut b) = (a, b);
        let mut acc = 0;
        for _ in 0..self.n {
            acc = self.ring.add(acc, self.ring.mul(a % q, b % q));
            a /= q;
            b /= q;
        }
        acc
    }

    /// The `i`-th standard basis vector, 1-based.
    pub fn unit_vector(&self, i: usize) -> usize {
        let mut c = vec![0; self.n];
        c[i - 1] = self.ring.one();
        self.encode(&c)
    }

    /// Display syntax: digit strings when every element name is a single
    /// character, semicolon-separated names otherwise.
    pub fn format_key(&self, key: usize) -> String {
        self.format_coords(&self.decode(key))
    }

    pub fn format_coords(&self, coords: &[Elem]) -> String {
        let names = coords.iter().map(|&c| self.ring.name(c));
        if self.ring.has_compact_names() {
            names.collect()
        } else {
            names.collect::<Vec<_>>().join(";")
        }
    }

    pub fn format(&self, v: &Vector) -> String {
        self.format_coords(&v.0)
    }

    pub fn parse_vector(&self, text: &str) -> Result<Vector, SpaceError> {
        let text = text.trim();
        let parts: Vec<String> = if text.contains(';') {
            text.split(';').map(str::to_string).collect()
        } else if self.ring.has_compact_names() {
            text.chars().map(String::from).collect()
        } else if self.n == 1 {
            vec![text.to_string()]
        } else if text.chars().count() == self.n && text.chars().all(|c| self.ring.parse_elem(&c.to_string()).is_ok()) {
            // single-character names such as 0 and 1 work even when others are longer
            text.chars().map(String::from).collect()
        } else {
            return Err(SpaceError::MalformedVector(text.to_string()));
        };
        if parts.len() != self.n {
            return Err(SpaceError::WrongLength {
                expected: self.n,
                got: parts.len(),
            });
        }
        let coords = parts
            .iter()
            .map(|p| self.ring.parse_elem(p))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Vector(coords))
    }

    /// Splits a comma-separated vector list, ignoring commas inside brackets.
    pub fn parse_vector_list(&self, text: &str) -> Result<Vec<Vector>, SpaceError> {
        let mut out = Vec::new();
        let mut depth = 0i32;
        let mut current = String::new();
        for ch in text.chars() {
            match ch {
                '[' | '(' => depth += 1,
                ']' | ')' => depth -= 1,
                _ => {}
            }
            if ch == ',' && depth == 0 {
                out.push(self.parse_vector(&current)?);
                current.clear();
            } else {
                current.push(ch);
            }
        }
        if !current.trim().is_empty() {
            out.push(self.parse_vector(&current)?);
        }
        Ok(out)
    }

    /// All multiples `r * a`, deduplicated, in key order.
    pub fn cyclic(&self, a: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.ring.elements().map(|r| self.scale(r, a)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// An ordered basis `b_1, ..., b_n` with both directions of the coordinate
/// map materialized.
#[derive(Clone)]
pub struct OrderedBasis {
    ambient: Ambient,
    vectors: Vec<usize>,
    /// coefficient tuple key -> vector key
    image: Vec<u32>,
    /// vector key -> coefficient tuple key
    coords: Vec<u32>,
}

impl fmt::Debug for OrderedBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.vectors.iter().map(|&v| self.ambient.format_key(v)).collect();
        write!(f, "OrderedBasis[{}]", names.join(","))
    }
}

impl OrderedBasis {
    /// Validates that `vectors` is a basis by checking that all `|R|^n`
    /// coefficient tuples map to distinct vectors.
    pub fn new(ambient: &Ambient, vectors: &[Vector]) -> Result<Self, SpaceError> {
        let n = ambient.n();
        if vectors.len() != n {
            return Err(SpaceError::NotABasis(format!("{} vectors for n = {n}", vectors.len())));
        }
        for v in vectors {
            if v.len() != n {
                return Err(SpaceError::WrongLength {
                    expected: n,
                    got: v.len(),
                });
            }
        }
        let keys: Vec<usize> = vectors.iter().map(|v| ambient.key(v)).collect();
        Self::from_keys(ambient, keys)
    }

    pub(crate) fn from_keys(ambient: &Ambient, keys: Vec<usize>) -> Result<Self, SpaceError> {
        let total = ambient.total();
        let q = ambient.ring().size();
        let n = ambient.n();
        // multiples[j][r] = r * b_j
        let multiples: Vec<Vec<usize>> = keys
            .iter()
            .map(|&b| ambient.ring().elements().map(|r| ambient.scale(r, b)).collect())
            .collect();
        let mut image = vec![0u32; total];
        let mut coords = vec![u32::MAX; total];
        let mut digits = vec![0usize; n];
        #[allow(clippy::needless_range_loop)]
        for t in 0..total {
            if t > 0 {
                // odometer on the tuple digits, last coefficient least significant
                let mut j = n - 1;
                loop {
                    digits[j] += 1;
                    if digits[j] < q {
                        break;
                    }
                    digits[j] = 0;
                    j -= 1;
                }
            }
            let v = digits
                .iter()
                .enumerate()
                .fold(0, |acc, (j, &x)| ambient.add(acc, multiples[j][x]));
            if coords[v] != u32::MAX {
                let names: Vec<String> = keys.iter().map(|&b| ambient.format_key(b)).collect();
                return Err(SpaceError::NotABasis(format!(
                    "{} has two coefficient representations over {{{}}}",
                    ambient.format_key(v),
                    names.join(",")
                )));
            }
            coords[v] = t as u32;
            image[t] = v as u32;
        }
        Ok(OrderedBasis {
            ambient: ambient.clone(),
            vectors: keys,
            image,
            coords,
        })
    }

    pub fn standard(ambient: &Ambient) -> Self {
        let keys = (1..=ambient.n()).map(|i| ambient.unit_vector(i)).collect();
        Self::from_keys(ambient, keys).expect("standard basis")
    }

    /// `e_n, ..., e_1`.
    pub fn reverse(ambient: &Ambient) -> Self {
        let keys = (1..=ambient.n()).rev().map(|i| ambient.unit_vector(i)).collect();
        Self::from_keys(ambient, keys).expect("reverse standard basis")
    }

    /// Parses `standard`, `reverse`, or a comma-separated list of vectors.
    pub fn parse(ambient: &Ambient, text: &str) -> Result<Self, SpaceError> {
        match text.trim() {
            "standard" => Ok(Self::standard(ambient)),
            "reverse" => Ok(Self::reverse(ambient)),
            "" => Err(SpaceError::MalformedBasis(text.to_string())),
            list => Self::new(ambient, &ambient.parse_vector_list(list)?),
        }
    }

    /// Extends a free family to a basis. Candidates are scanned in key order
    /// and kept whenever the enlarged family stays free.
    pub fn complete(ambient: &Ambient, partial: &[Vector]) -> Result<Self, SpaceError> {
        let mut span = vec![false; ambient.total()];
        span[0] = true;
        let mut members = vec![0usize];
        let mut keys = Vec::with_capacity(ambient.n());

        let try_add = |v: usize, span: &mut Vec<bool>, members: &mut Vec<usize>| -> bool {
            let nonzero_multiple_in_span = ambient.ring().elements().skip(1).any(|r| span[ambient.scale(r, v)]);
            if nonzero_multiple_in_span {
                return false;
            }
            let multiples = ambient.cyclic(v);
            let mut next = Vec::with_capacity(members.len() * multiples.len());
            for &m in &multiples {
                for &c in members.iter() {
                    next.push(ambient.add(m, c));
                }
            }
            for &x in &next {
                span[x] = true;
            }
            *members = next;
            true
        };

        for v in partial {
            if v.len() != ambient.n() {
                return Err(SpaceError::WrongLength {
                    expected: ambient.n(),
                    got: v.len(),
                });
            }
            let k = ambient.key(v);
            if !try_add(k, &mut span, &mut members) {
                return Err(SpaceError::NotFree(format!(
                    "a nonzero multiple of {} lies in the span of the earlier vectors",
                    ambient.format(v)
                )));
            }
            keys.push(k);
        }
        for cand in 1..ambient.total() {
            if members.len() == ambient.total() {
                break;
            }
            if try_add(cand, &mut span, &mut members) {
                keys.push(cand);
            }
        }
        if members.len() != ambient.total() || keys.len() != ambient.n() {
            return Err(SpaceError::CompletionExhausted);
        }
        Self::from_keys(ambient, keys)
    }

    pub fn n(&self) -> usize {
        self.vectors.len()
    }

    pub fn keys(&self) -> &[usize] {
        &self.vectors
    }

    pub fn vectors(&self) -> Vec<Vector> {
        self.vectors.iter().map(|&k| self.ambient.vector(k)).collect()
    }

    /// Vector key for a coefficient tuple key.
    #[inline]
    pub fn combine_key(&self, tuple: usize) -> usize {
        self.image[tuple] as usize
    }

    /// Coefficient tuple key for a vector key.
    #[inline]
    pub fn coords_key(&self, v: usize) -> usize {
        self.coords[v] as usize
    }

    pub fn describe(&self) -> String {
        self.vectors
            .iter()
            .map(|&v| self.ambient.format_key(v))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// `R^n` with a ring order and ordered basis.
#[derive(Clone)]
pub struct LexSpace {
    ambient: Ambient,
    order: RingOrder,
    basis: OrderedBasis,
}

impl fmt::Debug for LexSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LexSpace")
            .field("ambient", &self.ambient)
            .field("order", &self.order.describe(self.ambient.ring()))
            .field("basis", &self.basis)
            .finish()
    }
}

impl LexSpace {
    pub fn new(ambient: Ambient, order: RingOrder, basis: OrderedBasis) -> Self {
        debug_assert_eq!(order.sequence().len(), ambient.ring().size());
        debug_assert_eq!(basis.n(), ambient.n());
        LexSpace { ambient, order, basis }
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn ring(&self) -> &FiniteRing {
        self.ambient.ring()
    }

    pub fn order(&self) -> &RingOrder {
        &self.order
    }

    pub fn basis(&self) -> &OrderedBasis {
        &self.basis
    }

    pub fn n(&self) -> usize {
        self.ambient.n()
    }

    /// Coefficients `(x_1, ..., x_n)` with `x = sum x_j b_j`.
    pub fn coords(&self, x: &Vector) -> Vec<Elem> {
        self.ambient.decode(self.basis.coords_key(self.ambient.key(x)))
    }

    pub fn coords_of_key(&self, key: usize) -> Vec<Elem> {
        self.ambient.decode(self.basis.coords_key(key))
    }

    /// Largest `j` with `x_j != 0`, or 0 for the zero vector.
    pub fn level_of_key(&self, key: usize) -> usize {
        self.coords_of_key(key)
            .iter()
            .rposition(|&c| c != 0)
            .map_or(0, |j| j + 1)
    }

    pub fn level(&self, x: &Vector) -> usize {
        self.level_of_key(self.ambient.key(x))
    }

    pub fn compare_keys(&self, x: usize, y: usize) -> Ordering {
        let cx = self.coords_of_key(x);
        let cy = self.coords_of_key(y);
        let lx = cx.iter().rposition(|&c| c != 0).map_or(0, |j| j + 1);
        let ly = cy.iter().rposition(|&c| c != 0).map_or(0, |j| j + 1);
        lx.cmp(&ly).then_with(|| {
            for j in (0..lx).rev() {
                let o = self.order.rank(cx[j]).cmp(&self.order.rank(cy[j]));
                if o != Ordering::Equal {
                    return o;
                }
            }
            Ordering::Equal
        })
    }

    pub fn compare(&self, x: &Vector, y: &Vector) -> Ordering {
        self.compare_keys(self.ambient.key(x), self.ambient.key(y))
    }

    /// Keys of `V_i \ V_{i-1}` in ascending order.
    pub fn level_keys(&self, i: usize) -> Result<LevelIter<'_>, SpaceError> {
        if i == 0 || i > self.n() {
            return Err(SpaceError::LevelOutOfRange { level: i, n: self.n() });
        }
        Ok(LevelIter::new(self, i))
    }

    /// Vectors of `V_i \ V_{i-1}` in ascending order.
    pub fn enumerate_level(&self, i: usize) -> Result<impl Iterator<Item = Vector> + '_, SpaceError> {
        Ok(self.level_keys(i)?.map(|k| self.ambient.vector(k)))
    }

    pub fn format_key(&self, key: usize) -> String {
        self.ambient.format_key(key)
    }
}

/// Odometer over coefficient tuples of one level: `x_i` over the nonzero
/// elements in ring order (outermost), then `x_{i-1}, ..., x_1` over all of
/// `R` in ring order, with `x_1` innermost.
pub struct LevelIter<'a> {
    space: &'a LexSpace,
    nonzero: Vec<Elem>,
    level: usize,
    /// digits[j] is a position: in `nonzero` for j = level-1, in the full
    /// order sequence otherwise
    digits: Vec<usize>,
    done: bool,
}

impl<'a> LevelIter<'a> {
    fn new(space: &'a LexSpace, level: usize) -> Self {
        let nonzero: Vec<Elem> = space.order.nonzero().collect();
        let done = nonzero.is_empty();
        LevelIter {
            space,
            nonzero,
            level,
            digits: vec![0; level],
            done,
        }
    }

    pub fn level(&self) -> usize {
        self.level
    }
}

impl Iterator for LevelIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.done {
            return None;
        }
        let seq = self.space.order.sequence();
        let amb = &self.space.ambient;
        let mut tuple = vec![0; amb.n()];
        for j in 0..self.level - 1 {
            tuple[j] = seq[self.digits[j]];
        }
        tuple[self.level - 1] = self.nonzero[self.digits[self.level - 1]];
        let out = self.space.basis.combine_key(amb.encode(&tuple));

        let q = seq.len();
        let mut j = 0;
        loop {
            let limit = if j == self.level - 1 { self.nonzero.len() } else { q };
            self.digits[j] += 1;
            if self.digits[j] < limit {
                break;
            }
            self.digits[j] = 0;
            j += 1;
            if j == self.level {
                self.done = true;
                break;
            }
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        if self.done {
            return (0, Some(0));
        }
        let q = self.space.order.sequence().len();
        let mut remaining = 0usize;
        let mut place = 1usize;
        for j in 0..self.level {
            let limit = if j == self.level - 1 { self.nonzero.len() } else { q };
            remaining += (limit - 1 - self.digits[j]) * place;
            place *= limit;
        }
        (remaining + 1, Some(remaining + 1))
    }
}

impl ExactSizeIterator for LevelIter<'_> {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{natural_order, RingOrder};
    use crate::ring::IdealLattice;

    fn ambient(spec: &str, n: usize) -> Ambient {
        Ambient::new(Arc::new(FiniteRing::from_spec(spec).unwrap()), n, DEFAULT_CAP).unwrap()
    }

    fn space(spec: &str, n: usize, order: &str, basis: &str) -> LexSpace {
        let amb = ambient(spec, n);
        let lat = IdealLattice::new(amb.ring()).unwrap();
        let ord = if order == "natural" {
            natural_order(amb.ring(), &lat).unwrap()
        } else {
            RingOrder::parse_explicit(amb.ring(), order).unwrap()
        };
        let b = OrderedBasis::parse(&amb, basis).unwrap();
        LexSpace::new(amb, ord, b)
    }

    fn names(s: &LexSpace, keys: impl Iterator<Item = usize>) -> Vec<String> {
        keys.map(|k| s.format_key(k)).collect()
    }

    #[test]
    fn basis_validation() {
        let z4 = ambient("zmod:4", 3);
        assert!(OrderedBasis::parse(&z4, "100,010,001").is_ok());
        assert!(matches!(
            OrderedBasis::parse(&z4, "100,200,001"),
            Err(SpaceError::NotABasis(_))
        ));
        assert!(OrderedBasis::parse(&z4, "100,010").is_err());
        let f7 = ambient("gf:7", 3);
        assert!(OrderedBasis::parse(&f7, "113,331,100").is_ok());
    }

    #[test]
    fn coords_in_ex_basis() {
        let amb = ambient("gf:7", 3);
        let lat = IdealLattice::new(amb.ring()).unwrap();
        let ord = RingOrder::from_sequence(amb.ring(), (0..7).collect()).unwrap().checked(amb.ring(), &lat);
        let b = OrderedBasis::parse(&amb, "113,331,100").unwrap();
        let s = LexSpace::new(amb.clone(), ord, b);
        let v = amb.parse_vector("550").unwrap();
        assert_eq!(s.coords(&v), vec![2, 1, 0]);
        assert_eq!(s.coords(&amb.parse_vector("000").unwrap()), vec![0, 0, 0]);
        assert_eq!(s.level(&v), 2);
    }

    #[test]
    fn reverse_basis_natural_order_is_plain_lex() {
        let s = space("zmod:4", 3, "natural", "reverse");
        let mut all = vec![0];
        for i in 1..=3 {
            all.extend(s.level_keys(i).unwrap());
        }
        let got = names(&s, all.into_iter());
        let expected: Vec<String> = (0..64).map(|k| s.format_key(k)).collect();
        assert_eq!(got, expected);
        assert_eq!(&got[..6], ["000", "001", "002", "003", "010", "011"]);
    }

    #[test]
    fn levels_under_chain_respecting_order() {
        let s = space("zmod:4", 3, "1<3<2<0", "standard");
        assert_eq!(names(&s, s.level_keys(1).unwrap()), ["100", "300", "200"]);
        let l2 = names(&s, s.level_keys(2).unwrap());
        assert_eq!(l2.len(), 12);
        assert_eq!(&l2[..5], ["110", "310", "210", "010", "130"]);
        assert_eq!(&l2[8..], ["120", "320", "220", "020"]);
        let l3 = names(&s, s.level_keys(3).unwrap());
        assert_eq!(l3.len(), 48);
        assert_eq!(&l3[..5], ["111", "311", "211", "011", "131"]);
        assert_eq!(l3.last().unwrap(), "002");
    }

    #[test]
    fn level_sizes_and_size_hint() {
        let s = space("zmod:6", 3, "natural", "standard");
        for i in 1..=3 {
            let it = s.level_keys(i).unwrap();
            assert_eq!(it.len(), 5 * 6usize.pow(i as u32 - 1));
            assert_eq!(it.count(), 5 * 6usize.pow(i as u32 - 1));
        }
        assert!(s.level_keys(0).is_err());
        assert!(s.level_keys(4).is_err());
    }

    #[test]
    fn compare_is_reflexive_and_levels_first() {
        let s = space("zmod:4", 3, "1<3<2<0", "standard");
        let amb = s.ambient();
        let v = |t: &str| amb.parse_vector(t).unwrap();
        assert_eq!(s.compare(&v("123"), &v("123")), Ordering::Equal);
        assert_eq!(s.compare(&v("200"), &v("110")), Ordering::Less);
        assert_eq!(s.compare(&v("000"), &v("100")), Ordering::Less);
        assert_eq!(s.compare(&v("020"), &v("130")), Ordering::Greater);
    }

    #[test]
    fn completion() {
        let z4 = ambient("zmod:4", 4);
        let b = OrderedBasis::complete(&z4, &[z4.parse_vector("1111").unwrap()]).unwrap();
        assert_eq!(b.n(), 4);
        assert_eq!(z4.format_key(b.keys()[0]), "1111");

        let z43 = ambient("zmod:4", 3);
        let std = OrderedBasis::standard(&z43).vectors();
        let same = OrderedBasis::complete(&z43, &std).unwrap();
        assert_eq!(same.vectors(), std);
        assert!(matches!(
            OrderedBasis::complete(&z43, &[z43.parse_vector("200").unwrap()]),
            Err(SpaceError::NotFree(_))
        ));
    }

    #[test]
    fn vector_syntax() {
        let m = ambient("mat:2,2", 3);
        let v = m.parse_vector("[[0,1],[1,0]];I;0").unwrap();
        assert_eq!(m.format(&v), "[[0,1],[1,0]];[[1,0],[0,1]];[[0,0],[0,0]]");
        let list = m.parse_vector_list("0;I;I,I;0;I").unwrap();
        assert_eq!(list.len(), 2);
        let z12 = ambient("zmod:12", 2);
        assert_eq!(z12.format(&z12.parse_vector("11;3").unwrap()), "11;3");
        assert!(z12.parse_vector("113").is_err());
        assert!(matches!(
            ambient("zmod:4", 3).parse_vector("12"),
            Err(SpaceError::WrongLength { .. })
        ));
    }

    #[test]
    fn cap_is_enforced() {
        let r = Arc::new(FiniteRing::from_spec("zmod:256").unwrap());
        assert!(matches!(
            Ambient::new(r.clone(), 4, DEFAULT_CAP),
            Err(SpaceError::CapExceeded { .. })
        ));
        assert!(Ambient::new(r, 3, DEFAULT_CAP).is_ok());
    }

    #[test]
    fn short_names_parse_per_character_in_extension_fields() {
        let amb = Ambient::new(Arc::new(FiniteRing::from_spec("gf:4").unwrap()), 3, DEFAULT_CAP).unwrap();
        assert_eq!(amb.parse_vector("1a0").unwrap(), amb.parse_vector("1;a;0").unwrap());
        assert!(amb.parse_vector("1;1+a;0").is_ok());
        assert!(matches!(amb.parse_vector("1+a00"), Err(SpaceError::MalformedVector(_))));
    }
}
