//! Small finite rings stored as dense Cayley tables.
//!
//! Every ring built here has at most 256 elements. Elements are plain
//! indices into the operation tables; index 0 is always the zero element.

mod construct;
mod lattice;
mod poly;

use std::collections::HashMap;
use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use thiserror::Error;

pub use construct::{parse_descriptor, RingDescriptor};
pub(crate) use construct::matrix_entries;
pub use lattice::{solve_unit_combination, IdealLattice, PrincipalIdeal};

/// Index of a ring element in the operation tables.
pub type Elem = usize;

/// Largest ring the constructors will build.
pub const MAX_RING_SIZE: usize = 256;

/// Largest field accepted by `gf:q`.
pub const MAX_FIELD_SIZE: usize = 128;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("malformed ring descriptor `{0}` (expected zmod:m, gf:q, chain:q,e or mat:k,q)")]
    MalformedSpec(String),
    #[error("ring `{spec}` has {size} elements, cap is {cap}")]
    TooLarge { spec: String, size: u128, cap: usize },
    #[error("{0} is not a prime power")]
    NotPrimePower(usize),
    #[error("ring axiom violated: {0}")]
    AxiomViolation(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("left ideal enumeration exceeded the work cap of {0} ideals")]
    LatticeTooLarge(usize),
    #[error("invalid generator set: {0}")]
    InvalidGamma(String),
    #[error("Rp + Rq != Rd for p={p}, q={q}, d={d}")]
    NotASum { p: String, q: String, d: String },
    #[error("no unit combination found for p={p}, q={q}, d={d}; the ring does not have stable range 1")]
    NoUnitCombination { p: String, q: String, d: String },
}

/// Which constructor produced a ring, with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingFamily {
    /// Integers modulo `m`.
    Zmod { m: usize },
    /// Galois field with `p^k` elements.
    Galois { p: usize, k: u32 },
    /// `F_q[u]/(u^e)`.
    Chain { q: usize, e: u32 },
    /// `k x k` matrices over `F_q`.
    Matrix { k: usize, q: usize },
}

/// A finite ring with identity given by its full operation tables.
#[derive(Clone)]
pub struct FiniteRing {
    spec: String,
    family: RingFamily,
    size: usize,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    one: Elem,
    units: Vec<Elem>,
    inverse: Vec<Option<Elem>>,
    names: Vec<String>,
    lookup: HashMap<String, Elem>,
    commutative: bool,
    compact_names: bool,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("spec", &self.spec)
            .field("size", &self.size)
            .field("units", &self.units.len())
            .finish()
    }
}

impl FiniteRing {
    /// Builds a ring from its descriptor string, e.g. `zmod:12` or `mat:2,2`.
    pub fn from_spec(spec: &str) -> Result<Self, RingError> {
        let descriptor = parse_descriptor(spec)?;
        let ring = construct::build(&descriptor)?;
        ring.check_axioms()?;
        Ok(ring)
    }

    /// Assembles a ring from raw tables. Tables are indexed `a * size + b`.
    pub(crate) fn from_tables(
        spec: String,
        family: RingFamily,
        add: Vec<Elem>,
        mul: Vec<Elem>,
        one: Elem,
        names: Vec<String>,
        aliases: &[(&str, Elem)],
    ) -> Self {
        let size = names.len();
        debug_assert_eq!(add.len(), size * size);
        debug_assert_eq!(mul.len(), size * size);

        let neg = (0..size)
            .map(|a| {
                (0..size)
                    .find(|&b| add[a * size + b] == 0)
                    .expect("additive inverse exists")
            })
            .collect();

        let mut inverse = vec![None; size];
        for a in 0..size {
            inverse[a] = (0..size).find(|&b| mul[a * size + b] == one && mul[b * size + a] == one);
        }
        let units = (0..size).filter(|&a| inverse[a].is_some()).collect();

        let commutative = (0..size).all(|a| (0..a).all(|b| mul[a * size + b] == mul[b * size + a]));

        let mut lookup: HashMap<String, Elem> = names.iter().cloned().zip(0..).collect();
        for &(alias, e) in aliases {
            lookup.entry(alias.to_string()).or_insert(e);
        }
        let compact_names = names.iter().all(|n| n.chars().count() == 1);

        FiniteRing {
            spec,
            family,
            size,
            add,
            mul,
            neg,
            one,
            units,
            inverse,
            names,
            lookup,
            commutative,
            compact_names,
        }
    }

    pub fn spec(&self) -> &str {
        &self.spec
    }

    pub fn family(&self) -> &RingFamily {
        &self.family
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a * self.size + b]
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.size + b]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg[b])
    }

    /// The group of units, in ascending index order.
    pub fn units(&self) -> &[Elem] {
        &self.units
    }

    #[inline]
    pub fn is_unit(&self, a: Elem) -> bool {
        self.inverse[a].is_some()
    }

    pub fn inverse(&self, a: Elem) -> Option<Elem> {
        self.inverse[a]
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn name(&self, a: Elem) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// True when every element name is a single character, so vectors can be
    /// written as plain digit strings like `0123`.
    pub fn has_compact_names(&self) -> bool {
        self.compact_names
    }

    /// Looks up an element by display name (or a constructor alias such as `I`).
    pub fn parse_elem(&self, name: &str) -> Result<Elem, RingError> {
        self.lookup
            .get(name.trim())
            .copied()
            .ok_or_else(|| RingError::UnknownElement(name.to_string()))
    }

    /// Checks the ring axioms. Exhaustive over all triples when `|R| <= 64`,
    /// otherwise over 100 000 seeded random triples plus all pairs.
    pub fn check_axioms(&self) -> Result<(), RingError> {
        let n = self.size;
        let fail = |what: &str, a: Elem, b: Elem, c: Elem| {
            Err(RingError::AxiomViolation(format!(
                "{what} fails at ({}, {}, {})",
                self.names[a], self.names[b], self.names[c]
            )))
        };
        if self.add.iter().any(|&x| x >= n) || self.mul.iter().any(|&x| x >= n) {
            return Err(RingError::AxiomViolation("table entry out of range".into()));
        }
        for a in 0..n {
            if self.add(a, 0) != a || self.add(0, a) != a {
                return fail("additive identity", a, 0, 0);
            }
            if self.mul(a, self.one) != a || self.mul(self.one, a) != a {
                return fail("multiplicative identity", a, self.one, 0);
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail("commutativity of +", a, b, 0);
                }
            }
        }
        let triple = |a: Elem, b: Elem, c: Elem| -> Result<(), RingError> {
            if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                return fail("associativity of +", a, b, c);
            }
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return fail("associativity of *", a, b, c);
            }
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                return fail("left distributivity", a, b, c);
            }
            if self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c)) {
                return fail("right distributivity", a, b, c);
            }
            Ok(())
        };
        if n <= 64 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        triple(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(0x5eed_0000 ^ n as u64);
            for _ in 0..100_000 {
                triple(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zmod4_units() {
        let r = FiniteRing::from_spec("zmod:4").unwrap();
        assert_eq!(r.size(), 4);
        assert_eq!(r.units(), &[1, 3]);
        assert_eq!(r.one(), 1);
        assert!(r.is_commutative());
    }

    #[test]
    fn mat22_unit_count_matches_brute_force() {
        // invertible 2x2 matrices over F2 are those with ad - bc = 1 (mod 2)
        let mut invertible = 0;
        for bits in 0..16u32 {
            let (a, b, c, d) = ((bits >> 3) & 1, (bits >> 2) & 1, (bits >> 1) & 1, bits & 1);
            if (a * d + b * c) % 2 == 1 {
                invertible += 1;
            }
        }
        let r = FiniteRing::from_spec("mat:2,2").unwrap();
        assert_eq!(r.size(), 16);
        assert_eq!(r.units().len(), invertible);
        assert_eq!(invertible, 6);
        assert!(!r.is_commutative());
        assert_eq!(r.name(r.one()), "[[1,0],[0,1]]");
        assert_eq!(r.parse_elem("I").unwrap(), r.one());
    }

    #[test]
    fn gf9_is_a_field() {
        let r = FiniteRing::from_spec("gf:9").unwrap();
        assert_eq!(r.size(), 9);
        assert_eq!(r.units().len(), 8);
        assert!((1..9).all(|a| r.is_unit(a)));
    }

    #[test]
    fn chain22_units() {
        let r = FiniteRing::from_spec("chain:2,2").unwrap();
        assert_eq!(r.size(), 4);
        let names: Vec<_> = r.units().iter().map(|&u| r.name(u)).collect();
        assert_eq!(names, ["1", "1+u"]);
        let u = r.parse_elem("u").unwrap();
        assert_eq!(r.mul(u, u), 0);
    }

    #[test]
    fn rejects_bad_descriptors() {
        assert!(matches!(
            FiniteRing::from_spec("zmod:1"),
            Err(RingError::MalformedSpec(_))
        ));
        assert!(matches!(
            FiniteRing::from_spec("gf:6"),
            Err(RingError::NotPrimePower(6))
        ));
        assert!(matches!(
            FiniteRing::from_spec("zmod:300"),
            Err(RingError::TooLarge { .. })
        ));
        assert!(matches!(
            FiniteRing::from_spec("mat:3,2"),
            Err(RingError::TooLarge { .. })
        ));
        assert!(matches!(
            FiniteRing::from_spec("chain:4,5"),
            Err(RingError::TooLarge { .. })
        ));
        assert!(matches!(
            FiniteRing::from_spec("gf:256"),
            Err(RingError::TooLarge { .. })
        ));
        assert!(FiniteRing::from_spec("poly:3").is_err());
        assert!(FiniteRing::from_spec("zmod:x").is_err());
    }

    #[test]
    fn display_names_are_injective() {
        for spec in ["zmod:12", "gf:8", "gf:9", "chain:3,2", "chain:4,2", "mat:2,2"] {
            let r = FiniteRing::from_spec(spec).unwrap();
            let mut names = r.names().to_vec();
            names.sort();
            names.dedup();
            assert_eq!(names.len(), r.size(), "{spec}");
            assert_eq!(r.name(0), if spec.starts_with("mat") { "[[0,0],[0,0]]" } else { "0" });
            for a in r.elements() {
                assert_eq!(r.parse_elem(r.name(a)).unwrap(), a);
            }
        }
    }

    #[test]
    fn large_rings_pass_sampled_axioms() {
        for spec in ["zmod:256", "gf:128", "chain:2,8", "mat:2,3", "chain:16,2"] {
            let r = FiniteRing::from_spec(spec).unwrap();
            assert!(r.check_axioms().is_ok(), "{spec}");
        }
    }

    #[test]
    fn units_are_exactly_two_sided_invertibles() {
        for spec in ["zmod:12", "chain:2,3", "mat:2,2", "gf:4"] {
            let r = FiniteRing::from_spec(spec).unwrap();
            for a in r.elements() {
                let brute = r
                    .elements()
                    .any(|b| r.mul(a, b) == r.one() && r.mul(b, a) == r.one());
                assert_eq!(brute, r.is_unit(a), "{spec} element {}", r.name(a));
            }
        }
    }
}
