//! Total orders on ring elements and the respectfulness condition.
//!
//! An order is respectful when, for nonzero `x, y` with `Rx ⊋ Ry`, some
//! generator of `Rx` precedes every generator of `Ry`. Orders built from a
//! linear extension of the ideal poset satisfy the stronger condition that
//! *every* generator of `Rx` precedes every generator of `Ry`.

use serde::Serialize;
use thiserror::Error;

use crate::ring::{Elem, FiniteRing, IdealLattice, RingFamily};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderError {
    #[error("not a linear extension of the ideal poset: {0}")]
    InvalidExtension(String),
    #[error("within-orbit order does not match the orbits: {0}")]
    WithinOrbitMismatch(String),
    #[error("the natural order is only defined for zmod and prime-field rings, got `{0}`")]
    NotZmod(String),
    #[error("order is not a permutation of the ring elements: {0}")]
    NotAPermutation(String),
    #[error("malformed order descriptor `{0}` (expected natural, respectful:auto[,zero_min] or explicit:a<b<...)")]
    MalformedSpec(String),
    #[error(transparent)]
    Ring(#[from] crate::ring::RingError),
}

/// A total order on the ideals compatible with inclusion, listed from the
/// least ideal (always the zero ideal) upward.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearExtension {
    sequence: Vec<usize>,
}

impl LinearExtension {
    /// Validates that `sequence` is a permutation of the ideal indices in
    /// which every ideal comes after all ideals it strictly contains.
    pub fn new(lattice: &IdealLattice, sequence: Vec<usize>) -> Result<Self, OrderError> {
        let n = lattice.len();
        let mut position = vec![usize::MAX; n];
        for (pos, &idx) in sequence.iter().enumerate() {
            if idx >= n || position[idx] != usize::MAX {
                return Err(OrderError::InvalidExtension(format!("bad or repeated ideal index {idx}")));
            }
            position[idx] = pos;
        }
        if sequence.len() != n {
            return Err(OrderError::InvalidExtension(format!(
                "{} ideals listed, lattice has {n}",
                sequence.len()
            )));
        }
        for big in 0..n {
            for small in 0..n {
                if lattice.strictly_contains(big, small) && position[small] > position[big] {
                    return Err(OrderError::InvalidExtension(format!(
                        "ideal #{small} is contained in #{big} but listed after it"
                    )));
                }
            }
        }
        Ok(LinearExtension { sequence })
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }
}

/// Enumerates linear extensions by lexicographic backtracking over ideal
/// indices, returning at most `limit`. The first one is the canonical
/// extension (smallest ideal first, ties by canonical generator).
pub fn linear_extensions(lattice: &IdealLattice, limit: usize) -> Vec<LinearExtension> {
    fn go(
        lattice: &IdealLattice,
        placed: &mut Vec<bool>,
        current: &mut Vec<usize>,
        out: &mut Vec<LinearExtension>,
        limit: usize,
    ) {
        let n = lattice.len();
        if out.len() >= limit {
            return;
        }
        if current.len() == n {
            out.push(LinearExtension {
                sequence: current.clone(),
            });
            return;
        }
        for cand in 0..n {
            if placed[cand] {
                continue;
            }
            let ready = (0..n).all(|j| !lattice.strictly_contains(cand, j) || placed[j]);
            if ready {
                placed[cand] = true;
                current.push(cand);
                go(lattice, placed, current, out, limit);
                current.pop();
                placed[cand] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(
        lattice,
        &mut vec![false; lattice.len()],
        &mut Vec::new(),
        &mut out,
        limit.max(1),
    );
    out
}

pub fn canonical_extension(lattice: &IdealLattice) -> LinearExtension {
    linear_extensions(lattice, 1).remove(0)
}

/// How the generators of each ideal are ordered among themselves.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum WithinOrbit {
    /// Ascending element index.
    #[default]
    ByIndex,
    /// One list per orbit, in the desired order. Lists may be given in any
    /// order but must cover every nonzero orbit exactly once.
    Explicit(Vec<Vec<Elem>>),
    /// The identity first in the unit orbit, every other orbit by index.
    OneFirst,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Respectfulness {
    VerifiedTrue,
    VerifiedFalse,
    Unchecked,
}

/// A total order on the ring elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingOrder {
    sequence: Vec<Elem>,
    rank: Vec<usize>,
    respectful: Respectfulness,
    witness: Option<(Elem, Elem)>,
}

impl RingOrder {
    /// Wraps a permutation of the ring elements. Respectfulness is unchecked.
    pub fn from_sequence(ring: &FiniteRing, sequence: Vec<Elem>) -> Result<Self, OrderError> {
        let n = ring.size();
        if sequence.len() != n {
            return Err(OrderError::NotAPermutation(format!(
                "{} elements listed, ring has {n}",
                sequence.len()
            )));
        }
        let mut rank = vec![usize::MAX; n];
        for (pos, &e) in sequence.iter().enumerate() {
            if e >= n || rank[e] != usize::MAX {
                return Err(OrderError::NotAPermutation(format!("element {e} repeated or out of range")));
            }
            rank[e] = pos;
        }
        Ok(RingOrder {
            sequence,
            rank,
            respectful: Respectfulness::Unchecked,
            witness: None,
        })
    }

    /// Parses `e0<e1<...` using element display names.
    pub fn parse_explicit(ring: &FiniteRing, text: &str) -> Result<Self, OrderError> {
        let seq = text
            .split('<')
            .map(|name| ring.parse_elem(name))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_sequence(ring, seq)
    }

    pub fn sequence(&self) -> &[Elem] {
        &self.sequence
    }

    /// Position of `e` in the order.
    #[inline]
    pub fn rank(&self, e: Elem) -> usize {
        self.rank[e]
    }

    pub fn respectful(&self) -> Respectfulness {
        self.respectful
    }

    pub fn witness(&self) -> Option<(Elem, Elem)> {
        self.witness
    }

    /// Nonzero elements in order.
    pub fn nonzero(&self) -> impl Iterator<Item = Elem> + '_ {
        self.sequence.iter().copied().filter(|&e| e != 0)
    }

    /// Runs the respectfulness check and records the verdict.
    pub fn checked(mut self, ring: &FiniteRing, lattice: &IdealLattice) -> Self {
        match is_respectful(ring, lattice, &self) {
            Ok(()) => {
                self.respectful = Respectfulness::VerifiedTrue;
                self.witness = None;
            }
            Err(w) => {
                self.respectful = Respectfulness::VerifiedFalse;
                self.witness = Some(w);
            }
        }
        self
    }

    pub fn describe(&self, ring: &FiniteRing) -> String {
        self.sequence
            .iter()
            .map(|&e| ring.name(e))
            .collect::<Vec<_>>()
            .join("<")
    }
}

fn best_generator(lattice: &IdealLattice, order: &RingOrder, ideal: usize) -> Elem {
    *lattice.ideals()[ideal]
        .generators
        .iter()
        .min_by_key(|&&g| order.rank(g))
        .expect("orbits are nonempty")
}

fn worst_generator(lattice: &IdealLattice, order: &RingOrder, ideal: usize) -> Elem {
    *lattice.ideals()[ideal]
        .generators
        .iter()
        .max_by_key(|&&g| order.rank(g))
        .expect("orbits are nonempty")
}

/// Checks respectfulness over all pairs of nonzero ideals `I ⊋ J`.
///
/// The unit multiples of `x` are exactly the generators of `Rx`, so the
/// condition for `(x, y)` depends only on their ideals: the earliest
/// generator of `I` must precede the earliest generator of `J`. On failure
/// returns that pair of earliest generators.
pub fn is_respectful(
    _ring: &FiniteRing,
    lattice: &IdealLattice,
    order: &RingOrder,
) -> Result<(), (Elem, Elem)> {
    for big in 1..lattice.len() {
        for small in 1..lattice.len() {
            if lattice.strictly_contains(big, small) {
                let x = best_generator(lattice, order, big);
                let y = best_generator(lattice, order, small);
                if order.rank(x) > order.rank(y) {
                    return Err((x, y));
                }
            }
        }
    }
    Ok(())
}

/// The respectfulness condition with the unit multiplier pinned to 1: for
/// nonzero `x, y` with `Rx ⊋ Ry`, `x` precedes every generator of `Ry`.
/// Returns the first failing `(x, y)`, taking `x` the latest generator of
/// its ideal and `y` the earliest.
pub fn respects_with_unit_one(lattice: &IdealLattice, order: &RingOrder) -> Option<(Elem, Elem)> {
    for big in 1..lattice.len() {
        for small in 1..lattice.len() {
            if lattice.strictly_contains(big, small) {
                let x = worst_generator(lattice, order, big);
                let y = best_generator(lattice, order, small);
                if order.rank(x) > order.rank(y) {
                    return Some((x, y));
                }
            }
        }
    }
    None
}

/// Whether `order` respects `ext`: for nonzero `x, y`, `Ry <_L Rx` implies
/// `x < y`. Exhaustive over element pairs; returns the first violation.
pub fn respects_extension(
    ring: &FiniteRing,
    lattice: &IdealLattice,
    order: &RingOrder,
    ext: &LinearExtension,
) -> Option<(Elem, Elem)> {
    let mut pos = vec![0; lattice.len()];
    for (p, &i) in ext.sequence().iter().enumerate() {
        pos[i] = p;
    }
    for x in 1..ring.size() {
        for y in 1..ring.size() {
            let (ix, iy) = (lattice.ideal_of(x), lattice.ideal_of(y));
            if pos[iy] < pos[ix] && order.rank(x) > order.rank(y) {
                return Some((x, y));
            }
        }
    }
    None
}

/// Recovers the linear extension an order respects, if any.
pub fn respected_extension(
    ring: &FiniteRing,
    lattice: &IdealLattice,
    order: &RingOrder,
) -> Option<LinearExtension> {
    let mut groups: Vec<usize> = Vec::new();
    for e in order.nonzero() {
        let idx = lattice.ideal_of(e);
        if groups.last() != Some(&idx) {
            if groups.contains(&idx) {
                return None;
            }
            groups.push(idx);
        }
    }
    groups.push(0);
    groups.reverse();
    let ext = LinearExtension::new(lattice, groups).ok()?;
    respects_extension(ring, lattice, order, &ext).is_none().then_some(ext)
}

/// Builds the order induced by a linear extension: `x < y` iff `Ry <_L Rx`,
/// or `Rx = Ry` and `x` precedes `y` within the orbit.
///
/// That rule makes 0 the largest element; `zero_min` moves it to the front
/// instead. Either way the result is respectful.
pub fn make_respectful(
    ring: &FiniteRing,
    lattice: &IdealLattice,
    ext: &LinearExtension,
    within: &WithinOrbit,
    zero_min: bool,
) -> Result<RingOrder, OrderError> {
    LinearExtension::new(lattice, ext.sequence().to_vec())?;
    let orbits = lattice.ideals();
    let lists: Vec<Vec<Elem>> = match within {
        WithinOrbit::ByIndex => orbits.iter().map(|i| i.generators.clone()).collect(),
        WithinOrbit::OneFirst => orbits
            .iter()
            .map(|i| {
                let mut g = i.generators.clone();
                if let Some(p) = g.iter().position(|&e| e == ring.one()) {
                    let one = g.remove(p);
                    g.insert(0, one);
                }
                g
            })
            .collect(),
        WithinOrbit::Explicit(given) => {
            let mut lists = vec![Vec::new(); orbits.len()];
            lists[0] = vec![0];
            for list in given {
                let first = *list
                    .first()
                    .ok_or_else(|| OrderError::WithinOrbitMismatch("empty list".into()))?;
                if first >= ring.size() {
                    return Err(OrderError::WithinOrbitMismatch(format!("element {first} out of range")));
                }
                let idx = lattice.ideal_of(first);
                if idx == 0 {
                    continue;
                }
                let mut sorted = list.clone();
                sorted.sort_unstable();
                if sorted != orbits[idx].generators || !lists[idx].is_empty() {
                    return Err(OrderError::WithinOrbitMismatch(format!(
                        "list starting at {} is not exactly one orbit",
                        ring.name(first)
                    )));
                }
                lists[idx] = list.clone();
            }
            if let Some(missing) = lists.iter().position(Vec::is_empty) {
                return Err(OrderError::WithinOrbitMismatch(format!(
                    "orbit of {} not covered",
                    ring.name(orbits[missing].canonical_gen)
                )));
            }
            lists
        }
    };

    let mut sequence = Vec::with_capacity(ring.size());
    if zero_min {
        sequence.push(0);
    }
    for &idx in ext.sequence().iter().rev() {
        if idx != 0 {
            sequence.extend_from_slice(&lists[idx]);
        }
    }
    if !zero_min {
        sequence.push(0);
    }
    let order = RingOrder::from_sequence(ring, sequence)?.checked(ring, lattice);
    debug_assert_eq!(order.respectful(), Respectfulness::VerifiedTrue);
    Ok(order)
}

/// `0 < 1 < ... < m-1` on `Z_m`, and on `gf:p` for prime `p`.
pub fn natural_order(ring: &FiniteRing, lattice: &IdealLattice) -> Result<RingOrder, OrderError> {
    match ring.family() {
        RingFamily::Zmod { .. } | RingFamily::Galois { k: 1, .. } => {
            Ok(RingOrder::from_sequence(ring, ring.elements().collect())?.checked(ring, lattice))
        }
        _ => Err(OrderError::NotZmod(ring.spec().to_string())),
    }
}

/// Order descriptor accepted on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderSpec {
    Natural,
    RespectfulAuto { zero_min: bool },
    Explicit(String),
}

impl OrderSpec {
    pub fn parse(text: &str) -> Result<Self, OrderError> {
        let text = text.trim();
        match text {
            "natural" => Ok(OrderSpec::Natural),
            "respectful:auto" => Ok(OrderSpec::RespectfulAuto { zero_min: false }),
            "respectful:auto,zero_min" => Ok(OrderSpec::RespectfulAuto { zero_min: true }),
            _ => match text.strip_prefix("explicit:") {
                Some(rest) if !rest.is_empty() => Ok(OrderSpec::Explicit(rest.to_string())),
                _ => Err(OrderError::MalformedSpec(text.to_string())),
            },
        }
    }

    /// Builds the order and runs the respectfulness check.
    pub fn build(&self, ring: &FiniteRing, lattice: &IdealLattice) -> Result<RingOrder, OrderError> {
        match self {
            OrderSpec::Natural => natural_order(ring, lattice),
            OrderSpec::RespectfulAuto { zero_min } => make_respectful(
                ring,
                lattice,
                &canonical_extension(lattice),
                &WithinOrbit::ByIndex,
                *zero_min,
            ),
            OrderSpec::Explicit(text) => Ok(RingOrder::parse_explicit(ring, text)?.checked(ring, lattice)),
        }
    }
}
