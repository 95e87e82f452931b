//! The greedy lexicode construction and the code objects it produces.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;
use thiserror::Error;

use crate::lexspace::{Ambient, LexSpace, SpaceError};
use crate::order::{is_respectful, Respectfulness};
use crate::props::{Multiplicativity, Property};
use crate::ring::{Elem, IdealLattice, RingError};

/// Default cap on subsets visited by [`minimal_generating_set`].
pub const SUBSET_CAP: u64 = 20_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GreedyError {
    #[error("order is not respectful (witness {0}, {1}); pass the unrespectful override to run anyway")]
    Unrespectful(String, String),
    #[error("property is not known to be left multiplicative ({0:?}); pass the override to run anyway")]
    NotMultiplicative(Multiplicativity),
    #[error("dot products need a commutative ring, got `{0}`")]
    Noncommutative(String),
    #[error("search visited more than {cap} subsets")]
    CapExceeded { cap: u64 },
    #[error("property and space live over different ambients")]
    AmbientMismatch,
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Space(#[from] SpaceError),
}

/// A left submodule of `R^n`, stored as its sorted member keys.
#[derive(Clone)]
pub struct Code {
    ambient: Ambient,
    generators: Vec<usize>,
    members: Vec<usize>,
    set: FixedBitSet,
}

impl fmt::Debug for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|&g| self.ambient.format_key(g)).collect();
        write!(f, "Code({:?}, |C| = {}, R{{{}}})", self.ambient, self.len(), gens.join(","))
    }
}

impl PartialEq for Code {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Code {}

/// Span of a growing family, kept as a member list plus a bitset.
#[derive(Clone)]
struct Span {
    members: Vec<usize>,
    set: FixedBitSet,
}

impl Span {
    fn zero(amb: &Ambient) -> Self {
        let mut set = FixedBitSet::with_capacity(amb.total());
        set.insert(0);
        Span { members: vec![0], set }
    }

    /// Replaces the span `C` by `C + Rg`. Returns whether it grew.
    fn extend(&mut self, amb: &Ambient, g: usize) -> bool {
        if self.set.contains(g) {
            return false;
        }
        let orbit = amb.cyclic(g);
        let old = self.members.len();
        for i in 0..old {
            let c = self.members[i];
            for &y in &orbit {
                let s = amb.add(c, y);
                if !self.set.put(s) {
                    self.members.push(s);
                }
            }
        }
        true
    }

    fn len(&self) -> usize {
        self.members.len()
    }
}

impl Code {
    /// The zero code.
    pub fn zero(ambient: &Ambient) -> Self {
        Self::from_span(ambient, Vec::new(), Span::zero(ambient))
    }

    /// `R{g_1, ..., g_k}`, the smallest submodule containing the generators.
    pub fn from_generators(ambient: &Ambient, generators: &[usize]) -> Self {
        let mut span = Span::zero(ambient);
        for &g in generators {
            span.extend(ambient, g);
        }
        Self::from_span(ambient, generators.to_vec(), span)
    }

    /// Like [`from_generators`](Self::from_generators) but takes vectors.
    pub fn from_vectors(ambient: &Ambient, vectors: &[crate::lexspace::Vector]) -> Self {
        let keys: Vec<usize> = vectors.iter().map(|v| ambient.key(v)).collect();
        Self::from_generators(ambient, &keys)
    }

    /// A code from a member set that is already a submodule. Generators are
    /// picked greedily in key order.
    pub fn from_members(ambient: &Ambient, members: &[usize]) -> Self {
        let mut generators = Vec::new();
        let mut span = Span::zero(ambient);
        for &m in members {
            if span.extend(ambient, m) {
                generators.push(m);
            }
        }
        debug_assert_eq!(span.len(), members.len(), "member set is not a submodule");
        Self::from_span(ambient, generators, span)
    }

    fn from_span(ambient: &Ambient, generators: Vec<usize>, span: Span) -> Self {
        let mut members = span.members;
        members.sort_unstable();
        Code {
            ambient: ambient.clone(),
            generators,
            members,
            set: span.set,
        }
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    /// The generators this code was built from.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Member keys in ascending key order.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// Always false: a code contains zero.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }

    pub fn contains(&self, key: usize) -> bool {
        self.set.contains(key)
    }

    pub fn is_subcode_of(&self, other: &Code) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    /// Members shared with `other`.
    pub fn intersection(&self, other: &Code) -> Vec<usize> {
        self.members.iter().copied().filter(|&m| other.contains(m)).collect()
    }

    /// `C + Rg`.
    pub fn with_generator(&self, g: usize) -> Code {
        let mut span = Span {
            members: self.members.clone(),
            set: self.set.clone(),
        };
        span.extend(&self.ambient, g);
        let mut generators = self.generators.clone();
        generators.push(g);
        Self::from_span(&self.ambient, generators, span)
    }

    /// Formats the generators as `R{...}`.
    pub fn describe(&self) -> String {
        let gens: Vec<String> = self.generators.iter().map(|&g| self.ambient.format_key(g)).collect();
        format!("R{{{}}}", gens.join(","))
    }
}

/// Overrides for the preconditions of [`run_lexicode`].
#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    pub allow_unrespectful: bool,
    pub allow_nonmultiplicative: bool,
}

/// The inputs of a run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub ring: String,
    pub n: usize,
    pub order: String,
    pub basis: String,
    pub property: String,
    pub gamma: Vec<String>,
    pub respectful: Respectfulness,
    pub multiplicative: Multiplicativity,
    /// False when an override was needed, so the theorems do not apply.
    pub guarantees: bool,
}

/// A selected vector `a_i` from level `i` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Selection {
    pub level: usize,
    pub key: usize,
}

/// The output of the greedy algorithm with its full trace.
#[derive(Debug, Clone)]
pub struct Lexicode {
    space: LexSpace,
    gamma: Vec<Elem>,
    selected: Vec<Selection>,
    stages: Vec<Code>,
    candidates_scanned: u64,
    provenance: Provenance,
}

impl Lexicode {
    pub fn space(&self) -> &LexSpace {
        &self.space
    }

    pub fn gamma(&self) -> &[Elem] {
        &self.gamma
    }

    pub fn selected(&self) -> &[Selection] {
        &self.selected
    }

    /// `C_0, ..., C_n`.
    pub fn stages(&self) -> &[Code] {
        &self.stages
    }

    /// The final code `C_n`.
    pub fn code(&self) -> &Code {
        self.stages.last().expect("stage C_0 always exists")
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn candidates_scanned(&self) -> u64 {
        self.candidates_scanned
    }

    pub fn selected_keys(&self) -> Vec<usize> {
        self.selected.iter().map(|s| s.key).collect()
    }
}

/// Whether `P[gamma x + c]` holds for all `gamma` in `gamma` and `c` in `code`.
pub fn passes(amb: &Ambient, p: &Property, gamma: &[Elem], code: &Code, x: usize) -> bool {
    gamma.iter().all(|&g| {
        let gx = amb.scale(g, x);
        code.members().iter().all(|&c| p.holds_key(amb.add(gx, c)))
    })
}

/// Runs the greedy algorithm: in each level pick the first vector `x` with
/// `P[gamma x + c]` for all `gamma` and all `c` in the code so far.
///
/// `gamma` defaults to the lattice's generator set.
pub fn run_lexicode(
    space: &LexSpace,
    lattice: &IdealLattice,
    p: &Property,
    gamma: Option<&[Elem]>,
    options: RunOptions,
) -> Result<Lexicode, GreedyError> {
    let amb = space.ambient();
    let ring = amb.ring();
    if p.ambient().n() != amb.n() || p.ambient().ring().spec() != ring.spec() {
        return Err(GreedyError::AmbientMismatch);
    }
    let (respectful, witness) = match space.order().respectful() {
        Respectfulness::Unchecked => match is_respectful(ring, lattice, space.order()) {
            Ok(()) => (Respectfulness::VerifiedTrue, None),
            Err(w) => (Respectfulness::VerifiedFalse, Some(w)),
        },
        r => (r, space.order().witness()),
    };
    let mut guarantees = true;
    if respectful != Respectfulness::VerifiedTrue {
        if !options.allow_unrespectful {
            let (x, y) = witness.unwrap_or((0, 0));
            return Err(GreedyError::Unrespectful(ring.name(x).to_string(), ring.name(y).to_string()));
        }
        guarantees = false;
    }
    if !p.multiplicative().is_trusted() {
        if !options.allow_nonmultiplicative {
            return Err(GreedyError::NotMultiplicative(p.multiplicative()));
        }
        guarantees = false;
    }
    let gamma: Vec<Elem> = match gamma {
        Some(g) => {
            lattice.validate_gamma(g)?;
            g.to_vec()
        }
        None => lattice.gamma().to_vec(),
    };

    let mut stages = vec![Code::zero(amb)];
    let mut selected = Vec::new();
    let mut scanned = 0u64;
    for level in 1..=amb.n() {
        let prev = stages.last().expect("nonempty");
        let mut pick = None;
        for x in space.level_keys(level)? {
            scanned += 1;
            if passes(amb, p, &gamma, prev, x) {
                pick = Some(x);
                break;
            }
        }
        let next = match pick {
            Some(x) => {
                selected.push(Selection { level, key: x });
                prev.with_generator(x)
            }
            None => prev.clone(),
        };
        stages.push(next);
    }

    let provenance = Provenance {
        ring: ring.spec().to_string(),
        n: amb.n(),
        order: space.order().describe(ring),
        basis: space.basis().describe(),
        property: p.descriptor().to_string(),
        gamma: gamma.iter().map(|&g| ring.name(g).to_string()).collect(),
        respectful,
        multiplicative: p.multiplicative(),
        guarantees,
    };
    let mut final_gens = Vec::new();
    let last = stages.last_mut().expect("nonempty");
    final_gens.extend(selected.iter().map(|s| s.key));
    last.generators = final_gens;
    Ok(Lexicode {
        space: space.clone(),
        gamma,
        selected,
        stages,
        candidates_scanned: scanned,
        provenance,
    })
}

/// `|R|^k = size` for some `k`.
fn log_size(ring_size: usize, size: usize) -> Option<usize> {
    let mut k = 0;
    let mut p = 1usize;
    while p < size {
        p = p.checked_mul(ring_size)?;
        k += 1;
    }
    (p == size).then_some(k)
}

/// Whether `span + Rv` has `|R|` times as many elements as `span`, i.e.
/// `rv` lies in `span` only for `r = 0`.
fn extends_freely(amb: &Ambient, span: &Span, v: usize) -> bool {
    amb.ring().elements().skip(1).all(|r| !span.set.contains(amb.scale(r, v)))
}

/// Searches for a free basis: `k` members with `|R{..}| = |R|^k = |C|`.
///
/// Candidates are the code's generators first, then the remaining members
/// in key order. Returns the basis if the code is free.
pub fn is_free(code: &Code) -> Option<Vec<usize>> {
    let amb = code.ambient();
    let k = log_size(amb.ring().size(), code.len())?;
    let mut candidates: Vec<usize> = code.generators().iter().copied().filter(|&g| g != 0).collect();
    let mut seen = FixedBitSet::with_capacity(amb.total());
    candidates.retain(|&g| !seen.put(g));
    candidates.extend(code.members().iter().copied().filter(|&m| m != 0 && !seen.contains(m)));

    fn search(amb: &Ambient, candidates: &[usize], k: usize, span: &Span, chosen: &mut Vec<usize>) -> bool {
        if chosen.len() == k {
            return true;
        }
        for &v in candidates {
            if extends_freely(amb, span, v) {
                let mut next = span.clone();
                next.extend(amb, v);
                chosen.push(v);
                if search(amb, candidates, k, &next, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    let mut chosen = Vec::new();
    search(amb, &candidates, k, &Span::zero(amb), &mut chosen).then_some(chosen)
}

/// Whether `vectors` are free-independent: `sum r_i v_i = 0` forces all `r_i = 0`.
pub fn is_free_family(amb: &Ambient, vectors: &[usize]) -> bool {
    let mut span = Span::zero(amb);
    for &v in vectors {
        if !extends_freely(amb, &span, v) {
            return false;
        }
        span.extend(amb, v);
    }
    true
}

/// `C^perp = { y : y . c = 0 for all c in C }`, by scanning all of `R^n`.
pub fn dual_code(code: &Code) -> Result<Code, GreedyError> {
    let amb = code.ambient();
    if !amb.ring().is_commutative() {
        return Err(GreedyError::Noncommutative(amb.ring().spec().to_string()));
    }
    let gens = if code.generators().is_empty() {
        code.members()
    } else {
        code.generators()
    };
    let members: Vec<usize> = (0..amb.total())
        .filter(|&y| gens.iter().all(|&g| amb.dot(y, g) == 0))
        .collect();
    Ok(Code::from_members(amb, &members))
}

/// Whether `x . y = 0` for all members, checked on generator pairs.
pub fn is_self_orthogonal(code: &Code) -> Result<bool, GreedyError> {
    let amb = code.ambient();
    if !amb.ring().is_commutative() {
        return Err(GreedyError::Noncommutative(amb.ring().spec().to_string()));
    }
    let gens = code.generators();
    Ok(gens.iter().all(|&a| gens.iter().all(|&b| amb.dot(a, b) == 0)))
}

/// A smallest generating subset of the members; among those of minimum size,
/// the lexicographically first in key order.
pub fn minimal_generating_set(code: &Code, cap: u64) -> Result<Vec<usize>, GreedyError> {
    let amb = code.ambient();
    let nonzero: Vec<usize> = code.members().iter().copied().filter(|&m| m != 0).collect();
    if nonzero.is_empty() {
        return Ok(Vec::new());
    }

    struct Search<'a> {
        amb: &'a Ambient,
        nonzero: &'a [usize],
        target: usize,
        visited: u64,
        cap: u64,
    }

    impl Search<'_> {
        fn go(&mut self, start: usize, left: usize, span: &Span, chosen: &mut Vec<usize>) -> Result<bool, GreedyError> {
            if left == 0 {
                return Ok(span.len() == self.target);
            }
            for i in start..self.nonzero.len() {
                let v = self.nonzero[i];
                if span.set.contains(v) {
                    continue;
                }
                self.visited += 1;
                if self.visited > self.cap {
                    return Err(GreedyError::CapExceeded { cap: self.cap });
                }
                let mut next = span.clone();
                next.extend(self.amb, v);
                chosen.push(v);
                if self.go(i + 1, left - 1, &next, chosen)? {
                    return Ok(true);
                }
                chosen.pop();
            }
            Ok(false)
        }
    }

    let mut search = Search {
        amb,
        nonzero: &nonzero,
        target: code.len(),
        visited: 0,
        cap,
    };
    for k in 1.. {
        let mut chosen = Vec::new();
        if search.go(0, k, &Span::zero(amb), &mut chosen)? {
            return Ok(chosen);
        }
    }
    unreachable!("the members generate the code")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexspace::{OrderedBasis, DEFAULT_CAP};
    use crate::order::OrderSpec;
    use crate::props::PropertyOptions;
    use crate::ring::FiniteRing;
    use std::collections::BTreeMap;
    use std::sync::Arc;

    fn ambient(spec: &str, n: usize) -> Ambient {
        Ambient::new(Arc::new(FiniteRing::from_spec(spec).unwrap()), n, DEFAULT_CAP).unwrap()
    }

    fn keys(amb: &Ambient, list: &str) -> Vec<usize> {
        amb.parse_vector_list(list).unwrap().iter().map(|v| amb.key(v)).collect()
    }

    fn code(amb: &Ambient, list: &str) -> Code {
        Code::from_generators(amb, &keys(amb, list))
    }

    fn run(spec: &str, n: usize, order: &str, basis: &str, prop: &str, options: RunOptions) -> Lexicode {
        let amb = ambient(spec, n);
        let lattice = IdealLattice::new(amb.ring()).unwrap();
        let order = OrderSpec::parse(order).unwrap().build(amb.ring(), &lattice).unwrap();
        let basis = OrderedBasis::parse(&amb, basis).unwrap();
        let space = LexSpace::new(amb.clone(), order, basis);
        let p = Property::parse(&amb, &lattice, prop, &BTreeMap::new(), PropertyOptions::default()).unwrap();
        run_lexicode(&space, &lattice, &p, None, options).unwrap()
    }

    fn formatted(l: &Lexicode) -> Vec<String> {
        l.selected().iter().map(|s| l.space().ambient().format_key(s.key)).collect()
    }

    #[test]
    fn closure_sizes() {
        let z4 = ambient("zmod:4", 3);
        assert_eq!(code(&z4, "011,101").len(), 16);
        assert_eq!(Code::from_generators(&z4, &[]).len(), 1);
        let z9 = ambient("zmod:9", 4);
        assert_eq!(code(&z9, "0003,0030,0300,3000").len(), 81);
    }

    #[test]
    fn closure_matches_brute_force_sums() {
        // all R-combinations r1 g1 + r2 g2, enumerated directly
        let amb = ambient("zmod:6", 3);
        let gens = keys(&amb, "012,340");
        let mut expected: Vec<usize> = Vec::new();
        for r1 in 0..6 {
            for r2 in 0..6 {
                expected.push(amb.add(amb.scale(r1, gens[0]), amb.scale(r2, gens[1])));
            }
        }
        expected.sort_unstable();
        expected.dedup();
        assert_eq!(Code::from_generators(&amb, &gens).members(), &expected[..]);
    }

    #[test]
    fn z4_selfdot_natural() {
        let l = run("zmod:4", 4, "natural", "standard", "selfdot==0", RunOptions::default());
        assert_eq!(formatted(&l), ["2000", "0200", "0020", "1111"]);
        assert_eq!(l.code().len(), 32);
        assert!(is_free(l.code()).is_none());
        assert!(l.provenance().guarantees);
    }

    #[test]
    fn z4_unrespectful_needs_override() {
        let amb = ambient("zmod:4", 4);
        let lattice = IdealLattice::new(amb.ring()).unwrap();
        let order = OrderSpec::parse("explicit:0<2<1<3").unwrap().build(amb.ring(), &lattice).unwrap();
        let space = LexSpace::new(amb.clone(), order, OrderedBasis::standard(&amb));
        let p = Property::parse(&amb, &lattice, "selfdot==0", &BTreeMap::new(), PropertyOptions::default()).unwrap();
        assert!(matches!(
            run_lexicode(&space, &lattice, &p, None, RunOptions::default()),
            Err(GreedyError::Unrespectful(..))
        ));
        let l = run(
            "zmod:4",
            4,
            "explicit:0<2<1<3",
            "standard",
            "selfdot==0",
            RunOptions {
                allow_unrespectful: true,
                ..Default::default()
            },
        );
        assert_eq!(formatted(&l), ["2000", "0200", "0020", "0002"]);
        assert_eq!(l.code().len(), 16);
        assert!(!l.provenance().guarantees);
    }

    #[test]
    fn z10_homogeneous_free_and_nonfree() {
        let c = run("zmod:10", 3, "natural", "001,010,100", "homog>=2 zero:false", RunOptions::default());
        let amb = c.space().ambient().clone();
        assert_eq!(c.code(), &code(&amb, "012"));
        assert_eq!(is_free(c.code()), Some(keys(&amb, "012")));
        let c2 = run("zmod:10", 3, "natural", "001,010,100", "homog>=2 zero:true", RunOptions::default());
        assert_eq!(c2.code(), &code(&amb, "005,021,201"));
        assert_eq!(c2.code().len(), 50);
        assert_eq!(c.code().intersection(c2.code()), vec![0]);
        let min = minimal_generating_set(c2.code(), SUBSET_CAP).unwrap();
        assert_eq!(min.len(), 2);
        assert_eq!(&Code::from_generators(&amb, &min), c2.code());
        // {201,820} also generates
        assert_eq!(&code(&amb, "201,820"), c2.code());
    }

    #[test]
    fn f5_self_dual() {
        let l = run("gf:5", 4, "natural", "reverse", "selfdot==0", RunOptions::default());
        let amb = l.space().ambient().clone();
        assert_eq!(l.code(), &code(&amb, "0012,1200"));
        let dual = dual_code(l.code()).unwrap();
        assert_eq!(&dual, l.code());
        assert!(is_self_orthogonal(l.code()).unwrap());
    }

    #[test]
    fn z4_euclid_type_two() {
        let l = run("zmod:4", 5, "natural", "reverse", "euclid%8==0", RunOptions::default());
        let amb = l.space().ambient().clone();
        assert_eq!(l.code(), &code(&amb, "00022,00202,02002,20002"));
        assert_eq!(l.code().len(), 16);
        assert!(is_self_orthogonal(l.code()).unwrap());
        let dual = dual_code(l.code()).unwrap();
        assert_eq!(l.code().len() * dual.len(), amb.total());
    }

    #[test]
    fn z4_lee_six() {
        let l = run("zmod:4", 3, "natural", "standard", "lee>=6 zero:false", RunOptions::default());
        assert!(l.code().is_zero());
        let l = run("zmod:4", 3, "natural", "standard", "lee>=6 zero:true", RunOptions::default());
        let amb = l.space().ambient().clone();
        assert_eq!(l.code().members(), &keys(&amb, "000,222")[..]);
    }

    #[test]
    fn nonmultiplicative_property_is_gated() {
        let amb = ambient("zmod:3", 1);
        let lattice = IdealLattice::new(amb.ring()).unwrap();
        let order = OrderSpec::parse("natural").unwrap().build(amb.ring(), &lattice).unwrap();
        let space = LexSpace::new(amb.clone(), order, OrderedBasis::standard(&amb));
        let p = Property::parse(&amb, &lattice, "eq:2", &BTreeMap::new(), PropertyOptions::default()).unwrap();
        assert!(matches!(
            run_lexicode(&space, &lattice, &p, None, RunOptions::default()),
            Err(GreedyError::NotMultiplicative(Multiplicativity::Unknown))
        ));
        let forced = RunOptions {
            allow_nonmultiplicative: true,
            ..Default::default()
        };
        let l = run_lexicode(&space, &lattice, &p, None, forced).unwrap();
        assert!(!l.provenance().guarantees);
    }

    #[test]
    fn free_search_and_families() {
        let z9 = ambient("zmod:9", 4);
        let c = code(&z9, "0114,1048");
        assert_eq!(c.len(), 81);
        assert!(is_free(&c).is_some());
        let z4 = ambient("zmod:4", 2);
        assert!(is_free(&code(&z4, "20")).is_none());
        assert!(is_free(&code(&z4, "20,02")).is_none());
        assert_eq!(is_free(&Code::zero(&z4)), Some(vec![]));
        assert!(is_free_family(&z4, &keys(&z4, "10,21")));
        assert!(!is_free_family(&z4, &keys(&z4, "12,21")) || code(&z4, "12,21").len() == 16);
        assert!(!is_free_family(&z4, &keys(&z4, "20")));
    }

    #[test]
    fn dual_of_full_space_is_zero() {
        let z4 = ambient("zmod:4", 2);
        let full = code(&z4, "10,01");
        assert!(dual_code(&full).unwrap().is_zero());
        assert!(is_self_orthogonal(&Code::zero(&z4)).unwrap());
        let m = ambient("mat:2,2", 1);
        assert!(matches!(dual_code(&Code::zero(&m)), Err(GreedyError::Noncommutative(_))));
    }

    #[test]
    fn minimal_set_of_free_code_has_rank_size() {
        let z9 = ambient("zmod:9", 4);
        let c = code(&z9, "0114,1048");
        assert_eq!(minimal_generating_set(&c, SUBSET_CAP).unwrap().len(), 2);
        assert!(minimal_generating_set(&Code::zero(&z9), SUBSET_CAP).unwrap().is_empty());
    }
}
