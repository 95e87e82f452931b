//! Selection properties on `R^n`.
//!
//! A property is a predicate on vectors. The greedy construction needs it to
//! be left multiplicative: `P[ux] = P[x]` for every unit `u`. Built-in atoms
//! that are known to be multiplicative are marked `Declared`; anything can be
//! checked exhaustively with [`Property::verify_left_multiplicative`].

mod parse;
mod weight;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;
use num_rational::Rational64;
use serde::Serialize;
use thiserror::Error;

use crate::lexspace::Ambient;
use crate::ring::{Elem, IdealLattice, RingError};

pub use weight::{WeightFunction, WeightKind};

/// Vectors above this many are evaluated on demand instead of tabulated.
const TABLE_CAP: usize = 1 << 22;

/// Work cap for the exhaustive multiplicativity check, in `(u, x)` pairs.
pub const VERIFY_CAP: u128 = 1 << 28;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PropertyError {
    #[error("property syntax error at byte {pos} in `{text}`: {msg}")]
    Syntax { text: String, pos: usize, msg: String },
    #[error("weight `{weight}` needs a {needs} ring, got `{ring}`")]
    IncompatibleWeight { weight: String, ring: String, needs: String },
    #[error("homogeneous weight axioms fail: {0}")]
    HomogeneousAxiom(String),
    #[error("selfdot is not multiplicative over the noncommutative ring `{0}`")]
    SelfDotNoncommutative(String),
    #[error("unknown code `{0}`")]
    UnknownCode(String),
    #[error("multiplicativity check needs {work} evaluations, cap is {cap}")]
    CapExceeded { work: u128, cap: u128 },
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Space(#[from] crate::lexspace::SpaceError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Multiplicativity {
    /// Checked exhaustively.
    Verified,
    /// A counterexample is known.
    Refuted,
    /// Holds for the built-in by construction, not checked.
    Declared,
    /// Nothing known.
    Unknown,
}

impl Multiplicativity {
    pub fn is_trusted(self) -> bool {
        matches!(self, Multiplicativity::Verified | Multiplicativity::Declared)
    }

    fn both(self, other: Self) -> Self {
        if self.is_trusted() && other.is_trusted() {
            Multiplicativity::Declared
        } else {
            Multiplicativity::Unknown
        }
    }
}

/// What the property says about the zero vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum ZeroPolicy {
    #[default]
    AsIs,
    ForceTrue,
    ForceFalse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Ge,
    Le,
    Eq,
    /// The weight is an integer congruent to `residue` modulo `modulus`.
    Mod { modulus: i64, residue: i64 },
}

impl Comparison {
    fn test(self, w: Rational64, threshold: Rational64) -> bool {
        match self {
            Comparison::Ge => w >= threshold,
            Comparison::Le => w <= threshold,
            Comparison::Eq => w == threshold,
            Comparison::Mod { modulus, residue } => {
                w.is_integer() && (w.to_integer() - residue).rem_euclid(modulus) == 0
            }
        }
    }
}

/// A named code used by `member:` atoms, given by its member keys.
#[derive(Debug, Clone)]
pub struct NamedCode {
    pub name: String,
    pub members: Vec<usize>,
}

#[derive(Debug, Clone)]
enum Atom {
    Weight {
        weight: Arc<WeightFunction>,
        cmp: Comparison,
        threshold: Rational64,
    },
    SelfDot,
    SumIn {
        ideal: FixedBitSet,
    },
    Member {
        codes: Vec<FixedBitSet>,
    },
    Equals {
        key: usize,
    },
    NonZero,
}

#[derive(Debug, Clone)]
enum Expr {
    Atom(Atom),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
}

impl Expr {
    fn eval(&self, amb: &Ambient, key: usize, coords: &[Elem]) -> bool {
        match self {
            Expr::And(a, b) => a.eval(amb, key, coords) && b.eval(amb, key, coords),
            Expr::Or(a, b) => a.eval(amb, key, coords) || b.eval(amb, key, coords),
            Expr::Atom(atom) => match atom {
                Atom::Weight { weight, cmp, threshold } => cmp.test(weight.vector_weight(coords), *threshold),
                Atom::SelfDot => {
                    let r = amb.ring();
                    coords.iter().fold(0, |acc, &c| r.add(acc, r.mul(c, c))) == 0
                }
                Atom::SumIn { ideal } => {
                    let r = amb.ring();
                    ideal.contains(coords.iter().fold(0, |acc, &c| r.add(acc, c)))
                }
                Atom::Member { codes } => codes.iter().any(|c| c.contains(key)),
                Atom::Equals { key: target } => key == *target,
                Atom::NonZero => key != 0,
            },
        }
    }
}

/// Options that unlock constructions which are rejected by default.
#[derive(Debug, Clone, Copy, Default)]
pub struct PropertyOptions {
    /// Allow `selfdot` over noncommutative rings (it is then not
    /// multiplicative in general).
    pub allow_noncommutative_selfdot: bool,
}

/// A predicate on `R^n`.
#[derive(Clone)]
pub struct Property {
    ambient: Ambient,
    expr: Expr,
    zero_policy: ZeroPolicy,
    multiplicative: Multiplicativity,
    counterexample: Option<(Elem, usize)>,
    descriptor: String,
    table: Arc<OnceLock<FixedBitSet>>,
}

impl fmt::Debug for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Property")
            .field("descriptor", &self.descriptor)
            .field("zero_policy", &self.zero_policy)
            .field("multiplicative", &self.multiplicative)
            .finish()
    }
}

/// Outcome of the exhaustive multiplicativity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicativityVerdict {
    pub multiplicative: bool,
    /// `(u, x)` with `P[x]` true and `P[ux]` false.
    pub counterexample: Option<(Elem, usize)>,
    pub work: u64,
}

impl Property {
    /// Parses a property expression. `codes` supplies the codes that
    /// `member:` atoms may refer to.
    pub fn parse(
        ambient: &Ambient,
        lattice: &IdealLattice,
        text: &str,
        codes: &BTreeMap<String, NamedCode>,
        options: PropertyOptions,
    ) -> Result<Self, PropertyError> {
        let parsed = parse::parse(ambient, lattice, text, codes, options)?;
        Ok(Property {
            ambient: ambient.clone(),
            expr: parsed.expr,
            zero_policy: parsed.zero_policy,
            multiplicative: parsed.multiplicative,
            counterexample: None,
            descriptor: text.trim().to_string(),
            table: Arc::new(OnceLock::new()),
        })
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    pub fn zero_policy(&self) -> ZeroPolicy {
        self.zero_policy
    }

    pub fn multiplicative(&self) -> Multiplicativity {
        self.multiplicative
    }

    pub fn counterexample(&self) -> Option<(Elem, usize)> {
        self.counterexample
    }

    /// Same predicate with a different value at the zero vector.
    pub fn with_zero_policy(&self, policy: ZeroPolicy) -> Self {
        let mut p = self.clone();
        p.zero_policy = policy;
        p.table = Arc::new(OnceLock::new());
        p.descriptor = format!("{} zero:{}", strip_zero_suffix(&self.descriptor), policy_name(policy));
        p
    }

    /// Conjunction; left multiplicative if both sides are.
    pub fn and(&self, other: &Property) -> Self {
        self.combine(other, "and", |a, b| Expr::And(Box::new(a), Box::new(b)))
    }

    /// Disjunction; left multiplicative if both sides are.
    pub fn or(&self, other: &Property) -> Self {
        self.combine(other, "or", |a, b| Expr::Or(Box::new(a), Box::new(b)))
    }

    fn combine(&self, other: &Property, op: &str, f: impl Fn(Expr, Expr) -> Expr) -> Self {
        // fold each side's zero policy into its expression so it survives
        let lhs = self.expr_with_policy();
        let rhs = other.expr_with_policy();
        Property {
            ambient: self.ambient.clone(),
            expr: f(lhs, rhs),
            zero_policy: ZeroPolicy::AsIs,
            multiplicative: self.multiplicative.both(other.multiplicative),
            counterexample: None,
            descriptor: format!("{op}({},{})", self.descriptor, other.descriptor),
            table: Arc::new(OnceLock::new()),
        }
    }

    fn expr_with_policy(&self) -> Expr {
        let zero = Expr::Atom(Atom::Equals { key: 0 });
        match self.zero_policy {
            ZeroPolicy::AsIs => self.expr.clone(),
            ZeroPolicy::ForceTrue => Expr::Or(Box::new(self.expr.clone()), Box::new(zero)),
            ZeroPolicy::ForceFalse => Expr::And(Box::new(self.expr.clone()), Box::new(Expr::Atom(Atom::NonZero))),
        }
    }

    /// Evaluates `P` at the vector with key `key`.
    pub fn holds_key(&self, key: usize) -> bool {
        if self.ambient.total() <= TABLE_CAP {
            let table = self.table.get_or_init(|| {
                let mut t = FixedBitSet::with_capacity(self.ambient.total());
                let mut coords = vec![0; self.ambient.n()];
                for k in 0..self.ambient.total() {
                    self.ambient.decode_into(k, &mut coords);
                    if self.eval_uncached(k, &coords) {
                        t.insert(k);
                    }
                }
                t
            });
            table.contains(key)
        } else {
            let coords = self.ambient.decode(key);
            self.eval_uncached(key, &coords)
        }
    }

    pub fn holds(&self, v: &crate::lexspace::Vector) -> bool {
        self.holds_key(self.ambient.key(v))
    }

    fn eval_uncached(&self, key: usize, coords: &[Elem]) -> bool {
        if key == 0 {
            match self.zero_policy {
                ZeroPolicy::ForceTrue => return true,
                ZeroPolicy::ForceFalse => return false,
                ZeroPolicy::AsIs => {}
            }
        }
        self.expr.eval(&self.ambient, key, coords)
    }

    /// Value at the zero vector.
    pub fn at_zero(&self) -> bool {
        self.holds_key(0)
    }

    /// Exhaustively checks `P[ux] = P[x]` over all units and vectors.
    ///
    /// Scans `x` in key order and units in index order and reports the first
    /// `(u, x)` where `P[x]` holds but `P[ux]` does not. Such a pair exists
    /// whenever the property is not multiplicative: if `P[ux]` holds and
    /// `P[x]` fails, then `(u^-1, ux)` is one.
    pub fn check_left_multiplicative(&self) -> Result<MultiplicativityVerdict, PropertyError> {
        let ring = self.ambient.ring();
        let work = ring.units().len() as u128 * self.ambient.total() as u128;
        if work > VERIFY_CAP {
            return Err(PropertyError::CapExceeded { work, cap: VERIFY_CAP });
        }
        let mut count = 0u64;
        for x in 0..self.ambient.total() {
            if !self.holds_key(x) {
                continue;
            }
            for &u in ring.units() {
                count += 1;
                if !self.holds_key(self.ambient.scale(u, x)) {
                    return Ok(MultiplicativityVerdict {
                        multiplicative: false,
                        counterexample: Some((u, x)),
                        work: count,
                    });
                }
            }
        }
        Ok(MultiplicativityVerdict {
            multiplicative: true,
            counterexample: None,
            work: count,
        })
    }

    /// Runs [`check_left_multiplicative`](Self::check_left_multiplicative)
    /// and records the verdict. On cap overflow the status is unchanged.
    pub fn verify_left_multiplicative(mut self) -> (Self, Result<MultiplicativityVerdict, PropertyError>) {
        let verdict = self.check_left_multiplicative();
        if let Ok(v) = &verdict {
            self.multiplicative = if v.multiplicative {
                Multiplicativity::Verified
            } else {
                Multiplicativity::Refuted
            };
            self.counterexample = v.counterexample;
        }
        (self, verdict)
    }
}

fn policy_name(p: ZeroPolicy) -> &'static str {
    match p {
        ZeroPolicy::AsIs => "asis",
        ZeroPolicy::ForceTrue => "true",
        ZeroPolicy::ForceFalse => "false",
    }
}

fn strip_zero_suffix(s: &str) -> &str {
    match s.rfind(" zero:") {
        Some(i) => s[..i].trim_end(),
        None => s,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FiniteRing;

    fn setup(spec: &str, n: usize) -> (Ambient, IdealLattice) {
        let r = Arc::new(FiniteRing::from_spec(spec).unwrap());
        let l = IdealLattice::new(&r).unwrap();
        (Ambient::new(r, n, crate::lexspace::DEFAULT_CAP).unwrap(), l)
    }

    fn prop(amb: &Ambient, l: &IdealLattice, text: &str) -> Property {
        Property::parse(amb, l, text, &BTreeMap::new(), PropertyOptions::default()).unwrap()
    }

    fn holds(p: &Property, v: &str) -> bool {
        p.holds(&p.ambient().parse_vector(v).unwrap())
    }

    #[test]
    fn lee_threshold() {
        let (a, l) = setup("zmod:4", 3);
        let p = prop(&a, &l, "lee>=2");
        assert!(holds(&p, "011"));
        assert!(!holds(&p, "001"));
        assert_eq!(p.multiplicative(), Multiplicativity::Declared);
    }

    #[test]
    fn selfdot_and_euclid_mod() {
        let (a, l) = setup("zmod:4", 4);
        assert!(holds(&prop(&a, &l, "selfdot==0"), "1111"));
        assert!(!holds(&prop(&a, &l, "selfdot==0"), "1110"));
        let (a5, l5) = setup("zmod:4", 5);
        let p = prop(&a5, &l5, "euclid%8==0");
        assert!(holds(&p, "00022"));
        assert!(!holds(&p, "00002"));
    }

    #[test]
    fn zero_toggle_only_changes_zero() {
        let (a, l) = setup("zmod:4", 3);
        let p = prop(&a, &l, "(lee>=6) zero:true");
        let passing: Vec<usize> = (0..64).filter(|&k| p.holds_key(k)).collect();
        assert_eq!(passing, vec![0, a.key(&a.parse_vector("222").unwrap())]);

        let base = prop(&a, &l, "lee>=2");
        for policy in [ZeroPolicy::ForceTrue, ZeroPolicy::ForceFalse] {
            let toggled = base.with_zero_policy(policy);
            for k in 1..64 {
                assert_eq!(toggled.holds_key(k), base.holds_key(k));
            }
            assert_eq!(toggled.at_zero(), policy == ZeroPolicy::ForceTrue);
        }
    }

    #[test]
    fn non_multiplicative_equality_is_refuted() {
        let (a, l) = setup("zmod:3", 1);
        let p = prop(&a, &l, "eq:2");
        assert_eq!(p.multiplicative(), Multiplicativity::Unknown);
        let (p, verdict) = p.verify_left_multiplicative();
        let verdict = verdict.unwrap();
        assert!(!verdict.multiplicative);
        assert_eq!(verdict.counterexample, Some((2, 2)));
        assert_eq!(p.multiplicative(), Multiplicativity::Refuted);
    }

    #[test]
    fn hamming_is_verified() {
        for spec in ["zmod:12", "mat:2,2", "chain:2,2"] {
            let (a, l) = setup(spec, 2);
            let (p, v) = prop(&a, &l, "hamming>=2").verify_left_multiplicative();
            assert!(v.unwrap().multiplicative, "{spec}");
            assert_eq!(p.multiplicative(), Multiplicativity::Verified);
        }
    }

    #[test]
    fn selfdot_over_matrices_needs_override_and_is_refuted() {
        let (a, l) = setup("mat:2,2", 2);
        assert!(matches!(
            Property::parse(&a, &l, "selfdot==0", &BTreeMap::new(), PropertyOptions::default()),
            Err(PropertyError::SelfDotNoncommutative(_))
        ));
        let p = Property::parse(
            &a,
            &l,
            "selfdot==0",
            &BTreeMap::new(),
            PropertyOptions {
                allow_noncommutative_selfdot: true,
            },
        )
        .unwrap();
        let (_, v) = p.verify_left_multiplicative();
        let v = v.unwrap();
        assert!(!v.multiplicative);
        let (u, x) = v.counterexample.unwrap();
        assert!(a.ring().is_unit(u));
        // independent recheck of the witness: x.x = 0 but (ux).(ux) != 0
        let ux = a.scale(u, x);
        let selfdot = |k: usize| {
            let c = a.decode(k);
            c.iter().fold(0, |acc, &e| a.ring().add(acc, a.ring().mul(e, e)))
        };
        assert_eq!(selfdot(x), 0);
        assert_ne!(selfdot(ux), 0);
    }

    #[test]
    fn lee_over_z5_is_not_declared() {
        let (a, l) = setup("zmod:5", 2);
        let p = prop(&a, &l, "lee>=2");
        assert_eq!(p.multiplicative(), Multiplicativity::Unknown);
        let (_, v) = p.verify_left_multiplicative();
        assert!(!v.unwrap().multiplicative);
    }

    #[test]
    fn combinators_preserve_multiplicativity() {
        let (a, l) = setup("zmod:6", 2);
        let p = prop(&a, &l, "homog>=2");
        let q = prop(&a, &l, "unit<=1").with_zero_policy(ZeroPolicy::ForceFalse);
        for c in [p.and(&q), p.or(&q)] {
            assert_eq!(c.multiplicative(), Multiplicativity::Declared);
            let (c, v) = c.verify_left_multiplicative();
            assert!(v.unwrap().multiplicative);
            assert_eq!(c.multiplicative(), Multiplicativity::Verified);
        }
        // zero policy of an operand is kept inside the combination
        assert!(!q.at_zero());
        assert!(!p.and(&q).at_zero());
        assert!(p.or(&prop(&a, &l, "hamming>=1").with_zero_policy(ZeroPolicy::ForceTrue)).at_zero());
    }

    #[test]
    fn sumin_and_member() {
        let (a, l) = setup("zmod:4", 2);
        let p = prop(&a, &l, "sumin:2");
        assert!(holds(&p, "11"));
        assert!(holds(&p, "13"));
        assert!(!holds(&p, "12"));
        let mut codes = BTreeMap::new();
        codes.insert(
            "C".to_string(),
            NamedCode {
                name: "C".into(),
                members: vec![0, a.key(&a.parse_vector("20").unwrap())],
            },
        );
        let m = Property::parse(&a, &l, "member:C", &codes, PropertyOptions::default()).unwrap();
        assert!(holds(&m, "20"));
        assert!(!holds(&m, "02"));
        assert!(matches!(
            Property::parse(&a, &l, "member:D", &codes, PropertyOptions::default()),
            Err(PropertyError::UnknownCode(_))
        ));
    }
}
