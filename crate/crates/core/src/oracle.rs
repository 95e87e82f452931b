//! Brute-force checks of the guarantees of the greedy construction.
//!
//! Every check enumerates directly and never reuses the construction's own
//! shortcuts (level iterators, generator reduction), so a `holds` verdict is
//! independent evidence.

use std::cmp::Ordering;

use num_rational::Rational64;
use num_traits::Zero;
use serde::Serialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::greedy::{self, Code, GreedyError, Lexicode, RunOptions};
use crate::lexspace::{Ambient, LexSpace, OrderedBasis, SpaceError};
use crate::order::{canonical_extension, make_respectful, OrderError, RingOrder, WithinOrbit};
use crate::props::{Property, WeightFunction};
use crate::ring::{Elem, FiniteRing, IdealLattice};

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("code is not free")]
    NotFree,
    #[error("homogeneous weight system is inconsistent at ideal {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Greedy(#[from] GreedyError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Space(#[from] SpaceError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Violated,
    NotApplicable,
}

/// A counterexample, in display form plus raw indices for rechecking.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub description: String,
    /// Vector key of the offending vector, if any.
    pub vector: Option<usize>,
    /// Ring element involved, if any.
    pub scalar: Option<Elem>,
    /// Codeword involved, if any.
    pub codeword: Option<usize>,
    /// Level of the vector, if relevant.
    pub level: Option<usize>,
}

impl Witness {
    fn vector(amb: &Ambient, key: usize) -> Self {
        Witness {
            description: amb.format_key(key),
            vector: Some(key),
            scalar: None,
            codeword: None,
            level: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub inputs_digest: String,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub work: u64,
}

impl TheoremReport {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

/// Short SHA-256 digest of the textual inputs.
pub fn digest(parts: &[&str]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update(p.as_bytes());
        h.update([0u8]);
    }
    h.finalize()[..8].iter().map(|b| format!("{b:02x}")).collect()
}

fn code_digest(theorem: &str, code: &Code, p: Option<&Property>) -> String {
    let amb = code.ambient();
    let members: Vec<String> = code.members().iter().map(|m| m.to_string()).collect();
    digest(&[
        theorem,
        amb.ring().spec(),
        &amb.n().to_string(),
        &members.join(","),
        p.map_or("", |p| p.descriptor()),
    ])
}

fn lexicode_digest(theorem: &str, l: &Lexicode) -> String {
    let p = l.provenance();
    digest(&[
        theorem,
        &p.ring,
        &p.n.to_string(),
        &p.order,
        &p.basis,
        &p.property,
        &p.gamma.join(","),
    ])
}

fn report(theorem: &str, inputs_digest: String, witness: Option<Witness>, work: u64) -> TheoremReport {
    TheoremReport {
        theorem: theorem.to_string(),
        inputs_digest,
        verdict: if witness.is_some() {
            Verdict::Violated
        } else {
            Verdict::Holds
        },
        witness,
        work,
    }
}

fn not_applicable(theorem: &str, inputs_digest: String) -> TheoremReport {
    TheoremReport {
        theorem: theorem.to_string(),
        inputs_digest,
        verdict: Verdict::NotApplicable,
        witness: None,
        work: 0,
    }
}

/// Whether `P[r x + c]` holds for every nonzero `r` and every member `c`.
/// Returns the first failing `(r, c)`.
fn first_failure_all_scalars(amb: &Ambient, p: &Property, code: &Code, x: usize, work: &mut u64) -> Option<(Elem, usize)> {
    for r in amb.ring().elements().skip(1) {
        let rx = amb.scale(r, x);
        for &c in code.members() {
            *work += 1;
            if !p.holds_key(amb.add(rx, c)) {
                return Some((r, c));
            }
        }
    }
    None
}

/// Every nonzero codeword of every stage satisfies `P`.
pub fn check_codewords(l: &Lexicode, p: &Property) -> TheoremReport {
    let amb = l.space().ambient();
    let mut work = 0;
    for stage in l.stages() {
        for &c in stage.members() {
            work += 1;
            if c != 0 && !p.holds_key(c) {
                return report("codewords-satisfy-property", lexicode_digest("codewords", l), Some(Witness::vector(amb, c)), work);
            }
        }
    }
    report("codewords-satisfy-property", lexicode_digest("codewords", l), None, work)
}

/// No vector outside `C_i` in level `i` passes the selection test against
/// `C_i`. Levels are rebuilt by classifying every vector and sorting with
/// the comparator.
pub fn check_exhaustive(l: &Lexicode, p: &Property) -> TheoremReport {
    let space = l.space();
    let amb = space.ambient();
    let n = amb.n();
    let mut levels: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for key in 0..amb.total() {
        levels[space.level_of_key(key)].push(key);
    }
    let mut work = 0;
    for (i, level) in levels.iter_mut().enumerate().skip(1) {
        level.sort_by(|&a, &b| space.compare_keys(a, b));
        let ci = &l.stages()[i];
        for &x in level.iter() {
            work += 1;
            if ci.contains(x) {
                continue;
            }
            if greedy::passes(amb, p, l.gamma(), ci, x) {
                let mut w = Witness::vector(amb, x);
                w.level = Some(i);
                w.description = format!("{} at level {i} passes but is not in C_{i}", amb.format_key(x));
                return report("exhaustive", lexicode_digest("exhaustive", l), Some(w), work);
            }
        }
    }
    report("exhaustive", lexicode_digest("exhaustive", l), None, work)
}

/// With `P[0]` true, no `x` outside `C` has `P[rx + c]` for all nonzero `r`
/// and all `c` in `C`.
pub fn check_maximal(code: &Code, p: &Property) -> TheoremReport {
    let d = code_digest("maximal", code, Some(p));
    if !p.at_zero() {
        return not_applicable("maximal", d);
    }
    let amb = code.ambient();
    let mut work = 0;
    for x in 0..amb.total() {
        if code.contains(x) {
            continue;
        }
        if first_failure_all_scalars(amb, p, code, x, &mut work).is_none() {
            let mut w = Witness::vector(amb, x);
            w.description = format!("C + R{} still satisfies the property", amb.format_key(x));
            return report("maximal", d, Some(w), work);
        }
    }
    report("maximal", d, None, work)
}

/// With `P[0]` false and `C` free, no `x` outside `C` extends a basis of `C`
/// to a free family whose span still satisfies `P`.
pub fn check_maximal_free(code: &Code, p: &Property) -> Result<TheoremReport, OracleError> {
    let d = code_digest("maximal-free", code, Some(p));
    if p.at_zero() {
        return Ok(not_applicable("maximal-free", d));
    }
    let amb = code.ambient();
    let basis = greedy::is_free(code).ok_or(OracleError::NotFree)?;
    let size = amb.ring().size();
    let mut work = 0;
    for x in 0..amb.total() {
        if code.contains(x) {
            continue;
        }
        if first_failure_all_scalars(amb, p, code, x, &mut work).is_some() {
            continue;
        }
        let mut family = basis.clone();
        family.push(x);
        let span = Code::from_generators(amb, &family);
        if span.len() == code.len() * size {
            let mut w = Witness::vector(amb, x);
            w.description = format!("basis of C plus {} is free and satisfies the property", amb.format_key(x));
            return Ok(report("maximal-free", d, Some(w), work));
        }
    }
    Ok(report("maximal-free", d, None, work))
}

/// Compares `P[gx + c]` over `g` in `gamma` with `P[rx + c]` over all
/// nonzero `r`, for `c` in `C`, by full enumeration of both sides.
pub fn check_gamma_sufficiency(code: &Code, p: &Property, x: usize, gamma: &[Elem]) -> TheoremReport {
    let amb = code.ambient();
    let g: Vec<String> = gamma.iter().map(|&e| amb.ring().name(e).to_string()).collect();
    let d = digest(&[
        "gamma-sufficiency",
        &code_digest("", code, Some(p)),
        &x.to_string(),
        &g.join(","),
    ]);
    let mut work = 0;
    let mut left = true;
    'outer: for &gm in gamma {
        for &c in code.members() {
            work += 1;
            if !p.holds_key(amb.add(amb.scale(gm, x), c)) {
                left = false;
                break 'outer;
            }
        }
    }
    let right_failure = first_failure_all_scalars(amb, p, code, x, &mut work);
    let witness = match (left, right_failure) {
        (true, Some((r, c))) => Some(Witness {
            description: format!(
                "gamma side holds but P[{} * {} + {}] is false",
                amb.ring().name(r),
                amb.format_key(x),
                amb.format_key(c)
            ),
            vector: Some(x),
            scalar: Some(r),
            codeword: Some(c),
            level: None,
        }),
        (false, None) => Some(Witness {
            description: format!("all-scalar side holds but the gamma side fails for {}", amb.format_key(x)),
            vector: Some(x),
            scalar: None,
            codeword: None,
            level: None,
        }),
        _ => None,
    };
    report("gamma-sufficiency", d, witness, work)
}

/// Runs the construction with the lattice's generator set and with the
/// alternate one and compares the member sets.
pub fn check_gamma_invariance(
    space: &LexSpace,
    lattice: &IdealLattice,
    p: &Property,
    options: RunOptions,
) -> Result<TheoremReport, OracleError> {
    let a = greedy::run_lexicode(space, lattice, p, Some(lattice.gamma()), options)?;
    let alt = lattice.alternate_gamma();
    let b = greedy::run_lexicode(space, lattice, p, Some(&alt), options)?;
    let d = lexicode_digest("gamma-invariance", &a);
    let amb = space.ambient();
    let work = (a.code().len() + b.code().len()) as u64;
    let diff = a
        .code()
        .members()
        .iter()
        .find(|&&m| !b.code().contains(m))
        .or_else(|| b.code().members().iter().find(|&&m| !a.code().contains(m)));
    Ok(report("gamma-invariance", d, diff.map(|&m| Witness::vector(amb, m)), work))
}

/// With `P[0]` false: the selected vectors are a free basis of the code.
/// Enumerates all `R`-combinations of the selected vectors and checks that
/// they hit every codeword exactly once.
pub fn check_free_basis(l: &Lexicode, p: &Property) -> TheoremReport {
    let d = lexicode_digest("free-basis", l);
    if p.at_zero() {
        return not_applicable("free-basis", d);
    }
    let amb = l.space().ambient();
    let code = l.code();
    let sel = l.selected_keys();
    let size = amb.ring().size();
    let expected = size.checked_pow(sel.len() as u32);
    if expected != Some(code.len()) {
        let w = Witness {
            description: format!("|C| = {} but {} vectors were selected", code.len(), sel.len()),
            vector: None,
            scalar: None,
            codeword: None,
            level: None,
        };
        return report("free-basis", d, Some(w), 0);
    }
    let mut hit = fixedbitset::FixedBitSet::with_capacity(amb.total());
    let mut coeffs = vec![0usize; sel.len()];
    let mut work = 0;
    loop {
        let v = coeffs
            .iter()
            .zip(&sel)
            .fold(0, |acc, (&r, &a)| amb.add(acc, amb.scale(r, a)));
        work += 1;
        if hit.put(v) || !code.contains(v) {
            let w = Witness::vector(amb, v);
            return report("free-basis", d, Some(w), work);
        }
        // odometer over R^k
        let mut i = 0;
        while i < coeffs.len() {
            coeffs[i] += 1;
            if coeffs[i] < size {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
        if i == coeffs.len() {
            break;
        }
    }
    report("free-basis", d, None, work)
}

/// Solves the homogeneous weight axioms directly and compares with `w`.
///
/// Ideals are processed by increasing size. In `Ra` every element outside
/// the generator orbit lies in a strictly smaller ideal, so the sum axiom
/// determines the orbit's value from already known ones.
pub fn check_homogeneous_unique(
    ring: &FiniteRing,
    lattice: &IdealLattice,
    w: &WeightFunction,
) -> Result<TheoremReport, OracleError> {
    let d = digest(&["homogeneous-unique", ring.spec()]);
    let mut solved: Vec<Option<Rational64>> = vec![None; ring.size()];
    solved[0] = Some(Rational64::zero());
    let mut order: Vec<usize> = (0..lattice.len()).collect();
    order.sort_by_key(|&i| lattice.ideals()[i].size());
    let mut work = 0;
    for i in order {
        let ideal = &lattice.ideals()[i];
        if ideal.is_zero() {
            continue;
        }
        let mut known = Rational64::zero();
        for &x in &ideal.members {
            work += 1;
            if ideal.generators.contains(&x) {
                continue;
            }
            known += solved[x].ok_or_else(|| OracleError::Inconsistent(ring.name(ideal.canonical_gen).to_string()))?;
        }
        let value = (Rational64::from_integer(ideal.size() as i64) - known) / Rational64::from_integer(ideal.generators.len() as i64);
        for &g in &ideal.generators {
            solved[g] = Some(value);
        }
    }
    let witness = ring.elements().find(|&x| solved[x] != Some(w.value(x))).map(|x| Witness {
        description: format!(
            "w({}) = {}, solved value {}",
            ring.name(x),
            w.value(x),
            solved[x].map_or("none".to_string(), |v| v.to_string())
        ),
        vector: None,
        scalar: Some(x),
        codeword: None,
        level: None,
    });
    Ok(report("homogeneous-unique", d, witness, work))
}

/// Result of embedding a free code into a lexicode.
#[derive(Debug, Clone)]
pub struct Embedding {
    pub order: RingOrder,
    pub basis: OrderedBasis,
    pub lexicode: Lexicode,
    pub report: TheoremReport,
}

/// Embeds a free code whose nonzero words satisfy `P` into a lexicode: the
/// order starts `0 < 1`, the basis starts with a basis of `C`, and the run
/// must select exactly that basis first.
pub fn embed_as_lexicode(code: &Code, lattice: &IdealLattice, p: &Property) -> Result<Embedding, OracleError> {
    let amb = code.ambient();
    let ring = amb.ring();
    let free = greedy::is_free(code).ok_or(OracleError::NotFree)?;
    let order = make_respectful(ring, lattice, &canonical_extension(lattice), &WithinOrbit::OneFirst, true)?;
    let partial: Vec<_> = free.iter().map(|&k| amb.vector(k)).collect();
    let basis = OrderedBasis::complete(amb, &partial)?;
    let space = LexSpace::new(amb.clone(), order.clone(), basis.clone());
    let lexicode = greedy::run_lexicode(&space, lattice, p, None, RunOptions::default())?;
    let d = code_digest("embedding", code, Some(p));
    let work = lexicode.candidates_scanned();
    let selected = lexicode.selected_keys();
    let witness = if selected.len() < free.len() || selected[..free.len()] != free[..] {
        Some(Witness {
            description: "the run did not select the basis of C first".to_string(),
            vector: selected.iter().zip(&free).find(|(a, b)| a != b).map(|(&a, _)| a),
            scalar: None,
            codeword: None,
            level: None,
        })
    } else {
        code.members()
            .iter()
            .find(|&&m| !lexicode.code().contains(m))
            .map(|&m| Witness::vector(amb, m))
    };
    let report = report("embedding", d, witness, work);
    Ok(Embedding {
        order,
        basis,
        lexicode,
        report,
    })
}

/// Checks that `compare_keys` is a strict total order consistent with
/// the level stream order; used by tests on small spaces.
pub fn comparator_is_total(space: &LexSpace) -> bool {
    let total = space.ambient().total();
    (0..total).all(|a| {
        (0..total).all(|b| {
            let ab = space.compare_keys(a, b);
            ab == space.compare_keys(b, a).reverse() && ((ab == Ordering::Equal) == (a == b))
        })
    })
}
