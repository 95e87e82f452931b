//! Principal left ideals, unit orbits and the containment poset.

use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;

use super::{Elem, FiniteRing, RingError};

/// Work cap on the number of distinct left ideals the principality check
/// will enumerate.
pub const LATTICE_WORK_CAP: usize = 10_000;

/// The principal left ideal `Rx` together with its generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipalIdeal {
    /// Least-index generator.
    pub canonical_gen: Elem,
    /// Sorted members of `R * canonical_gen`.
    pub members: Vec<Elem>,
    /// Every `g` with `Rg` equal to this ideal, sorted.
    pub generators: Vec<Elem>,
}

impl PrincipalIdeal {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }
}

/// All principal left ideals of a ring, ordered by `(size, canonical_gen)`.
///
/// Index 0 is always the zero ideal and the last index is `R` itself.
#[derive(Debug, Clone)]
pub struct IdealLattice {
    ideals: Vec<PrincipalIdeal>,
    /// `ideal_of[x]` is the index of `Rx`.
    ideal_of: Vec<usize>,
    /// `strict[i][j]` iff ideal `i` strictly contains ideal `j`.
    strict: Vec<Vec<bool>>,
    gamma: Vec<Elem>,
    is_plir: bool,
    non_principal_witness: Option<Vec<Elem>>,
}

fn left_ideal_of(ring: &FiniteRing, a: Elem) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(ring.size());
    for r in ring.elements() {
        set.insert(ring.mul(r, a));
    }
    set
}

fn sum_of(ring: &FiniteRing, a: &FixedBitSet, b: &FixedBitSet) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(ring.size());
    for x in a.ones() {
        for y in b.ones() {
            set.insert(ring.add(x, y));
        }
    }
    set
}

impl IdealLattice {
    /// Computes every principal left ideal and decides whether the ring is a
    /// principal left ideal ring.
    ///
    /// Every left ideal is a finite sum of principal ones, so closing the
    /// principal ideals under pairwise sums yields all left ideals.
    pub fn new(ring: &FiniteRing) -> Result<Self, RingError> {
        let sets: Vec<FixedBitSet> = ring.elements().map(|a| left_ideal_of(ring, a)).collect();

        let mut distinct: HashMap<&FixedBitSet, Vec<Elem>> = HashMap::new();
        for (a, set) in sets.iter().enumerate() {
            distinct.entry(set).or_default().push(a);
        }
        let mut ideals: Vec<PrincipalIdeal> = distinct
            .into_iter()
            .map(|(set, generators)| PrincipalIdeal {
                canonical_gen: generators[0],
                members: set.ones().collect(),
                generators,
            })
            .collect();
        ideals.sort_by_key(|i| (i.size(), i.canonical_gen));

        let mut ideal_of = vec![0; ring.size()];
        for (idx, ideal) in ideals.iter().enumerate() {
            for &g in &ideal.generators {
                ideal_of[g] = idx;
            }
        }

        let member_sets: Vec<FixedBitSet> = ideals.iter().map(|i| sets[i.canonical_gen].clone()).collect();
        let strict = member_sets
            .iter()
            .map(|big| {
                member_sets
                    .iter()
                    .map(|small| small != big && small.is_subset(big))
                    .collect()
            })
            .collect();

        let gamma = ideals.iter().skip(1).map(|i| i.canonical_gen).collect();

        let (is_plir, non_principal_witness) = check_principal(ring, &member_sets)?;

        Ok(IdealLattice {
            ideals,
            ideal_of,
            strict,
            gamma,
            is_plir,
            non_principal_witness,
        })
    }

    /// Replaces the default generator set. `gamma` must hold exactly one
    /// generator of every nonzero principal left ideal.
    pub fn with_gamma(mut self, gamma: Vec<Elem>) -> Result<Self, RingError> {
        self.validate_gamma(&gamma)?;
        self.gamma = gamma;
        Ok(self)
    }

    pub fn validate_gamma(&self, gamma: &[Elem]) -> Result<(), RingError> {
        let mut seen = HashSet::new();
        for &g in gamma {
            let idx = *self
                .ideal_of
                .get(g)
                .ok_or_else(|| RingError::InvalidGamma(format!("element {g} out of range")))?;
            if idx == 0 {
                return Err(RingError::InvalidGamma("0 generates the zero ideal".into()));
            }
            if !seen.insert(idx) {
                return Err(RingError::InvalidGamma(format!(
                    "two generators for ideal #{idx}"
                )));
            }
        }
        if seen.len() != self.ideals.len() - 1 {
            return Err(RingError::InvalidGamma(format!(
                "{} generators given, {} nonzero ideals",
                seen.len(),
                self.ideals.len() - 1
            )));
        }
        Ok(())
    }

    /// The largest-index generator of each nonzero ideal; a second valid
    /// generator set distinct from the default whenever some orbit has
    /// more than one element.
    pub fn alternate_gamma(&self) -> Vec<Elem> {
        self.ideals
            .iter()
            .skip(1)
            .map(|i| *i.generators.last().expect("nonempty orbit"))
            .collect()
    }

    pub fn ideals(&self) -> &[PrincipalIdeal] {
        &self.ideals
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    /// Index of the ideal `Rx`.
    pub fn ideal_of(&self, x: Elem) -> usize {
        self.ideal_of[x]
    }

    /// Whether ideal `i` strictly contains ideal `j`.
    pub fn strictly_contains(&self, i: usize, j: usize) -> bool {
        self.strict[i][j]
    }

    pub fn gamma(&self) -> &[Elem] {
        &self.gamma
    }

    pub fn is_plir(&self) -> bool {
        self.is_plir
    }

    pub fn non_principal_witness(&self) -> Option<&[Elem]> {
        self.non_principal_witness.as_deref()
    }

    /// Covering pairs `(lower, upper)` of the containment order.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut edges = Vec::new();
        for upper in 0..n {
            for lower in 0..n {
                if self.strict[upper][lower]
                    && !(0..n).any(|mid| self.strict[upper][mid] && self.strict[mid][lower])
                {
                    edges.push((lower, upper));
                }
            }
        }
        edges
    }

    /// Möbius function `mu(0, I)` of the ideal poset for every ideal `I`.
    pub fn mobius_from_zero(&self) -> Vec<i64> {
        let mut mu = vec![0i64; self.len()];
        for i in 0..self.len() {
            mu[i] = if i == 0 {
                1
            } else {
                -(0..i).filter(|&j| self.strict[i][j]).map(|j| mu[j]).sum::<i64>()
            };
        }
        mu
    }
}

fn check_principal(
    ring: &FiniteRing,
    principal: &[FixedBitSet],
) -> Result<(bool, Option<Vec<Elem>>), RingError> {
    let mut all: Vec<FixedBitSet> = principal.to_vec();
    let mut seen: HashSet<FixedBitSet> = all.iter().cloned().collect();
    let mut i = 0;
    while i < all.len() {
        for j in 0..i {
            let s = sum_of(ring, &all[i], &all[j]);
            if seen.insert(s.clone()) {
                if all.len() >= LATTICE_WORK_CAP {
                    return Err(RingError::LatticeTooLarge(LATTICE_WORK_CAP));
                }
                all.push(s);
            }
        }
        i += 1;
    }
    let witness = all[principal.len()..]
        .iter()
        .min_by_key(|s| (s.count_ones(..), s.ones().collect::<Vec<_>>()))
        .map(|s| s.ones().collect());
    Ok((witness.is_none(), witness))
}

/// Finds `t` and a unit `u` with `t*p + q = u*d`, given `Rp + Rq = Rd`.
///
/// Scans `t` in index order and, for each `t`, the units in index order;
/// the first hit is returned.
pub fn solve_unit_combination(
    ring: &FiniteRing,
    p: Elem,
    q: Elem,
    d: Elem,
) -> Result<(Elem, Elem), RingError> {
    let names = || (ring.name(p).to_string(), ring.name(q).to_string(), ring.name(d).to_string());
    let rp = left_ideal_of(ring, p);
    let rq = left_ideal_of(ring, q);
    if sum_of(ring, &rp, &rq) != left_ideal_of(ring, d) {
        let (p, q, d) = names();
        return Err(RingError::NotASum { p, q, d });
    }
    for t in ring.elements() {
        let lhs = ring.add(ring.mul(t, p), q);
        if let Some(&u) = ring.units().iter().find(|&&u| ring.mul(u, d) == lhs) {
            return Ok((t, u));
        }
    }
    let (p, q, d) = names();
    Err(RingError::NoUnitCombination { p, q, d })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lattice(spec: &str) -> (FiniteRing, IdealLattice) {
        let r = FiniteRing::from_spec(spec).unwrap();
        let l = IdealLattice::new(&r).unwrap();
        (r, l)
    }

    #[test]
    fn z12_ideals_and_orbits() {
        let (_, l) = lattice("zmod:12");
        let gens: Vec<_> = l.ideals().iter().map(|i| i.canonical_gen).collect();
        assert_eq!(gens, [0, 6, 4, 3, 2, 1]);
        let orbits: Vec<_> = l.ideals().iter().map(|i| i.generators.clone()).collect();
        assert_eq!(
            orbits,
            vec![vec![0], vec![6], vec![4, 8], vec![3, 9], vec![2, 10], vec![1, 5, 7, 11]]
        );
        assert!(l.is_plir());
        // diamond-shaped Hasse diagram: (0)-(6), (0)-(4), (6)-(3), (6)-(2), (4)-(2), (3)-(1), (2)-(1)
        let mut edges = l.hasse_edges();
        edges.sort();
        assert_eq!(edges, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 4), (3, 5), (4, 5)]);
    }

    #[test]
    fn m2f2_has_three_minimal_left_ideals() {
        let (_, l) = lattice("mat:2,2");
        let sizes: Vec<_> = l.ideals().iter().map(|i| i.size()).collect();
        assert_eq!(sizes, [1, 4, 4, 4, 16]);
        assert!(l.is_plir());
        assert_eq!(l.gamma().len(), 4);
        for mid in 1..4 {
            assert_eq!(l.ideals()[mid].generators.len(), 3);
        }
    }

    #[test]
    fn z4_is_a_chain() {
        let (_, l) = lattice("zmod:4");
        assert_eq!(l.gamma(), &[2, 1]);
        assert!(l.strictly_contains(2, 1) && l.strictly_contains(1, 0));
        assert_eq!(l.hasse_edges(), [(0, 1), (1, 2)]);
    }

    #[test]
    fn explicit_gamma_is_validated() {
        let (_, l) = lattice("zmod:12");
        assert!(l.clone().with_gamma(vec![6, 8, 9, 10, 11]).is_ok());
        assert!(l.clone().with_gamma(vec![6, 8, 9, 10]).is_err());
        assert!(l.clone().with_gamma(vec![6, 8, 4, 10, 11]).is_err());
        assert!(l.clone().with_gamma(vec![0, 6, 8, 9, 10, 11]).is_err());
        assert_eq!(l.alternate_gamma(), vec![6, 8, 9, 10, 11]);
    }

    #[test]
    fn mobius_on_z12() {
        let (_, l) = lattice("zmod:12");
        // ideals (0),(6),(4),(3),(2),(1)
        assert_eq!(l.mobius_from_zero(), vec![1, -1, -1, 0, 1, 0]);
    }

    #[test]
    fn non_principal_sums_are_detected() {
        // F2[x,y]/(x^2, xy, y^2): the maximal ideal (x, y) is not principal.
        let names: Vec<String> = ["0", "x", "y", "x+y", "1", "1+x", "1+y", "1+x+y"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        // element index bits: bit0 = x, bit1 = y, bit2 = 1
        let add = (0..64).map(|i| (i / 8) ^ (i % 8)).collect();
        let mul = (0..64)
            .map(|i| {
                let (a, b) = (i / 8, i % 8);
                let (a1, b1) = (a >> 2 & 1, b >> 2 & 1);
                let lin = |v: usize| v & 3;
                (a1 & b1) << 2 | (if a1 == 1 { lin(b) } else { 0 } ^ if b1 == 1 { lin(a) } else { 0 })
            })
            .collect();
        let ring = FiniteRing::from_tables(
            "local:8".into(),
            super::super::RingFamily::Zmod { m: 0 },
            add,
            mul,
            4,
            names,
            &[],
        );
        ring.check_axioms().unwrap();
        let l = IdealLattice::new(&ring).unwrap();
        assert!(!l.is_plir());
        assert_eq!(l.non_principal_witness().unwrap(), &[0, 1, 2, 3]);
    }

    #[test]
    fn unit_combination_examples() {
        let z4 = FiniteRing::from_spec("zmod:4").unwrap();
        assert_eq!(solve_unit_combination(&z4, 2, 1, 1).unwrap(), (0, 1));
        // first hit in t order is t = 1, u = 3; t = 3, u = 1 is the other solution
        assert_eq!(solve_unit_combination(&z4, 1, 2, 1).unwrap(), (1, 3));
        let z6 = FiniteRing::from_spec("zmod:6").unwrap();
        assert_eq!(solve_unit_combination(&z6, 2, 3, 1).unwrap(), (1, 5));
        assert!(matches!(
            solve_unit_combination(&z4, 2, 2, 1),
            Err(RingError::NotASum { .. })
        ));
    }

    #[test]
    fn unit_combination_brute_force_oracle() {
        for spec in ["zmod:4", "zmod:6", "zmod:12", "mat:2,2", "chain:2,3"] {
            let r = FiniteRing::from_spec(spec).unwrap();
            for p in r.elements() {
                for q in r.elements() {
                    let span = sum_of(&r, &left_ideal_of(&r, p), &left_ideal_of(&r, q));
                    let d = (0..r.size()).find(|&d| left_ideal_of(&r, d) == span).unwrap();
                    let (t, u) = solve_unit_combination(&r, p, q, d).unwrap();
                    assert!(r.is_unit(u));
                    assert_eq!(r.add(r.mul(t, p), q), r.mul(u, d));
                    // first hit in (t, u) scan order
                    let brute = r
                        .elements()
                        .flat_map(|t| r.units().iter().map(move |&u| (t, u)))
                        .find(|&(t, u)| r.add(r.mul(t, p), q) == r.mul(u, d));
                    assert_eq!(brute, Some((t, u)));
                }
            }
        }
    }
}
