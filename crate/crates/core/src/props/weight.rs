//! Weight functions on ring elements, extended additively to vectors.

use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::Serialize;

use super::PropertyError;
use crate::ring::{Elem, FiniteRing, IdealLattice, RingFamily};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WeightKind {
    Hamming,
    Lee,
    Euclid,
    Unit,
    RankSum,
    Homog,
}

impl WeightKind {
    pub fn parse(name: &str) -> Option<Self> {
        Some(match name {
            "hamming" => WeightKind::Hamming,
            "lee" => WeightKind::Lee,
            "euclid" => WeightKind::Euclid,
            "unit" => WeightKind::Unit,
            "ranksum" => WeightKind::RankSum,
            "homog" => WeightKind::Homog,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            WeightKind::Hamming => "hamming",
            WeightKind::Lee => "lee",
            WeightKind::Euclid => "euclid",
            WeightKind::Unit => "unit",
            WeightKind::RankSum => "ranksum",
            WeightKind::Homog => "homog",
        }
    }
}

impl fmt::Display for WeightKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exact weight of every ring element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightFunction {
    kind: WeightKind,
    values: Vec<Rational64>,
}

impl WeightFunction {
    pub fn new(ring: &FiniteRing, lattice: &IdealLattice, kind: WeightKind) -> Result<Self, PropertyError> {
        let incompatible = |family: &str| PropertyError::IncompatibleWeight {
            weight: kind.name().to_string(),
            ring: ring.spec().to_string(),
            needs: family.to_string(),
        };
        let int = |v: i64| Rational64::from_integer(v);
        let values: Vec<Rational64> = match kind {
            WeightKind::Hamming => ring.elements().map(|x| int((x != 0) as i64)).collect(),
            WeightKind::Unit => ring.elements().map(|x| int(ring.is_unit(x) as i64)).collect(),
            WeightKind::Lee | WeightKind::Euclid => {
                let RingFamily::Zmod { m } = *ring.family() else {
                    return Err(incompatible("zmod"));
                };
                ring.elements()
                    .map(|x| {
                        let lee = x.min(m - x) as i64;
                        int(if kind == WeightKind::Lee { lee } else { lee * lee })
                    })
                    .collect()
            }
            WeightKind::RankSum => {
                let RingFamily::Matrix { k, q } = *ring.family() else {
                    return Err(incompatible("mat"));
                };
                let field = FiniteRing::from_spec(&format!("gf:{q}")).expect("base field of a valid matrix ring");
                ring.elements()
                    .map(|x| int(matrix_rank(&field, crate::ring::matrix_entries(x, k, q), k) as i64))
                    .collect()
            }
            WeightKind::Homog => homogeneous_values(lattice, ring.size()),
        };
        let w = WeightFunction { kind, values };
        if kind == WeightKind::Homog {
            w.check_homogeneous_axioms(ring, lattice)?;
        }
        Ok(w)
    }

    pub fn kind(&self) -> WeightKind {
        self.kind
    }

    pub fn values(&self) -> &[Rational64] {
        &self.values
    }

    #[inline]
    pub fn value(&self, x: Elem) -> Rational64 {
        self.values[x]
    }

    /// Sum of the coordinate weights.
    pub fn vector_weight(&self, coords: &[Elem]) -> Rational64 {
        coords.iter().map(|&c| self.values[c]).sum()
    }

    /// Checks `w(0) = 0`, constancy on unit orbits, and `sum_{x in Ra} w(x) = |Ra|`
    /// for every nonzero `a`, in exact arithmetic. Returns the first failing axiom.
    pub fn check_homogeneous_axioms(&self, ring: &FiniteRing, lattice: &IdealLattice) -> Result<(), PropertyError> {
        let fail = |msg: String| Err(PropertyError::HomogeneousAxiom(msg));
        if !self.values[0].is_zero() {
            return fail(format!("w(0) = {}", self.values[0]));
        }
        for ideal in lattice.ideals() {
            let first = self.values[ideal.generators[0]];
            if let Some(&g) = ideal.generators.iter().find(|&&g| self.values[g] != first) {
                return fail(format!(
                    "not constant on the orbit of {}: w({}) = {first}, w({}) = {}",
                    ring.name(ideal.canonical_gen),
                    ring.name(ideal.generators[0]),
                    ring.name(g),
                    self.values[g]
                ));
            }
            if ideal.is_zero() {
                continue;
            }
            let sum: Rational64 = ideal.members.iter().map(|&x| self.values[x]).sum();
            if sum != Rational64::from_integer(ideal.size() as i64) {
                return fail(format!(
                    "sum over R{} is {sum}, expected {}",
                    ring.name(ideal.canonical_gen),
                    ideal.size()
                ));
            }
        }
        Ok(())
    }
}

/// `w(x) = 1 - mu(0, Rx) / |generators of Rx|`.
fn homogeneous_values(lattice: &IdealLattice, size: usize) -> Vec<Rational64> {
    let mu = lattice.mobius_from_zero();
    let mut values = vec![Rational64::zero(); size];
    for (idx, ideal) in lattice.ideals().iter().enumerate() {
        let w = Rational64::one() - Rational64::new(mu[idx], ideal.generators.len() as i64);
        for &g in &ideal.generators {
            values[g] = w;
        }
    }
    values
}

/// Rank of a `k x k` matrix over `field`, by row reduction.
fn matrix_rank(field: &FiniteRing, mut m: Vec<Elem>, k: usize) -> usize {
    let mut rank = 0;
    for col in 0..k {
        let Some(pivot) = (rank..k).find(|&r| m[r * k + col] != 0) else {
            continue;
        };
        for c in 0..k {
            m.swap(rank * k + c, pivot * k + c);
        }
        let inv = field.inverse(m[rank * k + col]).expect("nonzero field element");
        for c in 0..k {
            m[rank * k + c] = field.mul(inv, m[rank * k + c]);
        }
        for r in 0..k {
            if r != rank && m[r * k + col] != 0 {
                let f = m[r * k + col];
                for c in 0..k {
                    m[r * k + c] = field.sub(m[r * k + c], field.mul(f, m[rank * k + c]));
                }
            }
        }
        rank += 1;
    }
    rank
}
