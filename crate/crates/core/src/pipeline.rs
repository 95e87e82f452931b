//! End-to-end runs from textual descriptors, and their reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::greedy::{self, Code, GreedyError, Lexicode, Provenance, RunOptions};
use crate::lexspace::{Ambient, LexSpace, OrderedBasis, SpaceError, DEFAULT_CAP};
use crate::oracle::{self, OracleError, TheoremReport, Verdict};
use crate::order::{OrderError, OrderSpec, RingOrder};
use crate::props::{Multiplicativity, MultiplicativityVerdict, NamedCode, Property, PropertyError, PropertyOptions, WeightFunction, WeightKind};
use crate::ring::{Elem, FiniteRing, IdealLattice, RingError};

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Property(#[from] PropertyError),
    #[error("malformed code definition `{0}`, expected NAME=v1,v2,...")]
    BadCode(String),
    #[error("unknown oracle `{0}`")]
    UnknownOracle(String),
    #[error("the ring is not a principal left ideal ring")]
    NotPlir,
    #[error(transparent)]
    Gate(GreedyError),
    #[error(transparent)]
    Run(GreedyError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

impl PipelineError {
    /// 3 for a failed precondition gate, 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            PipelineError::Gate(_) => 3,
            _ => 2,
        }
    }
}

impl From<GreedyError> for PipelineError {
    fn from(e: GreedyError) -> Self {
        match e {
            GreedyError::Unrespectful(..) | GreedyError::NotMultiplicative(_) => PipelineError::Gate(e),
            other => PipelineError::Run(other),
        }
    }
}

/// The oracle checks a run can attach.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum OracleKind {
    Codewords,
    Exhaustive,
    Maximal,
    MaximalFree,
    FreeBasis,
    GammaInvariance,
    Homogeneous,
    Embedding,
}

impl OracleKind {
    pub const ALL: [OracleKind; 8] = [
        OracleKind::Codewords,
        OracleKind::Exhaustive,
        OracleKind::Maximal,
        OracleKind::MaximalFree,
        OracleKind::FreeBasis,
        OracleKind::GammaInvariance,
        OracleKind::Homogeneous,
        OracleKind::Embedding,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OracleKind::Codewords => "codewords",
            OracleKind::Exhaustive => "exhaustive",
            OracleKind::Maximal => "maximal",
            OracleKind::MaximalFree => "maximal-free",
            OracleKind::FreeBasis => "free-basis",
            OracleKind::GammaInvariance => "gamma-invariance",
            OracleKind::Homogeneous => "homogeneous",
            OracleKind::Embedding => "embedding",
        }
    }

    /// Parses `all` or a comma-separated list of oracle names.
    pub fn parse_list(text: &str) -> Result<Vec<OracleKind>, PipelineError> {
        if text.trim() == "all" {
            return Ok(Self::ALL.to_vec());
        }
        let mut out = Vec::new();
        for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let kind = Self::ALL
                .into_iter()
                .find(|k| k.name() == part)
                .ok_or_else(|| PipelineError::UnknownOracle(part.to_string()))?;
            if !out.contains(&kind) {
                out.push(kind);
            }
        }
        out.sort();
        Ok(out)
    }
}

/// Everything needed to run the construction once.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub ring: String,
    pub n: usize,
    pub order: String,
    pub basis: String,
    pub property: String,
    pub gamma: Option<String>,
    /// Named codes for `member:` atoms, as `(name, generator list)`.
    pub codes: Vec<(String, String)>,
    pub oracles: Vec<OracleKind>,
    pub allow_unrespectful: bool,
    pub allow_nonmultiplicative: bool,
    pub allow_noncommutative_selfdot: bool,
    pub cap: usize,
}

impl RunConfig {
    pub fn new(ring: &str, n: usize, property: &str) -> Self {
        RunConfig {
            ring: ring.to_string(),
            n,
            order: "respectful:auto".to_string(),
            basis: "standard".to_string(),
            property: property.to_string(),
            gamma: None,
            codes: Vec::new(),
            oracles: Vec::new(),
            allow_unrespectful: false,
            allow_nonmultiplicative: false,
            allow_noncommutative_selfdot: false,
            cap: DEFAULT_CAP,
        }
    }

    pub fn order(mut self, order: &str) -> Self {
        self.order = order.to_string();
        self
    }

    pub fn basis(mut self, basis: &str) -> Self {
        self.basis = basis.to_string();
        self
    }

    pub fn code(mut self, name: &str, generators: &str) -> Self {
        self.codes.push((name.to_string(), generators.to_string()));
        self
    }

    /// Parses `NAME=v1,v2,...`.
    pub fn parse_code_arg(arg: &str) -> Result<(String, String), PipelineError> {
        let (name, gens) = arg.split_once('=').ok_or_else(|| PipelineError::BadCode(arg.to_string()))?;
        let name = name.trim();
        if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
            return Err(PipelineError::BadCode(arg.to_string()));
        }
        Ok((name.to_string(), gens.trim().to_string()))
    }

    /// Builds the ring, space, property and named codes.
    pub fn prepare(&self) -> Result<Prepared, PipelineError> {
        let ring = Arc::new(FiniteRing::from_spec(&self.ring)?);
        let lattice = IdealLattice::new(&ring)?;
        if !lattice.is_plir() {
            return Err(PipelineError::NotPlir);
        }
        let ambient = Ambient::new(ring.clone(), self.n, self.cap)?;
        let order = OrderSpec::parse(&self.order)?.build(&ring, &lattice)?;
        let basis = OrderedBasis::parse(&ambient, &self.basis)?;
        let space = LexSpace::new(ambient.clone(), order, basis);
        let mut codes = BTreeMap::new();
        let mut named = BTreeMap::new();
        for (name, gens) in &self.codes {
            let code = Code::from_vectors(&ambient, &ambient.parse_vector_list(gens)?);
            codes.insert(
                name.clone(),
                NamedCode {
                    name: name.clone(),
                    members: code.members().to_vec(),
                },
            );
            named.insert(name.clone(), code);
        }
        let options = PropertyOptions {
            allow_noncommutative_selfdot: self.allow_noncommutative_selfdot,
        };
        let property = Property::parse(&ambient, &lattice, &self.property, &codes, options)?;
        let (property, verification) = property.verify_left_multiplicative();
        let gamma = match &self.gamma {
            Some(text) => {
                let g = split_top_level(text)
                    .into_iter()
                    .map(|t| ring.parse_elem(t))
                    .collect::<Result<Vec<Elem>, _>>()?;
                lattice.validate_gamma(&g)?;
                Some(g)
            }
            None => None,
        };
        Ok(Prepared {
            ring,
            lattice,
            space,
            property,
            verification: verification.ok(),
            gamma,
            codes: named,
        })
    }

    /// Prepares, runs, and attaches the requested oracle reports.
    pub fn execute(&self) -> Result<RunOutput, PipelineError> {
        let prepared = self.prepare()?;
        let options = RunOptions {
            allow_unrespectful: self.allow_unrespectful,
            allow_nonmultiplicative: self.allow_nonmultiplicative,
        };
        let lexicode = greedy::run_lexicode(
            &prepared.space,
            &prepared.lattice,
            &prepared.property,
            prepared.gamma.as_deref(),
            options,
        )?;
        let mut oracles = Vec::new();
        for &kind in &self.oracles {
            if let Some(r) = prepared.oracle(kind, &lexicode, options)? {
                oracles.push(r);
            }
        }
        Ok(RunOutput {
            prepared,
            lexicode,
            oracles,
        })
    }
}

/// Splits on commas outside brackets.
pub fn split_top_level(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '[' | '(' => depth += 1,
            ']' | ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push(text[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(text[start..].trim());
    out.retain(|s| !s.is_empty());
    out
}

/// A configured space and property, ready to run.
#[derive(Debug, Clone)]
pub struct Prepared {
    pub ring: Arc<FiniteRing>,
    pub lattice: IdealLattice,
    pub space: LexSpace,
    pub property: Property,
    /// Outcome of the exhaustive multiplicativity check, if within cap.
    pub verification: Option<MultiplicativityVerdict>,
    pub gamma: Option<Vec<Elem>>,
    pub codes: BTreeMap<String, Code>,
}

impl Prepared {
    pub fn ambient(&self) -> &Ambient {
        self.space.ambient()
    }

    /// Runs one oracle; `None` when it does not apply to this run.
    pub fn oracle(&self, kind: OracleKind, l: &Lexicode, options: RunOptions) -> Result<Option<TheoremReport>, PipelineError> {
        let p = &self.property;
        let report = match kind {
            OracleKind::Codewords => oracle::check_codewords(l, p),
            OracleKind::Exhaustive => oracle::check_exhaustive(l, p),
            OracleKind::Maximal => oracle::check_maximal(l.code(), p),
            OracleKind::MaximalFree => {
                if greedy::is_free(l.code()).is_none() {
                    return Ok(None);
                }
                oracle::check_maximal_free(l.code(), p)?
            }
            OracleKind::FreeBasis => oracle::check_free_basis(l, p),
            OracleKind::GammaInvariance => oracle::check_gamma_invariance(&self.space, &self.lattice, p, options)?,
            OracleKind::Homogeneous => {
                let w = WeightFunction::new(&self.ring, &self.lattice, WeightKind::Homog)?;
                oracle::check_homogeneous_unique(&self.ring, &self.lattice, &w)?
            }
            OracleKind::Embedding => {
                if !l.provenance().guarantees || p.at_zero() || greedy::is_free(l.code()).is_none() {
                    return Ok(None);
                }
                oracle::embed_as_lexicode(l.code(), &self.lattice, p)?.report
            }
        };
        Ok((report.verdict != Verdict::NotApplicable).then_some(report))
    }
}

/// A finished run.
#[derive(Debug, Clone)]
pub struct RunOutput {
    pub prepared: Prepared,
    pub lexicode: Lexicode,
    pub oracles: Vec<TheoremReport>,
}

impl RunOutput {
    pub fn any_violation(&self) -> bool {
        self.oracles.iter().any(|r| r.verdict == Verdict::Violated)
    }

    pub fn report(&self) -> LexicodeReport {
        LexicodeReport::new(self)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SelectedReport {
    pub level: usize,
    pub vector: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct StageReport {
    pub level: usize,
    pub size: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct FreenessReport {
    pub free: bool,
    pub basis: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DualityReport {
    pub self_orthogonal: bool,
    pub dual_size: usize,
    pub self_dual: bool,
    /// `|C| * |C^perp| = |R|^n`.
    pub size_identity: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct MultiplicativityReport {
    pub status: Multiplicativity,
    pub counterexample: Option<(String, String)>,
}

/// JSON form of a run.
#[derive(Debug, Clone, Serialize)]
pub struct LexicodeReport {
    pub inputs: Provenance,
    pub multiplicativity: MultiplicativityReport,
    pub selected: Vec<SelectedReport>,
    pub stages: Vec<StageReport>,
    pub generators: Vec<String>,
    pub size: usize,
    pub freeness: FreenessReport,
    pub duality: Option<DualityReport>,
    pub oracles: Vec<TheoremReport>,
}

impl LexicodeReport {
    fn new(out: &RunOutput) -> Self {
        let l = &out.lexicode;
        let amb = l.space().ambient();
        let code = l.code();
        let fmt = |k: usize| amb.format_key(k);
        let basis = greedy::is_free(code);
        let duality = if amb.ring().is_commutative() {
            let dual = greedy::dual_code(code).expect("commutative");
            let so = greedy::is_self_orthogonal(code).expect("commutative");
            Some(DualityReport {
                self_orthogonal: so,
                dual_size: dual.len(),
                self_dual: &dual == code,
                size_identity: code.len() * dual.len() == amb.total(),
            })
        } else {
            None
        };
        let p = &out.prepared.property;
        LexicodeReport {
            inputs: l.provenance().clone(),
            multiplicativity: MultiplicativityReport {
                status: p.multiplicative(),
                counterexample: p
                    .counterexample()
                    .map(|(u, x)| (amb.ring().name(u).to_string(), amb.format_key(x))),
            },
            selected: l
                .selected()
                .iter()
                .map(|s| SelectedReport {
                    level: s.level,
                    vector: fmt(s.key),
                })
                .collect(),
            stages: l
                .stages()
                .iter()
                .enumerate()
                .map(|(level, c)| StageReport { level, size: c.len() })
                .collect(),
            generators: code.generators().iter().map(|&g| fmt(g)).collect(),
            size: code.len(),
            freeness: FreenessReport {
                free: basis.is_some(),
                basis: basis.map(|b| b.into_iter().map(fmt).collect()),
            },
            duality,
            oracles: out.oracles.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let i = &self.inputs;
        let _ = writeln!(s, "ring        {}", i.ring);
        let _ = writeln!(s, "n           {}", i.n);
        let _ = writeln!(s, "order       {} ({:?})", i.order, i.respectful);
        let _ = writeln!(s, "basis       {}", i.basis);
        let _ = writeln!(s, "property    {} ({:?})", i.property, self.multiplicativity.status);
        let _ = writeln!(s, "gamma       {}", i.gamma.join(","));
        if !i.guarantees {
            let _ = writeln!(s, "guarantees  none (override in effect)");
        }
        for sel in &self.selected {
            let _ = writeln!(s, "a_{:<9} {}", sel.level, sel.vector);
        }
        let sizes: Vec<String> = self.stages.iter().map(|st| st.size.to_string()).collect();
        let _ = writeln!(s, "stage sizes {}", sizes.join(" "));
        let _ = writeln!(s, "code        R{{{}}}", self.generators.join(","));
        let _ = writeln!(s, "size        {}", self.size);
        let _ = writeln!(
            s,
            "free        {}",
            match &self.freeness.basis {
                Some(b) => format!("yes, basis {{{}}}", b.join(",")),
                None => "no".to_string(),
            }
        );
        if let Some(d) = &self.duality {
            let _ = writeln!(
                s,
                "dual        size {}, self-orthogonal {}, self-dual {}",
                d.dual_size, d.self_orthogonal, d.self_dual
            );
        }
        for r in &self.oracles {
            let w = r.witness.as_ref().map_or(String::new(), |w| format!(" ({})", w.description));
            let _ = writeln!(s, "oracle      {:<26} {:?}{}", r.theorem, r.verdict, w);
        }
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IdealReport {
    pub generator: String,
    pub size: usize,
    pub generators: Vec<String>,
    pub members: Vec<String>,
}

/// JSON form of a ring and its ideal lattice.
#[derive(Debug, Clone, Serialize)]
pub struct RingReport {
    pub spec: String,
    pub size: usize,
    pub commutative: bool,
    pub principal: bool,
    pub units: Vec<String>,
    pub ideals: Vec<IdealReport>,
    /// `(smaller, larger)` covering pairs by canonical generator.
    pub hasse_edges: Vec<(String, String)>,
    pub gamma: Vec<String>,
}

impl RingReport {
    pub fn new(spec: &str) -> Result<Self, PipelineError> {
        let ring = FiniteRing::from_spec(spec)?;
        let lattice = IdealLattice::new(&ring)?;
        let name = |x: Elem| ring.name(x).to_string();
        let gen = |i: usize| name(lattice.ideals()[i].canonical_gen);
        Ok(RingReport {
            spec: ring.spec().to_string(),
            size: ring.size(),
            commutative: ring.is_commutative(),
            principal: lattice.is_plir(),
            units: ring.units().iter().map(|&u| name(u)).collect(),
            ideals: lattice
                .ideals()
                .iter()
                .map(|i| IdealReport {
                    generator: name(i.canonical_gen),
                    size: i.size(),
                    generators: i.generators.iter().map(|&g| name(g)).collect(),
                    members: i.members.iter().map(|&m| name(m)).collect(),
                })
                .collect(),
            hasse_edges: lattice.hasse_edges().into_iter().map(|(a, b)| (gen(a), gen(b))).collect(),
            gamma: lattice.gamma().iter().map(|&g| name(g)).collect(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "ring       {} ({} elements, {} units)", self.spec, self.size, self.units.len());
        let _ = writeln!(s, "commutative {}, principal {}", self.commutative, self.principal);
        let _ = writeln!(s, "{} principal left ideals:", self.ideals.len());
        for i in &self.ideals {
            let _ = writeln!(s, "  R{:<16} size {:<4} generators {{{}}}", i.generator, i.size, i.generators.join(", "));
        }
        let edges: Vec<String> = self.hasse_edges.iter().map(|(a, b)| format!("R{a} < R{b}")).collect();
        let _ = writeln!(s, "covers     {}", edges.join(", "));
        let _ = writeln!(s, "gamma      {{{}}}", self.gamma.join(", "));
        s
    }
}

/// JSON form of an order.
#[derive(Debug, Clone, Serialize)]
pub struct OrderReport {
    pub sequence: Vec<String>,
    pub respectful: crate::order::Respectfulness,
    pub witness: Option<(String, String)>,
}

impl OrderReport {
    pub fn new(ring: &FiniteRing, order: &RingOrder) -> Self {
        OrderReport {
            sequence: order.sequence().iter().map(|&e| ring.name(e).to_string()).collect(),
            respectful: order.respectful(),
            witness: order
                .witness()
                .map(|(a, b)| (ring.name(a).to_string(), ring.name(b).to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn run_with_codes_and_oracles() {
        let mut cfg = RunConfig::new("gf:7", 3, "member:C,D")
            .order("natural")
            .basis("113,331,100")
            .code("C", "100,010")
            .code("D", "001");
        cfg.oracles = OracleKind::parse_list("all").unwrap();
        let out = cfg.execute().unwrap();
        let report = out.report();
        // nothing in level 1 qualifies
        assert_eq!(report.selected.len(), 2);
        assert_eq!((report.selected[0].level, report.selected[0].vector.as_str()), (2, "550"));
        assert_eq!((report.selected[1].level, report.selected[1].vector.as_str()), (3, "100"));
        assert!(!out.any_violation());
        assert_eq!(&out.lexicode.code().clone(), &out.prepared.codes["C"]);
    }

    #[test]
    fn gate_and_config_exit_codes() {
        let cfg = RunConfig::new("zmod:4", 4, "selfdot==0").order("explicit:0<2<1<3");
        assert_eq!(cfg.execute().unwrap_err().exit_code(), 3);
        let cfg = RunConfig::new("zmod:4", 4, "selfdot=0");
        assert_eq!(cfg.execute().unwrap_err().exit_code(), 2);
        let cfg = RunConfig::new("zmod:1", 4, "selfdot==0");
        assert_eq!(cfg.execute().unwrap_err().exit_code(), 2);
        let cfg = RunConfig::new("zmod:3", 1, "eq:2").order("natural");
        assert!(matches!(cfg.execute(), Err(PipelineError::Gate(GreedyError::NotMultiplicative(Multiplicativity::Refuted)))));
    }

    #[test]
    fn reports_are_deterministic() {
        let cfg = RunConfig::new("zmod:6", 3, "homog>=2");
        let a = cfg.execute().unwrap().report().to_json();
        let b = cfg.execute().unwrap().report().to_json();
        assert_eq!(a, b);
        let r = RingReport::new("zmod:12").unwrap();
        assert_eq!(r.ideals.len(), 6);
        assert_eq!(r.to_json(), RingReport::new("zmod:12").unwrap().to_json());
    }

    #[test]
    fn splitting() {
        assert_eq!(split_top_level("1,[[1,0],[0,1]], 2"), vec!["1", "[[1,0],[0,1]]", "2"]);
        assert_eq!(RunConfig::parse_code_arg("C=100,010").unwrap(), ("C".into(), "100,010".into()));
        assert!(RunConfig::parse_code_arg("=1").is_err());
    }

    #[test]
    fn explicit_gamma() {
        let mut cfg = RunConfig::new("zmod:4", 3, "lee>=2");
        cfg.gamma = Some("3,2".into());
        let a = cfg.execute().unwrap();
        assert_eq!(a.lexicode.gamma(), &[3, 2]);
        cfg.gamma = Some("1".into());
        assert!(cfg.execute().is_err());
    }
}
