//! Results about φ-r-ideals as executable, hypothesis-gated checks.

mod checks;
pub mod corpus;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classify::{check, IdealClass};
use crate::error::{Error, Result};
use crate::ideal::{enumerate_ideals, Ideal};
use crate::phi::Phi;
use crate::ring::Ring;
use crate::verdict::{Bound, Verdict, Witness};

pub use corpus::CorpusSpec;

macro_rules! theorems {
    ($($variant:ident => $name:literal),* $(,)?) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
        pub enum TheoremId {
            $(#[serde(rename = $name)] $variant,)*
        }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant),*];

            pub fn name(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $name,)*
                }
            }
        }
    };
}

theorems! {
    Basic1 => "basic-1",
    Basic2 => "basic-2",
    Basic3 => "basic-3",
    Basic4 => "basic-4",
    QuotPhi1 => "quot-phi-1",
    QuotPhi2 => "quot-phi-2",
    Cha => "cha",
    DiffZd => "diff-zd",
    Equ => "equ",
    Rad => "rad",
    Union => "union",
    ProZd => "pro-zd",
    PrimeZd => "prime-zd",
    ColonX => "colon-x",
    StronglyImplies => "strongly-implies",
    SacThm => "sac-thm",
    QuotJI => "quot-JI",
    QuotLift => "quot-lift",
    Ide => "ide",
    Loc1 => "loc-1",
    Loc2 => "loc-2",
    ProductTqr => "product-tqr",
}

impl TheoremId {
    /// The hypotheses each instance is gated on, in words.
    pub fn hypotheses(self) -> &'static str {
        match self {
            TheoremId::Basic1 => "psi1(I) ⊆ psi2(I) and I is psi1-r",
            TheoremId::Basic2 => "none",
            TheoremId::Basic3 => "none",
            TheoremId::Basic4 => "I is idempotent",
            TheoremId::QuotPhi1 => "nonzero elements of phi(I) are regular and I is phi-r",
            TheoremId::QuotPhi2 => "phi(I) is an r-ideal and I/phi(I) is an r-ideal of R/phi(I)",
            TheoremId::Cha => "none",
            TheoremId::DiffZd => "I is phi-r",
            TheoremId::Equ => "phi(I) is an r-ideal",
            TheoremId::Rad => "sqrt(phi(I)) = phi(sqrt(I)) and I is phi-r",
            TheoremId::Union => "phi preserves order and every member of the chain is phi-r",
            TheoremId::ProZd => "phi(I) is an r-ideal and I is phi-r",
            TheoremId::PrimeZd => "phi(I) is an r-ideal and I is prime",
            TheoremId::ColonX => "x not in I, (phi(I):x) ⊆ phi((I:x)) and I is phi-r",
            TheoremId::StronglyImplies => "I is strongly phi-r",
            TheoremId::SacThm => "R satisfies s.a.c. and phi(I) is an r-ideal",
            TheoremId::QuotJI => "nonzero elements of I are regular, I ⊆ J and J is phi-r",
            TheoremId::QuotLift => "I is an r-ideal, I ⊆ J and J/I is an r-ideal of R/I",
            TheoremId::Ide => "z(R) = z(M) and I(+)M is psi2-r",
            TheoremId::Loc1 | TheoremId::Loc2 => {
                "S regular, S ∩ I empty, I is phi-r and phi(I)_S ⊆ phi_S(I_S)"
            }
            TheoremId::ProductTqr => "R is a product of rings",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Semantic(format!("unknown theorem {s}")))
    }
}

/// Free parameters of a check.
#[derive(Debug, Clone, Default)]
pub struct Params {
    /// The map under test; `None` runs the probe set.
    pub phi: Option<Phi>,
    /// `n` for chains and for `phi_n^×`.
    pub n: Option<u32>,
    /// Generators of the multiplicative set for the localization checks.
    pub denominators: Vec<i128>,
}

/// The maps checked when none is given.
pub fn probe_set() -> Vec<Phi> {
    vec![Phi::Empty, Phi::Zero, Phi::Power(2), Phi::Omega]
}

impl Params {
    pub fn phis(&self) -> Vec<Phi> {
        match &self.phi {
            Some(p) => vec![p.clone()],
            None => probe_set(),
        }
    }
}

/// An instance whose conclusion failed, with a replayable witness.
#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample {
    pub ring: String,
    pub phi: Option<String>,
    pub description: String,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub ring: String,
    pub instances: u64,
    pub hypotheses_satisfied: u64,
    /// Hypothesis-satisfying instances where the stated result fails.
    pub violations: u64,
    pub conclusion: Verdict,
    pub witnesses: Vec<Counterexample>,
}

/// Collects instance counts while a check runs.
#[derive(Debug)]
pub(crate) struct Tally {
    ring: String,
    instances: u64,
    satisfied: u64,
    violations: u64,
    exact: bool,
    bound: u64,
    witnesses: Vec<Counterexample>,
    /// Overrides the conclusion when the result's own statement is checked.
    conclusion: Option<Verdict>,
}

impl Tally {
    pub(crate) fn new(ring: &Ring) -> Self {
        Tally {
            ring: ring.to_string(),
            instances: 0,
            satisfied: 0,
            violations: 0,
            exact: true,
            bound: u64::MAX,
            witnesses: Vec::new(),
            conclusion: None,
        }
    }

    pub(crate) fn instance(&mut self) {
        self.instances += 1;
    }

    pub(crate) fn satisfied(&mut self) {
        self.satisfied += 1;
    }

    /// Marks the result as bounded at `b`.
    pub(crate) fn bounded(&mut self, b: u64) {
        self.exact = false;
        self.bound = self.bound.min(b);
    }

    pub(crate) fn absorb(&mut self, v: &Verdict) {
        if let Verdict::HoldsUpToBound(b) = v {
            self.bounded(*b);
        }
    }

    pub(crate) fn violation(&mut self, phi: Option<&Phi>, description: impl Into<String>, witness: Witness) {
        self.violations += 1;
        self.witnesses.push(Counterexample {
            ring: self.ring.clone(),
            phi: phi.map(|p| p.to_string()),
            description: description.into(),
            witness,
        });
    }

    pub(crate) fn conclude(&mut self, v: Verdict) {
        self.conclusion = Some(v);
    }

    fn report(self, theorem: TheoremId) -> TheoremReport {
        let conclusion = match self.conclusion {
            Some(v) => v,
            None => match self.witnesses.first() {
                Some(c) => Verdict::Fails(c.witness.clone()),
                None => Verdict::passing(self.exact, self.bound),
            },
        };
        TheoremReport {
            theorem,
            ring: self.ring,
            instances: self.instances,
            hypotheses_satisfied: self.satisfied,
            violations: self.violations,
            conclusion,
            witnesses: self.witnesses,
        }
    }
}

/// Runs one check on one ring.
pub fn verify(id: TheoremId, ring: &Ring, params: &Params, bound: Bound) -> Result<TheoremReport> {
    let mut t = Tally::new(ring);
    checks::run(id, ring, params, bound, &mut t)?;
    Ok(t.report(id))
}

/// Runs one check over every ring of a corpus and merges the reports.
pub fn verify_corpus(id: TheoremId, corpus: &CorpusSpec, params: &Params, bound: Bound) -> Result<TheoremReport> {
    let rings = corpus.rings()?;
    let reports = rings
        .iter()
        .map(|r| verify(id, r, params, bound))
        .collect::<Result<Vec<_>>>()?;
    Ok(merge(id, corpus.to_string(), reports))
}

/// Merges per-ring reports; the first failing report in corpus order wins.
pub fn merge(id: TheoremId, label: String, reports: Vec<TheoremReport>) -> TheoremReport {
    let mut out = TheoremReport {
        theorem: id,
        ring: label,
        instances: 0,
        hypotheses_satisfied: 0,
        violations: 0,
        conclusion: Verdict::Holds,
        witnesses: Vec::new(),
    };
    for r in reports {
        out.instances += r.instances;
        out.hypotheses_satisfied += r.hypotheses_satisfied;
        out.violations += r.violations;
        out.conclusion = out.conclusion.and(r.conclusion);
        out.witnesses.extend(r.witnesses);
    }
    out
}

/// A ring and ideal separating two classes.
#[derive(Debug, Clone, PartialEq)]
pub enum Separation {
    Found {
        ring: Ring,
        ideal: Ideal,
        /// The violation of the lacking class.
        witness: Witness,
    },
    NotFound,
}

/// First `(R, I)` in corpus order with `have` passing and `lack` failing.
/// Ideals of infinite rings are enumerated up to `bound.ideals`.
pub fn search_separating(have: &IdealClass, lack: &IdealClass, corpus: &CorpusSpec, bound: Bound) -> Result<Separation> {
    for ring in corpus.rings()? {
        let all = enumerate_ideals(&ring, Some(bound.ideals))?;
        for i in all.proper() {
            if !check(have, i, bound)?.passes() {
                continue;
            }
            if let Verdict::Fails(w) = check(lack, i, bound)? {
                return Ok(Separation::Found {
                    ring: ring.clone(),
                    ideal: i.clone(),
                    witness: w,
                });
            }
        }
    }
    Ok(Separation::NotFound)
}
