//! Reduction maps `phi : L(R) -> L(R) ∪ {∅}` and the maps they induce.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::{enumerate_ideals, Ideal};
use crate::ring::{Element, LocalizationMap, QuotientMap, Ring};
use crate::verdict::{Verdict, Witness};

/// The value of a reduction map: an ideal or the empty set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PhiImage {
    Empty,
    Ideal(Ideal),
}

impl PhiImage {
    pub fn ideal(&self) -> Option<&Ideal> {
        match self {
            PhiImage::Empty => None,
            PhiImage::Ideal(i) => Some(i),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, PhiImage::Empty)
    }

    pub fn has(&self, a: &Element) -> bool {
        self.ideal().is_some_and(|i| i.has(a))
    }

    /// Inclusion with the empty set below every ideal.
    pub fn is_subset(&self, other: &PhiImage) -> Result<bool> {
        match (self, other) {
            (PhiImage::Empty, _) => Ok(true),
            (PhiImage::Ideal(_), PhiImage::Empty) => Ok(false),
            (PhiImage::Ideal(a), PhiImage::Ideal(b)) => a.is_subset(b),
        }
    }
}

impl fmt::Display for PhiImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PhiImage::Empty => write!(f, "∅"),
            PhiImage::Ideal(i) => write!(f, "{i}"),
        }
    }
}

/// A reduction map given by an explicit table.
#[derive(Debug, Clone, Default)]
pub struct CustomPhi {
    name: String,
    entries: HashMap<Ideal, PhiImage>,
}

impl CustomPhi {
    pub fn new(name: impl Into<String>, entries: impl IntoIterator<Item = (Ideal, PhiImage)>) -> Self {
        CustomPhi {
            name: name.into(),
            entries: entries.into_iter().collect(),
        }
    }

    pub fn get(&self, i: &Ideal) -> Result<&PhiImage> {
        self.entries.get(i).ok_or_else(|| Error::MissingCustomEntry(i.to_string()))
    }
}

#[derive(Debug, Clone)]
pub enum Phi {
    Empty,
    Zero,
    Identity,
    /// `I -> I^n`, `n >= 2`.
    Power(u32),
    Omega,
    Custom(Arc<CustomPhi>),
    /// One map per atom of a product ring.
    Product(Vec<Phi>),
    /// `J/I -> (phi(J) + I)/I` on `R/I`.
    QuotientInduced(Box<Phi>, Arc<QuotientMap>),
    /// `J -> S^-1 phi(J ∩ R)` on `S^-1 R`.
    LocalizationInduced(Box<Phi>, Arc<LocalizationMap>),
}

impl PartialEq for Phi {
    fn eq(&self, other: &Self) -> bool {
        self.to_string() == other.to_string()
    }
}

impl fmt::Display for Phi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Phi::Empty => write!(f, "empty"),
            Phi::Zero => write!(f, "zero"),
            Phi::Identity => write!(f, "id"),
            Phi::Power(n) => write!(f, "pow:{n}"),
            Phi::Omega => write!(f, "omega"),
            Phi::Custom(c) => write!(f, "custom:{}", c.name),
            Phi::Product(parts) => {
                let shown: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "prod:[{}]", shown.join(","))
            }
            Phi::QuotientInduced(base, _) => write!(f, "quot:{base}"),
            Phi::LocalizationInduced(base, _) => write!(f, "loc:{base}"),
        }
    }
}

impl Phi {
    /// The unnormalized image.
    fn raw(&self, i: &Ideal) -> Result<PhiImage> {
        Ok(match self {
            Phi::Empty => PhiImage::Empty,
            Phi::Zero => PhiImage::Ideal(Ideal::zero(i.ring())),
            Phi::Identity => PhiImage::Ideal(i.clone()),
            Phi::Power(n) => PhiImage::Ideal(i.power(*n)?),
            Phi::Omega => PhiImage::Ideal(i.omega_power()?),
            Phi::Custom(c) => c.get(i)?.clone(),
            Phi::Product(parts) => {
                if parts.len() != i.ring().arity() {
                    return Err(Error::RingMismatch);
                }
                let mut comps = Vec::with_capacity(parts.len());
                for (k, p) in parts.iter().enumerate() {
                    match p.apply(&i.component(k))? {
                        PhiImage::Empty => return Ok(PhiImage::Empty),
                        PhiImage::Ideal(c) => comps.push(c),
                    }
                }
                PhiImage::Ideal(Ideal::from_components(i.ring(), &comps)?)
            }
            Phi::QuotientInduced(base, map) => {
                let j = map.lift_ideal(i)?;
                match base.apply(&j)? {
                    PhiImage::Empty => PhiImage::Empty,
                    PhiImage::Ideal(pj) => PhiImage::Ideal(map.project_ideal(&pj)?),
                }
            }
            Phi::LocalizationInduced(base, map) => {
                let j = map.contract(i)?;
                match base.apply(&j)? {
                    PhiImage::Empty => PhiImage::Empty,
                    PhiImage::Ideal(pj) => PhiImage::Ideal(map.extend(&pj)?),
                }
            }
        })
    }

    /// `phi(I) ∩ I`, or the empty set.
    pub fn apply(&self, i: &Ideal) -> Result<PhiImage> {
        Ok(match self.raw(i)? {
            PhiImage::Empty => PhiImage::Empty,
            PhiImage::Ideal(p) => PhiImage::Ideal(p.intersection(i)?),
        })
    }

    /// `phi_n^×` on a ring with `arity` atoms.
    pub fn power_product(n: u32, arity: usize) -> Phi {
        Phi::Product(vec![Phi::Power(n); arity])
    }
}

pub fn phi_apply(phi: &Phi, i: &Ideal) -> Result<PhiImage> {
    phi.apply(i)
}

/// Ideals to quantify over: all of them, or a bounded family flagged partial.
pub fn ideals_for(ring: &Ring, bound: Option<u64>) -> Result<(Vec<Ideal>, bool)> {
    let e = enumerate_ideals(ring, bound)?;
    Ok((e.ideals, e.complete))
}

/// `psi1 <= psi2` on every proper ideal of `ring` (bounded on infinite rings).
pub fn phi_leq(psi1: &Phi, psi2: &Phi, ring: &Ring, bound: Option<u64>) -> Result<Verdict> {
    let (ideals, complete) = ideals_for(ring, bound)?;
    for i in ideals.into_iter().filter(Ideal::is_proper) {
        if !psi1.apply(&i)?.is_subset(&psi2.apply(&i)?)? {
            return Ok(Verdict::Fails(Witness::ideals([i])));
        }
    }
    Ok(Verdict::passing(complete, bound.unwrap_or(0)))
}

/// The displayed chain `empty <= zero <= omega <= pow:n_max <= ... <= pow:2 <= id`.
pub fn order_chain(n_max: u32) -> Vec<Phi> {
    let mut chain = vec![Phi::Empty, Phi::Zero, Phi::Omega];
    chain.extend((2..=n_max).rev().map(Phi::Power));
    chain.push(Phi::Identity);
    chain
}

/// Checks every consecutive link of [`order_chain`] on every ideal.
pub fn order_chain_check(ring: &Ring, n_max: u32, bound: Option<u64>) -> Result<Verdict> {
    let chain = order_chain(n_max);
    let mut verdict = Verdict::Holds;
    for w in chain.windows(2) {
        verdict = verdict.and(phi_leq(&w[0], &w[1], ring, bound)?);
        if verdict.is_fails() {
            break;
        }
    }
    Ok(verdict)
}

/// `I ⊆ J` implies `phi(I) ⊆ phi(J)`; the witness is the pair `(I, J)`.
pub fn preserves_order(phi: &Phi, ring: &Ring, bound: Option<u64>) -> Result<Verdict> {
    let (ideals, complete) = ideals_for(ring, bound)?;
    let images = ideals.iter().map(|i| phi.apply(i)).collect::<Result<Vec<_>>>()?;
    for (a, ia) in ideals.iter().zip(&images) {
        for (b, ib) in ideals.iter().zip(&images) {
            if a.is_subset(b)? && !ia.is_subset(ib)? {
                return Ok(Verdict::Fails(Witness::ideals([a.clone(), b.clone()])));
            }
        }
    }
    Ok(Verdict::passing(complete, bound.unwrap_or(0)))
}

/// Smallest `k >= 1` with `I^k = I^(k+1)`, for ideals of finite rings.
pub fn stabilization_index(i: &Ideal) -> Result<u32> {
    let mut k = 1;
    let mut p = i.clone();
    loop {
        let next = p.product(i)?;
        if next == p {
            return Ok(k);
        }
        p = next;
        k += 1;
    }
}
