use std::fmt;
use std::sync::Arc;

use super::{
    make_idealization, make_localization, make_product, make_quotient, Atom, Module, Ring, TableOrigin,
    TableRing,
};
use crate::error::{Error, Result};
use crate::ideal::Ideal;

/// Structural description of a ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingSpec {
    Z,
    Zn(i128),
    /// `Z` with the elements of the set inverted.
    LocZ(Vec<i128>),
    Table(TableSpec),
    Product(Vec<RingSpec>),
    Quotient(Box<RingSpec>, IdealSpec),
    Idealization(Box<RingSpec>, ModuleSpec),
    Localization(Box<RingSpec>, Vec<i128>),
}

/// An ideal given by generators in flattened surface slots.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IdealSpec {
    pub generators: Vec<Vec<i128>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleSpec {
    Regular,
    Quotient(IdealSpec),
}

/// An explicit finite ring. Tables are indexed by element position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableSpec {
    pub elements: Vec<String>,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
}

impl IdealSpec {
    pub fn new(generators: Vec<Vec<i128>>) -> Self {
        IdealSpec { generators }
    }

    pub fn build(&self, ring: &Ring) -> Result<Ideal> {
        let gens = self.generators.iter().map(|g| ring.element(g)).collect::<Result<Vec<_>>>()?;
        Ideal::from_generators(ring, &gens)
    }
}

impl RingSpec {
    /// The canonical spec of the ring this spec describes.
    pub fn normalize(&self) -> Result<RingSpec> {
        Ok(build(self)?.spec())
    }
}

fn build_table(ts: &TableSpec) -> Result<Ring> {
    let n = ts.elements.len();
    let flat = |t: &[Vec<usize>]| -> Result<Vec<u32>> {
        if t.len() != n || t.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidTable("table dimensions do not match".into()));
        }
        Ok(t.iter().flatten().map(|&v| v as u32).collect())
    };
    let table = TableRing::from_tables(
        n,
        flat(&ts.add)?,
        flat(&ts.mul)?,
        ts.zero,
        ts.one,
        ts.elements.clone(),
        RingSpec::Table(ts.clone()),
        TableOrigin::Explicit,
    )?;
    Ring::from_atoms(vec![Atom::Table(Arc::new(table))])
}

pub(super) fn build(spec: &RingSpec) -> Result<Ring> {
    match spec {
        RingSpec::Z => Ok(Ring::z()),
        RingSpec::Zn(n) => Ring::zn(*n),
        RingSpec::LocZ(s) => Ring::loc_z(s),
        RingSpec::Table(ts) => build_table(ts),
        RingSpec::Product(parts) => {
            let rings = parts.iter().map(build).collect::<Result<Vec<_>>>()?;
            make_product(&rings)
        }
        RingSpec::Quotient(base, ideal) => {
            let r = build(base)?;
            let i = ideal.build(&r)?;
            Ok(make_quotient(&r, &i)?.0)
        }
        RingSpec::Idealization(base, module) => {
            let r = build(base)?;
            let m = match module {
                ModuleSpec::Regular => Module::Regular,
                ModuleSpec::Quotient(j) => Module::Quotient(j.build(&r)?),
            };
            make_idealization(&r, m)
        }
        RingSpec::Localization(base, s) => {
            let r = build(base)?;
            let gens: Vec<_> = s.iter().map(|&k| r.from_int(k)).collect();
            Ok(make_localization(&r, &gens)?.0)
        }
    }
}

fn write_set(f: &mut fmt::Formatter<'_>, s: &[i128]) -> fmt::Result {
    let shown: Vec<String> = s.iter().map(|x| x.to_string()).collect();
    write!(f, "{{{}}}", shown.join(","))
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Z => write!(f, "Z"),
            RingSpec::Zn(n) => write!(f, "Z/{n}"),
            RingSpec::LocZ(s) => {
                write!(f, "loc(Z,")?;
                write_set(f, s)?;
                write!(f, ")")
            }
            RingSpec::Table(t) => write!(f, "table({})", t.elements.len()),
            RingSpec::Product(parts) => {
                let shown: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "{}", shown.join(" x "))
            }
            RingSpec::Quotient(base, ideal) => write!(f, "quot({base},{ideal})"),
            RingSpec::Idealization(base, ModuleSpec::Regular) => write!(f, "idealize({base})"),
            RingSpec::Idealization(base, ModuleSpec::Quotient(j)) => write!(f, "idealize({base},mod {j})"),
            RingSpec::Localization(base, s) => {
                write!(f, "loc({base},")?;
                write_set(f, s)?;
                write!(f, ")")
            }
        }
    }
}

impl fmt::Display for IdealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gen")?;
        for (i, g) in self.generators.iter().enumerate() {
            write!(f, "{}", if i == 0 { " " } else { "," })?;
            if g.len() == 1 {
                write!(f, "{}", g[0])?;
            } else {
                let shown: Vec<String> = g.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", shown.join(","))?;
            }
        }
        Ok(())
    }
}
