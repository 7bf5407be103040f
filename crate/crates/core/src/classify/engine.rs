//! Componentwise decision procedure.
//!
//! Every ideal of a product is a product of atom ideals, and each class is
//! violated by data whose global conditions split into "for every atom"
//! constraints and "for some atom" facts. For each atom we collect the
//! achievable fact sets (bitmasks) with a smallest local witness, then a
//! subset DP over atoms decides whether the required facts can all be met.
//!
//! Finite atoms are enumerated exhaustively. Integer-like atoms use a finite
//! candidate set that reaches every achievable mask: any violating pair
//! `(a, b)` can be replaced by `(g, d/g)` with `g = gcd(a, d)` (or the same with
//! the generator of `phi(I)`), so divisor pairs plus a few fixed elements
//! suffice.

use crate::arith;
use crate::error::Result;
use crate::ideal::IdealPart;
use crate::ring::{Atom, Value};

/// Bit for "the product (or element) lies outside `phi(I)`".
pub const OUT_PHI: u8 = 1;
/// Bit for "b lies outside `I`" (or outside `sqrt(I)`, or "has no partner").
pub const OUT_I: u8 = 2;
/// Prime: the second factor lies outside `I`.
pub const OUT_I2: u8 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    R,
    Pr,
    Prime,
    Pure,
    Vnr,
}

/// One atom's ideal data.
pub struct AtomCtx<'a> {
    pub atom: &'a Atom,
    pub i: &'a IdealPart,
    /// `None` when `phi(I)` is empty.
    pub f: Option<&'a IdealPart>,
    /// `sqrt(I)`, used by the pr variant.
    pub rad: IdealPart,
}

impl<'a> AtomCtx<'a> {
    pub fn new(atom: &'a Atom, i: &'a IdealPart, f: Option<&'a IdealPart>) -> Result<Self> {
        Ok(AtomCtx {
            atom,
            i,
            f,
            rad: i.radical(atom)?,
        })
    }

    fn out_phi(&self, v: Value) -> bool {
        self.f.is_none_or(|f| !f.contains(self.atom, v))
    }

    fn gen(part: &IdealPart) -> Option<i128> {
        match part {
            IdealPart::Gen(d) => Some(*d),
            IdealPart::Set(_) => None,
        }
    }

    /// Facts of a pair, `None` when the pair is inadmissible.
    pub fn pair_facts(&self, kind: Kind, a: Value, b: Value) -> Option<u8> {
        let atom = self.atom;
        let ab = atom.mul(a, b);
        if !self.i.contains(atom, ab) {
            return None;
        }
        let mut m = if self.out_phi(ab) { OUT_PHI } else { 0 };
        match kind {
            Kind::R | Kind::Pr => {
                if !atom.is_regular(a) {
                    return None;
                }
                let target = if kind == Kind::R { self.i } else { &self.rad };
                if !target.contains(atom, b) {
                    m |= OUT_I;
                }
            }
            Kind::Prime => {
                if !self.i.contains(atom, a) {
                    m |= OUT_I;
                }
                if !self.i.contains(atom, b) {
                    m |= OUT_I2;
                }
            }
            Kind::Pure | Kind::Vnr => unreachable!(),
        }
        Some(m)
    }

    /// True when no `b` in `I` has `a = ab` (pure) or `a = a^2 b` (vnr).
    /// Such `b` exists iff `I + Ann(a)` (resp. `aI + Ann(a)`) is the whole atom.
    pub fn lacks_partner(&self, kind: Kind, a: Value) -> Result<bool> {
        let atom = self.atom;
        let ann = IdealPart::zero(atom).colon_value(atom, a)?;
        let base = match kind {
            Kind::Pure => self.i.clone(),
            Kind::Vnr => IdealPart::generated(atom, &[a]).product(atom, self.i)?,
            _ => unreachable!(),
        };
        Ok(!base.sum(atom, &ann)?.is_unit())
    }

    pub fn single_facts(&self, kind: Kind, a: Value) -> Result<Option<u8>> {
        if !self.i.contains(self.atom, a) {
            return Ok(None);
        }
        let mut m = if self.out_phi(a) { OUT_PHI } else { 0 };
        if self.lacks_partner(kind, a)? {
            m |= OUT_I;
        }
        Ok(Some(m))
    }

    /// Local witnesses for pair classes: the first pair per achievable mask.
    pub fn pair_locals(&self, kind: Kind, required: u8) -> Vec<(u8, (Value, Value))> {
        let mut out: Vec<(u8, (Value, Value))> = Vec::new();
        let mut push = |m: u8, w: (Value, Value)| {
            let m = m & required;
            if !out.iter().any(|(k, _)| *k == m) {
                out.push((m, w));
            }
        };
        match self.atom.values() {
            Some(vals) => {
                for &a in &vals {
                    for &b in &vals {
                        if let Some(m) = self.pair_facts(kind, a, b) {
                            push(m, (a, b));
                        }
                    }
                }
            }
            None => {
                for (a, b) in self.int_pair_candidates(kind) {
                    let (a, b) = (self.atom.from_int(a), self.atom.from_int(b));
                    if let Some(m) = self.pair_facts(kind, a, b) {
                        push(m, (a, b));
                    }
                }
            }
        }
        out
    }

    pub fn single_locals(&self, kind: Kind, required: u8) -> Result<Vec<(u8, Value)>> {
        let mut out: Vec<(u8, Value)> = Vec::new();
        let cands: Vec<Value> = match self.atom.values() {
            Some(vals) => vals,
            None => self.int_single_candidates().into_iter().map(|a| self.atom.from_int(a)).collect(),
        };
        for a in cands {
            if let Some(m) = self.single_facts(kind, a)? {
                let m = m & required;
                if !out.iter().any(|(k, _)| *k == m) {
                    out.push((m, a));
                }
            }
        }
        Ok(out)
    }

    fn generators(&self) -> (i128, Option<i128>) {
        let d = Self::gen(self.i).expect("principal atom");
        (d, self.f.and_then(Self::gen))
    }

    /// Candidate pairs on an integer-like atom, sorted by search rank.
    fn int_pair_candidates(&self, kind: Kind) -> Vec<(i128, i128)> {
        let (d, e) = self.generators();
        let mut c: Vec<(i128, i128)> = Vec::new();
        for a in arith::search_order(SMALL) {
            for b in arith::search_order(SMALL) {
                c.push((a, b));
            }
        }
        c.extend([(0, 0), (1, 0), (0, 1), (1, 1), (d, d), (1, d), (d, 1)]);
        if let Some(e) = e {
            c.extend([(e, 1), (1, e)]);
        }
        let mut split = |n: i128| {
            if n != 0 && n.abs() <= DIVISOR_LIMIT {
                for u in arith::divisors(n.abs()) {
                    c.push((u, n.abs() / u));
                }
            }
        };
        split(d);
        if let Some(e) = e {
            split(e);
        }
        let _ = kind;
        c.sort_by_key(|&(a, b)| pair_rank(a, b));
        c.dedup();
        c
    }

    fn int_single_candidates(&self) -> Vec<i128> {
        let (d, e) = self.generators();
        let mut c: Vec<i128> = arith::search_order(SMALL).collect();
        c.push(d);
        c.extend(e);
        let primes = match self.atom {
            Atom::LocZ(l) => l.nonunit_primes(2),
            _ => vec![2, 3],
        };
        c.extend(primes);
        c.sort_by_key(|&a| arith::search_rank(a));
        c.dedup();
        c
    }
}

/// Radius of the exhaustive part of the integer candidate search.
const SMALL: u64 = 6;
/// Largest generator whose divisors are enumerated.
const DIVISOR_LIMIT: i128 = 100_000_000_000_000;

pub fn pair_rank(a: i128, b: i128) -> (u128, u128, u128) {
    let (ra, rb) = (arith::search_rank(a), arith::search_rank(b));
    (ra.max(rb), ra, rb)
}

/// Picks one local option per atom so that the union of masks covers
/// `required`. Returns the chosen index per atom.
pub fn combine<W>(locals: &[Vec<(u8, W)>], required: u8) -> Option<Vec<usize>> {
    let mut reach: Vec<Option<Vec<usize>>> = vec![None; 8];
    reach[0] = Some(Vec::new());
    for opts in locals {
        let mut next: Vec<Option<Vec<usize>>> = vec![None; 8];
        for u in 0..8usize {
            let Some(path) = &reach[u] else { continue };
            for (j, (m, _)) in opts.iter().enumerate() {
                let nu = u | *m as usize;
                if next[nu].is_none() {
                    let mut p = path.clone();
                    p.push(j);
                    next[nu] = Some(p);
                }
            }
        }
        reach = next;
    }
    (0..8usize)
        .filter(|&u| u as u8 & required == required)
        .find_map(|u| reach[u].clone())
}
