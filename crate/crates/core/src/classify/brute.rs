//! Definition-level searches over whole-ring elements and ideals.
//!
//! These do not use the componentwise reduction and serve as an independent
//! oracle for it. On infinite rings every search is truncated at the bound.

use crate::error::Result;
use crate::ideal::{enumerate_ideals, Ideal};
use crate::phi::PhiImage;
use crate::ring::{make_quotient, Element, QuotientMap, Ring};
use crate::verdict::{Verdict, Witness};

use super::IdealClass;

fn image_of(class: &IdealClass, i: &Ideal) -> Result<PhiImage> {
    Ok(match class.phi() {
        Some(p) => p.apply(i)?,
        None if *class == IdealClass::WeaklyR => PhiImage::Ideal(Ideal::zero(i.ring())),
        None => PhiImage::Empty,
    })
}

fn done(ring: &Ring, bound: u64) -> Verdict {
    Verdict::passing(ring.is_finite(), bound)
}

/// Whether some power of `b` lies in `I`, computed in `R/I`.
fn in_radical(q: &Ring, map: &QuotientMap, b: &Element) -> bool {
    let mut c = map.project(b);
    // an infinite atom of R/I is a domain, so only zero is nilpotent there
    for (k, atom) in q.atoms().iter().enumerate() {
        if !atom.is_finite() && !atom.is_zero(c.get(k)) {
            return false;
        }
    }
    let steps = q.size().map_or(1, |n| usize::BITS - n.leading_zeros());
    for _ in 0..=steps {
        if q.is_zero(&c) {
            return true;
        }
        c = q.mul(&c, &c);
    }
    q.is_zero(&c)
}

/// Pair search for `r`, `weakly-r`, `phi-r`, `phi-pr`, `prime` and `phi-prime`.
fn pairs(class: &IdealClass, i: &Ideal, bound: u64) -> Result<Verdict> {
    let ring = i.ring();
    let image = image_of(class, i)?;
    let elems = ring.bounded_elements(bound);
    let prime = matches!(class, IdealClass::Prime | IdealClass::PhiPrime(_));
    let pr = matches!(class, IdealClass::PhiPr(_));
    let (q, map) = make_quotient(ring, i)?;
    let outside: Vec<bool> = elems
        .iter()
        .map(|b| if pr { !in_radical(&q, &map, b) } else { !i.has(b) })
        .collect();
    for a in &elems {
        if prime {
            if i.has(a) {
                continue;
            }
        } else if !ring.is_regular(a) {
            continue;
        }
        for (b, &out) in elems.iter().zip(&outside) {
            if !out {
                continue;
            }
            let ab = ring.mul(a, b);
            if i.has(&ab) && !image.has(&ab) {
                return Ok(Verdict::Fails(Witness::elements(ring, [a.clone(), b.clone()])));
            }
        }
    }
    Ok(done(ring, bound))
}

/// Pure and vNr searches: `b` ranges over bounded elements of `I`.
fn singles(class: &IdealClass, i: &Ideal, bound: u64) -> Result<Verdict> {
    let ring = i.ring();
    let image = image_of(class, i)?;
    let e = if matches!(class, IdealClass::Pure | IdealClass::PhiPure(_)) { 1 } else { 2 };
    let members = i.bounded_elements(bound);
    for a in &members {
        if image.has(a) {
            continue;
        }
        let ae = ring.pow(a, e);
        if !members.iter().any(|b| ring.mul(&ae, b) == *a) {
            return Ok(Verdict::Fails(Witness::elements(ring, [a.clone()])));
        }
    }
    Ok(done(ring, bound))
}

fn strongly(class: &IdealClass, i: &Ideal, bound: u64) -> Result<Verdict> {
    let ring = i.ring();
    let image = image_of(class, i)?;
    let all = enumerate_ideals(ring, Some(bound))?;
    for x in &all.ideals {
        if !x.annihilator()?.is_zero() {
            continue;
        }
        for y in &all.ideals {
            let xy = x.product(y)?;
            let outside = match image.ideal() {
                None => true,
                Some(f) => !xy.is_subset(f)?,
            };
            if xy.is_subset(i)? && outside && !y.is_subset(i)? {
                return Ok(Verdict::Fails(Witness::ideals([x.clone(), y.clone()])));
            }
        }
    }
    Ok(Verdict::passing(all.complete, bound))
}

/// Brute-force verdict for element and ideal-pair classes; `None` for the
/// classes without a search formulation.
pub fn check(class: &IdealClass, i: &Ideal, bound: u64) -> Result<Option<Verdict>> {
    Ok(Some(match class {
        IdealClass::RIdeal
        | IdealClass::WeaklyR
        | IdealClass::PhiR(_)
        | IdealClass::PhiPr(_)
        | IdealClass::Prime
        | IdealClass::PhiPrime(_) => pairs(class, i, bound)?,
        IdealClass::Pure | IdealClass::PhiPure(_) | IdealClass::VnrIdeal | IdealClass::PhiVnr(_) => {
            singles(class, i, bound)?
        }
        IdealClass::StronglyPhiR(_) => strongly(class, i, bound)?,
        _ => return Ok(None),
    }))
}

/// Zerodivisors of a finite ring by direct search.
pub fn zerodivisors(ring: &Ring) -> Result<Vec<Element>> {
    let all = ring.elements()?;
    Ok(all
        .iter()
        .filter(|a| all.iter().any(|b| !ring.is_zero(b) && ring.is_zero(&ring.mul(a, b))))
        .cloned()
        .collect())
}
