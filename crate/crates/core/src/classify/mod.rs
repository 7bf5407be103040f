//! Ideal-class predicates returning verdicts with witnesses.

pub mod brute;
mod engine;

use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::{annihilator_of, Ideal, IdealPart};
use crate::phi::{Phi, PhiImage};
use crate::ring::{Atom, Element, Ring, Value};
use crate::verdict::{Bound, Verdict, Witness};

use engine::{combine, AtomCtx, Kind, OUT_I, OUT_I2, OUT_PHI};

#[derive(Debug, Clone, PartialEq)]
pub enum IdealClass {
    RIdeal,
    WeaklyR,
    PhiR(Phi),
    PhiPr(Phi),
    PhiPure(Phi),
    PhiVnr(Phi),
    StronglyPhiR(Phi),
    Prime,
    PhiPrime(Phi),
    Pure,
    VnrIdeal,
    Idempotent,
    RegularIdeal,
    /// Strong annihilator condition; a property of the ring.
    Sac,
}

impl IdealClass {
    pub fn name(&self) -> &'static str {
        match self {
            IdealClass::RIdeal => "r",
            IdealClass::WeaklyR => "weakly-r",
            IdealClass::PhiR(_) => "phi-r",
            IdealClass::PhiPr(_) => "phi-pr",
            IdealClass::PhiPure(_) => "phi-pure",
            IdealClass::PhiVnr(_) => "phi-vnr",
            IdealClass::StronglyPhiR(_) => "strongly-phi-r",
            IdealClass::Prime => "prime",
            IdealClass::PhiPrime(_) => "phi-prime",
            IdealClass::Pure => "pure",
            IdealClass::VnrIdeal => "vnr",
            IdealClass::Idempotent => "idempotent",
            IdealClass::RegularIdeal => "regular-ideal",
            IdealClass::Sac => "sac",
        }
    }

    pub fn phi(&self) -> Option<&Phi> {
        match self {
            IdealClass::PhiR(p)
            | IdealClass::PhiPr(p)
            | IdealClass::PhiPure(p)
            | IdealClass::PhiVnr(p)
            | IdealClass::StronglyPhiR(p)
            | IdealClass::PhiPrime(p) => Some(p),
            _ => None,
        }
    }

    /// Builds a class from its CLI name, using `phi` where one is needed.
    pub fn from_name(name: &str, phi: Option<Phi>) -> Result<IdealClass> {
        let need = |phi: Option<Phi>| phi.ok_or_else(|| Error::Semantic(format!("class {name} needs a map")));
        Ok(match name {
            "r" => IdealClass::RIdeal,
            "weakly-r" => IdealClass::WeaklyR,
            "phi-r" => IdealClass::PhiR(need(phi)?),
            "phi-pr" => IdealClass::PhiPr(need(phi)?),
            "phi-pure" => IdealClass::PhiPure(need(phi)?),
            "phi-vnr" => IdealClass::PhiVnr(need(phi)?),
            "strongly-phi-r" => IdealClass::StronglyPhiR(need(phi)?),
            "prime" => IdealClass::Prime,
            "phi-prime" => IdealClass::PhiPrime(need(phi)?),
            "pure" => IdealClass::Pure,
            "vnr" => IdealClass::VnrIdeal,
            "idempotent" => IdealClass::Idempotent,
            "regular-ideal" => IdealClass::RegularIdeal,
            "sac" => IdealClass::Sac,
            _ => return Err(Error::Semantic(format!("unknown class {name}"))),
        })
    }

    /// Whether the class is only defined for proper ideals.
    fn needs_proper(&self) -> bool {
        !matches!(self, IdealClass::Idempotent | IdealClass::RegularIdeal | IdealClass::Sac)
    }
}

impl fmt::Display for IdealClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.phi() {
            Some(p) => write!(f, "{}[{p}]", self.name()),
            None => write!(f, "{}", self.name()),
        }
    }
}

fn proper(i: &Ideal) -> Result<()> {
    if i.is_proper() {
        Ok(())
    } else {
        Err(Error::ImproperIdeal)
    }
}

/// Per-atom contexts for `I` and `phi(I)`.
fn contexts<'a>(i: &'a Ideal, image: &'a PhiImage) -> Result<Vec<AtomCtx<'a>>> {
    let ring = i.ring();
    (0..ring.arity())
        .map(|k| AtomCtx::new(ring.atom(k), i.part(k), image.ideal().map(|f| f.part(k))))
        .collect()
}

fn pair_search(kind: Kind, i: &Ideal, image: &PhiImage) -> Result<Verdict> {
    let ring = i.ring();
    let required = match kind {
        Kind::Prime => OUT_PHI | OUT_I | OUT_I2,
        _ => OUT_PHI | OUT_I,
    };
    let ctxs = contexts(i, image)?;
    let locals: Vec<_> = ctxs.iter().map(|c| c.pair_locals(kind, required)).collect();
    Ok(match combine(&locals, required) {
        None => Verdict::Holds,
        Some(choice) => {
            let pick = |side: usize| {
                Element::new(choice.iter().zip(&locals).map(|(&j, opts)| {
                    let (a, b) = opts[j].1;
                    if side == 0 {
                        a
                    } else {
                        b
                    }
                }))
            };
            Verdict::Fails(Witness::elements(ring, [pick(0), pick(1)]))
        }
    })
}

fn single_search(kind: Kind, i: &Ideal, image: &PhiImage) -> Result<Verdict> {
    let ring = i.ring();
    let required = OUT_PHI | OUT_I;
    let ctxs = contexts(i, image)?;
    let locals = ctxs.iter().map(|c| c.single_locals(kind, required)).collect::<Result<Vec<_>>>()?;
    Ok(match combine(&locals, required) {
        None => Verdict::Holds,
        Some(choice) => {
            let a = Element::new(choice.iter().zip(&locals).map(|(&j, opts)| opts[j].1));
            Verdict::Fails(Witness::elements(ring, [a]))
        }
    })
}

/// `ab ∈ I − φ(I)` with `a` regular implies `b ∈ I`.
pub fn is_phi_r_ideal(i: &Ideal, phi: &Phi, _bound: Bound) -> Result<Verdict> {
    proper(i)?;
    pair_search(Kind::R, i, &phi.apply(i)?)
}

pub fn is_r_ideal(i: &Ideal, bound: Bound) -> Result<Verdict> {
    is_phi_r_ideal(i, &Phi::Empty, bound)
}

pub fn is_weakly_r_ideal(i: &Ideal, bound: Bound) -> Result<Verdict> {
    is_phi_r_ideal(i, &Phi::Zero, bound)
}

/// `ab ∈ I − φ(I)` with `a` regular implies `b ∈ √I`.
pub fn is_phi_pr_ideal(i: &Ideal, phi: &Phi, _bound: Bound) -> Result<Verdict> {
    proper(i)?;
    pair_search(Kind::Pr, i, &phi.apply(i)?)
}

/// Every `a ∈ I − φ(I)` has `b ∈ I` with `a = ab`.
pub fn is_phi_pure(i: &Ideal, phi: &Phi) -> Result<Verdict> {
    proper(i)?;
    single_search(Kind::Pure, i, &phi.apply(i)?)
}

/// Every `a ∈ I − φ(I)` has `b ∈ I` with `a = a²b`.
pub fn is_phi_vnr(i: &Ideal, phi: &Phi) -> Result<Verdict> {
    proper(i)?;
    single_search(Kind::Vnr, i, &phi.apply(i)?)
}

pub fn is_prime(i: &Ideal, bound: Bound) -> Result<Verdict> {
    is_phi_prime(i, &Phi::Empty, bound)
}

/// `ab ∈ I − φ(I)` implies `a ∈ I` or `b ∈ I`.
pub fn is_phi_prime(i: &Ideal, phi: &Phi, _bound: Bound) -> Result<Verdict> {
    proper(i)?;
    pair_search(Kind::Prime, i, &phi.apply(i)?)
}

/// Ideal pairs `X, Y` with `XY ⊆ I`, `XY ⊄ φ(I)` and `Ann(X) = 0` force `Y ⊆ I`.
///
/// Ideals of infinite atoms are enumerated up to `bound.ideals`.
pub fn is_strongly_phi_r(i: &Ideal, phi: &Phi, bound: Bound) -> Result<Verdict> {
    proper(i)?;
    let ring = i.ring();
    let image = phi.apply(i)?;
    let required = OUT_PHI | OUT_I;
    let mut locals: Vec<Vec<(u8, (IdealPart, IdealPart))>> = Vec::new();
    for k in 0..ring.arity() {
        let atom = ring.atom(k);
        let ik = i.part(k);
        let fk = image.ideal().map(|f| f.part(k));
        let zero = IdealPart::zero(atom);
        let parts = IdealPart::enumerate(atom, bound.ideals);
        let faithful: Vec<bool> =
            parts.iter().map(|x| zero.colon_part(atom, x).map(|a| a.is_zero())).collect::<Result<_>>()?;
        let n = parts.len();
        let mut order: Vec<(usize, usize)> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect();
        order.sort_by_key(|&(x, y)| (x.max(y), x, y));
        let mut opts: Vec<(u8, (IdealPart, IdealPart))> = Vec::new();
        for (x, y) in order {
            if !faithful[x] {
                continue;
            }
            let xy = parts[x].product(atom, &parts[y])?;
            if !xy.is_subset(atom, ik) {
                continue;
            }
            let mut m = 0;
            if fk.is_none_or(|f| !xy.is_subset(atom, f)) {
                m |= OUT_PHI;
            }
            if !parts[y].is_subset(atom, ik) {
                m |= OUT_I;
            }
            if !opts.iter().any(|(k, _)| *k == m) {
                opts.push((m, (parts[x].clone(), parts[y].clone())));
            }
            if opts.len() == 4 {
                break;
            }
        }
        locals.push(opts);
    }
    Ok(match combine(&locals, required) {
        None => Verdict::passing(ring.is_finite(), bound.ideals),
        Some(choice) => {
            let side = |s: usize| -> Vec<IdealPart> {
                choice
                    .iter()
                    .zip(&locals)
                    .map(|(&j, opts)| if s == 0 { opts[j].1 .0.clone() } else { opts[j].1 .1.clone() })
                    .collect()
            };
            let x = Ideal::from_parts(ring, side(0));
            let y = Ideal::from_parts(ring, side(1));
            Verdict::Fails(Witness::ideals([x, y]))
        }
    })
}

pub fn is_pure(i: &Ideal) -> Result<Verdict> {
    is_phi_pure(i, &Phi::Empty)
}

pub fn is_vnr_ideal(i: &Ideal) -> Result<Verdict> {
    is_phi_vnr(i, &Phi::Empty)
}

pub fn is_idempotent(i: &Ideal) -> Result<bool> {
    i.is_idempotent()
}

fn atom_has_regular(atom: &Atom, part: &IdealPart) -> bool {
    match (atom, part) {
        (Atom::Z | Atom::LocZ(_), IdealPart::Gen(d)) => *d != 0,
        (Atom::Zn(_), p) => p.is_unit(),
        (Atom::Table(t), IdealPart::Set(s)) => (0..t.size()).any(|x| s[x] && t.is_regular(x as u32)),
        _ => unreachable!("ideal part does not match its atom"),
    }
}

/// `I` contains a regular element.
pub fn is_regular_ideal(i: &Ideal) -> Result<Verdict> {
    let ring = i.ring();
    let ok = (0..ring.arity()).all(|k| atom_has_regular(ring.atom(k), i.part(k)));
    Ok(if ok { Verdict::Holds } else { Verdict::Fails(Witness::ideals([i.clone()])) })
}

/// Every ideal `J` has `b ∈ J` with `Ann(J) = Ann(b)`.
///
/// Principal atoms satisfy this with a generator; tables are checked ideal by ideal.
pub fn satisfies_sac(ring: &Ring) -> Result<Verdict> {
    for k in 0..ring.arity() {
        let atom = ring.atom(k);
        let Atom::Table(t) = atom else { continue };
        let zero = IdealPart::zero(atom);
        for j in IdealPart::enumerate(atom, 0) {
            let ann = zero.colon_part(atom, &j)?;
            let mut found = false;
            for b in (0..t.size() as u32).filter(|&b| j.contains(atom, Value::Idx(b))) {
                if zero.colon_value(atom, Value::Idx(b))? == ann {
                    found = true;
                    break;
                }
            }
            if !found {
                let mut parts: Vec<IdealPart> = ring.atoms().iter().map(IdealPart::zero).collect();
                parts[k] = j;
                return Ok(Verdict::Fails(Witness::ideals([Ideal::from_parts(ring, parts)])));
            }
        }
    }
    Ok(Verdict::Holds)
}

/// Evaluates one class on `I`.
pub fn check(class: &IdealClass, i: &Ideal, bound: Bound) -> Result<Verdict> {
    if class.needs_proper() {
        proper(i)?;
    }
    match class {
        IdealClass::RIdeal => is_r_ideal(i, bound),
        IdealClass::WeaklyR => is_weakly_r_ideal(i, bound),
        IdealClass::PhiR(p) => is_phi_r_ideal(i, p, bound),
        IdealClass::PhiPr(p) => is_phi_pr_ideal(i, p, bound),
        IdealClass::PhiPure(p) => is_phi_pure(i, p),
        IdealClass::PhiVnr(p) => is_phi_vnr(i, p),
        IdealClass::StronglyPhiR(p) => is_strongly_phi_r(i, p, bound),
        IdealClass::Prime => is_prime(i, bound),
        IdealClass::PhiPrime(p) => is_phi_prime(i, p, bound),
        IdealClass::Pure => is_pure(i),
        IdealClass::VnrIdeal => is_vnr_ideal(i),
        IdealClass::Idempotent => Ok(if is_idempotent(i)? {
            Verdict::Holds
        } else {
            Verdict::Fails(Witness::ideals([i.clone()]))
        }),
        IdealClass::RegularIdeal => is_regular_ideal(i),
        IdealClass::Sac => satisfies_sac(i.ring()),
    }
}

/// The classes reported by [`classify`] for the given maps, in report order.
pub fn report_classes(phis: &[Phi]) -> Vec<IdealClass> {
    let mut out = vec![
        IdealClass::RIdeal,
        IdealClass::WeaklyR,
        IdealClass::Prime,
        IdealClass::Pure,
        IdealClass::VnrIdeal,
        IdealClass::Idempotent,
        IdealClass::RegularIdeal,
        IdealClass::Sac,
    ];
    for p in phis {
        out.extend([
            IdealClass::PhiR(p.clone()),
            IdealClass::PhiPr(p.clone()),
            IdealClass::PhiPure(p.clone()),
            IdealClass::PhiVnr(p.clone()),
            IdealClass::StronglyPhiR(p.clone()),
            IdealClass::PhiPrime(p.clone()),
        ]);
    }
    out
}

#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub ring: String,
    pub ideal: Ideal,
    pub bound: Bound,
    pub results: Vec<(IdealClass, Verdict)>,
}

impl ClassificationReport {
    pub fn get(&self, class: &IdealClass) -> Option<&Verdict> {
        self.results.iter().find(|(c, _)| c == class).map(|(_, v)| v)
    }
}

pub fn classify(i: &Ideal, phis: &[Phi], bound: Bound) -> Result<ClassificationReport> {
    proper(i)?;
    let results = report_classes(phis)
        .into_iter()
        .map(|c| {
            let v = check(&c, i, bound)?;
            Ok((c, v))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassificationReport {
        ring: i.ring().to_string(),
        ideal: i.clone(),
        bound,
        results,
    })
}

fn element_at(w: &Witness, k: usize) -> Result<&Element> {
    w.element(k).ok_or_else(|| Error::Semantic("witness has the wrong shape".into()))
}

fn ideal_at(w: &Witness, k: usize) -> Result<&Ideal> {
    w.ideal(k).ok_or_else(|| Error::Semantic("witness has the wrong shape".into()))
}

/// Has no `b ∈ I` with `a = a^e b` (`e` is 1 for pure, 2 for vNr).
fn lacks_partner(i: &Ideal, a: &Element, e: u32) -> Result<bool> {
    let ring = i.ring();
    let ae = ring.pow(a, e);
    if ring.is_finite() {
        return Ok(!i.elements()?.iter().any(|b| ring.mul(&ae, b) == *a));
    }
    // a = a^e b is solvable in I iff a^(e-1) I + Ann(a) is the whole ring
    let base = Ideal::principal(ring, &ring.pow(a, e - 1))?.product(i)?;
    Ok(base.sum(&annihilator_of(ring, a)?)?.is_proper())
}

/// Replays a Fails witness against the definition of `class`, using whole-ring
/// arithmetic only.
pub fn revalidate(class: &IdealClass, i: &Ideal, w: &Witness) -> Result<bool> {
    let ring = i.ring();
    let image = match class.phi() {
        Some(p) => p.apply(i)?,
        None => match class {
            IdealClass::WeaklyR => PhiImage::Ideal(Ideal::zero(ring)),
            _ => PhiImage::Empty,
        },
    };
    let pair = || -> Result<(Element, Element, Element)> {
        let a = element_at(w, 0)?.clone();
        let b = element_at(w, 1)?.clone();
        ring.check_element(&a)?;
        ring.check_element(&b)?;
        let ab = ring.mul(&a, &b);
        Ok((a, b, ab))
    };
    Ok(match class {
        IdealClass::RIdeal | IdealClass::WeaklyR | IdealClass::PhiR(_) => {
            let (a, b, ab) = pair()?;
            ring.is_regular(&a) && i.has(&ab) && !image.has(&ab) && !i.has(&b)
        }
        IdealClass::PhiPr(_) => {
            let (a, b, ab) = pair()?;
            ring.is_regular(&a) && i.has(&ab) && !image.has(&ab) && !i.radical()?.has(&b)
        }
        IdealClass::Prime | IdealClass::PhiPrime(_) => {
            let (a, b, ab) = pair()?;
            i.has(&ab) && !image.has(&ab) && !i.has(&a) && !i.has(&b)
        }
        IdealClass::Pure | IdealClass::PhiPure(_) | IdealClass::VnrIdeal | IdealClass::PhiVnr(_) => {
            let a = element_at(w, 0)?;
            ring.check_element(a)?;
            let e = if matches!(class, IdealClass::Pure | IdealClass::PhiPure(_)) { 1 } else { 2 };
            i.has(a) && !image.has(a) && lacks_partner(i, a, e)?
        }
        IdealClass::StronglyPhiR(_) => {
            let x = ideal_at(w, 0)?;
            let y = ideal_at(w, 1)?;
            let xy = x.product(y)?;
            let outside = match image.ideal() {
                None => true,
                Some(f) => !xy.is_subset(f)?,
            };
            x.annihilator()?.is_zero() && xy.is_subset(i)? && outside && !y.is_subset(i)?
        }
        IdealClass::Idempotent => !i.is_idempotent()?,
        IdealClass::RegularIdeal => {
            let j = ideal_at(w, 0)?;
            j == i && {
                if ring.is_finite() {
                    !i.elements()?.iter().any(|b| ring.is_regular(b))
                } else {
                    !i.bounded_elements(50).iter().any(|b| ring.is_regular(b))
                }
            }
        }
        IdealClass::Sac => {
            let j = ideal_at(w, 0)?;
            let ann = j.annihilator()?;
            let k = (0..ring.arity()).find(|&k| !j.part(k).is_zero());
            match k {
                None => false,
                Some(k) => {
                    let comp = j.component(k);
                    let cr = comp.ring().clone();
                    let ann_k = ann.component(k);
                    !comp.elements()?.iter().any(|b| annihilator_of(&cr, b).map(|a| a == ann_k).unwrap_or(false))
                }
            }
        }
    })
}

#[cfg(test)]
mod tests;
