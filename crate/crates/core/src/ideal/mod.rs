//! Ideals with decidable membership and canonical forms.
//!
//! An ideal of a product ring is a product of per-atom ideals. Principal
//! atoms (`Z`, `Z/n`, `Z[1/S]`) store one canonical generator; table atoms
//! store the explicit element set.

mod part;

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::ring::{Atom, Element, IdealSpec, Ring, Value};

pub use part::IdealPart;

#[derive(Debug, Clone)]
pub struct Ideal {
    ring: Ring,
    parts: Vec<IdealPart>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.parts == other.parts && self.ring == other.ring
    }
}

impl Eq for Ideal {}

impl Hash for Ideal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.parts.hash(state);
    }
}

impl Ideal {
    /// Wraps already canonical parts.
    pub fn from_parts(ring: &Ring, parts: Vec<IdealPart>) -> Ideal {
        debug_assert_eq!(parts.len(), ring.arity());
        Ideal {
            ring: ring.clone(),
            parts,
        }
    }

    pub fn zero(ring: &Ring) -> Ideal {
        let parts = ring.atoms().iter().map(IdealPart::zero).collect();
        Ideal::from_parts(ring, parts)
    }

    pub fn unit(ring: &Ring) -> Ideal {
        let parts = ring.atoms().iter().map(IdealPart::unit).collect();
        Ideal::from_parts(ring, parts)
    }

    /// The smallest ideal containing `gens`.
    pub fn from_generators(ring: &Ring, gens: &[Element]) -> Result<Ideal> {
        for g in gens {
            ring.check_element(g)?;
        }
        let parts = ring
            .atoms()
            .iter()
            .enumerate()
            .map(|(i, atom)| {
                let vals: Vec<Value> = gens.iter().map(|g| g.get(i)).collect();
                IdealPart::generated(atom, &vals)
            })
            .collect();
        Ok(Ideal::from_parts(ring, parts))
    }

    pub fn principal(ring: &Ring, a: &Element) -> Result<Ideal> {
        Ideal::from_generators(ring, std::slice::from_ref(a))
    }

    /// Builds a table-free ideal from one integer generator per atom.
    pub fn from_ints(ring: &Ring, gens: &[i128]) -> Result<Ideal> {
        let e = ring.element(gens)?;
        Ideal::principal(ring, &e)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn parts(&self) -> &[IdealPart] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> &IdealPart {
        &self.parts[i]
    }

    fn same_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn zip(&self, other: &Ideal, f: impl Fn(&Atom, &IdealPart, &IdealPart) -> Result<IdealPart>) -> Result<Ideal> {
        self.same_ring(other)?;
        let parts = self
            .ring
            .atoms()
            .iter()
            .zip(self.parts.iter().zip(other.parts.iter()))
            .map(|(atom, (a, b))| f(atom, a, b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::from_parts(&self.ring, parts))
    }

    fn map(&self, f: impl Fn(&Atom, &IdealPart) -> Result<IdealPart>) -> Result<Ideal> {
        let parts = self
            .ring
            .atoms()
            .iter()
            .zip(self.parts.iter())
            .map(|(atom, p)| f(atom, p))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::from_parts(&self.ring, parts))
    }

    /// Membership, without validating that `a` is an element of the ring.
    pub fn has(&self, a: &Element) -> bool {
        self.ring
            .atoms()
            .iter()
            .zip(self.parts.iter())
            .enumerate()
            .all(|(i, (atom, p))| p.contains(atom, a.get(i)))
    }

    pub fn contains(&self, a: &Element) -> Result<bool> {
        self.ring.check_element(a).map_err(|_| Error::RingMismatch)?;
        Ok(self.has(a))
    }

    pub fn is_proper(&self) -> bool {
        self.parts.iter().any(|p| !p.is_unit())
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(IdealPart::is_zero)
    }

    pub fn is_subset(&self, other: &Ideal) -> Result<bool> {
        self.same_ring(other)?;
        Ok(self
            .ring
            .atoms()
            .iter()
            .zip(self.parts.iter().zip(other.parts.iter()))
            .all(|(atom, (a, b))| a.is_subset(atom, b)))
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.zip(other, |atom, a, b| a.sum(atom, b))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.zip(other, |atom, a, b| a.product(atom, b))
    }

    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.zip(other, |atom, a, b| a.intersection(atom, b))
    }

    /// `I^n` for `n >= 1`; `I^0` is the unit ideal.
    pub fn power(&self, n: u32) -> Result<Ideal> {
        if n == 0 {
            return Ok(Ideal::unit(&self.ring));
        }
        self.map(|atom, p| p.power(atom, n))
    }

    /// The intersection of all powers of the ideal.
    pub fn omega_power(&self) -> Result<Ideal> {
        self.map(|atom, p| p.omega(atom))
    }

    pub fn radical(&self) -> Result<Ideal> {
        self.map(|atom, p| p.radical(atom))
    }

    /// `(I : x) = { r : r x in I }`.
    pub fn colon_element(&self, x: &Element) -> Result<Ideal> {
        self.ring.check_element(x).map_err(|_| Error::RingMismatch)?;
        let parts = self
            .ring
            .atoms()
            .iter()
            .zip(self.parts.iter())
            .enumerate()
            .map(|(i, (atom, p))| p.colon_value(atom, x.get(i)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::from_parts(&self.ring, parts))
    }

    /// `(I : J) = { r : r J subset I }`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.zip(other, |atom, a, b| a.colon_part(atom, b))
    }

    pub fn annihilator(&self) -> Result<Ideal> {
        Ideal::zero(&self.ring).colon(self)
    }

    pub fn is_idempotent(&self) -> Result<bool> {
        Ok(self.power(2)? == *self)
    }

    /// Elements of a finite ideal in ring order.
    pub fn elements(&self) -> Result<Vec<Element>> {
        Ok(self.ring.elements()?.into_iter().filter(|e| self.has(e)).collect())
    }

    /// Elements of the ideal inside the bounded search window, in search order.
    pub fn bounded_elements(&self, bound: u64) -> Vec<Element> {
        self.ring.bounded_elements(bound).into_iter().filter(|e| self.has(e)).collect()
    }

    /// The `i`-th component as an ideal of the `i`-th factor ring.
    pub fn component(&self, i: usize) -> Ideal {
        Ideal::from_parts(&self.ring.component(i), vec![self.parts[i].clone()])
    }

    /// Product of component ideals, one per atom of `ring`.
    pub fn from_components(ring: &Ring, comps: &[Ideal]) -> Result<Ideal> {
        if comps.len() != ring.arity() {
            return Err(Error::RingMismatch);
        }
        let mut parts = Vec::with_capacity(comps.len());
        for (i, c) in comps.iter().enumerate() {
            if c.ring.arity() != 1 || c.ring.atom(0) != ring.atom(i) {
                return Err(Error::RingMismatch);
            }
            parts.push(c.parts[0].clone());
        }
        Ok(Ideal::from_parts(ring, parts))
    }

    /// A short generating list.
    pub fn generators(&self) -> Vec<Element> {
        let zero = self.ring.zero();
        let atoms = self.ring.atoms();
        if atoms.iter().all(Atom::is_principal) {
            let vals = atoms.iter().zip(self.parts.iter()).map(|(a, p)| p.generator_value(a));
            let g = Element::new(vals);
            return if g == zero { Vec::new() } else { vec![g] };
        }
        let mut out = Vec::new();
        for (i, (atom, p)) in atoms.iter().zip(self.parts.iter()).enumerate() {
            for v in p.generator_values(atom) {
                out.push(self.ring.with_component(&zero, i, v));
            }
        }
        out
    }

    pub fn to_spec(&self) -> IdealSpec {
        IdealSpec {
            generators: self.generators().iter().map(|g| self.ring.element_slots(g)).collect(),
        }
    }

    /// Recognizes the shape `J(+)N` inside an idealization ring.
    pub fn as_idealization_pair(&self) -> Option<(Ideal, Ideal)> {
        self.ring.idealization()?.recognize_pair(self)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .ring
            .atoms()
            .iter()
            .zip(self.parts.iter())
            .map(|(atom, p)| p.display(atom))
            .collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// Result of enumerating the ideal lattice.
#[derive(Debug, Clone)]
pub struct IdealEnumeration {
    pub ideals: Vec<Ideal>,
    /// False when an infinite atom was truncated at the bound.
    pub complete: bool,
    pub bound: Option<u64>,
}

impl IdealEnumeration {
    pub fn proper(&self) -> impl Iterator<Item = &Ideal> {
        self.ideals.iter().filter(|i| i.is_proper())
    }
}

/// All ideals of a finite ring, or all ideals with generators of magnitude at
/// most `bound` on each infinite atom.
pub fn enumerate_ideals(ring: &Ring, bound: Option<u64>) -> Result<IdealEnumeration> {
    let complete = ring.is_finite();
    if !complete && bound.is_none() {
        return Err(Error::UnboundedEnumeration);
    }
    let per_atom: Vec<Vec<IdealPart>> = ring
        .atoms()
        .iter()
        .map(|a| IdealPart::enumerate(a, bound.unwrap_or(0)))
        .collect();
    let mut out: Vec<Vec<IdealPart>> = vec![Vec::new()];
    for parts in &per_atom {
        let mut next = Vec::with_capacity(out.len() * parts.len());
        for prefix in &out {
            for p in parts {
                let mut v = prefix.clone();
                v.push(p.clone());
                next.push(v);
            }
        }
        out = next;
    }
    Ok(IdealEnumeration {
        ideals: out.into_iter().map(|parts| Ideal::from_parts(ring, parts)).collect(),
        complete,
        bound: if complete { None } else { bound },
    })
}

/// `Ann(x) = (0 : x)`.
pub fn annihilator_of(ring: &Ring, x: &Element) -> Result<Ideal> {
    Ideal::zero(ring).colon_element(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::make_product;

    fn zn(n: i128) -> Ring {
        Ring::zn(n).unwrap()
    }

    fn gen(r: &Ring, g: &[i128]) -> Ideal {
        Ideal::from_ints(r, g).unwrap()
    }

    #[test]
    fn generator_examples() {
        let z = Ring::z();
        let i = Ideal::from_generators(&z, &[z.from_int(4), z.from_int(6)]).unwrap();
        assert_eq!(i, gen(&z, &[2]));
        assert_eq!(gen(&zn(12), &[8]), gen(&zn(12), &[4]));
        assert_eq!(Ideal::from_generators(&zn(12), &[]).unwrap(), Ideal::zero(&zn(12)));
    }

    #[test]
    fn membership_examples() {
        let r = zn(12);
        assert!(gen(&r, &[4]).contains(&r.from_int(8)).unwrap());
        assert!(!gen(&Ring::z(), &[4]).contains(&Ring::z().from_int(2)).unwrap());
        let p = make_product(&[Ring::z(), zn(4)]).unwrap();
        let i = gen(&p, &[0, 2]);
        assert!(i.contains(&p.element(&[0, 2]).unwrap()).unwrap());
        assert_eq!(i.contains(&Ring::z().zero()), Err(Error::RingMismatch));
    }

    #[test]
    fn power_examples() {
        let z = Ring::z();
        assert_eq!(gen(&z, &[2]).power(2).unwrap(), gen(&z, &[4]));
        assert_eq!(gen(&zn(12), &[2]).power(3).unwrap(), gen(&zn(12), &[4]));
        assert_eq!(gen(&zn(6), &[3]).power(2).unwrap(), gen(&zn(6), &[3]));
    }

    #[test]
    fn omega_examples() {
        assert_eq!(gen(&Ring::z(), &[2]).omega_power().unwrap(), Ideal::zero(&Ring::z()));
        assert_eq!(gen(&zn(12), &[2]).omega_power().unwrap(), gen(&zn(12), &[4]));
        assert_eq!(gen(&zn(6), &[3]).omega_power().unwrap(), gen(&zn(6), &[3]));
    }

    #[test]
    fn radical_examples() {
        assert_eq!(gen(&zn(12), &[4]).radical().unwrap(), gen(&zn(12), &[2]));
        assert_eq!(gen(&Ring::z(), &[12]).radical().unwrap(), gen(&Ring::z(), &[6]));
        assert_eq!(Ideal::zero(&Ring::z()).radical().unwrap(), Ideal::zero(&Ring::z()));
    }

    #[test]
    fn colon_examples() {
        let r = zn(12);
        assert_eq!(gen(&r, &[4]).colon_element(&r.from_int(2)).unwrap(), gen(&r, &[2]));
        assert_eq!(annihilator_of(&r, &r.from_int(2)).unwrap(), gen(&r, &[6]));
        assert_eq!(annihilator_of(&r, &r.from_int(5)).unwrap(), Ideal::zero(&r));
    }

    #[test]
    fn enumeration_examples() {
        let e = enumerate_ideals(&zn(12), None).unwrap();
        let shown: Vec<String> = e.ideals.iter().map(|i| i.to_string()).collect();
        assert_eq!(shown, ["<0>", "<1>", "<2>", "<3>", "<4>", "<6>"]);
        let p = make_product(&[zn(2), zn(2)]).unwrap();
        assert_eq!(enumerate_ideals(&p, None).unwrap().ideals.len(), 4);
        let z = enumerate_ideals(&Ring::z(), Some(3)).unwrap();
        assert!(!z.complete);
        let shown: Vec<String> = z.ideals.iter().map(|i| i.to_string()).collect();
        assert_eq!(shown, ["<0>", "<1>", "<2>", "<3>"]);
        assert!(matches!(enumerate_ideals(&Ring::z(), None), Err(Error::UnboundedEnumeration)));
    }

    #[test]
    fn properness_and_display() {
        let p = make_product(&[Ring::z(), zn(4)]).unwrap();
        let i = gen(&p, &[1, 2]);
        assert!(i.is_proper());
        assert_eq!(i.to_string(), "<1> x <2>");
        assert!(!Ideal::unit(&p).is_proper());
    }
}
