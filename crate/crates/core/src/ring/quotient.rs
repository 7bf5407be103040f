use std::sync::Arc;

use super::{Atom, Element, Ring, RingSpec, TableOrigin, TableRing, Value};
use crate::arith;
use crate::error::{Error, Result};
use crate::ideal::{Ideal, IdealPart};

/// Coset data of a materialized quotient of a table atom.
#[derive(Debug, Clone)]
pub struct QuotientData {
    source: Ring,
    class_of: Vec<u32>,
    reps: Vec<u32>,
}

impl QuotientData {
    /// The single-atom ring the cosets live in.
    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn project_value(&self, v: Value) -> Value {
        Value::Idx(self.class_of[v.idx()])
    }

    /// Surface slots of the smallest representative of a coset.
    pub fn rep_slots(&self, c: u32) -> Vec<i128> {
        let rep = Element::new([Value::Idx(self.reps[c as usize])]);
        self.source.element_slots(&rep)
    }
}

#[derive(Debug, Clone)]
enum Comp {
    Dropped,
    Identity,
    Reduce(i128),
    Table(Arc<TableRing>),
}

/// The canonical surjection `R -> R/I`.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    source: Ring,
    target: Ring,
    kernel: Ideal,
    comps: Vec<Comp>,
}

fn quotient_data(t: &TableRing) -> &QuotientData {
    match t.origin() {
        TableOrigin::Quotient(q) => q,
        _ => unreachable!("quotient component without coset data"),
    }
}

fn reduce_value(v: Value, d: i128) -> Value {
    match v {
        Value::Int(x) => Value::Int(arith::modulo(x, d)),
        Value::Frac(p, q) => {
            let inv = arith::mod_inverse(q, d).expect("denominator is a unit modulo d");
            Value::Int(arith::modulo(arith::modulo(p, d) * inv, d))
        }
        Value::Idx(_) => unreachable!(),
    }
}

fn table_quotient(source: &Ring, set: &[bool]) -> Result<TableRing> {
    let t = match source.atom(0) {
        Atom::Table(t) => t.clone(),
        _ => unreachable!(),
    };
    let n = t.size() as u32;
    let mut class_of = vec![u32::MAX; n as usize];
    let mut reps = Vec::new();
    for x in 0..n {
        if class_of[x as usize] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(x);
        for y in 0..n {
            if set[t.add(y, t.neg(x)) as usize] {
                class_of[y as usize] = c;
            }
        }
    }
    let k = reps.len();
    let mut add = vec![0u32; k * k];
    let mut mul = vec![0u32; k * k];
    for a in 0..k {
        for b in 0..k {
            add[a * k + b] = class_of[t.add(reps[a], reps[b]) as usize];
            mul[a * k + b] = class_of[t.mul(reps[a], reps[b]) as usize];
        }
    }
    let labels = reps.iter().map(|&r| source.atom(0).format_value(Value::Idx(r))).collect();
    let ideal = Ideal::from_parts(source, vec![IdealPart::from_set(set.to_vec())]);
    let spec = RingSpec::Quotient(Box::new(source.spec()), ideal.to_spec());
    let zero = class_of[t.zero() as usize] as usize;
    let one = class_of[t.one() as usize] as usize;
    let data = QuotientData {
        source: source.clone(),
        class_of,
        reps,
    };
    TableRing::from_tables(k, add, mul, zero, one, labels, spec, TableOrigin::Quotient(Box::new(data)))
}

/// Builds `R/I` with its canonical surjection. Principal atoms reduce to
/// `Z/d`; table atoms are materialized on cosets; unit components vanish.
pub fn make_quotient(ring: &Ring, ideal: &Ideal) -> Result<(Ring, QuotientMap)> {
    if ideal.ring() != ring {
        return Err(Error::RingMismatch);
    }
    if !ideal.is_proper() {
        return Err(Error::ImproperIdeal);
    }
    let mut atoms = Vec::new();
    let mut comps = Vec::new();
    for (i, (atom, part)) in ring.atoms().iter().zip(ideal.parts()).enumerate() {
        if part.is_unit() {
            comps.push(Comp::Dropped);
        } else if part.is_zero() {
            comps.push(Comp::Identity);
            atoms.push(atom.clone());
        } else {
            match (atom, part) {
                (Atom::Table(_), IdealPart::Set(set)) => {
                    let q = Arc::new(table_quotient(&ring.component(i), set)?);
                    atoms.push(Atom::Table(q.clone()));
                    comps.push(Comp::Table(q));
                }
                (_, IdealPart::Gen(d)) => {
                    atoms.push(Atom::Zn(*d));
                    comps.push(Comp::Reduce(*d));
                }
                _ => unreachable!(),
            }
        }
    }
    let target = Ring::from_atoms(atoms)?;
    let map = QuotientMap {
        source: ring.clone(),
        target: target.clone(),
        kernel: ideal.clone(),
        comps,
    };
    Ok((target, map))
}

impl QuotientMap {
    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn kernel(&self) -> &Ideal {
        &self.kernel
    }

    pub fn project(&self, a: &Element) -> Element {
        Element::new(self.comps.iter().enumerate().filter_map(|(i, c)| {
            let v = a.get(i);
            match c {
                Comp::Dropped => None,
                Comp::Identity => Some(v),
                Comp::Reduce(d) => Some(reduce_value(v, *d)),
                Comp::Table(t) => Some(quotient_data(t).project_value(v)),
            }
        }))
    }

    /// The image `(J + I)/I`.
    pub fn project_ideal(&self, j: &Ideal) -> Result<Ideal> {
        if j.ring() != &self.source {
            return Err(Error::RingMismatch);
        }
        let mut parts = Vec::new();
        let mut k = 0;
        for (i, c) in self.comps.iter().enumerate() {
            let part = j.part(i);
            let image = match c {
                Comp::Dropped => continue,
                Comp::Identity => part.clone(),
                Comp::Reduce(d) => {
                    let e = match part {
                        IdealPart::Gen(e) => *e,
                        IdealPart::Set(_) => unreachable!(),
                    };
                    IdealPart::canonical(self.target.atom(k), arith::gcd(e, *d))
                }
                Comp::Table(t) => {
                    let q = quotient_data(t);
                    let mut set = vec![false; t.size()];
                    let src = match self.source.atom(i) {
                        Atom::Table(s) => s.size(),
                        _ => unreachable!(),
                    };
                    for x in 0..src as u32 {
                        if part.contains(self.source.atom(i), Value::Idx(x)) {
                            set[q.project_value(Value::Idx(x)).idx()] = true;
                        }
                    }
                    IdealPart::from_set(set)
                }
            };
            parts.push(image);
            k += 1;
        }
        Ok(Ideal::from_parts(&self.target, parts))
    }

    /// The preimage of an ideal of the quotient.
    pub fn lift_ideal(&self, k: &Ideal) -> Result<Ideal> {
        if k.ring() != &self.target {
            return Err(Error::RingMismatch);
        }
        let mut parts = Vec::new();
        let mut at = 0;
        for (i, c) in self.comps.iter().enumerate() {
            let atom = self.source.atom(i);
            let lifted = match c {
                Comp::Dropped => {
                    parts.push(IdealPart::unit(atom));
                    continue;
                }
                Comp::Identity => k.part(at).clone(),
                Comp::Reduce(d) => match k.part(at) {
                    IdealPart::Gen(0) => IdealPart::canonical(atom, *d),
                    IdealPart::Gen(e) => IdealPart::canonical(atom, *e),
                    IdealPart::Set(_) => unreachable!(),
                },
                Comp::Table(t) => {
                    let q = quotient_data(t);
                    let target_part = k.part(at);
                    IdealPart::from_set(
                        (0..q.class_of.len() as u32)
                            .map(|x| target_part.contains(self.target.atom(at), q.project_value(Value::Idx(x))))
                            .collect(),
                    )
                }
            };
            parts.push(lifted);
            at += 1;
        }
        Ok(Ideal::from_parts(&self.source, parts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_idealization, make_product, Module};

    #[test]
    fn principal_quotients() {
        let z = Ring::z();
        let (q, _) = make_quotient(&z, &Ideal::from_ints(&z, &[12]).unwrap()).unwrap();
        assert_eq!(q, Ring::zn(12).unwrap());
        let z12 = Ring::zn(12).unwrap();
        let (q, _) = make_quotient(&z12, &Ideal::from_ints(&z12, &[4]).unwrap()).unwrap();
        assert_eq!(q, Ring::zn(4).unwrap());
        let p = make_product(&[Ring::z(), Ring::zn(4).unwrap()]).unwrap();
        let (q, _) = make_quotient(&p, &Ideal::from_ints(&p, &[2, 2]).unwrap()).unwrap();
        assert_eq!(q, make_product(&[Ring::zn(2).unwrap(), Ring::zn(2).unwrap()]).unwrap());
        assert_eq!(make_quotient(&z, &Ideal::unit(&z)).unwrap_err(), Error::ImproperIdeal);
    }

    #[test]
    fn unit_components_are_dropped() {
        let p = make_product(&[Ring::z(), Ring::zn(4).unwrap()]).unwrap();
        let i = Ideal::from_ints(&p, &[1, 2]).unwrap();
        let (q, map) = make_quotient(&p, &i).unwrap();
        assert_eq!(q, Ring::zn(2).unwrap());
        assert_eq!(map.project(&p.element(&[7, 3]).unwrap()), q.from_int(1));
        let back = map.lift_ideal(&Ideal::zero(&q)).unwrap();
        assert_eq!(back, i);
    }

    #[test]
    fn project_and_lift_round_trip() {
        let r = Ring::zn(12).unwrap();
        let i = Ideal::from_ints(&r, &[4]).unwrap();
        let (q, map) = make_quotient(&r, &i).unwrap();
        let j = Ideal::from_ints(&r, &[2]).unwrap();
        let image = map.project_ideal(&j).unwrap();
        assert_eq!(image, Ideal::from_ints(&q, &[2]).unwrap());
        assert_eq!(map.lift_ideal(&image).unwrap(), j);
    }

    #[test]
    fn localized_atoms_reduce() {
        let r = Ring::loc_z(&[2]).unwrap();
        let i = Ideal::from_ints(&r, &[3]).unwrap();
        let (q, map) = make_quotient(&r, &i).unwrap();
        assert_eq!(q, Ring::zn(3).unwrap());
        // 1/2 = 2 mod 3
        let half = Element::new([Value::Frac(1, 2)]);
        assert_eq!(map.project(&half), q.from_int(2));
    }

    #[test]
    fn table_quotients_are_materialized() {
        let r = make_idealization(&Ring::zn(2).unwrap(), Module::Regular).unwrap();
        let m = r.element(&[0, 1]).unwrap();
        let i = Ideal::principal(&r, &m).unwrap();
        let (q, map) = make_quotient(&r, &i).unwrap();
        assert_eq!(q.size(), Some(2));
        assert_eq!(map.project(&m), q.zero());
        assert_eq!(map.lift_ideal(&Ideal::zero(&q)).unwrap(), i);
        assert_eq!(q.to_string(), "quot(idealize(Z/2),gen (0,1))");
    }
}
