use std::sync::Arc;

use super::{Atom, Element, LocData, Ring, Value};
use crate::error::{Error, Result};
use crate::ideal::{Ideal, IdealPart};

/// The canonical map `R -> S^-1 R` for a finitely generated set `S` of
/// regular elements.
#[derive(Debug, Clone)]
pub struct LocalizationMap {
    source: Ring,
    target: Ring,
    denominators: Vec<Element>,
}

/// Builds `S^-1 R` where `S` is generated by `gens`. Integer atoms become
/// `Z[1/S]`; on finite atoms every regular element is a unit, so they stay.
pub fn make_localization(ring: &Ring, gens: &[Element]) -> Result<(Ring, LocalizationMap)> {
    for g in gens {
        ring.check_element(g)?;
        if !ring.is_regular(g) {
            return Err(Error::NonRegularDenominator(ring.format_element(g)));
        }
    }
    let atoms = ring
        .atoms()
        .iter()
        .enumerate()
        .map(|(i, atom)| {
            let nums: Vec<i128> = gens.iter().map(|g| g.get(i).int()).collect();
            let merged = match atom {
                Atom::Z => nums,
                Atom::LocZ(l) => l.gens.iter().copied().chain(nums).collect(),
                _ => return Ok(atom.clone()),
            };
            let data = LocData::new(&merged)?;
            Ok(if data.primes.is_empty() {
                Atom::Z
            } else {
                Atom::LocZ(Arc::new(data))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let target = Ring::from_atoms(atoms)?;
    let map = LocalizationMap {
        source: ring.clone(),
        target: target.clone(),
        denominators: gens.to_vec(),
    };
    Ok((target, map))
}

impl LocalizationMap {
    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn denominators(&self) -> &[Element] {
        &self.denominators
    }

    /// `r -> r/1`.
    pub fn map(&self, a: &Element) -> Element {
        Element::new(self.target.atoms().iter().enumerate().map(|(i, atom)| match (atom, a.get(i)) {
            (Atom::LocZ(_), Value::Int(x)) => Value::Frac(x, 1),
            (_, v) => v,
        }))
    }

    /// `J -> S^-1 J`.
    pub fn extend(&self, j: &Ideal) -> Result<Ideal> {
        if j.ring() != &self.source {
            return Err(Error::RingMismatch);
        }
        let parts = self
            .target
            .atoms()
            .iter()
            .zip(j.parts())
            .map(|(atom, p)| match p {
                IdealPart::Gen(d) => IdealPart::canonical(atom, *d),
                IdealPart::Set(_) => p.clone(),
            })
            .collect();
        Ok(Ideal::from_parts(&self.target, parts))
    }

    /// `K -> K ∩ R`, the preimage under the canonical map.
    pub fn contract(&self, k: &Ideal) -> Result<Ideal> {
        if k.ring() != &self.target {
            return Err(Error::RingMismatch);
        }
        // canonical generators of S^-1 R are free of the inverted primes,
        // so they generate the contraction as well
        let parts = self
            .source
            .atoms()
            .iter()
            .zip(k.parts())
            .map(|(atom, p)| match p {
                IdealPart::Gen(d) => IdealPart::canonical(atom, *d),
                IdealPart::Set(_) => p.clone(),
            })
            .collect();
        Ok(Ideal::from_parts(&self.source, parts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::make_product;

    #[test]
    fn localize_integers() {
        let z = Ring::z();
        let (r, map) = make_localization(&z, &[z.from_int(2)]).unwrap();
        assert_eq!(r, Ring::loc_z(&[2]).unwrap());
        let three = Ideal::from_ints(&z, &[3]).unwrap();
        let ext = map.extend(&three).unwrap();
        assert_eq!(ext, Ideal::from_ints(&r, &[3]).unwrap());
        assert_eq!(map.contract(&ext).unwrap(), three);
        let (r6, map6) = make_localization(&z, &[z.from_int(6)]).unwrap();
        let four = Ideal::from_ints(&z, &[4]).unwrap();
        assert_eq!(map6.extend(&four).unwrap(), Ideal::unit(&r6));
    }

    #[test]
    fn localize_at_units_is_identity() {
        let r = Ring::zn(12).unwrap();
        let (l, _) = make_localization(&r, &[r.from_int(5)]).unwrap();
        assert_eq!(l, r);
        assert!(matches!(
            make_localization(&r, &[r.from_int(2)]),
            Err(Error::NonRegularDenominator(_))
        ));
    }

    #[test]
    fn localize_products() {
        let p = make_product(&[Ring::z(), Ring::zn(4).unwrap()]).unwrap();
        let (l, map) = make_localization(&p, &[p.from_int(3)]).unwrap();
        assert_eq!(l.to_string(), "loc(Z,{3}) x Z/4");
        assert_eq!(map.map(&p.element(&[5, 1]).unwrap()), l.element(&[5, 1]).unwrap());
    }
}
