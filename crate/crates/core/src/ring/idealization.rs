use std::collections::HashMap;
use std::sync::Arc;

use super::{Atom, Element, ModuleSpec, Ring, RingSpec, TableOrigin, TableRing, Value};
use crate::error::{Error, Result};
use crate::ideal::{Ideal, IdealPart};

/// The module `M` of `R(+)M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Module {
    /// `M = R`.
    Regular,
    /// `M = R/J`.
    Quotient(Ideal),
}

impl Module {
    pub fn spec(&self) -> ModuleSpec {
        match self {
            Module::Regular => ModuleSpec::Regular,
            Module::Quotient(j) => ModuleSpec::Quotient(j.to_spec()),
        }
    }
}

/// Structure of a materialized idealization. Element `k` of the table is the
/// pair `(r, m)` with `r = k / |M|` and `m = k % |M|`.
#[derive(Debug, Clone)]
pub struct IdealizationData {
    base: Ring,
    base_elements: Vec<Element>,
    index: HashMap<Element, usize>,
    module: Module,
    /// Smallest base element of each coset of `M`.
    module_reps: Vec<usize>,
    /// Base element index to module index.
    coset_of: Vec<usize>,
}

impl IdealizationData {
    pub fn base(&self) -> &Ring {
        &self.base
    }

    pub fn module(&self) -> &Module {
        &self.module
    }

    pub fn module_size(&self) -> usize {
        self.module_reps.len()
    }

    pub fn base_elements(&self) -> &[Element] {
        &self.base_elements
    }

    fn split(&self, k: u32) -> (usize, usize) {
        let m = self.module_size();
        (k as usize / m, k as usize % m)
    }

    fn join(&self, r: usize, m: usize) -> u32 {
        (r * self.module_size() + m) as u32
    }

    /// The pair `(r, m)` as base elements, `m` given by its representative.
    pub fn components(&self, a: &Element) -> (Element, Element) {
        let (r, m) = self.split(a.get(0).idx() as u32);
        (self.base_elements[r].clone(), self.base_elements[self.module_reps[m]].clone())
    }

    /// `(r, m)` with `m` read modulo the module's kernel.
    pub fn pair(&self, r: &Element, m: &Element) -> Result<Element> {
        let ri = *self.index.get(r).ok_or_else(|| Error::ElementNotInRing(format!("{r:?}")))?;
        let mi = *self.index.get(m).ok_or_else(|| Error::ElementNotInRing(format!("{m:?}")))?;
        Ok(Element::new([Value::Idx(self.join(ri, self.coset_of[mi]))]))
    }

    /// `a -> (a, 0)`.
    pub fn embed(&self, r: &Element) -> Result<Element> {
        self.pair(r, &self.base.zero())
    }

    pub fn value_from_slots(&self, slots: &[i128]) -> Result<Value> {
        let half = self.base.slots();
        let r = self.base.element(&slots[..half])?;
        let m = self.base.element(&slots[half..])?;
        Ok(self.pair(&r, &m)?.get(0))
    }

    pub fn value_slots(&self, k: u32) -> Vec<i128> {
        let (r, m) = self.split(k);
        let mut out = self.base.element_slots(&self.base_elements[r]);
        out.extend(self.base.element_slots(&self.base_elements[self.module_reps[m]]));
        out
    }

    /// `z(M) = { r : rm = 0 for some m != 0 }`, indexed like the base elements.
    pub fn module_zerodivisors(&self) -> Vec<bool> {
        let zero_m = self.coset_of[self.index[&self.base.zero()]];
        (0..self.base_elements.len())
            .map(|r| {
                (0..self.module_size()).any(|m| {
                    m != zero_m && {
                        let rm = self.base.mul(&self.base_elements[r], &self.base_elements[self.module_reps[m]]);
                        self.coset_of[self.index[&rm]] == zero_m
                    }
                })
            })
            .collect()
    }

    /// The elements `(r, m)` with `r` in `z(R)` or `z(M)`.
    pub fn formula_zerodivisors(&self) -> Vec<bool> {
        let zm = self.module_zerodivisors();
        let mut out = Vec::with_capacity(self.base_elements.len() * self.module_size());
        for (r, e) in self.base_elements.iter().enumerate() {
            let z = !self.base.is_regular(e) || zm[r];
            out.extend(std::iter::repeat_n(z, self.module_size()));
        }
        out
    }

    /// Submodule bound of `N`: the ideal `N` itself plus the module's kernel.
    fn saturate(&self, n: &Ideal) -> Result<Ideal> {
        match &self.module {
            Module::Regular => Ok(n.clone()),
            Module::Quotient(j) => n.sum(j),
        }
    }

    /// The ideal `J(+)N` of `R(+)M`, where `N` is given as an ideal of `R`
    /// read modulo the kernel of `M`. Requires `JM` inside `N`.
    pub fn ideal_pair(&self, ring: &Ring, j: &Ideal, n: &Ideal) -> Result<Ideal> {
        if j.ring() != &self.base || n.ring() != &self.base {
            return Err(Error::RingMismatch);
        }
        let n = self.saturate(n)?;
        if !self.saturate(j)?.is_subset(&n)? {
            return Err(Error::InvalidIdealPair);
        }
        let mut set = Vec::with_capacity(self.base_elements.len() * self.module_size());
        for r in &self.base_elements {
            let in_j = j.has(r);
            for &rep in &self.module_reps {
                set.push(in_j && n.has(&self.base_elements[rep]));
            }
        }
        Ok(Ideal::from_parts(ring, vec![IdealPart::from_set(set)]))
    }

    /// Splits an ideal of shape `J(+)N` into `(J, N)`, `N` saturated by the
    /// module's kernel; `None` when the ideal has another shape.
    pub fn recognize_pair(&self, ideal: &Ideal) -> Option<(Ideal, Ideal)> {
        let set: Vec<bool> = match ideal.part(0) {
            IdealPart::Set(s) => s.to_vec(),
            IdealPart::Gen(_) => return None,
        };
        let msize = self.module_size();
        let zero_r = self.index[&self.base.zero()];
        let j: Vec<Element> = (0..self.base_elements.len())
            .filter(|&r| (0..msize).any(|m| set[r * msize + m]))
            .map(|r| self.base_elements[r].clone())
            .collect();
        let n: Vec<Element> = (0..self.base_elements.len())
            .filter(|&x| set[zero_r * msize + self.coset_of[x]])
            .map(|x| self.base_elements[x].clone())
            .collect();
        let j = Ideal::from_generators(&self.base, &j).ok()?;
        let n = Ideal::from_generators(&self.base, &n).ok()?;
        let shaped = self.ideal_pair(ideal.ring(), &j, &n).ok()?;
        (shaped == *ideal).then_some((j, n))
    }
}

/// Builds `R(+)M` over a finite base ring as a table.
pub fn make_idealization(base: &Ring, module: Module) -> Result<Ring> {
    if !base.is_finite() {
        return Err(Error::InfiniteIdealizationBase);
    }
    let module = match module {
        Module::Quotient(j) if j.ring() != base => return Err(Error::RingMismatch),
        Module::Quotient(j) if j.is_zero() => Module::Regular,
        m => m,
    };
    let base_elements = base.elements()?;
    let index: HashMap<Element, usize> =
        base_elements.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
    let mut coset_of = vec![usize::MAX; base_elements.len()];
    let mut module_reps = Vec::new();
    for x in 0..base_elements.len() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let c = module_reps.len();
        module_reps.push(x);
        for y in 0..base_elements.len() {
            let same = match &module {
                Module::Regular => x == y,
                Module::Quotient(j) => j.has(&base.sub(&base_elements[y], &base_elements[x])),
            };
            if same {
                coset_of[y] = c;
            }
        }
    }
    let data = IdealizationData {
        base: base.clone(),
        base_elements,
        index,
        module,
        module_reps,
        coset_of,
    };
    let rsize = data.base_elements.len();
    let msize = data.module_size();
    let size = rsize * msize;
    let idx = |e: &Element| data.index[e];
    // module operations on representatives
    let madd = |m1: usize, m2: usize| {
        let s = base.add(&data.base_elements[data.module_reps[m1]], &data.base_elements[data.module_reps[m2]]);
        data.coset_of[idx(&s)]
    };
    let act = |r: usize, m: usize| {
        let p = base.mul(&data.base_elements[r], &data.base_elements[data.module_reps[m]]);
        data.coset_of[idx(&p)]
    };
    let mut add = vec![0u32; size * size];
    let mut mul = vec![0u32; size * size];
    for a in 0..size {
        let (r1, m1) = (a / msize, a % msize);
        for b in 0..size {
            let (r2, m2) = (b / msize, b % msize);
            let rs = idx(&base.add(&data.base_elements[r1], &data.base_elements[r2]));
            let rp = idx(&base.mul(&data.base_elements[r1], &data.base_elements[r2]));
            add[a * size + b] = data.join(rs, madd(m1, m2));
            mul[a * size + b] = data.join(rp, madd(act(r1, m2), act(r2, m1)));
        }
    }
    let zero = data.join(idx(&base.zero()), data.coset_of[idx(&base.zero())]) as usize;
    let one = data.join(idx(&base.one()), data.coset_of[idx(&base.zero())]) as usize;
    let labels = (0..size as u32)
        .map(|k| {
            let slots: Vec<String> = data.value_slots(k).iter().map(|s| s.to_string()).collect();
            format!("({})", slots.join(","))
        })
        .collect();
    let spec = RingSpec::Idealization(Box::new(base.spec()), data.module.spec());
    let table = TableRing::from_tables(size, add, mul, zero, one, labels, spec, TableOrigin::Idealization(data))?;
    Ring::from_atoms(vec![Atom::Table(Arc::new(table))])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::zerodivisors;

    fn z2() -> Ring {
        Ring::zn(2).unwrap()
    }

    #[test]
    fn small_idealizations() {
        let r = make_idealization(&z2(), Module::Regular).unwrap();
        assert_eq!(r.size(), Some(4));
        let labels: Vec<String> = r.elements().unwrap().iter().map(|e| r.format_element(e)).collect();
        assert_eq!(labels, ["(0,0)", "(0,1)", "(1,0)", "(1,1)"]);
        let m = r.element(&[0, 1]).unwrap();
        assert_eq!(r.mul(&m, &m), r.zero());
        let z4 = make_idealization(&Ring::zn(4).unwrap(), Module::Regular).unwrap();
        assert_eq!(z4.size(), Some(16));
        let zero = Ideal::zero(&z2());
        let same = make_idealization(&z2(), Module::Quotient(zero)).unwrap();
        assert_eq!(same, r);
        assert_eq!(make_idealization(&Ring::z(), Module::Regular).unwrap_err(), Error::InfiniteIdealizationBase);
    }

    #[test]
    fn zerodivisor_formula() {
        let r = make_idealization(&z2(), Module::Regular).unwrap();
        let shown: Vec<String> = match zerodivisors(&r) {
            crate::ring::ZeroDivisors::Explicit(z) => z.iter().map(|e| r.format_element(e)).collect(),
            _ => unreachable!(),
        };
        assert_eq!(shown, ["(0,0)", "(0,1)"]);
        let d = r.idealization().unwrap();
        let formula = d.formula_zerodivisors();
        for e in r.elements().unwrap() {
            assert_eq!(formula[e.get(0).idx()], !r.is_regular(&e));
        }
    }

    #[test]
    fn ideal_pairs() {
        let base = Ring::zn(4).unwrap();
        let r = make_idealization(&base, Module::Regular).unwrap();
        let d = r.idealization().unwrap();
        let two = Ideal::from_ints(&base, &[2]).unwrap();
        let zero = Ideal::zero(&base);
        let unit = Ideal::unit(&base);
        let i = d.ideal_pair(&r, &two, &unit).unwrap();
        assert_eq!(i.elements().unwrap().len(), 8);
        assert_eq!(d.recognize_pair(&i), Some((two.clone(), unit)));
        assert_eq!(d.ideal_pair(&r, &two, &zero).unwrap_err(), Error::InvalidIdealPair);
        // the ideal generated by (2,1) is not of the form J(+)N
        let g = Ideal::principal(&r, &r.element(&[2, 1]).unwrap()).unwrap();
        assert_eq!(d.recognize_pair(&g), None);
    }

    #[test]
    fn quotient_module() {
        let base = Ring::zn(4).unwrap();
        let j = Ideal::from_ints(&base, &[2]).unwrap();
        let r = make_idealization(&base, Module::Quotient(j)).unwrap();
        assert_eq!(r.size(), Some(8));
        // 2 kills Z/4 / (2), so (2,0) is a zerodivisor
        assert!(!r.is_regular(&r.element(&[2, 0]).unwrap()));
        assert!(r.is_regular(&r.element(&[1, 1]).unwrap()));
        assert_eq!(r.to_string(), "idealize(Z/4,mod gen 2)");
    }
}
