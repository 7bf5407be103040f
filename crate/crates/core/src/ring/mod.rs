//! Computable commutative rings.
//!
//! A [`Ring`] is a finite product of atoms: the integers, residue rings
//! `Z/n`, localizations `Z[1/S]`, and explicit finite tables. Idealizations
//! and quotients of tables are materialized as tables; everything else stays
//! structural.

mod idealization;
mod localization;
mod quotient;
mod spec;
mod table;

use std::fmt;
use std::sync::Arc;

use serde_json::json;
use smallvec::SmallVec;

use crate::arith;
use crate::error::{Error, Result};
use crate::verdict::{Verdict, Witness};

pub use idealization::{make_idealization, IdealizationData, Module};
pub use localization::{make_localization, LocalizationMap};
pub use quotient::{make_quotient, QuotientMap};
pub use spec::{IdealSpec, ModuleSpec, RingSpec, TableSpec};
pub use table::{TableOrigin, TableRing};

/// A value of one atom of a ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Value {
    Int(i128),
    /// Canonical fraction `num/den` of a localized integer ring.
    Frac(i128, i128),
    Idx(u32),
}

impl Value {
    pub fn int(self) -> i128 {
        match self {
            Value::Int(v) => v,
            Value::Frac(n, _) => n,
            Value::Idx(i) => i as i128,
        }
    }

    pub fn idx(self) -> usize {
        match self {
            Value::Idx(i) => i as usize,
            other => panic!("expected a table index, found {other:?}"),
        }
    }
}

/// An element of a ring, one value per atom.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(pub SmallVec<[Value; 4]>);

impl Element {
    pub fn new(values: impl IntoIterator<Item = Value>) -> Self {
        Element(values.into_iter().collect())
    }

    pub fn values(&self) -> &[Value] {
        &self.0
    }

    pub fn get(&self, i: usize) -> Value {
        self.0[i]
    }
}

/// Denominator data of `Z[1/S]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LocData {
    /// The generators of `S`, sorted and deduplicated.
    pub gens: Vec<i128>,
    /// Distinct primes dividing some generator; these become units.
    pub primes: Vec<i128>,
}

impl LocData {
    pub fn new(gens: &[i128]) -> Result<Self> {
        let mut g: Vec<i128> = gens.iter().map(|s| s.abs()).filter(|&s| s != 1).collect();
        if g.contains(&0) {
            return Err(Error::ZeroInMultiplicativeSet);
        }
        g.sort_unstable();
        g.dedup();
        let mut primes: Vec<i128> = g.iter().flat_map(|&s| arith::prime_factors(s)).collect();
        primes.sort_unstable();
        primes.dedup();
        Ok(LocData { gens: g, primes })
    }

    /// True when `n` is a unit of `Z[1/S]` up to sign.
    pub fn is_smooth(&self, n: i128) -> bool {
        n != 0 && arith::strip_primes(n, &self.primes) == 1
    }

    /// Canonical form of `num/den`; `den` must be smooth.
    pub fn reduce(&self, num: i128, den: i128) -> Value {
        if num == 0 {
            return Value::Frac(0, 1);
        }
        let (mut n, mut d) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = arith::gcd(n, d);
        n /= g;
        d /= g;
        Value::Frac(n, d)
    }

    /// Primes that are not inverted, in increasing order, as many as asked.
    pub fn nonunit_primes(&self, count: usize) -> Vec<i128> {
        let mut out = Vec::new();
        let mut p = 2;
        while out.len() < count {
            if arith::is_prime(p) && !self.primes.contains(&p) {
                out.push(p);
            }
            p += 1;
        }
        out
    }
}

/// One factor of a ring.
#[derive(Debug, Clone)]
pub enum Atom {
    Z,
    Zn(i128),
    LocZ(Arc<LocData>),
    Table(Arc<TableRing>),
}

impl PartialEq for Atom {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Atom::Z, Atom::Z) => true,
            (Atom::Zn(a), Atom::Zn(b)) => a == b,
            (Atom::LocZ(a), Atom::LocZ(b)) => a.primes == b.primes,
            (Atom::Table(a), Atom::Table(b)) => Arc::ptr_eq(a, b) || a.same_structure(b),
            _ => false,
        }
    }
}

impl Eq for Atom {}

fn mul_int(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("integer overflow in ring multiplication")
}

fn add_int(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("integer overflow in ring addition")
}

impl Atom {
    pub fn is_finite(&self) -> bool {
        matches!(self, Atom::Zn(_) | Atom::Table(_))
    }

    /// True for the atoms whose ideals are principal with a canonical generator.
    pub fn is_principal(&self) -> bool {
        !matches!(self, Atom::Table(_))
    }

    pub fn size(&self) -> Option<usize> {
        match self {
            Atom::Zn(n) => Some(*n as usize),
            Atom::Table(t) => Some(t.size()),
            _ => None,
        }
    }

    pub fn zero(&self) -> Value {
        match self {
            Atom::Z | Atom::Zn(_) => Value::Int(0),
            Atom::LocZ(_) => Value::Frac(0, 1),
            Atom::Table(t) => Value::Idx(t.zero()),
        }
    }

    pub fn one(&self) -> Value {
        match self {
            Atom::Z | Atom::Zn(_) => Value::Int(1),
            Atom::LocZ(_) => Value::Frac(1, 1),
            Atom::Table(t) => Value::Idx(t.one()),
        }
    }

    /// The image of the integer `k` under the unique ring map from Z.
    pub fn from_int(&self, k: i128) -> Value {
        match self {
            Atom::Z => Value::Int(k),
            Atom::Zn(n) => Value::Int(arith::modulo(k, *n)),
            Atom::LocZ(_) => Value::Frac(k, 1),
            Atom::Table(t) => Value::Idx(t.from_int(k)),
        }
    }

    pub fn add(&self, a: Value, b: Value) -> Value {
        match (self, a, b) {
            (Atom::Z, Value::Int(x), Value::Int(y)) => Value::Int(add_int(x, y)),
            (Atom::Zn(n), Value::Int(x), Value::Int(y)) => Value::Int((x + y) % n),
            (Atom::LocZ(l), Value::Frac(p, q), Value::Frac(r, s)) => {
                if q == s {
                    l.reduce(add_int(p, r), q)
                } else {
                    l.reduce(add_int(mul_int(p, s), mul_int(r, q)), mul_int(q, s))
                }
            }
            (Atom::Table(t), Value::Idx(x), Value::Idx(y)) => Value::Idx(t.add(x, y)),
            _ => panic!("value does not belong to atom"),
        }
    }

    pub fn neg(&self, a: Value) -> Value {
        match (self, a) {
            (Atom::Z, Value::Int(x)) => Value::Int(-x),
            (Atom::Zn(n), Value::Int(x)) => Value::Int((n - x) % n),
            (Atom::LocZ(_), Value::Frac(p, q)) => Value::Frac(-p, q),
            (Atom::Table(t), Value::Idx(x)) => Value::Idx(t.neg(x)),
            _ => panic!("value does not belong to atom"),
        }
    }

    pub fn mul(&self, a: Value, b: Value) -> Value {
        match (self, a, b) {
            (Atom::Z, Value::Int(x), Value::Int(y)) => Value::Int(mul_int(x, y)),
            (Atom::Zn(n), Value::Int(x), Value::Int(y)) => Value::Int(mul_int(x, y) % n),
            (Atom::LocZ(l), Value::Frac(p, q), Value::Frac(r, s)) => {
                if q == 1 && s == 1 {
                    Value::Frac(mul_int(p, r), 1)
                } else {
                    l.reduce(mul_int(p, r), mul_int(q, s))
                }
            }
            (Atom::Table(t), Value::Idx(x), Value::Idx(y)) => Value::Idx(t.mul(x, y)),
            _ => panic!("value does not belong to atom"),
        }
    }

    pub fn is_zero(&self, a: Value) -> bool {
        a == self.zero()
    }

    /// `Ann(a) = (0)`.
    pub fn is_regular(&self, a: Value) -> bool {
        match (self, a) {
            (Atom::Z, Value::Int(x)) => x != 0,
            (Atom::Zn(n), Value::Int(x)) => arith::gcd(x, *n) == 1,
            (Atom::LocZ(_), Value::Frac(p, _)) => p != 0,
            (Atom::Table(t), Value::Idx(x)) => t.is_regular(x),
            _ => panic!("value does not belong to atom"),
        }
    }

    pub fn is_unit(&self, a: Value) -> bool {
        match (self, a) {
            (Atom::Z, Value::Int(x)) => x == 1 || x == -1,
            (Atom::Zn(n), Value::Int(x)) => arith::gcd(x, *n) == 1,
            (Atom::LocZ(l), Value::Frac(p, _)) => l.is_smooth(p),
            (Atom::Table(t), Value::Idx(x)) => t.is_unit(x),
            _ => panic!("value does not belong to atom"),
        }
    }

    pub fn contains_value(&self, a: Value) -> bool {
        match (self, a) {
            (Atom::Z, Value::Int(_)) => true,
            (Atom::Zn(n), Value::Int(x)) => (0..*n).contains(&x),
            (Atom::LocZ(l), Value::Frac(p, q)) => {
                q > 0 && l.is_smooth(q) && l.reduce(p, q) == Value::Frac(p, q)
            }
            (Atom::Table(t), Value::Idx(x)) => (x as usize) < t.size(),
            _ => false,
        }
    }

    /// All values of a finite atom in canonical order.
    pub fn values(&self) -> Option<Vec<Value>> {
        match self {
            Atom::Zn(n) => Some((0..*n).map(Value::Int).collect()),
            Atom::Table(t) => Some((0..t.size() as u32).map(Value::Idx).collect()),
            _ => None,
        }
    }

    /// Values of bounded magnitude in search order; all values for finite atoms.
    pub fn bounded_values(&self, bound: u64) -> Vec<Value> {
        match self {
            Atom::Z => arith::search_order(bound).map(Value::Int).collect(),
            Atom::LocZ(l) => {
                let mut dens = vec![1i128];
                dens.extend(l.primes.iter().copied().filter(|&p| p as u64 <= bound.max(1)));
                let mut out = Vec::new();
                for num in arith::search_order(bound) {
                    for &den in &dens {
                        let v = l.reduce(num, den);
                        if v == Value::Frac(num, den) {
                            out.push(v);
                        }
                    }
                }
                out
            }
            _ => self.values().unwrap(),
        }
    }

    /// Search rank of a value: smaller means earlier in bounded enumeration.
    pub fn rank(&self, a: Value) -> u128 {
        match a {
            Value::Int(x) => match self {
                Atom::Z => arith::search_rank(x),
                _ => x as u128,
            },
            Value::Frac(p, q) => arith::search_rank(p) * 1024 + q as u128,
            Value::Idx(i) => i as u128,
        }
    }

    /// Number of integer slots an element of this atom occupies in surface syntax.
    pub fn slots(&self) -> usize {
        match self {
            Atom::Table(t) => t.slots(),
            _ => 1,
        }
    }

    pub fn value_from_slots(&self, slots: &[i128]) -> Result<Value> {
        match self {
            Atom::Z => Ok(Value::Int(slots[0])),
            Atom::Zn(n) => Ok(Value::Int(arith::modulo(slots[0], *n))),
            Atom::LocZ(_) => Ok(Value::Frac(slots[0], 1)),
            Atom::Table(t) => t.value_from_slots(slots),
        }
    }

    /// Surface slots of a value; fractions keep only the numerator.
    pub fn value_slots(&self, a: Value) -> Vec<i128> {
        match (self, a) {
            (Atom::Table(t), Value::Idx(i)) => t.value_slots(i),
            (_, v) => vec![v.int()],
        }
    }

    pub fn format_value(&self, a: Value) -> String {
        match a {
            Value::Int(x) => x.to_string(),
            Value::Frac(p, 1) => p.to_string(),
            Value::Frac(p, q) => format!("{p}/{q}"),
            Value::Idx(i) => match self {
                Atom::Table(t) => t.label(i),
                _ => i.to_string(),
            },
        }
    }

    fn value_json(&self, a: Value) -> serde_json::Value {
        match a {
            Value::Int(x) => json!(x as i64),
            Value::Frac(p, 1) => json!(p as i64),
            Value::Frac(p, q) => json!(format!("{p}/{q}")),
            Value::Idx(i) => match self {
                Atom::Table(t) => t.value_json(i),
                _ => json!(i),
            },
        }
    }

    pub fn spec(&self) -> RingSpec {
        match self {
            Atom::Z => RingSpec::Z,
            Atom::Zn(n) => RingSpec::Zn(*n),
            Atom::LocZ(l) => RingSpec::LocZ(l.primes.clone()),
            Atom::Table(t) => t.spec().clone(),
        }
    }
}

/// A computable commutative ring with identity: an ordered product of atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring(Arc<Vec<Atom>>);

impl Ring {
    pub fn from_atoms(atoms: Vec<Atom>) -> Result<Ring> {
        if atoms.is_empty() {
            return Err(Error::EmptyProduct);
        }
        Ok(Ring(Arc::new(atoms)))
    }

    pub fn z() -> Ring {
        Ring(Arc::new(vec![Atom::Z]))
    }

    pub fn zn(n: i128) -> Result<Ring> {
        if n < 2 {
            return Err(Error::Semantic(format!("Z/{n} is not a ring with 1 != 0")));
        }
        Ok(Ring(Arc::new(vec![Atom::Zn(n)])))
    }

    pub fn loc_z(gens: &[i128]) -> Result<Ring> {
        let data = LocData::new(gens)?;
        if data.primes.is_empty() {
            return Ok(Ring::z());
        }
        Ok(Ring(Arc::new(vec![Atom::LocZ(Arc::new(data))])))
    }

    /// Builds the ring described by `spec`.
    pub fn build(spec: &RingSpec) -> Result<Ring> {
        spec::build(spec)
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.0
    }

    pub fn atom(&self, i: usize) -> &Atom {
        &self.0[i]
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn spec(&self) -> RingSpec {
        if self.0.len() == 1 {
            self.0[0].spec()
        } else {
            RingSpec::Product(self.0.iter().map(Atom::spec).collect())
        }
    }

    /// The `i`-th factor as a ring of its own.
    pub fn component(&self, i: usize) -> Ring {
        Ring(Arc::new(vec![self.0[i].clone()]))
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(Atom::is_finite)
    }

    pub fn size(&self) -> Option<usize> {
        self.0.iter().map(Atom::size).try_fold(1usize, |acc, s| s.map(|s| acc * s))
    }

    pub fn zero(&self) -> Element {
        Element::new(self.0.iter().map(Atom::zero))
    }

    pub fn one(&self) -> Element {
        Element::new(self.0.iter().map(Atom::one))
    }

    pub fn from_int(&self, k: i128) -> Element {
        Element::new(self.0.iter().map(|a| a.from_int(k)))
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        Element::new(self.0.iter().enumerate().map(|(i, at)| at.add(a.get(i), b.get(i))))
    }

    pub fn neg(&self, a: &Element) -> Element {
        Element::new(self.0.iter().enumerate().map(|(i, at)| at.neg(a.get(i))))
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Element {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        Element::new(self.0.iter().enumerate().map(|(i, at)| at.mul(a.get(i), b.get(i))))
    }

    pub fn pow(&self, a: &Element, k: u32) -> Element {
        let mut acc = self.one();
        let mut base = a.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn is_zero(&self, a: &Element) -> bool {
        *a == self.zero()
    }

    /// `Ann(a) = (0)`: every component is regular.
    pub fn is_regular(&self, a: &Element) -> bool {
        self.0.iter().enumerate().all(|(i, at)| at.is_regular(a.get(i)))
    }

    pub fn is_unit(&self, a: &Element) -> bool {
        self.0.iter().enumerate().all(|(i, at)| at.is_unit(a.get(i)))
    }

    pub fn check_element(&self, a: &Element) -> Result<()> {
        if a.0.len() == self.0.len()
            && self.0.iter().enumerate().all(|(i, at)| at.contains_value(a.get(i)))
        {
            Ok(())
        } else {
            Err(Error::ElementNotInRing(format!("{a:?}")))
        }
    }

    /// Checked regularity test.
    pub fn regular(&self, a: &Element) -> Result<bool> {
        self.check_element(a)?;
        Ok(self.is_regular(a))
    }

    /// All elements, in lexicographic order of atom values.
    pub fn elements(&self) -> Result<Vec<Element>> {
        let per_atom: Option<Vec<Vec<Value>>> = self.0.iter().map(Atom::values).collect();
        let per_atom = per_atom.ok_or(Error::UnboundedEnumeration)?;
        Ok(cartesian(&per_atom))
    }

    /// Elements with every infinite entry of magnitude at most `bound`, ordered
    /// by the largest per-atom rank first so that small elements come early.
    /// Finite rings return all elements in lexicographic order.
    pub fn bounded_elements(&self, bound: u64) -> Vec<Element> {
        let per_atom: Vec<Vec<Value>> = self.0.iter().map(|a| a.bounded_values(bound)).collect();
        let mut all = cartesian(&per_atom);
        if !self.is_finite() {
            all.sort_by_cached_key(|e| {
                let ranks: Vec<u128> =
                    self.0.iter().enumerate().map(|(i, at)| at.rank(e.get(i))).collect();
                (ranks.iter().copied().max().unwrap_or(0), ranks)
            });
        }
        all
    }

    /// Elements ranked by the search order, used for comparing witnesses.
    pub fn rank(&self, a: &Element) -> (u128, Vec<u128>) {
        let ranks: Vec<u128> = self.0.iter().enumerate().map(|(i, at)| at.rank(a.get(i))).collect();
        (ranks.iter().copied().max().unwrap_or(0), ranks)
    }

    pub fn slots(&self) -> usize {
        self.0.iter().map(Atom::slots).sum()
    }

    /// Parses an element from its flattened integer slots.
    pub fn element(&self, slots: &[i128]) -> Result<Element> {
        let need = self.slots();
        let slots: Vec<i128> = if slots.len() == 1 && need > 1 {
            // a bare integer denotes its image k * 1
            return Ok(self.from_int(slots[0]));
        } else {
            slots.to_vec()
        };
        if slots.len() != need {
            return Err(Error::ElementNotInRing(format!(
                "expected {need} entries, found {}",
                slots.len()
            )));
        }
        let mut at = 0;
        let mut vals = SmallVec::new();
        for atom in self.0.iter() {
            let k = atom.slots();
            vals.push(atom.value_from_slots(&slots[at..at + k])?);
            at += k;
        }
        Ok(Element(vals))
    }

    /// Inverse of [`Ring::element`] for elements without fractional entries.
    pub fn element_slots(&self, a: &Element) -> Vec<i128> {
        self.0.iter().enumerate().flat_map(|(i, at)| at.value_slots(a.get(i))).collect()
    }

    pub fn format_element(&self, a: &Element) -> String {
        if self.0.len() == 1 {
            return self.0[0].format_value(a.get(0));
        }
        let parts: Vec<String> =
            self.0.iter().enumerate().map(|(i, at)| at.format_value(a.get(i))).collect();
        format!("({})", parts.join(","))
    }

    pub fn element_json(&self, a: &Element) -> serde_json::Value {
        if self.0.len() == 1 {
            return self.0[0].value_json(a.get(0));
        }
        serde_json::Value::Array(
            self.0.iter().enumerate().map(|(i, at)| at.value_json(a.get(i))).collect(),
        )
    }

    /// The element equal to `v` at atom `i` and `fill` elsewhere.
    pub fn with_component(&self, fill: &Element, i: usize, v: Value) -> Element {
        let mut e = fill.clone();
        e.0[i] = v;
        e
    }

    /// The idealization data when this ring is a single materialized idealization.
    pub fn idealization(&self) -> Option<&IdealizationData> {
        match self.0.as_slice() {
            [Atom::Table(t)] => match t.origin() {
                TableOrigin::Idealization(d) => Some(d),
                _ => None,
            },
            _ => None,
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec())
    }
}

fn cartesian(per_atom: &[Vec<Value>]) -> Vec<Element> {
    let mut out: Vec<Element> = vec![Element(SmallVec::new())];
    for vals in per_atom {
        let mut next = Vec::with_capacity(out.len() * vals.len());
        for prefix in &out {
            for v in vals {
                let mut e = prefix.clone();
                e.0.push(*v);
                next.push(e);
            }
        }
        out = next;
    }
    out
}

/// Builds the product ring; nested products are flattened.
pub fn make_product(components: &[Ring]) -> Result<Ring> {
    if components.is_empty() {
        return Err(Error::EmptyProduct);
    }
    Ring::from_atoms(components.iter().flat_map(|r| r.atoms().iter().cloned()).collect())
}

/// Zerodivisors of a ring: an explicit set when finite, a predicate otherwise.
#[derive(Debug, Clone)]
pub enum ZeroDivisors {
    Explicit(Vec<Element>),
    Predicate(Ring),
}

impl ZeroDivisors {
    pub fn contains(&self, a: &Element) -> bool {
        match self {
            ZeroDivisors::Explicit(set) => set.contains(a),
            ZeroDivisors::Predicate(r) => !r.is_regular(a),
        }
    }
}

pub fn zerodivisors(ring: &Ring) -> ZeroDivisors {
    match ring.elements() {
        Ok(all) => ZeroDivisors::Explicit(all.into_iter().filter(|a| !ring.is_regular(a)).collect()),
        Err(_) => ZeroDivisors::Predicate(ring.clone()),
    }
}

/// A regular non-unit of the atom, if it has one.
pub fn regular_nonunit(atom: &Atom) -> Option<Value> {
    match atom {
        Atom::Z => Some(Value::Int(2)),
        Atom::LocZ(l) => Some(Value::Frac(l.nonunit_primes(1)[0], 1)),
        _ => None,
    }
}

/// Holds iff every element is a zerodivisor or a unit.
pub fn is_total_quotient_ring(ring: &Ring) -> Verdict {
    let one = ring.one();
    for (i, atom) in ring.atoms().iter().enumerate() {
        if let Some(v) = regular_nonunit(atom) {
            let w = ring.with_component(&one, i, v);
            return Verdict::Fails(Witness::elements(ring, [w]));
        }
    }
    Verdict::Holds
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: i128) -> Ring {
        Ring::zn(n).unwrap()
    }

    #[test]
    fn regularity_examples() {
        let r = zn(12);
        assert!(r.is_regular(&r.from_int(5)));
        assert!(!r.is_regular(&r.from_int(2)));
        let zz2 = make_product(&[Ring::z(), zn(2)]).unwrap();
        let a = zz2.element(&[2, 1]).unwrap();
        assert!(zz2.is_regular(&a));
        assert!(!zz2.is_unit(&a));
    }

    #[test]
    fn zerodivisors_of_z6() {
        let r = zn(6);
        let ZeroDivisors::Explicit(set) = zerodivisors(&r) else { panic!() };
        let ints: Vec<i128> = set.iter().map(|e| e.get(0).int()).collect();
        assert_eq!(ints, vec![0, 2, 3, 4]);
        let z = zerodivisors(&Ring::z());
        assert!(z.contains(&Ring::z().zero()));
        assert!(!z.contains(&Ring::z().from_int(7)));
    }

    #[test]
    fn total_quotient_examples() {
        assert_eq!(is_total_quotient_ring(&zn(12)), Verdict::Holds);
        let z = Ring::z();
        match is_total_quotient_ring(&z) {
            Verdict::Fails(w) => assert_eq!(w.to_string(), "[2]"),
            v => panic!("{v:?}"),
        }
        let r = make_product(&[Ring::z(), zn(4)]).unwrap();
        match is_total_quotient_ring(&r) {
            Verdict::Fails(w) => assert_eq!(w.to_string(), "[(2,1)]"),
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn products_flatten() {
        let inner = make_product(&[Ring::z(), zn(2)]).unwrap();
        let r = make_product(&[inner, zn(3)]).unwrap();
        assert_eq!(r.arity(), 3);
        assert_eq!(make_product(&[zn(2), zn(3)]).unwrap().size(), Some(6));
        assert_eq!(make_product(&[]), Err(Error::EmptyProduct));
    }

    #[test]
    fn finite_regular_iff_unit() {
        for n in 2..=40 {
            let r = zn(n);
            for a in r.elements().unwrap() {
                assert_eq!(r.is_regular(&a), r.is_unit(&a), "Z/{n} at {a:?}");
            }
        }
    }

    #[test]
    fn localized_arithmetic_is_canonical() {
        let r = Ring::loc_z(&[6]).unwrap();
        let half = Element::new([Value::Frac(1, 2)]);
        let third = Element::new([Value::Frac(1, 3)]);
        let s = r.add(&half, &third);
        assert_eq!(s, Element::new([Value::Frac(5, 6)]));
        let p = r.mul(&s, &r.from_int(6));
        assert_eq!(p, r.from_int(5));
        assert!(r.is_unit(&r.from_int(4)));
        assert!(!r.is_unit(&r.from_int(5)));
    }

    #[test]
    fn bounded_elements_are_shell_ordered() {
        let r = make_product(&[Ring::z(), zn(2)]).unwrap();
        let els = r.bounded_elements(2);
        assert_eq!(els.len(), 10);
        assert_eq!(r.format_element(&els[0]), "(0,0)");
        assert_eq!(r.format_element(&els[1]), "(0,1)");
        assert_eq!(r.format_element(&els[2]), "(1,0)");
    }
}
