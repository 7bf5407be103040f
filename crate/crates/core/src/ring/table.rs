use serde_json::json;

use super::quotient::QuotientData;
use super::{IdealizationData, RingSpec, Value};
use crate::error::{Error, Result};

/// How a table ring came about; decides its surface syntax.
#[derive(Debug, Clone)]
pub enum TableOrigin {
    Explicit,
    Idealization(IdealizationData),
    /// Cosets of a finite atom modulo an ideal.
    Quotient(Box<QuotientData>),
}

/// An explicit finite commutative ring given by its operation tables.
#[derive(Debug, Clone)]
pub struct TableRing {
    size: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: u32,
    one: u32,
    unit: Vec<bool>,
    regular: Vec<bool>,
    labels: Vec<String>,
    spec: RingSpec,
    origin: TableOrigin,
}

impl TableRing {
    /// Tabulates `add` and `mul` over `0..size` and checks the ring axioms.
    pub fn from_ops(
        size: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
        zero: usize,
        one: usize,
        labels: Vec<String>,
        spec: RingSpec,
        origin: TableOrigin,
    ) -> Result<TableRing> {
        let mut add_t = vec![0u32; size * size];
        let mut mul_t = vec![0u32; size * size];
        for a in 0..size {
            for b in 0..size {
                let s = add(a, b);
                let p = mul(a, b);
                if s >= size || p >= size {
                    return Err(Error::InvalidTable(format!("result out of range at ({a},{b})")));
                }
                add_t[a * size + b] = s as u32;
                mul_t[a * size + b] = p as u32;
            }
        }
        Self::from_tables(size, add_t, mul_t, zero, one, labels, spec, origin)
    }

    #[allow(clippy::too_many_arguments)]
    pub fn from_tables(
        size: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: usize,
        one: usize,
        labels: Vec<String>,
        spec: RingSpec,
        origin: TableOrigin,
    ) -> Result<TableRing> {
        if size < 2 {
            return Err(Error::InvalidTable("a ring with 1 != 0 has at least two elements".into()));
        }
        if add.len() != size * size || mul.len() != size * size || labels.len() != size {
            return Err(Error::InvalidTable("table dimensions do not match".into()));
        }
        if zero >= size || one >= size || zero == one {
            return Err(Error::InvalidTable("zero and one must be distinct elements".into()));
        }
        if add.iter().chain(mul.iter()).any(|&v| v as usize >= size) {
            return Err(Error::InvalidTable("entry out of range".into()));
        }
        check_axioms(size, &add, &mul, zero, one)?;
        let mut neg = vec![0u32; size];
        for a in 0..size {
            match (0..size).find(|&b| add[a * size + b] as usize == zero) {
                Some(b) => neg[a] = b as u32,
                None => return Err(Error::InvalidTable(format!("element {a} has no negative"))),
            }
        }
        let unit: Vec<bool> =
            (0..size).map(|a| (0..size).any(|b| mul[a * size + b] as usize == one)).collect();
        let regular: Vec<bool> = (0..size)
            .map(|a| (0..size).all(|x| x == zero || mul[a * size + x] as usize != zero))
            .collect();
        Ok(TableRing {
            size,
            add,
            mul,
            neg,
            zero: zero as u32,
            one: one as u32,
            unit,
            regular,
            labels,
            spec,
            origin,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> u32 {
        self.zero
    }

    pub fn one(&self) -> u32 {
        self.one
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.size + b as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.size + b as usize]
    }

    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    pub fn is_unit(&self, a: u32) -> bool {
        self.unit[a as usize]
    }

    pub fn is_regular(&self, a: u32) -> bool {
        self.regular[a as usize]
    }

    pub fn from_int(&self, k: i128) -> u32 {
        let mut acc = self.zero;
        for _ in 0..k.unsigned_abs() {
            acc = self.add(acc, self.one);
        }
        if k < 0 {
            self.neg(acc)
        } else {
            acc
        }
    }

    pub fn label(&self, a: u32) -> String {
        self.labels[a as usize].clone()
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn origin(&self) -> &TableOrigin {
        &self.origin
    }

    pub fn same_structure(&self, other: &TableRing) -> bool {
        self.size == other.size
            && self.zero == other.zero
            && self.one == other.one
            && self.add == other.add
            && self.mul == other.mul
    }

    pub fn slots(&self) -> usize {
        match &self.origin {
            TableOrigin::Explicit => 1,
            TableOrigin::Idealization(d) => 2 * d.base().slots(),
            TableOrigin::Quotient(q) => q.source().slots(),
        }
    }

    pub fn value_from_slots(&self, slots: &[i128]) -> Result<Value> {
        match &self.origin {
            TableOrigin::Explicit => {
                let i = slots[0];
                if i < 0 || i as usize >= self.size {
                    return Err(Error::ElementNotInRing(format!("table index {i}")));
                }
                Ok(Value::Idx(i as u32))
            }
            TableOrigin::Idealization(d) => d.value_from_slots(slots),
            TableOrigin::Quotient(q) => {
                let src = q.source().element(slots)?;
                Ok(q.project_value(src.get(0)))
            }
        }
    }

    pub fn value_slots(&self, a: u32) -> Vec<i128> {
        match &self.origin {
            TableOrigin::Explicit => vec![a as i128],
            TableOrigin::Idealization(d) => d.value_slots(a),
            TableOrigin::Quotient(q) => q.rep_slots(a),
        }
    }

    pub fn value_json(&self, a: u32) -> serde_json::Value {
        match &self.origin {
            TableOrigin::Explicit => json!(a),
            _ => json!(self.label(a)),
        }
    }
}

fn check_axioms(size: usize, add: &[u32], mul: &[u32], zero: usize, one: usize) -> Result<()> {
    let at = |t: &[u32], a: usize, b: usize| t[a * size + b] as usize;
    for a in 0..size {
        if at(add, a, zero) != a {
            return Err(Error::InvalidTable(format!("{a} + 0 != {a}")));
        }
        if at(mul, a, one) != a {
            return Err(Error::InvalidTable(format!("{a} * 1 != {a}")));
        }
        for b in 0..size {
            if at(add, a, b) != at(add, b, a) {
                return Err(Error::InvalidTable(format!("addition not commutative at ({a},{b})")));
            }
            if at(mul, a, b) != at(mul, b, a) {
                return Err(Error::InvalidTable(format!(
                    "multiplication not commutative at ({a},{b})"
                )));
            }
        }
    }
    for a in 0..size {
        for b in 0..size {
            let ab_add = at(add, a, b);
            let ab_mul = at(mul, a, b);
            for c in 0..size {
                if at(add, ab_add, c) != at(add, a, at(add, b, c)) {
                    return Err(Error::InvalidTable(format!(
                        "addition not associative at ({a},{b},{c})"
                    )));
                }
                if at(mul, ab_mul, c) != at(mul, a, at(mul, b, c)) {
                    return Err(Error::InvalidTable(format!(
                        "multiplication not associative at ({a},{b},{c})"
                    )));
                }
                if at(mul, a, at(add, b, c)) != at(add, ab_mul, at(mul, a, c)) {
                    return Err(Error::InvalidTable(format!(
                        "distributivity fails at ({a},{b},{c})"
                    )));
                }
            }
        }
    }
    Ok(())
}
