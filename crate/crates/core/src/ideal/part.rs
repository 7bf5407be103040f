use std::collections::HashSet;
use std::sync::Arc;

use crate::arith;
use crate::error::Result;
use crate::ring::{Atom, TableRing, Value};

/// The ideal of a single atom.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum IdealPart {
    /// Canonical generator of a principal atom. For `Z/n` it is a proper
    /// divisor of `n` or 0; for `Z[1/S]` it is free of the inverted primes.
    Gen(i128),
    /// Membership vector over the elements of a table atom.
    Set(Arc<Vec<bool>>),
}

fn set_of(part: &IdealPart) -> &[bool] {
    match part {
        IdealPart::Set(s) => s,
        IdealPart::Gen(_) => panic!("expected an element set"),
    }
}

fn gen_of(part: &IdealPart) -> i128 {
    match part {
        IdealPart::Gen(d) => *d,
        IdealPart::Set(_) => panic!("expected a generator"),
    }
}

fn numerator(v: Value) -> i128 {
    match v {
        Value::Int(x) | Value::Frac(x, _) => x,
        Value::Idx(_) => panic!("expected a numeric value"),
    }
}

/// Smallest ideal of a table containing `set` (assumed to contain zero) and `gens`.
fn close(t: &TableRing, mut set: Vec<bool>, gens: impl IntoIterator<Item = u32>) -> Vec<bool> {
    let n = t.size() as u32;
    for g in gens {
        if set[g as usize] {
            continue;
        }
        let mut multiples = vec![false; n as usize];
        for r in 0..n {
            multiples[t.mul(g, r) as usize] = true;
        }
        let mut next = vec![false; n as usize];
        for x in (0..n).filter(|&x| set[x as usize]) {
            for y in (0..n).filter(|&y| multiples[y as usize]) {
                next[t.add(x, y) as usize] = true;
            }
        }
        set = next;
    }
    set
}

fn zero_set(t: &TableRing) -> Vec<bool> {
    let mut s = vec![false; t.size()];
    s[t.zero() as usize] = true;
    s
}

impl IdealPart {
    /// Canonical part for the principal ideal `<d>` of a principal atom.
    pub fn canonical(atom: &Atom, d: i128) -> IdealPart {
        match atom {
            Atom::Z => IdealPart::Gen(d.abs()),
            Atom::Zn(n) => {
                let g = arith::gcd(d, *n);
                IdealPart::Gen(if g == *n { 0 } else { g })
            }
            Atom::LocZ(l) => IdealPart::Gen(arith::strip_primes(d, &l.primes)),
            Atom::Table(t) => {
                let v = t.from_int(d);
                IdealPart::Set(Arc::new(close(t, zero_set(t), [v])))
            }
        }
    }

    pub fn zero(atom: &Atom) -> IdealPart {
        match atom {
            Atom::Table(t) => IdealPart::Set(Arc::new(zero_set(t))),
            _ => IdealPart::Gen(0),
        }
    }

    pub fn unit(atom: &Atom) -> IdealPart {
        match atom {
            Atom::Table(t) => IdealPart::Set(Arc::new(vec![true; t.size()])),
            _ => IdealPart::Gen(1),
        }
    }

    /// The ideal generated by `vals`.
    pub fn generated(atom: &Atom, vals: &[Value]) -> IdealPart {
        match atom {
            Atom::Table(t) => {
                IdealPart::Set(Arc::new(close(t, zero_set(t), vals.iter().map(|v| v.idx() as u32))))
            }
            _ => {
                let g = vals.iter().fold(0, |acc, v| arith::gcd(acc, numerator(*v)));
                IdealPart::canonical(atom, g)
            }
        }
    }

    pub fn from_set(set: Vec<bool>) -> IdealPart {
        IdealPart::Set(Arc::new(set))
    }

    pub fn is_unit(&self) -> bool {
        match self {
            IdealPart::Gen(d) => *d == 1,
            IdealPart::Set(s) => s.iter().all(|&b| b),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            IdealPart::Gen(d) => *d == 0,
            IdealPart::Set(s) => s.iter().filter(|&&b| b).count() == 1,
        }
    }

    pub fn contains(&self, _atom: &Atom, v: Value) -> bool {
        match self {
            IdealPart::Gen(0) => numerator(v) == 0,
            IdealPart::Gen(d) => numerator(v) % d == 0,
            IdealPart::Set(s) => s[v.idx()],
        }
    }

    pub fn is_subset(&self, _atom: &Atom, other: &IdealPart) -> bool {
        match (self, other) {
            (IdealPart::Gen(a), IdealPart::Gen(b)) => *a == 0 || (*b != 0 && a % b == 0),
            (IdealPart::Set(a), IdealPart::Set(b)) => a.iter().zip(b.iter()).all(|(x, y)| !x || *y),
            _ => panic!("mismatched ideal parts"),
        }
    }

    pub fn sum(&self, atom: &Atom, other: &IdealPart) -> Result<IdealPart> {
        Ok(match atom {
            Atom::Table(t) => {
                let s = set_of(self).to_vec();
                let gens: Vec<u32> = (0..t.size() as u32).filter(|&x| set_of(other)[x as usize]).collect();
                IdealPart::Set(Arc::new(close(t, s, gens)))
            }
            _ => IdealPart::canonical(atom, arith::gcd(gen_of(self), gen_of(other))),
        })
    }

    pub fn product(&self, atom: &Atom, other: &IdealPart) -> Result<IdealPart> {
        Ok(match atom {
            Atom::Table(t) => {
                let (a, b) = (set_of(self), set_of(other));
                let n = t.size() as u32;
                let mut prods = HashSet::new();
                for x in (0..n).filter(|&x| a[x as usize]) {
                    for y in (0..n).filter(|&y| b[y as usize]) {
                        prods.insert(t.mul(x, y));
                    }
                }
                let mut prods: Vec<u32> = prods.into_iter().collect();
                prods.sort_unstable();
                IdealPart::Set(Arc::new(close(t, zero_set(t), prods)))
            }
            Atom::Zn(n) => {
                // reduce first so the product stays small
                let (a, b) = (gen_of(self), gen_of(other));
                IdealPart::canonical(atom, arith::checked_mul(a % n, b % n)?)
            }
            _ => IdealPart::canonical(atom, arith::checked_mul(gen_of(self), gen_of(other))?),
        })
    }

    pub fn intersection(&self, atom: &Atom, other: &IdealPart) -> Result<IdealPart> {
        Ok(match atom {
            Atom::Table(_) => IdealPart::Set(Arc::new(
                set_of(self).iter().zip(set_of(other).iter()).map(|(x, y)| *x && *y).collect(),
            )),
            _ => IdealPart::canonical(atom, arith::lcm(gen_of(self), gen_of(other))?),
        })
    }

    pub fn power(&self, atom: &Atom, n: u32) -> Result<IdealPart> {
        match atom {
            Atom::Z | Atom::LocZ(_) => {
                Ok(IdealPart::canonical(atom, arith::checked_pow(gen_of(self), n)?))
            }
            _ => {
                let mut acc = self.clone();
                for _ in 1..n {
                    let next = acc.product(atom, self)?;
                    if next == acc {
                        break;
                    }
                    acc = next;
                }
                Ok(acc)
            }
        }
    }

    /// Intersection of all powers.
    pub fn omega(&self, atom: &Atom) -> Result<IdealPart> {
        match atom {
            Atom::Z | Atom::LocZ(_) => Ok(IdealPart::Gen(if gen_of(self) == 1 { 1 } else { 0 })),
            _ => {
                // powers descend, so the chain stabilizes after at most |R| steps
                let mut acc = self.clone();
                loop {
                    let next = acc.product(atom, self)?;
                    if next == acc {
                        return Ok(acc);
                    }
                    acc = next;
                }
            }
        }
    }

    pub fn radical(&self, atom: &Atom) -> Result<IdealPart> {
        Ok(match atom {
            Atom::Z | Atom::LocZ(_) => IdealPart::Gen(arith::squarefree_kernel(gen_of(self))),
            Atom::Zn(n) => {
                let g = gen_of(self);
                let g = if g == 0 { *n } else { g };
                IdealPart::canonical(atom, arith::squarefree_kernel(g))
            }
            Atom::Table(t) => {
                let s = set_of(self);
                let n = t.size() as u32;
                let rad = (0..n)
                    .map(|x| {
                        let mut p = x;
                        for _ in 0..n {
                            if s[p as usize] {
                                return true;
                            }
                            p = t.mul(p, x);
                        }
                        false
                    })
                    .collect();
                IdealPart::Set(Arc::new(rad))
            }
        })
    }

    /// `{ r : r x in I }`.
    pub fn colon_value(&self, atom: &Atom, x: Value) -> Result<IdealPart> {
        Ok(match atom {
            Atom::Table(t) => {
                let s = set_of(self);
                let x = x.idx() as u32;
                IdealPart::Set(Arc::new((0..t.size() as u32).map(|r| s[t.mul(r, x) as usize]).collect()))
            }
            Atom::Zn(n) => {
                let g = gen_of(self);
                let g = if g == 0 { *n } else { g };
                IdealPart::canonical(atom, g / arith::gcd(g, numerator(x)))
            }
            _ => {
                let (d, p) = (gen_of(self), numerator(x));
                if p == 0 {
                    IdealPart::Gen(1)
                } else if d == 0 {
                    IdealPart::Gen(0)
                } else {
                    IdealPart::canonical(atom, d / arith::gcd(d, p))
                }
            }
        })
    }

    /// `{ r : r J subset I }`.
    pub fn colon_part(&self, atom: &Atom, other: &IdealPart) -> Result<IdealPart> {
        match atom {
            Atom::Table(t) => {
                let mut acc = IdealPart::unit(atom);
                for j in (0..t.size() as u32).filter(|&j| set_of(other)[j as usize]) {
                    acc = acc.intersection(atom, &self.colon_value(atom, Value::Idx(j))?)?;
                }
                Ok(acc)
            }
            Atom::LocZ(_) => self.colon_value(atom, Value::Frac(gen_of(other), 1)),
            _ => self.colon_value(atom, Value::Int(gen_of(other))),
        }
    }

    /// Canonical generator value of a principal atom.
    pub fn generator_value(&self, atom: &Atom) -> Value {
        match atom {
            Atom::LocZ(_) => Value::Frac(gen_of(self), 1),
            _ => Value::Int(gen_of(self)),
        }
    }

    /// A short generating list; empty for the zero ideal.
    pub fn generator_values(&self, atom: &Atom) -> Vec<Value> {
        match atom {
            Atom::Table(t) => {
                let s = set_of(self);
                let mut acc = zero_set(t);
                let mut out = Vec::new();
                for x in 0..t.size() as u32 {
                    if s[x as usize] && !acc[x as usize] {
                        acc = close(t, acc, [x]);
                        out.push(Value::Idx(x));
                    }
                }
                out
            }
            _ if self.is_zero() => Vec::new(),
            _ => vec![self.generator_value(atom)],
        }
    }

    pub fn display(&self, atom: &Atom) -> String {
        let gens = self.generator_values(atom);
        if gens.is_empty() {
            return format!("<{}>", atom.format_value(atom.zero()));
        }
        let shown: Vec<String> = gens.iter().map(|v| atom.format_value(*v)).collect();
        format!("<{}>", shown.join(","))
    }

    /// All ideals of a finite atom, or those with generator at most `bound`.
    pub fn enumerate(atom: &Atom, bound: u64) -> Vec<IdealPart> {
        match atom {
            Atom::Z => (0..=bound as i128).map(IdealPart::Gen).collect(),
            Atom::LocZ(l) => (0..=bound as i128)
                .filter(|&d| arith::strip_primes(d, &l.primes) == d)
                .map(IdealPart::Gen)
                .collect(),
            Atom::Zn(n) => std::iter::once(0)
                .chain(arith::divisors(*n).into_iter().filter(|d| d != n))
                .map(IdealPart::Gen)
                .collect(),
            Atom::Table(t) => {
                let start = zero_set(t);
                let mut seen: HashSet<Vec<bool>> = HashSet::new();
                seen.insert(start.clone());
                let mut frontier = vec![start];
                while let Some(s) = frontier.pop() {
                    for x in 0..t.size() as u32 {
                        if s[x as usize] {
                            continue;
                        }
                        let next = close(t, s.clone(), [x]);
                        if seen.insert(next.clone()) {
                            frontier.push(next);
                        }
                    }
                }
                let mut all: Vec<Vec<bool>> = seen.into_iter().collect();
                all.sort_by_key(|s| {
                    let members: Vec<usize> = (0..s.len()).filter(|&i| s[i]).collect();
                    (members.len(), members)
                });
                all.into_iter().map(|s| IdealPart::Set(Arc::new(s))).collect()
            }
        }
    }
}
