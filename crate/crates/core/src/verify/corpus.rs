//! Ring corpora: `item {";" item}` where
//! `item := family {"x" family} [":size<=" N]` and
//! `family := z | ideal(z) | zn:a..b | zn:n | prod(item, ...) | idealize(item)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ring::{make_idealization, make_product, Module, Ring};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Z,
    /// The integers, searched through their bounded ideals.
    IdealZ,
    Zn(i128, i128),
    Prod(Vec<CorpusItem>),
    Idealize(Box<CorpusItem>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusItem {
    pub families: Vec<Family>,
    /// Finite rings larger than this are dropped.
    pub max_size: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec {
    pub items: Vec<CorpusItem>,
}

impl Family {
    fn rings(&self) -> Result<Vec<Ring>> {
        match self {
            Family::Z | Family::IdealZ => Ok(vec![Ring::z()]),
            Family::Zn(a, b) => (*a..=*b).map(Ring::zn).collect(),
            Family::Prod(items) => {
                let mut acc: Vec<Vec<Ring>> = vec![Vec::new()];
                for item in items {
                    let rings = item.rings()?;
                    acc = acc
                        .iter()
                        .flat_map(|prefix| {
                            rings.iter().map(move |r| {
                                let mut v = prefix.clone();
                                v.push(r.clone());
                                v
                            })
                        })
                        .collect();
                }
                acc.iter().map(|parts| make_product(parts)).collect()
            }
            Family::Idealize(item) => {
                item.rings()?.iter().map(|r| make_idealization(r, Module::Regular)).collect()
            }
        }
    }
}

impl CorpusItem {
    pub fn rings(&self) -> Result<Vec<Ring>> {
        let fam = Family::Prod(
            self.families
                .iter()
                .map(|f| CorpusItem {
                    families: vec![f.clone()],
                    max_size: None,
                })
                .collect(),
        );
        let rings = if self.families.len() == 1 {
            self.families[0].rings()?
        } else {
            fam.rings()?
        };
        Ok(rings
            .into_iter()
            .filter(|r| match (self.max_size, r.size()) {
                (Some(cap), Some(n)) => n <= cap,
                _ => true,
            })
            .collect())
    }
}

impl CorpusSpec {
    /// All rings of the corpus in order.
    pub fn rings(&self) -> Result<Vec<Ring>> {
        let mut out = Vec::new();
        for item in &self.items {
            out.extend(item.rings()?);
        }
        Ok(out)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.src[self.pos..].chars().next().unwrap().len_utf8();
        }
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.ws();
        if self.src[self.pos..].starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected `{tok}`")))
        }
    }

    fn nat(&mut self) -> Result<i128> {
        self.ws();
        let start = self.pos;
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| Error::parse(start, "expected a number"))
    }

    fn family(&mut self) -> Result<Family> {
        if self.eat("prod(") {
            let mut items = vec![self.item()?];
            while self.eat(",") {
                items.push(self.item()?);
            }
            self.expect(")")?;
            Ok(Family::Prod(items))
        } else if self.eat("idealize(") {
            let item = self.item()?;
            self.expect(")")?;
            Ok(Family::Idealize(Box::new(item)))
        } else if self.eat("ideal(") {
            if !(self.eat("z") || self.eat("Z")) {
                return Err(Error::parse(self.pos, "expected `z`"));
            }
            self.expect(")")?;
            Ok(Family::IdealZ)
        } else if self.eat("zn:") {
            let at = self.pos;
            let a = self.nat()?;
            let b = if self.eat("..") { self.nat()? } else { a };
            if a < 2 || b < a {
                return Err(Error::Semantic(format!("bad modulus range at {at}")));
            }
            Ok(Family::Zn(a, b))
        } else if self.eat("z") || self.eat("Z") {
            Ok(Family::Z)
        } else {
            Err(Error::parse(self.pos, "expected a ring family"))
        }
    }

    fn item(&mut self) -> Result<CorpusItem> {
        let mut families = vec![self.family()?];
        while self.eat("x") {
            families.push(self.family()?);
        }
        let max_size = if self.eat(":size<=") {
            Some(self.nat()? as usize)
        } else {
            None
        };
        Ok(CorpusItem { families, max_size })
    }
}

impl FromStr for CorpusSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s, pos: 0 };
        let mut items = vec![p.item()?];
        while p.eat(";") {
            items.push(p.item()?);
        }
        p.ws();
        if p.pos != s.len() {
            return Err(Error::parse(p.pos, "trailing input"));
        }
        Ok(CorpusSpec { items })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Z => write!(f, "z"),
            Family::IdealZ => write!(f, "ideal(z)"),
            Family::Zn(a, b) if a == b => write!(f, "zn:{a}"),
            Family::Zn(a, b) => write!(f, "zn:{a}..{b}"),
            Family::Prod(items) => {
                let shown: Vec<String> = items.iter().map(|i| i.to_string()).collect();
                write!(f, "prod({})", shown.join(", "))
            }
            Family::Idealize(item) => write!(f, "idealize({item})"),
        }
    }
}

impl fmt::Display for CorpusItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<String> = self.families.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", shown.join(" x "))?;
        if let Some(n) = self.max_size {
            write!(f, ":size<={n}")?;
        }
        Ok(())
    }
}

impl fmt::Display for CorpusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<String> = self.items.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", shown.join("; "))
    }
}
