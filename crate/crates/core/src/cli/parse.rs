//! Surface syntax for rings, ideals and maps.
//!
//! ```text
//! ring  := term {"x" term}
//! term  := "Z" | "Z/" nat | "quot(" ring "," ideal ")"
//!        | "idealize(" ring ["," "mod" ideal] ")"
//!        | "loc(" ring "," "{" nat {"," nat} "}" ")"
//! ideal := "gen" [elem {"," elem}]
//! elem  := int | "(" int {"," int} ")"
//! phi   := "empty" | "zero" | "id" | "pow:" nat | "omega" | "prod:[" phi {"," phi} "]"
//! ```

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::phi::Phi;
use crate::ring::{IdealSpec, ModuleSpec, Ring, RingSpec};

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self, tok: &str) -> bool {
        self.ws();
        self.rest().starts_with(tok)
    }

    fn eat(&mut self, tok: &str) -> bool {
        if self.peek(tok) {
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

    fn int(&mut self) -> Result<i128> {
        self.ws();
        let start = self.pos;
        if self.rest().starts_with('-') {
            self.pos += 1;
        }
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            self.pos = start;
            return Err(Error::parse(start, "expected an integer"));
        }
        self.pos += digits;
        self.src[start..self.pos]
            .parse()
            .map_err(|_| Error::parse(start, "integer out of range"))
    }

    fn nat(&mut self) -> Result<i128> {
        self.ws();
        let at = self.pos;
        if self.rest().starts_with('-') {
            return Err(Error::parse(at, "expected a natural number"));
        }
        self.int()
    }

    fn finish(&mut self) -> Result<()> {
        self.ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            Err(Error::parse(self.pos, "unexpected trailing input"))
        }
    }

    fn ring(&mut self) -> Result<RingSpec> {
        let mut terms = vec![self.term()?];
        while self.eat("x") {
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().expect("one term")
        } else {
            RingSpec::Product(terms)
        })
    }

    fn term(&mut self) -> Result<RingSpec> {
        if self.eat("quot(") {
            let base = self.ring()?;
            self.expect(",")?;
            let ideal = self.ideal()?;
            self.expect(")")?;
            Ok(RingSpec::Quotient(Box::new(base), ideal))
        } else if self.eat("idealize(") {
            let base = self.ring()?;
            let module = if self.eat(",") {
                self.expect("mod")?;
                ModuleSpec::Quotient(self.ideal()?)
            } else {
                ModuleSpec::Regular
            };
            self.expect(")")?;
            Ok(RingSpec::Idealization(Box::new(base), module))
        } else if self.eat("loc(") {
            let base = self.ring()?;
            self.expect(",")?;
            self.expect("{")?;
            let mut set = vec![self.nat()?];
            while self.eat(",") {
                set.push(self.nat()?);
            }
            self.expect("}")?;
            self.expect(")")?;
            Ok(RingSpec::Localization(Box::new(base), set))
        } else if self.eat("Z") {
            if self.eat("/") {
                let at = self.pos;
                let n = self.nat()?;
                if n < 2 {
                    return Err(Error::Semantic(format!("Z/{n} at {at}: the modulus must be at least 2")));
                }
                Ok(RingSpec::Zn(n))
            } else {
                Ok(RingSpec::Z)
            }
        } else {
            Err(Error::parse(self.pos, "expected a ring term"))
        }
    }

    fn ideal(&mut self) -> Result<IdealSpec> {
        self.expect("gen")?;
        let mut gens = Vec::new();
        if self.peek("(") || self.peek("-") || self.rest().starts_with(|c: char| c.is_ascii_digit()) {
            gens.push(self.elem()?);
            while self.eat(",") {
                gens.push(self.elem()?);
            }
        }
        Ok(IdealSpec::new(gens))
    }

    fn elem(&mut self) -> Result<Vec<i128>> {
        if self.eat("(") {
            let mut v = vec![self.int()?];
            while self.eat(",") {
                v.push(self.int()?);
            }
            self.expect(")")?;
            Ok(v)
        } else {
            Ok(vec![self.int()?])
        }
    }

    fn phi(&mut self) -> Result<Phi> {
        for (name, phi) in [("empty", Phi::Empty), ("zero", Phi::Zero), ("id", Phi::Identity), ("omega", Phi::Omega)] {
            if self.eat(name) {
                return Ok(phi);
            }
        }
        if self.eat("pow:") {
            let at = self.pos;
            let n = self.nat()?;
            if !(2..=u32::MAX as i128).contains(&n) {
                return Err(Error::Semantic(format!("pow:{n} at {at}: the exponent must be at least 2")));
            }
            return Ok(Phi::Power(n as u32));
        }
        if self.eat("prod:[") {
            let mut parts = vec![self.phi()?];
            while self.eat(",") {
                parts.push(self.phi()?);
            }
            self.expect("]")?;
            return Ok(Phi::Product(parts));
        }
        Err(Error::parse(self.pos, "expected a map name"))
    }
}

/// Parses a ring expression without normalizing it.
pub fn parse_ring_expr(text: &str) -> Result<RingSpec> {
    let mut c = Cursor::new(text);
    let spec = c.ring()?;
    c.finish()?;
    Ok(spec)
}

/// Parses a ring expression and returns the canonical spec of the ring.
pub fn parse_ring(text: &str) -> Result<RingSpec> {
    parse_ring_expr(text)?.normalize()
}

pub fn parse_ideal_spec(text: &str) -> Result<IdealSpec> {
    let mut c = Cursor::new(text);
    let spec = c.ideal()?;
    c.finish()?;
    Ok(spec)
}

/// Parses `gen ...` and builds the ideal in `ring`.
pub fn parse_ideal(text: &str, ring: &Ring) -> Result<Ideal> {
    let spec = parse_ideal_spec(text)?;
    if spec.generators.iter().any(|g| g.len() != ring.slots()) {
        return Err(Error::RingMismatch);
    }
    spec.build(ring)
}

pub fn parse_phi(text: &str) -> Result<Phi> {
    let mut c = Cursor::new(text);
    let phi = c.phi()?;
    c.finish()?;
    Ok(phi)
}
