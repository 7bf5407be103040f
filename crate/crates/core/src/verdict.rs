//! Three-valued outcomes of possibly semi-decidable checks.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value as Json};

use crate::ideal::Ideal;
use crate::ring::{Element, Ring};

/// Search limits for infinite rings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    /// Largest magnitude of an integer entry in element searches.
    pub elements: u64,
    /// Largest generator in ideal enumeration.
    pub ideals: u64,
}

impl Default for Bound {
    fn default() -> Self {
        Bound {
            elements: 1000,
            ideals: 50,
        }
    }
}

impl Bound {
    pub fn uniform(b: u64) -> Self {
        Bound {
            elements: b,
            ideals: b,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessItem {
    Element(Ring, Element),
    Ideal(Ideal),
}

impl WitnessItem {
    pub fn to_json(&self) -> Json {
        match self {
            WitnessItem::Element(r, e) => r.element_json(e),
            WitnessItem::Ideal(i) => json!(i.to_string()),
        }
    }

    pub fn as_element(&self) -> Option<&Element> {
        match self {
            WitnessItem::Element(_, e) => Some(e),
            WitnessItem::Ideal(_) => None,
        }
    }

    pub fn as_ideal(&self) -> Option<&Ideal> {
        match self {
            WitnessItem::Ideal(i) => Some(i),
            WitnessItem::Element(..) => None,
        }
    }
}

impl fmt::Display for WitnessItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessItem::Element(r, e) => write!(f, "{}", r.format_element(e)),
            WitnessItem::Ideal(i) => write!(f, "{i}"),
        }
    }
}

/// The data exhibiting a violation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Witness {
    pub items: Vec<WitnessItem>,
}

impl Witness {
    pub fn elements(ring: &Ring, elems: impl IntoIterator<Item = Element>) -> Self {
        Witness {
            items: elems.into_iter().map(|e| WitnessItem::Element(ring.clone(), e)).collect(),
        }
    }

    pub fn ideals(ideals: impl IntoIterator<Item = Ideal>) -> Self {
        Witness {
            items: ideals.into_iter().map(WitnessItem::Ideal).collect(),
        }
    }

    pub fn with(mut self, item: WitnessItem) -> Self {
        self.items.push(item);
        self
    }

    pub fn element(&self, i: usize) -> Option<&Element> {
        self.items.get(i).and_then(WitnessItem::as_element)
    }

    pub fn ideal(&self, i: usize) -> Option<&Ideal> {
        self.items.get(i).and_then(WitnessItem::as_ideal)
    }

    pub fn to_json(&self) -> Json {
        Json::Array(self.items.iter().map(WitnessItem::to_json).collect())
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<String> = self.items.iter().map(|i| i.to_string()).collect();
        write!(f, "[{}]", shown.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Witness),
    /// No violation among candidates with entries of magnitude at most the bound.
    HoldsUpToBound(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Fails,
    HoldsUpTo,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::HoldsUpTo => "holds_up_to",
        }
    }
}

impl Verdict {
    /// `Holds` when `exact`, otherwise `HoldsUpToBound(bound)`.
    pub fn passing(exact: bool, bound: u64) -> Verdict {
        if exact {
            Verdict::Holds
        } else {
            Verdict::HoldsUpToBound(bound)
        }
    }

    pub fn status(&self) -> Status {
        match self {
            Verdict::Holds => Status::Holds,
            Verdict::Fails(_) => Status::Fails,
            Verdict::HoldsUpToBound(_) => Status::HoldsUpTo,
        }
    }

    pub fn is_fails(&self) -> bool {
        matches!(self, Verdict::Fails(_))
    }

    /// True for `Holds` and `HoldsUpToBound`.
    pub fn passes(&self) -> bool {
        !self.is_fails()
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Fails(w) => Some(w),
            _ => None,
        }
    }

    /// Conjunction: the first failure wins, then the weakest bound.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::Fails(w), _) | (_, Verdict::Fails(w)) => Verdict::Fails(w),
            (Verdict::HoldsUpToBound(a), Verdict::HoldsUpToBound(b)) => Verdict::HoldsUpToBound(a.min(b)),
            (Verdict::HoldsUpToBound(a), _) | (_, Verdict::HoldsUpToBound(a)) => Verdict::HoldsUpToBound(a),
            _ => Verdict::Holds,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds => write!(f, "holds"),
            Verdict::Fails(w) => write!(f, "fails {w}"),
            Verdict::HoldsUpToBound(b) => write!(f, "holds up to {b}"),
        }
    }
}
