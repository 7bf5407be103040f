//! Decision procedures for φ-r-ideals and their relatives over computable
//! commutative rings.

pub mod arith;
pub mod classify;
pub mod cli;
pub mod error;
pub mod ideal;
pub mod phi;
pub mod ring;
pub mod verdict;
pub mod verify;

pub use error::{Error, Result};
pub use ideal::Ideal;
pub use ring::{Element, Ring, RingSpec};
pub use verdict::{Bound, Verdict, Witness};
