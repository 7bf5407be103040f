use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring table: {0}")]
    InvalidTable(String),
    #[error("idealization requires a finite base ring")]
    InfiniteIdealizationBase,
    #[error("multiplicative set contains zero")]
    ZeroInMultiplicativeSet,
    #[error("element is not in the ring: {0}")]
    ElementNotInRing(String),
    #[error("product of an empty list of rings")]
    EmptyProduct,
    #[error("ideal is not proper")]
    ImproperIdeal,
    #[error("J(+)N is not an ideal: JM is not contained in N")]
    InvalidIdealPair,
    #[error("denominator is not a regular element: {0}")]
    NonRegularDenominator(String),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("no entry in custom phi table for ideal {0}")]
    MissingCustomEntry(String),
    #[error("ring has infinitely many ideals; a bound is required")]
    UnboundedEnumeration,
    #[error("theorem does not apply to this ring shape: {0}")]
    ShapeMismatch(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{0}")]
    Semantic(String),
}

impl Error {
    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
