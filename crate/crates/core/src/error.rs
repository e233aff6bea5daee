use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("the pair does not generate a transitive group")]
    NotTransitive,
    #[error("the dessin is not abelian")]
    NotAbelian,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("group order {order} exceeds cap {cap}")]
    OrderExceedsCap { order: u128, cap: u128 },
    #[error("derived subgroup of order {order} exceeds cap {cap}")]
    DerivedTooLarge { order: u128, cap: u128 },
    #[error("element is not in the group")]
    NotInGroup,
    #[error("central element does not commute with the generator images")]
    CNotCentral,
    #[error("quotient has no central element image")]
    MissingCentralElement,
    #[error("2m+1 = {exponent} is not coprime to {modulus}")]
    UnitConditionViolated { exponent: i64, modulus: u64 },
    #[error("the transformed pair is not transitive")]
    ResultNotTransitive,
    #[error("target of the second shadow is not the source of the first")]
    TargetMismatch,
    #[error("shadow has not passed verification")]
    NotVerified,
    #[error("Euler characteristic defect {0} is odd or negative")]
    OddEulerDefect(i64),
    #[error("third entry does not close the triple; expected {expected}")]
    TripleMismatch { expected: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Cap violations map to a distinct process exit status in the CLI.
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(
            self,
            Error::OrderExceedsCap { .. } | Error::DerivedTooLarge { .. }
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
