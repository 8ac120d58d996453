use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by constructors and operations whose preconditions fail.
///
/// Axiom failures reported by the `check_*` family are not errors; they come
/// back as reports with a witness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier size must be at least 1")]
    EmptyCarrier,
    #[error("table has {found} entries, expected {expected} for size {size}")]
    TableShape { size: usize, expected: usize, found: usize },
    #[error("entry {value} at {location} is outside 0..{size}")]
    EntryOutOfRange { location: String, value: usize, size: usize },
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("not a rack: {0}")]
    NotARack(String),
    #[error("not a birack: {0}")]
    NotABirack(String),
    #[error("not a biquandle: {0}")]
    NotABiquandle(String),
    #[error("not left non-degenerate: b -> b_a is not a bijection for a = {0}")]
    NotLeftNondegenerate(usize),
    #[error("sigma is not invertible, cannot apply the negative letter {0}")]
    NotInvertible(i32),
    #[error("{0} is not a left unit")]
    NotLeftUnit(usize),
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("braid word: {0}")]
    Braid(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("invalid subcomplex: {0}")]
    Subcomplex(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}
