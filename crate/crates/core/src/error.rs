use thiserror::Error;

use crate::boolean::BooleanFailure;
use crate::Elem;

/// Malformed `.ist` / `.grp` text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("input contains no table")]
    Empty,
    #[error("line {line}: expected header `n <size>`")]
    BadHeader { line: usize },
    #[error("line {line}: size must be at least 1")]
    ZeroSize { line: usize },
    #[error("line {line}: cannot read `{token}` as a table entry")]
    BadToken { line: usize, token: String },
    #[error("line {line}: row {row} has {found} entries, expected {expected}")]
    RowLength {
        line: usize,
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("table ends after {found} rows, expected {expected}")]
    MissingRows { expected: usize, found: usize },
    #[error("line {line}: entry {value} at ({row}, {col}) is out of range")]
    OutOfRange {
        line: usize,
        row: usize,
        col: usize,
        value: i64,
    },
    #[error("line {line}: unexpected data after the table")]
    TrailingData { line: usize },
}

/// Everything that can go wrong in this crate.
///
/// Validation errors name the first witness found while scanning in id order.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("table has {found} entries, expected {expected}")]
    TableShape { expected: usize, found: usize },
    #[error("entry {value} is out of range for a table of size {size}")]
    EntryOutOfRange { value: usize, size: usize },
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(Elem, Elem, Elem),
    #[error("element {element} has {count} generalized inverses, expected exactly one")]
    NotInverse { element: Elem, count: usize },
    #[error("idempotents {0} and {1} do not commute")]
    IdempotentsDontCommute(Elem, Elem),
    #[error("operation requires a zero element")]
    NoZero,
    #[error("not a groupoid ({axiom}): witness {witness:?}")]
    NotGroupoid {
        axiom: &'static str,
        witness: Vec<usize>,
    },
    #[error("not a group: {0}")]
    NotAGroup(&'static str),
    #[error("{y} is not below {x}")]
    NotBelow { x: Elem, y: Elem },
    #[error("{0} and {1} are not compatible")]
    NotCompatible(Elem, Elem),
    #[error("{0} is the zero idempotent")]
    ZeroIdempotent(Elem),
    #[error("{0} is not an idempotent")]
    NotIdempotent(Elem),
    #[error("not an additive ideal: {0}")]
    NotAnIdeal(String),
    #[error("map is not multiplicative at ({0}, {1})")]
    NotMultiplicative(Elem, Elem),
    #[error("map does not send zero to zero")]
    NotZeroPreserving,
    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("target is not Boolean: {0}")]
    TargetNotBoolean(BooleanFailure),
    #[error("not Boolean: {0}")]
    NotBoolean(BooleanFailure),
    #[error("not a monoid")]
    NotMonoid,
    #[error("matrix dimensions {0} and {1} differ")]
    DimensionMismatch(usize, usize),
    #[error("not a rook matrix: entries at {0:?} and {1:?} are not orthogonal")]
    NotRookMatrix((usize, usize), (usize, usize)),
    #[error("construction would have {size} elements, limit is {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("carrier of {size} elements exceeds the search cap {cap}")]
    SizeCapExceeded { size: usize, cap: usize },
    #[error("isomorphism search undecided for groups of order {0}")]
    Undecided(usize),
    #[error("certificate check failed: {0}")]
    VerificationFailed(String),
}

impl Error {
    /// Variant name, as printed by the command-line front end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Parse(_) => "ParseError",
            Error::TableShape { .. } | Error::EntryOutOfRange { .. } => "ParseError",
            Error::NotAssociative(..) => "NotAssociative",
            Error::NotInverse { .. } => "NotInverse",
            Error::IdempotentsDontCommute(..) => "IdempotentsDontCommute",
            Error::NoZero => "NoZero",
            Error::NotGroupoid { .. } => "NotGroupoid",
            Error::NotAGroup(_) => "NotAGroup",
            Error::NotBelow { .. } => "NotBelow",
            Error::NotCompatible(..) => "NotCompatible",
            Error::ZeroIdempotent(_) => "ZeroIdempotent",
            Error::NotIdempotent(_) => "NotIdempotent",
            Error::NotAnIdeal(_) => "NotAnIdeal",
            Error::NotMultiplicative(..) => "NotMultiplicative",
            Error::NotZeroPreserving => "NotZeroPreserving",
            Error::NotHomomorphism(_) => "NotHomomorphism",
            Error::TargetNotBoolean(_) => "TargetNotBoolean",
            Error::NotBoolean(_) => "NotBoolean",
            Error::NotMonoid => "NotMonoid",
            Error::DimensionMismatch(..) => "DimensionMismatch",
            Error::NotRookMatrix(..) => "NotRookMatrix",
            Error::TooLarge { .. } => "TooLarge",
            Error::SizeCapExceeded { .. } => "SizeCapExceeded",
            Error::Undecided(_) => "Undecided",
            Error::VerificationFailed(_) => "VerificationFailed",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
