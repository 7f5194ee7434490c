use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of order {p}^{n} exceeds the size bound {bound}")]
    FieldTooLarge { p: u32, n: u32, bound: u64 },
    #[error("element code {0} is out of range for this field")]
    BadElement(u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a valid Frobenius base for this field")]
    BadFrobeniusBase(u64),
    #[error("element is not a square")]
    NotASquare,
    #[error("cubing is bijective on this field, no non-cube exists")]
    NoNonCube,
    #[error("no embedding from F_{{{p}^{from}}} into F_{{{p}^{to}}}")]
    NoEmbedding { p: u32, from: u32, to: u32 },
    #[error("zero polynomial has no {0}")]
    ZeroPolynomial(&'static str),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("expression is constant")]
    ConstantExpression,
    #[error("points must be pairwise distinct")]
    RepeatedPoints,
    #[error("matrix is singular")]
    Singular,
    #[error("degree {0} is not supported here")]
    UnsupportedDegree(usize),
    #[error("expression is inseparable")]
    Inseparable,
    #[error("operation requires {0}")]
    Characteristic(&'static str),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("no canonical representative exists for four-point classes")]
    NoCanonicalForm,
    #[error("enumeration of {count} items exceeds the limit {limit}")]
    LimitExceeded { count: u64, limit: u64 },
    #[error("parse error at {pos}: {message}")]
    Parse { pos: usize, message: String },
    #[error("statement {statement} does not apply: {reason}")]
    Inapplicable { statement: String, reason: String },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
