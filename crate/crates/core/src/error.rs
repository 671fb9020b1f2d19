use thiserror::Error;

/// Every failure the library reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("divisor has no determinable lowest term")]
    IndeterminateDivisor,
    #[error("exact operation has an infinite expansion; supply a truncation order")]
    InfiniteExpansion,
    #[error("square root requires a positive element")]
    NotPositive,
    #[error("leading coefficient {0} is not the square of a rational")]
    IrrationalLeadingCoefficient(String),
    #[error("exact series is not a perfect square")]
    NotAPerfectSquare,
    #[error("rank mismatch: braid on {braid} strands, free word of rank {word}")]
    RankMismatch { braid: usize, word: usize },
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("braid needs at least 2 strands, got {0}")]
    TooFewStrands(usize),
    #[error("operation needs a 3-strand braid, got {0} strands")]
    WrongStrands(usize),
    #[error("polynomial vanishes at interval endpoint {0}")]
    EndpointIsRoot(String),
    #[error("sign could not be determined")]
    IndeterminateSign,
    #[error("twist exponent is not an integer")]
    NonIntegralTwist,
    #[error("input braid is periodic (family C)")]
    PeriodicInput,
    #[error("Burau eigenvalues are not all positive")]
    NotAllPositive,
    #[error("truncation order too small to invert the eigenbasis")]
    TruncationInsufficient,
    #[error("word has nonzero exponent sum {0}")]
    NonzeroExponentSum(i64),
    #[error("word is trivial")]
    TrivialWord,
    #[error("family A parameters must contain a positive entry")]
    ZeroTuple,
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
