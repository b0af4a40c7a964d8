use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid bit string {0:?}: expected only '0' and '1'")]
    InvalidBits(String),

    #[error("invalid arrangement {0:?}: expected \"cyc:\" followed by bits")]
    InvalidArrangement(String),

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("position {0} does not hold a 0")]
    NotAZero(usize),

    #[error("cut {0} is not a member of the restricting set")]
    CutNotInSet(usize),

    #[error("restricting set is empty")]
    EmptySet,

    #[error("arrangement has {zeros} zeros and {ones} ones; need {expected}")]
    WrongShape {
        ones: usize,
        zeros: usize,
        expected: String,
    },

    #[error("parameter {name}={value} out of range: {reason}")]
    OutOfRange {
        name: &'static str,
        value: i64,
        reason: String,
    },

    #[error("ones={ones} and zeros={zeros} are not relatively prime")]
    NotCoprime { ones: usize, zeros: usize },

    #[error("not q-satisfying for q={0}")]
    NotSatisfying(usize),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("inexact division: {numerator} / {denominator}")]
    InexactDivision {
        numerator: String,
        denominator: String,
    },

    #[error("integer cycle sums to {0}, expected 1")]
    CycleSum(i64),

    #[error("invalid integer cycle {0:?}")]
    InvalidCycle(String),

    #[error("invalid tree {0:?}")]
    InvalidTree(String),

    #[error("sequence does not encode a tree: {0}")]
    NotATree(String),

    #[error("invalid word {0:?}: {1}")]
    InvalidWord(String, String),

    #[error("invalid stack text {0:?}: {1}")]
    InvalidStackText(String, String),

    #[error("invalid stack: {0}")]
    InvalidStack(String),

    #[error("sweep exceeded the instance cap of {cap}")]
    CapExceeded { cap: u64 },

    #[error("no unique linearization with {wanted} good intervals (found {found})")]
    NoUniqueLinearization { wanted: usize, found: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
