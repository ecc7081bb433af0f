use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("parts must be weakly decreasing and positive, got {0:?}")]
    NotAPartition(Vec<usize>),

    #[error("{outer} does not contain {inner}")]
    NotContained { outer: String, inner: String },

    #[error("{partition} has no addable node in column {column}")]
    NoAddableNode { partition: String, column: i64 },

    #[error("{x} is not in the strip set of {partition} at column {column}")]
    NotInStripSet {
        partition: String,
        column: i64,
        x: i64,
    },

    #[error("shape has {cells} cells, enumeration cap is {cap}")]
    CapExceeded { cells: usize, cap: usize },

    #[error("invalid tiling: {0}")]
    InvalidTiling(String),

    #[error("the empty partition has no highest node")]
    EmptyPartition,

    #[error("truncation size {requested} is below the minimum {minimum}")]
    TruncationTooSmall { requested: usize, minimum: usize },

    #[error("{partition} does not fit in the {f}x{g} box")]
    BoxMismatch {
        partition: String,
        f: usize,
        g: usize,
    },

    #[error("({a},{b}) is not a Garnir node of {partition}")]
    NotGarnirNode {
        partition: String,
        a: usize,
        b: usize,
    },

    #[error("index {index} out of range 1..{bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("residue modulus must be at least 2, got {0}")]
    BadModulus(usize),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
