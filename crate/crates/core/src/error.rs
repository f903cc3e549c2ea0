use thiserror::Error;

/// Errors raised by path construction, the maps, and the inverse machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimensions ({a},{b}) are not coprime")]
    NotCoprime { a: usize, b: usize },

    #[error("dimensions must be positive, got ({a},{b})")]
    ZeroDimension { a: usize, b: usize },

    #[error("invalid step {found:?} at offset {offset}; expected 'N' or 'E'")]
    InvalidStep { offset: usize, found: char },

    #[error("expected {expected_north} N and {expected_east} E steps, found {north} N and {east} E")]
    WrongStepCounts {
        expected_north: usize,
        expected_east: usize,
        north: usize,
        east: usize,
    },

    #[error("lattice point ({x},{y}) lies below the diagonal")]
    BelowDiagonal { x: usize, y: usize },

    #[error("partition {parts:?} does not fit above the diagonal of the {a}x{b} grid")]
    DoesNotFitAboveDiagonal { a: usize, b: usize, parts: Vec<usize> },

    #[error("sequence {0:?} is not weakly decreasing")]
    NotAPartition(Vec<usize>),

    #[error("{0:?} is not a permutation of 1..=n")]
    InvalidPermutation(Vec<usize>),

    #[error("permutation of size {found} does not match a+b = {expected}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("expected {expected} cyclic descents, found {found}")]
    WrongDescentCount { expected: usize, found: usize },

    #[error("operation requires the square case b = a+1, got ({a},{b})")]
    NotSquareCase { a: usize, b: usize },

    #[error("maximal level is attained more than once")]
    AmbiguousMaxLevel,

    #[error("path has area zero")]
    AreaZero,

    #[error("partition has a box of forbidden hook length {hook}")]
    NotACore { hook: usize },

    #[error("{0:?} is not the positive hook set of a Dyck path")]
    InvalidHookSet(Vec<i64>),

    #[error("{map} disagrees between methods {first} and {second} on {path}: {left} vs {right}")]
    MethodDisagreement {
        map: &'static str,
        first: &'static str,
        second: &'static str,
        path: String,
        left: String,
        right: String,
    },

    #[error("gamma has {cycles} cycles, expected a single cycle")]
    NotACycle { cycles: usize },

    #[error("cyclic descents of gamma do not describe a Dyck path")]
    NotADyckPath,

    #[error("recovered path {path} does not map back to the given pair")]
    InconsistentPair { path: String },

    #[error("no preimage found for {path}: {detail}")]
    NoPreimage { path: String, detail: String },

    #[error("dimensions ({a},{b}) are too small to split")]
    DimensionTooSmall { a: usize, b: usize },

    #[error("path does not visit the level-1 lattice point ({x},{y})")]
    Level1NotVisited { x: usize, y: usize },

    #[error("the lowest path has no box to add at level 0")]
    NoBoxToAdd,

    #[error("no east step among the first {delta} steps")]
    NoEastInPrefix { delta: usize },

    #[error("no north step among the first {delta} steps")]
    NoNorthInPrefix { delta: usize },

    #[error("delta {delta} outside 1..={max}")]
    DeltaOutOfRange { delta: usize, max: usize },

    #[error("bounce path leaves the grid")]
    MalformedPath,

    #[error("({a},{b}) is not of the form (a, ak+r) with 0 < r < a")]
    NotBounceShape { a: usize, b: usize },

    #[error("{strategy} inverse failed the round trip for {path} (delta trace {trace:?})")]
    RoundTripFailure {
        strategy: &'static str,
        path: String,
        trace: Vec<usize>,
    },

    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported overlay {0}")]
    UnsupportedOverlay(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
