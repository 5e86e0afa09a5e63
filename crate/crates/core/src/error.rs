use std::path::PathBuf;

use thiserror::Error;

use crate::ring::ValidationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch for rank {rank}: {detail}")]
    DimensionMismatch { rank: usize, detail: String },
    #[error("invalid labels: {0}")]
    InvalidLabels(String),
    #[error("dual table is not a permutation of 0..{0}")]
    InvalidDualTable(usize),
    #[error("simple {0} has no dual")]
    NoDual(usize),
    #[error("simple {0} has an ambiguous dual")]
    AmbiguousDual(usize),
    #[error("class vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("integer overflow in class arithmetic")]
    Overflow,
    #[error("ring fails validation: {0}")]
    ValidationFailed(ValidationReport),
    #[error("reconstructed ring is invalid: {0}")]
    InvalidRing(ValidationReport),
    #[error("power iteration did not converge within {0} iterations")]
    ConvergenceFailure(usize),
    #[error("Grothendieck ring is not commutative")]
    NonCommutative,
    #[error("eigenvalue collision in the random combination after {0} seeds")]
    DegenerateCombination(u64),
    #[error("character matrix is singular")]
    SingularCharacterMatrix,
    #[error("not a fusion subcategory: {0}")]
    NotClosed(String),
    #[error("kernel of character {character} is not closed ({detail}); try a smaller epsilon")]
    ClosureViolation { character: usize, detail: String },
    #[error("class vector is zero")]
    ZeroClass,
    #[error("class vector has a negative coefficient")]
    NegativeClass,
    #[error("cap {cap} exhausted before all simples appeared (object faithful: {faithful})")]
    CapExceeded { cap: usize, faithful: bool },
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("grading methods disagree: exponent method {exponent:?}, character method {character:?}")]
    MethodDisagreement {
        exponent: Vec<usize>,
        character: Vec<Option<usize>>,
    },
    #[error("S[{0}][unit] vanishes")]
    ZeroEntry(usize),
    #[error("Verlinde coefficient N[{i}][{j}][{k}] = {value} is not an integer")]
    NonIntegral { i: usize, j: usize, k: usize, value: f64 },
    #[error("S-matrix invariant failed: {0}")]
    InvariantFailed(String),
    #[error("S-matrix does not reproduce the fusion rules of {0}")]
    VerlindeMismatch(String),
    #[error("unknown built-in {0:?}")]
    UnknownName(String),
    #[error("{}: line {line}, column {column}: {message}", path.display())]
    Parse {
        path: PathBuf,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("declared dual {declared:?} disagrees with the structure constants ({computed:?})")]
    DualMismatch { declared: Vec<usize>, computed: Vec<usize> },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
