use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("cannot parse `{input}` at byte {pos}: {msg}")]
    Symbolic { input: String, pos: usize, msg: String },
    #[error("gram matrix, line {line}: {msg}")]
    Gram { line: usize, msg: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("signature ({r},{s}) has dimension {d} < 3", d = r + s)]
    SignatureTooSmall { r: u32, s: u32 },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("zero is not allowed in a Hilbert symbol or diagonal form")]
    ZeroEntry,
    #[error("operation needs {expected} dimension, got d = {d}")]
    WrongParity { expected: &'static str, d: u32 },
    #[error("no even unimodular lattice has signature ({r},{s}): need d even and r - s = 0 mod 8")]
    NoEvenUnimodular { r: u32, s: u32 },
    #[error("n = {0} is outside 1..=30")]
    TableRange(u32),
    #[error("λ table needs n >= 2, got {0}")]
    LambdaRange(u32),
    #[error("2-adic representative must be odd, got {0}")]
    EvenUnit(i64),
    #[error("gram matrix is not symmetric")]
    NotSymmetric,
    #[error("gram matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("lattice exceeds the search bound: {0}")]
    SearchBound(String),
    #[error("precision {digits} digits / {guard} guard is outside the supported range")]
    Precision { digits: u32, guard: u32 },
    #[error("{what} disagrees between methods at {digits} digits")]
    MethodDisagreement { what: String, digits: u32 },
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T> = std::result::Result<T, Error>;
