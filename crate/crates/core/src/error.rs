use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("invalid Pauli letter {0:?}")]
    InvalidLetter(char),

    #[error("empty Pauli string")]
    EmptyPauli,

    #[error("degenerate observable with single eigenvalue: {0}")]
    DegenerateObservable(String),

    #[error("observables {0} and {1} do not commute")]
    NonCommuting(String, String),

    #[error("invalid context: {0}")]
    InvalidContext(String),

    #[error("fine-grained basis unavailable for context {0}")]
    FineBasisUnavailable(String),

    #[error("unsupported measurement context {0}")]
    UnsupportedContext(String),

    #[error("null state vector")]
    NullState,

    #[error("synthesis limited to product states")]
    NotProductState,

    #[error("qubit index {index} out of range for {n} qubits")]
    QubitOutOfRange { index: usize, n: usize },

    #[error("CNOT control and target coincide at qubit {0}")]
    ControlIsTarget(usize),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("labels do not factor as pairs")]
    UnfactorableLabels,

    #[error("missing entropy entry {0}")]
    MissingEntry(String),

    #[error("arity mismatch: {0}")]
    Arity(String),

    #[error("too many observables for assignment enumeration: {0}")]
    TooManyObservables(usize),

    #[error("zero total shots")]
    ZeroShots,

    #[error("invalid noise model: {0}")]
    InvalidNoise(String),

    #[error("empty input: {0}")]
    EmptyInput(String),

    #[error("missing context {0}")]
    MissingContext(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("qasm parse error at line {line}: {msg}")]
    Qasm { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
