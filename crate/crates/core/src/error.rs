use thiserror::Error;

pub type Result<T> = std::result::Result<T, LeibError>;

#[derive(Debug, Error)]
pub enum LeibError {
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: String, found: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("{0} is not an admissible prime modulus")]
    NotPrime(u64),

    #[error("characteristic 2 is not supported")]
    CharacteristicTwo,

    #[error("division by zero")]
    DivisionByZero,

    #[error(
        "left Leibniz identity fails on ({i}, {j}, {k}): [e_i,[e_j,e_k]] = {lhs:?} but [[e_i,e_j],e_k] + [e_j,[e_i,e_k]] = {rhs:?}"
    )]
    IdentityViolation {
        i: usize,
        j: usize,
        k: usize,
        lhs: Vec<String>,
        rhs: Vec<String>,
    },

    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,

    #[error("matrix is not a derivation")]
    NotADerivation,

    #[error("algebra is not nilpotent")]
    NotNilpotent,

    #[error("algebra is not a Lie algebra")]
    NotLie,

    #[error("action is not a Lie module: {0}")]
    NotAModule(String),

    #[error("operation unsupported in characteristic {0}")]
    UnsupportedCharacteristic(u64),

    #[error("coordinate solve failed: {0}")]
    CoordinateSolveFailure(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("schema error: {0}")]
    Schema(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
