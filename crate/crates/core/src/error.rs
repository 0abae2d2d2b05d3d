use thiserror::Error;

/// Errors raised by the algebraic layers (scalars, groups, iterants, braids).
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("malformed scalar: {0}")]
    MalformedScalar(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot specialize: {0}")]
    Specialization(String),
    #[error("degree mismatch: expected {expected}, got {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("operands live over different groups ({left} vs {right})")]
    GroupMismatch { left: String, right: String },
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("unsupported group {0:?}")]
    UnsupportedGroup(String),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("matrix cells not tiled by the group action: uncovered {uncovered:?}, overlapping {overlapping:?}")]
    Decomposition {
        uncovered: Vec<(usize, usize)>,
        overlapping: Vec<(usize, usize)>,
    },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("operation requires {0}")]
    WrongGroup(String),
    #[error("scalar order {order} has no primitive {needed}-th root of unity")]
    MissingRoot { needed: u32, order: u32 },
    #[error("Lie algebra not closed: [F{a}, F{b}] leaves a nonzero residual")]
    NotClosed { a: usize, b: usize },
    #[error("strand mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("invalid braid generator {generator} for {strands} strands")]
    InvalidGenerator { generator: i64, strands: usize },
    #[error("unknown particle {name:?}; catalogue has: {known}")]
    UnknownParticle { name: String, known: String },
    #[error("particle {0:?} is already defined")]
    DuplicateParticle(String),
    #[error("element is not invertible")]
    NotInvertible,
    #[error("unknown suite {name:?}; known: {known}")]
    UnknownSuite { name: String, known: String },
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
