use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("scalars from different fields: conductor {0} vs {1}")]
    ConductorMismatch(u32, u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0}: input must be nonzero")]
    ZeroInput(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("root-of-unity assumption (*) violated: {0}")]
    AssumptionViolation(String),
    #[error("invalid algebra spec: {0}")]
    InvalidSpec(String),
    #[error("minor enumeration budget exceeded: {rows}x{cols} matrix, limit {limit}x{limit}")]
    MatrixTooLarge {
        rows: usize,
        cols: usize,
        limit: usize,
    },
    #[error("skew-symmetric exponent matrix has odd rank {0}")]
    OddRank(usize),
    #[error("operands belong to different algebras")]
    SpecMismatch,
    #[error("parameter `{0}` must be nonzero")]
    ZeroParameter(String),
    #[error("missing parameter `{0}`")]
    MissingParameter(String),
    #[error("family {family} requires flavor {expected}")]
    Flavor { family: String, expected: String },
    #[error("inconsistent parameters: {0}")]
    Inconsistent(String),
    #[error("dimension mismatch for {what}: got {got}, expected {expected}")]
    DimensionMismatch {
        what: String,
        got: usize,
        expected: usize,
    },
    #[error("cyclic module is zero: the constraints are inconsistent")]
    DimensionZero,
    #[error("ambient quotient of size {size} exceeds the budget {budget}")]
    Budget { size: usize, budget: usize },
    #[error("z{0} does not act invertibly")]
    SingularZ(u8),
    #[error("central element {0} does not act as a scalar")]
    NonScalarCentral(String),
    #[error("matrix dimensions do not agree: {0}")]
    Shape(String),
}
