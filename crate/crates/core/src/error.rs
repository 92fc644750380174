use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("exponent overflow (limit 2^15)")]
    ExponentOverflow,

    #[error("operands live in different polynomial rings")]
    RingMismatch,

    #[error("module rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("multiplication is not commutative on basis pair ({0}, {1})")]
    NotCommutative(usize, usize),

    #[error("multiplication is not associative on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),

    #[error("unit does not act as the identity on basis element {0}")]
    BadUnit(usize),

    #[error("module action is incompatible with the algebra on basis pair ({0}, {1})")]
    BadModuleAction(usize, usize),

    #[error("the zero algebra is not a ring")]
    ZeroAlgebra,

    #[error("quotient ring is infinite dimensional")]
    InfiniteDimensional,

    #[error("enumeration needs {required} elements, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("Koszul complex needs a nonempty sequence")]
    EmptySequence,

    #[error("operation not available on this backend: {0}")]
    BackendMismatch(String),

    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("free resolution rank {rank} exceeds bound {bound}")]
    ResolutionTooLarge { rank: usize, bound: usize },

    #[error("ideal is not proper")]
    ImproperIdeal,

    #[error("ideal {0} is not a maximal ideal with rational residue field")]
    NotMaximal(String),

    #[error("no d <= {0} passed the Ext test")]
    CutoffInconclusive(usize),

    #[error("schema error at `{path}`: {message}")]
    Schema { path: String, message: String },

    #[error("io error: {0}")]
    Io(String),
}
