use thiserror::Error;

/// Errors raised by the arithmetic, symbol and series routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no primitive {q}-th root of unity in F_{p}")]
    NoRootOfUnity { p: u64, q: u64 },

    #[error("unsupported degree at quadratic number field (q = {0})")]
    UnsupportedDegree(u32),

    #[error("division by zero polynomial")]
    DivisionByZero,

    #[error("leading coefficient is not invertible")]
    NonInvertibleLeading,

    #[error("operation requires a univariate polynomial")]
    MultivariateInput,

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("coefficient {0} is not in the field")]
    CoefficientNotInField(String),

    #[error("valuation of zero is undefined")]
    ZeroElement,

    #[error("the real place of Q carries no discrete valuation")]
    RealPlaceHasNoValuation,

    #[error("element has nonzero valuation {0} at the place")]
    NonzeroValuation(i64),

    #[error("unfactorable input: {0}")]
    Unfactorable(String),

    #[error("wild place: residue characteristic divides q; use the Hilbert symbol at 2")]
    WildPlace,

    #[error("non-coprime pair")]
    NonCoprime,

    #[error("{0} is not squarefree")]
    NotSquarefree(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("non-unit input: {0}")]
    NonUnit(String),

    #[error("no {q}-th root of the initial coefficient exists in the base field")]
    NoInitialRoot { q: u32 },

    #[error("base factors are not pairwise coprime")]
    NonCoprimeFactors,

    #[error("unsupported singularity; Newton-Puiseux out of scope")]
    UnsupportedSingularity,

    #[error("not a q-th power: {witness}")]
    NotAPower { witness: String },

    #[error("distinct primes required")]
    DistinctPrimesRequired,

    #[error("remainder is nonzero: {0} is not divisible")]
    NotDivisible(String),

    #[error("mismatched rings or fields: {0}")]
    Mismatch(String),

    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
