use thiserror::Error;

/// Errors raised by group construction and the cohomology machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed group spec `{spec}`: {reason}")]
    Parse { spec: String, reason: String },

    #[error("semidirect action x -> {k}x is not an automorphism of order dividing {n} on Z/{m}")]
    ActionConstraint { m: usize, n: usize, k: usize },

    #[error("order {order} exceeds the configured cap {cap}")]
    OrderCap { order: usize, cap: usize },

    #[error("work estimate {work} exceeds the cap {cap} for {what}")]
    WorkCap { what: &'static str, work: usize, cap: usize },

    #[error("invalid group table: {0}")]
    InvalidTable(String),

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("cochain is not a 2-cocycle")]
    NotCocycle,

    #[error("character is not invariant under conjugation")]
    NotInvariant,

    #[error("extension is not exact: {0}")]
    NotExact(String),

    #[error("map is not a homomorphism")]
    NotHomomorphism,

    #[error("map is not bijective")]
    NotBijective,

    #[error("map is not surjective")]
    NotSurjective,

    #[error("group must be abelian")]
    NotAbelian,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
