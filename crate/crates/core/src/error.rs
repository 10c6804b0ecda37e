use thiserror::Error;

/// Errors raised by the ring, weight and evaluation operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("bad variable indices ({i}, {j}) for arity {arity}")]
    BadIndices { i: usize, j: usize, arity: usize },

    #[error("dividend is not divisible by the divisor")]
    NotDivisible,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("polynomial is not symmetric")]
    NotSymmetric,

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("weight diagram has two beads at position {0}")]
    BeadCollision(i64),

    #[error("polynomial is not in J_n: the slice has a term with t-exponent {t_exp}")]
    NotMember { t_exp: i64 },

    #[error("polynomial is not in the kernel of ds")]
    NotInKernel,

    #[error("weight {lambda:?} is not compatible with the Levi subalgebra of gamma = {gamma:?}")]
    LeviIncompatible { lambda: Vec<i64>, gamma: Vec<i64> },

    #[error("no preimage inside the window of bound {bound}")]
    WindowTooSmall { bound: i64 },

    #[error("a rational preimage exists in the window of bound {bound} but no integral one")]
    NoIntegerSolution { bound: i64 },

    #[error("rank {rank} is out of range: {reason}")]
    BadRank { rank: usize, reason: &'static str },

    #[error("certificate check failed: {0}")]
    BrokenCertificate(String),
}

impl Error {
    /// Stable variant name, used by the command line front end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::ArityMismatch { .. } => "ArityMismatch",
            Error::BadIndices { .. } => "BadIndices",
            Error::NotDivisible => "NotDivisible",
            Error::DivisionByZero => "DivisionByZero",
            Error::NotSymmetric => "NotSymmetric",
            Error::NotDominant(_) => "NotDominant",
            Error::BeadCollision(_) => "BeadCollision",
            Error::NotMember { .. } => "NotMember",
            Error::NotInKernel => "NotInKernel",
            Error::LeviIncompatible { .. } => "LeviIncompatible",
            Error::WindowTooSmall { .. } => "WindowTooSmall",
            Error::NoIntegerSolution { .. } => "NoIntegerSolution",
            Error::BadRank { .. } => "BadRank",
            Error::BrokenCertificate(_) => "BrokenCertificate",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
