use thiserror::Error;

/// Errors raised by system construction and the combinatorial operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown type `{0}`")]
    UnknownType(String),
    #[error("rank {rank} out of range for type {letter} (supported: {min}..={max})")]
    RankOutOfRange {
        letter: char,
        rank: usize,
        min: usize,
        max: usize,
    },
    #[error("group order {order} exceeds the size guard {limit}")]
    GuardExceeded { order: u64, limit: u64 },
    #[error("letter `{token}` out of range for a system of rank {rank}")]
    LetterOutOfRange { token: String, rank: usize },
    #[error("malformed word token `{0}`")]
    MalformedToken(String),
    #[error("not a permutation of the generators: {0}")]
    InvalidPermutation(String),
    #[error("twist does not preserve the Coxeter matrix: m({s},{t}) = {m_st} but m({fs},{ft}) = {m_fst}")]
    CoxeterMatrixViolation {
        s: usize,
        t: usize,
        fs: usize,
        ft: usize,
        m_st: u8,
        m_fst: u8,
    },
    #[error("no standard twist `{0}` in the registry")]
    UnknownTwist(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("search budget of {0} exhausted")]
    BudgetExceeded(usize),
    #[error("arithmetic overflow while evaluating a polynomial")]
    Overflow,
}

impl Error {
    /// Size-guard failures are reported separately from malformed input.
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::GuardExceeded { .. } | Error::BudgetExceeded(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
