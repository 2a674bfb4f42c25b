use std::fmt;

/// Location of a syntax problem in presentation text, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at {span}: {message}")]
    Syntax { span: Span, message: String },
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("relator uses undeclared generator `{name}` at {span}")]
    UndeclaredGenerator { name: String, span: Span },
    #[error("generator index {index} out of range for {count} generators")]
    IndexError { index: usize, count: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("coset enumeration exceeded its budget ({reason}); the index may be infinite")]
    BudgetExceeded { reason: String },
    #[error("group is not finite within the enumeration budget: {0}")]
    NotFinite(String),

    #[error("generator images do not define a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("group is not abelian")]
    NotAbelian,

    #[error("bad prime {0}: an odd prime is required here")]
    BadPrime(u64),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("unsupported family for this operation: {0}")]
    UnsupportedFamily(String),
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("group too large for this method: {0}")]
    TooLarge(String),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    pub(crate) fn budget(reason: impl Into<String>) -> Self {
        Error::BudgetExceeded {
            reason: reason.into(),
        }
    }

    /// True for the two budget-related variants.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. } | Error::NotFinite(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
