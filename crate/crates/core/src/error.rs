use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("moduli are not pairwise coprime")]
    NotCoprime,

    /// A denominator shares a factor with the modulus. This is a parameter
    /// collision, not a refutation.
    #[error("undecidable claim: {0}")]
    Undecidable(String),

    #[error("degenerate parameters: {0}")]
    Degenerate(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("jet division by a divisor with zero constant term")]
    JetDivision,

    /// The ε-expansion has a nonzero ε⁰ or ε¹ coefficient where a pure
    /// double pole was expected.
    #[error("no finite limit: ε^{order} coefficient is nonzero")]
    NoFiniteLimit { order: u8 },

    #[error("factor of the form 1 - x vanishes identically")]
    VanishingFactor,

    #[error("p = {p} divides the denominator")]
    NotAUnit { p: u64 },

    #[error("unbalanced parameters: {0}")]
    Unbalanced(String),
}
