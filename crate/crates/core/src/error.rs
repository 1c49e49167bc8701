use thiserror::Error;

/// Errors raised by the library.
///
/// Every variant corresponds to a named invariant; [`Error::invariant`]
/// returns that name so front ends can report which precondition failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse monomial `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("ambient mismatch: expected {expected} variables, found {found}")]
    AmbientMismatch { expected: usize, found: usize },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("{monomial} is not {t}-spread")]
    NotTSpread { monomial: String, t: usize },

    #[error("M(n={n}, d={d}, t={t}) is empty")]
    EmptyFamily { n: usize, d: usize, t: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("lexsegment endpoints out of order: {u} <slex {v}")]
    EndpointOrder { u: String, v: String },

    #[error("shift by {shift} is out of range: {reason}")]
    ShiftOutOfRange { shift: usize, reason: String },

    #[error("ideal is not {t}-spread strongly stable{}", if *.reversed { " (reversed order)" } else { "" })]
    NotStronglyStable { t: usize, reversed: bool },

    #[error("lexsegment ideal is not completely lexsegment (witness {witness})")]
    NotCompletely { witness: String },

    #[error("lexsegment ideal does not have a linear resolution")]
    NotLinear,

    #[error("ideal is not generated in the single degree {0}")]
    NotEquigenerated(usize),

    #[error("{0} is not a prime modulus")]
    NotPrime(u64),

    #[error("complex is not closed under taking faces at {0}")]
    NotFaceClosed(String),
}

impl Error {
    /// Stable name of the violated invariant.
    pub fn invariant(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "monomial_syntax",
            Error::AmbientMismatch { .. } => "ambient_agreement",
            Error::DegreeMismatch { .. } => "equal_degree",
            Error::NotTSpread { .. } => "t_spread",
            Error::EmptyFamily { .. } => "nonempty_family",
            Error::InvalidParams(_) => "params",
            Error::EndpointOrder { .. } => "u_geq_v",
            Error::ShiftOutOfRange { .. } => "shift_range",
            Error::NotStronglyStable { .. } => "strongly_stable",
            Error::NotCompletely { .. } => "completely_lexsegment",
            Error::NotLinear => "linear_resolution",
            Error::NotEquigenerated(_) => "equigenerated",
            Error::NotPrime(_) => "prime_field",
            Error::NotFaceClosed(_) => "face_closed",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
