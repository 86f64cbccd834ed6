//! Error type shared by all lab modules.

use thiserror::Error;

/// Everything that can go wrong across the lab.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Invalid constructor or operation parameter.
    #[error("bad parameter: {0}")]
    BadParam(String),
    /// A value lies outside the distribution's support.
    #[error("value {0} is outside the support")]
    OutOfSupport(f64),
    /// Operation requires a regular distribution.
    #[error("operation requires a regular distribution")]
    NonRegular,
    /// Hazard rate requested where the CDF has already reached 1.
    #[error("hazard rate undefined where F(v) = 1")]
    TailExhausted,
    /// Expectation requested for an infinite-mean family.
    #[error("expectation is infinite for this family")]
    InfiniteMean,
    /// A documented operation precondition does not hold.
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    /// A computation left the finite f64 range.
    #[error("numeric overflow in {0}")]
    Overflow(String),
    /// A bounded search exhausted its grid without success.
    #[error("search failed: {0}")]
    SearchFailed(String),
    /// No suitable prime group was found for the requested size.
    #[error("prime search failed for the requested bit size")]
    PrimeSearchFailed,
    /// Commitment message or pad not reduced modulo the group order.
    #[error("message or pad not reduced modulo the group order")]
    OutOfRange,
    /// A ledger handle id that was never issued.
    #[error("unknown ledger handle {0}")]
    UnknownHandle(usize),
    /// Derived commitments are only available in malleable mode.
    #[error("derived handles require malleable ledger mode")]
    MalleabilityDisabled,
    /// A derived handle cannot open before all its parents are open.
    #[error("cannot open a derived handle before all parents are revealed")]
    ParentsUnrevealed,
    /// The seller strategy produced an inconsistent transcript.
    #[error("unsafe seller strategy: {0}")]
    UnsafeStrategy(String),
    /// Forwarding counts violate the count lemma for unbounded supports.
    #[error("forwarding count violation: {0}")]
    CountViolation(String),
    /// Fake-bid lists must be sorted strictly increasing.
    #[error("fake bids must be sorted strictly increasing")]
    UnsortedBids,
    /// Malformed experiment config.
    #[error("config error: {0}")]
    SchemaError(String),
    /// Filesystem failure while writing reports.
    #[error("io error: {0}")]
    Io(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
