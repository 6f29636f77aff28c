use std::fmt;

/// Errors surfaced by the library. Axiom violations of a candidate root datum
/// are *not* errors: `validate_root_datum` returns them as report entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operation requires a valid root datum but the input fails an axiom.
    InvalidDatum(String),
    /// Vectors of different rank were combined.
    RankMismatch { expected: usize, got: usize },
    /// A dominant (co)weight was required.
    NotDominant(String),
    /// Elements over different root data were combined.
    DatumMismatch,
    /// The requested facet generates an infinite reflection group.
    InfiniteFacet(String),
    /// A reduced decomposition was required.
    NonReduced(String),
    /// The oracle needs a prime power residue cardinality.
    NotPrimePower(u64),
    /// Enumeration bounds would overflow the oracle's exact counters.
    BoundOverflow(String),
    /// Malformed textual input (group files, coweights, CLI arguments).
    Parse(String),
    /// Anything else the caller handed us that makes no sense.
    InvalidInput(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidDatum(msg) => write!(f, "invalid root datum: {msg}"),
            Error::RankMismatch { expected, got } => {
                write!(f, "rank mismatch: expected {expected}, got {got}")
            }
            Error::NotDominant(msg) => write!(f, "not dominant: {msg}"),
            Error::DatumMismatch => write!(f, "elements belong to different root data"),
            Error::InfiniteFacet(msg) => write!(f, "facet generates an infinite group: {msg}"),
            Error::NonReduced(msg) => write!(f, "non-reduced decomposition: {msg}"),
            Error::NotPrimePower(q) => write!(f, "{q} is not a prime power"),
            Error::BoundOverflow(msg) => write!(f, "enumeration bound overflow: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
