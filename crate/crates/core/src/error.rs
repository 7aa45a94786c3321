use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An exact integer result does not fit in the working width.
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    /// `d` has no primitive triples: either the exponent of 2 is even and
    /// positive, or some odd prime has an odd exponent.
    #[error("no IDPTs exist for d={d} (prime {prime} has exponent {exponent})")]
    Inadmissible { d: u64, prime: u64, exponent: u32 },

    #[error("r={r} is not a valid parameter for d={d}: {reason}")]
    InvalidR {
        d: u64,
        r: u64,
        reason: &'static str,
    },

    #[error("cannot factorize {0}: input must be at least 2")]
    FactorizeBelowTwo(u64),

    #[error("{what} must be at least 1")]
    Zero { what: &'static str },

    #[error("second-family index must be odd and at least 3, got {0}")]
    SecondFamilyIndex(u64),

    /// The brute-force scan hit its cap without finding anything. This is not
    /// a proof that no triples exist.
    #[error("no IDPTs found for d={d} with n below scan cap {cap}")]
    ScanCapReached { d: u64, cap: u64 },
}
