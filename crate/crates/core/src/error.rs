use thiserror::Error;

/// Errors raised by the arithmetic, lattice and claim layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{value} is outside the supported range 1..={max}")]
    OutOfRange { value: u64, max: u64 },

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("the two primes must be distinct (got {0} twice)")]
    EqualPrimes(u64),

    #[error("{value} is divisible by the modulus {modulus}")]
    NotCoprime { value: u64, modulus: u64 },

    #[error("multiplier {x} must lie in 1..={max}")]
    MultiplierOutOfRange { x: u64, max: u64 },

    #[error("{0} is even; the floor-sum route needs an odd argument")]
    EvenArgument(u64),

    #[error("point ({x}, {y}) lies outside the {width}x{height} rectangle")]
    PointOutsideRect {
        x: u64,
        y: u64,
        width: u64,
        height: u64,
    },

    #[error("enumerating {needed} lattice points exceeds the cap of {cap}; use the floor-sum counting operations or raise the cap")]
    CapExceeded { needed: u64, cap: u64 },

    #[error("sweep bound {0} is below the minimum of 5")]
    BoundTooSmall(u64),

    #[error("claim {0} has no companion form")]
    NoCompanionForm(String),

    #[error("claim {claim}: {source}")]
    Claim {
        claim: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// True for enumeration-cap failures, including ones wrapped by a claim.
    pub fn is_resource(&self) -> bool {
        match self {
            Error::CapExceeded { .. } => true,
            Error::Claim { source, .. } => source.is_resource(),
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
