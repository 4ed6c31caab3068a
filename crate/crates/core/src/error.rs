use thiserror::Error;

/// Errors raised by field construction, skew polynomial arithmetic, the
/// equivalence machinery and code construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u32 },
    #[error("modulus has degree {found}, expected {expected}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("modulus is not monic")]
    NonMonicModulus,
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of order {p}^{r} exceeds the supported maximum of {max}")]
    FieldTooLarge { p: u32, r: u32, max: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("element encoding {encoding} does not belong to a field of order {q}")]
    FieldMismatch { encoding: u64, q: u32 },
    #[error("Frobenius exponent {s} out of range 0..{r}")]
    ExponentOutOfRange { s: u32, r: u32 },
    #[error("index {0} too large for exact bracket computation")]
    IndexTooLarge(u64),
    #[error("discrete logarithm of zero is undefined")]
    ZeroArgument,
    #[error("operands live over different automorphisms")]
    AutomorphismMismatch,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("shift constants must be nonzero")]
    ZeroConstant,
    #[error("code length must be at least 1")]
    InvalidLength,
    #[error("generator does not right-divide x^{n} - lambda")]
    NotARightDivisor { n: usize },
    #[error("generator polynomial is zero")]
    ZeroGenerator,
    #[error("code has dimension zero")]
    ZeroDimensional,
    #[error("vector has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("enumeration of {required} items exceeds the budget of {budget}")]
    EnumerationBudgetExceeded { required: u128, budget: u64 },
    #[error("lambda * N_n(alpha) != mu for the supplied alpha")]
    WitnessConditionViolated,
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
}

pub type Result<T> = std::result::Result<T, Error>;
