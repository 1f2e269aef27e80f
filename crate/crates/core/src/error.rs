use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty parameter list: at least one denomination is required")]
    EmptyList,
    #[error("denomination {0} is not positive")]
    NonPositive(i64),
    #[error("denominations are not coprime: gcd is {0}")]
    NotCoprime(u64),
    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,
    #[error("table bound {bound} exceeds the configured ceiling {limit}")]
    BoundTooLarge { bound: u64, limit: u64 },
    #[error("the set of integers with {predicate} {k} representations is infinite")]
    InfiniteSet { predicate: &'static str, k: u64 },
    #[error("enumeration for k = {k} did not terminate below the ceiling {limit}")]
    Indeterminate { k: u64, limit: u64 },
    #[error("maximum requested of a set that is not proven complete")]
    IncompleteSet,
    #[error("no closed form for k = {k}, m = {m}; use the oracle")]
    UnsupportedK { k: u64, m: u32 },
    #[error("expected {expected} denominations, got {found}")]
    WrongArity { expected: usize, found: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error("identity violated: {0}")]
    IdentityViolation(String),
}
