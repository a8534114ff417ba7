use num_bigint::BigUint;
use thiserror::Error;

/// Errors raised by the block-map workbench.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("alphabet size must be in 2..=256, got {0}")]
    InvalidAlphabet(usize),
    #[error("symbol {symbol} out of range for alphabet of size {size}")]
    SymbolOutOfRange { symbol: usize, size: usize },
    #[error("alphabet mismatch: {left} vs {right}")]
    AlphabetMismatch { left: usize, right: usize },
    #[error("insufficient context: need at least {needed} symbols, got {got}")]
    InsufficientContext { needed: usize, got: usize },
    #[error("enumeration too large: {count} candidates exceeds cap {cap}")]
    EnumerationTooLarge { count: BigUint, cap: u64 },
    #[error("insufficient word variety: {0}")]
    InsufficientWordVariety(String),
    #[error("prefix too short: {0}")]
    PrefixTooShort(String),
    #[error("prefix exhausted: {prefix_len} symbols cannot absorb {steps} steps")]
    PrefixExhausted { prefix_len: usize, steps: usize },
    #[error("invalid multiplier: {0}")]
    InvalidMultiplier(String),
    #[error("length {len} not divisible by {block}")]
    LengthNotDivisible { len: usize, block: usize },
    #[error("windows dependent; target may be unreachable")]
    WindowsDependent,
    #[error("no nontrivial divisor of {0}")]
    NoNontrivialDivisor(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
