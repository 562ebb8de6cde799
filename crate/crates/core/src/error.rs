use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("permutation size must be at least 1")]
    EmptyPermutation,
    #[error("map of length {len} is not a bijection of 0..{len}")]
    NotABijection { len: usize },
    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("half-deck size n must be at least 1")]
    ZeroHalfDeck,
    #[error("packet count k must be at least 2, got {0}")]
    TooFewPackets(usize),
    #[error("{0} requires a packet count k")]
    MissingPackets(&'static str),
    #[error("{0} does not take a packet count")]
    UnexpectedPackets(&'static str),
    #[error("{family} cannot be built from a deck of {cards} cards")]
    BadDeckSize { family: &'static str, cards: usize },
    #[error("{0} is not an even-deck family")]
    NotEvenDeck(&'static str),

    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,
    #[error("modulus {0} out of range")]
    BadModulus(u64),
    #[error("{base} is not invertible modulo {modulus}")]
    NotCoprime { base: u64, modulus: u64 },
    #[error("base {0} out of range (must be at least 2)")]
    BadBase(u64),

    #[error("{what} = {value} out of range {range}")]
    OutOfRange {
        what: &'static str,
        value: u64,
        range: String,
    },
    #[error(
        "bottom-card route leaves the deck at step {step} (position {position} in {cards} cards)"
    )]
    RouteLeavesDeck {
        step: usize,
        position: usize,
        cards: usize,
    },
    #[error("half-deck set never restored within {0} shuffles")]
    ColorPeriodNotFound(u64),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn out_of_range(what: &'static str, value: u64, range: impl Into<String>) -> Error {
    Error::OutOfRange {
        what,
        value,
        range: range.into(),
    }
}
