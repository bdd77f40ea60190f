use thiserror::Error;

use crate::words::Word;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,
    #[error("alphabet has {0} symbols, at most {max} are supported", max = crate::words::MAX_ALPHABET)]
    AlphabetTooLarge(usize),
    #[error("alphabet symbol {0:?} appears more than once")]
    DuplicateSymbol(char),
    #[error("alphabet symbol {0:?} is not printable")]
    UnprintableSymbol(char),
    #[error("symbol {symbol:?} is not in the alphabet {alphabet:?}")]
    UnknownSymbol { symbol: char, alphabet: String },
    #[error("letter index {index} is out of range for an alphabet of size {size}")]
    LetterOutOfRange { index: usize, size: usize },
    #[error("words are over different alphabets ({left:?} vs {right:?})")]
    AlphabetMismatch { left: String, right: String },

    #[error("factor length must be at least 1")]
    ZeroFactorLength,
    #[error("factor length {n} exceeds word length {len}")]
    FactorLengthTooLong { n: usize, len: usize },
    #[error("operation needs a nonempty word")]
    EmptyWord,
    #[error("word of length {len} is too short, need at least {min}")]
    WordTooShort { len: usize, min: usize },
    #[error("power exponent must be at least 2, got {0}")]
    ExponentTooSmall(u32),

    #[error("tau table has {got} entries but the alphabet has {expected} letters")]
    TauSize { expected: usize, got: usize },
    #[error("tau is not an involution: tau(tau({letter:?})) = {image:?}")]
    NotInvolution { letter: char, image: char },
    #[error("tau assigns {letter:?} twice")]
    TauConflict { letter: char },
    #[error("malformed tau pair {0:?}, expected x:y")]
    MalformedTau(String),

    #[error("malformed directive {spec:?}: {reason}")]
    MalformedDirective { spec: String, reason: &'static str },
    #[error("periodic part of a directive must be nonempty")]
    EmptyPeriod,
    #[error("directive exhausted: Pal_V of the whole directive has length {}, shorter than requested", .full.len())]
    Exhausted { full: Box<Word> },
    #[error("self-directed generation stalled after {consumed} directive letters; the buffer never got ahead of the directive")]
    DirectiveStalled { consumed: usize },
    #[error("seed {seed} is not a prefix of its own closure {closure}")]
    InconsistentSeed { seed: String, closure: String },
    #[error("generation would exceed the length cap of {cap} letters")]
    LengthCap { cap: usize },

    #[error("suffix index disagrees with the naive scan at length {length}: index {index}, naive {naive}")]
    OracleDisagreement {
        length: usize,
        index: usize,
        naive: usize,
    },

    #[error("invalid fixed-point family: {0}")]
    InvalidFamily(String),
    #[error("the exchange family only exists for n = 1 (got n = {0})")]
    ExchangeNeedsNOne(u32),
    #[error("{0}")]
    NotForFamily(&'static str),

    #[error("slope analysis needs a binary alphabet, got {0} letters")]
    NotBinary(usize),
    #[error("directive starts with {0:?}; swap the letters first (see swap_letters)")]
    StartsWithSecondLetter(char),
    #[error("the periodic part is a single letter, so the slope is rational")]
    RationalSlope,
    #[error("continued fraction index {index} out of range ({available} quotients available)")]
    IndexOutOfRange { index: usize, available: usize },
    #[error("continued fraction has no quotient beyond the integer part")]
    NoQuotients,
    #[error("not applicable: the continued fraction has no declared periodic tail")]
    NotApplicable,
}
