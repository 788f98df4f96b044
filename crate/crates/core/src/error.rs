use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("letter index {0} is outside the alphabet")]
    LetterOutOfRange(usize),

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("state {state} is out of range (automaton has {n} states)")]
    StateOutOfRange { state: usize, n: usize },

    #[error("the automaton is not synchronizing")]
    NotSynchronizing,

    #[error("language is not an ideal")]
    NotAnIdeal,

    #[error("generator set is empty")]
    EmptyGenerators,

    #[error("generator set contains the empty word, so the ideal is all of the free monoid")]
    EmptyWordGenerator,

    #[error("generator set is not factor-free: `{inner}` is a proper factor of `{outer}`")]
    NotFactorFree { inner: String, outer: String },

    #[error("the construction requires at least two letters")]
    UnaryAlphabet,

    #[error("generator automaton is malformed: {0}")]
    MalformedGenerators(String),

    #[error("tail structure has no last factor; it is not a class of the ideal")]
    NotAClass,

    #[error("state budget of {budget} exceeded")]
    BudgetExceeded { budget: usize },

    #[error("enumeration of {words} words refused (limit {limit})")]
    EnumerationTooLarge { words: u128, limit: u128 },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
