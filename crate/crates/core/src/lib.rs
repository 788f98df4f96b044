//! Synchronizing automata and ideals of reset words.
//!
//! The crate analyzes the ideal `Syn(A)` of reset words of a synchronizing
//! automaton (minimal reset words, missing factors, length bounds) and, in
//! the other direction, builds from a factor-free regular generator set `M`
//! a strongly connected synchronizing automaton whose reset words are
//! exactly `Σ*MΣ*`, using the tail structure of the ideal.

pub mod alphabet;
pub mod automata;
pub mod cli;
pub mod error;
pub mod factors;
pub mod io;
pub mod reset;
pub mod tail;
pub mod verify;

pub use alphabet::{Alphabet, Letter, Word};
pub use automata::{Acceptor, Nfa, Semiautomaton};
pub use error::{Error, Result};
