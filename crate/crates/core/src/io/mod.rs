//! Text formats: `.aut` automata, word lists and DOT export.

mod aut;
mod dot;
mod words;

pub use aut::{parse_aut, serialize_acceptor, serialize_aut, serialize_semiautomaton, AutFile};
pub use dot::{acceptor_to_dot, semiautomaton_to_dot};
pub use words::{parse_words, serialize_words};
