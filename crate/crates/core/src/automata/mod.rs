//! Finite automata: complete semiautomata, partial acceptors, an NFA
//! intermediate form and the usual constructions over them.

mod acceptor;
mod nfa;
mod ops;
mod semiautomaton;

pub use acceptor::Acceptor;
pub use nfa::{concatenation, nonempty_words, Nfa};
pub use ops::{bool_op, difference, equivalent, intersect, shortest_accepted, union, BoolOp, Equivalence};
pub use semiautomaton::Semiautomaton;
