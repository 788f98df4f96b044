//! The tail structure of an ideal `I = Σ*MΣ*` and the construction of a
//! strongly connected synchronizing automaton whose reset words are
//! exactly `I`.
//!
//! States of the constructed automaton are triples `(b, x, ω)`: the first
//! letter of the last generator occurrence, the trace of that letter
//! followed by the tail, and the ω-set of the tail (first letter, trace and
//! `B`-state of every suffix of the tail on which `B` is defined).

mod construct;
mod generators;
mod lifted;
mod structure;

pub use construct::{
    class_label, construct_tail_automaton, construct_tail_automaton_within, seed_state, state_bound, tail_action,
    tails_recognizer, word_class, TailAutomaton, TailState,
};
pub use generators::{build_b, GeneratorSet};
pub use lifted::{lifted_explore, lifted_transition, LiftedExploration, LiftedTarget, LiftedTransition};
pub use structure::{
    omega, omega_step, tail_structure, trace, visiting_states, OmegaSet, OmegaTriple, TailStructure, TraceVector,
};
