//! The tail action and the breadth-first construction of the tail
//! structure semiautomaton.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_bigint::BigUint;

use crate::alphabet::{Alphabet, Letter, Word};
use crate::automata::{difference, Acceptor, Nfa, Semiautomaton};
use crate::error::{Error, Result};
use crate::tail::structure::{omega_of_suffixes, omega_step, tail_structure, trace, OmegaSet, TraceVector};
use crate::tail::GeneratorSet;

/// A state `(b, x, ω)` of the tail structure semiautomaton.
///
/// The stored ω never contains a triple on the final state of `B`: it is
/// the ω-set of the tail, which is what the tail action produces.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TailState {
    pub b: Letter,
    pub x: TraceVector,
    pub omega: OmegaSet,
}

impl TailState {
    pub fn render(&self, alphabet: &Alphabet) -> String {
        format!("({}, {}, {})", alphabet.symbol(self.b), self.x, self.omega.render(alphabet))
    }
}

impl fmt::Display for TailState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {} triples)", self.b, self.x, self.omega.len())
    }
}

/// One letter of the tail action.
pub fn tail_action(s: &TailState, a: Letter, gens: &GeneratorSet) -> TailState {
    let stepped = omega_step(&s.omega, a, gens);
    let finals = stepped.final_triples(gens.final_state());
    debug_assert!(finals.len() <= 1, "two generators end at the same position");
    match finals.first() {
        None => TailState { b: s.b, x: s.x.plus(a), omega: stepped },
        Some(&t) => {
            let t = t.clone();
            TailState {
                b: t.head.expect("final triple has a first letter"),
                x: t.trace.clone(),
                omega: stepped.without(&t),
            }
        }
    }
}

/// `(a, tr(aw), ω(w))` for the seed generator `aw`.
pub fn seed_state(gens: &GeneratorSet) -> Result<(TailState, Word)> {
    if gens.k() < 2 {
        return Err(Error::UnaryAlphabet);
    }
    let seed = gens.seed_word().clone();
    let rest = seed.drop_first();
    let state = TailState {
        b: seed.first().expect("generators are nonempty"),
        x: trace(&seed, gens.k(), gens.modulus()),
        // rest ∉ I, so its ω-set ranges over its own suffixes
        omega: omega_of_suffixes(&rest, gens),
    };
    Ok((state, seed))
}

/// The class label `(b, tr(b·τ(u)), ω(τ(u)))` of a word `u ∈ I`, evaluated
/// from the definitions.
pub fn class_label(u: &Word, gens: &GeneratorSet) -> Option<TailState> {
    let ts = tail_structure(u, gens);
    let b = ts.lambda.first()?;
    Some(TailState {
        b,
        x: trace(&ts.tau.prepend(b), gens.k(), gens.modulus()),
        omega: omega_of_suffixes(&ts.tau, gens),
    })
}

/// Folds the tail action over `u` from the seed state.
pub fn word_class(u: &Word, gens: &GeneratorSet) -> Result<TailState> {
    let (seed, _) = seed_state(gens)?;
    Ok(u.iter().fold(seed, |s, &a| tail_action(&s, a, gens)))
}

/// The constructed semiautomaton with the label of every state.
#[derive(Debug, Clone)]
pub struct TailAutomaton {
    pub automaton: Semiautomaton,
    pub labels: Vec<TailState>,
    pub seed_word: Word,
}

impl TailAutomaton {
    pub fn index_of(&self, label: &TailState) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// Breadth-first closure of the seed state under the tail action. States
/// are numbered in discovery order with letters tried in alphabet order.
pub fn construct_tail_automaton(gens: &GeneratorSet) -> Result<TailAutomaton> {
    construct_tail_automaton_within(gens, usize::MAX)
}

pub fn construct_tail_automaton_within(gens: &GeneratorSet, budget: usize) -> Result<TailAutomaton> {
    let (seed, seed_word) = seed_state(gens)?;
    let k = gens.k();
    let mut index: HashMap<TailState, usize> = HashMap::from([(seed.clone(), 0)]);
    let mut labels = vec![seed];
    let mut delta = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(q) = queue.pop_front() {
        for a in 0..k {
            let next = tail_action(&labels[q], a, gens);
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    if labels.len() >= budget {
                        return Err(Error::BudgetExceeded { budget });
                    }
                    let id = labels.len();
                    index.insert(next.clone(), id);
                    labels.push(next);
                    queue.push_back(id);
                    id
                }
            };
            delta.push(id);
        }
    }
    let automaton = Semiautomaton::new(gens.alphabet().clone(), labels.len(), delta)?;
    Ok(TailAutomaton { automaton, labels, seed_word })
}

/// `k·m^k·2^(k·m^k·n)`.
pub fn state_bound(k: u32, m: u32, n: u32) -> BigUint {
    let kmk = BigUint::from(k) * BigUint::from(m).pow(k);
    let exponent = u64::try_from(&kmk * BigUint::from(n)).expect("exponent fits in 64 bits");
    let mut power = BigUint::default();
    power.set_bit(exponent, true);
    kmk * power
}

/// Acceptor of `⋃_a (a⁻¹M)·Σ* ∖ I`, the set of all tails of words of `I`.
pub fn tails_recognizer(m: &Acceptor, ideal: &Acceptor) -> Result<Acceptor> {
    let live = m.trim();
    if live.is_empty_language() {
        return Ok(live);
    }
    let mut nfa = Nfa::new(live.alphabet().clone());
    let offset = nfa.embed(&live);
    for a in live.alphabet().letters() {
        if let Some(p) = live.step(live.initial(), a) {
            nfa.add_initial(offset + p);
        }
    }
    for f in live.finals() {
        nfa.set_final(offset + f, true);
        nfa.add_self_loops(offset + f);
    }
    difference(&nfa.determinize(), ideal)
}
