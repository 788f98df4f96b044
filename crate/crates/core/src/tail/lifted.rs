//! Bounded exploration of the maximal lifted automaton, whose states are
//! the tail-structure classes `I(x, y) = Σ*·a·y` of the ideal.

use std::collections::HashMap;

use crate::alphabet::{Letter, Word};
use crate::error::{Error, Result};
use crate::tail::structure::{tail_structure, TailStructure};
use crate::tail::GeneratorSet;

/// Target of the class `(λ, τ)` under `c`: `σ(a·τ·c)` where `a` is the
/// first letter of `λ`.
pub fn lifted_transition(ts: &TailStructure, c: Letter, gens: &GeneratorSet) -> Result<TailStructure> {
    let a = ts.lambda.first().ok_or(Error::NotAClass)?;
    Ok(tail_structure(&ts.tau.prepend(a).with(c), gens))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LiftedTarget {
    Explored(usize),
    /// Leaves the explored region at the depth frontier.
    Open(TailStructure),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedTransition {
    pub from: usize,
    pub letter: Letter,
    pub target: LiftedTarget,
}

#[derive(Debug, Clone)]
pub struct LiftedExploration {
    pub states: Vec<TailStructure>,
    /// A word of each class: the seed generator followed by the BFS path.
    pub representatives: Vec<Word>,
    pub transitions: Vec<LiftedTransition>,
}

impl LiftedExploration {
    pub fn open_transitions(&self) -> usize {
        self.transitions.iter().filter(|t| matches!(t.target, LiftedTarget::Open(_))).count()
    }
}

/// Breadth-first truncation at `depth` steps from `σ(seed word)`.
pub fn lifted_explore(gens: &GeneratorSet, depth: usize) -> Result<LiftedExploration> {
    let seed = gens.seed_word().clone();
    let start = tail_structure(&seed, gens);
    let mut index: HashMap<TailStructure, usize> = HashMap::from([(start.clone(), 0)]);
    let mut states = vec![start];
    let mut representatives = vec![seed];
    let mut level = vec![0usize];
    let mut transitions = Vec::new();
    let mut head = 0;
    while head < states.len() {
        let q = head;
        head += 1;
        for c in gens.alphabet().letters() {
            let next = lifted_transition(&states[q], c, gens)?;
            let target = match index.get(&next) {
                Some(&id) => LiftedTarget::Explored(id),
                None if level[q] < depth => {
                    let id = states.len();
                    index.insert(next.clone(), id);
                    states.push(next);
                    representatives.push(representatives[q].with(c));
                    level.push(level[q] + 1);
                    LiftedTarget::Explored(id)
                }
                None => LiftedTarget::Open(next),
            };
            transitions.push(LiftedTransition { from: q, letter: c, target });
        }
    }
    Ok(LiftedExploration { states, representatives, transitions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::{w, Alphabet};

    fn ab_ba() -> GeneratorSet {
        GeneratorSet::from_words(Alphabet::latin(2), &[w("ab"), w("ba")]).unwrap()
    }

    fn ts(lambda: &str, tau: &str) -> TailStructure {
        TailStructure { lambda: w(lambda), tau: w(tau) }
    }

    #[test]
    fn transitions_from_ab_b() {
        let g = ab_ba();
        assert_eq!(lifted_transition(&ts("ab", "b"), 0, &g).unwrap(), ts("ba", "a"));
        assert_eq!(lifted_transition(&ts("ab", "b"), 1, &g).unwrap(), ts("ab", "bb"));
        let not_class = TailStructure { lambda: Word::empty(), tau: w("b") };
        assert_eq!(lifted_transition(&not_class, 0, &g), Err(Error::NotAClass));
    }

    #[test]
    fn left_context_does_not_matter() {
        let g = ab_ba();
        let base = ts("ab", "bbb");
        for prefix in ["", "a", "ba", "abab"] {
            let u = w(prefix).concat(&w("abbb"));
            for c in 0..2 {
                assert_eq!(tail_structure(&u.with(c), &g), lifted_transition(&base, c, &g).unwrap());
            }
        }
    }

    #[test]
    fn exploration_depths() {
        let g = ab_ba();
        let zero = lifted_explore(&g, 0).unwrap();
        assert_eq!(zero.states, vec![ts("ab", "b")]);
        assert_eq!(zero.open_transitions(), 2);
        let two = lifted_explore(&g, 2).unwrap();
        assert!(two.states.contains(&ts("ab", "b")));
        assert!(two.states.contains(&ts("ba", "a")));
    }
}
