use std::collections::{HashMap, VecDeque};

use crate::alphabet::{Alphabet, Letter, Word};
use crate::error::{Error, Result};

/// A possibly partial deterministic automaton with an initial state and a
/// set of final states. Undefined transitions reject.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Acceptor {
    alphabet: Alphabet,
    n: usize,
    delta: Vec<Option<usize>>,
    initial: usize,
    finals: Vec<bool>,
}

impl Acceptor {
    pub fn new(
        alphabet: Alphabet,
        n: usize,
        delta: Vec<Option<usize>>,
        initial: usize,
        finals: Vec<bool>,
    ) -> Result<Self> {
        let k = alphabet.len();
        if n == 0 {
            return Err(Error::Invalid("an acceptor needs at least one state".into()));
        }
        if delta.len() != n * k || finals.len() != n {
            return Err(Error::Invalid("table dimensions do not match the state count".into()));
        }
        if initial >= n {
            return Err(Error::StateOutOfRange { state: initial, n });
        }
        if let Some(p) = delta.iter().flatten().find(|&&p| p >= n) {
            return Err(Error::StateOutOfRange { state: *p, n });
        }
        Ok(Acceptor { alphabet, n, delta, initial, finals })
    }

    /// The canonical acceptor of ∅: one non-final state, no transitions.
    pub fn empty(alphabet: Alphabet) -> Self {
        let k = alphabet.len();
        Acceptor { alphabet, n: 1, delta: vec![None; k], initial: 0, finals: vec![false] }
    }

    /// The acceptor of Σ*.
    pub fn universal(alphabet: Alphabet) -> Self {
        let k = alphabet.len();
        Acceptor { alphabet, n: 1, delta: vec![Some(0); k], initial: 0, finals: vec![true] }
    }

    /// The minimal acceptor of a finite word list.
    pub fn from_words<'a>(alphabet: Alphabet, words: impl IntoIterator<Item = &'a Word>) -> Result<Self> {
        let k = alphabet.len();
        let mut delta: Vec<Option<usize>> = vec![None; k];
        let mut finals = vec![false];
        for word in words {
            alphabet.check_word(word)?;
            let mut q = 0;
            for &a in word {
                q = match delta[q * k + a] {
                    Some(p) => p,
                    None => {
                        let p = finals.len();
                        finals.push(false);
                        delta.extend(std::iter::repeat_n(None, k));
                        delta[q * k + a] = Some(p);
                        p
                    }
                };
            }
            finals[q] = true;
        }
        let n = finals.len();
        Ok(Acceptor { alphabet, n, delta, initial: 0, finals }.trim_minimize())
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.alphabet.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.finals[q]
    }

    pub fn finals(&self) -> Vec<usize> {
        (0..self.n).filter(|&q| self.finals[q]).collect()
    }

    pub fn table(&self) -> &[Option<usize>] {
        &self.delta
    }

    /// Whether any transition is undefined.
    pub fn is_partial(&self) -> bool {
        self.delta.iter().any(Option::is_none)
    }

    #[inline]
    pub fn step(&self, q: usize, a: Letter) -> Option<usize> {
        self.delta[q * self.alphabet.len() + a]
    }

    pub fn run_from(&self, q: usize, word: &Word) -> Option<usize> {
        word.iter().try_fold(q, |q, &a| self.step(q, a))
    }

    pub fn run(&self, word: &Word) -> Option<usize> {
        self.run_from(self.initial, word)
    }

    pub fn accepts(&self, word: &Word) -> bool {
        word.iter().all(|&a| a < self.k()) && self.run(word).is_some_and(|q| self.finals[q])
    }

    /// Defined transitions `(q, a, p)` in `(q, a)` order.
    pub fn transitions(&self) -> impl Iterator<Item = (usize, Letter, usize)> + '_ {
        let k = self.k();
        self.delta.iter().enumerate().filter_map(move |(i, p)| p.map(|p| (i / k, i % k, p)))
    }

    pub fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        seen[self.initial] = true;
        let mut queue = VecDeque::from([self.initial]);
        while let Some(q) = queue.pop_front() {
            for a in self.alphabet.letters() {
                if let Some(p) = self.step(q, a) {
                    if !seen[p] {
                        seen[p] = true;
                        queue.push_back(p);
                    }
                }
            }
        }
        seen
    }

    /// States from which some final state is reachable.
    pub fn coreachable(&self) -> Vec<bool> {
        let mut reverse = vec![Vec::new(); self.n];
        for (q, _, p) in self.transitions() {
            reverse[p].push(q);
        }
        let mut seen = self.finals.clone();
        let mut queue: VecDeque<usize> = self.finals().into();
        while let Some(p) = queue.pop_front() {
            for &q in &reverse[p] {
                if !seen[q] {
                    seen[q] = true;
                    queue.push_back(q);
                }
            }
        }
        seen
    }

    pub fn is_empty_language(&self) -> bool {
        !self.coreachable()[self.initial]
    }

    /// Removes unreachable and dead states, renumbering in BFS order.
    pub fn trim(&self) -> Acceptor {
        let reach = self.reachable();
        let live = self.coreachable();
        if !live[self.initial] {
            return Acceptor::empty(self.alphabet.clone());
        }
        let keep: Vec<bool> = (0..self.n).map(|q| reach[q] && live[q]).collect();
        let delta = self.delta.iter().enumerate().map(|(i, p)| p.filter(|&p| keep[i / self.k()] && keep[p])).collect();
        Acceptor { delta, ..self.clone() }.canonical()
    }

    /// Renumbers reachable states in BFS discovery order (letters in
    /// alphabet order) and drops unreachable ones.
    pub fn canonical(&self) -> Acceptor {
        let k = self.k();
        let mut index = vec![usize::MAX; self.n];
        let mut order = vec![self.initial];
        index[self.initial] = 0;
        let mut head = 0;
        while head < order.len() {
            let q = order[head];
            head += 1;
            for a in 0..k {
                if let Some(p) = self.step(q, a) {
                    if index[p] == usize::MAX {
                        index[p] = order.len();
                        order.push(p);
                    }
                }
            }
        }
        let mut delta = Vec::with_capacity(order.len() * k);
        for &q in &order {
            for a in 0..k {
                delta.push(self.step(q, a).map(|p| index[p]));
            }
        }
        let finals = order.iter().map(|&q| self.finals[q]).collect();
        Acceptor { alphabet: self.alphabet.clone(), n: order.len(), delta, initial: 0, finals }
    }

    /// The canonical minimal partial acceptor of the same language: trim,
    /// then Moore partition refinement with "undefined" as its own
    /// behaviour, then BFS renumbering.
    pub fn trim_minimize(&self) -> Acceptor {
        let trimmed = self.trim();
        if trimmed.is_empty_language() {
            return trimmed;
        }
        let k = trimmed.k();
        let n = trimmed.n;
        let mut class: Vec<usize> = trimmed.finals.iter().map(|&f| usize::from(f)).collect();
        let mut count = 0;
        loop {
            let mut ids: HashMap<(usize, Vec<Option<usize>>), usize> = HashMap::new();
            let next: Vec<usize> = (0..n)
                .map(|q| {
                    let sig = (0..k).map(|a| trimmed.step(q, a).map(|p| class[p])).collect();
                    let len = ids.len();
                    *ids.entry((class[q], sig)).or_insert(len)
                })
                .collect();
            let new_count = ids.len();
            class = next;
            if new_count == count {
                break;
            }
            count = new_count;
        }
        let mut delta = vec![None; count * k];
        let mut finals = vec![false; count];
        for q in 0..n {
            finals[class[q]] = trimmed.finals[q];
            for a in 0..k {
                delta[class[q] * k + a] = trimmed.step(q, a).map(|p| class[p]);
            }
        }
        Acceptor { alphabet: trimmed.alphabet.clone(), n: count, delta, initial: class[trimmed.initial], finals }
            .canonical()
    }

    /// Table with a fresh non-final sink appended at index `n`.
    pub(crate) fn completed_table(&self) -> Vec<usize> {
        let k = self.k();
        let sink = self.n;
        let mut t: Vec<usize> = self.delta.iter().map(|p| p.unwrap_or(sink)).collect();
        t.extend(std::iter::repeat_n(sink, k));
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::w;

    fn ab_ba() -> Acceptor {
        Acceptor::from_words(Alphabet::latin(2), &[w("ab"), w("ba")]).unwrap()
    }

    #[test]
    fn accepts_examples() {
        let d = ab_ba();
        assert!(d.accepts(&w("ab")));
        assert!(!d.accepts(&w("a")));
        assert!(!d.accepts(&w("aba")));
        assert!(!d.accepts(&Word::from(vec![5])));
    }

    #[test]
    fn word_list_minimizes_to_four_states() {
        let d = ab_ba();
        assert_eq!(d.n(), 4);
        let after_a = d.step(0, 0).unwrap();
        let after_b = d.step(0, 1).unwrap();
        assert_ne!(after_a, after_b);
        assert_eq!(d.finals().len(), 1);
        let f = d.finals()[0];
        assert_eq!(d.step(after_a, 1), Some(f));
        assert_eq!(d.step(after_b, 0), Some(f));
        assert_eq!(d.step(after_a, 0), None);
    }

    #[test]
    fn minimize_is_idempotent_on_minimal_input() {
        let d = ab_ba();
        assert_eq!(d.trim_minimize(), d);
    }

    #[test]
    fn empty_language_is_canonical() {
        let e = Acceptor::from_words(Alphabet::latin(2), std::iter::empty()).unwrap();
        assert_eq!(e, Acceptor::empty(Alphabet::latin(2)));
        assert!(e.is_empty_language());
        assert_eq!(e.trim_minimize(), e);
    }

    #[test]
    fn merges_equivalent_states() {
        // a(a|b) with separate final states for aa and ab
        let t = vec![Some(1), None, Some(2), Some(3), None, None, None, None];
        let d = Acceptor::new(Alphabet::latin(2), 4, t, 0, vec![false, false, true, true]).unwrap();
        assert_eq!(d.trim_minimize().n(), 3);
    }
}
