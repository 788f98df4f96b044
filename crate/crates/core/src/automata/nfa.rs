use std::collections::{BTreeSet, HashMap};

use crate::alphabet::{Alphabet, Letter, Word};
use crate::automata::Acceptor;

/// Nondeterministic automaton with optional ε-moves. Only used as an
/// intermediate form for closures, concatenations and factor languages.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    initials: BTreeSet<usize>,
    trans: Vec<Vec<BTreeSet<usize>>>,
    eps: Vec<BTreeSet<usize>>,
    finals: Vec<bool>,
}

impl Nfa {
    pub fn new(alphabet: Alphabet) -> Self {
        Nfa { alphabet, initials: BTreeSet::new(), trans: Vec::new(), eps: Vec::new(), finals: Vec::new() }
    }

    pub fn from_acceptor(d: &Acceptor) -> Self {
        let mut nfa = Nfa::new(d.alphabet().clone());
        let offset = nfa.embed(d);
        nfa.initials.insert(offset + d.initial());
        for f in d.finals() {
            nfa.set_final(offset + f, true);
        }
        nfa
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn n(&self) -> usize {
        self.finals.len()
    }

    pub fn add_state(&mut self) -> usize {
        self.trans.push(vec![BTreeSet::new(); self.alphabet.len()]);
        self.eps.push(BTreeSet::new());
        self.finals.push(false);
        self.finals.len() - 1
    }

    /// Copies the transition structure of `d` (without initial or final
    /// marks) and returns the index of its state 0.
    pub fn embed(&mut self, d: &Acceptor) -> usize {
        let offset = self.n();
        for _ in 0..d.n() {
            self.add_state();
        }
        for (q, a, p) in d.transitions() {
            self.add_transition(offset + q, a, offset + p);
        }
        offset
    }

    pub fn add_transition(&mut self, from: usize, a: Letter, to: usize) {
        self.trans[from][a].insert(to);
    }

    pub fn add_epsilon(&mut self, from: usize, to: usize) {
        self.eps[from].insert(to);
    }

    pub fn add_initial(&mut self, q: usize) {
        self.initials.insert(q);
    }

    pub fn set_final(&mut self, q: usize, fin: bool) {
        self.finals[q] = fin;
    }

    pub fn add_self_loops(&mut self, q: usize) {
        for a in self.alphabet.letters() {
            self.add_transition(q, a, q);
        }
    }

    fn closure(&self, set: &mut BTreeSet<usize>) {
        let mut stack: Vec<usize> = set.iter().copied().collect();
        while let Some(q) = stack.pop() {
            for &p in &self.eps[q] {
                if set.insert(p) {
                    stack.push(p);
                }
            }
        }
    }

    fn initial_set(&self) -> BTreeSet<usize> {
        let mut s = self.initials.clone();
        self.closure(&mut s);
        s
    }

    fn successor(&self, set: &BTreeSet<usize>, a: Letter) -> BTreeSet<usize> {
        let mut next: BTreeSet<usize> = set.iter().flat_map(|&q| self.trans[q][a].iter().copied()).collect();
        self.closure(&mut next);
        next
    }

    /// Direct set simulation.
    pub fn accepts(&self, word: &Word) -> bool {
        let mut cur = self.initial_set();
        for &a in word {
            cur = self.successor(&cur, a);
        }
        cur.iter().any(|&q| self.finals[q])
    }

    /// Subset construction over the reachable subsets. The empty subset is
    /// never materialized, so the result is partial.
    pub fn determinize(&self) -> Acceptor {
        let k = self.alphabet.len();
        let start = self.initial_set();
        if start.is_empty() {
            return Acceptor::empty(self.alphabet.clone());
        }
        let mut index: HashMap<BTreeSet<usize>, usize> = HashMap::new();
        let mut subsets = vec![start.clone()];
        index.insert(start, 0);
        let mut delta: Vec<Option<usize>> = Vec::new();
        let mut head = 0;
        while head < subsets.len() {
            let cur = subsets[head].clone();
            head += 1;
            for a in 0..k {
                let next = self.successor(&cur, a);
                if next.is_empty() {
                    delta.push(None);
                    continue;
                }
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = subsets.len();
                        index.insert(next.clone(), id);
                        subsets.push(next);
                        id
                    }
                };
                delta.push(Some(id));
            }
        }
        let finals = subsets.iter().map(|s| s.iter().any(|&q| self.finals[q])).collect();
        Acceptor::new(self.alphabet.clone(), subsets.len(), delta, 0, finals)
            .expect("subset construction is well formed")
    }
}

/// NFA for the concatenation `L(parts[0]) · L(parts[1]) · ...`.
pub fn concatenation(parts: &[&Acceptor]) -> Nfa {
    let alphabet = parts[0].alphabet().clone();
    let mut nfa = Nfa::new(alphabet);
    let mut prev_finals: Option<Vec<usize>> = None;
    for part in parts {
        let offset = nfa.embed(part);
        let init = offset + part.initial();
        match &prev_finals {
            None => nfa.add_initial(init),
            Some(fs) => {
                for &f in fs {
                    nfa.add_epsilon(f, init);
                }
            }
        }
        prev_finals = Some(part.finals().into_iter().map(|f| offset + f).collect());
    }
    for f in prev_finals.unwrap_or_default() {
        nfa.set_final(f, true);
    }
    nfa
}

/// Acceptor of `Σ^+` (nonempty words).
pub fn nonempty_words(alphabet: &Alphabet) -> Acceptor {
    let k = alphabet.len();
    let delta = vec![Some(1); 2 * k];
    Acceptor::new(alphabet.clone(), 2, delta, 0, vec![false, true]).expect("valid")
}
