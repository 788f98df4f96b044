use std::collections::VecDeque;

use crate::alphabet::{Alphabet, Letter, Word};
use crate::automata::Acceptor;
use crate::error::{Error, Result};

/// A complete deterministic action of an alphabet on `n` states.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Semiautomaton {
    alphabet: Alphabet,
    n: usize,
    /// Row-major `n × k` table.
    delta: Vec<usize>,
}

impl Semiautomaton {
    /// Builds from a row-major table where `delta[q * k + a]` is `q·a`.
    pub fn new(alphabet: Alphabet, n: usize, delta: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("a semiautomaton needs at least one state".into()));
        }
        let k = alphabet.len();
        if delta.len() != n * k {
            return Err(Error::Invalid(format!("transition table has {} entries, expected {}", delta.len(), n * k)));
        }
        if let Some(&p) = delta.iter().find(|&&p| p >= n) {
            return Err(Error::StateOutOfRange { state: p, n });
        }
        Ok(Semiautomaton { alphabet, n, delta })
    }

    pub fn from_fn(alphabet: Alphabet, n: usize, f: impl Fn(usize, Letter) -> usize) -> Result<Self> {
        let k = alphabet.len();
        let delta = (0..n).flat_map(|q| (0..k).map(move |a| (q, a))).map(|(q, a)| f(q, a)).collect();
        Semiautomaton::new(alphabet, n, delta)
    }

    /// The Černý automaton `C_n` over `{a, b}`: `a` is the cyclic shift
    /// `i → i+1 mod n`, `b` fixes every state except `0 → 1`.
    pub fn cerny(n: usize) -> Self {
        assert!(n >= 1);
        Semiautomaton::from_fn(Alphabet::latin(2), n, |q, a| match a {
            0 => (q + 1) % n,
            _ => {
                if q == 0 {
                    1 % n
                } else {
                    q
                }
            }
        })
        .expect("valid table")
    }

    /// Every letter acts as the identity.
    pub fn identity(n: usize, alphabet: Alphabet) -> Self {
        Semiautomaton::from_fn(alphabet, n, |q, _| q).expect("valid table")
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

    pub fn table(&self) -> &[usize] {
        &self.delta
    }

    #[inline]
    pub fn step(&self, q: usize, a: Letter) -> usize {
        self.delta[q * self.alphabet.len() + a]
    }

    pub fn run(&self, q: usize, word: &Word) -> usize {
        word.iter().fold(q, |q, &a| self.step(q, a))
    }

    /// The image `S·w`, sorted and deduplicated.
    pub fn apply(&self, states: &[usize], word: &Word) -> Result<Vec<usize>> {
        self.alphabet.check_word(word)?;
        if let Some(&q) = states.iter().find(|&&q| q >= self.n) {
            return Err(Error::StateOutOfRange { state: q, n: self.n });
        }
        let mut out: Vec<usize> = states.iter().map(|&q| self.run(q, word)).collect();
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    pub fn all_states(&self) -> Vec<usize> {
        (0..self.n).collect()
    }

    /// Whether every state reaches every other state.
    pub fn is_strongly_connected(&self) -> bool {
        let k = self.k();
        let mut reverse = vec![Vec::new(); self.n];
        for q in 0..self.n {
            for a in 0..k {
                reverse[self.step(q, a)].push(q);
            }
        }
        let forward = reach(self.n, 0, |q| (0..k).map(move |a| self.step(q, a)).collect());
        let backward = reach(self.n, 0, |q| reverse[q].clone());
        forward.iter().all(|&b| b) && backward.iter().all(|&b| b)
    }

    /// Views the semiautomaton as an acceptor with the given initial and
    /// final states.
    pub fn to_acceptor(&self, initial: usize, finals: &[usize]) -> Result<Acceptor> {
        let delta = self.delta.iter().map(|&p| Some(p)).collect();
        let mut fin = vec![false; self.n];
        for &f in finals {
            if f >= self.n {
                return Err(Error::StateOutOfRange { state: f, n: self.n });
            }
            fin[f] = true;
        }
        Acceptor::new(self.alphabet.clone(), self.n, delta, initial, fin)
    }
}

fn reach(n: usize, start: usize, succ: impl Fn(usize) -> Vec<usize>) -> Vec<bool> {
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([start]);
    seen[start] = true;
    while let Some(q) = queue.pop_front() {
        for p in succ(q) {
            if !seen[p] {
                seen[p] = true;
                queue.push_back(p);
            }
        }
    }
    seen
}
