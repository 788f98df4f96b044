//! Random instances and reference implementations written directly from the
//! definitions, sharing no code with the library beyond its data types.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use syncideal::alphabet::{Alphabet, Letter, Word};
use syncideal::automata::{Acceptor, Semiautomaton};

pub const SEED: u64 = 0x5eed_1dea;

pub fn rng(stream: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    r.set_stream(stream);
    r
}

pub fn word(s: &str) -> Word {
    s.bytes().map(|b| (b - b'a') as Letter).collect()
}

pub fn random_semiautomaton(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Semiautomaton {
    let delta = (0..n * k).map(|_| rng.gen_range(0..n)).collect();
    Semiautomaton::new(Alphabet::latin(k), n, delta).unwrap()
}

/// Random synchronizing semiautomaton with `n` drawn from `min_n..=max_n`.
pub fn random_synchronizing(rng: &mut ChaCha8Rng, min_n: usize, max_n: usize, k: usize) -> Semiautomaton {
    loop {
        let n = rng.gen_range(min_n..=max_n);
        let a = random_semiautomaton(rng, n, k);
        if oracle_shortest_reset(&a).is_some() {
            return a;
        }
    }
}

pub fn random_word(rng: &mut ChaCha8Rng, k: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(0..k)).collect()
}

pub fn random_nonempty_word(rng: &mut ChaCha8Rng, k: usize, max_len: usize) -> Word {
    let len = rng.gen_range(1..=max_len);
    (0..len).map(|_| rng.gen_range(0..k)).collect()
}

pub fn is_factor(u: &Word, v: &Word) -> bool {
    u.len() <= v.len() && (0..=v.len() - u.len()).any(|i| v.letters()[i..i + u.len()] == *u.letters())
}

pub fn oracle_factor_free(words: &[Word]) -> bool {
    words.iter().enumerate().all(|(i, u)| words.iter().enumerate().all(|(j, v)| i == j || !is_factor(u, v)))
}

/// Random factor-free set of 1 to `max_words` distinct nonempty words.
pub fn random_factor_free(rng: &mut ChaCha8Rng, k: usize, max_words: usize, max_len: usize) -> Vec<Word> {
    loop {
        let count = rng.gen_range(1..=max_words);
        let set: BTreeSet<Word> = (0..count).map(|_| random_nonempty_word(rng, k, max_len)).collect();
        let words: Vec<Word> = set.into_iter().collect();
        if oracle_factor_free(&words) {
            return words;
        }
    }
}

pub fn in_ideal(u: &Word, gens: &[Word]) -> bool {
    gens.iter().any(|g| is_factor(g, u))
}

pub fn all_words(k: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        layer = layer.iter().flat_map(|u| (0..k).map(move |a| u.with(a))).collect();
        out.extend(layer.iter().cloned());
    }
    out
}

pub fn image(a: &Semiautomaton, u: &Word) -> BTreeSet<usize> {
    (0..a.n()).map(|q| u.iter().fold(q, |p, &x| a.table()[p * a.k() + x])).collect()
}

pub fn oracle_is_reset(a: &Semiautomaton, u: &Word) -> bool {
    image(a, u).len() == 1
}

/// BFS over subsets; letters in alphabet order give the shortlex-least word.
pub fn oracle_shortest_reset(a: &Semiautomaton) -> Option<Word> {
    let full: Vec<usize> = (0..a.n()).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([full.clone()]);
    let mut queue = VecDeque::from([(full, Word::empty())]);
    while let Some((set, w)) = queue.pop_front() {
        if set.len() == 1 {
            return Some(w);
        }
        for x in 0..a.k() {
            let next: BTreeSet<usize> = set.iter().map(|&q| a.table()[q * a.k() + x]).collect();
            let next: Vec<usize> = next.into_iter().collect();
            if seen.insert(next.clone()) {
                queue.push_back((next, w.with(x)));
            }
        }
    }
    None
}

pub fn oracle_strongly_connected(a: &Semiautomaton) -> bool {
    let reach = |from: usize, forward: bool| {
        let mut seen = vec![false; a.n()];
        seen[from] = true;
        let mut stack = vec![from];
        while let Some(q) = stack.pop() {
            let next: Vec<usize> = if forward {
                (0..a.k()).map(|x| a.table()[q * a.k() + x]).collect()
            } else {
                (0..a.n()).filter(|&p| (0..a.k()).any(|x| a.table()[p * a.k() + x] == q)).collect()
            };
            for p in next {
                if !seen[p] {
                    seen[p] = true;
                    stack.push(p);
                }
            }
        }
        seen.into_iter().all(|s| s)
    };
    reach(0, true) && reach(0, false)
}

/// `u` is a minimal reset word: reset, and no proper factor is.
pub fn oracle_minimal_reset(a: &Semiautomaton, u: &Word) -> bool {
    let n = u.len();
    oracle_is_reset(a, u) && (n == 0 || (!oracle_is_reset(a, &u.prefix(n - 1)) && !oracle_is_reset(a, &u.drop_first())))
}

/// Per-letter occurrence counts modulo `m`.
pub fn oracle_trace(u: &Word, k: usize, m: usize) -> Vec<u32> {
    (0..k).map(|x| (u.iter().filter(|&&y| y == x).count() % m) as u32).collect()
}

/// `(λ(u), τ(u))` from the definitions: `τ` is the longest suffix outside the
/// ideal, `λ` the generator starting right before it.
pub fn oracle_tail_structure(u: &Word, gens: &[Word]) -> (Word, Word) {
    if !in_ideal(u, gens) {
        return (Word::empty(), u.clone());
    }
    let n = u.len();
    let start = (0..=n).rev().find(|&i| in_ideal(&Word::from(&u.letters()[i - 1..]), gens)).unwrap();
    let tau = Word::from(&u.letters()[start..]);
    let a_tau = Word::from(&u.letters()[start - 1..]);
    let lambda = gens
        .iter()
        .find(|g| g.len() <= a_tau.len() && a_tau.letters()[..g.len()] == *g.letters())
        .expect("a generator starts at the tail")
        .clone();
    (lambda, tau)
}

/// Shortlex comparison key.
pub fn shortlex(u: &Word) -> (usize, Vec<Letter>) {
    (u.len(), u.letters().to_vec())
}

pub fn acceptor_of(words: &[Word], k: usize) -> Acceptor {
    Acceptor::from_words(Alphabet::latin(k), words).unwrap()
}

pub fn render(words: &[Word]) -> String {
    let ab = Alphabet::latin(26);
    words.iter().map(|w| ab.render(w)).collect::<Vec<_>>().join(",")
}
