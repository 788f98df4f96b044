//! Reset words, the ideal `Syn(A)` and operations on ideal languages.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::alphabet::{Letter, Word};
use crate::automata::{
    concatenation, difference, equivalent, intersect, nonempty_words, shortest_accepted, union, Acceptor, Nfa,
    Semiautomaton,
};
use crate::error::{Error, Result};

/// Summary of the synchronization behaviour of a semiautomaton.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SyncReport {
    pub n: usize,
    pub is_synchronizing: bool,
    pub shortest_reset: Option<String>,
    pub shortest_reset_length: Option<usize>,
    pub strongly_connected: bool,
    pub cerny_bound: usize,
    pub bound_satisfied: Option<bool>,
}

pub fn sync_report(a: &Semiautomaton) -> SyncReport {
    let reset = shortest_reset_word(a);
    let n = a.n();
    let cerny_bound = (n - 1) * (n - 1);
    SyncReport {
        n,
        is_synchronizing: reset.is_some(),
        shortest_reset: reset.as_ref().map(|w| a.alphabet().render(w)),
        shortest_reset_length: reset.as_ref().map(Word::len),
        strongly_connected: a.is_strongly_connected(),
        cerny_bound,
        bound_satisfied: reset.as_ref().map(|w| w.len() <= cerny_bound),
    }
}

/// Pair-merge test: every pair of states can be collapsed by some word.
pub fn is_synchronizing(a: &Semiautomaton) -> bool {
    let n = a.n();
    let k = a.k();
    let pair = |p: usize, q: usize| if p < q { p * n + q } else { q * n + p };
    // reverse edges of the pair graph, including the diagonal
    let mut reverse: Vec<Vec<usize>> = vec![Vec::new(); n * n];
    for p in 0..n {
        for q in p + 1..n {
            for x in 0..k {
                reverse[pair(a.step(p, x), a.step(q, x))].push(pair(p, q));
            }
        }
    }
    let mut merged = vec![false; n * n];
    let mut queue = VecDeque::new();
    for q in 0..n {
        merged[pair(q, q)] = true;
        queue.push_back(pair(q, q));
    }
    while let Some(s) = queue.pop_front() {
        for &t in &reverse[s] {
            if !merged[t] {
                merged[t] = true;
                queue.push_back(t);
            }
        }
    }
    (0..n).all(|p| (p + 1..n).all(|q| merged[pair(p, q)]))
}

type Subset = Vec<u64>;

fn subset_of(states: impl IntoIterator<Item = usize>, n: usize) -> Subset {
    let mut s = vec![0u64; n.div_ceil(64)];
    for q in states {
        s[q / 64] |= 1 << (q % 64);
    }
    s
}

fn subset_len(s: &Subset) -> usize {
    s.iter().map(|w| w.count_ones() as usize).sum()
}

fn subset_members(s: &Subset) -> impl Iterator<Item = usize> + '_ {
    s.iter().enumerate().flat_map(|(i, &w)| (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| i * 64 + b))
}

fn subset_image(a: &Semiautomaton, s: &Subset, x: Letter) -> Subset {
    subset_of(subset_members(s).map(|q| a.step(q, x)), a.n())
}

/// Subsets reachable from `start` in the power automaton, in BFS order,
/// with the row-major transition table over subset indices.
pub struct PowerAutomaton {
    pub subsets: Vec<Vec<usize>>,
    pub delta: Vec<usize>,
}

pub fn power_automaton(a: &Semiautomaton, start: &[usize], budget: usize) -> Result<PowerAutomaton> {
    let k = a.k();
    let first = subset_of(start.iter().copied(), a.n());
    let mut index: HashMap<Subset, usize> = HashMap::from([(first.clone(), 0)]);
    let mut order = vec![first];
    let mut delta = Vec::new();
    let mut head = 0;
    while head < order.len() {
        let cur = order[head].clone();
        head += 1;
        for x in 0..k {
            let next = subset_image(a, &cur, x);
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    if order.len() >= budget {
                        return Err(Error::BudgetExceeded { budget });
                    }
                    index.insert(next.clone(), order.len());
                    order.push(next);
                    order.len() - 1
                }
            };
            delta.push(id);
        }
    }
    let subsets = order.iter().map(|s| subset_members(s).collect()).collect();
    Ok(PowerAutomaton { subsets, delta })
}

/// Shortest reset word, lexicographically least among the shortest.
pub fn shortest_reset_word(a: &Semiautomaton) -> Option<Word> {
    if !is_synchronizing(a) {
        return None;
    }
    let k = a.k();
    let start = subset_of(0..a.n(), a.n());
    let mut parent: HashMap<Subset, Option<(Subset, Letter)>> = HashMap::from([(start.clone(), None)]);
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        if subset_len(&cur) == 1 {
            let mut letters = Vec::new();
            let mut node = cur;
            while let Some(Some((prev, x))) = parent.get(&node) {
                letters.push(*x);
                node = prev.clone();
            }
            letters.reverse();
            return Some(Word::from(letters));
        }
        for x in 0..k {
            let next = subset_image(a, &cur, x);
            if !parent.contains_key(&next) {
                parent.insert(next.clone(), Some((cur.clone(), x)));
                queue.push_back(next);
            }
        }
    }
    None
}

fn power_acceptor(a: &Semiautomaton, budget: usize, is_final: impl Fn(&[usize]) -> bool) -> Result<Acceptor> {
    let power = power_automaton(a, &a.all_states(), budget)?;
    let finals = power.subsets.iter().map(|s| is_final(s)).collect();
    let delta = power.delta.into_iter().map(Some).collect();
    Ok(Acceptor::new(a.alphabet().clone(), power.subsets.len(), delta, 0, finals)?.trim_minimize())
}

/// Minimal acceptor of `Syn(A)`.
pub fn syn_recognizer(a: &Semiautomaton) -> Acceptor {
    syn_recognizer_within(a, usize::MAX).expect("unbounded budget")
}

/// [`syn_recognizer`] refusing once more than `budget` subsets appear.
pub fn syn_recognizer_within(a: &Semiautomaton, budget: usize) -> Result<Acceptor> {
    power_acceptor(a, budget, |s| s.len() == 1)
}

/// Minimal acceptor of `I_q = { u : Q·u = {q} }`.
pub fn state_ideal_recognizer(a: &Semiautomaton, q: usize) -> Result<Acceptor> {
    if q >= a.n() {
        return Err(Error::StateOutOfRange { state: q, n: a.n() });
    }
    power_acceptor(a, usize::MAX, |s| s == [q])
}

/// Acceptor of `Σ*·L·Σ*`.
pub fn ideal_closure(l: &Acceptor) -> Acceptor {
    let l = l.trim();
    if l.is_empty_language() {
        return l;
    }
    let mut nfa = Nfa::new(l.alphabet().clone());
    let offset = nfa.embed(&l);
    let start = nfa.add_state();
    nfa.add_initial(start);
    nfa.add_self_loops(start);
    nfa.add_epsilon(start, offset + l.initial());
    for f in l.finals() {
        nfa.set_final(offset + f, true);
        nfa.add_self_loops(offset + f);
    }
    nfa.determinize().trim_minimize()
}

pub fn is_ideal(d: &Acceptor) -> bool {
    equivalent(d, &ideal_closure(d)).map(|e| e.equal).unwrap_or(false)
}

/// Acceptor of `Σ·I`.
fn prepend_letter(i: &Acceptor) -> Acceptor {
    let k = i.k();
    let n = i.n();
    let mut delta = i.table().to_vec();
    delta.extend(std::iter::repeat_n(Some(i.initial()), k));
    let mut finals: Vec<bool> = (0..n).map(|q| i.is_final(q)).collect();
    finals.push(false);
    Acceptor::new(i.alphabet().clone(), n + 1, delta, n, finals).expect("valid").canonical()
}

/// Acceptor of `I·Σ`: remembers whether the previous state was final.
fn append_letter(i: &Acceptor) -> Acceptor {
    let k = i.k();
    let n = i.n();
    let id = |q: usize, flag: bool| 2 * q + usize::from(flag);
    let mut delta = vec![None; 2 * n * k];
    let mut finals = vec![false; 2 * n];
    for q in 0..n {
        for flag in [false, true] {
            finals[id(q, flag)] = flag;
            for a in 0..k {
                delta[id(q, flag) * k + a] = i.step(q, a).map(|p| id(p, i.is_final(q)));
            }
        }
    }
    Acceptor::new(i.alphabet().clone(), 2 * n, delta, id(i.initial(), false), finals).expect("valid").canonical()
}

/// Acceptor of the minimal words `I ∖ (Σ⁺I ∪ IΣ⁺)` of an ideal.
///
/// For an ideal, `u ∈ Σ⁺I` iff `u` minus its first letter is in `I`, and
/// `u ∈ IΣ⁺` iff `u` minus its last letter is in `I`.
pub fn minimal_words_recognizer(i: &Acceptor) -> Result<Acceptor> {
    if !is_ideal(i) {
        return Err(Error::NotAnIdeal);
    }
    let i = i.trim_minimize();
    let non_minimal = union(&prepend_letter(&i), &append_letter(&i))?;
    difference(&i, &non_minimal)
}

/// Words of `L` that contain another word of `L` as a proper factor.
fn non_factor_free_part(m: &Acceptor) -> Acceptor {
    let alphabet = m.alphabet();
    let plus = nonempty_words(alphabet);
    let star = Acceptor::universal(alphabet.clone());
    let left = concatenation(&[&plus, m, &star]).determinize();
    let right = concatenation(&[&star, m, &plus]).determinize();
    let proper = union(&left, &right).expect("same alphabet");
    intersect(m, &proper).expect("same alphabet")
}

pub fn is_factor_free(m: &Acceptor) -> bool {
    non_factor_free_part(m).is_empty_language()
}

/// A pair `(inner, outer)` of words of `L` where `inner` is a proper factor
/// of `outer`; the outer word is the shortlex least such word.
pub fn factor_free_violation(m: &Acceptor) -> Option<(Word, Word)> {
    let outer = shortest_accepted(&non_factor_free_part(m))?;
    let len = outer.len();
    let inner = (0..len)
        .flat_map(|l| (0..=len - l).map(move |start| (l, start)))
        .map(|(l, start)| Word::from(&outer.letters()[start..start + l]))
        .find(|f| m.accepts(f))
        .expect("a proper factor is accepted");
    Some((inner, outer))
}

/// `min { |u| : u ∈ I }`, or `None` for the empty language.
pub fn ideal_norm(i: &Acceptor) -> Option<usize> {
    shortest_accepted(i).map(|w| w.len())
}

/// Longest suffix of `u` that is a prefix of some word of `L(M)`.
pub fn suffix_prefix_overlap(u: &Word, m: &Acceptor) -> Word {
    let m = m.trim();
    if m.is_empty_language() {
        return Word::empty();
    }
    (0..=u.len()).rev().map(|i| u.suffix(i)).find(|s| m.run(s).is_some()).unwrap_or_default()
}
