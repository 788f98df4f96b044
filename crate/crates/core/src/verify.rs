//! Brute-force oracles and verdicts.
//!
//! The oracles here work from the definitions by direct simulation and
//! enumeration, so they stay independent of the automata constructions
//! they are used to check.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::alphabet::{Alphabet, Word};
use crate::automata::{equivalent, Acceptor, Semiautomaton};
use crate::error::{Error, Result};
use crate::reset::{ideal_closure, is_synchronizing, state_ideal_recognizer, syn_recognizer_within};
use crate::tail::{construct_tail_automaton, state_bound, GeneratorSet, TailAutomaton};

/// Default subset-state budget for exact checks.
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// Refuse enumerations beyond this many words.
pub const ENUMERATION_LIMIT: u128 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Bounded(usize),
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Exact => f.write_str("exact"),
            Mode::Bounded(l) => write!(f, "bounded({l})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub ok: bool,
    pub counterexample: Option<Word>,
    pub detail: String,
    pub mode: Mode,
}

impl Verdict {
    fn pass(mode: Mode, detail: impl Into<String>) -> Self {
        Verdict { ok: true, counterexample: None, detail: detail.into(), mode }
    }

    fn fail(mode: Mode, counterexample: Option<Word>, detail: impl Into<String>) -> Self {
        Verdict { ok: false, counterexample, detail: detail.into(), mode }
    }
}

fn words_count(k: usize, max_len: usize) -> u128 {
    (0..=max_len).map(|l| (k as u128).saturating_pow(l as u32)).fold(0u128, u128::saturating_add)
}

fn guard(k: usize, max_len: usize) -> Result<()> {
    let words = words_count(k, max_len);
    if words > ENUMERATION_LIMIT {
        return Err(Error::EnumerationTooLarge { words, limit: ENUMERATION_LIMIT });
    }
    Ok(())
}

/// Whether `Q·u` is a singleton, by direct simulation.
pub fn is_reset_word(a: &Semiautomaton, u: &Word) -> bool {
    let mut states: BTreeSet<usize> = (0..a.n()).collect();
    for &x in u {
        states = states.into_iter().map(|q| a.step(q, x)).collect();
    }
    states.len() == 1
}

/// Depth-first enumeration of `Σ^{≤max_len}` carrying the image `Q·u`.
fn for_each_image(a: &Semiautomaton, max_len: usize, mut visit: impl FnMut(&Word, &[usize])) {
    fn go(
        a: &Semiautomaton,
        word: &mut Vec<usize>,
        image: Vec<usize>,
        max_len: usize,
        visit: &mut impl FnMut(&Word, &[usize]),
    ) {
        visit(&Word::from(word.clone()), &image);
        if word.len() == max_len {
            return;
        }
        for x in a.alphabet().letters() {
            let mut next: Vec<usize> = image.iter().map(|&q| a.step(q, x)).collect();
            next.sort_unstable();
            next.dedup();
            word.push(x);
            go(a, word, next, max_len, visit);
            word.pop();
        }
    }
    go(a, &mut Vec::new(), (0..a.n()).collect(), max_len, &mut visit);
}

/// All reset words of length at most `max_len`, by exhaustive simulation.
pub fn brute_force_syn(a: &Semiautomaton, max_len: usize) -> Result<BTreeSet<Word>> {
    guard(a.k(), max_len)?;
    let mut out = BTreeSet::new();
    for_each_image(a, max_len, |u, image| {
        if image.len() == 1 {
            out.insert(u.clone());
        }
    });
    Ok(out)
}

/// Whether some factor of `u` is accepted by `m`.
pub fn has_factor_in(u: &Word, m: &Acceptor) -> bool {
    let l = u.letters();
    (0..=l.len()).any(|i| (i..=l.len()).any(|j| m.accepts(&Word::from(&l[i..j]))))
}

/// Replays a counterexample of [`verify_syn_equals_ideal`].
pub fn counterexample_replays(a: &Semiautomaton, m: &Acceptor, u: &Word) -> bool {
    is_reset_word(a, u) != has_factor_in(u, m)
}

fn shortlex(words: impl IntoIterator<Item = Word>) -> Option<Word> {
    words.into_iter().min_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)))
}

/// Checks `Syn(A) = Σ*MΣ*`.
pub fn verify_syn_equals_ideal(a: &Semiautomaton, m: &Acceptor, mode: Mode, budget: usize) -> Result<Verdict> {
    if a.alphabet() != m.alphabet() {
        return Err(Error::AlphabetMismatch("automaton and generators".into()));
    }
    match mode {
        Mode::Exact => {
            let syn = syn_recognizer_within(a, budget)?;
            let eq = equivalent(&syn, &ideal_closure(m))?;
            Ok(match eq.counterexample {
                None => Verdict::pass(mode, format!("Syn(A) = Σ*MΣ* (minimal recognizer has {} states)", syn.n())),
                Some(u) => {
                    let side = if is_reset_word(a, &u) {
                        "reset word outside the ideal"
                    } else {
                        "ideal word that is not reset"
                    };
                    Verdict::fail(mode, Some(u), side)
                }
            })
        }
        Mode::Bounded(max_len) => {
            guard(a.k(), max_len)?;
            let mut bad = Vec::new();
            let mut checked = 0usize;
            for_each_image(a, max_len, |u, image| {
                checked += 1;
                if (image.len() == 1) != has_factor_in(u, m) {
                    bad.push(u.clone());
                }
            });
            Ok(match shortlex(bad) {
                None => Verdict::pass(mode, format!("{checked} words agree")),
                Some(u) => {
                    let side = if is_reset_word(a, &u) {
                        "reset word outside the ideal"
                    } else {
                        "ideal word that is not reset"
                    };
                    Verdict::fail(mode, Some(u), format!("{side} ({checked} words checked)"))
                }
            })
        }
    }
}

/// Checks on `Σ^{≤L}` that the per-state ideals `I_q` partition `Syn(A)`,
/// are left ideals, and satisfy the reset condition.
///
/// The reset condition is tested for every non-reset `u` with
/// `|u| ≤ L − ‖Syn(A)‖`: the reset targets observed among words of length
/// at most `L` must not all be sent by `u` to one state.
pub fn verify_decomposition(a: &Semiautomaton, max_len: usize) -> Result<Verdict> {
    let mode = Mode::Bounded(max_len);
    guard(a.k(), max_len + 1)?;
    if !is_synchronizing(a) {
        return Ok(Verdict::pass(mode, "not synchronizing: Syn(A) is empty, nothing to decompose"));
    }
    let ideals: Vec<Acceptor> = (0..a.n()).map(|q| state_ideal_recognizer(a, q)).collect::<Result<_>>()?;
    let mut failures: Vec<(Word, String)> = Vec::new();
    let mut targets = BTreeSet::new();
    let mut norm = usize::MAX;
    for_each_image(a, max_len, |u, image| {
        let hits: Vec<usize> = (0..a.n()).filter(|&q| ideals[q].accepts(u)).collect();
        let reset = image.len() == 1;
        if reset {
            targets.insert(image[0]);
            norm = norm.min(u.len());
        }
        if hits.len() != usize::from(reset) {
            failures.push((u.clone(), format!("word lies in {} classes", hits.len())));
        }
        // a single left extension per word is enough, by induction on length
        if u.len() < max_len {
            for &q in &hits {
                if let Some(x) = a.alphabet().letters().find(|&x| !ideals[q].accepts(&u.prepend(x))) {
                    failures.push((u.prepend(x), format!("class of state {q} is not a left ideal")));
                }
            }
        }
    });
    let mut reset_checked = 0usize;
    if norm <= max_len {
        for_each_image(a, max_len - norm, |u, image| {
            if image.len() == 1 {
                return;
            }
            reset_checked += 1;
            let images: BTreeSet<usize> = targets.iter().map(|&q| a.run(q, u)).collect();
            if images.len() == 1 {
                failures.push((u.clone(), "I·u lies in a single class but u is not a reset word".into()));
            }
        });
    }
    let first = failures.into_iter().min_by(|(x, _), (y, _)| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    Ok(match first {
        None => Verdict::pass(
            mode,
            format!(
                "partition and left-ideal checks hold on Σ^≤{max_len}; reset condition holds for {reset_checked} non-reset words; {} reset targets",
                targets.len()
            ),
        ),
        Some((u, why)) => Verdict::fail(mode, Some(u), why),
    })
}

/// Outcome of [`verify_construction`].
#[derive(Debug, Clone)]
pub struct ConstructionCheck {
    pub verdict: Verdict,
    pub automaton: TailAutomaton,
    pub strongly_connected: bool,
    pub synchronizing: bool,
    pub syn_equals_ideal: Verdict,
    pub within_bound: bool,
}

/// Default bounded length `2m + 6`.
pub fn default_bound(m: usize) -> usize {
    2 * m + 6
}

/// Builds the tail automaton of `M` and checks strong connectivity,
/// synchronization, `Syn = Σ*MΣ*` (exact, falling back to bounded at
/// `max_len` when the subset budget is exceeded), and the state bound.
pub fn verify_construction(m: &Acceptor, max_len: Option<usize>, budget: usize) -> Result<ConstructionCheck> {
    let gens = GeneratorSet::new(m)?;
    let tail = construct_tail_automaton(&gens)?;
    let a = &tail.automaton;
    let strongly_connected = a.is_strongly_connected();
    let synchronizing = is_synchronizing(a);
    let bound_len = max_len.unwrap_or_else(|| default_bound(gens.m()));
    let syn_equals_ideal = match verify_syn_equals_ideal(a, gens.b(), Mode::Exact, budget) {
        Err(Error::BudgetExceeded { .. }) => verify_syn_equals_ideal(a, gens.b(), Mode::Bounded(bound_len), budget)?,
        other => other?,
    };
    let bound = state_bound(gens.k() as u32, gens.modulus() as u32, gens.b().n() as u32);
    let within_bound = num_bigint::BigUint::from(a.n()) <= bound;

    let detail = format!(
        "states={} (k={}, m={}, n={}); strongly_connected={}; synchronizing={}; syn_equals_ideal={} [{}]; within_bound={}",
        a.n(),
        gens.k(),
        gens.m(),
        gens.b().n(),
        strongly_connected,
        synchronizing,
        syn_equals_ideal.ok,
        syn_equals_ideal.mode,
        within_bound
    );
    let ok = strongly_connected && synchronizing && syn_equals_ideal.ok && within_bound;
    let verdict =
        Verdict { ok, counterexample: syn_equals_ideal.counterexample.clone(), detail, mode: syn_equals_ideal.mode };
    Ok(ConstructionCheck {
        verdict,
        automaton: tail,
        strongly_connected,
        synchronizing,
        syn_equals_ideal,
        within_bound,
    })
}

/// Renders a verdict as one line.
pub fn render_verdict(v: &Verdict, alphabet: &Alphabet) -> String {
    let status = if v.ok { "ok" } else { "FAILED" };
    match &v.counterexample {
        Some(u) => format!("{status} [{}] {} counterexample={}", v.mode, v.detail, alphabet.render(u)),
        None => format!("{status} [{}] {}", v.mode, v.detail),
    }
}
