//! Factor languages, missing factors and the reset-length bounds they
//! imply.

use num_bigint::BigUint;
use num_rational::Ratio;
use serde::Serialize;

use crate::alphabet::Word;
use crate::automata::{Acceptor, Nfa, Semiautomaton};
use crate::error::{Error, Result};
use crate::reset::{minimal_words_recognizer, shortest_reset_word, syn_recognizer};

/// Acceptor of all factors of words of `L(M)`.
pub fn factor_recognizer(m: &Acceptor) -> Acceptor {
    let live = m.trim();
    if live.is_empty_language() {
        return live;
    }
    let mut nfa = Nfa::from_acceptor(&live);
    for q in 0..live.n() {
        nfa.add_initial(q);
        nfa.set_final(q, true);
    }
    nfa.determinize().trim_minimize()
}

/// `counts[r][q]` = number of words of length `r` accepted from `q`.
fn path_counts(d: &Acceptor, max_len: usize) -> Vec<Vec<BigUint>> {
    let mut counts = vec![(0..d.n()).map(|q| BigUint::from(u8::from(d.is_final(q)))).collect::<Vec<_>>()];
    for r in 1..=max_len {
        let prev = &counts[r - 1];
        let row = (0..d.n())
            .map(|q| d.alphabet().letters().filter_map(|a| d.step(q, a)).map(|p| prev[p].clone()).sum())
            .collect();
        counts.push(row);
    }
    counts
}

/// `|Fact_ℓ(M)|` for `ℓ = 0..=max_len`.
pub fn factor_counts(m: &Acceptor, max_len: usize) -> Vec<BigUint> {
    let f = factor_recognizer(m);
    path_counts(&f, max_len).into_iter().map(|row| row[f.initial()].clone()).collect()
}

/// Smallest `ℓ ≤ ell_max` with `Fact_ℓ(M) ≠ Σ^ℓ`, together with the
/// lexicographically least missing factor of that length.
pub fn find_missing_factor(m: &Acceptor, ell_max: usize) -> Option<(usize, Word)> {
    let f = factor_recognizer(m);
    let k = BigUint::from(f.k());
    let counts = path_counts(&f, ell_max);
    let full = |r: usize| k.pow(r as u32);
    let ell = (1..=ell_max).find(|&l| counts[l][f.initial()] < full(l))?;

    let mut letters = Vec::with_capacity(ell);
    let mut state = Some(f.initial());
    for pos in 0..ell {
        let remaining = ell - pos - 1;
        let q = match state {
            Some(q) => q,
            None => {
                // already outside the factor language: pad with the least letter
                letters.push(0);
                continue;
            }
        };
        let a = f
            .alphabet()
            .letters()
            .find(|&a| match f.step(q, a) {
                None => true,
                Some(p) => counts[remaining][p] < full(remaining),
            })
            .expect("a missing completion exists below a deficient state");
        letters.push(a);
        state = f.step(q, a);
    }
    Some((ell, Word::from(letters)))
}

/// `n(n−1)/2 + 2ℓ`.
pub fn missing_factor_bound(n: u64, ell: u64) -> u64 {
    n * (n - 1) / 2 + 2 * ell
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Applicability {
    /// `ℓ* ≤ (n² − 3n + 2)/4`: the missing factor is short enough to give
    /// the `(n−1)²` bound.
    pub cerny_applicable: bool,
    /// `ℓ* ≤ ‖I‖/4 + 1/16`: the missing factor gives the `(n − ½)²` bound.
    pub quadratic_applicable: bool,
    #[serde(serialize_with = "ser_ratio")]
    pub quadratic_bound: Ratio<u64>,
}

fn ser_ratio<S: serde::Serializer>(r: &Ratio<u64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// Exact rational evaluation of both applicability conditions.
pub fn applicability(n: u64, ideal_norm: u64, ell_star: u64) -> Applicability {
    // 4ℓ ≤ n² − 3n + 2 = (n−1)(n−2), nonnegative for n ≥ 1
    let cerny_applicable = 4 * ell_star <= (n - 1) * n.saturating_sub(2);
    // 16ℓ ≤ 4‖I‖ + 1
    let quadratic_applicable = 16 * ell_star <= 4 * ideal_norm + 1;
    let quadratic_bound = Ratio::new((2 * n - 1) * (2 * n - 1), 4);
    Applicability { cerny_applicable, quadratic_applicable, quadratic_bound }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MissingFactorReport {
    pub n: usize,
    pub ideal_norm: usize,
    pub ell_max: usize,
    pub ell_star: Option<usize>,
    pub witness: Option<String>,
    pub missing_factor_bound: Option<u64>,
    pub shortest_reset_length: usize,
    /// `Some(false)` means the length bound was falsified.
    pub bound_holds: Option<bool>,
    pub cerny_applicable: bool,
    pub quadratic_applicable: bool,
    pub quadratic_bound: Option<String>,
}

/// Minimal reset words of `A`, their shortest missing factor, and the bound
/// checks that follow from it.
pub fn analyze_missing_factors(a: &Semiautomaton, ell_max: usize) -> Result<MissingFactorReport> {
    let reset = shortest_reset_word(a).ok_or(Error::NotSynchronizing)?;
    let m = minimal_words_recognizer(&syn_recognizer(a))?;
    let n = a.n() as u64;
    let norm = reset.len();
    let found = find_missing_factor(&m, ell_max);
    let mut report = MissingFactorReport {
        n: a.n(),
        ideal_norm: norm,
        ell_max,
        ell_star: None,
        witness: None,
        missing_factor_bound: None,
        shortest_reset_length: norm,
        bound_holds: None,
        cerny_applicable: false,
        quadratic_applicable: false,
        quadratic_bound: None,
    };
    if let Some((ell, witness)) = found {
        let bound = missing_factor_bound(n, ell as u64);
        let app = applicability(n, norm as u64, ell as u64);
        report.ell_star = Some(ell);
        report.witness = Some(a.alphabet().render(&witness));
        report.missing_factor_bound = Some(bound);
        report.bound_holds = Some(norm as u64 <= bound);
        report.cerny_applicable = app.cerny_applicable;
        report.quadratic_applicable = app.quadratic_applicable;
        report.quadratic_bound = Some(app.quadratic_bound.to_string());
    }
    Ok(report)
}
