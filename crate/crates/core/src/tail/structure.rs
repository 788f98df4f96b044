//! Tail structure, traces, visiting states and ω-sets of words.

use std::collections::BTreeSet;
use std::fmt;

use crate::alphabet::{Alphabet, Letter, Word};
use crate::tail::GeneratorSet;

/// `σ(u) = (λ(u), τ(u))`: the last generator occurrence and the tail.
///
/// For `u ∉ I` the last factor is ε and the tail is `u` itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TailStructure {
    pub lambda: Word,
    pub tau: Word,
}

impl TailStructure {
    pub fn render(&self, alphabet: &Alphabet) -> String {
        format!("({}, {})", alphabet.render(&self.lambda), alphabet.render(&self.tau))
    }
}

/// Tail structure of `u` with respect to `I = Σ*MΣ*`.
pub fn tail_structure(u: &Word, gens: &GeneratorSet) -> TailStructure {
    if !gens.in_ideal(u) {
        return TailStructure { lambda: Word::empty(), tau: u.clone() };
    }
    // suffixes in an ideal are closed under extension, so the first length
    // that lands in I bounds the tail
    let len = (0..=u.len()).find(|&i| gens.in_ideal(&u.suffix(i))).expect("u itself is in I") - 1;
    let tau = u.suffix(len);
    let a_tau = u.suffix(len + 1);
    let b = gens.b();
    let f = gens.final_state();
    let mut q = b.initial();
    let mut end = None;
    for (i, &x) in a_tau.iter().enumerate() {
        match b.step(q, x) {
            Some(p) => q = p,
            None => break,
        }
        if q == f {
            end = Some(i + 1);
            break;
        }
    }
    let end = end.expect("a·τ(u) starts with a generator");
    TailStructure { lambda: a_tau.prefix(end), tau }
}

/// Per-letter occurrence counts modulo `m`, in alphabet order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TraceVector {
    m: u32,
    residues: Vec<u32>,
}

impl TraceVector {
    pub fn zero(k: usize, m: usize) -> Self {
        assert!(m >= 1, "trace modulus must be positive");
        TraceVector { m: m as u32, residues: vec![0; k] }
    }

    pub fn modulus(&self) -> usize {
        self.m as usize
    }

    pub fn residues(&self) -> &[u32] {
        &self.residues
    }

    pub fn is_zero(&self) -> bool {
        self.residues.iter().all(|&r| r == 0)
    }

    /// `self + a`.
    pub fn plus(&self, a: Letter) -> Self {
        let mut t = self.clone();
        t.residues[a] = (t.residues[a] + 1) % t.m;
        t
    }
}

impl fmt::Display for TraceVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.residues.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// `tr(u)` in `Z_m[Σ]` for an alphabet of `k` letters.
pub fn trace(u: &Word, k: usize, m: usize) -> TraceVector {
    u.iter().fold(TraceVector::zero(k, m), |t, &a| t.plus(a))
}

/// `ν(u) = { q₀·u[i:] }` over the suffixes of `u` on which `B` is defined.
pub fn visiting_states(u: &Word, gens: &GeneratorSet) -> BTreeSet<usize> {
    let b = gens.b();
    (0..=u.len()).filter_map(|i| b.run(&u.suffix(i))).collect()
}

/// `(first letter of a suffix, trace of the suffix, B-state after it)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OmegaTriple {
    pub head: Option<Letter>,
    pub trace: TraceVector,
    pub state: usize,
}

/// Canonical (sorted) ω-set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OmegaSet(BTreeSet<OmegaTriple>);

impl OmegaSet {
    /// `{(ε, 0, q₀)}`.
    pub fn anchor_only(gens: &GeneratorSet) -> Self {
        OmegaSet(BTreeSet::from([anchor(gens)]))
    }

    pub fn triples(&self) -> impl Iterator<Item = &OmegaTriple> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, t: &OmegaTriple) -> bool {
        self.0.contains(t)
    }

    /// Triples sitting on the final state of `B`.
    pub fn final_triples(&self, f: usize) -> Vec<&OmegaTriple> {
        self.0.iter().filter(|t| t.state == f).collect()
    }

    pub fn without(&self, t: &OmegaTriple) -> Self {
        let mut s = self.0.clone();
        s.remove(t);
        OmegaSet(s)
    }

    pub fn with(&self, t: OmegaTriple) -> Self {
        let mut s = self.0.clone();
        s.insert(t);
        OmegaSet(s)
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|t| {
                let head = t.head.map_or("eps", |a| alphabet.symbol(a));
                format!("({head},{},{})", t.trace, t.state)
            })
            .collect();
        format!("{{{}}}", parts.join(" "))
    }
}

impl FromIterator<OmegaTriple> for OmegaSet {
    fn from_iter<T: IntoIterator<Item = OmegaTriple>>(iter: T) -> Self {
        OmegaSet(iter.into_iter().collect())
    }
}

fn anchor(gens: &GeneratorSet) -> OmegaTriple {
    OmegaTriple { head: None, trace: TraceVector::zero(gens.k(), gens.modulus()), state: gens.b().initial() }
}

/// `ω(u)`: with `σ(u) = (ax, y)` and `v = a·y`, one triple per suffix
/// `v[i:]` on which `B` is defined.
pub fn omega(u: &Word, gens: &GeneratorSet) -> OmegaSet {
    let ts = tail_structure(u, gens);
    let v = match ts.lambda.first() {
        Some(a) => ts.tau.prepend(a),
        None => ts.tau,
    };
    omega_of_suffixes(&v, gens)
}

/// Triples over all suffixes of `v`, without any tail-structure step.
pub(crate) fn omega_of_suffixes(v: &Word, gens: &GeneratorSet) -> OmegaSet {
    let b = gens.b();
    (0..=v.len())
        .filter_map(|i| {
            let s = v.suffix(i);
            b.run(&s).map(|state| OmegaTriple { head: s.first(), trace: trace(&s, gens.k(), gens.modulus()), state })
        })
        .collect()
}

/// `ω ∘ a`: shifts every non-anchor triple by `a`, adds the triple of the
/// one-letter suffix `a`, keeps the anchor. Undefined states are dropped.
pub fn omega_step(omega: &OmegaSet, a: Letter, gens: &GeneratorSet) -> OmegaSet {
    let b = gens.b();
    let anchor = anchor(gens);
    let mut out: BTreeSet<OmegaTriple> = omega
        .triples()
        .filter(|t| **t != anchor)
        .filter_map(|t| b.step(t.state, a).map(|p| OmegaTriple { head: t.head, trace: t.trace.plus(a), state: p }))
        .collect();
    if let Some(p) = b.step(b.initial(), a) {
        out.insert(OmegaTriple { head: Some(a), trace: anchor.trace.plus(a), state: p });
    }
    out.insert(anchor);
    OmegaSet(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::w;

    fn ab_ba() -> GeneratorSet {
        GeneratorSet::from_words(Alphabet::latin(2), &[w("ab"), w("ba")]).unwrap()
    }

    fn tv(res: &[u32], m: u32) -> TraceVector {
        TraceVector { m, residues: res.to_vec() }
    }

    fn triple(head: Option<Letter>, res: &[u32], state: usize) -> OmegaTriple {
        OmegaTriple { head, trace: tv(res, 2), state }
    }

    #[test]
    fn tail_structure_examples() {
        let g = ab_ba();
        assert_eq!(tail_structure(&w("b"), &g), TailStructure { lambda: Word::empty(), tau: w("b") });
        assert_eq!(tail_structure(&w("aab"), &g), TailStructure { lambda: w("ab"), tau: w("b") });
        assert_eq!(tail_structure(&w("ba"), &g), TailStructure { lambda: w("ba"), tau: w("a") });
        assert_eq!(tail_structure(&w("abbb"), &g), TailStructure { lambda: w("ab"), tau: w("bbb") });
    }

    #[test]
    fn trace_examples() {
        let u = w("aaabacccca");
        assert_eq!(trace(&u, 3, 4).residues(), &[1, 1, 0]);
        assert!(trace(&Word::empty(), 2, 5).is_zero());
        assert!(trace(&w("abab"), 2, 2).is_zero());
    }

    #[test]
    fn visiting_state_examples() {
        let g = ab_ba();
        let b = g.b();
        let (q0, qa, qb, f) = (b.initial(), b.step(0, 0).unwrap(), b.step(0, 1).unwrap(), g.final_state());
        assert_eq!(visiting_states(&Word::empty(), &g), BTreeSet::from([q0]));
        assert_eq!(visiting_states(&w("ab"), &g), BTreeSet::from([q0, qb, f]));
        assert_eq!(visiting_states(&w("aa"), &g), BTreeSet::from([q0, qa]));
    }

    #[test]
    fn omega_examples() {
        let g = ab_ba();
        let b = g.b();
        let (q0, qa, qb, f) = (b.initial(), b.step(0, 0).unwrap(), b.step(0, 1).unwrap(), g.final_state());
        assert_eq!(omega(&Word::empty(), &g), OmegaSet::anchor_only(&g));
        let ob: OmegaSet = [triple(None, &[0, 0], q0), triple(Some(1), &[0, 1], qb)].into_iter().collect();
        assert_eq!(omega(&w("b"), &g), ob);
        let oab: OmegaSet = [triple(None, &[0, 0], q0), triple(Some(1), &[0, 1], qb), triple(Some(0), &[1, 1], f)]
            .into_iter()
            .collect();
        assert_eq!(omega(&w("ab"), &g), oab);

        let stepped = omega_step(&ob, 0, &g);
        let expected: OmegaSet = [triple(None, &[0, 0], q0), triple(Some(0), &[1, 0], qa), triple(Some(1), &[1, 1], f)]
            .into_iter()
            .collect();
        assert_eq!(stepped, expected);
        assert_eq!(stepped, omega(&w("ba"), &g));

        let from_anchor = omega_step(&OmegaSet::anchor_only(&g), 0, &g);
        assert_eq!(from_anchor, [triple(None, &[0, 0], q0), triple(Some(0), &[1, 0], qa)].into_iter().collect());

        assert_eq!(omega_step(&omega(&w("aab"), &g), 0, &g), omega(&w("aaba"), &g));
    }
}
