use crate::alphabet::{Alphabet, Word};
use crate::automata::{shortest_accepted, Acceptor};
use crate::error::{Error, Result};
use crate::reset::{factor_free_violation, ideal_closure};

/// Minimal partial acceptor `B` of a nonempty factor-free language `M`
/// with `ε ∉ M`. Its unique final state has no outgoing transitions.
pub fn build_b(m: &Acceptor) -> Result<Acceptor> {
    let b = m.trim_minimize();
    if b.is_empty_language() {
        return Err(Error::EmptyGenerators);
    }
    if b.is_final(b.initial()) {
        return Err(Error::EmptyWordGenerator);
    }
    if let Some((inner, outer)) = factor_free_violation(&b) {
        let render = |u: &Word| b.alphabet().render(u);
        return Err(Error::NotFactorFree { inner: render(&inner), outer: render(&outer) });
    }
    let finals = b.finals();
    if finals.len() != 1 {
        return Err(Error::MalformedGenerators(format!("{} final states", finals.len())));
    }
    let f = finals[0];
    if b.alphabet().letters().any(|a| b.step(f, a).is_some()) {
        return Err(Error::MalformedGenerators("final state has an outgoing transition".into()));
    }
    Ok(b)
}

/// A validated generator set `M` together with everything the tail
/// construction derives from it: the minimal acceptor `B`, its final state
/// `f`, the ideal `I = Σ*MΣ*`, the modulus `m = ‖I‖` and the seed word.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    b: Acceptor,
    f: usize,
    ideal: Acceptor,
    seed: Word,
}

impl GeneratorSet {
    pub fn new(m: &Acceptor) -> Result<Self> {
        let b = build_b(m)?;
        let f = b.finals()[0];
        let ideal = ideal_closure(&b);
        let seed = shortest_accepted(&b).expect("nonempty");
        Ok(GeneratorSet { b, f, ideal, seed })
    }

    pub fn from_words<'a>(alphabet: Alphabet, words: impl IntoIterator<Item = &'a Word>) -> Result<Self> {
        GeneratorSet::new(&Acceptor::from_words(alphabet, words)?)
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.b.alphabet()
    }

    pub fn k(&self) -> usize {
        self.b.k()
    }

    /// The minimal partial acceptor of `M`.
    pub fn b(&self) -> &Acceptor {
        &self.b
    }

    pub fn final_state(&self) -> usize {
        self.f
    }

    /// Acceptor of `I = Σ*MΣ*`.
    pub fn ideal(&self) -> &Acceptor {
        &self.ideal
    }

    /// `‖I‖`, the length of a shortest generator.
    pub fn m(&self) -> usize {
        self.seed.len()
    }

    /// Modulus of the traces stored in tail states: `‖I‖`, raised to 2 when
    /// `‖I‖ = 1`. With a one-letter generator `a` every tail is a power of
    /// the other letters, and traces modulo 1 cannot tell `I·b` from `I`.
    pub fn modulus(&self) -> usize {
        self.m().max(2)
    }

    /// Shortlex-least shortest word of `M`.
    pub fn seed_word(&self) -> &Word {
        &self.seed
    }

    pub fn in_ideal(&self, u: &Word) -> bool {
        self.ideal.accepts(u)
    }

    pub fn in_generators(&self, u: &Word) -> bool {
        self.b.accepts(u)
    }
}
