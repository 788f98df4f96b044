//! Alphabets and words.
//!
//! Letters are indices into an [`Alphabet`]; the declaration order of the
//! symbols is the lexicographic order used for every tie-break in the crate.

use std::fmt;

use crate::error::{Error, Result};

/// Index of a letter in its alphabet.
pub type Letter = usize;

/// An ordered list of distinct printable symbols.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet must have at least one symbol".into()));
        }
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() || s.chars().any(|c| c.is_whitespace() || c.is_control()) {
                return Err(Error::InvalidAlphabet(format!("symbol {s:?} is not a printable token")));
            }
            if s == "eps" || s.starts_with('#') {
                return Err(Error::InvalidAlphabet(format!("symbol `{s}` is reserved")));
            }
            if symbols[..i].contains(s) {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol `{s}`")));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// Alphabet `a, b, c, ...` with `k` letters (k ≤ 26).
    pub fn latin(k: usize) -> Self {
        assert!((1..=26).contains(&k), "latin alphabet size must be in 1..=26");
        Alphabet { symbols: (0..k).map(|i| ((b'a' + i as u8) as char).to_string()).collect() }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol(&self, letter: Letter) -> &str {
        &self.symbols[letter]
    }

    pub fn letters(&self) -> std::ops::Range<Letter> {
        0..self.symbols.len()
    }

    pub fn index_of(&self, symbol: &str) -> Option<Letter> {
        self.symbols.iter().position(|s| s == symbol)
    }

    /// Parses a word. Single-character alphabets accept compact strings like
    /// `"aab"`; otherwise symbols are whitespace separated. `eps` and the
    /// empty string denote ε.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() || text == "eps" {
            return Ok(Word::empty());
        }
        let tokens: Vec<&str> = if text.contains(char::is_whitespace) {
            text.split_whitespace().collect()
        } else if self.index_of(text).is_some() {
            vec![text]
        } else if self.symbols.iter().all(|s| s.chars().count() == 1) {
            return text
                .chars()
                .map(|c| {
                    let mut buf = [0u8; 4];
                    let s: &str = c.encode_utf8(&mut buf);
                    self.index_of(s).ok_or_else(|| Error::UnknownSymbol(s.to_string()))
                })
                .collect::<Result<Vec<_>>>()
                .map(Word::from);
        } else {
            vec![text]
        };
        tokens
            .into_iter()
            .map(|t| self.index_of(t).ok_or_else(|| Error::UnknownSymbol(t.to_string())))
            .collect::<Result<Vec<_>>>()
            .map(Word::from)
    }

    /// Renders a word; `eps` for ε, concatenated when all symbols are one
    /// character wide, space separated otherwise.
    pub fn render(&self, word: &Word) -> String {
        if word.is_empty() {
            return "eps".to_string();
        }
        let sep = if self.symbols.iter().all(|s| s.chars().count() == 1) { "" } else { " " };
        word.iter().map(|&a| self.symbols[a].as_str()).collect::<Vec<_>>().join(sep)
    }

    pub fn check_word(&self, word: &Word) -> Result<()> {
        match word.iter().find(|&&a| a >= self.len()) {
            Some(&a) => Err(Error::LetterOutOfRange(a)),
            None => Ok(()),
        }
    }

    /// All words of length exactly `len`, in lexicographic order.
    pub fn words_of_length(&self, len: usize) -> WordsOfLength {
        WordsOfLength { k: self.len(), current: Some(vec![0; len]) }
    }

    /// All words of length at most `max_len`, in shortlex order.
    pub fn words_up_to(&self, max_len: usize) -> impl Iterator<Item = Word> + '_ {
        (0..=max_len).flat_map(move |l| self.words_of_length(l))
    }
}

/// Iterator over `Σ^len` in lexicographic order.
pub struct WordsOfLength {
    k: usize,
    current: Option<Vec<Letter>>,
}

impl Iterator for WordsOfLength {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let cur = self.current.take()?;
        let out = Word(cur.clone());
        let mut next = cur;
        let mut i = next.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            next[i] += 1;
            if next[i] < self.k {
                self.current = Some(next);
                break;
            }
            next[i] = 0;
        }
        Some(out)
    }
}

/// A finite word over letter indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Letter> {
        self.0.iter()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    /// The suffix of length `i` (`u[i:]`).
    pub fn suffix(&self, i: usize) -> Word {
        Word(self.0[self.0.len() - i..].to_vec())
    }

    /// The prefix of length `i` (`u[:i]`).
    pub fn prefix(&self, i: usize) -> Word {
        Word(self.0[..i].to_vec())
    }

    /// The word without its first letter; ε stays ε.
    pub fn drop_first(&self) -> Word {
        Word(self.0.get(1..).unwrap_or_default().to_vec())
    }

    pub fn push(&mut self, a: Letter) {
        self.0.push(a);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn with(&self, a: Letter) -> Word {
        let mut v = self.0.clone();
        v.push(a);
        Word(v)
    }

    pub fn prepend(&self, a: Letter) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(a);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    /// Whether `self` occurs as a contiguous factor of `other`.
    pub fn is_factor_of(&self, other: &Word) -> bool {
        self.is_empty() || other.0.windows(self.len()).any(|w| w == self.0.as_slice())
    }

    pub fn into_vec(self) -> Vec<Letter> {
        self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl From<&[Letter]> for Word {
    fn from(v: &[Letter]) -> Self {
        Word(v.to_vec())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Word {
    type Item = &'a Letter;
    type IntoIter = std::slice::Iter<'a, Letter>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for Word {
    /// Letters rendered as `a`, `b`, ... when no alphabet is at hand.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("eps");
        }
        for &a in &self.0 {
            if a < 26 {
                write!(f, "{}", (b'a' + a as u8) as char)?;
            } else {
                write!(f, "<{a}>")?;
            }
        }
        Ok(())
    }
}

/// Shortcut for words over the latin alphabet, `w("aab")`.
pub fn w(text: &str) -> Word {
    text.bytes().map(|b| (b - b'a') as Letter).collect()
}
