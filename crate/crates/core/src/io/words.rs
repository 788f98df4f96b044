//! Word lists: an `alphabet` header, then one word per line. `eps` is the
//! empty word; blank lines and `#` comments are skipped.

use crate::alphabet::{Alphabet, Word};
use crate::error::{Error, Result};

pub fn parse_words(text: &str) -> Result<(Alphabet, Vec<Word>)> {
    let mut alphabet: Option<Alphabet> = None;
    let mut words = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        match &alphabet {
            None => {
                let rest = content
                    .strip_prefix("alphabet")
                    .filter(|r| r.is_empty() || r.starts_with(char::is_whitespace))
                    .ok_or_else(|| Error::Parse { line, msg: "expected an `alphabet` header".into() })?;
                alphabet = Some(
                    Alphabet::new(rest.split_whitespace()).map_err(|e| Error::Parse { line, msg: e.to_string() })?,
                );
            }
            Some(alpha) => {
                let word = alpha.parse_word(content).map_err(|e| Error::Parse { line, msg: e.to_string() })?;
                words.push(word);
            }
        }
    }
    let alphabet = alphabet.ok_or(Error::Parse { line: 1, msg: "missing `alphabet` header".into() })?;
    Ok((alphabet, words))
}

pub fn serialize_words(alphabet: &Alphabet, words: &[Word]) -> String {
    let mut out = format!("alphabet {}\n", alphabet.symbols().join(" "));
    for w in words {
        out.push_str(&alphabet.render(w));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::w;

    #[test]
    fn examples() {
        let (a, ws) = parse_words("alphabet a b\nab\nba").unwrap();
        assert_eq!(a, Alphabet::latin(2));
        assert_eq!(ws, vec![w("ab"), w("ba")]);
        let (_, ws) = parse_words("alphabet a\neps").unwrap();
        assert_eq!(ws, vec![Word::empty()]);
        let e = parse_words("alphabet a b\nac").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn comments_and_blank_lines() {
        let (_, ws) = parse_words("# generators\n\nalphabet a b\n\nab # first\n\nba\n").unwrap();
        assert_eq!(ws.len(), 2);
        assert!(parse_words("ab\n").is_err());
        let text = serialize_words(&Alphabet::latin(2), &ws);
        assert_eq!(parse_words(&text).unwrap().1, ws);
    }
}
