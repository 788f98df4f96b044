//! The line-oriented `.aut` format.
//!
//! ```text
//! # Černý automaton C_4
//! alphabet a b
//! states 4
//! trans 0 a 1
//! trans 0 b 1
//! ...
//! ```
//!
//! Directives, one per line: `alphabet <sym>...`, `states <n>`, optional
//! `initial <q>`, optional `final <q>...`, optional `partial`, then
//! `trans <q> <sym> <p>`. `#` starts a comment. A file without `initial`
//! and `final` describes a semiautomaton and must be complete; otherwise it
//! describes an acceptor, which may be partial only when `partial` is given.

use std::fmt::Write as _;

use crate::alphabet::Alphabet;
use crate::automata::{Acceptor, Semiautomaton};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AutFile {
    Semiautomaton(Semiautomaton),
    Acceptor(Acceptor),
}

impl AutFile {
    pub fn alphabet(&self) -> &Alphabet {
        match self {
            AutFile::Semiautomaton(a) => a.alphabet(),
            AutFile::Acceptor(d) => d.alphabet(),
        }
    }

    pub fn into_semiautomaton(self) -> Result<Semiautomaton> {
        match self {
            AutFile::Semiautomaton(a) => Ok(a),
            AutFile::Acceptor(_) => Err(Error::Invalid("expected a semiautomaton, found an acceptor".into())),
        }
    }

    /// Acceptors as they are; semiautomata are refused.
    pub fn into_acceptor(self) -> Result<Acceptor> {
        match self {
            AutFile::Acceptor(d) => Ok(d),
            AutFile::Semiautomaton(_) => {
                Err(Error::Invalid("expected an acceptor (with initial/final), found a semiautomaton".into()))
            }
        }
    }
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_state(tok: &str, n: usize, line: usize) -> Result<usize> {
    let q: usize = tok.parse().map_err(|_| err(line, format!("`{tok}` is not a state number")))?;
    if q >= n {
        return Err(err(line, format!("state {q} out of range (states {n})")));
    }
    Ok(q)
}

pub fn parse_aut(text: &str) -> Result<AutFile> {
    let mut alphabet: Option<Alphabet> = None;
    let mut n: Option<usize> = None;
    let mut initial: Option<usize> = None;
    let mut finals: Option<Vec<usize>> = None;
    let mut partial = false;
    let mut delta: Vec<Option<usize>> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut toks = content.split_whitespace();
        let directive = toks.next().expect("nonempty line");
        let args: Vec<&str> = toks.collect();
        match directive {
            "alphabet" => {
                if alphabet.is_some() {
                    return Err(err(line, "duplicate `alphabet`"));
                }
                alphabet = Some(Alphabet::new(args.iter().copied()).map_err(|e| err(line, e.to_string()))?);
            }
            "states" => {
                if n.is_some() {
                    return Err(err(line, "duplicate `states`"));
                }
                let k = alphabet.as_ref().ok_or_else(|| err(line, "`states` before `alphabet`"))?.len();
                let [count] = args[..] else {
                    return Err(err(line, "`states` takes one argument"));
                };
                let count: usize = count.parse().map_err(|_| err(line, format!("`{count}` is not a count")))?;
                if count == 0 {
                    return Err(err(line, "at least one state is required"));
                }
                n = Some(count);
                delta = vec![None; count * k];
            }
            "initial" => {
                let n = n.ok_or_else(|| err(line, "`initial` before `states`"))?;
                if initial.is_some() {
                    return Err(err(line, "duplicate `initial`"));
                }
                let [q] = args[..] else {
                    return Err(err(line, "`initial` takes one state"));
                };
                initial = Some(parse_state(q, n, line)?);
            }
            "final" => {
                let n = n.ok_or_else(|| err(line, "`final` before `states`"))?;
                if finals.is_some() {
                    return Err(err(line, "duplicate `final`"));
                }
                let fs = args.iter().map(|q| parse_state(q, n, line)).collect::<Result<Vec<_>>>()?;
                finals = Some(fs);
            }
            "partial" => {
                if !args.is_empty() {
                    return Err(err(line, "`partial` takes no arguments"));
                }
                partial = true;
            }
            "trans" => {
                let n = n.ok_or_else(|| err(line, "`trans` before `states`"))?;
                let alpha = alphabet.as_ref().expect("states implies alphabet");
                let [q, sym, p] = args[..] else {
                    return Err(err(line, "`trans` takes <state> <symbol> <state>"));
                };
                let q = parse_state(q, n, line)?;
                let a = alpha.index_of(sym).ok_or_else(|| err(line, format!("unknown symbol `{sym}`")))?;
                let p = parse_state(p, n, line)?;
                let slot = &mut delta[q * alpha.len() + a];
                if slot.is_some() {
                    return Err(err(line, format!("duplicate transition for ({q}, {sym})")));
                }
                *slot = Some(p);
            }
            other => return Err(err(line, format!("unknown directive `{other}`"))),
        }
    }

    let end = last_line.max(1);
    let alphabet = alphabet.ok_or_else(|| err(end, "missing `alphabet`"))?;
    let n = n.ok_or_else(|| err(end, "missing `states`"))?;
    let k = alphabet.len();
    let is_acceptor = initial.is_some() || finals.is_some();
    if !partial || !is_acceptor {
        if let Some(i) = delta.iter().position(Option::is_none) {
            let what = if is_acceptor { "and `partial` is not set" } else { "in a semiautomaton" };
            return Err(err(end, format!("missing transition for ({}, {}) {what}", i / k, alphabet.symbol(i % k))));
        }
    }
    if !is_acceptor {
        let table = delta.into_iter().map(|p| p.expect("complete")).collect();
        return Ok(AutFile::Semiautomaton(Semiautomaton::new(alphabet, n, table)?));
    }
    let initial = initial.ok_or_else(|| err(end, "`final` given without `initial`"))?;
    let mut fin = vec![false; n];
    for f in finals.unwrap_or_default() {
        fin[f] = true;
    }
    Ok(AutFile::Acceptor(Acceptor::new(alphabet, n, delta, initial, fin)?))
}

fn header(out: &mut String, alphabet: &Alphabet, n: usize) {
    writeln!(out, "alphabet {}", alphabet.symbols().join(" ")).unwrap();
    writeln!(out, "states {n}").unwrap();
}

pub fn serialize_semiautomaton(a: &Semiautomaton) -> String {
    let mut out = String::new();
    header(&mut out, a.alphabet(), a.n());
    for q in 0..a.n() {
        for x in a.alphabet().letters() {
            writeln!(out, "trans {q} {} {}", a.alphabet().symbol(x), a.step(q, x)).unwrap();
        }
    }
    out
}

pub fn serialize_acceptor(d: &Acceptor) -> String {
    let mut out = String::new();
    header(&mut out, d.alphabet(), d.n());
    writeln!(out, "initial {}", d.initial()).unwrap();
    let finals: Vec<String> = d.finals().iter().map(usize::to_string).collect();
    if finals.is_empty() {
        out.push_str("final\n");
    } else {
        writeln!(out, "final {}", finals.join(" ")).unwrap();
    }
    if d.is_partial() {
        out.push_str("partial\n");
    }
    for (q, x, p) in d.transitions() {
        writeln!(out, "trans {q} {} {p}", d.alphabet().symbol(x)).unwrap();
    }
    out
}

pub fn serialize_aut(file: &AutFile) -> String {
    match file {
        AutFile::Semiautomaton(a) => serialize_semiautomaton(a),
        AutFile::Acceptor(d) => serialize_acceptor(d),
    }
}
