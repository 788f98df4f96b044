//! Graphviz export.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::alphabet::Alphabet;
use crate::automata::{Acceptor, Semiautomaton};

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn render(
    alphabet: &Alphabet,
    n: usize,
    edges: impl Iterator<Item = (usize, usize, usize)>,
    initial: Option<usize>,
    finals: &[bool],
    labels: Option<&[String]>,
) -> String {
    let mut merged: BTreeMap<(usize, usize), Vec<&str>> = BTreeMap::new();
    for (q, a, p) in edges {
        merged.entry((q, p)).or_default().push(alphabet.symbol(a));
    }
    let mut out = String::from("digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n");
    if let Some(i) = initial {
        writeln!(out, "  start [shape=point];\n  start -> {i};").unwrap();
    }
    for q in 0..n {
        let shape = if finals.get(q).copied().unwrap_or(false) { "doublecircle" } else { "circle" };
        let label = labels.and_then(|l| l.get(q)).map_or_else(|| q.to_string(), |l| format!("{q}: {l}"));
        writeln!(out, "  {q} [shape={shape}, label=\"{}\"];", escape(&label)).unwrap();
    }
    for ((q, p), letters) in merged {
        writeln!(out, "  {q} -> {p} [label=\"{}\"];", escape(&letters.join(","))).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn semiautomaton_to_dot(a: &Semiautomaton, labels: Option<&[String]>) -> String {
    let edges = (0..a.n()).flat_map(|q| a.alphabet().letters().map(move |x| (q, x, a.step(q, x))));
    render(a.alphabet(), a.n(), edges, None, &[], labels)
}

/// The empty language renders as an empty digraph.
pub fn acceptor_to_dot(d: &Acceptor, labels: Option<&[String]>) -> String {
    if d.is_empty_language() {
        return "digraph automaton {\n}\n".to_string();
    }
    let finals: Vec<bool> = (0..d.n()).map(|q| d.is_final(q)).collect();
    render(d.alphabet(), d.n(), d.transitions(), Some(d.initial()), &finals, labels)
}
