use std::collections::{HashMap, VecDeque};

use crate::alphabet::{Letter, Word};
use crate::automata::Acceptor;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoolOp {
    Intersect,
    Union,
    Difference,
}

impl BoolOp {
    fn eval(self, x: bool, y: bool) -> bool {
        match self {
            BoolOp::Intersect => x && y,
            BoolOp::Union => x || y,
            BoolOp::Difference => x && !y,
        }
    }
}

/// Outcome of a language equivalence check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equivalence {
    pub equal: bool,
    /// Shortest, then lexicographically least, word in the symmetric
    /// difference.
    pub counterexample: Option<Word>,
}

fn check_alphabets(d1: &Acceptor, d2: &Acceptor) -> Result<()> {
    if d1.alphabet() != d2.alphabet() {
        return Err(Error::AlphabetMismatch(format!("{:?} vs {:?}", d1.alphabet().symbols(), d2.alphabet().symbols())));
    }
    Ok(())
}

/// BFS over the product of the completed automata. Calls `visit` with the
/// pair and the word reaching it, in shortlex order of those words; stops at
/// the first pair where `visit` returns true.
fn product_bfs(
    d1: &Acceptor,
    d2: &Acceptor,
    mut visit: impl FnMut((usize, usize)) -> bool,
) -> (Vec<(usize, usize)>, Vec<usize>, Option<Word>) {
    let k = d1.k();
    let t1 = d1.completed_table();
    let t2 = d2.completed_table();
    let mut index: HashMap<(usize, usize), usize> = HashMap::new();
    let mut pairs = vec![(d1.initial(), d2.initial())];
    let mut parent: Vec<Option<(usize, Letter)>> = vec![None];
    index.insert(pairs[0], 0);
    let mut delta = Vec::new();
    let mut head = 0;
    while head < pairs.len() {
        let (p, q) = pairs[head];
        if visit((p, q)) {
            let mut letters = Vec::new();
            let mut cur = head;
            while let Some((prev, a)) = parent[cur] {
                letters.push(a);
                cur = prev;
            }
            letters.reverse();
            return (pairs, delta, Some(Word::from(letters)));
        }
        for a in 0..k {
            let next = (t1[p * k + a], t2[q * k + a]);
            let id = *index.entry(next).or_insert_with(|| {
                pairs.push(next);
                parent.push(Some((head, a)));
                pairs.len() - 1
            });
            delta.push(id);
        }
        head += 1;
    }
    (pairs, delta, None)
}

/// Boolean combination by product construction on completed copies.
pub fn bool_op(d1: &Acceptor, d2: &Acceptor, op: BoolOp) -> Result<Acceptor> {
    check_alphabets(d1, d2)?;
    let (pairs, delta, _) = product_bfs(d1, d2, |_| false);
    let fin = |q: usize, d: &Acceptor| q < d.n() && d.is_final(q);
    let finals = pairs.iter().map(|&(p, q)| op.eval(fin(p, d1), fin(q, d2))).collect();
    let delta = delta.into_iter().map(Some).collect();
    Ok(Acceptor::new(d1.alphabet().clone(), pairs.len(), delta, 0, finals)?.trim_minimize())
}

pub fn intersect(d1: &Acceptor, d2: &Acceptor) -> Result<Acceptor> {
    bool_op(d1, d2, BoolOp::Intersect)
}

pub fn union(d1: &Acceptor, d2: &Acceptor) -> Result<Acceptor> {
    bool_op(d1, d2, BoolOp::Union)
}

pub fn difference(d1: &Acceptor, d2: &Acceptor) -> Result<Acceptor> {
    bool_op(d1, d2, BoolOp::Difference)
}

/// Language equivalence with a shortlex-least distinguishing word.
pub fn equivalent(d1: &Acceptor, d2: &Acceptor) -> Result<Equivalence> {
    check_alphabets(d1, d2)?;
    let fin = |q: usize, d: &Acceptor| q < d.n() && d.is_final(q);
    let (_, _, witness) = product_bfs(d1, d2, |(p, q)| fin(p, d1) != fin(q, d2));
    Ok(Equivalence { equal: witness.is_none(), counterexample: witness })
}

/// Shortest accepted word, lexicographically least among the shortest.
pub fn shortest_accepted(d: &Acceptor) -> Option<Word> {
    let k = d.k();
    let mut parent: Vec<Option<Option<(usize, Letter)>>> = vec![None; d.n()];
    parent[d.initial()] = Some(None);
    let mut queue = VecDeque::from([d.initial()]);
    while let Some(q) = queue.pop_front() {
        if d.is_final(q) {
            let mut letters = Vec::new();
            let mut cur = q;
            while let Some(Some((prev, a))) = parent[cur] {
                letters.push(a);
                cur = prev;
            }
            letters.reverse();
            return Some(Word::from(letters));
        }
        for a in 0..k {
            if let Some(p) = d.step(q, a) {
                if parent[p].is_none() {
                    parent[p] = Some(Some((q, a)));
                    queue.push_back(p);
                }
            }
        }
    }
    None
}
