mod common;

use std::collections::BTreeSet;

use common::*;
use syncideal::alphabet::{Alphabet, Word};
use syncideal::error::Error;
use syncideal::tail::{construct_tail_automaton, word_class, GeneratorSet};
use syncideal::verify::{verify_construction, verify_decomposition, DEFAULT_BUDGET};

fn check_set(words: &[Word], k: usize) {
    let m = acceptor_of(words, k);
    let check = verify_construction(&m, None, DEFAULT_BUDGET).unwrap();
    assert!(check.verdict.ok, "M={{{}}}: {}", render(words), check.verdict.detail);
    let a = &check.automaton.automaton;
    assert!(oracle_strongly_connected(a), "M={{{}}}", render(words));
    let bad = all_words(k, 7).into_iter().find(|u| oracle_is_reset(a, u) != in_ideal(u, words));
    assert!(bad.is_none(), "M={{{}}}: disagreement on {:?}", render(words), bad);
}

#[test]
fn every_factor_free_subset_of_length_two_words() {
    let ab = Alphabet::latin(2);
    let pairs: Vec<Word> = ab.words_of_length(2).collect();
    for mask in 1u32..(1 << pairs.len()) {
        let set: Vec<Word> = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i].clone()).collect();
        check_set(&set, 2);
    }
}

#[test]
fn random_factor_free_samples() {
    let mut rng = rng(100);
    for _ in 0..60 {
        let words = random_factor_free(&mut rng, 2, 3, 3);
        check_set(&words, 2);
    }
    for _ in 0..15 {
        let words = random_factor_free(&mut rng, 3, 2, 2);
        check_set(&words, 3);
    }
}

#[test]
fn single_letter_generator() {
    check_set(&[word("a")], 2);
    let gens = GeneratorSet::from_words(Alphabet::latin(2), &[word("a")]).unwrap();
    assert_eq!(construct_tail_automaton(&gens).unwrap().automaton.n(), 2);
}

#[test]
fn classes_partition_the_ideal() {
    for words in [vec![word("aa")], vec![word("ab")], vec![word("aba"), word("bb")]] {
        let gens = GeneratorSet::from_words(Alphabet::latin(2), &words).unwrap();
        let tail = construct_tail_automaton(&gens).unwrap();
        let max_len = 2 * gens.m() + 4;
        for u in all_words(2, max_len).into_iter().filter(|u| in_ideal(u, &words)) {
            let q = tail.index_of(&word_class(&u, &gens).unwrap()).expect("reachable class");
            assert_eq!(image(&tail.automaton, &u), BTreeSet::from([q]), "M={{{}}} u={u}", render(&words));
        }
        assert!(verify_decomposition(&tail.automaton, max_len).unwrap().ok);
    }
}

#[test]
fn gates_reject_bad_generators() {
    let ab = Alphabet::latin(2);
    assert!(matches!(GeneratorSet::from_words(ab.clone(), &[word("a"), word("aa")]), Err(Error::NotFactorFree { .. })));
    assert!(matches!(GeneratorSet::from_words(ab.clone(), &[Word::empty()]), Err(Error::EmptyWordGenerator)));
    assert!(matches!(GeneratorSet::from_words(ab, &[]), Err(Error::EmptyGenerators)));
}
