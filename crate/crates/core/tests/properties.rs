mod common;

use common::*;
use proptest::prelude::*;
use syncideal::alphabet::{Alphabet, Word};
use syncideal::automata::{equivalent, Acceptor, Nfa, Semiautomaton};
use syncideal::factors::{factor_counts, factor_recognizer, find_missing_factor};
use syncideal::io::{parse_aut, serialize_acceptor, serialize_semiautomaton, AutFile};
use syncideal::reset::{
    ideal_closure, is_factor_free, is_ideal, is_synchronizing, minimal_words_recognizer, shortest_reset_word,
    state_ideal_recognizer, syn_recognizer,
};
use syncideal::verify::{brute_force_syn, counterexample_replays, verify_syn_equals_ideal, Mode};

fn semiautomaton(max_n: usize, k: usize) -> impl Strategy<Value = Semiautomaton> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(0..n, n * k)
            .prop_map(move |delta| Semiautomaton::new(Alphabet::latin(k), n, delta).unwrap())
    })
}

fn acceptor(max_n: usize, k: usize) -> impl Strategy<Value = Acceptor> {
    (1..=max_n).prop_flat_map(move |n| {
        (
            proptest::collection::vec(proptest::option::weighted(0.8, 0..n), n * k),
            0..n,
            proptest::collection::vec(any::<bool>(), n),
        )
            .prop_map(move |(delta, init, fin)| Acceptor::new(Alphabet::latin(k), n, delta, init, fin).unwrap())
    })
}

fn word_of(k: usize, max_len: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(0..k, 0..=max_len).prop_map(Word::from)
}

fn word_set(k: usize, max_words: usize, max_len: usize) -> impl Strategy<Value = Vec<Word>> {
    proptest::collection::btree_set(proptest::collection::vec(0..k, 1..=max_len).prop_map(Word::from), 1..=max_words)
        .prop_map(|s| s.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn action_is_associative(a in semiautomaton(6, 2), u in word_of(2, 8), v in word_of(2, 8)) {
        for q in 0..a.n() {
            prop_assert_eq!(a.run(q, &u.concat(&v)), a.run(a.run(q, &u), &v));
        }
    }

    #[test]
    fn minimization_is_idempotent_and_preserves_language(d in acceptor(6, 2)) {
        let m = d.trim_minimize();
        prop_assert_eq!(m.trim_minimize(), m.clone());
        prop_assert!(equivalent(&d, &m).unwrap().equal);
        for u in all_words(2, 6) {
            prop_assert_eq!(d.accepts(&u), m.accepts(&u));
        }
        prop_assert!(m.n() <= d.n().max(1));
    }

    #[test]
    fn determinization_matches_simulation(
        n in 1usize..5,
        edges in proptest::collection::vec((0usize..5, 0usize..3, 0usize..5), 0..14),
        initials in proptest::collection::vec(0usize..5, 1..3),
        finals in proptest::collection::vec(0usize..5, 0..3),
    ) {
        // letter 2 stands for an ε-move
        let mut nfa = Nfa::new(Alphabet::latin(2));
        for _ in 0..n {
            nfa.add_state();
        }
        for (q, x, p) in edges {
            let (q, p) = (q % n, p % n);
            if x == 2 { nfa.add_epsilon(q, p) } else { nfa.add_transition(q, x, p) }
        }
        for q in initials { nfa.add_initial(q % n); }
        for q in finals { nfa.set_final(q % n, true); }
        let d = nfa.determinize();
        for u in all_words(2, 8) {
            prop_assert_eq!(d.accepts(&u), nfa.accepts(&u), "word {}", u);
        }
    }

    #[test]
    fn counterexamples_are_shortlex_least(d1 in acceptor(4, 2), d2 in acceptor(4, 2)) {
        let eq = equivalent(&d1, &d2).unwrap();
        let first = all_words(2, 10).into_iter().find(|u| d1.accepts(u) != d2.accepts(u));
        match eq.counterexample {
            None => prop_assert!(eq.equal && first.is_none()),
            Some(u) => {
                prop_assert!(!eq.equal);
                prop_assert_ne!(d1.accepts(&u), d2.accepts(&u));
                if let Some(f) = first {
                    prop_assert_eq!(u, f);
                }
            }
        }
    }

    #[test]
    fn syn_recognizer_agrees_with_brute_force(a in semiautomaton(5, 2)) {
        let syn = syn_recognizer(&a);
        let brute = brute_force_syn(&a, 8).unwrap();
        for u in all_words(2, 8) {
            prop_assert_eq!(syn.accepts(&u), brute.contains(&u), "word {}", u);
            prop_assert_eq!(syn.accepts(&u), oracle_is_reset(&a, &u));
        }
        prop_assert!(is_ideal(&syn));
        prop_assert_eq!(is_synchronizing(&a), !syn.is_empty_language());
        prop_assert_eq!(shortest_reset_word(&a), oracle_shortest_reset(&a));
    }

    #[test]
    fn state_ideals_partition_syn_into_left_ideals(a in semiautomaton(4, 2), v in word_of(2, 3)) {
        let parts: Vec<Acceptor> = (0..a.n()).map(|q| state_ideal_recognizer(&a, q).unwrap()).collect();
        for u in all_words(2, 6) {
            let hits: Vec<usize> = (0..a.n()).filter(|&q| parts[q].accepts(&u)).collect();
            if oracle_is_reset(&a, &u) {
                let target = a.run(0, &u);
                prop_assert_eq!(hits, vec![target]);
                prop_assert!(parts[target].accepts(&v.concat(&u)));
            } else {
                prop_assert!(hits.is_empty());
            }
        }
    }

    #[test]
    fn minimal_words_roundtrip(a in semiautomaton(5, 2)) {
        let syn = syn_recognizer(&a);
        let m = minimal_words_recognizer(&syn).unwrap();
        prop_assert!(equivalent(&ideal_closure(&m), &syn).unwrap().equal);
        prop_assert!(is_factor_free(&m));
        for u in all_words(2, 7) {
            prop_assert_eq!(m.accepts(&u), oracle_minimal_reset(&a, &u), "word {}", u);
        }
    }

    #[test]
    fn closure_of_finite_sets(words in word_set(2, 4, 4)) {
        let m = acceptor_of(&words, 2);
        let ideal = ideal_closure(&m);
        for u in all_words(2, 7) {
            prop_assert_eq!(ideal.accepts(&u), in_ideal(&u, &words));
        }
        prop_assert_eq!(is_factor_free(&m), oracle_factor_free(&words));
        let minimal = minimal_words_recognizer(&ideal).unwrap();
        let expected: Vec<Word> =
            words.iter().filter(|u| !words.iter().any(|v| v != *u && is_factor(v, u))).cloned().collect();
        prop_assert!(equivalent(&minimal, &acceptor_of(&expected, 2)).unwrap().equal);
    }

    #[test]
    fn factors_of_finite_sets(words in word_set(2, 4, 5)) {
        let m = acceptor_of(&words, 2);
        let fact = factor_recognizer(&m);
        let counts = factor_counts(&m, 5);
        for (len, count) in counts.iter().enumerate() {
            let brute: Vec<Word> = all_words(2, len)
                .into_iter()
                .filter(|x| x.len() == len && words.iter().any(|u| is_factor(x, u)))
                .collect();
            prop_assert_eq!(count.clone(), num_bigint::BigUint::from(brute.len()));
            for x in &brute {
                prop_assert!(fact.accepts(x));
            }
        }
        if let Some((ell, witness)) = find_missing_factor(&m, 5) {
            prop_assert_eq!(witness.len(), ell);
            prop_assert!(!words.iter().any(|u| is_factor(&witness, u)));
            let earlier = all_words(2, ell)
                .into_iter()
                .filter(|x| !x.is_empty() && shortlex(x) < shortlex(&witness))
                .find(|x| !words.iter().any(|u| is_factor(x, u)));
            prop_assert!(earlier.is_none(), "{:?} is missing and smaller", earlier);
        }
    }

    #[test]
    fn aut_files_roundtrip(a in semiautomaton(5, 3), d in acceptor(5, 2)) {
        let text = serialize_semiautomaton(&a);
        let back = parse_aut(&text).unwrap();
        prop_assert_eq!(&back, &AutFile::Semiautomaton(a));
        prop_assert_eq!(syncideal::io::serialize_aut(&back), text);
        let text = serialize_acceptor(&d);
        let back = parse_aut(&text).unwrap();
        prop_assert_eq!(&back, &AutFile::Acceptor(d));
        prop_assert_eq!(syncideal::io::serialize_aut(&back), text);
    }

    #[test]
    fn failed_verdicts_replay(a in semiautomaton(4, 2), words in word_set(2, 2, 3)) {
        prop_assume!(oracle_factor_free(&words));
        let m = acceptor_of(&words, 2);
        for mode in [Mode::Exact, Mode::Bounded(7)] {
            let v = verify_syn_equals_ideal(&a, &m, mode, 1_000_000).unwrap();
            let disagree = all_words(2, 7).into_iter().find(|u| oracle_is_reset(&a, u) != in_ideal(u, &words));
            match &v.counterexample {
                Some(u) => {
                    prop_assert!(!v.ok);
                    prop_assert!(counterexample_replays(&a, &m, u));
                    prop_assert_ne!(oracle_is_reset(&a, u), in_ideal(u, &words));
                    if let Some(first) = disagree {
                        prop_assert_eq!(u, &first);
                    }
                }
                None => prop_assert!(v.ok && disagree.is_none()),
            }
        }
    }
}
