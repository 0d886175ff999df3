//! Property tests over random expressions and automata.

use proptest::prelude::*;

use freelang::{oracle, parse_regex, textfmt, Alphabet, Dfa, Regex, Word};

fn arb_regex() -> impl Strategy<Value = Regex> {
    let leaf = prop_oneof![
        Just(Regex::Empty),
        Just(Regex::Epsilon),
        (0usize..3).prop_map(Regex::Letter),
    ];
    leaf.prop_recursive(4, 24, 3, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Regex::union(l, r)),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Regex::concat(l, r)),
            inner.clone().prop_map(Regex::star),
            (inner, 0u32..4).prop_map(|(r, e)| Regex::power(r, e)),
        ]
    })
}

fn arb_dfa(max_states: usize, k: usize) -> impl Strategy<Value = Dfa> {
    (1..=max_states).prop_flat_map(move |n| {
        (
            proptest::collection::vec(0..n, n * k),
            proptest::collection::vec(proptest::bool::ANY, n),
            0..n,
        )
            .prop_map(move |(transitions, final_flags, initial)| {
                let sigma = Alphabet::first_letters(k).unwrap();
                let finals = final_flags
                    .iter()
                    .enumerate()
                    .filter(|(_, &f)| f)
                    .map(|(i, _)| i);
                Dfa::new(sigma, n, transitions, initial, finals).unwrap()
            })
    })
}

proptest! {
    /// Printing a regex and reparsing it reproduces the tree exactly.
    #[test]
    fn regex_print_parse_round_trip(r in arb_regex()) {
        let sigma = Alphabet::new(["a", "b", "x7"]).unwrap();
        let printed = r.print(&sigma);
        let back = parse_regex(&printed, &sigma).unwrap();
        prop_assert_eq!(back, r);
    }

    /// The constructed automaton and the derivative matcher agree on every
    /// short word.
    #[test]
    fn regex_dfa_matches_derivatives(r in arb_regex()) {
        let sigma = Alphabet::of_chars("abc").unwrap();
        let d = r.to_dfa(&sigma);
        for w in oracle::all_words(&sigma, 4) {
            prop_assert_eq!(d.accepts(&w).unwrap(), oracle::regex_matches(&r, &w));
        }
    }

    /// Minimization is idempotent and language-preserving.
    #[test]
    fn minimize_preserves_language(d in arb_dfa(7, 2)) {
        let m = d.minimize();
        prop_assert_eq!(m.minimize(), m.clone());
        prop_assert!(oracle::languages_agree_up_to(&d, &m, 2 * d.state_count()));
        prop_assert!(m.state_count() <= d.state_count());
    }

    /// The text format round-trips canonical automata byte for byte.
    #[test]
    fn text_format_round_trip(d in arb_dfa(6, 3)) {
        let canon = d.minimize();
        let text = textfmt::print_dfa(&canon);
        let back = textfmt::parse_dfa(&text).unwrap();
        prop_assert_eq!(&back, &canon);
        prop_assert_eq!(textfmt::print_dfa(&back), text);
    }

    /// Boolean combinations agree with set-theoretic membership.
    #[test]
    fn boolean_combine_membership(
        d1 in arb_dfa(5, 2),
        d2 in arb_dfa(5, 2),
        op in proptest::sample::select(freelang::BoolOp::ALL.to_vec()),
    ) {
        let combined = d1.boolean_combine(&d2, op).unwrap();
        let sigma = d1.alphabet().clone();
        for w in oracle::all_words(&sigma, 4) {
            prop_assert_eq!(
                combined.accepts(&w).unwrap(),
                op.apply(d1.accepts(&w).unwrap(), d2.accepts(&w).unwrap())
            );
        }
    }

    /// Every operation output keeps the transition function total, and a
    /// reversal never exceeds the subset-construction ceiling.
    #[test]
    fn outputs_stay_complete(d in arb_dfa(5, 2)) {
        let r = d.reverse();
        prop_assert!(r.quotient_complexity() <= 1 << d.state_count());
        for s in 0..r.state_count() {
            for sym in r.alphabet().symbols() {
                prop_assert!(r.delta(s, sym) < r.state_count());
            }
        }
        let star = d.star();
        prop_assert!(star.accepts(&Word::epsilon()).unwrap());
    }
}
