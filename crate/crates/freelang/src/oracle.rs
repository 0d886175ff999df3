//! Brute-force reference implementations.
//!
//! Everything here recomputes a result by direct definition — residual word
//! sets, pairwise word comparisons, split enumeration, derivative matching —
//! without going through the automata constructions it is used to check.
//! The test and acceptance suites compare the fast paths against these.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::alphabet::{Alphabet, Word};
use crate::dfa::{BoolOp, Dfa};
use crate::regex::Regex;

/// All words over `alphabet` of length at most `max_len`, in
/// length-then-lex order.
pub fn all_words(alphabet: &Alphabet, max_len: usize) -> Vec<Word> {
    let k = alphabet.len();
    let mut out = vec![Word::epsilon()];
    let mut level = vec![Word::epsilon()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(level.len() * k);
        for w in &level {
            for sym in 0..k {
                let mut v = w.clone();
                v.push(sym);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

/// Quotient count of an explicit finite language, computed on residual word
/// sets only (no automata involved).
pub fn finite_language_kappa(alphabet: &Alphabet, words: &[Word]) -> usize {
    let start: BTreeSet<Word> = words.iter().cloned().collect();
    let mut seen: BTreeSet<BTreeSet<Word>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(set) = queue.pop_front() {
        for sym in alphabet.symbols() {
            let residual: BTreeSet<Word> = set
                .iter()
                .filter(|w| w.symbols().first() == Some(&sym))
                .map(|w| Word::from_symbols(w.symbols()[1..].to_vec()))
                .collect();
            if seen.insert(residual.clone()) {
                queue.push_back(residual);
            }
        }
    }
    seen.len()
}

/// True iff the two automata accept exactly the same words of length at
/// most `max_len`. Breadth-first walk over state pairs; independent of
/// minimization.
pub fn languages_agree_up_to(d1: &Dfa, d2: &Dfa, max_len: usize) -> bool {
    assert_eq!(d1.alphabet(), d2.alphabet());
    let k = d1.alphabet().len();
    let cols = d2.state_count();
    let mut seen = vec![false; d1.state_count() * cols];
    let mut frontier = vec![(d1.initial(), d2.initial())];
    seen[d1.initial() * cols + d2.initial()] = true;
    for _depth in 0..=max_len {
        let mut next = Vec::new();
        for &(p, q) in &frontier {
            if d1.is_final(p) != d2.is_final(q) {
                return false;
            }
            for sym in 0..k {
                let t = (d1.delta(p, sym), d2.delta(q, sym));
                if !seen[t.0 * cols + t.1] {
                    seen[t.0 * cols + t.1] = true;
                    next.push(t);
                }
            }
        }
        frontier = next;
    }
    true
}

/// Membership in `L(k) · L(l)` by trying every split point.
pub fn in_product(k: &Dfa, l: &Dfa, w: &Word) -> bool {
    let syms = w.symbols();
    (0..=syms.len()).any(|i| {
        let u = Word::from_symbols(syms[..i].to_vec());
        let v = Word::from_symbols(syms[i..].to_vec());
        k.accepts(&u).unwrap() && l.accepts(&v).unwrap()
    })
}

/// Membership in `L(d)*` by dynamic programming over split points.
pub fn in_star(d: &Dfa, w: &Word) -> bool {
    let syms = w.symbols();
    let n = syms.len();
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for i in 1..=n {
        for j in 0..i {
            if reach[j] {
                let factor = Word::from_symbols(syms[j..i].to_vec());
                if d.accepts(&factor).unwrap() {
                    reach[i] = true;
                    break;
                }
            }
        }
    }
    reach[n]
}

/// Membership in `op(L(k), L(l))` from the operands' memberships.
pub fn in_boolean(k: &Dfa, l: &Dfa, op: BoolOp, w: &Word) -> bool {
    op.apply(k.accepts(w).unwrap(), l.accepts(w).unwrap())
}

pub fn is_proper_prefix(u: &Word, v: &Word) -> bool {
    u.len() < v.len() && v.symbols()[..u.len()] == *u.symbols()
}

pub fn is_proper_suffix(u: &Word, v: &Word) -> bool {
    u.len() < v.len() && v.symbols()[v.len() - u.len()..] == *u.symbols()
}

pub fn is_proper_factor(u: &Word, v: &Word) -> bool {
    u.len() < v.len()
        && (0..=v.len() - u.len()).any(|i| v.symbols()[i..i + u.len()] == *u.symbols())
}

/// Scattered-subsequence test.
pub fn is_proper_subword(u: &Word, v: &Word) -> bool {
    if u.len() >= v.len() {
        return false;
    }
    let mut it = v.symbols().iter();
    u.symbols().iter().all(|s| it.any(|t| t == s))
}

fn wordset_free(words: &[Word], related: impl Fn(&Word, &Word) -> bool) -> bool {
    words
        .iter()
        .all(|u| words.iter().all(|v| !related(u, v)))
}

pub fn wordset_is_prefix_free(words: &[Word]) -> bool {
    wordset_free(words, is_proper_prefix)
}

pub fn wordset_is_suffix_free(words: &[Word]) -> bool {
    wordset_free(words, is_proper_suffix)
}

pub fn wordset_is_factor_free(words: &[Word]) -> bool {
    wordset_free(words, is_proper_factor)
}

pub fn wordset_is_subword_free(words: &[Word]) -> bool {
    wordset_free(words, is_proper_subword)
}

/// Derivative-based regex matcher, the semantic reference for
/// [`Regex::to_dfa`]. Powers are expanded; derivatives are lightly
/// simplified so that terms stay small at short word lengths.
pub fn regex_matches(r: &Regex, w: &Word) -> bool {
    let mut cur = r.expand_powers();
    for &sym in w.symbols() {
        cur = derivative(&cur, sym);
    }
    nullable(&cur)
}

fn nullable(r: &Regex) -> bool {
    match r {
        Regex::Empty | Regex::Letter(_) => false,
        Regex::Epsilon | Regex::Star(_) => true,
        Regex::Union(l, rr) => nullable(l) || nullable(rr),
        Regex::Concat(l, rr) => nullable(l) && nullable(rr),
        Regex::Power(i, e) => *e == 0 || nullable(i),
    }
}

fn simple_union(l: Regex, r: Regex) -> Regex {
    match (l, r) {
        (Regex::Empty, r) => r,
        (l, Regex::Empty) => l,
        (l, r) if l == r => l,
        (l, r) => Regex::union(l, r),
    }
}

fn simple_concat(l: Regex, r: Regex) -> Regex {
    match (l, r) {
        (Regex::Empty, _) | (_, Regex::Empty) => Regex::Empty,
        (Regex::Epsilon, r) => r,
        (l, Regex::Epsilon) => l,
        (l, r) => Regex::concat(l, r),
    }
}

fn derivative(r: &Regex, sym: usize) -> Regex {
    match r {
        Regex::Empty | Regex::Epsilon => Regex::Empty,
        Regex::Letter(s) => {
            if *s == sym {
                Regex::Epsilon
            } else {
                Regex::Empty
            }
        }
        Regex::Union(l, rr) => simple_union(derivative(l, sym), derivative(rr, sym)),
        Regex::Concat(l, rr) => {
            let head = simple_concat(derivative(l, sym), rr.as_ref().clone());
            if nullable(l) {
                simple_union(head, derivative(rr, sym))
            } else {
                head
            }
        }
        Regex::Star(i) => simple_concat(derivative(i, sym), Regex::star(i.as_ref().clone())),
        Regex::Power(..) => unreachable!("powers are expanded before matching"),
    }
}

/// Calls `f` on every complete DFA with exactly `n` states over the given
/// alphabet (all transition tables, all final-state sets, initial state 0).
/// Intended for exhaustive cross-checks at tiny sizes.
pub fn for_each_complete_dfa(alphabet: &Alphabet, n: usize, mut f: impl FnMut(&Dfa)) {
    let k = alphabet.len();
    let slots = n * k;
    let mut trans = vec![0usize; slots];
    loop {
        for finals_mask in 0..(1u32 << n) {
            let finals = (0..n).filter(|&s| finals_mask >> s & 1 == 1);
            let d = Dfa::new(alphabet.clone(), n, trans.clone(), 0, finals)
                .expect("generated table is a valid DFA");
            f(&d);
        }
        // odometer over the transition table
        let mut i = 0;
        loop {
            if i == slots {
                return;
            }
            trans[i] += 1;
            if trans[i] < n {
                break;
            }
            trans[i] = 0;
            i += 1;
        }
    }
}

/// Distinct languages (as canonical minimal DFAs) among `dfas`.
pub fn distinct_languages(dfas: impl IntoIterator<Item = Dfa>) -> Vec<Dfa> {
    let mut seen: HashMap<String, ()> = HashMap::new();
    let mut out = Vec::new();
    for d in dfas {
        let m = d.minimize();
        let key = crate::textfmt::print_dfa(&m);
        if seen.insert(key, ()).is_none() {
            out.push(m);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_relations() {
        let sigma = Alphabet::binary();
        let w = |s: &str| sigma.word(s).unwrap();
        assert!(is_proper_prefix(&w("a"), &w("ab")));
        assert!(!is_proper_prefix(&w("b"), &w("ab")));
        assert!(is_proper_suffix(&w("b"), &w("ab")));
        assert!(is_proper_factor(&w("ab"), &w("aabb")));
        assert!(is_proper_subword(&w("ab"), &w("aabb")));
        assert!(is_proper_subword(&w("ab"), &w("baab")));
        assert!(!is_proper_factor(&w("ab"), &w("ba")));
        assert!(!is_proper_subword(&w("ab"), &w("b")));
    }

    #[test]
    fn residual_kappa_of_small_sets() {
        let sigma = Alphabet::binary();
        let w = |s: &str| sigma.word(s).unwrap();
        assert_eq!(finite_language_kappa(&sigma, &[]), 1);
        assert_eq!(finite_language_kappa(&sigma, &[Word::epsilon()]), 2);
        assert_eq!(finite_language_kappa(&sigma, &[w("a"), w("b")]), 3);
    }

    #[test]
    fn all_words_counts() {
        let sigma = Alphabet::binary();
        assert_eq!(all_words(&sigma, 2).len(), 1 + 2 + 4);
    }

    #[test]
    fn exhaustive_dfa_visitor_count() {
        let sigma = Alphabet::unary();
        let mut count = 0usize;
        for_each_complete_dfa(&sigma, 2, |_| count += 1);
        // 2^(2*1) transition tables x 2^2 final sets
        assert_eq!(count, 16);
    }
}
