//! Freeness predicates and the constructions around them.
//!
//! A language is prefix- (suffix-, factor-, subword-) free when no member is
//! a proper prefix (suffix, contiguous factor, scattered subsequence) of
//! another member; bifix-free means prefix- and suffix-free. The empty
//! language and `{ε}` count as free in all five senses: the condition is
//! vacuous or forced, and totalizing the predicates this way keeps the
//! algebraic laws clean.
//!
//! The prefix test is structural on the minimal automaton (a non-empty
//! prefix-free language has exactly one accepting quotient, namely `ε`).
//! The suffix, factor, and subword tests are emptiness checks of automata
//! products — `L ∩ Σ⁺L`, `L ∩ (Σ⁺LΣ* ∪ Σ*LΣ⁺)`, and `L` against its proper
//! supersequences — so they work for infinite inputs too.

use serde::Serialize;

use crate::dfa::{Dfa, StateId};
use crate::error::{Error, Result};
use crate::nfa::Nfa;

/// Which freeness properties hold, plus finiteness.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct FreeClass {
    pub prefix_free: bool,
    pub suffix_free: bool,
    pub bifix_free: bool,
    pub factor_free: bool,
    pub subword_free: bool,
    pub finite: bool,
}

/// True iff no word of the language is a proper prefix of another.
///
/// Test on the minimal automaton: the empty language passes vacuously; a
/// non-empty language passes iff it has exactly one final state and every
/// transition out of it leads to a dead state (the accepting quotient is
/// `ε`).
pub fn is_prefix_free(d: &Dfa) -> bool {
    let m = d.minimize();
    let finals: Vec<StateId> = m.finals().collect();
    match finals.as_slice() {
        [] => true,
        [f] => {
            let live = m.co_reachable();
            m.alphabet().symbols().all(|sym| !live[m.delta(*f, sym)])
        }
        _ => false,
    }
}

/// True iff no word of the language is a proper suffix of another,
/// i.e. `L ∩ Σ⁺L = ∅`.
pub fn is_suffix_free(d: &Dfa) -> bool {
    let pad = Nfa::sigma_plus(d.alphabet().clone());
    let shifted = Nfa::concat(&pad, &Nfa::from_dfa(d)).expect("same alphabet");
    shifted.intersection_empty_with(d).expect("same alphabet")
}

/// True iff the language is both prefix- and suffix-free.
pub fn is_bifix_free(d: &Dfa) -> bool {
    is_prefix_free(d) && is_suffix_free(d)
}

/// True iff no word of the language is a proper factor of another,
/// i.e. `L ∩ (Σ⁺LΣ* ∪ Σ*LΣ⁺) = ∅`.
pub fn is_factor_free(d: &Dfa) -> bool {
    let sigma = d.alphabet().clone();
    let l = Nfa::from_dfa(d);
    let plus_l_star = Nfa::concat(
        &Nfa::concat(&Nfa::sigma_plus(sigma.clone()), &l).expect("same alphabet"),
        &Nfa::sigma_star(sigma.clone()),
    )
    .expect("same alphabet");
    let star_l_plus = Nfa::concat(
        &Nfa::concat(&Nfa::sigma_star(sigma.clone()), &l).expect("same alphabet"),
        &Nfa::sigma_plus(sigma),
    )
    .expect("same alphabet");
    let padded = Nfa::union(&plus_l_star, &star_l_plus).expect("same alphabet");
    padded.intersection_empty_with(d).expect("same alphabet")
}

/// NFA of the proper supersequences of `L(d)`: the automaton is paired with
/// a one-bit counter that records whether at least one insertion happened;
/// at every state, every letter may be consumed as an insertion.
fn proper_supersequence_nfa(d: &Dfa) -> Nfa {
    let n = d.state_count();
    let mut nfa = Nfa::new(d.alphabet().clone(), 2 * n);
    for q in 0..n {
        for bit in 0..2usize {
            let at = q + bit * n;
            for sym in d.alphabet().symbols() {
                nfa.add_transition(at, sym, d.delta(q, sym) + bit * n);
                // consuming the letter as an insertion sets the bit
                nfa.add_transition(at, sym, q + n);
            }
        }
        if d.is_final(q) {
            nfa.add_final(q + n);
        }
    }
    nfa.add_initial(d.initial());
    nfa
}

/// True iff no word of the language is a proper scattered subsequence of
/// another, i.e. `L` meets none of its proper supersequences.
pub fn is_subword_free(d: &Dfa) -> bool {
    proper_supersequence_nfa(d)
        .intersection_empty_with(d)
        .expect("same alphabet")
}

/// True iff the language is finite: no cycle through a state that is both
/// reachable and co-reachable in the minimal automaton.
pub fn is_finite(d: &Dfa) -> bool {
    let m = d.minimize();
    let live = m.co_reachable();
    // iterative three-color DFS over live states
    let n = m.state_count();
    let k = m.alphabet().len();
    let mut color = vec![0u8; n]; // 0 unvisited, 1 on stack, 2 done
    for start in 0..n {
        if !live[start] || color[start] != 0 {
            continue;
        }
        let mut stack: Vec<(StateId, usize)> = vec![(start, 0)];
        color[start] = 1;
        while let Some(&mut (s, ref mut next_sym)) = stack.last_mut() {
            if *next_sym == k {
                color[s] = 2;
                stack.pop();
                continue;
            }
            let sym = *next_sym;
            *next_sym += 1;
            let t = m.delta(s, sym);
            if !live[t] {
                continue;
            }
            match color[t] {
                0 => {
                    color[t] = 1;
                    stack.push((t, 0));
                }
                1 => return false,
                _ => {}
            }
        }
    }
    true
}

/// Fills all six flags.
pub fn classify(d: &Dfa) -> FreeClass {
    let prefix_free = is_prefix_free(d);
    let suffix_free = is_suffix_free(d);
    FreeClass {
        prefix_free,
        suffix_free,
        bifix_free: prefix_free && suffix_free,
        factor_free: is_factor_free(d),
        subword_free: is_subword_free(d),
        finite: is_finite(d),
    }
}

/// The unique empty-quotient (dead) state of a minimal automaton, if the
/// language has one.
pub fn empty_quotient_state(d: &Dfa) -> Option<StateId> {
    let live = d.co_reachable();
    (0..d.state_count()).find(|&s| !live[s])
}

/// Number of transitions entering the initial state.
pub fn initial_in_degree(d: &Dfa) -> usize {
    let mut count = 0;
    for s in 0..d.state_count() {
        for sym in d.alphabet().symbols() {
            if d.delta(s, sym) == d.initial() {
                count += 1;
            }
        }
    }
    count
}

fn require_minimal(d: &Dfa) -> Result<()> {
    if d.minimize().state_count() != d.state_count() {
        return Err(Error::NotMinimal);
    }
    Ok(())
}

/// A total order on the states of a minimal automaton of a finite language:
/// the initial state first, the empty quotient last, and every transition
/// going strictly forward (or staying on the sink). Ties are broken by
/// smallest state index, so the result is deterministic.
pub fn topological_quotient_order(d: &Dfa) -> Result<Vec<StateId>> {
    require_minimal(d)?;
    if !is_finite(d) {
        return Err(Error::InfiniteLanguage);
    }
    let n = d.state_count();
    let k = d.alphabet().len();
    let sink = empty_quotient_state(d);
    if n == 1 {
        return Ok(vec![0]);
    }
    let sink = sink.expect("a finite language with more than one quotient has an empty quotient");

    let mut indegree = vec![0usize; n];
    for s in 0..n {
        if s == sink {
            continue;
        }
        for sym in 0..k {
            let t = d.delta(s, sym);
            if t != sink {
                indegree[t] += 1;
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut ready: Vec<bool> = (0..n).map(|s| s != sink && indegree[s] == 0).collect();
    let mut placed = vec![false; n];
    while order.len() < n - 1 {
        let q = (0..n)
            .find(|&s| ready[s] && !placed[s])
            .expect("acyclic off-sink graph always has a ready state");
        placed[q] = true;
        order.push(q);
        for sym in 0..k {
            let t = d.delta(q, sym);
            if t != sink && !placed[t] {
                indegree[t] -= 1;
                if indegree[t] == 0 {
                    ready[t] = true;
                }
            }
        }
    }
    order.push(sink);
    debug_assert_eq!(order[0], d.initial());
    Ok(order)
}

/// Where the fresh letter goes when adjoining it to a language.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AdjoinMode {
    /// `aL` — suffix-free by construction.
    PrefixLetter,
    /// `La` — prefix-free by construction.
    SuffixLetter,
    /// `aLa` — factor-free by construction.
    Both,
}

/// Builds `aL`, `La`, or `aLa` over the alphabet extended with the fresh
/// letter `a`, minimized.
pub fn adjoin(d: &Dfa, mode: AdjoinMode, letter: &str) -> Result<Dfa> {
    let (ext, c) = d.alphabet().with_letter(letter)?;
    let n = d.state_count();
    let old_k = d.alphabet().len();
    let mut p = crate::dfa::PartialDfa::new(ext, n, d.initial())?;
    for s in 0..n {
        for sym in 0..old_k {
            p.set_transition(s, sym, d.delta(s, sym))?;
        }
    }
    match mode {
        AdjoinMode::PrefixLetter => {
            let start = p.add_state();
            p.set_transition(start, c, d.initial())?;
            for s in d.finals() {
                p.set_final(s)?;
            }
            // replaced initial: rebuild with the new start
            let done = rebase_initial(p, start)?;
            return Ok(done.complete()?.minimize());
        }
        AdjoinMode::SuffixLetter => {
            let accept = p.add_state();
            for s in d.finals() {
                p.set_transition(s, c, accept)?;
            }
            p.set_final(accept)?;
        }
        AdjoinMode::Both => {
            let start = p.add_state();
            let accept = p.add_state();
            p.set_transition(start, c, d.initial())?;
            for s in d.finals() {
                p.set_transition(s, c, accept)?;
            }
            p.set_final(accept)?;
            let done = rebase_initial(p, start)?;
            return Ok(done.complete()?.minimize());
        }
    }
    Ok(p.complete()?.minimize())
}

// PartialDfa fixes its initial state at construction; rebuild with a new one.
fn rebase_initial(p: crate::dfa::PartialDfa, new_initial: StateId) -> Result<crate::dfa::PartialDfa> {
    p.with_initial(new_initial)
}

/// Checks the one-letter-reachability consequence for subword-free
/// languages: every state that could stand second in a topological quotient
/// order (all of its incoming transitions leave the initial state) is in
/// fact reached only by words of length one.
///
/// Preconditions are reported distinctly: the automaton must be minimal,
/// subword-free, and have quotient complexity at least 4.
pub fn check_second_quotient_letter_reachability(d: &Dfa) -> Result<bool> {
    require_minimal(d)?;
    if !is_subword_free(d) {
        return Err(Error::NotSubwordFree);
    }
    let n = d.state_count();
    if n < 4 {
        return Err(Error::ComplexityTooSmall { kappa: n, minimum: 4 });
    }
    let k = d.alphabet().len();
    let sink = empty_quotient_state(d).expect("subword-free with κ ≥ 4 has an empty quotient");

    let mut sources: Vec<Vec<StateId>> = vec![Vec::new(); n];
    for s in 0..n {
        for sym in 0..k {
            let t = d.delta(s, sym);
            if t != s {
                sources[t].push(s);
            }
        }
    }
    let candidates: Vec<StateId> = (0..n)
        .filter(|&q| {
            q != d.initial()
                && q != sink
                && !sources[q].is_empty()
                && sources[q].iter().all(|&s| s == d.initial())
        })
        .collect();

    // Path lengths from the initial state, capped at n steps (paths off the
    // sink are simple in a finite language's automaton).
    let mut lengths: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut frontier = vec![d.initial()];
    lengths[d.initial()].push(0);
    for depth in 1..=n {
        let mut next = Vec::new();
        for &s in &frontier {
            for sym in 0..k {
                let t = d.delta(s, sym);
                if t == sink {
                    continue;
                }
                if !lengths[t].contains(&depth) {
                    lengths[t].push(depth);
                    next.push(t);
                }
            }
        }
        frontier = next;
    }
    Ok(candidates
        .iter()
        .all(|&q| lengths[q].iter().all(|&len| len == 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::{Alphabet, Word};
    use crate::regex::parse_regex;

    fn words_dfa(sigma: &Alphabet, words: &[&str]) -> Dfa {
        let ws: Vec<Word> = words.iter().map(|w| sigma.word(w).unwrap()).collect();
        Dfa::from_words(sigma.clone(), ws.iter()).unwrap()
    }

    #[test]
    fn prefix_free_cases() {
        let sigma = Alphabet::binary();
        assert!(!is_prefix_free(&words_dfa(&sigma, &["a", "ab"])));
        assert!(is_prefix_free(&words_dfa(&sigma, &["a", "b"])));
        let sigma3 = Alphabet::of_chars("abc").unwrap();
        let k = parse_regex("a(c*(a|b))^2", &sigma3).unwrap().to_dfa(&sigma3);
        assert!(is_prefix_free(&k));
        // a*b is prefix-free too, despite being infinite
        let inf = parse_regex("a*b", &sigma).unwrap().to_dfa(&sigma);
        assert!(is_prefix_free(&inf));
        assert!(!is_suffix_free(&inf));
    }

    #[test]
    fn suffix_free_cases() {
        let sigma = Alphabet::binary();
        assert!(!is_suffix_free(&words_dfa(&sigma, &["ab", "b"])));
        assert!(is_suffix_free(&words_dfa(&sigma, &["ab", "ba"])));
        let k = parse_regex("a((ba*)^2b|a)(b((ba*)^2b|a))*a", &sigma)
            .unwrap()
            .to_dfa(&sigma);
        assert!(is_suffix_free(&k));
    }

    #[test]
    fn factor_free_cases() {
        let sigma = Alphabet::binary();
        assert!(!is_factor_free(&words_dfa(&sigma, &["ab", "aabb"])));
        assert!(is_factor_free(&words_dfa(&sigma, &["ab", "ba"])));
        // a(b*a)^{m-3} with m = 6
        let k = parse_regex("a(b*a)^3", &sigma).unwrap().to_dfa(&sigma);
        assert!(is_factor_free(&k));
        // infinite factor-free language
        let inf = parse_regex("ab*a", &sigma).unwrap().to_dfa(&sigma);
        assert!(is_factor_free(&inf));
    }

    #[test]
    fn subword_free_cases() {
        let sigma = Alphabet::binary();
        assert!(!is_subword_free(&words_dfa(&sigma, &["ab", "aabb"])));
        assert!(is_subword_free(&words_dfa(&sigma, &["ab", "ba"])));
        // the ternary boolean witness is factor-free but not subword-free:
        // aaa and acaa are both members
        let sigma3 = Alphabet::of_chars("abc").unwrap();
        let k = parse_regex("a(c*(a|b))^2", &sigma3).unwrap().to_dfa(&sigma3);
        assert!(is_factor_free(&k));
        assert!(!is_subword_free(&k));
    }

    #[test]
    fn degenerate_languages_are_free() {
        let sigma = Alphabet::binary();
        for d in [Dfa::empty(sigma.clone()), Dfa::epsilon(sigma.clone())] {
            let c = classify(&d);
            assert!(
                c.prefix_free && c.suffix_free && c.bifix_free && c.factor_free && c.subword_free
            );
            assert!(c.finite);
        }
    }

    #[test]
    fn sigma_star_is_not_free_and_not_finite() {
        let sigma = Alphabet::binary();
        let d = parse_regex("(a|b)*", &sigma).unwrap().to_dfa(&sigma);
        let c = classify(&d);
        assert!(!c.prefix_free && !c.suffix_free && !c.factor_free && !c.subword_free);
        assert!(!c.finite);
    }

    #[test]
    fn finiteness_cases() {
        let sigma = Alphabet::binary();
        assert!(!is_finite(&parse_regex("a*", &sigma).unwrap().to_dfa(&sigma)));
        assert!(is_finite(&Dfa::epsilon(sigma.clone())));
        let chain = words_dfa(&Alphabet::binary(), &["aaaa"]);
        assert!(is_finite(&chain));
    }

    #[test]
    fn topological_order_examples() {
        let sigma = Alphabet::binary();
        let eps = Dfa::epsilon(sigma.clone());
        assert_eq!(topological_quotient_order(&eps).unwrap(), vec![0, 1]);

        // unary aa: quotients L, L_a, ε, ∅ in a chain
        let unary = Alphabet::unary();
        let aa = Dfa::from_words(unary, [&Word::from_symbols(vec![0, 0])]).unwrap();
        assert_eq!(topological_quotient_order(&aa).unwrap(), vec![0, 1, 2, 3]);

        let inf = parse_regex("a*", &sigma).unwrap().to_dfa(&sigma);
        assert!(matches!(
            topological_quotient_order(&inf),
            Err(Error::InfiniteLanguage)
        ));
    }

    #[test]
    fn order_only_moves_forward() {
        let sigma = Alphabet::binary();
        let d = words_dfa(&sigma, &["ab", "ba", "bb"]);
        let order = topological_quotient_order(&d).unwrap();
        let pos: Vec<usize> = {
            let mut p = vec![0; order.len()];
            for (i, &s) in order.iter().enumerate() {
                p[s] = i;
            }
            p
        };
        let sink = *order.last().unwrap();
        for s in 0..d.state_count() {
            for sym in d.alphabet().symbols() {
                let t = d.delta(s, sym);
                assert!(t == sink || pos[s] < pos[t]);
            }
        }
    }

    #[test]
    fn adjoin_examples() {
        let sigma = Alphabet::binary();
        let empty = Dfa::empty(sigma.clone());
        let adj = adjoin(&empty, AdjoinMode::Both, "c").unwrap();
        assert_eq!(adj.quotient_complexity(), 1);

        let all = parse_regex("(a|b)*", &sigma).unwrap().to_dfa(&sigma);
        let fenced = adjoin(&all, AdjoinMode::Both, "c").unwrap();
        assert!(is_factor_free(&fenced));
        let sigma3 = fenced.alphabet().clone();
        let direct = parse_regex("c(a|b)*c", &sigma3).unwrap().to_dfa(&sigma3);
        assert!(fenced.equivalent(&direct).unwrap());

        let ab = words_dfa(&sigma, &["ab", "b"]);
        assert!(is_suffix_free(&adjoin(&ab, AdjoinMode::PrefixLetter, "c").unwrap()));
        assert!(is_prefix_free(&adjoin(&ab, AdjoinMode::SuffixLetter, "c").unwrap()));
    }

    #[test]
    fn second_quotient_check_on_unary_chain() {
        let unary = Alphabet::unary();
        let aa = Dfa::from_words(unary, [&Word::from_symbols(vec![0, 0])]).unwrap();
        assert_eq!(aa.state_count(), 4);
        assert!(check_second_quotient_letter_reachability(&aa).unwrap());
    }

    #[test]
    fn second_quotient_check_rejects_bad_inputs() {
        let sigma = Alphabet::binary();
        let not_swf = words_dfa(&sigma, &["ab", "aabb"]);
        assert!(matches!(
            check_second_quotient_letter_reachability(&not_swf),
            Err(Error::NotSubwordFree)
        ));
        let tiny = words_dfa(&sigma, &["a", "b"]);
        assert!(matches!(
            check_second_quotient_letter_reachability(&tiny),
            Err(Error::ComplexityTooSmall { .. })
        ));
    }

    #[test]
    fn structural_consequences_on_free_minimal_automata() {
        let sigma = Alphabet::binary();
        let d = words_dfa(&sigma, &["ab", "ba"]).minimize();
        // suffix-free: uniquely reachable initial state and an empty quotient
        assert_eq!(initial_in_degree(&d), 0);
        assert!(empty_quotient_state(&d).is_some());
        // prefix-free: single final state accepting only ε
        assert_eq!(d.final_count(), 1);
    }
}
