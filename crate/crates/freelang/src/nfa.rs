//! Nondeterministic finite automata (multiple initial states, no
//! ε-transitions) and the subset construction.
//!
//! The constructions used by [`Dfa::product`](crate::Dfa::product),
//! [`Dfa::star`](crate::Dfa::star) and [`Dfa::reverse`](crate::Dfa::reverse)
//! are assembled here, together with the NFA combinators the freeness tests
//! are built from.

use std::collections::HashMap;

use crate::alphabet::{Alphabet, Symbol, Word};
use crate::dfa::{Dfa, StateId};
use crate::error::{Error, Result};
use crate::util::BitSet;

/// An ε-free NFA with a set of initial states.
#[derive(Clone, Debug)]
pub struct Nfa {
    alphabet: Alphabet,
    state_count: usize,
    /// Row-major: `transitions[state * k + symbol]` is a set of successors.
    transitions: Vec<BitSet>,
    initials: BitSet,
    finals: BitSet,
}

impl Nfa {
    pub fn new(alphabet: Alphabet, state_count: usize) -> Self {
        let k = alphabet.len();
        Nfa {
            alphabet,
            state_count,
            transitions: vec![BitSet::new(state_count); state_count * k],
            initials: BitSet::new(state_count),
            finals: BitSet::new(state_count),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn add_transition(&mut self, from: StateId, sym: Symbol, to: StateId) {
        let k = self.alphabet.len();
        debug_assert!(from < self.state_count && to < self.state_count && sym < k);
        self.transitions[from * k + sym].insert(to);
    }

    pub fn add_initial(&mut self, s: StateId) {
        self.initials.insert(s);
    }

    pub fn add_final(&mut self, s: StateId) {
        self.finals.insert(s);
    }

    pub fn is_initial(&self, s: StateId) -> bool {
        self.initials.contains(s)
    }

    pub fn is_final(&self, s: StateId) -> bool {
        self.finals.contains(s)
    }

    fn successors(&self, s: StateId, sym: Symbol) -> &BitSet {
        &self.transitions[s * self.alphabet.len() + sym]
    }

    /// Views a DFA as an NFA.
    pub fn from_dfa(d: &Dfa) -> Nfa {
        let mut n = Nfa::new(d.alphabet().clone(), d.state_count());
        for s in 0..d.state_count() {
            for sym in d.alphabet().symbols() {
                n.add_transition(s, sym, d.delta(s, sym));
            }
            if d.is_final(s) {
                n.add_final(s);
            }
        }
        n.add_initial(d.initial());
        n
    }

    /// NFA for the reversed language: all transitions reversed, the old
    /// final states become the initial set, the old initial state the only
    /// final one.
    pub fn reverse_of_dfa(d: &Dfa) -> Nfa {
        let mut n = Nfa::new(d.alphabet().clone(), d.state_count());
        for s in 0..d.state_count() {
            for sym in d.alphabet().symbols() {
                n.add_transition(d.delta(s, sym), sym, s);
            }
            if d.is_final(s) {
                n.add_initial(s);
            }
        }
        n.add_final(d.initial());
        n
    }

    /// NFA for `L(d)*`: a fresh initial (and final) state copies the old
    /// initial state's behavior, and every transition entering a final state
    /// also branches back to the old initial state.
    pub fn star_of_dfa(d: &Dfa) -> Nfa {
        let old = d.state_count();
        let start = old;
        let mut n = Nfa::new(d.alphabet().clone(), old + 1);
        for s in 0..old {
            for sym in d.alphabet().symbols() {
                let t = d.delta(s, sym);
                n.add_transition(s, sym, t);
                if d.is_final(t) {
                    n.add_transition(s, sym, d.initial());
                }
            }
            if d.is_final(s) {
                n.add_final(s);
            }
        }
        for sym in d.alphabet().symbols() {
            let t = d.delta(d.initial(), sym);
            n.add_transition(start, sym, t);
            if d.is_final(t) {
                n.add_transition(start, sym, d.initial());
            }
        }
        n.add_initial(start);
        n.add_final(start);
        n
    }

    /// ε-free concatenation: every transition entering a final state of
    /// `left` also branches to the initial states of `right`.
    pub fn concat(left: &Nfa, right: &Nfa) -> Result<Nfa> {
        if left.alphabet != right.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let k = left.alphabet.len();
        let off = left.state_count;
        let mut n = Nfa::new(left.alphabet.clone(), off + right.state_count);
        let right_initials: Vec<StateId> = right.initials.iter().collect();
        for s in 0..left.state_count {
            for sym in 0..k {
                for t in left.successors(s, sym).iter() {
                    n.add_transition(s, sym, t);
                    if left.finals.contains(t) {
                        for &ri in &right_initials {
                            n.add_transition(s, sym, off + ri);
                        }
                    }
                }
            }
        }
        for s in 0..right.state_count {
            for sym in 0..k {
                for t in right.successors(s, sym).iter() {
                    n.add_transition(off + s, sym, off + t);
                }
            }
        }
        let left_accepts_epsilon = left.initials.intersects(&left.finals);
        let right_accepts_epsilon = right.initials.intersects(&right.finals);
        for s in left.initials.iter() {
            n.add_initial(s);
        }
        if left_accepts_epsilon {
            for s in right.initials.iter() {
                n.add_initial(off + s);
            }
        }
        for s in right.finals.iter() {
            n.add_final(off + s);
        }
        if right_accepts_epsilon {
            for s in left.finals.iter() {
                n.add_final(s);
            }
        }
        Ok(n)
    }

    /// Disjoint union of two NFAs (language union).
    pub fn union(a: &Nfa, b: &Nfa) -> Result<Nfa> {
        if a.alphabet != b.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let k = a.alphabet.len();
        let off = a.state_count;
        let mut n = Nfa::new(a.alphabet.clone(), off + b.state_count);
        for s in 0..a.state_count {
            for sym in 0..k {
                for t in a.successors(s, sym).iter() {
                    n.add_transition(s, sym, t);
                }
            }
        }
        for s in 0..b.state_count {
            for sym in 0..k {
                for t in b.successors(s, sym).iter() {
                    n.add_transition(off + s, sym, off + t);
                }
            }
        }
        for s in a.initials.iter() {
            n.add_initial(s);
        }
        for s in b.initials.iter() {
            n.add_initial(off + s);
        }
        for s in a.finals.iter() {
            n.add_final(s);
        }
        for s in b.finals.iter() {
            n.add_final(off + s);
        }
        Ok(n)
    }

    /// NFA for `Σ⁺` (all non-empty words).
    pub fn sigma_plus(alphabet: Alphabet) -> Nfa {
        let mut n = Nfa::new(alphabet, 2);
        for sym in 0..n.alphabet.len() {
            n.add_transition(0, sym, 1);
            n.add_transition(1, sym, 1);
        }
        n.add_initial(0);
        n.add_final(1);
        n
    }

    /// NFA for `Σ*`.
    pub fn sigma_star(alphabet: Alphabet) -> Nfa {
        let mut n = Nfa::new(alphabet, 1);
        for sym in 0..n.alphabet.len() {
            n.add_transition(0, sym, 0);
        }
        n.add_initial(0);
        n.add_final(0);
        n
    }

    /// Subset construction over reachable subsets only. The empty subset,
    /// when reachable, acts as the sink, so the result is complete by
    /// construction. The result is not minimized.
    pub fn determinize(&self) -> Dfa {
        let k = self.alphabet.len();
        let mut index: HashMap<BitSet, usize> = HashMap::new();
        let mut subsets: Vec<BitSet> = Vec::new();
        let mut transitions: Vec<StateId> = Vec::new();
        index.insert(self.initials.clone(), 0);
        subsets.push(self.initials.clone());
        let mut head = 0;
        while head < subsets.len() {
            for sym in 0..k {
                let mut next = BitSet::new(self.state_count);
                for s in subsets[head].iter() {
                    next.union_with(self.successors(s, sym));
                }
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = subsets.len();
                        index.insert(next.clone(), id);
                        subsets.push(next);
                        id
                    }
                };
                transitions.push(id);
            }
            head += 1;
        }
        let finals: Vec<StateId> = subsets
            .iter()
            .enumerate()
            .filter(|(_, sub)| sub.intersects(&self.finals))
            .map(|(i, _)| i)
            .collect();
        Dfa::new(self.alphabet.clone(), subsets.len(), transitions, 0, finals)
            .expect("subset construction produces a valid complete DFA")
    }

    /// Word membership by direct subset simulation.
    pub fn accepts(&self, w: &Word) -> Result<bool> {
        let k = self.alphabet.len();
        let mut current = self.initials.clone();
        for &sym in w.symbols() {
            if sym >= k {
                return Err(Error::SymbolOutOfRange { symbol: sym, alphabet_size: k });
            }
            let mut next = BitSet::new(self.state_count);
            for s in current.iter() {
                next.union_with(self.successors(s, sym));
            }
            current = next;
        }
        Ok(current.intersects(&self.finals))
    }

    /// True iff `L(self) ∩ L(d)` is empty, by reachability over pairs.
    pub fn intersection_empty_with(&self, d: &Dfa) -> Result<bool> {
        if self.alphabet != *d.alphabet() {
            return Err(Error::AlphabetMismatch);
        }
        let k = self.alphabet.len();
        let cols = d.state_count();
        let mut seen = vec![false; self.state_count * cols];
        let mut stack: Vec<(StateId, StateId)> = Vec::new();
        for s in self.initials.iter() {
            if !seen[s * cols + d.initial()] {
                seen[s * cols + d.initial()] = true;
                stack.push((s, d.initial()));
            }
        }
        while let Some((p, q)) = stack.pop() {
            if self.finals.contains(p) && d.is_final(q) {
                return Ok(false);
            }
            for sym in 0..k {
                let qn = d.delta(q, sym);
                for pn in self.successors(p, sym).iter() {
                    if !seen[pn * cols + qn] {
                        seen[pn * cols + qn] = true;
                        stack.push((pn, qn));
                    }
                }
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinize_an_already_deterministic_nfa() {
        // single-initial deterministic NFA over {a,b} accepting a(a|b)*
        let sigma = Alphabet::binary();
        let mut n = Nfa::new(sigma, 2);
        n.add_initial(0);
        n.add_final(1);
        n.add_transition(0, 0, 1);
        n.add_transition(1, 0, 1);
        n.add_transition(1, 1, 1);
        let d = n.determinize();
        // subsets: {0}, {1}, ∅ — isomorphic to the completed original
        assert_eq!(d.minimize().state_count(), 3);
        assert!(d.accepts(&Word::from_symbols(vec![0, 1])).unwrap());
        assert!(!d.accepts(&Word::from_symbols(vec![1])).unwrap());
    }

    #[test]
    fn reversed_nfa_of_aa_has_four_reachable_subsets() {
        // hand subset construction: {2} -a-> {1} -a-> {0} -a-> ∅
        let sigma = Alphabet::unary();
        let w = Word::from_symbols(vec![0, 0]);
        let d = Dfa::from_words(sigma, [&w]).unwrap();
        assert_eq!(d.state_count(), 4);
        let r = Nfa::reverse_of_dfa(&d).determinize();
        assert_eq!(r.state_count(), 4);
    }

    #[test]
    fn two_initials_accepting_a_or_b() {
        let sigma = Alphabet::binary();
        let mut n = Nfa::new(sigma, 4);
        n.add_initial(0);
        n.add_initial(1);
        n.add_final(2);
        n.add_final(3);
        n.add_transition(0, 0, 2); // a from first initial
        n.add_transition(1, 1, 3); // b from second initial
        let d = n.determinize().minimize();
        // quotients of {a, b}: the language, {ε}, ∅
        assert_eq!(d.state_count(), 3);
    }

    #[test]
    fn concat_handles_epsilon_on_both_sides() {
        let sigma = Alphabet::binary();
        let eps = Nfa::from_dfa(&Dfa::epsilon(sigma.clone()));
        let a = {
            let d = Dfa::from_words(sigma.clone(), [&sigma.word("a").unwrap()]).unwrap();
            Nfa::from_dfa(&d)
        };
        let left = Nfa::concat(&eps, &a).unwrap().determinize().minimize();
        let right = Nfa::concat(&a, &eps).unwrap().determinize().minimize();
        assert_eq!(left, right);
        assert!(left.accepts(&sigma.word("a").unwrap()).unwrap());
        assert_eq!(left.enumerate_language(3).len(), 1);
    }

    #[test]
    fn intersection_emptiness_pair_walk() {
        let sigma = Alphabet::binary();
        let ab = Dfa::from_words(sigma.clone(), [&sigma.word("ab").unwrap()]).unwrap();
        let plus = Nfa::sigma_plus(sigma.clone());
        // Σ⁺ ∩ {ab} is non-empty; Σ⁺ ∩ {ε} is empty
        assert!(!plus.intersection_empty_with(&ab).unwrap());
        assert!(plus
            .intersection_empty_with(&Dfa::epsilon(sigma))
            .unwrap());
    }
}
