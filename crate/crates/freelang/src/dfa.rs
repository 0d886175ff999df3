//! Complete deterministic finite automata.
//!
//! Every [`Dfa`] in this crate is *complete*: the transition function is
//! total. That convention makes the number of states of the minimal
//! automaton equal to the number of distinct left quotients of the language,
//! including the empty quotient (the sink) when it exists. All operations
//! return complete automata.
//!
//! [`Dfa::minimize`] produces a canonical form: states are renumbered in
//! breadth-first discovery order from the initial state, exploring symbols
//! in alphabet order. Two automata over the same alphabet accept the same
//! language if and only if their canonical forms are structurally equal.

use std::collections::HashMap;

use crate::alphabet::{Alphabet, Symbol, Word};
use crate::error::{Error, Result};
use crate::nfa::Nfa;

/// State index in a [`Dfa`].
pub type StateId = usize;

/// A boolean set operation on two languages.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoolOp {
    Union,
    Intersection,
    Difference,
    SymmetricDifference,
}

impl BoolOp {
    pub const ALL: [BoolOp; 4] = [
        BoolOp::Union,
        BoolOp::Intersection,
        BoolOp::Difference,
        BoolOp::SymmetricDifference,
    ];

    pub fn apply(self, left: bool, right: bool) -> bool {
        match self {
            BoolOp::Union => left || right,
            BoolOp::Intersection => left && right,
            BoolOp::Difference => left && !right,
            BoolOp::SymmetricDifference => left != right,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BoolOp::Union => "union",
            BoolOp::Intersection => "intersection",
            BoolOp::Difference => "difference",
            BoolOp::SymmetricDifference => "symmetric_difference",
        }
    }
}

/// A complete deterministic finite automaton.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Dfa {
    alphabet: Alphabet,
    state_count: usize,
    /// Row-major: `transitions[state * k + symbol]`.
    transitions: Vec<StateId>,
    initial: StateId,
    finals: Vec<bool>,
}

impl Dfa {
    /// Builds a complete DFA, validating totality and index ranges.
    /// `transitions` is row-major with one target per (state, symbol) pair.
    pub fn new(
        alphabet: Alphabet,
        state_count: usize,
        transitions: Vec<StateId>,
        initial: StateId,
        finals: impl IntoIterator<Item = StateId>,
    ) -> Result<Self> {
        let k = alphabet.len();
        if state_count == 0 {
            return Err(Error::InvalidAutomaton("a complete DFA needs at least one state".into()));
        }
        if transitions.len() != state_count * k {
            return Err(Error::InvalidAutomaton(format!(
                "transition table has {} entries, expected {} ({} states x {} symbols)",
                transitions.len(),
                state_count * k,
                state_count,
                k
            )));
        }
        if let Some(&bad) = transitions.iter().find(|&&t| t >= state_count) {
            return Err(Error::InvalidAutomaton(format!(
                "transition target {bad} out of range (state count {state_count})"
            )));
        }
        if initial >= state_count {
            return Err(Error::InvalidAutomaton(format!(
                "initial state {initial} out of range (state count {state_count})"
            )));
        }
        let mut final_flags = vec![false; state_count];
        for f in finals {
            if f >= state_count {
                return Err(Error::InvalidAutomaton(format!(
                    "final state {f} out of range (state count {state_count})"
                )));
            }
            final_flags[f] = true;
        }
        Ok(Dfa {
            alphabet,
            state_count,
            transitions,
            initial,
            finals: final_flags,
        })
    }

    /// The one-state DFA of the empty language.
    pub fn empty(alphabet: Alphabet) -> Dfa {
        let k = alphabet.len();
        Dfa {
            alphabet,
            state_count: 1,
            transitions: vec![0; k],
            initial: 0,
            finals: vec![false],
        }
    }

    /// The two-state DFA of `{ε}`.
    pub fn epsilon(alphabet: Alphabet) -> Dfa {
        let k = alphabet.len();
        let mut transitions = Vec::with_capacity(2 * k);
        transitions.extend(std::iter::repeat_n(1, k));
        transitions.extend(std::iter::repeat_n(1, k));
        Dfa {
            alphabet,
            state_count: 2,
            transitions,
            initial: 0,
            finals: vec![true, false],
        }
    }

    /// Minimal DFA of a finite set of words (trie, completion, minimization).
    pub fn from_words<'a>(alphabet: Alphabet, words: impl IntoIterator<Item = &'a Word>) -> Result<Dfa> {
        let k = alphabet.len();
        let mut partial = PartialDfa::new(alphabet, 1, 0)?;
        let mut nodes: Vec<Vec<Option<StateId>>> = vec![vec![None; k]];
        for word in words {
            let mut at = 0usize;
            for &sym in word.symbols() {
                if sym >= k {
                    return Err(Error::SymbolOutOfRange { symbol: sym, alphabet_size: k });
                }
                at = match nodes[at][sym] {
                    Some(next) => next,
                    None => {
                        let next = nodes.len();
                        nodes.push(vec![None; k]);
                        nodes[at][sym] = Some(next);
                        partial.add_state();
                        partial.set_transition(at, sym, next)?;
                        next
                    }
                };
            }
            partial.set_final(at)?;
        }
        Ok(partial.complete()?.minimize())
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn is_final(&self, s: StateId) -> bool {
        self.finals[s]
    }

    pub fn finals(&self) -> impl Iterator<Item = StateId> + '_ {
        (0..self.state_count).filter(|&s| self.finals[s])
    }

    pub fn final_count(&self) -> usize {
        self.finals.iter().filter(|&&f| f).count()
    }

    /// The transition target for `(state, symbol)`.
    pub fn delta(&self, s: StateId, sym: Symbol) -> StateId {
        self.transitions[s * self.alphabet.len() + sym]
    }

    /// Runs the automaton on a word from a given state.
    pub fn run_from(&self, from: StateId, w: &Word) -> Result<StateId> {
        let k = self.alphabet.len();
        let mut at = from;
        for &sym in w.symbols() {
            if sym >= k {
                return Err(Error::SymbolOutOfRange { symbol: sym, alphabet_size: k });
            }
            at = self.delta(at, sym);
        }
        Ok(at)
    }

    /// Word membership.
    pub fn accepts(&self, w: &Word) -> Result<bool> {
        Ok(self.finals[self.run_from(self.initial, w)?])
    }

    /// States in breadth-first discovery order from the initial state,
    /// exploring symbols in alphabet order.
    pub(crate) fn reachable_in_bfs_order(&self) -> Vec<StateId> {
        let k = self.alphabet.len();
        let mut seen = vec![false; self.state_count];
        let mut order = Vec::with_capacity(self.state_count);
        seen[self.initial] = true;
        order.push(self.initial);
        let mut head = 0;
        while head < order.len() {
            let s = order[head];
            head += 1;
            for sym in 0..k {
                let t = self.delta(s, sym);
                if !seen[t] {
                    seen[t] = true;
                    order.push(t);
                }
            }
        }
        order
    }

    /// For each state, whether some final state is reachable from it.
    pub(crate) fn co_reachable(&self) -> Vec<bool> {
        let k = self.alphabet.len();
        let mut preds: Vec<Vec<StateId>> = vec![Vec::new(); self.state_count];
        for s in 0..self.state_count {
            for sym in 0..k {
                preds[self.delta(s, sym)].push(s);
            }
        }
        let mut live = vec![false; self.state_count];
        let mut queue: Vec<StateId> = self.finals().collect();
        for &f in &queue {
            live[f] = true;
        }
        while let Some(s) = queue.pop() {
            for &p in &preds[s] {
                if !live[p] {
                    live[p] = true;
                    queue.push(p);
                }
            }
        }
        live
    }

    /// The canonical quotient automaton: reachable states only, no two
    /// states equivalent, states renumbered in BFS order. Equal languages
    /// yield structurally identical results.
    pub fn minimize(&self) -> Dfa {
        let k = self.alphabet.len();
        let order = self.reachable_in_bfs_order();
        let m = order.len();
        let mut pos = vec![usize::MAX; self.state_count];
        for (i, &s) in order.iter().enumerate() {
            pos[s] = i;
        }

        // Moore partition refinement over the reachable part. Class ids are
        // assigned by first occurrence in BFS order, so the outcome does not
        // depend on hash iteration order.
        let mut label: Vec<u32> = Vec::with_capacity(m);
        {
            let mut ids: HashMap<bool, u32> = HashMap::new();
            for &s in &order {
                let next = ids.len() as u32;
                label.push(*ids.entry(self.finals[s]).or_insert(next));
            }
        }
        let mut class_count = label.iter().max().map_or(0, |&x| x as usize + 1);
        let mut sig = vec![0u32; m * (k + 1)];
        loop {
            for (i, &s) in order.iter().enumerate() {
                let row = &mut sig[i * (k + 1)..(i + 1) * (k + 1)];
                row[0] = label[i];
                for sym in 0..k {
                    row[1 + sym] = label[pos[self.delta(s, sym)]];
                }
            }
            let mut ids: HashMap<&[u32], u32> = HashMap::new();
            let mut next_label = vec![0u32; m];
            for i in 0..m {
                let row = &sig[i * (k + 1)..(i + 1) * (k + 1)];
                let next = ids.len() as u32;
                next_label[i] = *ids.entry(row).or_insert(next);
            }
            let new_count = ids.len();
            label = next_label;
            if new_count == class_count {
                break;
            }
            class_count = new_count;
        }

        // Canonical renumbering: BFS over classes from the initial class.
        let mut rep = vec![usize::MAX; class_count];
        for (i, &s) in order.iter().enumerate() {
            let c = label[i] as usize;
            if rep[c] == usize::MAX {
                rep[c] = s;
            }
        }
        let mut renum = vec![usize::MAX; class_count];
        let mut bfs: Vec<usize> = Vec::with_capacity(class_count);
        let initial_class = label[0] as usize;
        renum[initial_class] = 0;
        bfs.push(initial_class);
        let mut head = 0;
        while head < bfs.len() {
            let c = bfs[head];
            head += 1;
            for sym in 0..k {
                let t = label[pos[self.delta(rep[c], sym)]] as usize;
                if renum[t] == usize::MAX {
                    renum[t] = bfs.len();
                    bfs.push(t);
                }
            }
        }
        debug_assert_eq!(bfs.len(), class_count);

        let mut transitions = vec![0usize; class_count * k];
        let mut finals = vec![false; class_count];
        for &c in &bfs {
            let nc = renum[c];
            finals[nc] = self.finals[rep[c]];
            for sym in 0..k {
                transitions[nc * k + sym] = renum[label[pos[self.delta(rep[c], sym)]] as usize];
            }
        }
        Dfa {
            alphabet: self.alphabet.clone(),
            state_count: class_count,
            transitions,
            initial: 0,
            finals,
        }
    }

    /// Quotient complexity: the number of distinct left quotients of the
    /// accepted language, i.e. the state count of the minimal complete DFA.
    pub fn quotient_complexity(&self) -> usize {
        self.minimize().state_count
    }

    /// Cross-product construction for a boolean operation, minimized.
    pub fn boolean_combine(&self, other: &Dfa, op: BoolOp) -> Result<Dfa> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let k = self.alphabet.len();
        let mut index: HashMap<(StateId, StateId), StateId> = HashMap::new();
        let mut pairs: Vec<(StateId, StateId)> = Vec::new();
        let mut transitions: Vec<StateId> = Vec::new();
        let start = (self.initial, other.initial);
        index.insert(start, 0);
        pairs.push(start);
        let mut head = 0;
        while head < pairs.len() {
            let (p, q) = pairs[head];
            head += 1;
            for sym in 0..k {
                let t = (self.delta(p, sym), other.delta(q, sym));
                let next = pairs.len();
                let id = *index.entry(t).or_insert_with(|| {
                    pairs.push(t);
                    next
                });
                transitions.push(id);
            }
        }
        let finals = pairs
            .iter()
            .enumerate()
            .filter(|(_, &(p, q))| op.apply(self.finals[p], other.finals[q]))
            .map(|(i, _)| i);
        let product = Dfa::new(
            self.alphabet.clone(),
            pairs.len(),
            transitions,
            0,
            finals,
        )?;
        Ok(product.minimize())
    }

    /// Concatenation `L(self) · L(other)`, via NFA gluing, subset
    /// construction, and minimization.
    pub fn product(&self, other: &Dfa) -> Result<Dfa> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        let glued = Nfa::concat(&Nfa::from_dfa(self), &Nfa::from_dfa(other))?;
        Ok(glued.determinize().minimize())
    }

    /// Kleene star, via the standard NFA construction; `ε` always belongs
    /// to the result.
    pub fn star(&self) -> Dfa {
        Nfa::star_of_dfa(self).determinize().minimize()
    }

    /// The reversed language: reverse all transitions, swap initial and
    /// final states, determinize, minimize.
    pub fn reverse(&self) -> Dfa {
        Nfa::reverse_of_dfa(self).determinize().minimize()
    }

    /// Language equality via canonical minimal forms.
    pub fn equivalent(&self, other: &Dfa) -> Result<bool> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch);
        }
        Ok(self.minimize() == other.minimize())
    }

    /// All accepted words of length at most `max_len`, in length-then-lex
    /// order (symbol order of the alphabet).
    pub fn enumerate_language(&self, max_len: usize) -> Vec<Word> {
        let k = self.alphabet.len();
        // Distance from each state to the nearest final state, for pruning.
        let mut dist = vec![usize::MAX; self.state_count];
        {
            let mut preds: Vec<Vec<StateId>> = vec![Vec::new(); self.state_count];
            for s in 0..self.state_count {
                for sym in 0..k {
                    preds[self.delta(s, sym)].push(s);
                }
            }
            let mut queue: std::collections::VecDeque<StateId> = self.finals().collect();
            for &f in &queue {
                dist[f] = 0;
            }
            while let Some(s) = queue.pop_front() {
                for &p in &preds[s] {
                    if dist[p] == usize::MAX {
                        dist[p] = dist[s] + 1;
                        queue.push_back(p);
                    }
                }
            }
        }
        let mut out = Vec::new();
        let mut buf = Word::epsilon();
        for len in 0..=max_len {
            self.collect_words_of_len(self.initial, len, &dist, &mut buf, &mut out);
        }
        out
    }

    fn collect_words_of_len(
        &self,
        state: StateId,
        remaining: usize,
        dist: &[usize],
        buf: &mut Word,
        out: &mut Vec<Word>,
    ) {
        if dist[state] == usize::MAX || dist[state] > remaining {
            return;
        }
        if remaining == 0 {
            if self.finals[state] {
                out.push(buf.clone());
            }
            return;
        }
        for sym in 0..self.alphabet.len() {
            buf.push(sym);
            self.collect_words_of_len(self.delta(state, sym), remaining - 1, dist, buf, out);
            buf.pop();
        }
    }

    /// The language restricted to words over a sub-alphabet: keeps the given
    /// symbols (in the order given), drops all transitions on the others,
    /// and minimizes. The result is `L ∩ keep*` over the smaller alphabet.
    pub fn restrict_alphabet(&self, keep: &[Symbol]) -> Result<Dfa> {
        let k = self.alphabet.len();
        for &sym in keep {
            if sym >= k {
                return Err(Error::SymbolOutOfRange { symbol: sym, alphabet_size: k });
            }
        }
        let names: Vec<String> = keep.iter().map(|&s| self.alphabet.name(s).to_string()).collect();
        let sub = Alphabet::new(names)?;
        let mut transitions = Vec::with_capacity(self.state_count * keep.len());
        for s in 0..self.state_count {
            for &sym in keep {
                transitions.push(self.delta(s, sym));
            }
        }
        let finals: Vec<StateId> = self.finals().collect();
        Ok(Dfa::new(sub, self.state_count, transitions, self.initial, finals)?.minimize())
    }
}

/// A DFA under construction whose transition function may be partial.
/// [`PartialDfa::complete`] adds a sink for the missing transitions.
#[derive(Clone, Debug)]
pub struct PartialDfa {
    alphabet: Alphabet,
    state_count: usize,
    transitions: Vec<Option<StateId>>,
    initial: StateId,
    finals: Vec<bool>,
}

impl PartialDfa {
    pub fn new(alphabet: Alphabet, state_count: usize, initial: StateId) -> Result<Self> {
        if state_count == 0 {
            return Err(Error::InvalidAutomaton("need at least one state".into()));
        }
        if initial >= state_count {
            return Err(Error::InvalidAutomaton(format!(
                "initial state {initial} out of range"
            )));
        }
        let k = alphabet.len();
        Ok(PartialDfa {
            alphabet,
            state_count,
            transitions: vec![None; state_count * k],
            initial,
            finals: vec![false; state_count],
        })
    }

    pub fn add_state(&mut self) -> StateId {
        self.state_count += 1;
        self.transitions
            .extend(std::iter::repeat_n(None, self.alphabet.len()));
        self.finals.push(false);
        self.state_count - 1
    }

    pub fn set_transition(&mut self, from: StateId, sym: Symbol, to: StateId) -> Result<()> {
        let k = self.alphabet.len();
        if from >= self.state_count || to >= self.state_count {
            return Err(Error::InvalidAutomaton(format!(
                "transition {from} -> {to} out of range"
            )));
        }
        if sym >= k {
            return Err(Error::SymbolOutOfRange { symbol: sym, alphabet_size: k });
        }
        self.transitions[from * k + sym] = Some(to);
        Ok(())
    }

    pub fn set_final(&mut self, s: StateId) -> Result<()> {
        if s >= self.state_count {
            return Err(Error::InvalidAutomaton(format!("final state {s} out of range")));
        }
        self.finals[s] = true;
        Ok(())
    }

    /// Replaces the initial state, e.g. after appending a fresh start state.
    pub fn with_initial(mut self, initial: StateId) -> Result<Self> {
        if initial >= self.state_count {
            return Err(Error::InvalidAutomaton(format!(
                "initial state {initial} out of range"
            )));
        }
        self.initial = initial;
        Ok(self)
    }

    /// Completes the transition function. If any transition is missing, a
    /// fresh non-final sink state is appended and all missing transitions
    /// (and the sink's own) point to it; the language is unchanged. An
    /// already-total table is returned as-is.
    pub fn complete(self) -> Result<Dfa> {
        let k = self.alphabet.len();
        let needs_sink = self.transitions.iter().any(Option::is_none);
        let state_count = self.state_count + usize::from(needs_sink);
        let sink = self.state_count;
        let mut transitions = Vec::with_capacity(state_count * k);
        for t in &self.transitions {
            transitions.push(t.unwrap_or(sink));
        }
        if needs_sink {
            transitions.extend(std::iter::repeat_n(sink, k));
        }
        let finals = self
            .finals
            .iter()
            .enumerate()
            .filter(|(_, &f)| f)
            .map(|(i, _)| i)
            .collect::<Vec<_>>();
        Dfa::new(self.alphabet, state_count, transitions, self.initial, finals)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dfa_of_single_a() -> Dfa {
        // {a} over {a}: 0 -a-> 1 (final), 1 -a-> 2, 2 sink
        Dfa::new(Alphabet::unary(), 3, vec![1, 2, 2], 0, [1]).unwrap()
    }

    #[test]
    fn accepts_basics() {
        let d = dfa_of_single_a();
        let sigma = d.alphabet().clone();
        assert!(!d.accepts(&Word::epsilon()).unwrap());
        assert!(d.accepts(&sigma.word("a").unwrap()).unwrap());
        assert!(!d.accepts(&sigma.word("aa").unwrap()).unwrap());
        // a symbol outside the alphabet is an input error
        assert!(d.accepts(&Word::from_symbols(vec![7])).is_err());
    }

    #[test]
    fn complete_is_identity_on_total_tables() {
        let sigma = Alphabet::binary();
        let mut p = PartialDfa::new(sigma, 1, 0).unwrap();
        p.set_transition(0, 0, 0).unwrap();
        p.set_transition(0, 1, 0).unwrap();
        p.set_final(0).unwrap();
        let d = p.complete().unwrap();
        assert_eq!(d.state_count(), 1);
    }

    #[test]
    fn complete_adds_a_sink_for_epsilon_language() {
        // one state, no transitions, initial final -> 2-state DFA of {ε}
        let mut p = PartialDfa::new(Alphabet::binary(), 1, 0).unwrap();
        p.set_final(0).unwrap();
        let d = p.complete().unwrap();
        assert_eq!(d.state_count(), 2);
        assert!(d.equivalent(&Dfa::epsilon(Alphabet::binary())).unwrap());
    }

    #[test]
    fn complete_then_kappa_of_ab() {
        // incomplete 3-state acceptor of {ab}; quotient count of {ab} is 4
        let sigma = Alphabet::binary();
        let mut p = PartialDfa::new(sigma.clone(), 3, 0).unwrap();
        p.set_transition(0, 0, 1).unwrap();
        p.set_transition(1, 1, 2).unwrap();
        p.set_final(2).unwrap();
        let d = p.complete().unwrap();
        assert_eq!(d.state_count(), 4);
        assert_eq!(d.quotient_complexity(), 4);
        let brute = crate::oracle::finite_language_kappa(&sigma, &[sigma.word("ab").unwrap()]);
        assert_eq!(brute, 4);
    }

    #[test]
    fn minimize_is_idempotent_and_collapses_redundancy() {
        // empty language padded with 5 redundant states
        let sigma = Alphabet::binary();
        let d = Dfa::new(
            sigma,
            6,
            vec![1, 2, 3, 4, 5, 0, 1, 2, 3, 4, 5, 0],
            0,
            Vec::<usize>::new(),
        )
        .unwrap();
        let m = d.minimize();
        assert_eq!(m.state_count(), 1);
        assert_eq!(m.minimize(), m);
    }

    #[test]
    fn unary_chain_is_already_minimal() {
        // a^{n-2} with n = 6: chain of 4 a's... states 0..=4 accept a^4? No:
        // a^{n-2} = a^4, minimal complete DFA has 6 states (chain + sink).
        let sigma = Alphabet::unary();
        let w = Word::from_symbols(vec![0, 0, 0, 0]);
        let d = Dfa::from_words(sigma, [&w]).unwrap();
        assert_eq!(d.state_count(), 6);
        assert_eq!(d.minimize().state_count(), 6);
    }

    #[test]
    fn kappa_of_simple_languages() {
        let sigma = Alphabet::binary();
        assert_eq!(Dfa::empty(sigma.clone()).quotient_complexity(), 1);
        assert_eq!(Dfa::epsilon(sigma.clone()).quotient_complexity(), 2);
        // {a} over {a,b}: quotients are {a}, {ε}, ∅
        let d = Dfa::from_words(sigma.clone(), [&sigma.word("a").unwrap()]).unwrap();
        assert_eq!(d.quotient_complexity(), 3);
        assert_eq!(
            crate::oracle::finite_language_kappa(&sigma, &[sigma.word("a").unwrap()]),
            3
        );
    }

    #[test]
    fn boolean_combine_difference_with_self_is_empty() {
        let sigma = Alphabet::binary();
        let d = Dfa::from_words(sigma.clone(), [&sigma.word("ab").unwrap()]).unwrap();
        let e = d.boolean_combine(&d, BoolOp::Difference).unwrap();
        assert_eq!(e.state_count(), 1);
        assert!(e.equivalent(&Dfa::empty(sigma)).unwrap());
    }

    #[test]
    fn boolean_combine_rejects_alphabet_mismatch() {
        let d1 = Dfa::empty(Alphabet::binary());
        let d2 = Dfa::empty(Alphabet::unary());
        assert!(matches!(
            d1.boolean_combine(&d2, BoolOp::Union),
            Err(Error::AlphabetMismatch)
        ));
    }

    #[test]
    fn product_with_epsilon_is_identity() {
        let sigma = Alphabet::binary();
        let l = Dfa::from_words(
            sigma.clone(),
            [&sigma.word("ab").unwrap(), &sigma.word("ba").unwrap()],
        )
        .unwrap();
        let e = Dfa::epsilon(sigma.clone());
        assert!(e.product(&l).unwrap().equivalent(&l).unwrap());
        assert!(l.product(&e).unwrap().equivalent(&l).unwrap());
    }

    #[test]
    fn unary_product_complexity() {
        // a^2 · a^2 = a^4: 4 + 4 - 2 = 6 quotients; a^3 · a^4 -> 9
        let sigma = Alphabet::unary();
        let a = |k: usize| {
            let w = Word::from_symbols(vec![0; k]);
            Dfa::from_words(sigma.clone(), [&w]).unwrap()
        };
        assert_eq!(a(2).product(&a(2)).unwrap().quotient_complexity(), 6);
        assert_eq!(a(3).product(&a(4)).unwrap().quotient_complexity(), 9);
    }

    #[test]
    fn star_of_empty_is_epsilon() {
        let sigma = Alphabet::binary();
        let s = Dfa::empty(sigma.clone()).star();
        assert_eq!(s.quotient_complexity(), 2);
        assert!(s.equivalent(&Dfa::epsilon(sigma)).unwrap());
    }

    #[test]
    fn star_of_unary_word_over_binary_alphabet() {
        // (a^{n-2})* over {a,b} has n-1 quotients
        let sigma = Alphabet::binary();
        for n in [5usize, 7] {
            let w = Word::from_symbols(vec![0; n - 2]);
            let d = Dfa::from_words(sigma.clone(), [&w]).unwrap();
            assert_eq!(d.quotient_complexity(), n);
            assert_eq!(d.star().quotient_complexity(), n - 1);
        }
    }

    #[test]
    fn reverse_of_aa_meets_small_reversal_bound() {
        let sigma = Alphabet::unary();
        let w = Word::from_symbols(vec![0, 0]);
        let d = Dfa::from_words(sigma, [&w]).unwrap();
        assert_eq!(d.quotient_complexity(), 4);
        assert_eq!(d.reverse().quotient_complexity(), 4);
    }

    #[test]
    fn reverse_twice_preserves_language() {
        let sigma = Alphabet::binary();
        let d = Dfa::from_words(
            sigma.clone(),
            [&sigma.word("ab").unwrap(), &sigma.word("bba").unwrap()],
        )
        .unwrap();
        assert!(d.reverse().reverse().equivalent(&d).unwrap());
    }

    #[test]
    fn enumerate_language_is_length_lex() {
        let sigma = Alphabet::binary();
        assert!(Dfa::empty(sigma.clone()).enumerate_language(5).is_empty());
        let d = Dfa::from_words(
            sigma.clone(),
            [&sigma.word("a").unwrap(), &sigma.word("b").unwrap()],
        )
        .unwrap();
        let words = d.enumerate_language(1);
        assert_eq!(words, vec![sigma.word("a").unwrap(), sigma.word("b").unwrap()]);
    }

    #[test]
    fn restrict_alphabet_projects_language() {
        let sigma = Alphabet::of_chars("abc").unwrap();
        let d = Dfa::from_words(
            sigma.clone(),
            [&sigma.word("ab").unwrap(), &sigma.word("ac").unwrap()],
        )
        .unwrap();
        let r = d.restrict_alphabet(&[0, 1]).unwrap();
        assert_eq!(r.alphabet().len(), 2);
        let ab = Word::from_symbols(vec![0, 1]);
        let aa = Word::from_symbols(vec![0, 0]);
        assert!(r.accepts(&ab).unwrap());
        assert!(!r.accepts(&aa).unwrap());
        assert_eq!(r.enumerate_language(4).len(), 1);
    }
}
