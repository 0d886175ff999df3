//! Exhaustive enumeration of small free automata, worst-case pair searches,
//! and alphabet-size impossibility checks.
//!
//! Candidates are generated on a structural skeleton that already encodes
//! the facts true of every minimal automaton in the class:
//!
//! - prefix-containing classes: a unique final state whose transitions all
//!   go to the sink (the accepting quotient is `ε`), with the final state
//!   and the sink at the last two indices;
//! - suffix-containing classes: no transitions back into the initial state
//!   (the initial quotient is uniquely reachable) and a sink present;
//! - the subword-free class (finite languages): transitions only move
//!   forward in some state order, so only ascending targets are generated.
//!
//! Remaining candidates pass reachability, minimality, and the class
//! predicate, then are deduplicated by canonical (breadth-first) form, so
//! each language appears exactly once and the stream order is
//! deterministic. The skeletons are completeness-preserving: every minimal
//! automaton of the class admits a labeling of this shape, which the
//! brute-force agreement tests confirm at small sizes.
//!
//! Pair searches run on compact automata with scratch reuse; with several
//! thousand candidates per side they stay in the seconds-to-minutes range.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::alphabet::Alphabet;
use crate::bounds::{expected_bound, LangClass, OpKind};
use crate::dfa::{BoolOp, Dfa};
use crate::error::{Error, Result};

/// Largest automaton the compact representation handles.
const MAX_N: usize = 12;
/// Largest alphabet the compact representation handles.
const MAX_K: usize = 6;
/// Candidate-count ceiling for uncapped enumeration.
const MAX_CANDIDATES: u64 = 300_000_000;

/// The five freeness classes, as enumeration targets.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FreenessKind {
    Prefix,
    Suffix,
    Bifix,
    Factor,
    Subword,
}

impl FreenessKind {
    pub const ALL: [FreenessKind; 5] = [
        FreenessKind::Prefix,
        FreenessKind::Suffix,
        FreenessKind::Bifix,
        FreenessKind::Factor,
        FreenessKind::Subword,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FreenessKind::Prefix => "prefix",
            FreenessKind::Suffix => "suffix",
            FreenessKind::Bifix => "bifix",
            FreenessKind::Factor => "factor",
            FreenessKind::Subword => "subword",
        }
    }

    pub fn from_name(name: &str) -> Option<FreenessKind> {
        Self::ALL.iter().copied().find(|k| k.name() == name)
    }

    /// The bound-table row for this class.
    pub fn bound_class(self) -> LangClass {
        match self {
            FreenessKind::Prefix => LangClass::PrefixFree,
            FreenessKind::Suffix => LangClass::SuffixFree,
            FreenessKind::Bifix => LangClass::BifixFree,
            FreenessKind::Factor => LangClass::FactorFree,
            FreenessKind::Subword => LangClass::SubwordFree,
        }
    }

    /// Predicate on a full [`Dfa`], for cross-checks.
    pub fn holds(self, d: &Dfa) -> bool {
        match self {
            FreenessKind::Prefix => crate::freeness::is_prefix_free(d),
            FreenessKind::Suffix => crate::freeness::is_suffix_free(d),
            FreenessKind::Bifix => crate::freeness::is_bifix_free(d),
            FreenessKind::Factor => crate::freeness::is_factor_free(d),
            FreenessKind::Subword => crate::freeness::is_subword_free(d),
        }
    }
}

impl std::fmt::Display for FreenessKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Fixed-size automaton for the search inner loops. The initial state is
/// always 0.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Compact {
    n: u8,
    k: u8,
    trans: [u8; MAX_N * MAX_K],
    finals: u16,
}

impl Compact {
    fn new(n: usize, k: usize) -> Compact {
        debug_assert!(n <= MAX_N && k <= MAX_K && n >= 1 && k >= 1);
        Compact {
            n: n as u8,
            k: k as u8,
            trans: [0; MAX_N * MAX_K],
            finals: 0,
        }
    }

    #[inline]
    fn delta(&self, s: usize, sym: usize) -> usize {
        self.trans[s * self.k as usize + sym] as usize
    }

    #[inline]
    fn set(&mut self, s: usize, sym: usize, t: usize) {
        self.trans[s * self.k as usize + sym] = t as u8;
    }

    #[inline]
    fn is_final(&self, s: usize) -> bool {
        self.finals >> s & 1 == 1
    }

    fn to_dfa(self, alphabet: &Alphabet) -> Dfa {
        let n = self.n as usize;
        let k = self.k as usize;
        debug_assert_eq!(alphabet.len(), k);
        let transitions: Vec<usize> = (0..n * k).map(|i| self.trans[i] as usize).collect();
        let finals = (0..n).filter(|&s| self.is_final(s));
        Dfa::new(alphabet.clone(), n, transitions, 0, finals).expect("compact table is valid")
    }

    #[cfg(test)]
    fn from_dfa(d: &Dfa) -> Compact {
        let n = d.state_count();
        let k = d.alphabet().len();
        assert!(n <= MAX_N && k <= MAX_K, "automaton too large for the search kernel");
        assert_eq!(d.initial(), 0, "searches expect canonical automata");
        let mut c = Compact::new(n, k);
        for s in 0..n {
            for sym in 0..k {
                c.set(s, sym, d.delta(s, sym));
            }
            if d.is_final(s) {
                c.finals |= 1 << s;
            }
        }
        c
    }

    /// All states reachable from 0?
    fn all_reachable(&self) -> bool {
        let n = self.n as usize;
        let k = self.k as usize;
        let mut seen: u16 = 1;
        let mut stack = [0u8; MAX_N];
        let mut top = 1;
        stack[0] = 0;
        let mut count = 1;
        while top > 0 {
            top -= 1;
            let s = stack[top] as usize;
            for sym in 0..k {
                let t = self.delta(s, sym);
                if seen >> t & 1 == 0 {
                    seen |= 1 << t;
                    stack[top] = t as u8;
                    top += 1;
                    count += 1;
                }
            }
        }
        count == n
    }

    /// Number of Myhill-Nerode classes (assumes all states reachable).
    fn class_count(&self) -> usize {
        let n = self.n as usize;
        let k = self.k as usize;
        moore_count(n, k, |s, sym| self.delta(s, sym), |s| self.is_final(s))
    }

    fn is_minimal(&self) -> bool {
        self.class_count() == self.n as usize
    }

    /// BFS renumbering from state 0 (assumes all states reachable).
    fn canonical(&self) -> Compact {
        let n = self.n as usize;
        let k = self.k as usize;
        let mut renum = [usize::MAX; MAX_N];
        let mut order = [0u8; MAX_N];
        renum[0] = 0;
        let mut len = 1;
        let mut head = 0;
        while head < len {
            let s = order[head] as usize;
            head += 1;
            for sym in 0..k {
                let t = self.delta(s, sym);
                if renum[t] == usize::MAX {
                    renum[t] = len;
                    order[len] = t as u8;
                    len += 1;
                }
            }
        }
        debug_assert_eq!(len, n);
        let mut out = Compact::new(n, k);
        for s in 0..n {
            let ns = renum[s];
            for sym in 0..k {
                out.set(ns, sym, renum[self.delta(s, sym)]);
            }
            if self.is_final(s) {
                out.finals |= 1 << ns;
            }
        }
        out
    }

    fn key(&self) -> Vec<u8> {
        let n = self.n as usize;
        let k = self.k as usize;
        let mut key = Vec::with_capacity(4 + n * k);
        key.push(self.n);
        key.push(self.k);
        key.extend_from_slice(&self.finals.to_le_bytes());
        key.extend_from_slice(&self.trans[..n * k]);
        key
    }
}

/// Moore partition refinement with stack buffers; supports up to 64 states.
fn moore_count(
    n: usize,
    k: usize,
    delta: impl Fn(usize, usize) -> usize,
    is_final: impl Fn(usize) -> bool,
) -> usize {
    debug_assert!(n <= 64 && k < 10);
    let mut label = [0u8; 64];
    for (s, l) in label.iter_mut().enumerate().take(n) {
        *l = u8::from(is_final(s));
    }
    let mut classes = 1 + (0..n).any(&is_final) as usize;
    if (0..n).all(is_final) {
        classes = 1;
    }
    loop {
        // signature: own label plus successor labels, 6 bits each
        let mut sig = [0u64; 64];
        for (s, sg) in sig.iter_mut().enumerate().take(n) {
            let mut v = label[s] as u64;
            for sym in 0..k {
                v = v << 6 | label[delta(s, sym)] as u64;
            }
            *sg = v;
        }
        let mut seen = [0u64; 64];
        let mut ids = [0u8; 64];
        let mut count = 0usize;
        for s in 0..n {
            let mut found = usize::MAX;
            for (c, &known) in seen.iter().enumerate().take(count) {
                if known == sig[s] {
                    found = c;
                    break;
                }
            }
            if found == usize::MAX {
                found = count;
                seen[count] = sig[s];
                count += 1;
            }
            ids[s] = found as u8;
        }
        label[..n].copy_from_slice(&ids[..n]);
        if count == classes {
            return count;
        }
        classes = count;
    }
}

// --- compact freeness checks -------------------------------------------
//
// Emptiness of `L ∩ X` for the padded languages X, walked as implicit
// product automata over (NFA state, DFA state) pairs. These mirror the
// constructions in `freeness` and are cross-checked against them in tests.

const PAIR_WORDS: usize = 8;

struct PairWalk {
    seen: [u64; PAIR_WORDS],
    stack: [u16; 64 * PAIR_WORDS],
    top: usize,
}

impl PairWalk {
    fn new() -> PairWalk {
        PairWalk {
            seen: [0; PAIR_WORDS],
            stack: [0; 64 * PAIR_WORDS],
            top: 0,
        }
    }

    #[inline]
    fn push(&mut self, id: usize) {
        if self.seen[id / 64] >> (id % 64) & 1 == 0 {
            self.seen[id / 64] |= 1 << (id % 64);
            self.stack[self.top] = id as u16;
            self.top += 1;
        }
    }

    #[inline]
    fn pop(&mut self) -> Option<usize> {
        if self.top == 0 {
            None
        } else {
            self.top -= 1;
            Some(self.stack[self.top] as usize)
        }
    }
}

/// `L ∩ Σ⁺L = ∅`? NFA states: 0 = no pad yet, 1 = padded, 2+q = running L.
fn suffix_free_compact(c: &Compact) -> bool {
    let n = c.n as usize;
    let k = c.k as usize;
    let eps_in = c.is_final(0);
    let nfa_states = n + 2;
    let id = |ns: usize, ds: usize| ns * n + ds;
    let nfa_final = |ns: usize| match ns {
        0 => false,
        1 => eps_in,
        q => c.is_final(q - 2),
    };
    let mut walk = PairWalk::new();
    debug_assert!(nfa_states * n <= 64 * PAIR_WORDS);
    walk.push(id(0, 0));
    while let Some(pair) = walk.pop() {
        let (ns, ds) = (pair / n, pair % n);
        if nfa_final(ns) && c.is_final(ds) {
            return false;
        }
        for sym in 0..k {
            let dn = c.delta(ds, sym);
            match ns {
                0 => walk.push(id(1, dn)),
                1 => {
                    walk.push(id(1, dn));
                    walk.push(id(2 + c.delta(0, sym), dn));
                }
                q => walk.push(id(2 + c.delta(q - 2, sym), dn)),
            }
        }
    }
    true
}

/// `L ∩ (Σ⁺LΣ* ∪ Σ*LΣ⁺) = ∅`? NFA states: 0 = no pad, 1 = padded,
/// 2+q = running L unpadded, 2+n+q = running L padded, 2+2n = finished
/// unpadded (needs a tail letter), 2+2n+1 = accepting tail.
fn factor_free_compact(c: &Compact) -> bool {
    let n = c.n as usize;
    let k = c.k as usize;
    let eps_in = c.is_final(0);
    let need = 2 + 2 * n;
    let post = need + 1;
    let nfa_states = post + 1;
    let id = |ns: usize, ds: usize| ns * n + ds;
    let nfa_final = |ns: usize| {
        ns == post || ns == 1 && eps_in || (2 + n..2 + 2 * n).contains(&ns) && c.is_final(ns - 2 - n)
    };
    let mut walk = PairWalk::new();
    debug_assert!(nfa_states * n <= 64 * PAIR_WORDS);
    walk.push(id(0, 0));
    walk.push(id(2, 0)); // start running L immediately, unpadded
    while let Some(pair) = walk.pop() {
        let (ns, ds) = (pair / n, pair % n);
        if nfa_final(ns) && c.is_final(ds) {
            return false;
        }
        for sym in 0..k {
            let dn = c.delta(ds, sym);
            match ns {
                0 => walk.push(id(1, dn)),
                1 => {
                    walk.push(id(1, dn));
                    let entered = c.delta(0, sym);
                    walk.push(id(2 + n + entered, dn));
                    // a one-letter word completes right as the run starts
                    if c.is_final(entered) {
                        walk.push(id(post, dn));
                    }
                }
                x if x == need => walk.push(id(post, dn)),
                x if x == post => walk.push(id(post, dn)),
                x if x < 2 + n => {
                    let q = x - 2;
                    let t = c.delta(q, sym);
                    walk.push(id(2 + t, dn));
                    if c.is_final(t) {
                        walk.push(id(need, dn));
                    }
                }
                x => {
                    let q = x - 2 - n;
                    let t = c.delta(q, sym);
                    walk.push(id(2 + n + t, dn));
                    if c.is_final(t) {
                        walk.push(id(post, dn));
                    }
                }
            }
        }
    }
    true
}

/// `L` meets none of its proper supersequences? NFA states: q = running
/// with no insertions yet, n+q = at least one insertion.
fn subword_free_compact(c: &Compact) -> bool {
    let n = c.n as usize;
    let k = c.k as usize;
    let id = |ns: usize, ds: usize| ns * n + ds;
    let mut walk = PairWalk::new();
    debug_assert!(2 * n * n <= 64 * PAIR_WORDS);
    walk.push(id(0, 0));
    while let Some(pair) = walk.pop() {
        let (ns, ds) = (pair / n, pair % n);
        let (q, inserted) = if ns < n { (ns, false) } else { (ns - n, true) };
        if inserted && c.is_final(q) && c.is_final(ds) {
            return false;
        }
        for sym in 0..k {
            let dn = c.delta(ds, sym);
            let tagged = if inserted { n } else { 0 };
            walk.push(id(tagged + c.delta(q, sym), dn));
            walk.push(id(n + q, dn)); // consume as an insertion
        }
    }
    true
}

fn passes_class(kind: FreenessKind, c: &Compact) -> bool {
    match kind {
        // the skeleton already guarantees prefix-freeness of minimal candidates
        FreenessKind::Prefix => true,
        FreenessKind::Suffix | FreenessKind::Bifix => suffix_free_compact(c),
        // suffix check first: much smaller walk, rejects most candidates
        FreenessKind::Factor => suffix_free_compact(c) && factor_free_compact(c),
        FreenessKind::Subword => suffix_free_compact(c) && subword_free_compact(c),
    }
}

// --- candidate generation ------------------------------------------------

struct Skeleton {
    template: Compact,
    /// (state, symbol) positions to fill.
    slots: Vec<(usize, usize)>,
    /// Allowed targets per slot.
    choices: Vec<Vec<u8>>,
    /// Final-state masks to try (one entry for the prefix-shaped classes).
    final_masks: Vec<u16>,
}

fn skeleton(kind: FreenessKind, k: usize, n: usize) -> Skeleton {
    let mut template = Compact::new(n, k);
    let sink = n - 1;
    for sym in 0..k {
        template.set(sink, sym, sink);
    }
    match kind {
        FreenessKind::Prefix | FreenessKind::Bifix | FreenessKind::Factor | FreenessKind::Subword => {
            let eps = n - 2;
            for sym in 0..k {
                template.set(eps, sym, sink);
            }
            let mut slots = Vec::new();
            let mut choices = Vec::new();
            for s in 0..n - 2 {
                for sym in 0..k {
                    slots.push((s, sym));
                    let allowed: Vec<u8> = match kind {
                        FreenessKind::Prefix => (0..n as u8).collect(),
                        FreenessKind::Bifix | FreenessKind::Factor => (1..n as u8).collect(),
                        FreenessKind::Subword => (s as u8 + 1..=eps as u8)
                            .chain(std::iter::once(sink as u8))
                            .collect(),
                        FreenessKind::Suffix => unreachable!(),
                    };
                    choices.push(allowed);
                }
            }
            Skeleton {
                template,
                slots,
                choices,
                final_masks: vec![1 << eps],
            }
        }
        FreenessKind::Suffix => {
            let mut slots = Vec::new();
            let mut choices = Vec::new();
            for s in 0..n - 1 {
                for sym in 0..k {
                    slots.push((s, sym));
                    choices.push((1..n as u8).collect());
                }
            }
            // non-empty subsets of {1..n-2}; the initial state cannot be
            // final (ε in a non-trivial suffix-free language is impossible)
            let final_masks = (1u16..1 << (n - 2)).map(|m| m << 1).collect();
            Skeleton {
                template,
                slots,
                choices,
                final_masks,
            }
        }
    }
}

fn candidate_estimate(sk: &Skeleton) -> u64 {
    let mut total = sk.final_masks.len() as u64;
    for c in &sk.choices {
        total = total.saturating_mul(c.len() as u64);
    }
    total
}

fn enumerate_compact(kind: FreenessKind, k: usize, n: usize) -> Result<Vec<Compact>> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidAutomaton("need n ≥ 1 and a non-empty alphabet".into()));
    }
    if n > MAX_N || k > MAX_K {
        return Err(Error::SearchInfeasible {
            message: format!("enumeration supports n ≤ {MAX_N} and alphabets ≤ {MAX_K}, got n={n}, k={k}"),
        });
    }
    if n == 1 {
        // the empty language, free in every sense
        let mut c = Compact::new(1, k);
        for sym in 0..k {
            c.set(0, sym, 0);
        }
        return Ok(vec![c]);
    }
    if n == 2 {
        // {ε} is the only free language with two quotients
        let mut c = Compact::new(2, k);
        for sym in 0..k {
            c.set(0, sym, 1);
            c.set(1, sym, 1);
        }
        c.finals = 1;
        return Ok(vec![c]);
    }

    let sk = skeleton(kind, k, n);
    let estimate = candidate_estimate(&sk);
    if estimate > MAX_CANDIDATES {
        return Err(Error::SearchInfeasible {
            message: format!(
                "{} candidate tables for class {kind} at alphabet {k}, n = {n}",
                estimate
            ),
        });
    }

    let mut out = Vec::new();
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut c = sk.template;
    let slots = &sk.slots;
    let choices = &sk.choices;
    for &mask in &sk.final_masks {
        c.finals = mask;
        let mut idx = vec![0usize; slots.len()];
        for (slot, &(s, sym)) in slots.iter().enumerate() {
            c.set(s, sym, sk.choices[slot][0] as usize);
        }
        'odometer: loop {
            if c.all_reachable() && c.is_minimal() && passes_class(kind, &c) {
                let canon = c.canonical();
                if seen.insert(canon.key()) {
                    out.push(canon);
                }
            }
            // advance
            let mut i = 0;
            loop {
                if i == slots.len() {
                    break 'odometer;
                }
                idx[i] += 1;
                if idx[i] < choices[i].len() {
                    let (s, sym) = slots[i];
                    c.set(s, sym, choices[i][idx[i]] as usize);
                    break;
                }
                idx[i] = 0;
                let (s, sym) = slots[i];
                c.set(s, sym, choices[i][0] as usize);
                i += 1;
            }
        }
    }
    Ok(out)
}

/// Every minimal complete DFA over the first `alphabet_size` letters whose
/// language lies in the class and has exactly `n` quotients, each language
/// once, in a deterministic order.
pub fn enumerate_minimal_free_dfas(
    kind: FreenessKind,
    alphabet_size: usize,
    n: usize,
) -> Result<Vec<Dfa>> {
    let sigma = Alphabet::first_letters(alphabet_size)?;
    let compacts = enumerate_compact(kind, alphabet_size, n)?;
    Ok(compacts.iter().map(|c| c.to_dfa(&sigma)).collect())
}

// --- pair search ----------------------------------------------------------

/// Quotient complexity of `op(L(a), L(b))` on compact automata.
fn bool_kappa(a: &Compact, b: &Compact, op: BoolOp) -> usize {
    let na = a.n as usize;
    let nb = b.n as usize;
    let k = a.k as usize;
    debug_assert_eq!(k, b.k as usize);
    debug_assert!(na * nb <= 256, "pair search supports up to 256 product pairs");
    // BFS over reachable pairs
    let mut index = [0u16; 256]; // pair -> id + 1
    let mut pairs = [0u16; 64]; // id -> pair (at most 64 reachable)
    let mut trans = [0u8; 64 * MAX_K];
    let mut finals: u64 = 0;
    let start = 0u16;
    index[start as usize] = 1;
    pairs[0] = start;
    let mut count = 1usize;
    let mut head = 0usize;
    while head < count {
        let pair = pairs[head] as usize;
        let (p, q) = (pair / nb, pair % nb);
        if op.apply(a.is_final(p), b.is_final(q)) {
            finals |= 1 << head;
        }
        for sym in 0..k {
            let t = a.delta(p, sym) * nb + b.delta(q, sym);
            let id = if index[t] == 0 {
                assert!(count < 64, "pair search supports at most 64 reachable product states");
                index[t] = count as u16 + 1;
                pairs[count] = t as u16;
                count += 1;
                count - 1
            } else {
                index[t] as usize - 1
            };
            trans[head * k + sym] = id as u8;
        }
        head += 1;
    }
    moore_count(count, k, |s, sym| trans[s * k + sym] as usize, |s| finals >> s & 1 == 1)
}

/// Search request: worst-case complexity of `op` over all pairs from the
/// class at complexities `m` and `n` over a fixed alphabet size.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SearchSpec {
    pub class: FreenessKind,
    pub alphabet_size: usize,
    pub m: usize,
    pub n: usize,
    pub op: BoolOp,
    /// Cap on examined pairs; `None` means unlimited but restricted to the
    /// supported grid.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cap: Option<u64>,
    /// Worker-count hint; `None` uses the global thread pool.
    #[serde(skip)]
    pub workers: Option<usize>,
}

/// Outcome of a [`max_complexity_search`].
#[derive(Clone, Debug, Serialize)]
pub struct SearchResult {
    pub spec: SearchSpec,
    pub max_kappa: u64,
    /// A pair attaining `max_kappa` (first in enumeration order).
    pub witness_left: Dfa,
    pub witness_right: Dfa,
    /// Candidate languages per side.
    pub left_count: u64,
    pub right_count: u64,
    /// Operand pairs actually examined.
    pub candidates_examined: u64,
    /// True iff the whole space was covered (no cap cut the scan short).
    pub exhaustive: bool,
}

impl SearchResult {
    /// Re-runs the attaining pair through the public operations.
    pub fn reverify(&self) -> Result<u64> {
        let combined = self.witness_left.boolean_combine(&self.witness_right, self.spec.op)?;
        Ok(combined.quotient_complexity() as u64)
    }
}

fn in_supported_grid(kind: FreenessKind, k: usize, m: usize, n: usize) -> bool {
    (k == 1 && m <= MAX_N && n <= MAX_N)
        || (k == 2 && m <= 6 && n <= 6)
        || (kind == FreenessKind::Subword && k <= 5 && m <= 4 && n <= 4)
}

fn is_symmetric(op: BoolOp) -> bool {
    !matches!(op, BoolOp::Difference)
}

/// Maximum of `κ(op(K, L))` over all class pairs at the given sizes, with
/// an attaining pair. Deterministic regardless of the worker count: the
/// merge keeps the largest complexity and, among those, the pair earliest
/// in enumeration order.
pub fn max_complexity_search(spec: SearchSpec) -> Result<SearchResult> {
    if spec.m < 2 || spec.n < 2 {
        return Err(Error::InvalidAutomaton("pair search needs m, n ≥ 2".into()));
    }
    if spec.cap.is_none() && !in_supported_grid(spec.class, spec.alphabet_size, spec.m, spec.n) {
        return Err(Error::SearchInfeasible {
            message: format!(
                "class {} at alphabet {} with m={}, n={} is outside the supported grid",
                spec.class, spec.alphabet_size, spec.m, spec.n
            ),
        });
    }

    let run = || -> Result<SearchResult> {
        let lefts = enumerate_compact(spec.class, spec.alphabet_size, spec.m)?;
        let rights = if spec.n == spec.m {
            lefts.clone()
        } else {
            enumerate_compact(spec.class, spec.alphabet_size, spec.n)?
        };
        if lefts.is_empty() || rights.is_empty() {
            return Err(Error::SearchInfeasible {
                message: format!(
                    "no {} languages with the requested complexity over {} letters",
                    spec.class, spec.alphabet_size
                ),
            });
        }
        let triangular = is_symmetric(spec.op) && spec.m == spec.n;
        let pair_count = |i: usize| -> u64 {
            if triangular {
                (rights.len() - i) as u64
            } else {
                rights.len() as u64
            }
        };
        let total_pairs: u64 = (0..lefts.len()).map(pair_count).sum();

        // best = (kappa, left index, right index); larger kappa wins, ties
        // go to the earlier pair
        let better = |a: (usize, usize, usize), b: (usize, usize, usize)| -> (usize, usize, usize) {
            if a.0 != b.0 {
                return if a.0 > b.0 { a } else { b };
            }
            if (a.1, a.2) <= (b.1, b.2) {
                a
            } else {
                b
            }
        };

        let (best, examined, exhaustive) = match spec.cap {
            Some(cap) if cap < total_pairs => {
                let mut best = (0usize, 0usize, 0usize);
                let mut examined = 0u64;
                'outer: for (i, l) in lefts.iter().enumerate() {
                    let j0 = if triangular { i } else { 0 };
                    for (j, r) in rights.iter().enumerate().skip(j0) {
                        if examined == cap {
                            break 'outer;
                        }
                        examined += 1;
                        let kappa = bool_kappa(l, r, spec.op);
                        best = better(best, (kappa, i, j));
                    }
                }
                (best, examined, false)
            }
            _ => {
                let best = (0..lefts.len())
                    .into_par_iter()
                    .map(|i| {
                        let l = &lefts[i];
                        let j0 = if triangular { i } else { 0 };
                        let mut local = (0usize, 0usize, 0usize);
                        for (j, r) in rights.iter().enumerate().skip(j0) {
                            let kappa = bool_kappa(l, r, spec.op);
                            local = better(local, (kappa, i, j));
                        }
                        local
                    })
                    .reduce(|| (0, usize::MAX, usize::MAX), better);
                (best, total_pairs, true)
            }
        };

        let sigma = Alphabet::first_letters(spec.alphabet_size)?;
        Ok(SearchResult {
            spec,
            max_kappa: best.0 as u64,
            witness_left: lefts[best.1].to_dfa(&sigma),
            witness_right: rights[best.2].to_dfa(&sigma),
            left_count: lefts.len() as u64,
            right_count: rights.len() as u64,
            candidates_examined: examined,
            exhaustive,
        })
    };

    match spec.workers {
        Some(workers) if workers > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::SearchInfeasible {
                message: format!("cannot build worker pool: {e}"),
            })?
            .install(run),
        _ => run(),
    }
}

/// First pair (in enumeration order) whose measured complexities equal all
/// the targets at once.
pub fn find_pair_attaining(
    kind: FreenessKind,
    alphabet_size: usize,
    m: usize,
    n: usize,
    targets: &[(BoolOp, u64)],
) -> Result<Option<(Dfa, Dfa)>> {
    if !in_supported_grid(kind, alphabet_size, m, n) {
        return Err(Error::SearchInfeasible {
            message: format!(
                "class {kind} at alphabet {alphabet_size} with m={m}, n={n} is outside the supported grid"
            ),
        });
    }
    let lefts = enumerate_compact(kind, alphabet_size, m)?;
    let rights = if n == m {
        lefts.clone()
    } else {
        enumerate_compact(kind, alphabet_size, n)?
    };
    let hit = (0..lefts.len())
        .into_par_iter()
        .filter_map(|i| {
            let l = &lefts[i];
            rights.iter().position(|r| {
                targets
                    .iter()
                    .all(|&(op, want)| bool_kappa(l, r, op) as u64 == want)
            })
            .map(|j| (i, j))
        })
        .find_first(|_| true);
    let sigma = Alphabet::first_letters(alphabet_size)?;
    Ok(hit.map(|(i, j)| (lefts[i].to_dfa(&sigma), rights[j].to_dfa(&sigma))))
}

// --- reversal witness search ----------------------------------------------

/// Quotient complexity of the reversed language, by subset construction
/// over at most 2^n subsets followed by minimization. Supports n ≤ 6.
fn reverse_kappa(c: &Compact) -> usize {
    let n = c.n as usize;
    let k = c.k as usize;
    debug_assert!(n <= 6);
    let subsets = 1usize << n;
    // preimage masks: pre[sym][q] = { p : δ(p, sym) = q }
    let mut pre = [[0u16; 6]; MAX_K];
    for (sym, row) in pre.iter_mut().enumerate().take(k) {
        for p in 0..n {
            row[c.delta(p, sym)] |= 1 << p;
        }
    }
    let mut index = vec![0u8; subsets]; // mask -> id + 1
    let mut masks = [0u16; 64];
    let mut trans = [0u8; 64 * MAX_K];
    let start = c.finals & ((1 << n) - 1);
    index[start as usize] = 1;
    masks[0] = start;
    let mut count = 1usize;
    let mut head = 0usize;
    while head < count {
        let mask = masks[head];
        for sym in 0..k {
            let mut t: u16 = 0;
            let mut rest = mask;
            while rest != 0 {
                let q = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                t |= pre[sym][q];
            }
            let id = if index[t as usize] == 0 {
                index[t as usize] = count as u8 + 1;
                masks[count] = t;
                count += 1;
                count - 1
            } else {
                index[t as usize] as usize - 1
            };
            trans[head * k + sym] = id as u8;
        }
        head += 1;
    }
    // a subset accepts in the reversal iff it contains the old initial state
    moore_count(count, k, |s, sym| trans[s * k + sym] as usize, |s| masks[s] & 1 == 1)
}

/// Searches for a minimal automaton with `state_count` states over the
/// given alphabet whose reversal has the full `2^state_count` complexity.
/// Returns the first hit in a fixed order, or `None` when no automaton of
/// that size attains the bound (e.g. any unary case with 2 or more states).
pub fn reversal_witness_search(alphabet_size: usize, state_count: usize) -> Result<Option<Dfa>> {
    if state_count < 1 {
        return Err(Error::InvalidAutomaton("need at least one state".into()));
    }
    let feasible = (alphabet_size <= 2 && state_count <= 4)
        || (alphabet_size == 3 && state_count <= 3)
        || (alphabet_size == 1 && state_count <= 6);
    if !feasible {
        return Err(Error::SearchInfeasible {
            message: format!(
                "reversal search over {alphabet_size} letters with {state_count} states"
            ),
        });
    }
    let n = state_count;
    let k = alphabet_size;
    let target = 1usize << n;
    let sigma = Alphabet::first_letters(k)?;
    let slots = n * k;
    let mut c = Compact::new(n, k);
    loop {
        for finals in 1u16..(1 << n) {
            c.finals = finals;
            if c.all_reachable() && c.is_minimal() && reverse_kappa(&c) == target {
                return Ok(Some(c.to_dfa(&sigma).minimize()));
            }
        }
        // odometer over the transition table
        let mut i = 0;
        loop {
            if i == slots {
                return Ok(None);
            }
            c.trans[i] += 1;
            if (c.trans[i] as usize) < n {
                break;
            }
            c.trans[i] = 0;
            i += 1;
        }
    }
}

/// True iff no class pair over the given alphabet size attains the stored
/// bound for the operation — an exhaustive confirmation that the alphabet
/// is too small. Panics if the search exceeds a proven bound, since that
/// can only be an implementation bug.
pub fn impossibility_check(
    kind: FreenessKind,
    op: BoolOp,
    m: usize,
    n: usize,
    alphabet_size: usize,
) -> Result<bool> {
    let bound = expected_bound(kind.bound_class(), OpKind::from_bool_op(op), m, n)?;
    let result = max_complexity_search(SearchSpec {
        class: kind,
        alphabet_size,
        m,
        n,
        op,
        cap: None,
        workers: None,
    })?;
    assert!(
        bound.conjectural || result.max_kappa <= bound.value,
        "exhaustive search found κ = {} above the proven bound {} for {} {}: implementation bug",
        result.max_kappa,
        bound.value,
        kind,
        op.name(),
    );
    Ok(result.max_kappa < bound.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn language_keys(dfas: &[Dfa]) -> HashSet<String> {
        dfas.iter().map(|d| crate::textfmt::print_dfa(&d.minimize())).collect()
    }

    #[test]
    fn unary_classes_have_one_language_per_size() {
        for kind in FreenessKind::ALL {
            for n in 2..=6 {
                let dfas = enumerate_minimal_free_dfas(kind, 1, n).unwrap();
                assert_eq!(dfas.len(), 1, "{kind} unary n={n}");
                assert_eq!(dfas[0].state_count(), n);
                // the unique unary free language is a^(n-2)
                let words = dfas[0].enumerate_language(n);
                assert_eq!(words.len(), 1);
                assert_eq!(words[0].len(), n - 2);
            }
        }
    }

    #[test]
    fn binary_prefix_free_with_three_quotients() {
        // {a}, {b}, {a,b}, a*b, b*a
        let dfas = enumerate_minimal_free_dfas(FreenessKind::Prefix, 2, 3).unwrap();
        assert_eq!(dfas.len(), 5);
        for d in &dfas {
            assert!(crate::freeness::is_prefix_free(d));
            assert_eq!(d.state_count(), 3);
        }
    }

    #[test]
    fn binary_bifix_free_with_three_quotients() {
        let dfas = enumerate_minimal_free_dfas(FreenessKind::Bifix, 2, 3).unwrap();
        assert_eq!(dfas.len(), 3); // {a}, {b}, {a,b}
    }

    #[test]
    fn pruned_enumeration_matches_brute_force() {
        let sigma = Alphabet::binary();
        for kind in FreenessKind::ALL {
            for n in 2..=4 {
                let pruned = language_keys(&enumerate_minimal_free_dfas(kind, 2, n).unwrap());
                let mut brute = HashSet::new();
                oracle::for_each_complete_dfa(&sigma, n, |d| {
                    let m = d.minimize();
                    if m.state_count() == n && kind.holds(&m) {
                        brute.insert(crate::textfmt::print_dfa(&m));
                    }
                });
                assert_eq!(pruned, brute, "{kind} n={n}");
            }
        }
    }

    #[test]
    fn compact_checks_agree_with_library_predicates() {
        let sigma = Alphabet::binary();
        let mut checked = 0usize;
        oracle::for_each_complete_dfa(&sigma, 3, |d| {
            let m = d.minimize();
            if m.state_count() != 3 || m.initial() != 0 {
                return;
            }
            let c = Compact::from_dfa(&m);
            assert_eq!(suffix_free_compact(&c), crate::freeness::is_suffix_free(&m));
            assert_eq!(factor_free_compact(&c), crate::freeness::is_factor_free(&m));
            assert_eq!(subword_free_compact(&c), crate::freeness::is_subword_free(&m));
            checked += 1;
        });
        assert!(checked > 100);
    }

    #[test]
    fn pair_kernel_agrees_with_public_path() {
        let lefts = enumerate_compact(FreenessKind::Factor, 2, 4).unwrap();
        let sigma = Alphabet::binary();
        for a in &lefts {
            for b in &lefts {
                for op in BoolOp::ALL {
                    let fast = bool_kappa(a, b, op);
                    let slow = a
                        .to_dfa(&sigma)
                        .boolean_combine(&b.to_dfa(&sigma), op)
                        .unwrap()
                        .quotient_complexity();
                    assert_eq!(fast, slow);
                }
            }
        }
    }

    #[test]
    fn small_union_maxima() {
        // binary factor-free worst cases at small sizes
        let run = |m, n| {
            max_complexity_search(SearchSpec {
                class: FreenessKind::Factor,
                alphabet_size: 2,
                m,
                n,
                op: BoolOp::Union,
                cap: None,
                workers: None,
            })
            .unwrap()
        };
        let r = run(4, 4);
        assert_eq!(r.max_kappa, 7);
        assert!(r.exhaustive);
        assert_eq!(r.reverify().unwrap(), 7);
        assert_eq!(run(5, 4).max_kappa, 10);
        assert_eq!(run(5, 5).max_kappa, 13);
    }

    #[test]
    fn capped_search_reports_lower_bound() {
        let r = max_complexity_search(SearchSpec {
            class: FreenessKind::Factor,
            alphabet_size: 2,
            m: 4,
            n: 4,
            op: BoolOp::Union,
            cap: Some(3),
            workers: None,
        })
        .unwrap();
        assert!(!r.exhaustive);
        assert_eq!(r.candidates_examined, 3);
        assert!(r.max_kappa <= 7);
    }

    #[test]
    fn infeasible_without_cap() {
        let err = max_complexity_search(SearchSpec {
            class: FreenessKind::Factor,
            alphabet_size: 2,
            m: 7,
            n: 7,
            op: BoolOp::Union,
            cap: None,
            workers: None,
        });
        assert!(matches!(err, Err(Error::SearchInfeasible { .. })));
    }

    #[test]
    fn reversal_witness_small_sizes() {
        let k2 = reversal_witness_search(2, 2).unwrap().unwrap();
        assert_eq!(k2.quotient_complexity(), 2);
        assert_eq!(k2.reverse().quotient_complexity(), 4);
        let k3 = reversal_witness_search(2, 3).unwrap().unwrap();
        assert_eq!(k3.reverse().quotient_complexity(), 8);
        assert!(reversal_witness_search(1, 2).unwrap().is_none());
    }

    #[test]
    fn unary_maxima_match_the_unary_row() {
        // union of the unique unary witnesses: max(m, n)
        let r = max_complexity_search(SearchSpec {
            class: FreenessKind::Subword,
            alphabet_size: 1,
            m: 4,
            n: 6,
            op: BoolOp::Union,
            cap: None,
            workers: None,
        })
        .unwrap();
        assert_eq!(r.max_kappa, 6);
    }

    #[test]
    fn impossibility_small_case() {
        // over 5 letters the subword-free (4,4) union bound 8 is attained
        assert!(!impossibility_check(FreenessKind::Subword, BoolOp::Union, 4, 4, 5).unwrap());
    }
}
