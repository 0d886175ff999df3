//! freelang — a toolkit for free regular languages.
//!
//! A regular language is *free* when no member is a proper prefix, suffix,
//! contiguous factor, or scattered subword of another member (bifix-free
//! means prefix- and suffix-free at once). Such languages are exactly the
//! regular prefix codes, suffix codes, infix codes, and hypercodes. This
//! crate provides:
//!
//! - complete DFAs and NFAs with the operations whose state complexity is
//!   interesting for these classes: boolean combinations, concatenation,
//!   star, reversal, determinization, and canonical minimization
//!   ([`dfa`], [`nfa`]);
//! - a regex frontend with a power operator, so parameterized witness
//!   languages can be written exactly as published ([`regex`]);
//! - decision procedures for the freeness classes and the structural facts
//!   that come with them ([`freeness`]);
//! - parameterized witness families that meet the known tight bounds for
//!   every operation, plus the bound-formula table itself ([`witness`],
//!   [`bounds`]);
//! - exhaustive enumeration of small free automata, worst-case pair
//!   searches, and alphabet-size impossibility checks ([`enumeration`]);
//! - a line-based text format for automata ([`textfmt`]), machine-readable
//!   reports ([`report`]), and a suite of executable checks ([`checks`]).
//!
//! The `freelang` binary exposes all of this as subcommands (`classify`,
//! `op`, `witness`, `table`, `enumerate`, `check`); see the crate examples
//! for library usage.

pub mod alphabet;
pub mod bounds;
pub mod checks;
pub mod dfa;
pub mod enumeration;
pub mod error;
pub mod freeness;
pub mod nfa;
pub mod oracle;
pub mod regex;
pub mod report;
pub mod textfmt;
pub mod witness;

mod util;

pub use alphabet::{Alphabet, Symbol, Word};
pub use dfa::{BoolOp, Dfa, PartialDfa, StateId};
pub use error::{Error, Result};
pub use freeness::{classify, FreeClass};
pub use nfa::Nfa;
pub use regex::{parse_regex, Regex};
