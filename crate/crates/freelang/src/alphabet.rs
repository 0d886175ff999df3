//! Alphabets and words.
//!
//! Symbols are small integers indexing into an [`Alphabet`], which maps them
//! to display names such as `a` or `d3`. The symbol order is fixed at
//! construction and every automaton construction in this crate iterates
//! symbols in that order, so canonical forms are stable.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A symbol identifier: an index into an [`Alphabet`].
pub type Symbol = usize;

/// An ordered, non-empty set of named symbols.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Arc<Vec<String>>,
}

impl Alphabet {
    /// Builds an alphabet from display names. Names must be non-empty,
    /// unique, and free of whitespace and `#` (so the text formats stay
    /// unambiguous).
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet must be non-empty".into()));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::InvalidAlphabet(format!("symbol {i} has an empty name")));
            }
            if name.chars().any(|c| c.is_whitespace()) || name.contains('#') {
                return Err(Error::InvalidAlphabet(format!(
                    "symbol name {name:?} contains whitespace or '#'"
                )));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol name {name:?}")));
            }
        }
        Ok(Alphabet { names: Arc::new(names) })
    }

    /// Alphabet with one single-character name per character of `letters`,
    /// e.g. `Alphabet::of_chars("abc")`.
    pub fn of_chars(letters: &str) -> Result<Self> {
        Alphabet::new(letters.chars().map(|c| c.to_string()))
    }

    /// The unary alphabet `{a}`.
    pub fn unary() -> Self {
        Alphabet::of_chars("a").expect("unary alphabet is valid")
    }

    /// The binary alphabet `{a, b}`.
    pub fn binary() -> Self {
        Alphabet::of_chars("ab").expect("binary alphabet is valid")
    }

    /// First `size` letters of `a..z` as an alphabet (`size <= 26`).
    pub fn first_letters(size: usize) -> Result<Self> {
        if size == 0 || size > 26 {
            return Err(Error::InvalidAlphabet(format!(
                "cannot build a {size}-letter alphabet from a..z"
            )));
        }
        Alphabet::new(('a'..).take(size).map(|c| c.to_string()))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn symbols(&self) -> std::ops::Range<Symbol> {
        0..self.len()
    }

    pub fn name(&self, sym: Symbol) -> &str {
        &self.names[sym]
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }

    pub fn index_of(&self, name: &str) -> Option<Symbol> {
        self.names.iter().position(|n| n == name)
    }

    /// Extends the alphabet with a fresh letter, returning the new alphabet
    /// and the new letter's symbol. Fails if the name is already present.
    pub fn with_letter(&self, name: &str) -> Result<(Self, Symbol)> {
        if self.index_of(name).is_some() {
            return Err(Error::LetterAlreadyPresent(name.to_string()));
        }
        let mut names: Vec<String> = self.names.as_ref().clone();
        names.push(name.to_string());
        let sym = names.len() - 1;
        Ok((Alphabet::new(names)?, sym))
    }

    /// Parses a word of single-character letter names, e.g. `"acab"`.
    pub fn word(&self, text: &str) -> Result<Word> {
        let mut syms = Vec::with_capacity(text.len());
        for c in text.chars() {
            let name = c.to_string();
            let sym = self
                .index_of(&name)
                .ok_or(Error::UnknownLetter(name))?;
            syms.push(sym);
        }
        Ok(Word::from_symbols(syms))
    }

    /// Renders a word using this alphabet's display names; `ε` for the
    /// empty word.
    pub fn render(&self, w: &Word) -> String {
        if w.is_empty() {
            return "ε".to_string();
        }
        w.symbols().iter().map(|&s| self.name(s)).collect()
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({})", self.names.join(" "))
    }
}

/// A word: a sequence of symbols, possibly empty.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn epsilon() -> Self {
        Word(Vec::new())
    }

    pub fn from_symbols(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, sym: Symbol) {
        self.0.push(sym);
    }

    pub fn pop(&mut self) {
        self.0.pop();
    }

    pub fn reversed(&self) -> Word {
        let mut v = self.0.clone();
        v.reverse();
        Word(v)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<T: IntoIterator<Item = Symbol>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_names() {
        assert!(Alphabet::new(Vec::<String>::new()).is_err());
        assert!(Alphabet::new(["a", "a"]).is_err());
        assert!(Alphabet::new(["a b"]).is_err());
        assert!(Alphabet::new([""]).is_err());
        assert!(Alphabet::new(["#"]).is_err());
    }

    #[test]
    fn multi_char_names_are_allowed() {
        let sigma = Alphabet::new(["a", "b", "c", "d3", "d4", "e3"]).unwrap();
        assert_eq!(sigma.len(), 6);
        assert_eq!(sigma.index_of("d3"), Some(3));
        assert_eq!(sigma.name(5), "e3");
    }

    #[test]
    fn word_parsing_and_rendering() {
        let sigma = Alphabet::of_chars("abc").unwrap();
        let w = sigma.word("acab").unwrap();
        assert_eq!(w.symbols(), &[0, 2, 0, 1]);
        assert_eq!(sigma.render(&w), "acab");
        assert_eq!(sigma.render(&Word::epsilon()), "ε");
        assert!(sigma.word("axb").is_err());
    }

    #[test]
    fn with_letter_extends_at_the_end() {
        let sigma = Alphabet::binary();
        let (ext, sym) = sigma.with_letter("c").unwrap();
        assert_eq!(sym, 2);
        assert_eq!(ext.name(2), "c");
        assert!(ext.with_letter("a").is_err());
    }
}
