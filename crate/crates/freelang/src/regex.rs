//! Regular expressions with an explicit power operator.
//!
//! The grammar accepts `|` or `∪` for union, juxtaposition for
//! concatenation, postfix `*` and `^k`, parentheses, `()` for the empty
//! word, `∅` for the empty language, and multi-character letter names in
//! single quotes. Witness families use exponents heavily, so `^k` is part
//! of the grammar rather than being expanded by hand:
//!
//! ```
//! use freelang::{Alphabet, parse_regex};
//!
//! let sigma = Alphabet::of_chars("abc").unwrap();
//! let k = parse_regex("a(c*(a|b))^2", &sigma).unwrap();
//! assert_eq!(k.to_dfa(&sigma).quotient_complexity(), 5);
//! ```

use crate::alphabet::{Alphabet, Symbol};
use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::nfa::Nfa;

/// Syntax tree of a regular expression.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Regex {
    Empty,
    Epsilon,
    Letter(Symbol),
    Union(Box<Regex>, Box<Regex>),
    Concat(Box<Regex>, Box<Regex>),
    Star(Box<Regex>),
    Power(Box<Regex>, u32),
}

impl Regex {
    pub fn letter(sym: Symbol) -> Regex {
        Regex::Letter(sym)
    }

    pub fn union(l: Regex, r: Regex) -> Regex {
        Regex::Union(Box::new(l), Box::new(r))
    }

    pub fn concat(l: Regex, r: Regex) -> Regex {
        Regex::Concat(Box::new(l), Box::new(r))
    }

    pub fn star(inner: Regex) -> Regex {
        Regex::Star(Box::new(inner))
    }

    pub fn power(inner: Regex, exponent: u32) -> Regex {
        Regex::Power(Box::new(inner), exponent)
    }

    /// Expands every `Power` node into repeated concatenation
    /// (`r^0` becomes `ε`).
    pub fn expand_powers(&self) -> Regex {
        match self {
            Regex::Empty => Regex::Empty,
            Regex::Epsilon => Regex::Epsilon,
            Regex::Letter(s) => Regex::Letter(*s),
            Regex::Union(l, r) => Regex::union(l.expand_powers(), r.expand_powers()),
            Regex::Concat(l, r) => Regex::concat(l.expand_powers(), r.expand_powers()),
            Regex::Star(i) => Regex::star(i.expand_powers()),
            Regex::Power(i, e) => {
                let inner = i.expand_powers();
                match e {
                    0 => Regex::Epsilon,
                    _ => {
                        let mut acc = inner.clone();
                        for _ in 1..*e {
                            acc = Regex::concat(acc, inner.clone());
                        }
                        acc
                    }
                }
            }
        }
    }

    /// The minimized complete DFA of the denoted language, via the position
    /// (Glushkov) automaton and the subset construction.
    pub fn to_dfa(&self, alphabet: &Alphabet) -> Dfa {
        glushkov(&self.expand_powers(), alphabet).determinize().minimize()
    }

    /// Renders the expression in the grammar accepted by [`parse_regex`];
    /// reparsing yields a structurally equal tree.
    pub fn print(&self, alphabet: &Alphabet) -> String {
        let mut out = String::new();
        self.print_prec(alphabet, 0, &mut out);
        out
    }

    // Precedence levels: 0 union, 1 concat, 2 postfix/atom. A child printed
    // at a level below `min` gets parentheses; left operands of the binary
    // nodes require strictly tighter children so that right-nested trees
    // print without parentheses and reparse identically.
    fn print_prec(&self, alphabet: &Alphabet, min: u8, out: &mut String) {
        let level = match self {
            Regex::Union(..) => 0,
            Regex::Concat(..) => 1,
            _ => 2,
        };
        let paren = level < min;
        if paren {
            out.push('(');
        }
        match self {
            Regex::Empty => out.push('∅'),
            Regex::Epsilon => out.push_str("()"),
            Regex::Letter(s) => {
                let name = alphabet.name(*s);
                if name.chars().count() == 1 {
                    out.push_str(name);
                } else {
                    out.push('\'');
                    out.push_str(name);
                    out.push('\'');
                }
            }
            Regex::Union(l, r) => {
                l.print_prec(alphabet, 1, out);
                out.push('|');
                r.print_prec(alphabet, 0, out);
            }
            Regex::Concat(l, r) => {
                l.print_prec(alphabet, 2, out);
                r.print_prec(alphabet, 1, out);
            }
            Regex::Star(i) => {
                i.print_prec(alphabet, 2, out);
                out.push('*');
            }
            Regex::Power(i, e) => {
                i.print_prec(alphabet, 2, out);
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
        if paren {
            out.push(')');
        }
    }
}

/// Parses a regular expression over the given alphabet.
pub fn parse_regex(text: &str, alphabet: &Alphabet) -> Result<Regex> {
    let mut p = Parser {
        chars: text.char_indices().collect(),
        pos: 0,
        alphabet,
    };
    p.skip_ws();
    let r = p.parse_union()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(r)
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    alphabet: &'a Alphabet,
}

impl<'a> Parser<'a> {
    fn byte_pos(&self) -> usize {
        self.chars.get(self.pos).map_or_else(
            || self.chars.last().map_or(0, |&(b, c)| b + c.len_utf8()),
            |&(b, _)| b,
        )
    }

    fn err(&self, message: &str) -> Error {
        Error::ParseRegex {
            position: self.byte_pos(),
            message: message.to_string(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn parse_union(&mut self) -> Result<Regex> {
        let left = self.parse_concat()?;
        self.skip_ws();
        if matches!(self.peek(), Some('|') | Some('∪')) {
            self.bump();
            self.skip_ws();
            let right = self.parse_union()?;
            return Ok(Regex::union(left, right));
        }
        Ok(left)
    }

    fn parse_concat(&mut self) -> Result<Regex> {
        let first = self.parse_postfix()?;
        self.skip_ws();
        if self.starts_atom() {
            let rest = self.parse_concat()?;
            return Ok(Regex::concat(first, rest));
        }
        Ok(first)
    }

    fn starts_atom(&self) -> bool {
        match self.peek() {
            Some('(') | Some('\'') | Some('∅') => true,
            Some(c) => !matches!(c, ')' | '|' | '∪' | '*' | '^') && !c.is_whitespace(),
            None => false,
        }
    }

    fn parse_postfix(&mut self) -> Result<Regex> {
        let mut r = self.parse_atom()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.bump();
                    r = Regex::star(r);
                }
                Some('^') => {
                    self.bump();
                    self.skip_ws();
                    let mut digits = String::new();
                    while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                        digits.push(self.bump().unwrap());
                    }
                    if digits.is_empty() {
                        return Err(self.err("expected an exponent after '^'"));
                    }
                    let e: u32 = digits
                        .parse()
                        .map_err(|_| self.err("exponent out of range"))?;
                    r = Regex::power(r, e);
                }
                _ => break,
            }
        }
        Ok(r)
    }

    fn parse_atom(&mut self) -> Result<Regex> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.bump();
                self.skip_ws();
                if self.peek() == Some(')') {
                    self.bump();
                    return Ok(Regex::Epsilon);
                }
                let inner = self.parse_union()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.bump();
                Ok(inner)
            }
            Some('∅') => {
                self.bump();
                Ok(Regex::Empty)
            }
            Some('\'') => {
                self.bump();
                let mut name = String::new();
                loop {
                    match self.bump() {
                        Some('\'') => break,
                        Some(c) => name.push(c),
                        None => return Err(self.err("unterminated quoted letter name")),
                    }
                }
                let sym = self
                    .alphabet
                    .index_of(&name)
                    .ok_or(Error::UnknownLetter(name))?;
                Ok(Regex::Letter(sym))
            }
            Some(c) if !matches!(c, ')' | '|' | '∪' | '*' | '^') => {
                self.bump();
                let name = c.to_string();
                let sym = self
                    .alphabet
                    .index_of(&name)
                    .ok_or(Error::UnknownLetter(name))?;
                Ok(Regex::Letter(sym))
            }
            _ => Err(self.err("expected an atom")),
        }
    }
}

/// Position automaton of a power-free expression.
fn glushkov(r: &Regex, alphabet: &Alphabet) -> Nfa {
    struct Info {
        nullable: bool,
        first: Vec<usize>,
        last: Vec<usize>,
    }

    fn walk(
        r: &Regex,
        syms: &mut Vec<Symbol>,
        follow: &mut Vec<Vec<usize>>,
    ) -> Info {
        match r {
            Regex::Empty => Info { nullable: false, first: vec![], last: vec![] },
            Regex::Epsilon => Info { nullable: true, first: vec![], last: vec![] },
            Regex::Letter(s) => {
                let p = syms.len();
                syms.push(*s);
                follow.push(Vec::new());
                Info { nullable: false, first: vec![p], last: vec![p] }
            }
            Regex::Union(l, rr) => {
                let a = walk(l, syms, follow);
                let b = walk(rr, syms, follow);
                Info {
                    nullable: a.nullable || b.nullable,
                    first: [a.first, b.first].concat(),
                    last: [a.last, b.last].concat(),
                }
            }
            Regex::Concat(l, rr) => {
                let a = walk(l, syms, follow);
                let b = walk(rr, syms, follow);
                for &p in &a.last {
                    follow[p].extend_from_slice(&b.first);
                }
                let first = if a.nullable {
                    [a.first.clone(), b.first.clone()].concat()
                } else {
                    a.first.clone()
                };
                let last = if b.nullable {
                    [a.last, b.last].concat()
                } else {
                    b.last
                };
                Info { nullable: a.nullable && b.nullable, first, last }
            }
            Regex::Star(i) => {
                let a = walk(i, syms, follow);
                for &p in &a.last {
                    let firsts = a.first.clone();
                    follow[p].extend(firsts);
                }
                Info { nullable: true, first: a.first, last: a.last }
            }
            Regex::Power(..) => unreachable!("powers are expanded before construction"),
        }
    }

    let mut syms = Vec::new();
    let mut follow = Vec::new();
    let info = walk(r, &mut syms, &mut follow);

    let positions = syms.len();
    let mut nfa = Nfa::new(alphabet.clone(), positions + 1);
    nfa.add_initial(0);
    if info.nullable {
        nfa.add_final(0);
    }
    for &p in &info.first {
        nfa.add_transition(0, syms[p], p + 1);
    }
    for (p, succs) in follow.iter().enumerate() {
        for &q in succs {
            nfa.add_transition(p + 1, syms[q], q + 1);
        }
    }
    for &p in &info.last {
        nfa.add_final(p + 1);
    }
    nfa
}
