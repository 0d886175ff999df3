//! Line-based text format for complete DFAs.
//!
//! ```text
//! # optional comments anywhere
//! states 4
//! alphabet a b
//! initial 0
//! finals 2
//! 1 3
//! 3 2
//! 3 3
//! 3 3
//! ```
//!
//! The header fixes the state count, the alphabet (display names in symbol
//! order), the initial state, and the final states; then one line per state
//! lists the transition targets in alphabet order. [`print_dfa`] emits the
//! canonical rendering (no comments, single spaces, `\n` line ends), and
//! `parse_dfa(print_dfa(d))` reproduces `d` exactly; on canonical text,
//! `print_dfa(parse_dfa(t))` reproduces `t` byte for byte.

use crate::alphabet::Alphabet;
use crate::dfa::Dfa;
use crate::error::{Error, Result};

pub fn print_dfa(d: &Dfa) -> String {
    let mut out = String::new();
    out.push_str(&format!("states {}\n", d.state_count()));
    out.push_str("alphabet");
    for name in d.alphabet().names() {
        out.push(' ');
        out.push_str(name);
    }
    out.push('\n');
    out.push_str(&format!("initial {}\n", d.initial()));
    out.push_str("finals");
    for f in d.finals() {
        out.push_str(&format!(" {f}"));
    }
    out.push('\n');
    for s in 0..d.state_count() {
        let row: Vec<String> = d
            .alphabet()
            .symbols()
            .map(|sym| d.delta(s, sym).to_string())
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_dfa(text: &str) -> Result<Dfa> {
    let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    });

    let mut expect = |keyword: &str| -> Result<(usize, Vec<String>)> {
        let (line_no, line) = lines.next().ok_or_else(|| Error::ParseDfa {
            line: 0,
            message: format!("missing '{keyword}' line"),
        })?;
        let mut parts = line.split_whitespace();
        let head = parts.next().unwrap_or("");
        if head != keyword {
            return Err(Error::ParseDfa {
                line: line_no,
                message: format!("expected '{keyword}', found '{head}'"),
            });
        }
        Ok((line_no, parts.map(str::to_string).collect()))
    };

    let (line_no, args) = expect("states")?;
    let state_count: usize = parse_one(&args, line_no, "states")?;
    let (line_no, names) = expect("alphabet")?;
    let alphabet = Alphabet::new(names).map_err(|e| Error::ParseDfa {
        line: line_no,
        message: e.to_string(),
    })?;
    let (line_no, args) = expect("initial")?;
    let initial: usize = parse_one(&args, line_no, "initial")?;
    let (line_no, args) = expect("finals")?;
    let finals: Vec<usize> = args
        .iter()
        .map(|a| {
            a.parse::<usize>().map_err(|_| Error::ParseDfa {
                line: line_no,
                message: format!("bad state index '{a}'"),
            })
        })
        .collect::<Result<_>>()?;

    let k = alphabet.len();
    let mut transitions = Vec::with_capacity(state_count * k);
    let mut rows = 0usize;
    let mut last_line = line_no;
    for (line_no, line) in lines {
        last_line = line_no;
        if rows == state_count {
            return Err(Error::ParseDfa {
                line: line_no,
                message: format!("unexpected extra row (expected {state_count} state rows)"),
            });
        }
        let targets: Vec<usize> = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>().map_err(|_| Error::ParseDfa {
                    line: line_no,
                    message: format!("bad transition target '{t}'"),
                })
            })
            .collect::<Result<_>>()?;
        if targets.len() != k {
            return Err(Error::ParseDfa {
                line: line_no,
                message: format!("row has {} targets, expected {k}", targets.len()),
            });
        }
        transitions.extend(targets);
        rows += 1;
    }
    if rows != state_count {
        return Err(Error::ParseDfa {
            line: last_line,
            message: format!("found {rows} state rows, expected {state_count}"),
        });
    }
    Dfa::new(alphabet, state_count, transitions, initial, finals).map_err(|e| Error::ParseDfa {
        line: last_line,
        message: e.to_string(),
    })
}

/// DFAs serialize as their text-format rendering, so JSON reports embed
/// automata that the `classify`/`op` commands can read back.
impl serde::Serialize for Dfa {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&print_dfa(self))
    }
}

impl<'de> serde::Deserialize<'de> for Dfa {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_dfa(&text).map_err(serde::de::Error::custom)
    }
}

fn parse_one(args: &[String], line: usize, keyword: &str) -> Result<usize> {
    if args.len() != 1 {
        return Err(Error::ParseDfa {
            line,
            message: format!("'{keyword}' expects exactly one argument"),
        });
    }
    args[0].parse().map_err(|_| Error::ParseDfa {
        line,
        message: format!("bad number '{}'", args[0]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    #[test]
    fn round_trip_is_bit_exact() {
        let sigma = Alphabet::of_chars("ab").unwrap();
        let d = Dfa::from_words(
            sigma.clone(),
            [&sigma.word("ab").unwrap(), &sigma.word("ba").unwrap()],
        )
        .unwrap();
        let text = print_dfa(&d);
        let back = parse_dfa(&text).unwrap();
        assert_eq!(back, d);
        assert_eq!(print_dfa(&back), text);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "# a tiny automaton\nstates 2\nalphabet a\n\ninitial 0\nfinals 1 # the ε state? no: accepts 'a'\n1\n1\n";
        let d = parse_dfa(text).unwrap();
        assert_eq!(d.state_count(), 2);
        assert!(d.accepts(&d.alphabet().word("a").unwrap()).unwrap());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let text = "states 2\nalphabet a\ninitial 0\nfinals 1\n1\n"; // missing one row
        match parse_dfa(text) {
            Err(Error::ParseDfa { line, .. }) => assert_eq!(line, 5),
            other => panic!("expected parse error, got {other:?}"),
        }
        let text = "states 2\nalphabet a\ninitial 0\nfinals 1\n1 1\n1\n";
        match parse_dfa(text) {
            Err(Error::ParseDfa { line, message }) => {
                assert_eq!(line, 5);
                assert!(message.contains("targets"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn empty_finals_line_round_trips() {
        let d = Dfa::empty(Alphabet::binary());
        let text = print_dfa(&d);
        assert!(text.contains("finals\n"));
        assert_eq!(parse_dfa(&text).unwrap(), d);
    }
}
