//! From a regular expression to a canonical automaton and back to text.
//!
//! The grammar has a power operator, so parameterized families read the
//! way they are written: `a(c*(a|b))^2` is the m = 5 member of
//! `a(c*(a|b))^(m-3)`.
//!
//! ```bash
//! cargo run --example regex_pipeline "a(c*(a|b))^2"
//! ```

use freelang::{classify, parse_regex, textfmt, Alphabet, Result};

fn main() -> Result<()> {
    let expr = std::env::args().nth(1).unwrap_or_else(|| "a(c*(a|b))^2".into());
    let sigma = Alphabet::of_chars("abc").unwrap();

    let re = parse_regex(&expr, &sigma)?;
    println!("parsed:      {expr}");
    println!("printed:     {}", re.print(&sigma));

    let d = re.to_dfa(&sigma);
    println!("κ:           {}", d.quotient_complexity());
    println!("classified:  {:?}", classify(&d));
    println!("words ≤ 4:   {}", {
        let words: Vec<String> = d.enumerate_language(4).iter().map(|w| sigma.render(w)).collect();
        if words.is_empty() { "(none)".into() } else { words.join(", ") }
    });

    let text = textfmt::print_dfa(&d);
    println!("\ncanonical transition table:\n{text}");
    let back = textfmt::parse_dfa(&text)?;
    println!("round trip structurally equal: {}", back == d);
    Ok(())
}
