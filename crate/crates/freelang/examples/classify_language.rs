//! Classify languages into the freeness classes.
//!
//! ```bash
//! cargo run --example classify_language
//! ```

use freelang::{classify, parse_regex, textfmt, Alphabet, Result};

fn main() -> Result<()> {
    let sigma = Alphabet::of_chars("ab").unwrap();

    let cases = [
        ("ab|ba", "an antichain of two words"),
        ("a|ab", "one word extends the other"),
        ("ab*a", "infinite but factor-free"),
        ("a*b", "prefix-free, not suffix-free"),
        ("(a|b)*", "everything"),
    ];
    for (expr, comment) in cases {
        let d = parse_regex(expr, &sigma)?.to_dfa(&sigma);
        let c = classify(&d);
        println!("{expr:10} ({comment})");
        println!(
            "  prefix {} suffix {} bifix {} factor {} subword {} finite {} κ {}",
            c.prefix_free,
            c.suffix_free,
            c.bifix_free,
            c.factor_free,
            c.subword_free,
            c.finite,
            d.quotient_complexity()
        );
    }

    // the same works for automata given as transition tables
    let table = "\
states 4
alphabet a b
initial 0
finals 2
1 3
3 2
3 3
3 3
";
    let d = textfmt::parse_dfa(table)?;
    println!("\nfrom a transition table ({} states):", d.state_count());
    println!("  {:?}", classify(&d));
    Ok(())
}
