//! Subword-free boolean witnesses and their alphabet appetite.
//!
//! The subword-free pair needs m+n-3 letters to reach the union bound —
//! smaller alphabets provably cannot. Intersection stays tight after four
//! letters are dropped, difference after three.
//!
//! ```bash
//! cargo run --example subword_alphabet
//! ```

use freelang::witness::{make_witness, verify_witness, WitnessFamily};
use freelang::{textfmt, Result};

fn main() -> Result<()> {
    let (m, n) = (5, 6);
    let family = WitnessFamily::SubwordBool { m, n };
    let pair = make_witness(family)?;
    println!(
        "operands over {} letters ({}):",
        pair.left.alphabet().len(),
        pair.left
            .alphabet()
            .names()
            .collect::<Vec<_>>()
            .join(" ")
    );
    println!("{}", textfmt::print_dfa(&pair.left));

    for report in verify_witness(family)? {
        println!("{}", report.render_text());
    }

    // the one-letter members are what forces the alphabet to grow: every
    // second-position quotient must be reached by a single letter
    let sample: Vec<String> = pair
        .left
        .enumerate_language(2)
        .iter()
        .map(|w| pair.left.alphabet().render(w))
        .collect();
    println!("\nshort members of the left operand: {}", sample.join(", "));
    Ok(())
}
