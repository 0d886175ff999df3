//! Product and star complexities for free languages.
//!
//! Bifix-free operands keep concatenation cheap (m+n-2, unary witnesses
//! suffice) and star even cheaper (n-1, binary witnesses).
//!
//! ```bash
//! cargo run --example product_star
//! ```

use freelang::witness::{verify_witness, WitnessFamily};
use freelang::{Alphabet, Dfa, Result, Word};

fn main() -> Result<()> {
    println!("product of unary subword-free blocks:");
    for (m, n) in [(4, 4), (4, 5), (6, 8)] {
        for report in verify_witness(WitnessFamily::UnaryProduct { m, n })? {
            println!("  {}", report.render_text());
        }
    }

    println!("\nstar of a^(n-2) over {{a,b}}:");
    for n in 4..=8 {
        for report in verify_witness(WitnessFamily::BinaryStar { n })? {
            println!("  {}", report.render_text());
        }
    }

    // over a one-letter alphabet the star drops lower still: (a^(n-2))*
    // has n-2 quotients
    println!("\nstar over the unary alphabet:");
    for n in 4..=8 {
        let w = Word::from_symbols(vec![0; n - 2]);
        let d = Dfa::from_words(Alphabet::unary(), [&w])?;
        println!("  κ = {n}: κ(L*) = {}", d.star().quotient_complexity());
    }
    Ok(())
}
