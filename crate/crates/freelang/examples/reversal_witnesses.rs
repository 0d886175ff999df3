//! Reversal witnesses: 2^(n-3)+2 instead of the 2^(n-2)+1 known for
//! prefix-free languages alone.
//!
//! For n ≥ 5 the factor-free witness is c·K·c where K is a binary core
//! with maximal reversal complexity, found here by exhaustive search. The
//! subword-free witness over 2^(n-3)-1 letters is a union of two-letter
//! words indexed by the non-empty subsets of {1..n-3}.
//!
//! ```bash
//! cargo run --example reversal_witnesses
//! ```

use freelang::witness::{make_witness, WitnessFamily};
use freelang::{enumeration, textfmt, Result};

fn main() -> Result<()> {
    println!("factor-free reversal witnesses over {{a,b,c}}:");
    for n in 3..=7 {
        let pair = make_witness(WitnessFamily::FactorReversal { n })?;
        let rev = pair.left.reverse().quotient_complexity();
        println!(
            "  n = {n}: κ(L) = {}, κ(L^R) = {rev} (bound 2^(n-3)+2 = {})",
            pair.left.quotient_complexity(),
            (1usize << (n - 3)) + 2
        );
    }

    println!("\nthe searched binary core for n = 6 (κ = 3, reversal κ = 8):");
    let core = enumeration::reversal_witness_search(2, 3)?.expect("core exists");
    println!("{}", textfmt::print_dfa(&core));

    println!("subword-free reversal witnesses:");
    for n in 4..=6 {
        let pair = make_witness(WitnessFamily::SubwordReversal { n })?;
        println!(
            "  n = {n}: {} letters, κ(L) = {}, κ(L^R) = {}",
            pair.left.alphabet().len(),
            pair.left.quotient_complexity(),
            pair.left.reverse().quotient_complexity()
        );
    }
    Ok(())
}
