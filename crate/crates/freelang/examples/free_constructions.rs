//! Structural facts about free languages, demonstrated on live automata.
//!
//! - adjoining a fresh letter makes any language suffix-free (aL),
//!   prefix-free (La), or factor-free (aLa);
//! - finite languages admit a quotient order in which every transition
//!   moves forward;
//! - in a subword-free language, quotients that can stand second in that
//!   order are reachable only by single letters.
//!
//! ```bash
//! cargo run --example free_constructions
//! ```

use freelang::freeness::{
    adjoin, check_second_quotient_letter_reachability, classify, topological_quotient_order,
    AdjoinMode,
};
use freelang::witness::{make_witness, WitnessFamily};
use freelang::{parse_regex, Alphabet, Result};

fn main() -> Result<()> {
    let sigma = Alphabet::binary();
    let messy = parse_regex("(a|b)*", &sigma)?.to_dfa(&sigma);
    println!("starting from Σ* (free in no sense):");
    for (mode, label) in [
        (AdjoinMode::PrefixLetter, "cL "),
        (AdjoinMode::SuffixLetter, "Lc "),
        (AdjoinMode::Both, "cLc"),
    ] {
        let fenced = adjoin(&messy, mode, "c")?;
        let c = classify(&fenced);
        println!(
            "  {label}: prefix {} suffix {} factor {} (κ = {})",
            c.prefix_free,
            c.suffix_free,
            c.factor_free,
            fenced.quotient_complexity()
        );
    }

    let pair = make_witness(WitnessFamily::SubwordBool { m: 5, n: 6 })?;
    let left = pair.left.minimize();
    let order = topological_quotient_order(&left)?;
    println!("\nquotient order of the subword-free witness (κ = 5): {order:?}");
    println!(
        "second-position quotients reachable only by letters: {}",
        check_second_quotient_letter_reachability(&left)?
    );
    Ok(())
}
