//! Alphabet-size impossibility, checked exhaustively.
//!
//! Subword-free languages are finite, so every quotient that must sit in
//! the second position of the quotient order is reachable only by single
//! letters — which is why the union bound mn-(m+n) needs m+n-3 letters.
//! This example confirms the claim at m = n = 4 by exhausting all pairs
//! over four letters (bound unattained) and over five (attained).
//!
//! ```bash
//! cargo run --example alphabet_impossibility
//! ```

use freelang::enumeration::{impossibility_check, FreenessKind};
use freelang::{BoolOp, Result};

fn main() -> Result<()> {
    for letters in [4usize, 5] {
        let impossible =
            impossibility_check(FreenessKind::Subword, BoolOp::Union, 4, 4, letters)?;
        println!(
            "subword-free union at m=n=4 over {letters} letters: bound 8 {}",
            if impossible { "UNATTAINABLE (confirmed exhaustively)" } else { "attained" }
        );
    }
    Ok(())
}
