//! Tight boolean-operation bounds for factor-free languages.
//!
//! Builds the ternary factor-free pair at chosen complexities and checks
//! that union, intersection, difference, and symmetric difference land
//! exactly on the class bounds.
//!
//! ```bash
//! cargo run --example boolean_bounds [m] [n]
//! ```

use freelang::witness::{verify_witness, WitnessFamily};
use freelang::Result;

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let m: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(5);
    let n: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(6);

    println!("factor-free operands over {{a,b,c}} with κ = {m} and κ = {n}\n");
    for report in verify_witness(WitnessFamily::TernaryFactorBool { m, n })? {
        println!("{}", report.render_text());
    }
    Ok(())
}
