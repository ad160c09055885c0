//! Cross-check formula, construction and exact search over a range and
//! print the machine-readable report.
//!
//! ```text
//! cargo run --release --example sweep_report -- 6 20 16
//! ```
//!
//! The arguments are the range and the largest `n` given to the exact search.

use std::env;

use circulant_tdc::report::{cmd_sweep, ChidtOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u32> = env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let (from, to, exact) = match args.as_slice() {
        [a, b, c] => (*a, *b, *c),
        [a, b] => (*a, *b, 0),
        _ => (6, 30, 16),
    };
    let report = cmd_sweep(from, to, Some(exact), &ChidtOptions::default())?;
    print!("{}", report.to_text());
    eprintln!("exit code would be {}", report.exit_code());
    Ok(())
}
