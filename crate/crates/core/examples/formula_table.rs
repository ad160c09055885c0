//! Closed-form values as CSV.
//!
//! ```text
//! cargo run --example formula_table -- 6 40 > table.csv
//! ```

use std::env;

use circulant_tdc::formulas::FormulaTable;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = env::args().skip(1);
    let from: u32 = args.next().map_or(Ok(6), |a| a.parse())?;
    let to: u32 = args.next().map_or(Ok(40), |a| a.parse())?;
    print!("{}", FormulaTable::new(from..=to)?.to_csv());
    Ok(())
}
