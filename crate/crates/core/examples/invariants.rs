//! Brute-force independence, open packing, total domination and chromatic
//! numbers of a circulant, next to the closed forms where they apply.
//!
//! ```text
//! cargo run --release --example invariants -- 12        # C_12(1,3)
//! cargo run --release --example invariants -- 12 1 5    # C_12(1,5)
//! ```

use std::env;

use circulant_tdc::invariants::{
    chromatic_number_oracle, independence_number_oracle, open_packing_number_oracle,
    total_domination_number_oracle,
};
use circulant_tdc::{CirculantGraph, Limits};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<i64> = env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let g = match args.as_slice() {
        [] => CirculantGraph::standard(12)?,
        [n] => CirculantGraph::standard(u32::try_from(*n)?)?,
        [n, gens @ ..] => CirculantGraph::from_generator_set(u32::try_from(*n)?, gens)?,
    };
    let limits = Limits::from_env();
    println!(
        "{g}: {}-regular, {} edges",
        g.expected_degree(),
        g.edge_count()
    );
    let oracles = [
        independence_number_oracle,
        open_packing_number_oracle,
        total_domination_number_oracle,
        chromatic_number_oracle,
    ];
    for oracle in oracles {
        match oracle(&g, &limits) {
            Ok(v) => println!(
                "{:>8}: oracle {:?}, closed form {:?}, agree {:?}, witness {}",
                v.name.symbol(),
                v.oracle,
                v.closed_form,
                v.agree,
                serde_json::to_string(&v.witness)?
            ),
            Err(e) => println!("refused: {e}"),
        }
    }
    Ok(())
}
