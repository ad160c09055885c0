//! Reduce `C_n(a,b)` to `C_n(1,c)` and check the relabeling is an isomorphism.
//!
//! ```text
//! cargo run --example reduction -- 11 4 1
//! ```

use std::env;

use circulant_tdc::formulas::formula_tdc_general;
use circulant_tdc::graph::{reduce_to_standard, verify_isomorphism};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<i64> = env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let (n, a, b) = match args.as_slice() {
        [n, a, b] => (u32::try_from(*n)?, *a, *b),
        _ => (7, 2, 6),
    };
    let red = reduce_to_standard(n, a, b)?;
    let source = red.source_graph()?;
    let target = red.target_graph()?;
    println!("{source} -> {target}");
    println!(
        "a^-1 = {} (mod {n}), a^-1 b = {} (mod {n})",
        red.a_inverse, red.residue
    );
    for x in 1..=n {
        println!("  {x:>3} -> {}", red.vertex_map.apply(x));
    }
    println!(
        "isomorphism verified: {}",
        verify_isomorphism(&source, &target, &red.vertex_map)?
    );
    match formula_tdc_general(n, a, b) {
        Ok(f) => println!("chi_d^t = {} ({:?})", f.value, f.congruence),
        Err(e) => println!("no closed form: {e}"),
    }
    Ok(())
}
