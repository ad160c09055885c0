//! Print the explicit total dominator coloring of `C_n(1,3)` and verify it.
//!
//! ```text
//! cargo run --example construction -- 23
//! ```

use std::env;

use circulant_tdc::constructions::{construct_tdc, verify_plan};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: u32 = env::args().nth(1).map_or(Ok(13), |a| a.parse())?;
    let plan = construct_tdc(n)?;
    println!(
        "C_{n}(1,3), {:?}, k = {}, n mod 8 = {}",
        plan.source, plan.k, plan.residue
    );
    println!("L = {}", plan.packing_l);
    for set in &plan.tail_sets {
        println!("{} = {}", set.name, set.members);
    }
    println!("{}", plan.describe());
    if !plan.literal_overlaps.is_empty() {
        println!(
            "literal overlaps {:?}, moved {:?}",
            plan.literal_overlaps, plan.moved
        );
    }
    let v = verify_plan(&plan)?;
    println!(
        "{} classes (expected {}), TDC {}, packing ok {}",
        v.class_count, v.expected_classes, v.tdc, v.packing_ok
    );
    for (i, class) in v.report.classes.iter().enumerate() {
        println!("  CN(V_{}) = {}", i + 1, class.common_neighborhood);
    }
    Ok(())
}
