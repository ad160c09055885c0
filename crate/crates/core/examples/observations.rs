//! Run the structural checks on `C_n(1,3)` that the lower bounds rely on.
//!
//! ```text
//! cargo run --release --example observations -- 20 7
//! ```
//!
//! The arguments are the largest `n` and the seed for random colorings.

use std::env;

use circulant_tdc::invariants::max_open_packing_structure;
use circulant_tdc::observations::{
    capacity_on_random_colorings, large_class_colorings, mixed_parity_independent_sets,
    pair_common_neighbors, triple_common_neighbors, ObservationCheck,
};
use circulant_tdc::{CirculantGraph, Limits};

fn show(c: &ObservationCheck) {
    println!(
        "  {:<30} n={:>2} cases={:>7} violations={:>5} {}",
        c.name,
        c.n,
        c.cases,
        c.violations,
        c.first_violation.as_deref().unwrap_or("")
    );
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = env::args().skip(1);
    let top: u32 = args.next().map_or(Ok(20), |a| a.parse())?;
    let seed: u64 = args.next().map_or(Ok(0), |a| a.parse())?;

    println!("class size capacity (500 random greedy colorings each, seed {seed})");
    for n in 9..=top.min(16) {
        show(&capacity_on_random_colorings(n, 500, seed)?);
    }
    println!("common neighborhoods of pairs and triples");
    for n in 12..=top {
        show(&pair_common_neighbors(n)?);
        show(&triple_common_neighbors(n)?);
    }
    println!("maximum open packings");
    for n in 7..=top {
        let s = max_open_packing_structure(&CirculantGraph::standard(n)?, &Limits::from_env())?;
        let shapes: Vec<String> = s
            .shapes
            .iter()
            .map(|sh| format!("{}e+{}i x{}", sh.edges, sh.isolated_vertices, sh.count))
            .collect();
        println!(
            "  n={n:>2} rho_o={} packings={} expected {}e+{}i, seen {}",
            s.packing_number,
            s.packings,
            s.expected_edges,
            s.expected_isolated,
            shapes.join(" ")
        );
    }
    println!("mixed parity independent sets");
    for n in (8..=top.min(16)).step_by(2) {
        show(&mixed_parity_independent_sets(n)?);
    }
    println!("colorings with a large class");
    for n in (18..=top).step_by(2) {
        show(&large_class_colorings(n, 8)?);
    }
    Ok(())
}
