//! Exact `chi_d^t(C_n(1,3))` by feasibility search, compared with the closed form.
//!
//! ```text
//! cargo run --release --example exact_search -- 6 18
//! ```

use std::env;

use circulant_tdc::formulas::formula_tdc;
use circulant_tdc::solver::{tdc_number_exact, Budget, Feasibility};
use circulant_tdc::{CirculantGraph, Limits};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u32> = env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let (from, to) = match args.as_slice() {
        [] => (6, 16),
        [n] => (*n, *n),
        [a, b, ..] => (*a, *b),
    };
    let limits = Limits::from_env();
    for n in from..=to {
        let g = CirculantGraph::standard(n)?;
        let out = tdc_number_exact(&g, &Budget::default(), &limits)?;
        let formula = formula_tdc(n)?;
        println!(
            "n={n:>2}  formula={formula:>2}  exact={:>2}  bounds=[{} ({}), {} ({})]  nodes={}  {:.2}s",
            out.chi_dt.map_or("?".to_string(), |v| v.to_string()),
            out.lower_bound_used.value,
            out.lower_bound_used.source,
            out.upper_bound_used.value,
            out.upper_bound_used.source,
            out.nodes_explored,
            out.elapsed.as_secs_f64(),
        );
        for level in &out.levels {
            let verdict = match &level.outcome {
                Feasibility::Found(w) => format!("found {w}"),
                Feasibility::Infeasible => "infeasible".to_string(),
                Feasibility::BudgetExceeded => "budget exceeded".to_string(),
            };
            println!(
                "      l={:>2}: {verdict}  ({} nodes, {:.2}s)",
                level.ell,
                level.nodes,
                level.elapsed.as_secs_f64()
            );
        }
    }
    Ok(())
}
