//! Check a coloring given as JSON or one class per line against the total
//! dominator condition.
//!
//! ```text
//! cargo run --example verify_coloring -- 9 '[[1,8],[2,9],[3,5,7],[4,6]]'
//! ```

use std::env;

use circulant_tdc::coloring::is_tdc;
use circulant_tdc::coloring_file::parse_coloring;
use circulant_tdc::CirculantGraph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = env::args().skip(1);
    let n: u32 = args.next().map_or(Ok(18), |a| a.parse())?;
    let text = args
        .next()
        .unwrap_or_else(|| "1 3 5 7\n2 4 6 11 13 15\n8\n9\n10 12 14 16\n17\n18\n".into());
    let g = CirculantGraph::standard(n)?;
    let coloring = parse_coloring(n, &text)?;
    let report = is_tdc(&g, &coloring)?;
    println!(
        "{g}: {} classes, proper {}, TDC {}",
        report.class_count(),
        report.proper,
        report.tdc
    );
    for (i, c) in report.classes.iter().enumerate() {
        println!(
            "  V_{} = {:<20} CN = {}",
            i + 1,
            c.members.to_string(),
            c.common_neighborhood
        );
    }
    if !report.uncovered.is_empty() {
        println!("  uncovered: {:?}", report.uncovered);
    }
    Ok(())
}
