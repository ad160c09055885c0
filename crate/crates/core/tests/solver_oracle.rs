//! Cross-checks the pruned TDC search against plain enumeration of every
//! proper partition on small circulants.

use circulant_tdc::solver::{tdc_feasible, Budget, Feasibility};
use circulant_tdc::{CirculantGraph, Limits};

/// Adjacency built from scratch: `u ~ v` iff their cycle distance is a generator.
fn adjacency(n: usize, gens: &[usize]) -> Vec<Vec<bool>> {
    (0..n)
        .map(|u| {
            (0..n)
                .map(|v| {
                    let d = (u + n - v) % n;
                    u != v && gens.contains(&d.min(n - d))
                })
                .collect()
        })
        .collect()
}

fn is_tdc(adj: &[Vec<bool>], colors: &[usize], k: usize) -> bool {
    let n = colors.len();
    (0..n).all(|v| {
        (0..k).any(|c| {
            let mut members = (0..n).filter(|&u| colors[u] == c).peekable();
            members.peek().is_some() && members.all(|u| adj[v][u])
        })
    })
}

/// `feasible[k]` is true when some proper partition into exactly `k`
/// classes is a TDC.
fn feasible_counts(adj: &[Vec<bool>]) -> Vec<bool> {
    fn go(adj: &[Vec<bool>], v: usize, k: usize, colors: &mut Vec<usize>, out: &mut Vec<bool>) {
        let n = adj.len();
        if v == n {
            if !out[k] && is_tdc(adj, colors, k) {
                out[k] = true;
            }
            return;
        }
        for c in 0..=k {
            if (0..v).any(|u| colors[u] == c && adj[u][v]) {
                continue;
            }
            colors.push(c);
            go(adj, v + 1, k.max(c + 1), colors, out);
            colors.pop();
        }
    }
    let mut out = vec![false; adj.len() + 1];
    go(adj, 0, 0, &mut Vec::new(), &mut out);
    out
}

fn compare(n: u32, gens: &[usize]) {
    let gens: Vec<i64> = gens.iter().map(|&x| x as i64).collect();
    let g = CirculantGraph::from_generator_set(n, &gens).unwrap();
    let dists: Vec<usize> = g.connection_set().iter().map(|&d| d as usize).collect();
    let want = feasible_counts(&adjacency(n as usize, &dists));
    assert!(want.iter().any(|&f| f), "{g} has no TDC at all");
    for ell in 1..=n {
        let run = tdc_feasible(&g, ell, &Budget::unlimited(), &Limits::default()).unwrap();
        let got = match run.outcome {
            Feasibility::Found(ref c) => {
                assert_eq!(c.len(), ell as usize, "{g}, l = {ell}");
                true
            }
            Feasibility::Infeasible => false,
            Feasibility::BudgetExceeded => unreachable!("unlimited budget"),
        };
        assert_eq!(got, want[ell as usize], "{g}, l = {ell}");
    }
}

#[test]
fn standard_graphs_match_enumeration() {
    for n in 6..=11 {
        compare(n, &[1, 3]);
    }
}

#[test]
fn all_two_generator_graphs_up_to_nine() {
    for n in 4..=9u32 {
        for a in 1..=n as usize / 2 {
            for b in a + 1..=n as usize / 2 {
                compare(n, &[a, b]);
            }
        }
    }
}

#[test]
fn cycles_and_small_graphs() {
    for n in 3..=10 {
        compare(n, &[1]);
    }
    compare(5, &[1, 2]);
    compare(8, &[1, 2, 3]);
}

#[test]
fn seven_class_tdc_of_c18_checked_from_scratch() {
    let adj = adjacency(18, &[1, 3]);
    let classes: [&[usize]; 7] = [
        &[1, 3, 5, 7],
        &[2, 4, 6, 11, 13, 15],
        &[8],
        &[9],
        &[10, 12, 14, 16],
        &[17],
        &[18],
    ];
    let mut colors = vec![usize::MAX; 18];
    for (c, class) in classes.iter().enumerate() {
        for &v in *class {
            assert_eq!(colors[v - 1], usize::MAX, "{v} colored twice");
            colors[v - 1] = c;
        }
    }
    assert!(colors.iter().all(|&c| c != usize::MAX));
    for u in 0..18 {
        for v in 0..18 {
            assert!(
                !(adj[u][v] && colors[u] == colors[v]),
                "{} ~ {}",
                u + 1,
                v + 1
            );
        }
    }
    assert!(is_tdc(&adj, &colors, 7));
}
