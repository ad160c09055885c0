//! Exhaustive and sampled checks of structural facts about `C_n(1,3)`:
//! common-neighborhood sizes of pairs and triples, the class-size capacity
//! bound, mixed-parity independent sets, and large classes in even orders.

use serde::Serialize;

use crate::coloring::{
    class_size_capacity_check, common_neighborhood, is_tdc, random_greedy_coloring, Coloring,
};
use crate::error::{Error, Result};
use crate::graph::{circular_distance, CirculantGraph};
use crate::masks::{self, bit, ones};
use crate::vertex_set::VertexSet;
use crate::Vertex;

/// Outcome of one universally quantified check at one `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObservationCheck {
    pub name: &'static str,
    pub n: u32,
    pub cases: u64,
    pub violations: u64,
    pub first_violation: Option<String>,
    pub holds: bool,
}

impl ObservationCheck {
    fn new(name: &'static str, n: u32) -> Self {
        Self {
            name,
            n,
            cases: 0,
            violations: 0,
            first_violation: None,
            holds: true,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.violations += 1;
            self.holds = false;
            if self.first_violation.is_none() {
                self.first_violation = Some(describe());
            }
        }
    }
}

fn standard(what: &'static str, n: u32, min: u32) -> Result<CirculantGraph> {
    if n < min {
        return Err(Error::OutOfRange { what, n, min });
    }
    CirculantGraph::standard(n)
}

fn cn_size(g: &CirculantGraph, members: &[Vertex]) -> usize {
    let set = VertexSet::from_labels(g.n(), members.iter().copied());
    common_neighborhood(g, &set).map_or(0, |cn| cn.len())
}

/// Expected `|CN({u,v})|` from the cycle distance: 3, 2, 1 for 2, 4, 6.
pub fn expected_pair_cn(distance: u32) -> usize {
    match distance {
        2 => 3,
        4 => 2,
        6 => 1,
        _ => 0,
    }
}

/// Expected `|CN({u,v,w})|` from the multiset of pairwise cycle distances.
pub fn expected_triple_cn(mut distances: [u32; 3]) -> usize {
    distances.sort_unstable();
    match distances {
        [2, 2, 4] => 2,
        [2, 4, 6] => 1,
        _ => 0,
    }
}

/// Every pair `u < v` of `C_n(1,3)`.
pub fn pair_common_neighbors(n: u32) -> Result<ObservationCheck> {
    let g = standard("pair common neighborhoods", n, 7)?;
    let mut check = ObservationCheck::new("pair_common_neighbors", n);
    for u in 1..=n {
        for v in u + 1..=n {
            let d = circular_distance(n, u, v);
            let got = cn_size(&g, &[u, v]);
            let want = expected_pair_cn(d);
            check.record(got == want, || {
                format!("{{{u},{v}}}: distance {d}, |CN| = {got}, expected {want}")
            });
        }
    }
    Ok(check)
}

/// Every triple `u < v < w` of `C_n(1,3)`.
pub fn triple_common_neighbors(n: u32) -> Result<ObservationCheck> {
    let g = standard("triple common neighborhoods", n, 7)?;
    let mut check = ObservationCheck::new("triple_common_neighbors", n);
    for u in 1..=n {
        for v in u + 1..=n {
            for w in v + 1..=n {
                let d = [
                    circular_distance(n, u, v),
                    circular_distance(n, v, w),
                    circular_distance(n, u, w),
                ];
                let got = cn_size(&g, &[u, v, w]);
                let want = expected_triple_cn(d);
                check.record(got == want, || {
                    format!("{{{u},{v},{w}}}: distances {d:?}, |CN| = {got}, expected {want}")
                });
            }
        }
    }
    Ok(check)
}

/// The capacity bound on `samples` greedy colorings over orders shuffled
/// with seeds `seed, seed + 1, ...`.
pub fn capacity_on_random_colorings(n: u32, samples: u32, seed: u64) -> Result<ObservationCheck> {
    let g = standard("class size capacity", n, 9)?;
    let mut check = ObservationCheck::new("class_size_capacity", n);
    for i in 0..samples as u64 {
        let c = random_greedy_coloring(&g, seed + i);
        let ok = class_size_capacity_check(&g, &c)?;
        check.record(ok, || format!("seed {}: {c}", seed + i));
    }
    Ok(check)
}

fn all_independent_sets(nbr: &[u64], visit: &mut dyn FnMut(u64)) {
    fn go(nbr: &[u64], cand: u64, cur: u64, visit: &mut dyn FnMut(u64)) {
        visit(cur);
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // Only extend with larger labels, so each set is visited once.
            go(nbr, rest & !nbr[v], cur | bit(v), visit);
        }
    }
    go(nbr, masks::full(nbr.len() as u32), 0, visit);
}

const ODD_LABELS: u64 = 0x5555_5555_5555_5555; // bit i <-> label i + 1

/// For even `n >= 8`: no independent set meeting both parities exceeds
/// `n/2 - 3`. Enumerates every independent set.
pub fn mixed_parity_independent_sets(n: u32) -> Result<ObservationCheck> {
    if n % 2 == 1 {
        return Err(Error::OutOfRange {
            what: "mixed parity bound (even n only)",
            n,
            min: 8,
        });
    }
    let g = standard("mixed parity bound", n, 8)?;
    let nbr = g.neighbor_masks();
    let bound = n / 2 - 3;
    let mut check = ObservationCheck::new("mixed_parity_independent_sets", n);
    all_independent_sets(&nbr, &mut |set| {
        if set & ODD_LABELS != 0 && set & !ODD_LABELS != 0 {
            let size = set.count_ones();
            check.record(size <= bound, || {
                format!("{} has {size} > {bound} vertices", masks::to_set(n, set))
            });
        }
    });
    Ok(check)
}

/// For even `n >= 18`: no proper coloring with a class of at least
/// `n/2 - 2` vertices is a TDC.
///
/// Every independent set of that size is tried as the large class. Its
/// strongest completion makes every other vertex a singleton (splitting a
/// class only enlarges the union of common neighborhoods), so checking
/// that completion covers all completions; `greedy_seeds` random greedy
/// completions are checked as well.
pub fn large_class_colorings(n: u32, greedy_seeds: u64) -> Result<ObservationCheck> {
    if n % 2 == 1 {
        return Err(Error::OutOfRange {
            what: "large class colorings (even n only)",
            n,
            min: 18,
        });
    }
    let g = standard("large class colorings", n, 18)?;
    let nbr = g.neighbor_masks();
    let alpha = masks::max_independent(n, &nbr).count_ones();
    let mut check = ObservationCheck::new("large_class_colorings", n);
    for size in n / 2 - 2..=alpha {
        let mut sets = Vec::new();
        masks::for_each_independent_of_size(n, &nbr, size, &mut |s| sets.push(s));
        for set in sets {
            let rest: Vec<Vertex> = ones(masks::full(n) & !set)
                .map(|i| i as Vertex + 1)
                .collect();
            let mut colorings = Vec::with_capacity(1 + greedy_seeds as usize);
            let mut classes = vec![masks::to_set(n, set)];
            classes.extend(rest.iter().map(|&v| VertexSet::from_labels(n, [v])));
            colorings.push(Coloring::from_sets(n, classes)?);
            for seed in 0..greedy_seeds {
                colorings.push(complete_greedily(&g, set, &rest, seed));
            }
            for c in colorings {
                let report = is_tdc(&g, &c)?;
                check.record(report.proper && !report.tdc, || {
                    if report.proper {
                        format!("{c} is a TDC")
                    } else {
                        format!("{c} is not proper")
                    }
                });
            }
        }
    }
    Ok(check)
}

fn complete_greedily(g: &CirculantGraph, large: u64, rest: &[Vertex], seed: u64) -> Coloring {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut order = rest.to_vec();
    order.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
    let rest_coloring = greedy_coloring_on(g, &order);
    let n = g.n();
    let mut classes = vec![masks::to_set(n, large)];
    classes.extend(rest_coloring);
    Coloring::from_sets(n, classes)
        .expect("large class plus a coloring of the rest partitions 1..=n")
}

fn greedy_coloring_on(g: &CirculantGraph, order: &[Vertex]) -> Vec<VertexSet> {
    let n = g.n();
    let mut classes: Vec<VertexSet> = Vec::new();
    for &v in order {
        match classes.iter_mut().find(|c| c.is_disjoint(g.neighbors(v))) {
            Some(c) => c.insert(v),
            None => classes.push(VertexSet::from_labels(n, [v])),
        }
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expected_values() {
        assert_eq!(expected_pair_cn(2), 3);
        assert_eq!(expected_pair_cn(5), 0);
        assert_eq!(expected_triple_cn([4, 2, 2]), 2);
        assert_eq!(expected_triple_cn([6, 2, 4]), 1);
        assert_eq!(expected_triple_cn([2, 2, 2]), 0);
    }

    #[test]
    fn pairs_and_triples_from_13() {
        for n in 13..=16 {
            assert!(pair_common_neighbors(n).unwrap().holds, "n = {n}");
            assert!(triple_common_neighbors(n).unwrap().holds, "n = {n}");
        }
    }

    #[test]
    fn wraparound_breaks_pairs_at_12() {
        // On C_12 the distance-6 pair {1,7} has CN {4,10}.
        let c = pair_common_neighbors(12).unwrap();
        assert!(!c.holds);
        assert_eq!(c.cases, 66);
    }

    #[test]
    fn capacity_samples() {
        let c = capacity_on_random_colorings(11, 50, 1).unwrap();
        assert!(c.holds && c.cases == 50);
    }

    #[test]
    fn mixed_parity() {
        for n in [8, 10, 12] {
            assert!(mixed_parity_independent_sets(n).unwrap().holds, "n = {n}");
        }
        assert!(mixed_parity_independent_sets(9).is_err());
    }

    #[test]
    fn large_classes_at_18() {
        let c = large_class_colorings(18, 2).unwrap();
        assert!(c.holds, "{:?}", c.first_violation);
        assert!(c.cases > 0);
    }
}
