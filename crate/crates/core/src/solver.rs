//! Exact total dominator chromatic number by feasibility search over the
//! number of classes.
//!
//! `tdc_feasible` decides whether a TDC with exactly `l` nonempty classes
//! exists. Vertices are colored in label order and a color may be opened
//! only after all smaller colors are in use, so each partition is visited
//! once. After every assignment the search checks that each vertex can
//! still totally dominate some class:
//!
//! * a used class `c` is still available to `w` while `V_c ⊆ N(w)`, i.e.
//!   `w ∈ CN(V_c)`; that set only shrinks as `V_c` grows;
//! * an unopened color is available to `w` only through an uncolored
//!   neighbor of `w`, and the vertices relying on unopened colors must be
//!   coverable by `l - used` neighborhoods of at most `max_degree` vertices.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::coloring::{is_tdc, Coloring};
use crate::config::Limits;
use crate::constructions::construct_tdc;
use crate::error::{Error, Result};
use crate::graph::CirculantGraph;
use crate::invariants::{chromatic, min_total_dominating};
use crate::masks::{bit, full};

/// Per-`l` search limits; whichever is hit first stops the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    #[serde(serialize_with = "ser_duration")]
    pub max_time: Option<Duration>,
}

fn ser_duration<S: serde::Serializer>(
    d: &Option<Duration>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match d {
        Some(d) => s.serialize_some(&d.as_secs_f64()),
        None => s.serialize_none(),
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_nodes: Some(100_000_000),
            max_time: Some(Duration::from_secs(300)),
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Self {
            max_nodes: None,
            max_time: None,
        }
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Self {
            max_nodes: Some(max_nodes),
            max_time: None,
        }
    }
}

/// Tri-state result of one feasibility search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "witness", rename_all = "snake_case")]
pub enum Feasibility {
    Found(Coloring),
    Infeasible,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FeasibilityRun {
    pub ell: u32,
    pub outcome: Feasibility,
    pub nodes: u64,
    #[serde(serialize_with = "ser_secs")]
    pub elapsed: Duration,
}

fn ser_secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

struct Search<'a> {
    n: usize,
    ell: usize,
    nbr: &'a [u64],
    all: u64,
    max_degree: u32,
    class: Vec<u64>,
    cn: Vec<u64>,
    colors: Vec<usize>,
    used: usize,
    uncolored: u64,
    nodes: u64,
    budget: Budget,
    start: Instant,
    out_of_budget: bool,
}

impl Search<'_> {
    fn over_budget(&mut self) -> bool {
        if self.out_of_budget {
            return true;
        }
        // The clock is read only every 4096 nodes.
        self.out_of_budget = self.budget.max_nodes.is_some_and(|m| self.nodes >= m)
            || (self.nodes.is_multiple_of(4096)
                && self
                    .budget
                    .max_time
                    .is_some_and(|t| self.start.elapsed() >= t));
        self.out_of_budget
    }

    /// Can every vertex still end up totally dominating some class?
    fn viable(&self) -> bool {
        let mut reachable = 0u64;
        for c in 0..self.used {
            reachable |= self.cn[c];
        }
        let needy = self.all & !reachable;
        if needy == 0 {
            return true;
        }
        let fresh = (self.ell - self.used) as u32;
        if fresh == 0 || needy.count_ones() > fresh * self.max_degree {
            return false;
        }
        // Each needy vertex needs an uncolored neighbor to seed a new class.
        let mut rest = needy;
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.nbr[w] & self.uncolored == 0 {
                return false;
            }
        }
        true
    }

    fn run(&mut self, v: usize) -> bool {
        if v == self.n {
            return self.used == self.ell;
        }
        self.nodes += 1;
        if self.over_budget() {
            return false;
        }
        let remaining_after = self.n - v - 1;
        let top = (self.used + 1).min(self.ell);
        for c in 0..top {
            if self.class[c] & self.nbr[v] != 0 {
                continue;
            }
            let opening = c == self.used;
            if self.ell - self.used - usize::from(opening) > remaining_after {
                continue;
            }
            let (old_class, old_cn) = (self.class[c], self.cn[c]);
            self.class[c] |= bit(v);
            self.cn[c] &= self.nbr[v];
            self.uncolored &= !bit(v);
            self.colors[v] = c;
            if opening {
                self.used += 1;
            }
            if self.viable() && self.run(v + 1) {
                return true;
            }
            if opening {
                self.used -= 1;
            }
            self.uncolored |= bit(v);
            self.class[c] = old_class;
            self.cn[c] = old_cn;
            if self.out_of_budget {
                return false;
            }
        }
        false
    }
}

fn check_search_order(g: &CirculantGraph, limits: &Limits) -> Result<()> {
    if g.n() > limits.solver {
        return Err(Error::LimitExceeded {
            what: "exact total dominator search",
            n: g.n(),
            limit: limits.solver,
        });
    }
    Ok(())
}

/// Searches for a TDC of `g` with exactly `ell` nonempty classes.
pub fn tdc_feasible(
    g: &CirculantGraph,
    ell: u32,
    budget: &Budget,
    limits: &Limits,
) -> Result<FeasibilityRun> {
    check_search_order(g, limits)?;
    if ell == 0 || ell > g.n() {
        return Err(Error::ColorCount { ell, n: g.n() });
    }
    let nbr = g.neighbor_masks();
    let n = g.n() as usize;
    let mut search = Search {
        n,
        ell: ell as usize,
        nbr: &nbr,
        all: full(g.n()),
        max_degree: g.max_degree() as u32,
        class: vec![0; ell as usize],
        cn: vec![full(g.n()); ell as usize],
        colors: vec![0; n],
        used: 0,
        uncolored: full(g.n()),
        nodes: 0,
        budget: *budget,
        start: Instant::now(),
        out_of_budget: false,
    };
    let found = search.run(0);
    let outcome = if found {
        let witness = Coloring::from_assignment(&search.colors);
        debug_assert!(is_tdc(g, &witness).is_ok_and(|r| r.tdc));
        Feasibility::Found(witness)
    } else if search.out_of_budget {
        Feasibility::BudgetExceeded
    } else {
        Feasibility::Infeasible
    };
    Ok(FeasibilityRun {
        ell,
        outcome,
        nodes: search.nodes,
        elapsed: search.start.elapsed(),
    })
}

/// A bound together with where it came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub value: u32,
    pub source: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    Exact,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub n: u32,
    pub status: SearchStatus,
    /// Present only when every smaller class count was refuted.
    pub chi_dt: Option<u32>,
    /// `[lo, hi]` known to contain `chi_d^t`.
    pub bracket: (u32, u32),
    pub witness: Option<Coloring>,
    pub chromatic: u32,
    pub total_domination: u32,
    pub lower_bound_used: Bound,
    pub upper_bound_used: Bound,
    pub levels: Vec<FeasibilityRun>,
    pub nodes_explored: u64,
    #[serde(serialize_with = "ser_secs")]
    pub elapsed: Duration,
}

/// `chi_d^t(g)`: refutes every class count from `max(chi, gamma_t)` up
/// and returns the first feasible one.
pub fn tdc_number_exact(
    g: &CirculantGraph,
    budget: &Budget,
    limits: &Limits,
) -> Result<SearchOutcome> {
    check_search_order(g, limits)?;
    if g.has_isolated_vertex() {
        return Err(Error::IsolatedVertex);
    }
    let start = Instant::now();
    let (chi, _) = chromatic(g);
    let gamma = min_total_dominating(g)?.count_ones();
    let lower = if chi >= gamma {
        Bound {
            value: chi,
            source: "chromatic".into(),
        }
    } else {
        Bound {
            value: gamma,
            source: "total_domination".into(),
        }
    };
    let mut upper = Bound {
        value: chi + gamma,
        source: "chromatic+total_domination".into(),
    };
    if g.is_standard() {
        let size = construct_tdc(g.n())?.class_count() as u32;
        if size < upper.value {
            upper = Bound {
                value: size,
                source: "construction".into(),
            };
        }
    }

    let mut levels = Vec::new();
    let mut outcome = SearchOutcome {
        n: g.n(),
        status: SearchStatus::BudgetExceeded,
        chi_dt: None,
        bracket: (lower.value, upper.value),
        witness: None,
        chromatic: chi,
        total_domination: gamma,
        lower_bound_used: lower.clone(),
        upper_bound_used: upper.clone(),
        levels: Vec::new(),
        nodes_explored: 0,
        elapsed: Duration::ZERO,
    };
    for ell in lower.value..=g.n() {
        let run = tdc_feasible(g, ell, budget, limits)?;
        outcome.nodes_explored += run.nodes;
        let result = run.outcome.clone();
        levels.push(run);
        match result {
            Feasibility::Found(witness) => {
                outcome.status = SearchStatus::Exact;
                outcome.chi_dt = Some(ell);
                outcome.bracket = (ell, ell);
                outcome.witness = Some(witness);
                break;
            }
            Feasibility::Infeasible => outcome.bracket.0 = ell + 1,
            Feasibility::BudgetExceeded => break,
        }
    }
    outcome.levels = levels;
    outcome.elapsed = start.elapsed();
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c13(n: u32) -> CirculantGraph {
        CirculantGraph::standard(n).unwrap()
    }

    fn feasible(n: u32, ell: u32) -> Feasibility {
        tdc_feasible(&c13(n), ell, &Budget::unlimited(), &Limits::default())
            .unwrap()
            .outcome
    }

    #[test]
    fn c9_needs_four() {
        assert_eq!(feasible(9, 3), Feasibility::Infeasible);
        let Feasibility::Found(w) = feasible(9, 4) else {
            panic!("expected a witness")
        };
        let r = is_tdc(&c13(9), &w).unwrap();
        assert!(r.tdc);
        assert_eq!(r.class_count(), 4);
    }

    #[test]
    fn c12_needs_six() {
        assert_eq!(feasible(12, 5), Feasibility::Infeasible);
    }

    #[test]
    fn exact_small() {
        for (n, want) in [(7, 4), (10, 4), (17, 7)] {
            let out = tdc_number_exact(&c13(n), &Budget::default(), &Limits::default()).unwrap();
            assert_eq!(out.chi_dt, Some(want), "n = {n}");
            assert!(out.lower_bound_used.value <= want && want <= out.upper_bound_used.value);
        }
    }

    #[test]
    fn budget_is_not_infeasibility() {
        let run = tdc_feasible(&c13(16), 5, &Budget::nodes(10), &Limits::default()).unwrap();
        assert_eq!(run.outcome, Feasibility::BudgetExceeded);
        let out = tdc_number_exact(&c13(16), &Budget::nodes(10), &Limits::default()).unwrap();
        assert_eq!(out.status, SearchStatus::BudgetExceeded);
        assert_eq!(out.chi_dt, None);
        assert!(out.bracket.0 <= 6 && out.bracket.1 >= 6);
    }

    #[test]
    fn rejects_bad_class_counts_and_orders() {
        let g = c13(9);
        assert!(matches!(
            tdc_feasible(&g, 0, &Budget::default(), &Limits::default()),
            Err(Error::ColorCount { .. })
        ));
        assert!(matches!(
            tdc_feasible(&c13(30), 3, &Budget::default(), &Limits::default()),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn works_off_the_standard_family() {
        // K_5 already needs five classes to be properly colored.
        let k5 = crate::graph::build_circulant(5, &[1, 2]).unwrap();
        let out = tdc_number_exact(&k5, &Budget::default(), &Limits::default()).unwrap();
        assert_eq!(out.chi_dt, Some(5));
    }
}
