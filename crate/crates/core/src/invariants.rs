//! Independence, open packing, total domination and chromatic numbers:
//! closed forms for `C_n(1,3)` and brute-force oracles for any circulant.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::coloring::{is_proper, Coloring};
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::graph::CirculantGraph;
use crate::masks::{self, bit, full, ones};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InvariantKind {
    Independence,
    OpenPacking,
    TotalDomination,
    Chromatic,
}

impl InvariantKind {
    pub fn symbol(self) -> &'static str {
        match self {
            Self::Independence => "alpha",
            Self::OpenPacking => "rho_o",
            Self::TotalDomination => "gamma_t",
            Self::Chromatic => "chi",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Set(VertexSet),
    Coloring(Coloring),
}

/// One invariant with whichever of its closed form and oracle value are known.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantValue {
    pub name: InvariantKind,
    pub closed_form: Option<u32>,
    pub oracle: Option<u32>,
    pub witness: Option<Witness>,
    /// Whether the witness passed its defining predicate.
    pub witness_valid: Option<bool>,
    /// `closed_form == oracle` when both are present.
    pub agree: Option<bool>,
}

impl InvariantValue {
    pub fn closed_form_only(name: InvariantKind, value: u32) -> Self {
        Self {
            name,
            closed_form: Some(value),
            oracle: None,
            witness: None,
            witness_valid: None,
            agree: None,
        }
    }

    fn from_oracle(
        name: InvariantKind,
        closed_form: Option<u32>,
        oracle: u32,
        witness: Witness,
        valid: bool,
    ) -> Self {
        Self {
            name,
            agree: closed_form.map(|c| c == oracle),
            closed_form,
            oracle: Some(oracle),
            witness: Some(witness),
            witness_valid: Some(valid),
        }
    }

    pub fn witness_set(&self) -> Option<&VertexSet> {
        match &self.witness {
            Some(Witness::Set(s)) => Some(s),
            _ => None,
        }
    }
}

fn require(what: &'static str, n: u32, min: u32) -> Result<()> {
    if n < min {
        Err(Error::OutOfRange { what, n, min })
    } else {
        Ok(())
    }
}

fn within_limit(what: &'static str, g: &CirculantGraph, limits: &Limits) -> Result<()> {
    if g.n() > limits.oracle {
        Err(Error::LimitExceeded {
            what,
            n: g.n(),
            limit: limits.oracle,
        })
    } else {
        Ok(())
    }
}

/// True when `g` is `C_n(1,3)` read with set semantics (so also `C_4(1)`, `C_5(1,2)`).
fn is_c13(g: &CirculantGraph) -> bool {
    CirculantGraph::standard(g.n()).is_ok_and(|s| s.connection_set() == g.connection_set())
}

/// `alpha(C_n(1,3))`: `n/2` for even `n`, `(n-3)/2` for odd `n`; `n >= 4`.
pub fn independence_number_formula(n: u32) -> Result<u32> {
    require("independence number formula", n, 4)?;
    Ok(if n.is_multiple_of(2) {
        n / 2
    } else {
        (n - 3) / 2
    })
}

/// `rho_o(C_n(1,3))`; `n >= 3`.
pub fn open_packing_number_formula(n: u32) -> Result<u32> {
    require("open packing number formula", n, 3)?;
    Ok(match n {
        3..=6 => n / 3,
        _ if matches!(n % 8, 4 | 6) => n / 4 - 1,
        _ => n / 4,
    })
}

/// `gamma_t(C_n(1,3))`: `ceil(n/4) + 1` if `n = 2, 4 (mod 8)`, else `ceil(n/4)`; `n >= 4`.
pub fn total_domination_number_formula(n: u32) -> Result<u32> {
    require("total domination number formula", n, 4)?;
    let base = n.div_ceil(4);
    Ok(if matches!(n % 8, 2 | 4) {
        base + 1
    } else {
        base
    })
}

pub fn is_independent(g: &CirculantGraph, s: &VertexSet) -> bool {
    s.iter().all(|v| g.neighbors(v).is_disjoint(s))
}

pub fn is_open_packing(g: &CirculantGraph, s: &VertexSet) -> bool {
    let members = s.to_vec();
    members.iter().enumerate().all(|(i, &u)| {
        members[i + 1..]
            .iter()
            .all(|&v| g.neighbors(u).is_disjoint(g.neighbors(v)))
    })
}

pub fn is_total_dominating(g: &CirculantGraph, s: &VertexSet) -> bool {
    g.vertices().all(|v| g.neighbors(v).intersection_len(s) > 0)
}

/// Maximum independent set by exhaustive search; the witness is the
/// lexicographically least optimum.
pub fn independence_number_oracle(g: &CirculantGraph, limits: &Limits) -> Result<InvariantValue> {
    within_limit("independence number oracle", g, limits)?;
    let best = masks::max_independent(g.n(), &g.neighbor_masks());
    let witness = masks::to_set(g.n(), best);
    let closed = (is_c13(g) && g.n() >= 4)
        .then(|| independence_number_formula(g.n()).ok())
        .flatten();
    let valid = is_independent(g, &witness);
    Ok(InvariantValue::from_oracle(
        InvariantKind::Independence,
        closed,
        best.count_ones(),
        Witness::Set(witness),
        valid,
    ))
}

/// Maximum open packing by exhaustive search over the conflict graph.
pub fn open_packing_number_oracle(g: &CirculantGraph, limits: &Limits) -> Result<InvariantValue> {
    within_limit("open packing number oracle", g, limits)?;
    let conflicts = masks::packing_conflicts(&g.neighbor_masks());
    let best = masks::max_independent(g.n(), &conflicts);
    let witness = masks::to_set(g.n(), best);
    let closed = is_c13(g)
        .then(|| open_packing_number_formula(g.n()).ok())
        .flatten();
    let valid = is_open_packing(g, &witness);
    Ok(InvariantValue::from_oracle(
        InvariantKind::OpenPacking,
        closed,
        best.count_ones(),
        Witness::Set(witness),
        valid,
    ))
}

/// Minimum total dominating set, searched by increasing cardinality.
pub fn total_domination_number_oracle(
    g: &CirculantGraph,
    limits: &Limits,
) -> Result<InvariantValue> {
    within_limit("total domination number oracle", g, limits)?;
    let best = min_total_dominating(g)?;
    let witness = masks::to_set(g.n(), best);
    let closed = (is_c13(g) && g.n() >= 4)
        .then(|| total_domination_number_formula(g.n()).ok())
        .flatten();
    let valid = is_total_dominating(g, &witness);
    Ok(InvariantValue::from_oracle(
        InvariantKind::TotalDomination,
        closed,
        best.count_ones(),
        Witness::Set(witness),
        valid,
    ))
}

pub(crate) fn min_total_dominating(g: &CirculantGraph) -> Result<u64> {
    if g.has_isolated_vertex() {
        return Err(Error::IsolatedVertex);
    }
    let n = g.n() as usize;
    let nbr = g.neighbor_masks();
    let all = full(g.n());
    let max_gain = g.max_degree() as u32;
    // suffix[i]: vertices with a neighbor among labels i+1..=n.
    let mut suffix = vec![0u64; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] | nbr[i];
    }

    struct Ctx<'a> {
        nbr: &'a [u64],
        suffix: &'a [u64],
        all: u64,
        max_gain: u32,
        n: usize,
    }
    fn go(cx: &Ctx, from: usize, left: u32, chosen: u64, covered: u64) -> Option<u64> {
        let open = cx.all & !covered;
        if open == 0 {
            return Some(chosen);
        }
        if left == 0 || open.count_ones() > cx.max_gain * left || open & !cx.suffix[from] != 0 {
            return None;
        }
        (from..cx.n).find_map(|w| go(cx, w + 1, left - 1, chosen | bit(w), covered | cx.nbr[w]))
    }
    let cx = Ctx {
        nbr: &nbr,
        suffix: &suffix,
        all,
        max_gain,
        n,
    };
    for k in 1..=n as u32 {
        if let Some(set) = go(&cx, 0, k, 0, 0) {
            return Ok(set);
        }
    }
    unreachable!("the full vertex set is total dominating when no vertex is isolated")
}

/// Chromatic number by backtracking from a clique lower bound.
pub fn chromatic_number_oracle(g: &CirculantGraph, limits: &Limits) -> Result<InvariantValue> {
    within_limit("chromatic number oracle", g, limits)?;
    let (chi, coloring) = chromatic(g);
    let valid = is_proper(g, &coloring)? && coloring.len() == chi as usize;
    Ok(InvariantValue::from_oracle(
        InvariantKind::Chromatic,
        None,
        chi,
        Witness::Coloring(coloring),
        valid,
    ))
}

pub(crate) fn chromatic(g: &CirculantGraph) -> (u32, Coloring) {
    let n = g.n() as usize;
    let nbr = g.neighbor_masks();
    // A clique is an independent set of the complement.
    let complement: Vec<u64> = (0..n).map(|v| full(g.n()) & !nbr[v] & !bit(v)).collect();
    let clique = masks::max_independent(g.n(), &complement).count_ones();

    fn go(nbr: &[u64], classes: &mut Vec<u64>, k: usize, v: usize, colors: &mut [usize]) -> bool {
        if v == nbr.len() {
            return true;
        }
        let used = classes.len();
        for c in 0..used.min(k) {
            if classes[c] & nbr[v] == 0 {
                classes[c] |= bit(v);
                colors[v] = c;
                if go(nbr, classes, k, v + 1, colors) {
                    return true;
                }
                classes[c] &= !bit(v);
            }
        }
        if used < k {
            classes.push(bit(v));
            colors[v] = used;
            if go(nbr, classes, k, v + 1, colors) {
                return true;
            }
            classes.pop();
        }
        false
    }
    for k in clique.max(1) as usize..=n {
        let mut colors = vec![0; n];
        if go(&nbr, &mut Vec::new(), k, 0, &mut colors) {
            return (k as u32, Coloring::from_assignment(&colors));
        }
    }
    unreachable!("n colors always suffice")
}

/// How many maximum open packings induce a given subgraph shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PackingShape {
    pub edges: u32,
    pub isolated_vertices: u32,
    pub count: u64,
}

/// Induced-subgraph shapes of every maximum open packing of `C_n(1,3)`,
/// checked against the expected `floor(n/8)` edges plus one isolated vertex
/// exactly when `n = 5, 7 (mod 8)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OpenPackingStructure {
    pub n: u32,
    pub packing_number: u32,
    pub packings: u64,
    pub expected_edges: u32,
    pub expected_isolated: u32,
    pub shapes: Vec<PackingShape>,
    pub violations: u64,
    /// Lexicographically first packing with an unexpected shape.
    pub first_violation: Option<VertexSet>,
    pub holds: bool,
}

pub fn max_open_packing_structure(
    g: &CirculantGraph,
    limits: &Limits,
) -> Result<OpenPackingStructure> {
    if !g.is_standard() {
        return Err(Error::NotStandard {
            what: "open packing structure",
            n: g.n(),
            set: g.set_label(),
        });
    }
    require("open packing structure", g.n(), 7)?;
    within_limit("open packing structure", g, limits)?;
    let n = g.n();
    let nbr = g.neighbor_masks();
    let conflicts = masks::packing_conflicts(&nbr);
    let rho = masks::max_independent(n, &conflicts).count_ones();
    let expected_edges = n / 8;
    let expected_isolated = u32::from(matches!(n % 8, 5 | 7));

    let mut shapes: BTreeMap<(u32, u32), u64> = BTreeMap::new();
    let mut packings = 0;
    let mut violations = 0;
    let mut first_violation = None;
    masks::for_each_independent_of_size(n, &conflicts, rho, &mut |set| {
        packings += 1;
        let mut edges = 0;
        let mut isolated = 0;
        for v in ones(set) {
            let inside = (nbr[v] & set).count_ones();
            edges += inside;
            if inside == 0 {
                isolated += 1;
            }
        }
        let edges = edges / 2;
        *shapes.entry((edges, isolated)).or_default() += 1;
        if (edges, isolated) != (expected_edges, expected_isolated) {
            violations += 1;
            first_violation.get_or_insert(set);
        }
    });
    Ok(OpenPackingStructure {
        n,
        packing_number: rho,
        packings,
        expected_edges,
        expected_isolated,
        shapes: shapes
            .into_iter()
            .map(|((edges, isolated_vertices), count)| PackingShape {
                edges,
                isolated_vertices,
                count,
            })
            .collect(),
        violations,
        first_violation: first_violation.map(|m| masks::to_set(n, m)),
        holds: violations == 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_circulant;

    fn c13(n: u32) -> CirculantGraph {
        CirculantGraph::standard(n).unwrap()
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn closed_forms() {
        assert_eq!(independence_number_formula(8), Ok(4));
        assert_eq!(independence_number_formula(9), Ok(3));
        assert_eq!(independence_number_formula(12), Ok(6));
        assert!(independence_number_formula(3).is_err());
        assert_eq!(open_packing_number_formula(12), Ok(2));
        assert_eq!(open_packing_number_formula(5), Ok(1));
        assert_eq!(open_packing_number_formula(16), Ok(4));
        assert_eq!(open_packing_number_formula(14), Ok(2));
        assert!(open_packing_number_formula(2).is_err());
        assert_eq!(total_domination_number_formula(10), Ok(4));
        assert_eq!(total_domination_number_formula(8), Ok(2));
        assert_eq!(total_domination_number_formula(12), Ok(4));
        assert!(total_domination_number_formula(3).is_err());
    }

    #[test]
    fn independence_oracle() {
        let v = independence_number_oracle(&c13(8), &lim()).unwrap();
        assert_eq!(v.oracle, Some(4));
        assert_eq!(v.agree, Some(true));
        assert_eq!(v.witness_valid, Some(true));
        let v = independence_number_oracle(&c13(9), &lim()).unwrap();
        assert_eq!((v.oracle, v.agree), (Some(3), Some(true)));
        let c4 = build_circulant(4, &[1]).unwrap();
        assert_eq!(
            independence_number_oracle(&c4, &lim()).unwrap().oracle,
            Some(2)
        );
    }

    #[test]
    fn lexicographic_witness() {
        // {1,3,5,7} is lexicographically before {2,4,6,8}.
        let v = independence_number_oracle(&c13(8), &lim()).unwrap();
        assert_eq!(v.witness_set().unwrap().to_vec(), vec![1, 3, 5, 7]);
        let v = open_packing_number_oracle(&c13(8), &lim()).unwrap();
        assert_eq!(v.witness_set().unwrap().to_vec(), vec![1, 2]);
    }

    #[test]
    fn open_packing_oracle() {
        let v = open_packing_number_oracle(&c13(14), &lim()).unwrap();
        assert_eq!(
            (v.oracle, v.agree, v.witness_valid),
            (Some(2), Some(true), Some(true))
        );
        let c3 = build_circulant(3, &[1]).unwrap();
        let v = open_packing_number_oracle(&c3, &lim()).unwrap();
        assert_eq!((v.oracle, v.agree), (Some(1), Some(true)));
    }

    #[test]
    fn total_domination_oracle() {
        let v = total_domination_number_oracle(&c13(8), &lim()).unwrap();
        assert_eq!(v.oracle, Some(2));
        assert_eq!(v.witness_set().unwrap().to_vec(), vec![1, 2]);
        let v = total_domination_number_oracle(&c13(10), &lim()).unwrap();
        assert_eq!((v.oracle, v.agree), (Some(4), Some(true)));
        let k4 = build_circulant(4, &[1, 2]).unwrap();
        let v = total_domination_number_oracle(&k4, &lim()).unwrap();
        assert_eq!((v.oracle, v.closed_form), (Some(2), None));
    }

    #[test]
    fn chromatic_oracle() {
        assert_eq!(
            chromatic_number_oracle(&c13(7), &lim()).unwrap().oracle,
            Some(4)
        );
        assert_eq!(
            chromatic_number_oracle(&c13(6), &lim()).unwrap().oracle,
            Some(2)
        );
        let v = chromatic_number_oracle(&c13(8), &lim()).unwrap();
        assert_eq!((v.oracle, v.witness_valid), (Some(2), Some(true)));
    }

    #[test]
    fn limits_are_enforced() {
        let g = c13(30);
        assert!(matches!(
            independence_number_oracle(&g, &lim()),
            Err(Error::LimitExceeded {
                limit: 24,
                n: 30,
                ..
            })
        ));
        assert!(independence_number_oracle(&g, &lim().with_oracle(30)).is_ok());
    }

    #[test]
    fn packing_structure_examples() {
        let s = max_open_packing_structure(&c13(16), &lim()).unwrap();
        assert!(s.holds);
        assert_eq!(
            s.shapes,
            vec![PackingShape {
                edges: 2,
                isolated_vertices: 0,
                count: 16
            }]
        );
        let s = max_open_packing_structure(&c13(13), &lim()).unwrap();
        assert!(s.holds && s.expected_isolated == 1);
        let s = max_open_packing_structure(&c13(15), &lim()).unwrap();
        assert_eq!(s.expected_edges, 1);
        assert!(s
            .shapes
            .iter()
            .any(|sh| (sh.edges, sh.isolated_vertices) == (1, 1)));
    }

    #[test]
    fn packing_structure_counterexample_n10() {
        let s = max_open_packing_structure(&c13(10), &lim()).unwrap();
        assert!(!s.holds);
        let w = s.first_violation.unwrap();
        assert!(is_open_packing(&c13(10), &w));
        assert_eq!(w.len(), 2);
    }
}
