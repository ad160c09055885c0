//! Explicit total dominator colorings of `C_n(1,3)` for every `n >= 6`
//! with exactly `formula_tdc(n)` classes.
//!
//! For `n >= 12` the classes are built from
//!
//! * the open packing `L = {8i+1, 8i+2 : 0 <= i < k}`, `k = floor(n/8)`,
//!   whose vertices become singleton classes,
//! * tail sets `A_1..A_6` drawn from `{n-7, ..., n}`,
//! * the parity leftovers built from `O` (odd labels) and `E` (even labels).
//!
//! For `n = 3, 5, 7 (mod 8)` some leftover classes are written as
//! `X ∪ {x}` where `x` also belongs to the other leftover (or to an
//! explicit class). Taken literally the classes overlap, so such an `x` is
//! moved: it is removed from every other leftover class. The plan keeps
//! both the literal overlaps and the moved vertices.

use serde::Serialize;

use crate::coloring::{is_tdc, Coloring, ColoringReport};
use crate::error::{Error, Result};
use crate::formulas::formula_tdc;
use crate::graph::CirculantGraph;
use crate::invariants::is_open_packing;
use crate::vertex_set::VertexSet;
use crate::Vertex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstructionSource {
    /// `n = 6`: the parity bipartition of `K_{3,3}`.
    Bipartition,
    /// `7 <= n <= 11`: fixed table.
    Table,
    /// `n >= 12`: the residue scheme mod 8.
    ResidueScheme,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedSet {
    pub name: String,
    pub members: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionPlan {
    pub n: u32,
    pub k: u32,
    pub residue: u32,
    pub source: ConstructionSource,
    pub packing_l: VertexSet,
    /// The `A_i` used by this residue, in listing order.
    pub tail_sets: Vec<NamedSet>,
    pub odd: VertexSet,
    pub even: VertexSet,
    /// Symbolic name of each class, parallel to `classes`.
    pub class_labels: Vec<String>,
    pub classes: Coloring,
    /// Vertices claimed by two classes under the literal set algebra.
    pub literal_overlaps: Vec<Vertex>,
    /// Vertices removed from a leftover class to resolve those overlaps.
    pub moved: Vec<Vertex>,
}

impl ConstructionPlan {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// `label = {..}` lines in listing order.
    pub fn describe(&self) -> String {
        self.class_labels
            .iter()
            .zip(self.classes.classes())
            .map(|(label, class)| {
                if label.starts_with('{') {
                    class.to_string()
                } else {
                    format!("{label} = {class}")
                }
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// One class of the residue scheme before overlap resolution.
struct Draft {
    label: String,
    base: VertexSet,
    added: VertexSet,
    leftover: bool,
}

impl Draft {
    fn fixed(label: impl Into<String>, set: VertexSet) -> Self {
        let n = set.universe();
        Self {
            label: label.into(),
            base: set,
            added: VertexSet::empty(n),
            leftover: false,
        }
    }

    fn leftover(label: impl Into<String>, base: VertexSet, added: &[Vertex]) -> Self {
        let n = base.universe();
        Self {
            label: label.into(),
            base,
            added: VertexSet::from_labels(n, added.iter().copied()),
            leftover: true,
        }
    }

    fn literal(&self) -> VertexSet {
        let mut s = self.base.clone();
        s.union_with(&self.added);
        s
    }
}

fn minus(base: &VertexSet, parts: &[&VertexSet]) -> VertexSet {
    let mut s = base.clone();
    for p in parts {
        s.difference_with(p);
    }
    s
}

fn table(n: u32) -> Option<&'static [&'static [Vertex]]> {
    Some(match n {
        7 => &[&[1], &[2, 7], &[3, 5], &[4, 6]],
        8 => &[&[1, 3, 5, 7], &[2, 4, 6, 8]],
        9 => &[&[1, 8], &[2, 9], &[3, 5, 7], &[4, 6]],
        10 => &[&[1], &[2], &[3, 5, 7, 9], &[4, 6, 8, 10]],
        11 => &[&[1, 3, 5], &[2, 11], &[7, 9], &[8, 10], &[4, 6]],
        _ => return None,
    })
}

pub fn construct_tdc(n: u32) -> Result<ConstructionPlan> {
    if n < 6 {
        return Err(Error::OutOfRange {
            what: "construction",
            n,
            min: 6,
        });
    }
    let k = n / 8;
    let packing_l = VertexSet::from_labels(n, (0..k).flat_map(|i| [8 * i + 1, 8 * i + 2]));
    let odd = VertexSet::from_labels(n, (1..=n).step_by(2));
    let even = VertexSet::from_labels(n, (2..=n).step_by(2));
    let mut plan = ConstructionPlan {
        n,
        k,
        residue: n % 8,
        source: ConstructionSource::ResidueScheme,
        packing_l,
        tail_sets: Vec::new(),
        class_labels: Vec::new(),
        classes: Coloring::from_assignment(&[]),
        odd,
        even,
        literal_overlaps: Vec::new(),
        moved: Vec::new(),
    };

    if n == 6 {
        plan.source = ConstructionSource::Bipartition;
        plan.class_labels = vec!["O".into(), "E".into()];
        plan.classes = Coloring::from_sets(n, vec![plan.odd.clone(), plan.even.clone()])?;
        return Ok(plan);
    }
    if let Some(rows) = table(n) {
        plan.source = ConstructionSource::Table;
        plan.classes = Coloring::from_classes(n, rows)?;
        plan.class_labels = plan
            .classes
            .classes()
            .iter()
            .map(|c| c.to_string())
            .collect();
        return Ok(plan);
    }

    let set = |labels: &[Vertex]| VertexSet::from_labels(n, labels.iter().copied());
    let a1 = set(&[n - 6, n - 4, n - 2, n]);
    let a2 = set(&[n - 7, n - 5, n - 3, n - 1]);
    let a3 = set(&[n - 6, n - 4, n - 2]);
    let a4 = set(&[n - 7, n - 5, n - 3]);
    let a5 = set(&[n - 6, n - 4]);
    let a6 = set(&[n - 7, n - 5]);
    let (l, o, e) = (&plan.packing_l, &plan.odd, &plan.even);

    let mut drafts: Vec<Draft> = l
        .iter()
        .map(|v| Draft::fixed(format!("{{{v}}}"), set(&[v])))
        .collect();
    let named = |i: usize, s: &VertexSet| NamedSet {
        name: format!("A_{i}"),
        members: s.clone(),
    };
    match n % 8 {
        0 => {
            drafts.push(Draft::leftover("O\\L", minus(o, &[l]), &[]));
            drafts.push(Draft::leftover("E\\L", minus(e, &[l]), &[]));
        }
        1 => {
            plan.tail_sets = vec![named(1, &a1)];
            drafts.push(Draft::fixed("A_1", a1.clone()));
            drafts.push(Draft::leftover("O\\(L∪A_1)", minus(o, &[l, &a1]), &[]));
            drafts.push(Draft::leftover("E\\L", minus(e, &[l]), &[]));
        }
        2 => {
            plan.tail_sets = vec![named(1, &a1), named(2, &a2)];
            drafts.push(Draft::fixed("A_1", a1.clone()));
            drafts.push(Draft::fixed("A_2", a2.clone()));
            drafts.push(Draft::leftover("O\\(L∪A_2)", minus(o, &[l, &a2]), &[]));
            drafts.push(Draft::leftover("E\\(L∪A_1)", minus(e, &[l, &a1]), &[]));
        }
        3 => {
            plan.tail_sets = vec![named(2, &a2), named(3, &a3)];
            drafts.push(Draft::fixed("A_2", a2.clone()));
            drafts.push(Draft::fixed("A_3", a3.clone()));
            drafts.push(Draft::leftover("O\\(L∪A_3)", minus(o, &[l, &a3]), &[]));
            drafts.push(Draft::leftover(
                "(E\\(L∪A_2))∪{n}",
                minus(e, &[l, &a2]),
                &[n],
            ));
        }
        4 => {
            plan.tail_sets = vec![named(3, &a3), named(4, &a4)];
            drafts.push(Draft::fixed("A_3", a3.clone()));
            drafts.push(Draft::fixed("A_4", a4.clone()));
            drafts.push(Draft::leftover("O\\(L∪A_4)", minus(o, &[l, &a4]), &[]));
            drafts.push(Draft::leftover("E\\(L∪A_3)", minus(e, &[l, &a3]), &[]));
        }
        5 => {
            plan.tail_sets = vec![named(4, &a4), named(5, &a5)];
            drafts.push(Draft::fixed("A_4", a4.clone()));
            drafts.push(Draft::fixed("A_5", a5.clone()));
            drafts.push(Draft::leftover(
                "(O\\(L∪A_5))∪{n-1}",
                minus(o, &[l, &a5]),
                &[n - 1],
            ));
            drafts.push(Draft::leftover(
                "(E\\(L∪A_4))∪{n-2,n}",
                minus(e, &[l, &a4]),
                &[n - 2, n],
            ));
        }
        6 => {
            plan.tail_sets = vec![named(5, &a5), named(6, &a6)];
            drafts.push(Draft::fixed("A_5", a5.clone()));
            drafts.push(Draft::fixed("A_6", a6.clone()));
            drafts.push(Draft::leftover("O\\(L∪A_6)", minus(o, &[l, &a6]), &[]));
            drafts.push(Draft::leftover("E\\(L∪A_5)", minus(e, &[l, &a5]), &[]));
        }
        _ => {
            plan.tail_sets = vec![named(6, &a6)];
            drafts.push(Draft::fixed("{n-6}", set(&[n - 6])));
            drafts.push(Draft::fixed("A_6", a6.clone()));
            drafts.push(Draft::leftover(
                "(O\\L)∪{n-3,n-1}",
                minus(o, &[l]),
                &[n - 3, n - 1],
            ));
            drafts.push(Draft::leftover(
                "(E\\(L∪A_6))∪{n-4,n-2,n}",
                minus(e, &[l, &a6]),
                &[n - 4, n - 2, n],
            ));
        }
    }

    let literal: Vec<VertexSet> = drafts.iter().map(Draft::literal).collect();
    plan.literal_overlaps = (1..=n)
        .filter(|&v| literal.iter().filter(|s| s.contains(v)).count() > 1)
        .collect();

    let mut moved = VertexSet::empty(n);
    let mut classes = Vec::with_capacity(drafts.len());
    for (i, draft) in drafts.iter().enumerate() {
        if !draft.leftover {
            classes.push(draft.base.clone());
            continue;
        }
        // Everything another class claims explicitly leaves this one.
        let mut claimed = VertexSet::empty(n);
        for (j, other) in drafts.iter().enumerate() {
            if j != i {
                claimed.union_with(if other.leftover {
                    &other.added
                } else {
                    &other.base
                });
            }
        }
        let mut class = draft.base.clone();
        let mut lost = class.clone();
        class.difference_with(&claimed);
        lost.difference_with(&class);
        moved.union_with(&lost);
        class.union_with(&draft.added);
        classes.push(class);
    }
    plan.moved = moved.to_vec();
    plan.class_labels = drafts.into_iter().map(|d| d.label).collect();
    plan.classes = Coloring::from_sets(n, classes)?;
    Ok(plan)
}

/// Verdict for one construction: the full report plus the checks on it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionVerdict {
    pub n: u32,
    pub expected_classes: u32,
    pub class_count: usize,
    pub tdc: bool,
    pub count_matches: bool,
    /// `L` is an open packing of size `2 floor(n/8)`.
    pub packing_ok: bool,
    pub verified: bool,
    pub report: ColoringReport,
}

pub fn verify_construction(n: u32) -> Result<ConstructionVerdict> {
    let plan = construct_tdc(n)?;
    verify_plan(&plan)
}

pub fn verify_plan(plan: &ConstructionPlan) -> Result<ConstructionVerdict> {
    let n = plan.n;
    let g = CirculantGraph::standard(n)?;
    let report = is_tdc(&g, &plan.classes)?;
    let expected = formula_tdc(n)?;
    let count_matches = plan.class_count() == expected as usize;
    let packing_ok =
        is_open_packing(&g, &plan.packing_l) && plan.packing_l.len() == 2 * plan.k as usize;
    Ok(ConstructionVerdict {
        n,
        expected_classes: expected,
        class_count: plan.class_count(),
        tdc: report.tdc,
        count_matches,
        packing_ok,
        verified: report.tdc && count_matches && packing_ok,
        report,
    })
}
