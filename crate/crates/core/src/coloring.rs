//! Colorings as lists of classes, common neighborhoods, and the total
//! dominator predicate.

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, PartitionError, Result};
use crate::graph::CirculantGraph;
use crate::vertex_set::VertexSet;
use crate::Vertex;

/// A partition of `1..=n` into nonempty classes `V_1, ..., V_l`.
#[derive(Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Coloring {
    #[serde(skip)]
    n: u32,
    classes: Vec<VertexSet>,
}

impl Coloring {
    /// Validates that `classes` partition `1..=n` with no empty class.
    pub fn new(n: u32, classes: Vec<Vec<i64>>) -> Result<Self> {
        let not_partition = |source| Error::NotPartition { n, source };
        let mut seen = VertexSet::empty(n);
        let mut sets = Vec::with_capacity(classes.len());
        for (i, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(not_partition(PartitionError::EmptyClass(i + 1)));
            }
            let mut set = VertexSet::empty(n);
            for &v in class {
                if v < 1 || v > n as i64 {
                    return Err(not_partition(PartitionError::OutOfRange { vertex: v, n }));
                }
                let v = v as Vertex;
                if seen.contains(v) {
                    return Err(not_partition(PartitionError::Repeated(v)));
                }
                seen.insert(v);
                set.insert(v);
            }
            sets.push(set);
        }
        if let Some(v) = (1..=n).find(|&v| !seen.contains(v)) {
            return Err(not_partition(PartitionError::Missing(v)));
        }
        Ok(Self { n, classes: sets })
    }

    /// Convenience for literal tables: `Coloring::from_classes(9, &[&[1, 8], &[2, 9], ...])`.
    pub fn from_classes(n: u32, classes: &[&[Vertex]]) -> Result<Self> {
        Self::new(
            n,
            classes
                .iter()
                .map(|c| c.iter().map(|&v| v as i64).collect())
                .collect(),
        )
    }

    pub fn from_sets(n: u32, classes: Vec<VertexSet>) -> Result<Self> {
        Self::new(
            n,
            classes
                .iter()
                .map(|c| c.iter().map(i64::from).collect())
                .collect(),
        )
    }

    /// Builds from a per-vertex color index (`colors[v - 1]`); classes are
    /// ordered by color index and unused indices are skipped.
    pub fn from_assignment(colors: &[usize]) -> Self {
        let n = colors.len() as u32;
        let count = colors.iter().copied().max().map_or(0, |m| m + 1);
        let mut classes = vec![VertexSet::empty(n); count];
        for (i, &c) in colors.iter().enumerate() {
            classes[c].insert(i as Vertex + 1);
        }
        classes.retain(|c| !c.is_empty());
        Self { n, classes }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    /// Number of classes `l`.
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(VertexSet::len).collect()
    }

    /// Classes reordered so that sizes are non-increasing (stable on ties).
    pub fn sorted_by_size(&self) -> Coloring {
        let mut classes = self.classes.clone();
        classes.sort_by_key(|c| std::cmp::Reverse(c.len()));
        Coloring { n: self.n, classes }
    }

    /// Per-vertex class index, `result[v - 1]`.
    pub fn assignment(&self) -> Vec<usize> {
        let mut colors = vec![0; self.n as usize];
        for (i, class) in self.classes.iter().enumerate() {
            for v in class.iter() {
                colors[v as usize - 1] = i;
            }
        }
        colors
    }

    pub fn to_lists(&self) -> Vec<Vec<Vertex>> {
        self.classes.iter().map(VertexSet::to_vec).collect()
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, class) in self.classes.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{class}")?;
        }
        Ok(())
    }
}

fn check_order(g: &CirculantGraph, c: &Coloring) -> Result<()> {
    if g.n() != c.n() {
        return Err(Error::VertexCountMismatch(g.n(), c.n()));
    }
    Ok(())
}

/// True iff no edge has both ends in one class.
pub fn is_proper(g: &CirculantGraph, c: &Coloring) -> Result<bool> {
    check_order(g, c)?;
    Ok(c.classes()
        .iter()
        .all(|class| class.iter().all(|v| g.neighbors(v).is_disjoint(class))))
}

/// `CN(X) = { v : X is a subset of N(v) }`.
pub fn common_neighborhood(g: &CirculantGraph, class: &VertexSet) -> Result<VertexSet> {
    let mut members = class.iter();
    let first = members.next().ok_or(Error::EmptyClass)?;
    // N is symmetric, so CN(X) is the intersection of N(x) over x in X.
    let mut cn = g.neighbors(first).clone();
    for v in members {
        cn.intersect_with(g.neighbors(v));
    }
    Ok(cn)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassRecord {
    pub members: VertexSet,
    pub size: usize,
    pub common_neighborhood: VertexSet,
    pub common_neighborhood_size: usize,
}

/// Outcome of checking a coloring against the total dominator condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoringReport {
    pub n: u32,
    pub proper: bool,
    pub classes: Vec<ClassRecord>,
    /// Sum of `|CN(V_i)|`.
    pub common_neighborhood_total: usize,
    pub tdc: bool,
    /// Vertices that totally dominate no class, ascending.
    pub uncovered: Vec<Vertex>,
}

impl ColoringReport {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}

/// Checks properness and whether every vertex is adjacent to all of some class.
pub fn is_tdc(g: &CirculantGraph, c: &Coloring) -> Result<ColoringReport> {
    let proper = is_proper(g, c)?;
    let mut covered = VertexSet::empty(g.n());
    let mut classes = Vec::with_capacity(c.len());
    for class in c.classes() {
        let cn = common_neighborhood(g, class)?;
        covered.union_with(&cn);
        classes.push(ClassRecord {
            size: class.len(),
            common_neighborhood_size: cn.len(),
            members: class.clone(),
            common_neighborhood: cn,
        });
    }
    let uncovered: Vec<Vertex> = g.vertices().filter(|&v| !covered.contains(v)).collect();
    Ok(ColoringReport {
        n: g.n(),
        proper,
        common_neighborhood_total: classes.iter().map(|r| r.common_neighborhood_size).sum(),
        tdc: proper && uncovered.is_empty(),
        classes,
        uncovered,
    })
}

/// For a proper coloring of `C_n(1,3)`, `n >= 9`: every class with
/// `v_i <= 4` has `v_i + v_i' <= 5` and every class with `v_i >= 5` has
/// `v_i' = 0`.
pub fn class_size_capacity_check(g: &CirculantGraph, c: &Coloring) -> Result<bool> {
    if !g.is_standard() {
        return Err(Error::NotStandard {
            what: "class size capacity",
            n: g.n(),
            set: g.set_label(),
        });
    }
    if g.n() < 9 {
        return Err(Error::OutOfRange {
            what: "class size capacity",
            n: g.n(),
            min: 9,
        });
    }
    if !is_proper(g, c)? {
        return Err(Error::Improper);
    }
    for class in c.classes() {
        let size = class.len();
        let cn = common_neighborhood(g, class)?.len();
        let ok = if size <= 4 { size + cn <= 5 } else { cn == 0 };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Greedy proper coloring over a vertex order shuffled by `seed`.
pub fn random_greedy_coloring(g: &CirculantGraph, seed: u64) -> Coloring {
    let mut order: Vec<Vertex> = g.vertices().collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    greedy_coloring(g, &order)
}

/// Greedy coloring: each vertex in `order` gets the least color unused by
/// its already-colored neighbors. Classes come out in color order.
pub fn greedy_coloring(g: &CirculantGraph, order: &[Vertex]) -> Coloring {
    let mut colors: Vec<Option<usize>> = vec![None; g.n() as usize];
    for &v in order {
        let taken: Vec<usize> = g
            .neighbors(v)
            .iter()
            .filter_map(|u| colors[u as usize - 1])
            .collect();
        let color = (0..).find(|c| !taken.contains(c)).unwrap_or_default();
        colors[v as usize - 1] = Some(color);
    }
    let colors: Vec<usize> = colors
        .into_iter()
        .map(|c| c.expect("order covers every vertex"))
        .collect();
    Coloring::from_assignment(&colors)
}
