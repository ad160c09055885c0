//! Circulant graphs, connection-set normalization, and the
//! `C_n(a,b) -> C_n(1,c)` relabeling.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;
use crate::Vertex;

/// An undirected circulant graph `C_n(S)` on the labels `1..=n`.
///
/// Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct CirculantGraph {
    n: u32,
    connection_set: Vec<u32>,
    adjacency: Vec<VertexSet>,
}

/// Circular distance of a generator: `min(g mod n, n - g mod n)`.
pub fn normalize_generator(n: u32, g: i64) -> u32 {
    let r = g.rem_euclid(n as i64) as u32;
    r.min(n - r)
}

/// Length of the shorter arc between `u` and `v` on the cycle `(1, 2, ..., n)`.
pub fn circular_distance(n: u32, u: Vertex, v: Vertex) -> u32 {
    normalize_generator(n, u as i64 - v as i64)
}

/// Maps any integer onto a label in `1..=n`; residue 0 becomes `n`.
pub fn label_mod(n: u32, x: i64) -> Vertex {
    let r = x.rem_euclid(n as i64) as u32;
    if r == 0 {
        n
    } else {
        r
    }
}

/// Builds `C_n(generators)`.
///
/// Generators are reduced to circular distances. A generator congruent to
/// zero or two generators with the same distance are rejected.
pub fn build_circulant(n: u32, generators: &[i64]) -> Result<CirculantGraph> {
    if n < 3 {
        return Err(Error::TooFewVertices(n));
    }
    let mut seen: Vec<(u32, i64)> = Vec::with_capacity(generators.len());
    for &g in generators {
        let d = normalize_generator(n, g);
        if d == 0 {
            return Err(Error::ZeroGenerator { n, generator: g });
        }
        if let Some(&(_, first)) = seen.iter().find(|(dist, _)| *dist == d) {
            return Err(Error::DuplicateGenerator {
                n,
                first,
                second: g,
                distance: d,
            });
        }
        seen.push((d, g));
    }
    let set: Vec<u32> = seen.into_iter().map(|(d, _)| d).collect();
    Ok(CirculantGraph::from_distances(n, set))
}

impl CirculantGraph {
    /// Builds `C_n(generators)` with set semantics: generators congruent to
    /// zero are dropped and coinciding distances collapse into one.
    ///
    /// This matches reading the edge rule `|i - j| = g (mod n)` literally, so
    /// e.g. `C_4(1,3)` is the 4-cycle.
    pub fn from_generator_set(n: u32, generators: &[i64]) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooFewVertices(n));
        }
        let set = generators
            .iter()
            .map(|&g| normalize_generator(n, g))
            .filter(|&d| d != 0)
            .collect();
        Ok(Self::from_distances(n, set))
    }

    /// `C_n(1,3)` under set semantics, defined for every `n >= 3`.
    pub fn standard(n: u32) -> Result<Self> {
        Self::from_generator_set(n, &[1, 3])
    }

    fn from_distances(n: u32, mut set: Vec<u32>) -> Self {
        set.sort_unstable();
        set.dedup();
        let mut adjacency = vec![VertexSet::empty(n); n as usize];
        for v in 1..=n {
            let row = &mut adjacency[v as usize - 1];
            for &s in &set {
                row.insert(label_mod(n, v as i64 + s as i64));
                row.insert(label_mod(n, v as i64 - s as i64));
            }
        }
        Self {
            n,
            connection_set: set,
            adjacency,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Sorted circular distances in `1..=n/2`.
    pub fn connection_set(&self) -> &[u32] {
        &self.connection_set
    }

    /// Open neighborhood `N(v)`.
    pub fn neighbors(&self, v: Vertex) -> &VertexSet {
        &self.adjacency[v as usize - 1]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.neighbors(u).contains(v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    /// The regularity predicted from the connection set: `2|S| - 1` when
    /// `n/2` is a generator, `2|S|` otherwise.
    pub fn expected_degree(&self) -> usize {
        let s = self.connection_set.len();
        if self.n.is_multiple_of(2) && self.connection_set.contains(&(self.n / 2)) {
            2 * s - 1
        } else {
            2 * s
        }
    }

    pub fn max_degree(&self) -> usize {
        (1..=self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.connection_set.is_empty()
    }

    /// True when this is `C_n(1,3)` with both generators distinct, i.e. `n >= 6`.
    pub fn is_standard(&self) -> bool {
        self.n >= 6 && self.connection_set == [1, 3]
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n
    }

    /// Edges `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Neighborhoods as `u64` masks, bit `v - 1` for label `v`. Requires `n <= 64`.
    pub(crate) fn neighbor_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "mask form needs n <= 64, got {}", self.n);
        self.adjacency
            .iter()
            .map(|row| row.iter().fold(0u64, |m, v| m | 1 << (v - 1)))
            .collect()
    }

    pub(crate) fn set_label(&self) -> String {
        self.connection_set
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Debug for CirculantGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C_{}({})", self.n, self.set_label())
    }
}

impl fmt::Display for CirculantGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A permutation of `1..=n`, stored as the image of each label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexMap {
    image: Vec<Vertex>,
}

impl VertexMap {
    pub fn identity(n: u32) -> Self {
        Self {
            image: (1..=n).collect(),
        }
    }

    /// `x -> factor * x (mod n)` on labels.
    pub fn multiplier(n: u32, factor: i64) -> Self {
        Self {
            image: (1..=n).map(|x| label_mod(n, factor * x as i64)).collect(),
        }
    }

    /// Wraps an explicit image list (`image[x - 1]` is the image of `x`).
    pub fn from_images(image: Vec<Vertex>) -> Self {
        Self { image }
    }

    pub fn n(&self) -> u32 {
        self.image.len() as u32
    }

    pub fn apply(&self, x: Vertex) -> Vertex {
        self.image[x as usize - 1]
    }

    pub fn images(&self) -> &[Vertex] {
        &self.image
    }

    fn check_bijection(&self) -> Result<()> {
        let n = self.n();
        let mut hit = vec![false; n as usize];
        for (i, &y) in self.image.iter().enumerate() {
            if y == 0 || y > n {
                return Err(Error::NotBijection {
                    n,
                    reason: format!("{} maps to {y}, outside the vertex set", i + 1),
                });
            }
            if std::mem::replace(&mut hit[y as usize - 1], true) {
                return Err(Error::NotBijection {
                    n,
                    reason: format!("{y} is hit twice"),
                });
            }
        }
        Ok(())
    }
}

/// Which form of the `C_n(1,3)` hypothesis a reduction satisfied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Congruence {
    /// `a^-1 b = 3 (mod n)`.
    Three,
    /// `a^-1 b = n - 3 (mod n)`: the same graph after normalization.
    MinusThree,
}

/// Witness that `C_n(a,b)` is isomorphic to `C_n(1,c)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionResult {
    pub n: u32,
    pub a: i64,
    pub b: i64,
    /// `a^-1 mod n`, in `1..n`.
    pub a_inverse: u32,
    /// `a^-1 b mod n`, in `0..n`.
    pub residue: u32,
    /// `residue` folded into `1..=n/2`.
    pub standard_c: u32,
    /// `x -> a^-1 x (mod n)`.
    pub vertex_map: VertexMap,
}

impl ReductionResult {
    /// Which congruence held if the target is `C_n(1,3)`.
    pub fn standard_congruence(&self) -> Option<Congruence> {
        if self.residue == 3 % self.n {
            Some(Congruence::Three)
        } else if self.residue as i64 == (self.n as i64 - 3).rem_euclid(self.n as i64) {
            Some(Congruence::MinusThree)
        } else {
            None
        }
    }

    /// `C_n(a,b)` under set semantics.
    pub fn source_graph(&self) -> Result<CirculantGraph> {
        CirculantGraph::from_generator_set(self.n, &[self.a, self.b])
    }

    /// `C_n(1,c)` under set semantics.
    pub fn target_graph(&self) -> Result<CirculantGraph> {
        CirculantGraph::from_generator_set(self.n, &[1, self.standard_c as i64])
    }
}

/// Modular inverse of `a` mod `n`, or the gcd when it does not exist.
pub fn mod_inverse(a: i64, n: u32) -> std::result::Result<u32, u64> {
    let m = n as i64;
    let ext = a.rem_euclid(m).extended_gcd(&m);
    if ext.gcd != 1 {
        return Err(ext.gcd.unsigned_abs());
    }
    Ok(ext.x.rem_euclid(m) as u32)
}

/// Reduces `C_n(a,b)` to `C_n(1,c)` with `c = a^-1 b (mod n)`.
pub fn reduce_to_standard(n: u32, a: i64, b: i64) -> Result<ReductionResult> {
    if n < 3 {
        return Err(Error::TooFewVertices(n));
    }
    for g in [a, b] {
        if g.rem_euclid(n as i64) == 0 {
            return Err(Error::ZeroGenerator { n, generator: g });
        }
    }
    let a_inverse = mod_inverse(a, n).map_err(|gcd| Error::NotInvertible { n, a, gcd })?;
    let residue = ((a_inverse as i64 * b.rem_euclid(n as i64)) % n as i64) as u32;
    Ok(ReductionResult {
        n,
        a,
        b,
        a_inverse,
        residue,
        standard_c: normalize_generator(n, residue as i64),
        vertex_map: VertexMap::multiplier(n, a_inverse as i64),
    })
}

/// True iff `map` carries the edge set of `g1` exactly onto that of `g2`.
pub fn verify_isomorphism(
    g1: &CirculantGraph,
    g2: &CirculantGraph,
    map: &VertexMap,
) -> Result<bool> {
    if g1.n() != g2.n() {
        return Err(Error::VertexCountMismatch(g1.n(), g2.n()));
    }
    if map.n() != g1.n() {
        return Err(Error::NotBijection {
            n: g1.n(),
            reason: format!("map is defined on {} labels", map.n()),
        });
    }
    map.check_bijection()?;
    // A bijection is injective on edges, so equal counts plus inclusion suffice.
    if g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    Ok(g1
        .edges()
        .all(|(u, v)| g2.has_edge(map.apply(u), map.apply(v))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c6_13_is_k33() {
        let g = build_circulant(6, &[1, 3]).unwrap();
        assert_eq!(g.expected_degree(), 3);
        for v in g.vertices() {
            assert_eq!(g.degree(v), 3);
            for u in g.vertices() {
                // K_{3,3} with parts odd/even
                assert_eq!(g.has_edge(u, v), (u + v) % 2 == 1);
            }
        }
    }

    #[test]
    fn c8_13_neighbors_of_one() {
        let g = build_circulant(8, &[1, 3]).unwrap();
        assert_eq!(g.neighbors(1).to_vec(), vec![2, 4, 6, 8]);
        assert_eq!(g.expected_degree(), 4);
    }

    #[test]
    fn c5_12_is_complete() {
        let g = build_circulant(5, &[1, 2]).unwrap();
        assert_eq!(g.edge_count(), 10);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(build_circulant(2, &[1]), Err(Error::TooFewVertices(2)));
        assert!(matches!(
            build_circulant(8, &[1, 8]),
            Err(Error::ZeroGenerator { generator: 8, .. })
        ));
        assert!(matches!(
            build_circulant(8, &[1, 7]),
            Err(Error::DuplicateGenerator { distance: 1, .. })
        ));
        assert!(matches!(
            build_circulant(4, &[1, 3]),
            Err(Error::DuplicateGenerator { .. })
        ));
    }

    #[test]
    fn generators_are_normalized() {
        let g = build_circulant(10, &[-1, 7]).unwrap();
        assert_eq!(g.connection_set(), &[1, 3]);
        assert!(g.is_standard());
    }

    #[test]
    fn set_semantics_for_small_orders() {
        assert_eq!(CirculantGraph::standard(3).unwrap().connection_set(), &[1]);
        assert_eq!(CirculantGraph::standard(4).unwrap().connection_set(), &[1]);
        assert_eq!(
            CirculantGraph::standard(5).unwrap().connection_set(),
            &[1, 2]
        );
        assert!(!CirculantGraph::standard(5).unwrap().is_standard());
        assert!(CirculantGraph::standard(6).unwrap().is_standard());
    }

    #[test]
    fn reduce_7_2_6() {
        let r = reduce_to_standard(7, 2, 6).unwrap();
        assert_eq!(r.a_inverse, 4);
        assert_eq!(r.standard_c, 3);
        assert_eq!(r.standard_congruence(), Some(Congruence::Three));
        assert_eq!(r.vertex_map.images(), &[4, 1, 5, 2, 6, 3, 7]);
        let g1 = r.source_graph().unwrap();
        let g2 = r.target_graph().unwrap();
        assert!(verify_isomorphism(&g1, &g2, &r.vertex_map).unwrap());
    }

    #[test]
    fn reduce_11_4_1() {
        let r = reduce_to_standard(11, 4, 1).unwrap();
        assert_eq!(r.a_inverse, 3);
        assert_eq!(r.standard_c, 3);
        assert!(verify_isomorphism(
            &r.source_graph().unwrap(),
            &r.target_graph().unwrap(),
            &r.vertex_map
        )
        .unwrap());
    }

    #[test]
    fn reduce_identity_and_minus_three() {
        let r = reduce_to_standard(13, 1, 3).unwrap();
        assert_eq!(r.vertex_map, VertexMap::identity(13));
        assert_eq!(r.standard_c, 3);
        let r = reduce_to_standard(13, 1, 10).unwrap();
        assert_eq!(r.standard_c, 3);
        assert_eq!(r.standard_congruence(), Some(Congruence::MinusThree));
    }

    #[test]
    fn reduce_rejects_non_invertible() {
        assert_eq!(
            reduce_to_standard(12, 4, 3),
            Err(Error::NotInvertible {
                n: 12,
                a: 4,
                gcd: 4
            })
        );
    }

    #[test]
    fn isomorphism_checks() {
        let g = build_circulant(8, &[1, 3]).unwrap();
        let h = build_circulant(8, &[1, 2]).unwrap();
        assert!(verify_isomorphism(&g, &g, &VertexMap::identity(8)).unwrap());
        assert!(g.has_edge(1, 4) && !h.has_edge(1, 4));
        assert!(!verify_isomorphism(&g, &h, &VertexMap::identity(8)).unwrap());
        let bad = VertexMap::from_images(vec![1, 1, 3, 4, 5, 6, 7, 8]);
        assert!(matches!(
            verify_isomorphism(&g, &g, &bad),
            Err(Error::NotBijection { .. })
        ));
        let k = build_circulant(9, &[1, 3]).unwrap();
        assert_eq!(
            verify_isomorphism(&g, &k, &VertexMap::identity(8)),
            Err(Error::VertexCountMismatch(8, 9))
        );
    }
}
