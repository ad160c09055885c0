use thiserror::Error;

use crate::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Why a list of classes fails to partition `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("vertex {vertex} is outside 1..={n}")]
    OutOfRange { vertex: i64, n: u32 },
    #[error("vertex {0} appears in more than one class")]
    Repeated(Vertex),
    #[error("vertex {0} is not in any class")]
    Missing(Vertex),
    #[error("class {0} is empty")]
    EmptyClass(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a circulant graph needs at least 3 vertices, got {0}")]
    TooFewVertices(u32),
    #[error("generator {generator} is congruent to 0 mod {n}")]
    ZeroGenerator { n: u32, generator: i64 },
    #[error("generators {first} and {second} both reduce to distance {distance} mod {n}")]
    DuplicateGenerator {
        n: u32,
        first: i64,
        second: i64,
        distance: u32,
    },
    #[error("gcd({a}, {n}) = {gcd}, so {a} is not invertible mod {n}")]
    NotInvertible { n: u32, a: i64, gcd: u64 },
    #[error("vertex counts differ: {0} vs {1}")]
    VertexCountMismatch(u32, u32),
    #[error("vertex map is not a bijection on 1..={n}: {reason}")]
    NotBijection { n: u32, reason: String },
    #[error("classes do not partition 1..={n}: {source}")]
    NotPartition {
        n: u32,
        #[source]
        source: PartitionError,
    },
    #[error("the common neighborhood of an empty set is undefined")]
    EmptyClass,
    #[error("{what} requires n >= {min}, got n = {n}")]
    OutOfRange {
        what: &'static str,
        n: u32,
        min: u32,
    },
    #[error("{what} requires the graph C_n(1,3), got C_{n}({set})")]
    NotStandard {
        what: &'static str,
        n: u32,
        set: String,
    },
    #[error("{what}: n = {n} exceeds the exhaustive-search limit {limit}")]
    LimitExceeded {
        what: &'static str,
        n: u32,
        limit: u32,
    },
    #[error("hypothesis a^-1 b = +-3 (mod {n}) fails: a^-1 b = {residue} (mod {n})")]
    CongruenceFails { n: u32, residue: u32 },
    #[error("coloring is not proper")]
    Improper,
    #[error("graph has an isolated vertex")]
    IsolatedVertex,
    #[error("color count {ell} is outside 1..={n}")]
    ColorCount { ell: u32, n: u32 },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}
