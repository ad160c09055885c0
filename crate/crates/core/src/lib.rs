//! Total dominator colorings of circulant graphs `C_n(1,3)` and their
//! isomorphs `C_n(a,b)`.
//!
//! The crate computes and cross-checks the total dominator chromatic
//! number `chi_d^t` three ways: a closed form ([`formulas`]), explicit
//! colorings ([`constructions`]) and an exact search ([`solver`]). The
//! supporting invariants (independence, open packing, total domination and
//! chromatic numbers) have closed forms and brute-force oracles in
//! [`invariants`]; [`observations`] checks the structural facts about
//! common neighborhoods and independent sets that the lower bounds rest on.
//!
//! Vertices are labeled `1..=n` throughout.
//!
//! ```
//! use circulant_tdc::{constructions, formulas, graph, solver, Limits};
//!
//! let g = graph::build_circulant(12, &[1, 3]).unwrap();
//! let plan = constructions::construct_tdc(12).unwrap();
//! assert_eq!(plan.class_count() as u32, formulas::formula_tdc(12).unwrap());
//!
//! let exact = solver::tdc_number_exact(&g, &solver::Budget::default(), &Limits::default()).unwrap();
//! assert_eq!(exact.chi_dt, Some(6));
//! ```

pub mod coloring;
pub mod coloring_file;
pub mod config;
pub mod constructions;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod invariants;
mod masks;
pub mod observations;
pub mod report;
pub mod solver;
pub mod vertex_set;

/// A vertex label in `1..=n`.
pub type Vertex = u32;

pub use coloring::{Coloring, ColoringReport};
pub use config::Limits;
pub use error::{Error, PartitionError, Result};
pub use graph::{CirculantGraph, ReductionResult, VertexMap};
pub use vertex_set::VertexSet;
