//! Finite effect algebras and their intrinsic topologies.
//!
//! An effect algebra is a set with a partially defined, commutative and
//! associative sum `⊕`, a zero, a unit, a unique orthosupplement for every
//! element, and the rule that `a ⊕ 1` is only defined for `a = 0`. This crate
//! works with finite ones given as explicit partial sum tables:
//!
//! - [`algebra`] validates tables and derives order, lattice, sharp and
//!   decomposition structure;
//! - [`topo`] is a small finite-topology engine plus the interval, order and
//!   Frink ideal topologies of an effect algebra;
//! - [`laws`] machine-checks the structural theorems relating those
//!   topologies to the algebra on a given instance;
//! - [`catalog`] builds standard families, enumerates small algebras up to
//!   isomorphism and produces broken tables for negative testing;
//! - [`io`] holds the `.ea` text format, DOT export and JSON reports.

pub mod algebra;
pub mod catalog;
pub mod error;
pub mod io;
pub mod laws;
pub mod limits;
pub mod set;
pub mod topo;

pub use algebra::{EffectAlgebra, RawTable};
pub use error::{Axiom, Error, Result};
pub use limits::Limits;
pub use set::ElemSet;
pub use topo::Topology;
