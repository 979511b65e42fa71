//! Finite-model toolkit for quantum cylindric algebras.
//!
//! The crate represents finite ortholattices, orthomodular lattices, quantum
//! cylindric algebras (QCA) and cylindric quasi-implication algebras (CQIA) as
//! explicit tables, converts between the two algebraic presentations through
//! the Sasaki hook, and builds the MacLaren and Goldblatt cylindric
//! orthoframes of a CQIA. Every axiom check is exhaustive and reports the
//! lexicographically first counterexample per axiom.

pub mod catalog;
pub mod dot;
pub mod error;
pub mod frames;
pub mod io;
pub mod lattice;
pub mod law;
pub mod limits;
pub mod qca;
pub mod qia;
pub mod report;
pub mod transforms;

pub use error::{Error, Result};
pub use frames::{CylindricOrthoFrame, FilterSubset, Relation};
pub use lattice::FiniteOrtholattice;
pub use limits::Limits;
pub use qca::{QuantifierMap, QuantumCylindricAlgebra};
pub use qia::{CylindricQia, DerivedOrder, QiaTable};
pub use report::{Arg, CheckReport, Violation};
pub use transforms::{HomMap, ImplicationKind};
