//! Exact-arithmetic calculators for families of linearly normal space
//! curves with small index of speciality: numerical invariants and
//! Castelnuovo bounds, divisor-class lattices on rational surfaces,
//! quadric and cubic curve models with their residual webs, gonality
//! pencil recipes, linkage accounting, and the census that ties the
//! verdicts together.
//!
//! Everything is integer or rational arithmetic; there is no floating
//! point in this crate, and overflow aborts.

pub mod census;
pub mod cubic;
pub mod error;
pub mod gonal;
pub mod invariants;
pub mod liaison;
pub mod models;
pub mod surfaces;

pub use census::{
    component_dims, verdict, ComponentModel, ComponentRecord, TriState, Verdict, SCHEMA,
};
pub use census::tables::{table, TableDoc, TableFamily};
pub use error::{Error, Result};
pub use invariants::Triple;
pub use surfaces::{BlowupClass, QuadricClass};
