//! Exact computations in finite Coxeter groups generated by their reflections:
//! reflection length, the absolute order, reduced reflection factorizations
//! and their Hurwitz orbits, parabolic closures, and the decomposition of
//! parabolic quasi-Coxeter elements into commuting indecomposable factors.

pub mod algebra;
pub mod coxeter;
pub mod cycles;
pub mod dual;
mod error;
pub mod hurwitz;
pub mod oracle;
pub mod permmodel;
pub mod subgroups;
pub mod suites;

pub use coxeter::{CoxeterSystem, Descriptor, Element, ReflWord};
pub use error::{Error, Result};

/// Default cap on the number of reduced expressions enumerated at once.
pub const DEFAULT_RED_CAP: usize = 1_000_000;

/// Default cap on exhaustive element enumeration.
pub const DEFAULT_ENUM_CAP: usize = 100_000;
