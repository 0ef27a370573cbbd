//! Exact computations with φ-congruence subgroups of the modular group.

pub mod error;
pub mod exactalg;
pub mod divpoly;
pub mod modgroup;
pub mod qexp;
pub mod symplectic;
pub mod invariants;
pub mod cli;

pub use error::{Error, Result};
