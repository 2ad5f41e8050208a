//! Invariant Riemannian geometry on Lie groups given by structure constants,
//! with a calculator for Chern-Simons integrals, canonical 3-forms of string
//! classes and e-invariants on S^3.

pub mod canonical;
pub mod chern_simons;
pub mod connection;
pub mod curvature;
pub mod error;
pub mod forms;
pub mod frame;
pub mod hodge;
pub mod linalg;
pub mod metric;
pub mod milnor;
pub mod region;
pub mod roots;
pub mod sampling;
pub mod scalar;
pub mod string_class;
pub mod sweep;
pub mod torsion;

pub use error::{Error, Result};
