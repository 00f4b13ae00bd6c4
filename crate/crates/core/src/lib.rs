//! Exact computations with finite-dimensional Hopf algebras over cyclotomic
//! fields: Sweedler powers of integrals, indicators, Hopf orders, Killing
//! radicals and the behaviour of these quantities under Drinfeld twists.

pub mod catalog;
pub mod error;
pub mod field;
pub mod hopf;
pub mod invariants;
pub mod io;
pub mod linalg;
pub mod report;
pub mod twist;

pub use error::{Error, Result};
pub use field::{CycNum, Rational};
pub use hopf::{AlgElem, DualVec, HopfAlgebra, HopfParts, TensorElem};
pub use linalg::Matrix;
pub use report::Report;
