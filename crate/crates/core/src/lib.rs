//! Exact computation of Hochschild and super-Harrison cohomology for
//! finite-dimensional supercommutative algebras over ℚ, with brute-force
//! deformation and square-zero-extension oracles for the second cohomology.
//!
//! The pipeline is: build a [`algebra::SuperAlgebra`] from structure
//! constants, pick a module (usually [`algebra::self_module`]), then ask
//! [`cohomology::cohomology`] for `Z^n`, `B^n` and `H^n`.

pub mod algebra;
pub mod classical;
pub mod cochain;
pub mod cohomology;
pub mod deformation;
pub mod combinatorics;
pub mod error;
pub mod exactla;
pub mod io;
pub mod par;
pub mod verify;

pub use algebra::{SuperAlgebra, SuperModule};
pub use cochain::Cochain;
pub use cohomology::{CohomologyResult, ComplexKind, Limits};
pub use error::{Error, Result};
pub use exactla::{Rational, RationalMatrix, SubspaceBasis};
