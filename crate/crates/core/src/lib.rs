//! Exact exterior calculus on Minkowski 4-space and a tensor model of the
//! 2D Dirac equation.
//!
//! Fields are finite sums of plane waves with Gaussian-rational
//! coefficients, so every identity in the model can be checked by exact
//! equality:
//!
//! * [`tensor`]: antisymmetric tensors with dot, wedge, Hodge star,
//!   reflection and conjugation;
//! * [`field`]: plane-wave fields with `d` and `delta`;
//! * [`connection`]: the torsion connection `T = *A` and `d_A`;
//! * [`lorentz`]: hyperplane-preserving Lorentz maps;
//! * [`dirac`]: photons, electrons/positrons, residuals, equivalence with the
//!   2D Dirac equation, charge and dispersion.

pub mod connection;
pub mod dirac;
pub mod error;
pub mod field;
pub mod lorentz;
pub mod report;
pub mod sample;
pub mod scalar;
pub mod serial;
pub mod tensor;

pub use error::{Error, Result};
pub use field::{ExpField, WaveCovector};
pub use scalar::{ComplexRational, Rational};
pub use tensor::{AntisymTensor, Orientation};
