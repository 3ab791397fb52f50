//! Information loss and non-ergodicity of open qubit dynamics.
//!
//! * [`qstate`]: 2×2 density matrices, Bloch parametrization, thermal states.
//! * [`distances`]: distinguishability measures and their axiom checks.
//! * [`channels`]: closed-form Markovian, dephasing and central-spin dynamics.
//! * [`oracle`]: dense reference evolution of the central-spin model.
//! * [`ergometrics`]: information loss, non-ergodicity and the uncertainty relations.

pub mod channels;
pub mod distances;
pub mod ergometrics;
pub mod error;
pub mod oracle;
pub mod qstate;
pub mod sampling;

pub use error::{Error, Result};
pub use qstate::{BlochAngles, DensityMatrix, Temperature};
