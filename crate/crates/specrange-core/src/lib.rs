//! Joint numerical ranges of spin observables and the uncertainty bounds they imply.
//!
//! The crate is organised bottom-up: [`linalg`] provides dense complex
//! matrices and a Hermitian eigensolver, [`spin`] builds the operator
//! families, [`numrange`] sweeps supporting hyperplanes to trace the range,
//! [`bounds`] optimises uncertainty measures over it, and [`definetti`]
//! covers the large-spin limit surfaces.

pub mod bounds;
pub mod definetti;
pub mod hull;
pub mod linalg;
pub mod numrange;
mod search;
pub mod spin;

pub use linalg::{CMatrix, Complex, HermObservable, LinalgError, Spectrum};
pub use numrange::{Boundary2D, Direction, FaceOpts, Hyperrect, Mesh3D, RangeError, SupportFace};
pub use spin::{HalfInt, ObservableVec, SetKind, SpinError};
