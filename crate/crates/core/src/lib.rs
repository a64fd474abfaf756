//! Exact arithmetic for hyperelliptic fibrations of algebraic surfaces.
//!
//! * [`invariants`]: relative invariants from Xiao's singularity indices.
//! * [`bounds`]: closed-form genus and slope bounds.
//! * [`enumerator`]: exhaustive search over index vectors for fixed `chi`.
//! * [`ruled_surface`]: divisor classes on ruled surfaces over an elliptic
//!   curve, double covers, and the sharpness families.
//!
//! Every number is an exact [`Rational`]; floating point never enters a
//! comparison.

pub mod bounds;
pub mod enumerator;
pub mod error;
pub mod invariants;
pub mod rational;
pub mod ruled_surface;

pub use bounds::{BoundSource, GenusBound, Parity};
pub use enumerator::{
    classify_pg_q_1, enumerate, max_genus, Classification, FeasibleCase, KsqGenusTable, S2Mode, SearchSpec,
    SlopeCap,
};
pub use error::{Error, Result};
pub use invariants::{numerics, FibrationNumerics, SingularityIndices, SurfaceInvariants};
pub use rational::{frac, int, Rational};
pub use ruled_surface::{DivisorClass, ExampleData, Family, SurfaceKind, SurfaceModel};
