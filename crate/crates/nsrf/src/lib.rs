//! Neural signed-distance surface reconstruction with learnable cameras.
//!
//! The pipeline learns an object's surface as the zero level set of an SDF
//! network, rendered with SDF-based volume rendering, while jointly refining
//! per-image camera extrinsics and a shared focal length from noisy initial
//! estimates. Everything differentiable runs on a reverse-mode tape
//! ([`autodiff::Tape`]) so gradients flow from the image loss back to both
//! the networks and the camera parameters.

pub mod autodiff;
pub mod camera;
pub mod error;
pub mod fields;
pub mod linalg;
pub mod meshing;
pub mod metrics;
pub mod num;
pub mod renderer;
pub mod scene;
pub mod so3;
pub mod training;

pub use error::{Error, Result};

/// Scalar type used by the differentiable pipeline. The tape stores 64-bit
/// values so that finite-difference certification of every gradient is
/// meaningful and checkpoints round-trip bit-exactly.
pub type Scalar = f64;

/// 3-vector of pipeline scalars.
pub type Vec3 = [Scalar; 3];

/// Row-major 3x3 matrix of pipeline scalars.
pub type Mat3 = [[Scalar; 3]; 3];
