//! conekit: operator ideal norms over `l1`/`l2`/`linf` spaces and
//! classification of linear maps between proper cones (Lorentz cones, cones
//! over normed spaces, PSD cones).
//!
//! The crate computes operator, nuclear, Hilbert-Schmidt, 2-summing and
//! Hilbert-factorization norms (plus the trace-dual of the latter), decides
//! Lorentz-cone positivity and the max-entanglement-annihilation eigenvalue
//! criterion, produces Sinkhorn-type normal forms, and bundles end-to-end
//! reproduction pipelines with machine-readable reports.
//!
//! Core math is generic over the scalar type (`f32`/`f64`) through
//! [`scalar::Real`]; the aliases below pin `f64`, which is what every stated
//! tolerance is validated against.

pub mod classify;
pub mod cones;
pub mod error;
pub mod exact;
pub mod idealnorms;
pub mod lorentz;
pub mod numerics;
pub mod report;
pub mod repro;
pub mod sample;
pub mod scalar;
pub mod spaces;

pub use error::{Error, Result};

/// Dense real matrix over `f64`.
pub type Mat64 = numerics::Mat<f64>;
/// Dense complex matrix over `f64`.
pub type CMat64 = numerics::CMat<f64>;
/// Symmetric matrix over `f64`.
pub type SymMatrix64 = numerics::SymMatrix<f64>;
/// Hermitian matrix over `f64`.
pub type HermMatrix64 = numerics::HermMatrix<f64>;
/// Operator with space-tagged endpoints over `f64`.
pub type OperatorMatrix64 = spaces::OperatorMatrix<f64>;
/// Cone-to-cone map over `f64`.
pub type ConeMap64 = cones::ConeMap<f64>;
/// Tensor with two cone legs over `f64`.
pub type Tensor264 = cones::Tensor2<f64>;

/// Global PSD tolerance: membership checks accept a minimum eigenvalue of
/// `-TOL_PSD * (1 + ||M||)`.
pub const TOL_PSD: f64 = 1e-9;

/// Default tolerance carried by solver-backed norm values.
pub const TOL_SOLVER: f64 = 1e-7;

/// Default tolerance for comparisons of norm values against thresholds.
pub const TOL_COMPARE: f64 = 1e-6;
