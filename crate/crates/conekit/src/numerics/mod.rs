//! Dense linear algebra and the semidefinite-programming backend.
//!
//! Everything here is a pure function of its inputs; higher modules are
//! consumers only.

pub mod cmat;
pub mod eig;
pub mod mat;
pub mod sdp;

pub use cmat::CMat;
pub use eig::{herm_eig, min_eig_herm, min_eig_sym, real_eig, spectral_norm, svd, sym_eig, trace_norm};
pub use mat::{dot, norm1, norm2, norm_inf, outer, Mat};
pub use sdp::{sdp_solve, LmiBlock, SdpBuilder, SdpOptions, SdpProblem, SdpSolution, SdpStatus, SparseSym};

use crate::scalar::Real;

/// Symmetric matrix wrapper: symmetrized on construction.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix<R: Real>(Mat<R>);

impl<R: Real> SymMatrix<R> {
    pub fn new(m: Mat<R>) -> Self {
        assert!(m.is_square(), "symmetric matrix must be square");
        SymMatrix(m.symmetrize())
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn mat(&self) -> &Mat<R> {
        &self.0
    }

    /// Eigenvalues sorted descending and orthonormal eigenvectors.
    pub fn eig(&self) -> (Vec<R>, Mat<R>) {
        sym_eig(&self.0)
    }
}

/// Hermitian matrix wrapper: Hermitian-symmetrized on construction.
#[derive(Clone, Debug, PartialEq)]
pub struct HermMatrix<R: Real>(CMat<R>);

impl<R: Real> HermMatrix<R> {
    pub fn new(m: CMat<R>) -> Self {
        assert_eq!(m.rows(), m.cols(), "Hermitian matrix must be square");
        let half = crate::scalar::cast::<R>(0.5);
        HermMatrix(m.add(&m.adjoint()).scale_re(half))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn mat(&self) -> &CMat<R> {
        &self.0
    }

    /// Real eigenvalues sorted descending and unitary eigenvectors.
    pub fn eig(&self) -> (Vec<R>, CMat<R>) {
        herm_eig(&self.0)
    }
}
