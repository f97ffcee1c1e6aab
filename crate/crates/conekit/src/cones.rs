//! Cone descriptors, membership tests, canonical tensors and
//! maximal-tensor-product membership for Lorentz legs.
//!
//! PSD cones are represented through real coordinates in a fixed orthonormal
//! Hermitian basis (normalized identity, diagonal traceless, then symmetric
//! and antisymmetric pair elements), so cone maps are plain real matrices and
//! the trace pairing is the Euclidean inner product of coordinate vectors.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{min_eig_herm, norm2, CMat, HermMatrix, Mat};
use crate::scalar::{cast, Real};
use crate::spaces::{dual_space, vec_norm, Family, SpaceDescriptor};

/// A proper cone: Lorentz cone `L_n` in `R^{n+1}`, cone over a normed space,
/// or the PSD cone of `d x d` Hermitian matrices in real coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConeDescriptor {
    Lorentz(usize),
    ConeOver(SpaceDescriptor),
    Psd(usize),
}

impl ConeDescriptor {
    pub fn ambient_dim(&self) -> usize {
        match *self {
            ConeDescriptor::Lorentz(n) => n + 1,
            ConeDescriptor::ConeOver(s) => s.dim + 1,
            ConeDescriptor::Psd(d) => d * d,
        }
    }
}

/// Membership up to an absolute tolerance: `t >= ||x|| - tol` for cones over
/// normed spaces, minimum eigenvalue `>= -tol` for PSD cones.
pub fn member<R: Real>(x: &[R], c: &ConeDescriptor, tol: R) -> Result<bool> {
    if x.len() != c.ambient_dim() {
        return Err(Error::DimensionMismatch(format!(
            "vector length {} vs ambient dimension {}",
            x.len(),
            c.ambient_dim()
        )));
    }
    match *c {
        ConeDescriptor::Lorentz(_) => Ok(x[0] >= norm2(&x[1..]) - tol),
        ConeDescriptor::ConeOver(s) => Ok(x[0] >= vec_norm(&x[1..], s)? - tol),
        ConeDescriptor::Psd(d) => Ok(min_eig_herm(&vec_to_herm(x, d)) >= -tol),
    }
}

/// The dual cone: Lorentz and PSD cones are self-dual, `C_X^* = C_{X^*}`.
pub fn dual_cone(c: &ConeDescriptor) -> ConeDescriptor {
    match *c {
        ConeDescriptor::Lorentz(n) => ConeDescriptor::Lorentz(n),
        ConeDescriptor::ConeOver(s) => ConeDescriptor::ConeOver(dual_space(s)),
        ConeDescriptor::Psd(d) => ConeDescriptor::Psd(d),
    }
}

/// Orthonormal Hermitian basis of `d x d` matrices: `I/sqrt(d)` first, then
/// diagonal traceless elements, then `(E_ij + E_ji)/sqrt(2)` and
/// `i(E_ij - E_ji)/sqrt(2)` for `i < j`.
pub fn hermitian_basis<R: Real>(d: usize) -> Vec<CMat<R>> {
    let mut basis = Vec::with_capacity(d * d);
    let mut id = CMat::zeros(d, d);
    let s = R::one() / cast::<R>(d as f64).sqrt();
    for i in 0..d {
        id[(i, i)] = Complex::new(s, R::zero());
    }
    basis.push(id);
    for l in 1..d {
        let mut m = CMat::zeros(d, d);
        let norm = R::one() / cast::<R>((l * (l + 1)) as f64).sqrt();
        for i in 0..l {
            m[(i, i)] = Complex::new(norm, R::zero());
        }
        m[(l, l)] = Complex::new(-cast::<R>(l as f64) * norm, R::zero());
        basis.push(m);
    }
    let inv_sqrt2 = R::one() / cast::<R>(2.0).sqrt();
    for i in 0..d {
        for j in i + 1..d {
            let mut sym = CMat::zeros(d, d);
            sym[(i, j)] = Complex::new(inv_sqrt2, R::zero());
            sym[(j, i)] = Complex::new(inv_sqrt2, R::zero());
            basis.push(sym);
            let mut asym = CMat::zeros(d, d);
            asym[(i, j)] = Complex::new(R::zero(), inv_sqrt2);
            asym[(j, i)] = Complex::new(R::zero(), -inv_sqrt2);
            basis.push(asym);
        }
    }
    basis
}

/// Reconstructs the Hermitian matrix with the given basis coordinates.
pub fn vec_to_herm<R: Real>(coords: &[R], d: usize) -> CMat<R> {
    let basis = hermitian_basis::<R>(d);
    assert_eq!(coords.len(), basis.len());
    let mut out = CMat::zeros(d, d);
    for (c, b) in coords.iter().zip(&basis) {
        out = out.add(&b.scale_re(*c));
    }
    out
}

/// Coordinates of a Hermitian matrix in the fixed basis.
pub fn herm_to_vec<R: Real>(h: &CMat<R>) -> Vec<R> {
    let d = h.rows();
    hermitian_basis::<R>(d)
        .iter()
        .map(|b| {
            // <B, H> = Tr[B^dagger H], real for Hermitian inputs
            let mut acc = R::zero();
            for i in 0..d {
                for j in 0..d {
                    acc += (b[(i, j)].conj() * h[(i, j)]).re;
                }
            }
            acc
        })
        .collect()
}

/// A tensor in the two-fold tensor product, stored as the coefficient matrix
/// of `sum z_ij e_i (x) f_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor2<R: Real> {
    pub mat: Mat<R>,
    pub leg_a: ConeDescriptor,
    pub leg_b: ConeDescriptor,
}

impl<R: Real> Tensor2<R> {
    pub fn new(mat: Mat<R>, leg_a: ConeDescriptor, leg_b: ConeDescriptor) -> Self {
        assert_eq!(mat.rows(), leg_a.ambient_dim(), "rows must match leg A");
        assert_eq!(mat.cols(), leg_b.ambient_dim(), "cols must match leg B");
        Tensor2 { mat, leg_a, leg_b }
    }

    /// Applies local maps: `(A (x) B)(z)` has coefficient matrix `A Z B^T`.
    pub fn apply(&self, a: &ConeMap<R>, b: &ConeMap<R>) -> Tensor2<R> {
        assert_eq!(a.dom, self.leg_a, "leg A mismatch");
        assert_eq!(b.dom, self.leg_b, "leg B mismatch");
        Tensor2::new(a.mat.matmul(&self.mat).matmul(&b.mat.transpose()), a.cod, b.cod)
    }

    /// Swaps the two legs.
    pub fn swap(&self) -> Tensor2<R> {
        Tensor2::new(self.mat.transpose(), self.leg_b, self.leg_a)
    }
}

/// A linear map between the ambient spaces of two cones.
#[derive(Clone, Debug, PartialEq)]
pub struct ConeMap<R: Real> {
    pub mat: Mat<R>,
    pub dom: ConeDescriptor,
    pub cod: ConeDescriptor,
}

impl<R: Real> ConeMap<R> {
    pub fn new(mat: Mat<R>, dom: ConeDescriptor, cod: ConeDescriptor) -> Self {
        assert_eq!(mat.rows(), cod.ambient_dim(), "rows must match codomain cone");
        assert_eq!(mat.cols(), dom.ambient_dim(), "cols must match domain cone");
        ConeMap { mat, dom, cod }
    }

    pub fn identity(c: ConeDescriptor) -> Self {
        ConeMap { mat: Mat::identity(c.ambient_dim()), dom: c, cod: c }
    }

    pub fn apply(&self, x: &[R]) -> Vec<R> {
        self.mat.matvec(x)
    }

    pub fn compose(&self, other: &ConeMap<R>) -> ConeMap<R> {
        assert_eq!(self.dom, other.cod, "composition cone mismatch");
        ConeMap { mat: self.mat.matmul(&other.mat), dom: other.dom, cod: self.cod }
    }

    /// The adjoint map between the dual cones.
    pub fn adjoint(&self) -> ConeMap<R> {
        ConeMap {
            mat: self.mat.transpose(),
            dom: dual_cone(&self.cod),
            cod: dual_cone(&self.dom),
        }
    }

    pub fn scale(&self, s: R) -> ConeMap<R> {
        ConeMap { mat: self.mat.scale(s), dom: self.dom, cod: self.cod }
    }

    pub fn add(&self, other: &ConeMap<R>) -> ConeMap<R> {
        assert_eq!(self.dom, other.dom);
        assert_eq!(self.cod, other.cod);
        ConeMap { mat: self.mat.add(&other.mat), dom: self.dom, cod: self.cod }
    }

    /// Trace of the composition `self . other` (other: cod -> dom).
    pub fn trace_pair(&self, other: &ConeMap<R>) -> R {
        assert_eq!(self.cod, other.dom);
        assert_eq!(self.dom, other.cod);
        self.mat.matmul(&other.mat).trace()
    }
}

/// The identity tensor `sum_i e_i (x) e_i` with `Lorentz(n)` legs.
pub fn identity_tensor<R: Real>(n: usize) -> Tensor2<R> {
    Tensor2::new(Mat::identity(n + 1), ConeDescriptor::Lorentz(n), ConeDescriptor::Lorentz(n))
}

/// The reflection `J_n = Diag(1, -1, ..., -1)` as a matrix.
pub fn j_mat<R: Real>(n: usize) -> Mat<R> {
    let mut entries = vec![-R::one(); n + 1];
    entries[0] = R::one();
    Mat::diag(&entries)
}

/// `J_n` as a positive map on the Lorentz cone.
pub fn j_map<R: Real>(n: usize) -> ConeMap<R> {
    ConeMap::new(j_mat(n), ConeDescriptor::Lorentz(n), ConeDescriptor::Lorentz(n))
}

/// The tensor `e_0 (x) e_0 - sum_i e_i (x) e_i = (id (x) J_n)(I_n)`.
pub fn j_hat<R: Real>(n: usize) -> Tensor2<R> {
    Tensor2::new(j_mat(n), ConeDescriptor::Lorentz(n), ConeDescriptor::Lorentz(n))
}

/// Membership of `z` in `L_n (x)_max C`.
///
/// `z` lies in the maximal tensor product iff `Z phi` lands in `L_n` for every
/// extreme functional `phi` of `C^*`. For a Lorentz second leg this is
/// Lorentz-positivity of the coefficient matrix; for a cone over a
/// polytope-ball space the extreme functionals `(1, x^*)` are enumerated and
/// each slice is a closed-form Lorentz membership.
pub fn max_member_lorentz<R: Real>(z: &Tensor2<R>, tol: R) -> Result<bool> {
    let n = match z.leg_a {
        ConeDescriptor::Lorentz(n) => n,
        _ => return Err(Error::Unsupported("leg A must be a Lorentz cone".into())),
    };
    match z.leg_b {
        ConeDescriptor::Lorentz(m) => {
            let slice = ConeMap::new(
                z.mat.clone(),
                ConeDescriptor::Lorentz(m),
                ConeDescriptor::Lorentz(n),
            );
            crate::lorentz::is_lorentz_positive(&slice, tol)
        }
        ConeDescriptor::ConeOver(s) if s.family == Family::L2 => {
            let slice = ConeMap::new(
                z.mat.clone(),
                ConeDescriptor::Lorentz(s.dim),
                ConeDescriptor::Lorentz(n),
            );
            crate::lorentz::is_lorentz_positive(&slice, tol)
        }
        ConeDescriptor::ConeOver(s) => {
            let duals = crate::spaces::ball_extreme_points::<R>(dual_space(s))?;
            for xstar in duals {
                let mut phi = Vec::with_capacity(s.dim + 1);
                phi.push(R::one());
                phi.extend_from_slice(&xstar);
                let image = z.mat.matvec(&phi);
                if !member(&image, &ConeDescriptor::Lorentz(n), tol)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        ConeDescriptor::Psd(_) => {
            Err(Error::Unsupported("PSD second leg is not supported here".into()))
        }
    }
}

/// The Bloch isomorphism `R^4 -> Herm(2)`:
/// `(t, x, y, z) -> (t I + x s1 + y s2 + z s3) / 2`, mapping `L_3` onto the
/// PSD cone of `2 x 2` matrices.
pub fn bloch_forward<R: Real>(v: &[R]) -> HermMatrix<R> {
    assert_eq!(v.len(), 4);
    let half = cast::<R>(0.5);
    let (t, x, y, z) = (v[0], v[1], v[2], v[3]);
    let mut m = CMat::zeros(2, 2);
    m[(0, 0)] = Complex::new((t + z) * half, R::zero());
    m[(1, 1)] = Complex::new((t - z) * half, R::zero());
    m[(0, 1)] = Complex::new(x * half, -y * half);
    m[(1, 0)] = Complex::new(x * half, y * half);
    HermMatrix::new(m)
}

/// Inverse of [`bloch_forward`]: Pauli expectation coordinates.
pub fn bloch_inverse<R: Real>(h: &HermMatrix<R>) -> Vec<R> {
    let m = h.mat();
    assert_eq!(m.rows(), 2);
    let t = (m[(0, 0)] + m[(1, 1)]).re;
    let x = (m[(0, 1)] + m[(1, 0)]).re;
    let y = (m[(1, 0)] - m[(0, 1)]).im;
    let z = (m[(0, 0)] - m[(1, 1)]).re;
    vec![t, x, y, z]
}

/// The Bloch isomorphism as a cone map `Lorentz(3) -> Psd(2)` in the fixed
/// Hermitian-basis coordinates.
pub fn bloch_cone_map<R: Real>() -> ConeMap<R> {
    let mut mat = Mat::zeros(4, 4);
    for k in 0..4 {
        let mut e = vec![R::zero(); 4];
        e[k] = R::one();
        let h = bloch_forward(&e);
        let coords = herm_to_vec(h.mat());
        for i in 0..4 {
            mat[(i, k)] = coords[i];
        }
    }
    ConeMap::new(mat, ConeDescriptor::Lorentz(3), ConeDescriptor::Psd(2))
}
