//! The spaces `l1^n`, `l2^n`, `linf^n` and operator norms between them.
//!
//! Norms over polytope balls are computed as exact maxima over finite
//! extreme-point sets, never by iterative ascent, so every value is
//! reproducible to floating-point accuracy.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{norm1, norm2, norm_inf, spectral_norm, Mat};
use crate::scalar::Real;

/// Cap on sign-vector enumeration (`2^SIGN_ENUM_CAP` points).
pub const SIGN_ENUM_CAP: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    L1,
    L2,
    Linf,
}

/// A finite-dimensional normed space `l_p^n` with `p` in `{1, 2, inf}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpaceDescriptor {
    pub family: Family,
    pub dim: usize,
}

impl SpaceDescriptor {
    pub fn new(family: Family, dim: usize) -> Self {
        assert!(dim >= 1, "space dimension must be at least 1");
        SpaceDescriptor { family, dim }
    }

    pub fn l1(dim: usize) -> Self {
        Self::new(Family::L1, dim)
    }

    pub fn l2(dim: usize) -> Self {
        Self::new(Family::L2, dim)
    }

    pub fn linf(dim: usize) -> Self {
        Self::new(Family::Linf, dim)
    }
}

/// `||x||` in the given space.
pub fn vec_norm<R: Real>(x: &[R], s: SpaceDescriptor) -> Result<R> {
    if x.len() != s.dim {
        return Err(Error::DimensionMismatch(format!(
            "vector length {} vs space dimension {}",
            x.len(),
            s.dim
        )));
    }
    Ok(match s.family {
        Family::L1 => norm1(x),
        Family::L2 => norm2(x),
        Family::Linf => norm_inf(x),
    })
}

/// The dual space: `l1 <-> linf`, `l2` self-dual.
pub fn dual_space(s: SpaceDescriptor) -> SpaceDescriptor {
    let family = match s.family {
        Family::L1 => Family::Linf,
        Family::L2 => Family::L2,
        Family::Linf => Family::L1,
    };
    SpaceDescriptor { family, dim: s.dim }
}

/// Extreme points of the unit ball. `l1`: the `2n` signed basis vectors;
/// `linf`: all `2^n` sign vectors. The Euclidean ball has no finite extreme
/// set and is rejected.
pub fn ball_extreme_points<R: Real>(s: SpaceDescriptor) -> Result<Vec<Vec<R>>> {
    match s.family {
        Family::L1 => {
            let mut out = Vec::with_capacity(2 * s.dim);
            for i in 0..s.dim {
                let mut e = vec![R::zero(); s.dim];
                e[i] = R::one();
                out.push(e.clone());
                e[i] = -R::one();
                out.push(e);
            }
            Ok(out)
        }
        Family::Linf => {
            if s.dim > SIGN_ENUM_CAP {
                return Err(Error::DimensionTooLarge(format!(
                    "sign enumeration needs 2^{} points",
                    s.dim
                )));
            }
            Ok(sign_vectors(s.dim, false))
        }
        Family::L2 => Err(Error::Unsupported(
            "the Euclidean ball has a continuum of extreme points".into(),
        )),
    }
}

/// All sign vectors of length `n`; with `half` set, one representative per
/// `{s, -s}` pair (first coordinate fixed to `+1`).
pub fn sign_vectors<R: Real>(n: usize, half: bool) -> Vec<Vec<R>> {
    let count = 1usize << if half { n - 1 } else { n };
    (0..count)
        .map(|bits| {
            (0..n)
                .map(|i| {
                    if half && i == 0 {
                        R::one()
                    } else {
                        let shift = if half { i - 1 } else { i };
                        if bits >> shift & 1 == 0 {
                            R::one()
                        } else {
                            -R::one()
                        }
                    }
                })
                .collect()
        })
        .collect()
}

/// A linear operator tagged with its domain and codomain spaces.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix<R: Real> {
    pub mat: Mat<R>,
    pub dom: SpaceDescriptor,
    pub cod: SpaceDescriptor,
}

impl<R: Real> OperatorMatrix<R> {
    pub fn new(mat: Mat<R>, dom: SpaceDescriptor, cod: SpaceDescriptor) -> Self {
        assert_eq!(mat.rows(), cod.dim, "rows must match codomain dimension");
        assert_eq!(mat.cols(), dom.dim, "cols must match domain dimension");
        OperatorMatrix { mat, dom, cod }
    }

    /// The adjoint, acting `cod* -> dom*`.
    pub fn adjoint(&self) -> Self {
        OperatorMatrix {
            mat: self.mat.transpose(),
            dom: dual_space(self.cod),
            cod: dual_space(self.dom),
        }
    }

    /// Composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.dom, other.cod, "composition space mismatch");
        OperatorMatrix { mat: self.mat.matmul(&other.mat), dom: other.dom, cod: self.cod }
    }
}

/// Exact operator norm for the supported space pairs.
pub fn op_norm<R: Real>(u: &OperatorMatrix<R>) -> Result<R> {
    let m = &u.mat;
    match u.dom.family {
        // sup over the ball is attained at signed basis vectors: max column norm
        Family::L1 => {
            let mut best = R::zero();
            for j in 0..u.dom.dim {
                let col = m.col(j);
                best = best.max(vec_norm(&col, u.cod)?);
            }
            Ok(best)
        }
        Family::L2 => match u.cod.family {
            Family::L2 => Ok(spectral_norm(m)),
            // ||u|| = max_f ||u^T f||_2 over extreme f of the dual ball
            Family::L1 | Family::Linf => {
                let duals = ball_extreme_points::<R>(dual_space(u.cod))?;
                let mut best = R::zero();
                for f in duals {
                    best = best.max(norm2(&m.tr_matvec(&f)));
                }
                Ok(best)
            }
        },
        Family::Linf => match u.cod.family {
            // max row sum, no enumeration needed
            Family::Linf => {
                let mut best = R::zero();
                for i in 0..u.cod.dim {
                    best = best.max(norm1(m.row(i)));
                }
                Ok(best)
            }
            Family::L1 | Family::L2 => {
                if u.dom.dim > SIGN_ENUM_CAP {
                    return Err(Error::DimensionTooLarge(format!(
                        "linf domain of dimension {} needs sign enumeration",
                        u.dom.dim
                    )));
                }
                let mut best = R::zero();
                for s in sign_vectors::<R>(u.dom.dim, true) {
                    best = best.max(vec_norm(&m.matvec(&s), u.cod)?);
                }
                Ok(best)
            }
        },
    }
}
