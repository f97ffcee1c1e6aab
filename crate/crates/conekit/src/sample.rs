//! Seeded random generators for matrices, automorphisms, cone points and
//! positive maps. Every generator takes an explicit RNG so callers control
//! determinism; nothing here touches global state.

use num_complex::Complex;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::cones::{ConeDescriptor, ConeMap};
use crate::lorentz::{boost, central_matrix, embed_rotation};
use crate::numerics::{herm_eig, norm2, CMat, Mat};
use crate::scalar::{cast, Real};
use crate::spaces::{op_norm, OperatorMatrix, SpaceDescriptor};

pub fn gaussian<R: Real>(rng: &mut impl Rng) -> R {
    cast::<R>(rng.sample::<f64, _>(StandardNormal))
}

pub fn gaussian_mat<R: Real>(rng: &mut impl Rng, rows: usize, cols: usize) -> Mat<R> {
    let mut m = Mat::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m[(i, j)] = gaussian(rng);
        }
    }
    m
}

pub fn unit_vector<R: Real>(rng: &mut impl Rng, n: usize) -> Vec<R> {
    loop {
        let v: Vec<R> = (0..n).map(|_| gaussian(rng)).collect();
        let nn = norm2(&v);
        if nn > cast(1e-3) {
            return v.iter().map(|&x| x / nn).collect();
        }
    }
}

/// Random orthogonal matrix (Gram-Schmidt of a Gaussian matrix).
pub fn orthogonal<R: Real>(rng: &mut impl Rng, n: usize) -> Mat<R> {
    loop {
        let g = gaussian_mat::<R>(rng, n, n);
        let mut q = Mat::zeros(n, n);
        let mut ok = true;
        for j in 0..n {
            let mut col = g.col(j);
            for prev in 0..j {
                let proj: R = (0..n).map(|i| col[i] * q[(i, prev)]).sum();
                for i in 0..n {
                    let d = proj * q[(i, prev)];
                    col[i] = col[i] - d;
                }
            }
            let nn = norm2(&col);
            if nn < cast(1e-6) {
                ok = false;
                break;
            }
            for i in 0..n {
                q[(i, j)] = col[i] / nn;
            }
        }
        if ok {
            return q;
        }
    }
}

/// Random Lorentz automorphism `c (1 (+) u1) P_alpha (1 (+) u2)` with boost
/// parameter up to `max_boost`; `unit_scale` pins `c = 1`.
pub fn automorphism<R: Real>(rng: &mut impl Rng, n: usize, max_boost: f64, unit_scale: bool) -> Mat<R> {
    let u1 = orthogonal::<R>(rng, n);
    let u2 = orthogonal::<R>(rng, n);
    let alpha = cast::<R>(rng.gen_range(-max_boost..max_boost));
    let c = if unit_scale { R::one() } else { cast::<R>(rng.gen_range(0.5..2.0)) };
    embed_rotation(&u1).matmul(&boost(n, alpha)).matmul(&embed_rotation(&u2)).scale(c)
}

/// Interior positive map `B (1 (+) diag(v)) A + eps e_0 e_0^T` between
/// `Lorentz(n)` and `Lorentz(m)`, with `|v_i| <= 0.9` and unit-scale
/// automorphism dressing. Returns the map and the planted diagonal.
pub fn dressed_central<R: Real>(
    rng: &mut impl Rng,
    n: usize,
    m: usize,
    max_boost: f64,
    eps: f64,
) -> (ConeMap<R>, Vec<R>) {
    let k = n.min(m);
    let v: Vec<R> = (0..k).map(|_| cast::<R>(rng.gen_range(-0.9..0.9))).collect();
    let mut diag = Mat::zeros(m, n);
    for (i, &vi) in v.iter().enumerate() {
        diag[(i, i)] = vi;
    }
    let core = central_matrix(R::one(), &diag);
    let b = automorphism::<R>(rng, m, max_boost, true);
    let a = automorphism::<R>(rng, n, max_boost, true);
    let mut mat = b.matmul(&core).matmul(&a);
    mat[(0, 0)] += cast::<R>(eps);
    (
        ConeMap::new(mat, ConeDescriptor::Lorentz(n), ConeDescriptor::Lorentz(m)),
        v,
    )
}

/// Random point of the cone; `margin` in `[0, 1)` pushes it inward
/// (`margin = 0` allows boundary-near points).
pub fn cone_point<R: Real>(rng: &mut impl Rng, cone: &ConeDescriptor, margin: f64) -> Vec<R> {
    match *cone {
        ConeDescriptor::Lorentz(n) => {
            let dir = unit_vector::<R>(rng, n);
            let r = cast::<R>(rng.gen_range(0.0..1.0 - margin));
            let t = cast::<R>(rng.gen_range(0.1..2.0));
            let mut v = vec![t];
            v.extend(dir.iter().map(|&d| d * r * t));
            v
        }
        ConeDescriptor::ConeOver(s) => {
            let x: Vec<R> = (0..s.dim).map(|_| gaussian(rng)).collect();
            let nrm = crate::spaces::vec_norm(&x, s).unwrap();
            let scale = cast::<R>(rng.gen_range(0.0..1.0 - margin));
            let t = cast::<R>(rng.gen_range(0.1..2.0));
            let mut v = vec![t];
            if nrm > R::zero() {
                v.extend(x.iter().map(|&xi| xi * scale * t / nrm));
            } else {
                v.extend(x);
            }
            v
        }
        ConeDescriptor::Psd(d) => {
            let g = complex_gaussian::<R>(rng, d, d);
            let mut h = g.matmul(&g.adjoint());
            let bump = cast::<R>(margin);
            for i in 0..d {
                h[(i, i)] = h[(i, i)] + Complex::new(bump, R::zero());
            }
            crate::cones::herm_to_vec(&h)
        }
    }
}

pub fn complex_gaussian<R: Real>(rng: &mut impl Rng, rows: usize, cols: usize) -> CMat<R> {
    let mut m = CMat::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m[(i, j)] = Complex::new(gaussian(rng), gaussian(rng));
        }
    }
    m
}

/// Random Hermitian matrix with spectral norm at most `bound`.
pub fn hermitian_contraction<R: Real>(rng: &mut impl Rng, d: usize, bound: f64) -> CMat<R> {
    let g = complex_gaussian::<R>(rng, d, d);
    let h = g.add(&g.adjoint()).scale_re(cast(0.5));
    let (vals, _) = herm_eig(&h);
    let top = vals.iter().fold(R::zero(), |a, &b| a.max(b.abs()));
    if top <= R::zero() {
        return h;
    }
    h.scale_re(cast::<R>(bound) / top)
}

/// Random operator with a prescribed operator norm.
pub fn operator_with_norm<R: Real>(
    rng: &mut impl Rng,
    dom: SpaceDescriptor,
    cod: SpaceDescriptor,
    target: R,
) -> OperatorMatrix<R> {
    loop {
        let g = gaussian_mat::<R>(rng, cod.dim, dom.dim);
        let u = OperatorMatrix::new(g, dom, cod);
        let n = op_norm(&u).expect("norm is computable for sampled spaces");
        if n > cast(1e-9) {
            return OperatorMatrix::new(u.mat.scale(target / n), dom, cod);
        }
    }
}

/// Random central contraction `lambda (+) u` in `Pos(C_dom, C_cod)` with
/// `||u|| <= lambda = 1`, optionally strict.
pub fn central_contraction<R: Real>(
    rng: &mut impl Rng,
    dom: SpaceDescriptor,
    cod: SpaceDescriptor,
    strict: bool,
) -> ConeMap<R> {
    let hi = if strict { 0.95 } else { 1.0 };
    let target = cast::<R>(rng.gen_range(0.05..hi));
    let u = operator_with_norm(rng, dom, cod, target);
    let mat = central_matrix(R::one(), &u.mat);
    ConeMap::new(
        mat,
        ConeDescriptor::ConeOver(dom),
        ConeDescriptor::ConeOver(cod),
    )
}
