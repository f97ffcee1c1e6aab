//! Algorithms for maps between Lorentz cones: positivity, automorphism
//! decomposition, Sinkhorn-type normal form, the max-entanglement-annihilation
//! eigenvalue criterion, entanglement-breaking tests, retract construction and
//! extreme-point generators.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cones::{j_mat, member, ConeDescriptor, ConeMap};
use crate::error::{Error, Result};
use crate::numerics::{min_eig_sym, norm2, outer, real_eig, svd, sym_eig, Mat};
use crate::scalar::{cast, Real};
use crate::spaces::SpaceDescriptor;

fn lorentz_dims<R: Real>(p: &ConeMap<R>) -> Result<(usize, usize)> {
    match (p.dom, p.cod) {
        (ConeDescriptor::Lorentz(n), ConeDescriptor::Lorentz(m)) => Ok((n, m)),
        _ => Err(Error::Unsupported("map must act between Lorentz cones".into())),
    }
}

/// `e_0 = (1, 0, ..., 0)` in `R^{n+1}`.
pub fn e0<R: Real>(len: usize) -> Vec<R> {
    let mut v = vec![R::zero(); len];
    v[0] = R::one();
    v
}

/// Maximum over `lambda >= 0` of the smallest eigenvalue of
/// `P^T J_m P - lambda J_n`, together with the maximizer. The map is
/// Lorentz-positive iff this value is nonnegative (and `P e_0` lands in the
/// cone); strict positivity certifies an interior map.
pub fn positivity_margin<R: Real>(p: &ConeMap<R>) -> Result<(R, R)> {
    positivity_margin_early(p, None)
}

/// Like [`positivity_margin`], but returns as soon as any probe certifies a
/// margin of at least `early_accept` (the exact maximum is not needed to
/// decide positivity).
fn positivity_margin_early<R: Real>(
    p: &ConeMap<R>,
    early_accept: Option<R>,
) -> Result<(R, R)> {
    let (n, m) = lorentz_dims(p)?;
    let jn = j_mat::<R>(n);
    let jm = j_mat::<R>(m);
    let q = p.mat.transpose().matmul(&jm).matmul(&p.mat);
    let g = |lam: R| {
        let mut s = q.clone();
        for i in 0..=n {
            s[(i, i)] -= lam * jn[(i, i)];
        }
        min_eig_sym(&s)
    };
    let (vals, _) = sym_eig(&q);
    let qnorm = vals.iter().fold(R::zero(), |a, &b| a.max(b.abs()));
    let accept = |val: R| early_accept.map_or(false, |bar| val >= bar);
    // the certificate value at e_0-normalization is a good first probe
    let lam_probe = q[(0, 0)].max(R::zero());
    let g_probe = g(lam_probe);
    if accept(g_probe) {
        return Ok((lam_probe, g_probe));
    }
    let g0 = g(R::zero());
    if accept(g0) {
        return Ok((R::zero(), g0));
    }
    // g is concave in lambda; golden-section search on [0, |Q| + 1]
    let mut lo = R::zero();
    let mut hi = qnorm + R::one();
    let phi = cast::<R>(0.618_033_988_749_894_9);
    let mut x1 = hi - phi * (hi - lo);
    let mut x2 = lo + phi * (hi - lo);
    let mut g1 = g(x1);
    let mut g2 = g(x2);
    for _ in 0..80 {
        if accept(g1) {
            return Ok((x1, g1));
        }
        if accept(g2) {
            return Ok((x2, g2));
        }
        if hi - lo < cast::<R>(1e-13) * (qnorm + R::one()) {
            break;
        }
        if g1 < g2 {
            lo = x1;
            x1 = x2;
            g1 = g2;
            x2 = lo + phi * (hi - lo);
            g2 = g(x2);
        } else {
            hi = x2;
            x2 = x1;
            g2 = g1;
            x1 = hi - phi * (hi - lo);
            g1 = g(x1);
        }
    }
    let lam = (x1 + x2) * cast::<R>(0.5);
    let gm = g(lam);
    // include the endpoints; the maximizer can sit at lambda = 0
    if g0 >= gm && g0 >= g_probe {
        Ok((R::zero(), g0))
    } else if g_probe >= gm {
        Ok((lam_probe, g_probe))
    } else {
        Ok((lam, gm))
    }
}

/// Lorentz-positivity via the exact S-procedure certificate: `P e_0` in the
/// cone and some `lambda >= 0` with `P^T J_m P - lambda J_n >= 0`.
pub fn is_lorentz_positive<R: Real>(p: &ConeMap<R>, tol: R) -> Result<bool> {
    let (_, m) = lorentz_dims(p)?;
    let image0 = p.apply(&e0(p.dom.ambient_dim()));
    if !member(&image0, &ConeDescriptor::Lorentz(m), tol)? {
        return Ok(false);
    }
    let scale = R::one() + p.mat.fro_norm() * p.mat.fro_norm();
    let (_, margin) = positivity_margin_early(p, Some(-tol * scale))?;
    Ok(margin >= -tol * scale)
}

/// True iff `P` maps every nonzero cone point into the interior, certified by
/// a strictly positive S-procedure margin.
pub fn is_interior_positive<R: Real>(p: &ConeMap<R>, margin_tol: R) -> Result<bool> {
    let image0 = p.apply(&e0(p.dom.ambient_dim()));
    if image0[0] <= R::zero() {
        return Ok(false);
    }
    let scale = R::one() + p.mat.fro_norm() * p.mat.fro_norm();
    let (_, margin) = positivity_margin_early(p, Some(margin_tol * scale + R::min_positive_value()))?;
    Ok(margin > margin_tol * scale)
}

/// Lorentz boost `P_alpha` acting in the `(e_0, e_1)` plane of `R^{n+1}`.
pub fn boost<R: Real>(n: usize, alpha: R) -> Mat<R> {
    let mut m = Mat::identity(n + 1);
    let (c, s) = (alpha.cosh(), alpha.sinh());
    m[(0, 0)] = c;
    m[(0, 1)] = s;
    m[(1, 0)] = s;
    m[(1, 1)] = c;
    m
}

/// Embeds an orthogonal spatial map as the automorphism `1 (+) u`.
pub fn embed_rotation<R: Real>(u: &Mat<R>) -> Mat<R> {
    let n = u.rows();
    let mut m = Mat::zeros(n + 1, n + 1);
    m[(0, 0)] = R::one();
    m.set_block(1, 1, u);
    m
}

/// Central map `lambda (+) u` as a plain matrix.
pub fn central_matrix<R: Real>(lambda: R, u: &Mat<R>) -> Mat<R> {
    let mut m = Mat::zeros(u.rows() + 1, u.cols() + 1);
    m[(0, 0)] = lambda;
    m.set_block(1, 1, u);
    m
}

/// Householder reflection with `H x_hat = e_1` direction handling: returns an
/// orthogonal `H` with `H v = ||v|| e_k` for the given unit target index.
fn reflect_to_axis<R: Real>(v: &[R], axis: usize) -> Mat<R> {
    let n = v.len();
    let nv = norm2(v);
    let mut target = vec![R::zero(); n];
    target[axis] = nv;
    let mut w: Vec<R> = v.iter().zip(&target).map(|(&a, &b)| a - b).collect();
    let wn = norm2(&w);
    if wn <= cast::<R>(1e-14) * (nv + R::one()) {
        return Mat::identity(n);
    }
    w.iter_mut().for_each(|x| *x /= wn);
    let mut h = Mat::identity(n);
    let two = cast::<R>(2.0);
    for i in 0..n {
        for j in 0..n {
            h[(i, j)] -= two * w[i] * w[j];
        }
    }
    h
}

/// Automorphism sending an interior point `z` to `sqrt(z^T J z) e_0`:
/// a rotation aligning the spatial part with `e_1` followed by the inverse
/// boost.
pub fn boost_to_e0<R: Real>(z: &[R]) -> Mat<R> {
    let n = z.len() - 1;
    let spatial = &z[1..];
    let sn = norm2(spatial);
    if sn <= cast::<R>(1e-300) {
        return Mat::identity(n + 1);
    }
    let rot = reflect_to_axis(spatial, 0);
    let alpha = (sn / z[0]).atanh();
    boost(n, -alpha).matmul(&embed_rotation(&rot))
}

/// Decomposition `A = c (1 (+) u1) P_alpha (1 (+) u2)` of a Lorentz-cone
/// automorphism.
#[derive(Clone, Debug)]
pub struct LorentzAutomorphism<R: Real> {
    pub c: R,
    pub u1: Mat<R>,
    pub alpha: R,
    pub u2: Mat<R>,
}

impl<R: Real> LorentzAutomorphism<R> {
    pub fn reconstruct(&self) -> Mat<R> {
        let n = self.u1.rows();
        embed_rotation(&self.u1)
            .matmul(&boost(n, self.alpha))
            .matmul(&embed_rotation(&self.u2))
            .scale(self.c)
    }
}

/// Factors an automorphism into scale, rotations and a single boost.
///
/// The scale comes from the `J`-congruence `A^T J A = c^2 J`; the boost
/// parameter from the upper-left entry of `A/c`; the rotations are assembled
/// from the first row and column. Degenerate boost (`alpha = 0`) returns
/// `u1 = A/c` restricted and `u2 = I`.
pub fn decompose_automorphism<R: Real>(a: &Mat<R>, tol: R) -> Result<LorentzAutomorphism<R>> {
    assert!(a.is_square());
    let n = a.rows() - 1;
    let j = j_mat::<R>(n);
    let g = a.transpose().matmul(&j).matmul(&a);
    let c2 = g[(0, 0)];
    let anorm = a.fro_norm();
    if c2 <= R::zero() {
        return Err(Error::NotAutomorphism("nonpositive J-congruence scale".into()));
    }
    let defect = g.sub(&j.scale(c2)).max_abs();
    if defect > tol * (R::one() + anorm * anorm) {
        return Err(Error::NotAutomorphism(format!("J-congruence defect {defect:?}")));
    }
    if a[(0, 0)] <= R::zero() {
        return Err(Error::NotAutomorphism("not orthochronous".into()));
    }
    let c = c2.sqrt();
    let a0 = a.scale(R::one() / c);
    let ch = a0[(0, 0)];
    let spatial = |m: &Mat<R>| Mat::from_fn(n, n, |i, jj| m[(i + 1, jj + 1)]);
    if ch <= R::one() + cast::<R>(1e-13) {
        // pure rotation
        return Ok(LorentzAutomorphism {
            c,
            u1: spatial(&a0),
            alpha: R::zero(),
            u2: Mat::identity(n),
        });
    }
    let alpha = (ch + (ch * ch - R::one()).sqrt()).ln();
    let sh = alpha.sinh();
    let col: Vec<R> = (1..=n).map(|i| a0[(i, 0)] / sh).collect();
    let row: Vec<R> = (1..=n).map(|jj| a0[(0, jj)] / sh).collect();
    // u1: any orthogonal matrix with first column `col`
    let u1 = reflect_to_axis(&col, 0).transpose();
    // spatial block: u1 u2 + (ch - 1) col row^T
    let inner = spatial(&a0).sub(&outer(&col, &row).scale(ch - R::one()));
    let u2 = u1.transpose().matmul(&inner);
    let out = LorentzAutomorphism { c, u1, alpha, u2 };
    let res = out.reconstruct().sub(a).max_abs();
    if res > tol * (R::one() + anorm) {
        return Err(Error::NotAutomorphism(format!("reconstruction residual {res:?}")));
    }
    Ok(out)
}

/// Sinkhorn-type normal form `B P A = 1 (+) diag(v)` of an interior map.
#[derive(Clone, Debug)]
pub struct SinkhornForm<R: Real> {
    pub a: Mat<R>,
    pub b: Mat<R>,
    pub v: Vec<R>,
    pub residual: R,
}

/// Alternating boost normalization: send `P e_0` to the axis from the left,
/// then `P^T e_0` from the right, until both are aligned; finish with spatial
/// rotations from the SVD of the lower-right block and a global scale.
pub fn sinkhorn_normal_form<R: Real>(
    p: &ConeMap<R>,
    tol: R,
    max_iter: usize,
) -> Result<SinkhornForm<R>> {
    if !is_interior_positive(p, cast(1e-12))? {
        return Err(Error::NotInterior("Sinkhorn normal form needs an interior map".into()));
    }
    sinkhorn_unchecked(p, tol, max_iter)
}

/// Sinkhorn iteration without the interior pre-check, for callers that
/// already hold a certificate (the regularized maps in the EB test are
/// interior by construction).
pub(crate) fn sinkhorn_unchecked<R: Real>(
    p: &ConeMap<R>,
    tol: R,
    max_iter: usize,
) -> Result<SinkhornForm<R>> {
    let (n, m) = lorentz_dims(p)?;
    let mut work = p.mat.clone();
    let mut b_acc = Mat::identity(m + 1);
    let mut a_acc = Mat::identity(n + 1);
    let mut converged = false;
    for _ in 0..max_iter {
        let z = work.col(0);
        let off_out = norm2(&z[1..]) / z[0];
        let w = work.row(0).to_vec();
        let off_in = norm2(&w[1..]) / w[0];
        if off_out <= tol && off_in <= tol {
            converged = true;
            break;
        }
        if off_out > tol {
            let bs = boost_to_e0(&z);
            work = bs.matmul(&work);
            b_acc = bs.matmul(&b_acc);
        }
        let w = work.row(0).to_vec();
        if norm2(&w[1..]) / w[0] > tol {
            let as_ = boost_to_e0(&w).transpose();
            work = work.matmul(&as_);
            a_acc = a_acc.matmul(&as_);
        }
    }
    if !converged {
        let z = work.col(0);
        let w = work.row(0).to_vec();
        if norm2(&z[1..]) / z[0] > tol || norm2(&w[1..]) / w[0] > tol {
            return Err(Error::NoConvergence(max_iter));
        }
    }
    let t = work[(0, 0)];
    let block = Mat::from_fn(m, n, |i, j| work[(i + 1, j + 1)]);
    let (u, sigma, vv) = svd(&block);
    // lift U to a full orthogonal m x m matrix (svd returns m x min(m, n))
    let u_full = complete_orthogonal(&u, m);
    let v_full = complete_orthogonal(&vv, n);
    let b_total = embed_rotation(&u_full.transpose()).matmul(&b_acc).scale(R::one() / t);
    let a_total = a_acc.matmul(&embed_rotation(&v_full));
    let v: Vec<R> = (0..n.min(m)).map(|i| sigma[i] / t).collect();
    let mut normal = Mat::zeros(m + 1, n + 1);
    normal[(0, 0)] = R::one();
    for (i, &vi) in v.iter().enumerate() {
        normal[(i + 1, i + 1)] = vi;
    }
    let residual = b_total.matmul(&p.mat).matmul(&a_total).sub(&normal).fro_norm();
    Ok(SinkhornForm { a: a_total, b: b_total, v, residual })
}

/// Extends a matrix with orthonormal columns to a square orthogonal matrix.
fn complete_orthogonal<R: Real>(m: &Mat<R>, n: usize) -> Mat<R> {
    let k = m.cols().min(n);
    let mut out = Mat::zeros(n, n);
    for j in 0..k {
        for i in 0..n {
            out[(i, j)] = m[(i, j)];
        }
    }
    for j in k..n {
        // Gram-Schmidt a fresh unit vector against the previous columns
        'trial: for t in 0..n {
            let mut cand = vec![R::zero(); n];
            cand[t] = R::one();
            for jj in 0..j {
                let proj: R = (0..n).map(|i| cand[i] * out[(i, jj)]).sum();
                for i in 0..n {
                    let d = proj * out[(i, jj)];
                    cand[i] = cand[i] - d;
                }
            }
            let nn = norm2(&cand);
            if nn > cast(0.5) {
                for i in 0..n {
                    out[(i, j)] = cand[i] / nn;
                }
                break 'trial;
            }
        }
    }
    out
}

/// Eigenvalue criterion for max-entanglement annihilation: the spectrum of
/// `J_m P J_n P^T` must be nonnegative with the top eigenvalue dominating the
/// sum of the rest. Returns the verdict and the (real) eigenvalues sorted
/// descending.
pub fn max_ea_criterion<R: Real>(p: &ConeMap<R>, tol: R) -> Result<(bool, Vec<R>)> {
    let (n, m) = lorentz_dims(p)?;
    if !is_lorentz_positive(p, tol.max(cast(1e-9)))? {
        return Err(Error::NotPositive);
    }
    let prod = j_mat::<R>(m)
        .matmul(&p.mat)
        .matmul(&j_mat::<R>(n))
        .matmul(&p.mat.transpose());
    let complex_eigs = real_eig(&prod);
    let scale = R::one() + prod.fro_norm();
    let mut eigs: Vec<R> = Vec::with_capacity(m + 1);
    for z in &complex_eigs {
        // the spectrum is real for Lorentz-positive maps; complex parts
        // beyond roundoff mean the input was not positive after all
        if z.im.abs() > cast::<R>(1e-7) * scale {
            return Err(Error::NotPositive);
        }
        eigs.push(z.re);
    }
    eigs.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let eps = tol * scale;
    let nonneg = eigs.iter().all(|&l| l >= -eps);
    let top = eigs[0];
    let rest: R = eigs[1..].iter().fold(R::zero(), |a, &b| a + b);
    Ok((nonneg && top >= rest - eps, eigs))
}

/// Entanglement-breaking test through the normal form: regularize with
/// `eps e_0 e_0^T`, normalize, and require the diagonal trace norm to stay
/// within `1 + tol` across the whole schedule.
pub fn is_eb_lorentz<R: Real>(p: &ConeMap<R>, tol: R) -> Result<bool> {
    let (n, m) = lorentz_dims(p)?;
    if !is_lorentz_positive(p, tol.max(cast(1e-9)))? {
        return Err(Error::NotPositive);
    }
    for eps_exp in [1e-3, 1e-4, 1e-5] {
        let eps = cast::<R>(eps_exp);
        let mut bump = Mat::zeros(m + 1, n + 1);
        bump[(0, 0)] = eps;
        let reg = ConeMap::new(p.mat.add(&bump), p.dom, p.cod);
        let form = sinkhorn_unchecked(&reg, cast(1e-13), 10_000)?;
        let trace_norm: R = form.v.iter().fold(R::zero(), |a, &b| a + b.abs());
        if trace_norm > R::one() + tol {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Retract pair for `S = span(basis)` against the Lorentz cone: `alpha` maps
/// `S cap L_n` into `L_{k-1}`, `beta` maps `L_{k-1}` back onto it, and
/// `beta . alpha` is the identity on `S`.
///
/// For a tangent subspace (`S cap L_n` a single ray) the pair retracts onto
/// the ray; the two-sided identity then only holds on the ray's span.
pub fn retract_maps<R: Real>(basis: &Mat<R>) -> Result<(Mat<R>, Mat<R>)> {
    let np1 = basis.rows();
    let k = basis.cols();
    assert!(k >= 1 && k <= np1);
    let q = orthonormalize(basis)?;
    // t-functional restricted to S in the orthonormal coordinates
    let qrow: Vec<R> = (0..k).map(|j| q[(0, j)]).collect();
    let qn2 = crate::numerics::dot(&qrow, &qrow);
    let tol = cast::<R>(1e-12);
    if qn2 <= tol {
        return Err(Error::DegenerateIntersection);
    }
    let rho2 = cast::<R>(2.0) - R::one() / qn2;
    if rho2 < -tol {
        return Err(Error::DegenerateIntersection);
    }
    let cstar: Vec<R> = qrow.iter().map(|&x| x / qn2).collect();
    let x0 = q.matvec(&cstar);
    if rho2 <= tol {
        // tangent ray: alpha sends the ray to the e_0 ray (alpha(x0) = e_0),
        // beta sends e_0 back; their composition is the identity on the ray
        // and a rank-one projection on the rest of S
        let mut alpha = Mat::zeros(k, np1);
        for j in 0..np1 {
            let qt: R = (0..k).map(|i| qrow[i] * q[(j, i)]).sum();
            alpha[(0, j)] = qt;
        }
        let mut beta = Mat::zeros(np1, k);
        for i in 0..np1 {
            beta[(i, 0)] = x0[i];
        }
        return Ok((alpha, beta));
    }
    let rho = rho2.sqrt();
    // orthonormal basis of the complement of qrow inside R^k
    let refl = reflect_to_axis(&qrow, 0); // refl * qrow = |qrow| e_0
    let dirs: Vec<Vec<R>> = (1..k).map(|i| (0..k).map(|j| refl[(i, j)]).collect()).collect();
    let mut alpha = Mat::zeros(k, np1);
    // alpha row 0: tau(x) = qrow . (Q^T x)
    for col in 0..np1 {
        let mut acc = R::zero();
        for i in 0..k {
            acc += qrow[i] * q[(col, i)];
        }
        alpha[(0, col)] = acc;
    }
    // alpha rows 1..k: d_i^T (c - tau c*) / rho with c = Q^T x
    for (r, d) in dirs.iter().enumerate() {
        for col in 0..np1 {
            let mut c_minus = R::zero();
            for i in 0..k {
                let ci = q[(col, i)];
                c_minus += d[i] * (ci - alpha[(0, col)] * cstar[i] / R::one());
            }
            // note: alpha[(0, col)] already equals tau applied to the basis
            // vector e_col projected to S; subtracting tau*c* keeps linearity
            alpha[(r + 1, col)] = c_minus / rho;
        }
    }
    let mut beta = Mat::zeros(np1, k);
    for i in 0..np1 {
        beta[(i, 0)] = x0[i];
    }
    for (jcol, d) in dirs.iter().enumerate() {
        let qd = q.matvec(d);
        for i in 0..np1 {
            beta[(i, jcol + 1)] = rho * qd[i];
        }
    }
    Ok((alpha, beta))
}

/// Gram-Schmidt orthonormalization of the columns; errors on rank deficiency.
fn orthonormalize<R: Real>(m: &Mat<R>) -> Result<Mat<R>> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut q = Mat::zeros(rows, cols);
    for j in 0..cols {
        let mut col = m.col(j);
        for prev in 0..j {
            let proj: R = (0..rows).map(|i| col[i] * q[(i, prev)]).sum();
            for i in 0..rows {
                let d = proj * q[(i, prev)];
                col[i] = col[i] - d;
            }
        }
        let n = norm2(&col);
        if n <= cast::<R>(1e-12) {
            return Err(Error::DimensionMismatch("basis columns are linearly dependent".into()));
        }
        for i in 0..rows {
            q[(i, j)] = col[i] / n;
        }
    }
    Ok(q)
}

/// Random extreme point of the dual-normalized positive maps
/// `Pos_0(L_k, C_{linf^n})`: a sign block over a random partition plus an
/// extremal contraction with unit rows.
pub fn extreme_pos0<R: Real>(k: usize, n: usize, seed: u64) -> ConeMap<R> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    extreme_pos0_with(k, n, &mut rng)
}

pub fn extreme_pos0_with<R: Real>(k: usize, n: usize, rng: &mut impl Rng) -> ConeMap<R> {
    let n1 = rng.gen_range(0..=n);
    let mut mat = Mat::zeros(n + 1, k + 1);
    mat[(0, 0)] = R::one();
    let mut rows: Vec<usize> = (1..=n).collect();
    // random row placement: the extremal form is unique up to row permutation
    for i in (1..rows.len()).rev() {
        let j = rng.gen_range(0..=i);
        rows.swap(i, j);
    }
    for (idx, &r) in rows.iter().enumerate() {
        if idx < n1 {
            mat[(r, 0)] = if rng.gen::<bool>() { R::one() } else { -R::one() };
        } else {
            // unit l2 row in the spatial block
            let mut row: Vec<R> = (0..k).map(|_| cast::<R>(rng.gen_range(-1.0..1.0f64))).collect();
            let mut nn = norm2(&row);
            while nn < cast(1e-3) {
                row = (0..k).map(|_| cast::<R>(rng.gen_range(-1.0..1.0f64))).collect();
                nn = norm2(&row);
            }
            for (c, val) in row.iter().enumerate() {
                mat[(r, c + 1)] = *val / nn;
            }
        }
    }
    ConeMap::new(
        mat,
        ConeDescriptor::Lorentz(k),
        ConeDescriptor::ConeOver(SpaceDescriptor::linf(n)),
    )
}

/// Samples extreme points of the set `K_w = {(x, b) : 1 +- x >= ||b +- w||}`:
/// the two apexes `(1, w)`, `(-1, -w)` and boundary points
/// `(<b, w>, b)` of the central ellipsoid section.
pub fn kw_extreme_sampler<R: Real>(
    w: &[R],
    count: usize,
    seed: u64,
) -> Result<Vec<(R, Vec<R>)>> {
    let wn = norm2(w);
    if wn >= R::one() {
        return Err(Error::InvalidW);
    }
    let k = w.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<(R, Vec<R>)> = Vec::with_capacity(count);
    out.push((R::one(), w.to_vec()));
    if count > 1 {
        out.push((-R::one(), w.iter().map(|&x| -x).collect()));
    }
    let shrink = (R::one() - wn * wn).sqrt();
    while out.len() < count {
        let mut xi: Vec<R> = (0..k).map(|_| cast::<R>(rng.sample(rand_distr::StandardNormal))).collect();
        let nn = norm2(&xi);
        if nn < cast(1e-6) {
            continue;
        }
        xi.iter_mut().for_each(|x| *x /= nn);
        let b: Vec<R> = if wn <= cast(1e-300) {
            xi.clone()
        } else {
            // unit alpha-component along w, shrunken orthogonal part
            let what: Vec<R> = w.iter().map(|&x| x / wn).collect();
            let a: R = crate::numerics::dot(&xi, &what);
            (0..k).map(|i| shrink * xi[i] + (R::one() - shrink) * a * what[i]).collect()
        };
        let x = crate::numerics::dot(&b, w);
        out.push((x, b));
    }
    Ok(out)
}
