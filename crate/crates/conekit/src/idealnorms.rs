//! Operator ideal norms: Hilbert-Schmidt, nuclear, 2-summing,
//! Hilbert-factorization and its trace-dual.
//!
//! Polytope-ball endpoints reduce to finite extreme-point sets; the
//! optimizations are exact semidefinite or linear programs over those sets.
//! Euclidean endpoints collapse to closed forms (spectral/trace norms).

use crate::error::{Error, Result};
use crate::numerics::{sdp_solve, svd, Mat, SdpBuilder, SdpSolution, SdpStatus, SparseSym};
use crate::scalar::{cast, Real};
use crate::spaces::{op_norm, sign_vectors, Family, OperatorMatrix, SpaceDescriptor};

/// Cap for the 2-summing sign-vector Pietsch measure over an `l1` domain.
pub const PI2_L1_CAP: usize = 12;

/// Cap on the total number of extreme-point representatives in the Gram SDPs.
pub const GRAM_REPS_CAP: usize = 48;

fn solver_tol<R: Real>() -> R {
    cast(1e-9)
}

fn expect_optimal<R: Real>(sol: SdpSolution<R>, what: &str) -> Result<SdpSolution<R>> {
    match sol.status {
        SdpStatus::Optimal => Ok(sol),
        other => Err(Error::Solver(format!("{what}: solver returned {other:?}"))),
    }
}

/// Hilbert-Schmidt norm; only defined between Euclidean spaces.
pub fn hs<R: Real>(u: &OperatorMatrix<R>) -> Result<R> {
    if u.dom.family != Family::L2 || u.cod.family != Family::L2 {
        return Err(Error::Unsupported("hs needs Euclidean domain and codomain".into()));
    }
    Ok(u.mat.fro_norm())
}

/// One representative per `{x, -x}` pair of ball extreme points.
/// Norm-type quantities are symmetric under sign flips, so half the set
/// suffices everywhere below.
fn ball_reps<R: Real>(s: SpaceDescriptor) -> Result<Vec<Vec<R>>> {
    match s.family {
        Family::L1 => Ok((0..s.dim)
            .map(|i| {
                let mut e = vec![R::zero(); s.dim];
                e[i] = R::one();
                e
            })
            .collect()),
        Family::Linf => {
            if s.dim > PI2_L1_CAP {
                return Err(Error::DimensionTooLarge(format!(
                    "sign-vector enumeration over dimension {}",
                    s.dim
                )));
            }
            Ok(sign_vectors(s.dim, true))
        }
        Family::L2 => Err(Error::Unsupported("Euclidean ball is not a polytope".into())),
    }
}

fn dual_reps<R: Real>(s: SpaceDescriptor) -> Result<Vec<Vec<R>>> {
    ball_reps(crate::spaces::dual_space(s))
}

fn is_polytope(s: SpaceDescriptor) -> bool {
    s.family != Family::L2
}

/// Nuclear norm via trace duality: `Nuc(u) = max { Tr(uv) : ||v: cod -> dom|| <= 1 }`.
///
/// Supported for Euclidean-Euclidean (trace norm) and for pairs where the
/// domain ball and the codomain dual ball are polytopes (a finite LP).
pub fn nuclear<R: Real>(u: &OperatorMatrix<R>) -> Result<R> {
    if u.dom.family == Family::L2 && u.cod.family == Family::L2 {
        let (_, s, _) = svd(&u.mat);
        return Ok(s.iter().fold(R::zero(), |a, &b| a + b));
    }
    if !is_polytope(u.dom) || !is_polytope(u.cod) {
        return Err(Error::Unsupported(
            "nuclear norm needs Euclidean-Euclidean or polytope-polytope endpoints".into(),
        ));
    }
    // v: cod -> dom is (dom.dim x cod.dim); its norm is constrained by sending
    // every extreme point y of the cod ball into the dom ball.
    let (dn, cn) = (u.dom.dim, u.cod.dim);
    let cod_reps = ball_reps::<R>(u.cod)?;
    let nv = dn * cn;
    let vidx = |i: usize, j: usize| i * cn + j; // v[(i, j)], i in dom, j in cod
    let needs_aux = u.dom.family == Family::L1;
    let naux = if needs_aux { cod_reps.len() * dn } else { 0 };
    let mut b = SdpBuilder::<R>::new(nv + naux);
    // maximize Tr(u v) = sum_{k,l} u[(k,l)] v[(l,k)]  ->  minimize the negative
    for k in 0..cn {
        for l in 0..dn {
            b.set_objective(vidx(l, k), -u.mat[(k, l)]);
        }
    }
    for (r, y) in cod_reps.iter().enumerate() {
        // w = v y, entries w_i = sum_j v[(i,j)] y_j
        let w_terms = |i: usize| -> Vec<(usize, R)> {
            (0..cn).filter(|&j| y[j] != R::zero()).map(|j| (vidx(i, j), y[j])).collect()
        };
        match u.dom.family {
            Family::Linf => {
                // |w_i| <= 1
                for i in 0..dn {
                    let t = w_terms(i);
                    let neg: Vec<(usize, R)> = t.iter().map(|&(v, c)| (v, -c)).collect();
                    b.scalar_constraint(R::one(), &neg);
                    b.scalar_constraint(R::one(), &t);
                }
            }
            Family::L1 => {
                // sum_i |w_i| <= 1 via aux t_i >= +-w_i
                let mut sum_terms = Vec::with_capacity(dn);
                for i in 0..dn {
                    let t_var = nv + r * dn + i;
                    let t = w_terms(i);
                    let mut plus: Vec<(usize, R)> = t.iter().map(|&(v, c)| (v, -c)).collect();
                    plus.push((t_var, R::one()));
                    b.scalar_constraint(R::zero(), &plus);
                    let mut minus: Vec<(usize, R)> = t;
                    minus.push((t_var, R::one()));
                    b.scalar_constraint(R::zero(), &minus);
                    sum_terms.push((t_var, -R::one()));
                }
                b.scalar_constraint(R::one(), &sum_terms);
            }
            Family::L2 => unreachable!(),
        }
    }
    let sol = expect_optimal(sdp_solve(&b.build(), solver_tol())?, "nuclear")?;
    Ok(-sol.value)
}

/// 2-summing norm of `u: X -> l2^m` together with the optimal Pietsch
/// witness `W` (PSD, `dom.dim x dom.dim`) satisfying `Tr[u^T u W] = pi2(u)^2`
/// and `x^T W x <= 1` on the extreme points of the domain's dual ball.
pub fn pi2_witness<R: Real>(u: &OperatorMatrix<R>) -> Result<(R, Mat<R>)> {
    if u.cod.family != Family::L2 {
        return Err(Error::Unsupported("pi2 needs a Euclidean codomain".into()));
    }
    let gram = u.mat.transpose().matmul(&u.mat);
    let k = u.dom.dim;
    match u.dom.family {
        Family::L2 => Ok((u.mat.fro_norm(), Mat::identity(k))),
        Family::Linf => {
            // min sum(lambda) s.t. Diag(lambda) >= u^T u, lambda >= 0
            let mut b = SdpBuilder::<R>::new(k);
            let blk = b.block(k);
            b.set_f0(blk, gram.scale(-R::one()));
            for i in 0..k {
                b.set_objective(i, R::one());
                b.term(blk, i, SparseSym::new().entry(i, i, R::one()));
                b.scalar_constraint(R::zero(), &[(i, R::one())]);
            }
            let sol = expect_optimal(sdp_solve(&b.build(), solver_tol())?, "pi2/linf")?;
            Ok((sol.value.max(R::zero()).sqrt(), sol.dual[0].clone()))
        }
        Family::L1 => {
            if k > PI2_L1_CAP {
                return Err(Error::DimensionTooLarge(format!(
                    "pi2 over an l1 domain of dimension {k}"
                )));
            }
            // Pietsch measure supported on the sign vectors:
            // min sum(mu_s) s.t. sum mu_s s s^T >= u^T u, mu >= 0
            let signs = sign_vectors::<R>(k, true);
            let mut b = SdpBuilder::<R>::new(signs.len());
            let blk = b.block(k);
            b.set_f0(blk, gram.scale(-R::one()));
            for (v, s) in signs.iter().enumerate() {
                b.set_objective(v, R::one());
                let mut f = SparseSym::new();
                for i in 0..k {
                    for j in i..k {
                        f.push(i, j, s[i] * s[j]);
                    }
                }
                b.term(blk, v, f);
                b.scalar_constraint(R::zero(), &[(v, R::one())]);
            }
            let sol = expect_optimal(sdp_solve(&b.build(), solver_tol())?, "pi2/l1")?;
            Ok((sol.value.max(R::zero()).sqrt(), sol.dual[0].clone()))
        }
    }
}

/// 2-summing norm of `u: X -> l2^m`.
pub fn pi2<R: Real>(u: &OperatorMatrix<R>) -> Result<R> {
    pi2_witness(u).map(|(v, _)| v)
}

/// Transfer matrix of `u` over extreme-point representatives:
/// `M[i][j] = <y*_i, u x_j>` with `x_j` in the domain ball and `y*_i` in the
/// codomain dual ball.
fn transfer_matrix<R: Real>(u: &OperatorMatrix<R>) -> Result<Mat<R>> {
    let xs = ball_reps::<R>(u.dom)?;
    let ys = dual_reps::<R>(u.cod)?;
    if xs.len() + ys.len() > GRAM_REPS_CAP {
        return Err(Error::DimensionTooLarge(format!(
            "{} + {} extreme-point representatives exceed the Gram SDP cap",
            xs.len(),
            ys.len()
        )));
    }
    Ok(Mat::from_fn(ys.len(), xs.len(), |i, j| {
        let ux = u.mat.matvec(&xs[j]);
        ux.iter().zip(&ys[i]).fold(R::zero(), |acc, (&a, &b)| acc + a * b)
    }))
}

/// Gram-factorization SDP for a transfer matrix `M` (`q x p`):
/// `min c` s.t. `[[A, M], [M^T, B]] >= 0`, `diag(A) <= c`, `diag(B) <= c`.
fn gamma2_gram_sdp<R: Real>(m: &Mat<R>) -> Result<R> {
    let (q, p) = (m.rows(), m.cols());
    let tri_above = |n: usize, i: usize, j: usize| {
        // index of (i, j), i <= j, in a row-major upper triangle of size n
        i * n - i * (i + 1) / 2 + j
    };
    let tri = |n: usize| n * (n + 1) / 2;
    let nv = 1 + tri(q) + tri(p);
    let c_var = 0usize;
    let a_var = |i: usize, j: usize| 1 + tri_above(q, i, j);
    let b_var = |i: usize, j: usize| 1 + tri(q) + tri_above(p, i, j);
    let mut b = SdpBuilder::<R>::new(nv);
    b.set_objective(c_var, R::one());
    let blk = b.block(q + p);
    let mut f0 = Mat::zeros(q + p, q + p);
    for i in 0..q {
        for j in 0..p {
            f0[(i, q + j)] = m[(i, j)];
            f0[(q + j, i)] = m[(i, j)];
        }
    }
    b.set_f0(blk, f0);
    for i in 0..q {
        for j in i..q {
            b.term(blk, a_var(i, j), SparseSym::new().entry(i, j, R::one()));
        }
        b.scalar_constraint(R::zero(), &[(c_var, R::one()), (a_var(i, i), -R::one())]);
    }
    for i in 0..p {
        for j in i..p {
            b.term(blk, b_var(i, j), SparseSym::new().entry(q + i, q + j, R::one()));
        }
        b.scalar_constraint(R::zero(), &[(c_var, R::one()), (b_var(i, i), -R::one())]);
    }
    let sol = expect_optimal(sdp_solve(&b.build(), solver_tol())?, "gamma2")?;
    Ok(sol.value.max(R::zero()))
}

/// Hilbert-space factorization norm.
///
/// With a Euclidean endpoint one factor can be the identity, so the value is
/// the operator norm. Otherwise the domain ball and codomain dual ball are
/// polytopes, a unit-bounded Gram assignment to their extreme points is
/// exactly a Hilbert factorization, and the value comes from the Gram SDP.
pub fn gamma2<R: Real>(u: &OperatorMatrix<R>) -> Result<R> {
    if u.dom.family == Family::L2 || u.cod.family == Family::L2 {
        return op_norm(u);
    }
    gamma2_gram_sdp(&transfer_matrix(u)?)
}

/// Index helper for a grid of SDP variables.
struct VarMat {
    base: usize,
    rows: usize,
    cols: usize,
}

impl VarMat {
    fn at(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.rows && j < self.cols);
        self.base + i * self.cols + j
    }
}

/// Appends LMI blocks stating `gamma2(u) <= 1` for a variable operator
/// `u: from -> to` whose matrix entries live in `uv` (`to.dim x from.dim`).
fn add_gamma2_ball<R: Real>(
    b: &mut SdpBuilder<R>,
    uv: &VarMat,
    from: SpaceDescriptor,
    to: SpaceDescriptor,
    aux_base: usize,
) -> Result<()> {
    match (from.family == Family::L2, to.family == Family::L2) {
        (true, true) => {
            // [[I_to, U], [U^T, I_from]] >= 0
            let blk = b.block(to.dim + from.dim);
            b.set_f0(blk, Mat::identity(to.dim + from.dim));
            for i in 0..to.dim {
                for j in 0..from.dim {
                    b.term(blk, uv.at(i, j), SparseSym::new().entry(i, to.dim + j, R::one()));
                }
            }
        }
        (true, false) => {
            // Euclidean domain: ||u|| = max over codomain dual reps of ||U^T y*||_2
            for y in dual_reps::<R>(to)? {
                let blk = b.block(from.dim + 1);
                b.set_f0(blk, Mat::identity(from.dim + 1));
                for j in 0..from.dim {
                    for i in 0..to.dim {
                        if y[i] != R::zero() {
                            b.term(blk, uv.at(i, j), SparseSym::new().entry(0, 1 + j, y[i]));
                        }
                    }
                }
            }
        }
        (false, true) => {
            // Euclidean codomain: ||u|| = max over domain ball reps of ||U x||_2
            for x in ball_reps::<R>(from)? {
                let blk = b.block(to.dim + 1);
                b.set_f0(blk, Mat::identity(to.dim + 1));
                for i in 0..to.dim {
                    for j in 0..from.dim {
                        if x[j] != R::zero() {
                            b.term(blk, uv.at(i, j), SparseSym::new().entry(0, 1 + i, x[j]));
                        }
                    }
                }
            }
        }
        (false, false) => {
            let xs = ball_reps::<R>(from)?;
            let ys = dual_reps::<R>(to)?;
            if xs.len() + ys.len() > GRAM_REPS_CAP {
                return Err(Error::DimensionTooLarge(
                    "gamma2 ball extreme-point reduction exceeds the cap".into(),
                ));
            }
            let (q, p) = (ys.len(), xs.len());
            let tri_above = |n: usize, i: usize, j: usize| i * n - i * (i + 1) / 2 + j;
            let tri = |n: usize| n * (n + 1) / 2;
            let a_var = |i: usize, j: usize| aux_base + tri_above(q, i, j);
            let b_var = |i: usize, j: usize| aux_base + tri(q) + tri_above(p, i, j);
            let blk = b.block(q + p);
            // M(u)[r][s] = sum_{ij} y_r[i] x_s[j] u[(i, j)]
            for (r, y) in ys.iter().enumerate() {
                for (s, x) in xs.iter().enumerate() {
                    for i in 0..to.dim {
                        for j in 0..from.dim {
                            let coeff = y[i] * x[j];
                            if coeff != R::zero() {
                                b.term(blk, uv.at(i, j), SparseSym::new().entry(r, q + s, coeff));
                            }
                        }
                    }
                }
            }
            for i in 0..q {
                for j in i..q {
                    b.term(blk, a_var(i, j), SparseSym::new().entry(i, j, R::one()));
                }
                b.scalar_constraint(R::one(), &[(a_var(i, i), -R::one())]);
            }
            for i in 0..p {
                for j in i..p {
                    b.term(blk, b_var(i, j), SparseSym::new().entry(q + i, q + j, R::one()));
                }
                b.scalar_constraint(R::one(), &[(b_var(i, i), -R::one())]);
            }
        }
    }
    Ok(())
}

/// Number of auxiliary Gram variables `add_gamma2_ball` consumes.
fn gamma2_ball_aux<R: Real>(from: SpaceDescriptor, to: SpaceDescriptor) -> Result<usize> {
    if from.family == Family::L2 || to.family == Family::L2 {
        return Ok(0);
    }
    let p = ball_reps::<R>(from)?.len();
    let q = dual_reps::<R>(to)?.len();
    Ok(q * (q + 1) / 2 + p * (p + 1) / 2)
}

/// Trace-dual of `gamma2`: the support function of the `gamma2` unit ball,
/// `gamma2*(v) = max { Tr(u v) : gamma2(u: cod -> dom) <= 1 }`.
pub fn gamma2_star<R: Real>(v: &OperatorMatrix<R>) -> Result<R> {
    // u: cod -> dom, entries form a dom.dim x cod.dim variable grid
    let (dn, cn) = (v.dom.dim, v.cod.dim);
    let naux = gamma2_ball_aux::<R>(v.cod, v.dom)?;
    let mut b = SdpBuilder::<R>::new(dn * cn + naux);
    let uv = VarMat { base: 0, rows: dn, cols: cn };
    // maximize Tr(u v) = sum_{a, c} u[(a, c)] v[(c, a)]
    for a in 0..dn {
        for c in 0..cn {
            b.set_objective(uv.at(a, c), -v.mat[(c, a)]);
        }
    }
    add_gamma2_ball(&mut b, &uv, v.cod, v.dom, dn * cn)?;
    let sol = expect_optimal(sdp_solve(&b.build(), solver_tol())?, "gamma2_star")?;
    Ok(-sol.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::outer;
    use crate::spaces::vec_norm;

    fn op(entries: &[&[f64]], dom: SpaceDescriptor, cod: SpaceDescriptor) -> OperatorMatrix<f64> {
        OperatorMatrix::new(Mat::<f64>::from_rows(entries), dom, cod)
    }

    #[test]
    fn hs_examples() {
        let u = op(
            &[&[1., 0., 0.], &[0., 1., 0.], &[0., 0., 1.]],
            SpaceDescriptor::l2(3),
            SpaceDescriptor::l2(3),
        );
        assert!((hs(&u).unwrap() - 3f64.sqrt()).abs() < 1e-14);
        let u = op(&[&[3., 0.], &[0., 4.]], SpaceDescriptor::l2(2), SpaceDescriptor::l2(2));
        assert!((hs(&u).unwrap() - 5.0).abs() < 1e-14);
        let m = outer(&[1.0f64, 2.0], &[2.0, 1.0]);
        let u = OperatorMatrix::new(m, SpaceDescriptor::l2(2), SpaceDescriptor::l2(2));
        assert!((hs(&u).unwrap() - 5.0).abs() < 1e-12);
        let bad = op(&[&[1.0]], SpaceDescriptor::l1(1), SpaceDescriptor::l2(1));
        assert!(hs(&bad).is_err());
    }

    #[test]
    fn nuclear_examples() {
        let u = op(&[&[1., 0.], &[0., 1.]], SpaceDescriptor::l2(2), SpaceDescriptor::l2(2));
        assert!((nuclear(&u).unwrap() - 2.0).abs() < 1e-12);

        // linf -> l1: nuclear norm is the entrywise absolute sum
        let u = op(&[&[1., 1.], &[1., -1.]], SpaceDescriptor::linf(2), SpaceDescriptor::l1(2));
        let val = nuclear(&u).unwrap();
        assert!((val - 4.0).abs() < 1e-6, "nuclear = {val}");

        // rank-1 y x*^T: ideal norms equal ||y||_cod * ||x*||_dom*
        let y = [0.5f64, -1.5];
        let xs = [1.0f64, 2.0, -1.0];
        for (domf, codf) in
            [(Family::L1, Family::L1), (Family::Linf, Family::Linf), (Family::L1, Family::Linf)]
        {
            let dom = SpaceDescriptor::new(domf, 3);
            let cod = SpaceDescriptor::new(codf, 2);
            let u = OperatorMatrix::new(outer(&y, &xs), dom, cod);
            let expect =
                vec_norm(&y, cod).unwrap() * vec_norm(&xs, crate::spaces::dual_space(dom)).unwrap();
            let val = nuclear(&u).unwrap();
            assert!(
                (val - expect).abs() < 1e-6 * (1.0 + expect),
                "{domf:?}->{codf:?}: {val} vs {expect}"
            );
        }
    }

    #[test]
    fn pi2_examples() {
        // diagonal linf -> l2: sqrt of the sum of squared diagonal entries
        let u = op(&[&[0.6, 0.], &[0., 0.8]], SpaceDescriptor::linf(2), SpaceDescriptor::l2(2));
        assert!((pi2(&u).unwrap() - 1.0).abs() < 1e-7);

        // Euclidean: equals hs
        let u = op(
            &[&[1., 0., 0.], &[0., 1., 0.], &[0., 0., 1.]],
            SpaceDescriptor::l2(3),
            SpaceDescriptor::l2(3),
        );
        assert!((pi2(&u).unwrap() - 3f64.sqrt()).abs() < 1e-12);

        // linf(2) domain: pi2 = op norm (the square has the 2-summing property)
        let u = op(
            &[&[0.3, -0.7], &[1.1, 0.4], &[0.2, 0.9]],
            SpaceDescriptor::linf(2),
            SpaceDescriptor::l2(3),
        );
        let p = pi2(&u).unwrap();
        let o = op_norm(&u).unwrap();
        assert!((p - o).abs() < 1e-7, "pi2 {p} vs op {o}");
    }

    #[test]
    fn pi2_witness_attains() {
        let u = op(
            &[&[0.4, -0.2, 0.7], &[0.1, 0.9, -0.3]],
            SpaceDescriptor::linf(3),
            SpaceDescriptor::l2(2),
        );
        let (val, w) = pi2_witness(&u).unwrap();
        let gram = u.mat.transpose().matmul(&u.mat);
        let attained = gram.inner(&w).max(0.0).sqrt();
        assert!((val - attained).abs() < 1e-6, "{val} vs {attained}");
        for i in 0..3 {
            assert!(w[(i, i)] <= 1.0 + 1e-7);
        }
    }

    #[test]
    fn gamma2_examples() {
        // identity on l1(n): the Euclidean distortion sqrt(n)
        for n in 2..=4usize {
            let u = OperatorMatrix::new(
                Mat::<f64>::identity(n),
                SpaceDescriptor::l1(n),
                SpaceDescriptor::l1(n),
            );
            let g = gamma2(&u).unwrap();
            assert!((g - (n as f64).sqrt()).abs() < 1e-6, "n={n}: {g}");
        }

        // Euclidean domain: gamma2 = op norm
        let u = op(&[&[1., 2.], &[0., 1.]], SpaceDescriptor::l2(2), SpaceDescriptor::linf(2));
        assert!((gamma2(&u).unwrap() - op_norm(&u).unwrap()).abs() < 1e-12);

        // sign matrix l1(2) -> linf(2): sqrt(2)
        let u = op(&[&[1., 1.], &[1., -1.]], SpaceDescriptor::l1(2), SpaceDescriptor::linf(2));
        assert!((gamma2(&u).unwrap() - 2f64.sqrt()).abs() < 1e-6);
    }

    #[test]
    fn gamma2_star_examples() {
        // Euclidean endpoints: trace-dual of the operator norm is the trace norm
        let m = Mat::<f64>::from_rows(&[&[1., 2.], &[3., -1.]]);
        let v = OperatorMatrix::new(m.clone(), SpaceDescriptor::l2(2), SpaceDescriptor::l2(2));
        let expect: f64 = svd(&m).1.iter().sum();
        let got = gamma2_star(&v).unwrap();
        assert!((got - expect).abs() < 1e-6, "{got} vs {expect}");

        // zero map
        let v = op(&[&[0., 0.], &[0., 0.]], SpaceDescriptor::l1(2), SpaceDescriptor::linf(2));
        assert!(gamma2_star(&v).unwrap().abs() < 1e-7);

        // rank-1: every ideal norm equals the operator norm
        let v = OperatorMatrix::new(
            outer(&[1.0f64, -2.0], &[0.5, 1.0]),
            SpaceDescriptor::linf(2),
            SpaceDescriptor::l1(2),
        );
        let got = gamma2_star(&v).unwrap();
        let expect = op_norm(&v).unwrap();
        assert!((got - expect).abs() < 1e-6, "{got} vs {expect}");

        // CHSH-type sign matrix linf(2) -> l1(2): value 2 sqrt(2)
        let v = op(&[&[1., 1.], &[1., -1.]], SpaceDescriptor::linf(2), SpaceDescriptor::l1(2));
        let got = gamma2_star(&v).unwrap();
        assert!((got - 2.0 * 2f64.sqrt()).abs() < 1e-6, "{got}");
    }
}
