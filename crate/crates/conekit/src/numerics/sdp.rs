//! A small dense semidefinite programming solver.
//!
//! Problems are stated in LMI form
//!
//! ```text
//!     minimize    c^T y
//!     subject to  F_0 + sum_i y_i F_i  >= 0   (block diagonal)
//! ```
//!
//! and solved by a primal-dual interior-point method on the homogeneous
//! self-dual embedding, with the HKM direction and Mehrotra
//! predictor-corrector steps. Infeasibility surfaces as a certificate flag of
//! the embedding (`tau -> 0` with a separating `X`), never as a mid-iteration
//! panic. Everything is deterministic: identical inputs give identical
//! iterates, bit for bit.

use crate::error::{Error, Result};
use crate::scalar::{cast, Real};

use super::eig::min_eig_sym;
use super::mat::{dot, norm_inf, Mat};

/// Symmetric sparse matrix stored as upper-triangle entries.
#[derive(Clone, Debug)]
pub struct SparseSym<R> {
    entries: Vec<(usize, usize, R)>,
}

impl<R: Real> SparseSym<R> {
    pub fn new() -> Self {
        SparseSym { entries: Vec::new() }
    }

    pub fn entry(mut self, i: usize, j: usize, v: R) -> Self {
        self.push(i, j, v);
        self
    }

    pub fn push(&mut self, i: usize, j: usize, v: R) {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        self.entries.push((a, b, v));
    }

    fn add_to(&self, target: &mut Mat<R>, scale: R) {
        for &(i, j, v) in &self.entries {
            target[(i, j)] += v * scale;
            if i != j {
                target[(j, i)] += v * scale;
            }
        }
    }

    /// `<F, D>` for a (not necessarily symmetric) dense `D`.
    fn inner(&self, d: &Mat<R>) -> R {
        let mut acc = R::zero();
        for &(i, j, v) in &self.entries {
            acc += v * d[(i, j)];
            if i != j {
                acc += v * d[(j, i)];
            }
        }
        acc
    }

    fn max_abs(&self) -> R {
        self.entries.iter().fold(R::zero(), |m, &(_, _, v)| m.max(v.abs()))
    }
}

impl<R: Real> Default for SparseSym<R> {
    fn default() -> Self {
        Self::new()
    }
}

/// One PSD block of the LMI `F0 + sum_i y_i F_i >= 0`.
#[derive(Clone, Debug)]
pub struct LmiBlock<R: Real> {
    pub dim: usize,
    pub f0: Mat<R>,
    /// `(variable index, coefficient matrix)` pairs.
    pub terms: Vec<(usize, SparseSym<R>)>,
}

/// An LMI-form semidefinite program.
#[derive(Clone, Debug)]
pub struct SdpProblem<R: Real> {
    pub objective: Vec<R>,
    pub blocks: Vec<LmiBlock<R>>,
}

impl<R: Real> SdpProblem<R> {
    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    /// Evaluates the constraint matrix of one block at `y`.
    pub fn block_at(&self, b: usize, y: &[R]) -> Mat<R> {
        let blk = &self.blocks[b];
        let mut s = blk.f0.clone();
        for (var, f) in &blk.terms {
            f.add_to(&mut s, y[*var]);
        }
        s
    }

    /// Smallest eigenvalue over all constraint blocks at `y`.
    pub fn min_slack(&self, y: &[R]) -> R {
        (0..self.blocks.len())
            .map(|b| min_eig_sym(&self.block_at(b, y)))
            .fold(R::infinity(), |a, b| a.min(b))
    }
}

/// Incremental construction of [`SdpProblem`]s.
pub struct SdpBuilder<R: Real> {
    objective: Vec<R>,
    blocks: Vec<LmiBlock<R>>,
}

impl<R: Real> SdpBuilder<R> {
    pub fn new(num_vars: usize) -> Self {
        SdpBuilder { objective: vec![R::zero(); num_vars], blocks: Vec::new() }
    }

    pub fn set_objective(&mut self, var: usize, coeff: R) {
        self.objective[var] = coeff;
    }

    pub fn block(&mut self, dim: usize) -> usize {
        self.blocks.push(LmiBlock { dim, f0: Mat::zeros(dim, dim), terms: Vec::new() });
        self.blocks.len() - 1
    }

    pub fn set_f0(&mut self, block: usize, f0: Mat<R>) {
        assert_eq!(f0.rows(), self.blocks[block].dim);
        self.blocks[block].f0 = f0;
    }

    pub fn f0_entry(&mut self, block: usize, i: usize, j: usize, v: R) {
        self.blocks[block].f0[(i, j)] += v;
        if i != j {
            self.blocks[block].f0[(j, i)] += v;
        }
    }

    pub fn term(&mut self, block: usize, var: usize, f: SparseSym<R>) {
        self.blocks[block].terms.push((var, f));
    }

    /// Scalar constraint `c0 + sum coeffs_i y_i >= 0` as a 1x1 block.
    pub fn scalar_constraint(&mut self, c0: R, terms: &[(usize, R)]) {
        let b = self.block(1);
        self.blocks[b].f0[(0, 0)] = c0;
        for &(var, coeff) in terms {
            self.blocks[b].terms.push((var, SparseSym::new().entry(0, 0, coeff)));
        }
    }

    pub fn build(self) -> SdpProblem<R> {
        SdpProblem { objective: self.objective, blocks: self.blocks }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SdpStatus {
    Optimal,
    Infeasible,
    MaxIterations,
}

/// Solver output. `point` is the LMI variable `y`; `dual` holds the dual PSD
/// matrix of each block (normalized by `tau`), which doubles as the optimal
/// Pietsch/Gram witness in the norm computations.
#[derive(Clone, Debug)]
pub struct SdpSolution<R: Real> {
    pub status: SdpStatus,
    pub value: R,
    pub point: Vec<R>,
    pub psd_slack: R,
    pub dual: Vec<Mat<R>>,
    pub iterations: usize,
}

#[derive(Clone, Copy, Debug)]
pub struct SdpOptions<R> {
    pub tol: R,
    pub max_iter: usize,
}

impl<R: Real> Default for SdpOptions<R> {
    fn default() -> Self {
        SdpOptions { tol: cast(1e-9), max_iter: 500 }
    }
}

/// Solves the LMI-form SDP to relative tolerance `tol`.
pub fn sdp_solve<R: Real>(problem: &SdpProblem<R>, tol: R) -> Result<SdpSolution<R>> {
    solve_with(problem, &SdpOptions { tol, ..Default::default() })
}

struct Workspace<R: Real> {
    x: Vec<Mat<R>>,    // dual PSD variable per block
    s: Vec<Mat<R>>,    // constraint slack per block
    y: Vec<R>,
    tau: R,
    kappa: R,
}

pub fn solve_with<R: Real>(problem: &SdpProblem<R>, opts: &SdpOptions<R>) -> Result<SdpSolution<R>> {
    let m = problem.num_vars();
    let nblocks = problem.blocks.len();
    if nblocks == 0 {
        return Err(Error::Solver("problem has no constraint blocks".into()));
    }
    for blk in &problem.blocks {
        for (var, _) in &blk.terms {
            if *var >= m {
                return Err(Error::Solver("constraint references unknown variable".into()));
            }
        }
    }
    let total_dim: usize = problem.blocks.iter().map(|b| b.dim).sum();
    let degree = cast::<R>(total_dim as f64 + 1.0);

    let c = &problem.objective;
    let c_scale = R::one() + norm_inf(c);
    let f_scale = problem
        .blocks
        .iter()
        .map(|b| {
            b.f0.max_abs().max(b.terms.iter().fold(R::zero(), |m, (_, f)| m.max(f.max_abs())))
        })
        .fold(R::one(), |a, b| a.max(b));

    let mut w = Workspace {
        x: problem.blocks.iter().map(|b| Mat::identity(b.dim)).collect(),
        s: problem.blocks.iter().map(|b| Mat::identity(b.dim)).collect(),
        y: vec![R::zero(); m],
        tau: R::one(),
        kappa: R::one(),
    };

    let mu0 = (inner_all(&w.x, &w.s) + w.tau * w.kappa) / degree;
    let mut iterations = 0;
    // best iterate so far, by the worst of the three relative measures
    let mut best_score = R::infinity();
    let mut best: Option<Workspace<R>> = None;
    let mut since_best = 0usize;
    let feas_tol = opts.tol.max(cast(1e-7));

    for iter in 0..opts.max_iter {
        iterations = iter + 1;

        // residuals
        let r1: Vec<R> = (0..m)
            .map(|i| c[i] * w.tau - trace_against_var(problem, i, &w.x))
            .collect();
        let r2: Vec<Mat<R>> = (0..nblocks)
            .map(|b| {
                let mut out = w.s[b].clone();
                let blk = &problem.blocks[b];
                out = out.sub(&blk.f0.scale(w.tau));
                for (var, f) in &blk.terms {
                    f.add_to(&mut out, -w.y[*var]);
                }
                out
            })
            .collect();
        let f0_dot_x = f0_inner(problem, &w.x);
        let r3 = -dot(c, &w.y) - f0_dot_x - w.kappa;

        let mu = (inner_all(&w.x, &w.s) + w.tau * w.kappa) / degree;

        // convergence checks, relative to the iterate magnitudes
        let xmax = w.x.iter().fold(R::zero(), |a, x| a.max(x.max_abs()));
        let smax = w.s.iter().fold(R::zero(), |a, s| a.max(s.max_abs()));
        let ymax = norm_inf(&w.y);
        let pres = norm_inf(&r1) / (w.tau * c_scale + f_scale * xmax);
        let dres = r2.iter().fold(R::zero(), |a, r| a.max(r.max_abs()))
            / (w.tau * f_scale + f_scale * ymax + smax + R::one());
        let pobj = dot(c, &w.y) / w.tau;
        let dobj = -f0_dot_x / w.tau;
        let relgap = (pobj - dobj).abs() / (R::one() + pobj.abs() + dobj.abs());
        #[allow(unused)]
        if std::env::var_os("CONEKIT_SDP_TRACE").is_some() {
            use num_traits::ToPrimitive;
            eprintln!(
                "iter {iter:3} mu {:9.2e} tau {:9.2e} kappa {:9.2e} pres {:9.2e} dres {:9.2e} gap {:9.2e} pobj {:12.6}",
                mu.to_f64().unwrap_or(f64::NAN),
                w.tau.to_f64().unwrap_or(f64::NAN),
                w.kappa.to_f64().unwrap_or(f64::NAN),
                pres.to_f64().unwrap_or(f64::NAN),
                dres.to_f64().unwrap_or(f64::NAN),
                relgap.to_f64().unwrap_or(f64::NAN),
                pobj.to_f64().unwrap_or(f64::NAN)
            );
        }
        if pres <= feas_tol && dres <= feas_tol && relgap <= opts.tol {
            return Ok(finish(problem, &w, SdpStatus::Optimal, iterations));
        }
        let score = pres.max(dres).max(relgap);
        if score < best_score {
            best_score = score;
            best = Some(Workspace {
                x: w.x.clone(),
                s: w.s.clone(),
                y: w.y.clone(),
                tau: w.tau,
                kappa: w.kappa,
            });
            since_best = 0;
        } else {
            since_best += 1;
        }
        // numerical floor: accept the best near-feasible iterate once the
        // iteration has stopped making progress
        if since_best >= 10 {
            if let Some(ref bw) = best {
                if best_score <= feas_tol.max(opts.tol * cast(100.0)).max(cast(1e-6)) {
                    return Ok(finish(problem, bw, SdpStatus::Optimal, iterations));
                }
            }
            return Ok(finish(problem, &w, SdpStatus::MaxIterations, iterations));
        }

        // infeasibility certificate: tau collapsed relative to kappa
        if w.tau < cast::<R>(1e-10) * w.kappa.max(R::one()) && mu < cast::<R>(1e-10) * mu0 {
            let xnorm = w.x.iter().fold(R::zero(), |a, x| a.max(x.max_abs())).max(R::epsilon());
            if f0_dot_x < -cast::<R>(1e-8) * xnorm * f_scale {
                return Ok(finish(problem, &w, SdpStatus::Infeasible, iterations));
            }
            return Ok(finish(problem, &w, SdpStatus::MaxIterations, iterations));
        }

        // factor S blocks and build the Schur complement
        let mut chol = Vec::with_capacity(nblocks);
        for b in 0..nblocks {
            match w.s[b].cholesky() {
                Some(l) => chol.push(l),
                None => return Ok(finish(problem, &w, SdpStatus::MaxIterations, iterations)),
            }
        }
        let sinv: Vec<Mat<R>> = chol.iter().map(inv_from_chol).collect();

        // G_j = S^-1 F_j X per block term, plus the F0 column
        let mut schur = Mat::<R>::zeros(m, m);
        let mut h = vec![R::zero(); m];
        let mut h0 = R::zero();
        for b in 0..nblocks {
            let blk = &problem.blocks[b];
            let gs: Vec<Mat<R>> = blk
                .terms
                .iter()
                .map(|(_, f)| sparse_sandwich(&sinv[b], f, &w.x[b]))
                .collect();
            let g0 = sinv[b].matmul(&blk.f0).matmul(&w.x[b]);
            for (ti, (vi, fi)) in blk.terms.iter().enumerate() {
                // Tr[F_i S^-1 F_j X] is symmetric in (i, j); fill both halves
                for tj in 0..=ti {
                    let vj = blk.terms[tj].0;
                    let val = fi.inner(&gs[tj]);
                    if ti == tj {
                        schur[(*vi, vj)] += val;
                    } else {
                        schur[(*vi, vj)] += val;
                        schur[(vj, *vi)] += val;
                    }
                }
                h[*vi] += fi.inner(&g0);
            }
            h0 += blk.f0.inner(&g0);
        }
        let reg = cast::<R>(1e-13) * (R::one() + schur.trace().abs());
        for i in 0..m {
            schur[(i, i)] += reg;
        }
        let schur_l = match schur.cholesky() {
            Some(l) => l,
            None => return Ok(finish(problem, &w, SdpStatus::MaxIterations, iterations)),
        };
        // Cholesky solve with one guarded step of iterative refinement
        let schur_solve = |rhs: &[R]| -> Vec<R> {
            let z = schur_l.chol_solve(rhs);
            let res = |cand: &[R]| {
                let mz = schur.matvec(cand);
                rhs.iter().zip(&mz).fold(R::zero(), |acc, (&a, &b)| acc + (a - b) * (a - b))
            };
            let r0 = res(&z);
            if !r0.is_finite() || r0 == R::zero() {
                return z;
            }
            let mz = schur.matvec(&z);
            let r: Vec<R> = rhs.iter().zip(&mz).map(|(&a, &b)| a - b).collect();
            let dz = schur_l.chol_solve(&r);
            let refined: Vec<R> = z.iter().zip(&dz).map(|(&a, &b)| a + b).collect();
            let r1 = res(&refined);
            if r1.is_finite() && r1 < r0 {
                refined
            } else {
                z
            }
        };

        let solve_dir = |rc: &[Mat<R>], rc_tau: R| -> (Vec<R>, R, Vec<Mat<R>>, Vec<Mat<R>>, R) {
            let schur_solve = &schur_solve;
            // p_i and u_i vectors
            let mut p = vec![R::zero(); m];
            let mut p0 = R::zero();
            let mut u = vec![R::zero(); m];
            let mut u0 = R::zero();
            for b in 0..nblocks {
                let blk = &problem.blocks[b];
                let rcs = rc[b].matmul(&sinv[b]).symmetrize();
                let sru = sinv[b].matmul(&r2[b]).matmul(&w.x[b]);
                for (var, f) in &blk.terms {
                    p[*var] += f.inner(&rcs);
                    u[*var] += f.inner(&sru);
                }
                p0 += blk.f0.inner(&rcs);
                u0 += blk.f0.inner(&sru);
            }
            let v: Vec<R> = (0..m).map(|i| -r1[i] + p[i] + u[i]).collect();
            let v0 = -r3 + p0 + u0 + rc_tau / w.tau;
            let hpc: Vec<R> = (0..m).map(|i| h[i] + c[i]).collect();
            let hmc: Vec<R> = (0..m).map(|i| h[i] - c[i]).collect();
            let minv_v = schur_solve(&v);
            let minv_hpc = schur_solve(&hpc);
            let denom = h0 + w.kappa / w.tau - dot(&hmc, &minv_hpc);
            let dtau = (v0 - dot(&hmc, &minv_v)) / denom;
            let dy: Vec<R> = (0..m).map(|i| minv_v[i] - minv_hpc[i] * dtau).collect();
            // dS per block
            let ds: Vec<Mat<R>> = (0..nblocks)
                .map(|b| {
                    let blk = &problem.blocks[b];
                    let mut out = r2[b].scale(-R::one());
                    out = out.add(&blk.f0.scale(dtau));
                    for (var, f) in &blk.terms {
                        f.add_to(&mut out, dy[*var]);
                    }
                    out
                })
                .collect();
            // dX per block
            let dx: Vec<Mat<R>> = (0..nblocks)
                .map(|b| {
                    let t1 = rc[b].matmul(&sinv[b]).symmetrize();
                    let t2 = sinv[b].matmul(&ds[b]).matmul(&w.x[b]).symmetrize();
                    t1.sub(&t2)
                })
                .collect();
            let dkappa = (rc_tau - w.kappa * dtau) / w.tau;
            (dy, dtau, dx, ds, dkappa)
        };

        // predictor (affine direction)
        let rc_aff: Vec<Mat<R>> = (0..nblocks).map(|b| w.x[b].matmul(&w.s[b]).scale(-R::one())).collect();
        let (_, dtau_a, dx_a, ds_a, dkappa_a) = solve_dir(&rc_aff, -w.tau * w.kappa);
        let alpha_aff = step_length(&w, &dx_a, &ds_a, dtau_a, dkappa_a, &chol);
        let mu_aff = {
            let mut acc = R::zero();
            for b in 0..nblocks {
                let xn = w.x[b].add(&dx_a[b].scale(alpha_aff));
                let sn = w.s[b].add(&ds_a[b].scale(alpha_aff));
                acc += xn.inner(&sn);
            }
            (acc + (w.tau + alpha_aff * dtau_a) * (w.kappa + alpha_aff * dkappa_a)) / degree
        };
        let ratio = (mu_aff / mu).max(R::zero());
        let sigma = (ratio * ratio * ratio).min(R::one()).max(cast(1e-8));

        // corrector
        let rc: Vec<Mat<R>> = (0..nblocks)
            .map(|b| {
                let mut out = w.x[b].matmul(&w.s[b]).scale(-R::one());
                out = out.sub(&dx_a[b].matmul(&ds_a[b]));
                for i in 0..out.rows() {
                    out[(i, i)] += sigma * mu;
                }
                out
            })
            .collect();
        let rc_tau = sigma * mu - w.tau * w.kappa - dtau_a * dkappa_a;
        let (dy, dtau, dx, ds, dkappa) = solve_dir(&rc, rc_tau);
        if !dtau.is_finite() || dy.iter().any(|v| !v.is_finite()) {
            if let Some(ref bw) = best {
                if best_score <= feas_tol.max(opts.tol * cast(100.0)).max(cast(1e-6)) {
                    return Ok(finish(problem, bw, SdpStatus::Optimal, iterations));
                }
            }
            return Ok(finish(problem, &w, SdpStatus::MaxIterations, iterations));
        }
        let alpha = step_length(&w, &dx, &ds, dtau, dkappa, &chol) * cast::<R>(0.98);
        let alpha = alpha.min(R::one());

        for b in 0..nblocks {
            w.x[b] = w.x[b].add(&dx[b].scale(alpha)).symmetrize();
            w.s[b] = w.s[b].add(&ds[b].scale(alpha)).symmetrize();
        }
        for i in 0..m {
            w.y[i] += alpha * dy[i];
        }
        w.tau += alpha * dtau;
        w.kappa += alpha * dkappa;
    }

    Ok(finish(problem, &w, SdpStatus::MaxIterations, iterations))
}

fn finish<R: Real>(
    problem: &SdpProblem<R>,
    w: &Workspace<R>,
    status: SdpStatus,
    iterations: usize,
) -> SdpSolution<R> {
    let tau = w.tau.max(R::min_positive_value());
    let y: Vec<R> = w.y.iter().map(|&v| v / tau).collect();
    let psd_slack = problem.min_slack(&y);
    let dual: Vec<Mat<R>> = w.x.iter().map(|x| x.scale(R::one() / tau)).collect();
    // the optimum sits between the primal objective and the dual bound;
    // report the midpoint, which halves the gap error
    let value = if status == SdpStatus::Optimal {
        let pobj = dot(&problem.objective, &y);
        let dobj = -f0_inner(problem, &dual);
        (pobj + dobj) * cast(0.5)
    } else {
        dot(&problem.objective, &y)
    };
    SdpSolution { status, value, point: y, psd_slack, dual, iterations }
}

fn inner_all<R: Real>(xs: &[Mat<R>], ss: &[Mat<R>]) -> R {
    xs.iter().zip(ss).fold(R::zero(), |acc, (x, s)| acc + x.inner(s))
}

fn trace_against_var<R: Real>(problem: &SdpProblem<R>, var: usize, x: &[Mat<R>]) -> R {
    let mut acc = R::zero();
    for (b, blk) in problem.blocks.iter().enumerate() {
        for (v, f) in &blk.terms {
            if *v == var {
                acc += f.inner(&x[b]);
            }
        }
    }
    acc
}

fn f0_inner<R: Real>(problem: &SdpProblem<R>, x: &[Mat<R>]) -> R {
    problem.blocks.iter().enumerate().fold(R::zero(), |acc, (b, blk)| acc + blk.f0.inner(&x[b]))
}

/// `S^-1 F X` for sparse symmetric `F`, via rank-one expansion.
fn sparse_sandwich<R: Real>(sinv: &Mat<R>, f: &SparseSym<R>, x: &Mat<R>) -> Mat<R> {
    let n = sinv.rows();
    let mut out = Mat::zeros(n, n);
    for &(i, j, v) in &f.entries {
        for r in 0..n {
            let a = sinv[(r, i)] * v;
            if a != R::zero() {
                for c0 in 0..n {
                    out[(r, c0)] += a * x[(j, c0)];
                }
            }
            if i != j {
                let b = sinv[(r, j)] * v;
                if b != R::zero() {
                    for c0 in 0..n {
                        out[(r, c0)] += b * x[(i, c0)];
                    }
                }
            }
        }
    }
    out
}

/// Dense inverse from a Cholesky factor.
fn inv_from_chol<R: Real>(l: &Mat<R>) -> Mat<R> {
    let n = l.rows();
    let mut inv = Mat::zeros(n, n);
    for j in 0..n {
        let mut e = vec![R::zero(); n];
        e[j] = R::one();
        let col = l.chol_solve(&e);
        for i in 0..n {
            inv[(i, j)] = col[i];
        }
    }
    inv.symmetrize()
}

/// Largest step in `[0, 1e6]` keeping every block PSD and `tau, kappa >= 0`.
fn step_length<R: Real>(
    w: &Workspace<R>,
    dx: &[Mat<R>],
    ds: &[Mat<R>],
    dtau: R,
    dkappa: R,
    chol_s: &[Mat<R>],
) -> R {
    let big = cast::<R>(1e6);
    let mut alpha = big;
    for b in 0..dx.len() {
        if let Some(lx) = w.x[b].cholesky() {
            alpha = alpha.min(psd_step(&lx, &dx[b]));
        } else {
            alpha = alpha.min(cast(1e-3));
        }
        alpha = alpha.min(psd_step(&chol_s[b], &ds[b]));
    }
    if dtau < R::zero() {
        alpha = alpha.min(-w.tau / dtau);
    }
    if dkappa < R::zero() {
        alpha = alpha.min(-w.kappa / dkappa);
    }
    alpha.min(big)
}

/// Max step keeping `LL^T + a*D >= 0`: from the smallest eigenvalue of
/// `L^-1 D L^-T`.
fn psd_step<R: Real>(l: &Mat<R>, d: &Mat<R>) -> R {
    let n = l.rows();
    // W = L^-1 D L^-T, via two triangular solves
    let mut w = Mat::zeros(n, n);
    // first: Y = L^-1 D (column solves with forward substitution)
    let mut y = Mat::zeros(n, n);
    for j in 0..n {
        let mut col: Vec<R> = (0..n).map(|i| d[(i, j)]).collect();
        for i in 0..n {
            for k in 0..i {
                let v = l[(i, k)] * col[k];
                col[i] = col[i] - v;
            }
            col[i] = col[i] / l[(i, i)];
        }
        for i in 0..n {
            y[(i, j)] = col[i];
        }
    }
    // second: W = Y L^-T => W^T = L^-1 Y^T
    for j in 0..n {
        let mut col: Vec<R> = (0..n).map(|i| y[(j, i)]).collect();
        for i in 0..n {
            for k in 0..i {
                let v = l[(i, k)] * col[k];
                col[i] = col[i] - v;
            }
            col[i] = col[i] / l[(i, i)];
        }
        for i in 0..n {
            w[(j, i)] = col[i];
        }
    }
    let lam_min = min_eig_sym(&w.symmetrize());
    if lam_min >= R::zero() {
        cast(1e6)
    } else {
        -R::one() / lam_min
    }
}
