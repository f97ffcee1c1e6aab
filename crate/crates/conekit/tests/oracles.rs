//! Independent oracles for the solver-backed norm values: brute-force
//! parameter searches and closed forms that never touch the SDP path.

use conekit::idealnorms::{gamma2, gamma2_star, nuclear, pi2, pi2_witness};
use conekit::numerics::{sdp_solve, svd, Mat, SdpBuilder, SdpStatus, SparseSym};
use conekit::spaces::{op_norm, OperatorMatrix, SpaceDescriptor};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Brute-force gamma2 of a 2x2 matrix via two-dimensional factorizations
/// with unit rows and columns: a nested grid over the candidate scale, with
/// an angle grid plus local refinement measuring how well `M/gamma` can be
/// written as a Gram matrix of unit vectors.
fn gamma2_oracle_2x2(m: &[[f64; 2]; 2]) -> f64 {
    // x1 = (1, 0), x2 = (cos phi, sin phi), y_i = (cos psi_i, sin psi_i)
    let defect_at = |gamma: f64, phi: f64, psi1: f64, psi2: f64| -> f64 {
        let g = |i: usize, j: usize| m[i][j] / gamma;
        let d1 = (psi1.cos() - g(0, 0)).abs();
        let d2 = (psi2.cos() - g(1, 0)).abs();
        let d3 = ((psi1 - phi).cos() - g(0, 1)).abs();
        let d4 = ((psi2 - phi).cos() - g(1, 1)).abs();
        d1.max(d2).max(d3).max(d4)
    };
    let defect = |gamma: f64| -> f64 {
        let pi = std::f64::consts::PI;
        let steps = 24;
        let mut best = (f64::INFINITY, 0.0, 0.0, 0.0);
        for a in 0..steps {
            let phi = -pi + 2.0 * pi * a as f64 / steps as f64;
            for b in 0..steps {
                let psi1 = -pi + 2.0 * pi * b as f64 / steps as f64;
                for c in 0..steps {
                    let psi2 = -pi + 2.0 * pi * c as f64 / steps as f64;
                    let d = defect_at(gamma, phi, psi1, psi2);
                    if d < best.0 {
                        best = (d, phi, psi1, psi2);
                    }
                }
            }
        }
        let (mut d0, mut phi, mut psi1, mut psi2) = best;
        let mut width = 2.0 * std::f64::consts::PI / steps as f64;
        for _ in 0..60 {
            let mut improved = false;
            for k in 0..3 {
                for dir in [-1.0, 1.0] {
                    let (p, q, r) = match k {
                        0 => (phi + dir * width, psi1, psi2),
                        1 => (phi, psi1 + dir * width, psi2),
                        _ => (phi, psi1, psi2 + dir * width),
                    };
                    let d = defect_at(gamma, p, q, r);
                    if d < d0 {
                        d0 = d;
                        phi = p;
                        psi1 = q;
                        psi2 = r;
                        improved = true;
                    }
                }
            }
            if !improved {
                width *= 0.5;
            }
        }
        d0
    };
    // nested grid on the scale: coarse sweep, then shrink around the best
    let (mut lo, mut hi) = (1.0, 2.5);
    let mut best_gamma = lo;
    for _round in 0..6 {
        let mut best = f64::INFINITY;
        for i in 0..=30 {
            let gamma = lo + (hi - lo) * i as f64 / 30.0;
            let d = defect(gamma);
            if d < best {
                best = d;
                best_gamma = gamma;
            }
        }
        let span = (hi - lo) / 10.0;
        lo = (best_gamma - span).max(1.0);
        hi = best_gamma + span;
    }
    best_gamma
}

#[test]
fn gamma2_sign_matrix_matches_grid_oracle() {
    let m = [[1.0, 1.0], [1.0, -1.0]];
    let oracle = gamma2_oracle_2x2(&m);
    assert!(
        (oracle - 2f64.sqrt()).abs() < 1e-4,
        "grid oracle should find sqrt(2), got {oracle}"
    );
    let u = OperatorMatrix::new(
        Mat::<f64>::from_rows(&[&[1.0, 1.0], &[1.0, -1.0]]),
        SpaceDescriptor::l1(2),
        SpaceDescriptor::linf(2),
    );
    let sdp = gamma2(&u).unwrap();
    assert!((sdp - oracle).abs() < 1e-4, "sdp {sdp} vs oracle {oracle}");
}

/// The same oracle drives the example from the SDP contract: the gamma2 SDP
/// value for the sign matrix is sqrt(2).
#[test]
fn sdp_gamma2_form_matches_oracle() {
    // min c s.t. [[A, M], [M^T, B]] >= 0, diag <= c for the sign matrix
    let m = Mat::<f64>::from_rows(&[&[1.0, 1.0], &[1.0, -1.0]]);
    let mut b = SdpBuilder::<f64>::new(7);
    // vars: c, a11, a12, a22, b11, b12, b22
    b.set_objective(0, 1.0);
    let blk = b.block(4);
    let mut f0 = Mat::zeros(4, 4);
    for i in 0..2 {
        for j in 0..2 {
            f0[(i, 2 + j)] = m[(i, j)];
            f0[(2 + j, i)] = m[(i, j)];
        }
    }
    b.set_f0(blk, f0);
    for (var, (i, j)) in [(1, (0, 0)), (2, (0, 1)), (3, (1, 1))] {
        b.term(blk, var, SparseSym::new().entry(i, j, 1.0));
    }
    for (var, (i, j)) in [(4, (2, 2)), (5, (2, 3)), (6, (3, 3))] {
        b.term(blk, var, SparseSym::new().entry(i, j, 1.0));
    }
    for var in [1, 3, 4, 6] {
        b.scalar_constraint(0.0, &[(0, 1.0), (var, -1.0)]);
    }
    let sol = sdp_solve(&b.build(), 1e-9).unwrap();
    assert_eq!(sol.status, SdpStatus::Optimal);
    assert!((sol.value - 2f64.sqrt()).abs() < 1e-6, "value {}", sol.value);
}

#[test]
fn sdp_max_eigenvalue_closed_form() {
    // min t s.t. tI - A >= 0 equals the top eigenvalue, for random symmetric A
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..25 {
        let raw = Mat::<f64>::from_fn(4, 4, |_, _| rng.gen_range(-1.0..1.0));
        let a = raw.symmetrize();
        let expect = conekit::numerics::sym_eig(&a).0[0];
        let mut b = SdpBuilder::<f64>::new(1);
        b.set_objective(0, 1.0);
        let blk = b.block(4);
        b.set_f0(blk, a.scale(-1.0));
        let mut f = SparseSym::new();
        for i in 0..4 {
            f.push(i, i, 1.0);
        }
        b.term(blk, 0, f);
        let sol = sdp_solve(&b.build(), 1e-9).unwrap();
        assert_eq!(sol.status, SdpStatus::Optimal);
        assert!((sol.value - expect).abs() < 1e-7, "{} vs {expect}", sol.value);
    }
}

#[test]
fn nuclear_linf_l1_closed_form() {
    // Nuc(u: linf -> l1) = sum of absolute entries
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..10 {
        let m = Mat::<f64>::from_fn(3, 2, |_, _| rng.gen_range(-2.0..2.0));
        let expect: f64 = m.data().iter().map(|x| x.abs()).sum();
        let u = OperatorMatrix::new(m, SpaceDescriptor::linf(2), SpaceDescriptor::l1(3));
        let got = nuclear(&u).unwrap();
        assert!((got - expect).abs() < 1e-6 * (1.0 + expect), "{got} vs {expect}");
    }
}

#[test]
fn gamma2_star_trace_norm_sweep() {
    // Euclidean endpoints: gamma2* equals the sum of singular values
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..10 {
        let m = Mat::<f64>::from_fn(3, 3, |_, _| rng.gen_range(-1.0..1.0));
        let expect: f64 = svd(&m).1.iter().sum();
        let v = OperatorMatrix::new(m, SpaceDescriptor::l2(3), SpaceDescriptor::l2(3));
        let got = gamma2_star(&v).unwrap();
        assert!((got - expect).abs() < 1e-6 * (1.0 + expect), "{got} vs {expect}");
    }
}

#[test]
fn pi2_dominates_contracted_hs_and_attains() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for (family, dim) in [
        (SpaceDescriptor::linf(3), 3usize),
        (SpaceDescriptor::l1(3), 3usize),
    ] {
        let m = Mat::<f64>::from_fn(2, dim, |_, _| rng.gen_range(-1.0..1.0));
        let u = OperatorMatrix::new(m.clone(), family, SpaceDescriptor::l2(2));
        let p = pi2(&u).unwrap();
        // pi2(u) >= hs(u c) for every contraction c: l2 -> dom
        for _ in 0..200 {
            let raw = Mat::<f64>::from_fn(dim, dim, |_, _| rng.gen_range(-1.0..1.0));
            let c = OperatorMatrix::new(raw, SpaceDescriptor::l2(dim), family);
            let n = op_norm(&c).unwrap();
            let scaled = c.mat.scale(1.0 / n);
            let composed = m.matmul(&scaled);
            let hs = composed.fro_norm();
            assert!(p >= hs - 1e-8, "pi2 {p} < hs of contraction {hs}");
        }
        // the optimizer-refined contraction attains pi2
        let (val, w) = pi2_witness(&u).unwrap();
        let (vals, vecs) = conekit::numerics::sym_eig(&w);
        let mut root = Mat::<f64>::zeros(dim, dim);
        for (i, &l) in vals.iter().enumerate() {
            root[(i, i)] = l.max(0.0).sqrt();
        }
        let half = vecs.matmul(&root).matmul(&vecs.transpose());
        let attained = m.matmul(&half).fro_norm();
        assert!((val - attained).abs() < 1e-5, "{val} vs attained {attained}");
    }
}
