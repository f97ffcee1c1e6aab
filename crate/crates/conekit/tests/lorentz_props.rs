//! Structural properties of the Lorentz-map algorithms: automorphism
//! invariance, adjoint closure, convexity, trace duality, the criterion
//! equivalences and the extremal-Gram bound.

use conekit::cones::{j_mat, ConeDescriptor, ConeMap};
use conekit::idealnorms::gamma2;
use conekit::lorentz::{
    extreme_pos0, is_eb_lorentz, max_ea_criterion, sinkhorn_normal_form,
};
use conekit::numerics::{norm2, Mat};
use conekit::sample;
use conekit::spaces::{OperatorMatrix, SpaceDescriptor};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn lorentz_map(mat: Mat<f64>, n: usize, m: usize) -> ConeMap<f64> {
    ConeMap::new(mat, ConeDescriptor::Lorentz(n), ConeDescriptor::Lorentz(m))
}

fn sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(|a, b| b.partial_cmp(a).unwrap());
    v
}

#[test]
fn eigenvalues_invariant_under_automorphism_dressing() {
    let mut rng = ChaCha8Rng::seed_from_u64(200);
    for _ in 0..200 {
        let (n, m) = (rng.gen_range(2..=4), rng.gen_range(2..=4));
        let (p, _) = sample::dressed_central::<f64>(&mut rng, n, m, 0.8, 1e-6);
        let (_, eigs) = max_ea_criterion(&p, 1e-9).unwrap();
        // dress with fresh unit-scale automorphisms
        let a = sample::automorphism::<f64>(&mut rng, n, 0.8, true);
        let b = sample::automorphism::<f64>(&mut rng, m, 0.8, true);
        let dressed = lorentz_map(b.matmul(&p.mat).matmul(&a), n, m);
        let (_, eigs2) = max_ea_criterion(&dressed, 1e-9).unwrap();
        for (x, y) in sorted(eigs.clone()).iter().zip(sorted(eigs2.clone()).iter()) {
            assert!((x - y).abs() < 1e-8 * (1.0 + x.abs()), "{eigs:?} vs {eigs2:?}");
        }
    }
}

#[test]
fn criterion_adjoint_closure() {
    let mut rng = ChaCha8Rng::seed_from_u64(201);
    for _ in 0..100 {
        let (n, m) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let (p, _) = sample::dressed_central::<f64>(&mut rng, n, m, 0.8, 1e-6);
        let forward = max_ea_criterion(&p, 1e-9).unwrap().0;
        let backward = max_ea_criterion(&p.adjoint(), 1e-9).unwrap().0;
        assert_eq!(forward, backward);
    }
}

#[test]
fn criterion_convex_on_passing_maps() {
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    let mut found = 0;
    while found < 50 {
        let (n, m) = (rng.gen_range(2..=3), rng.gen_range(2..=3));
        let (p, _) = sample::dressed_central::<f64>(&mut rng, n, m, 0.6, 1e-6);
        let (q, _) = sample::dressed_central::<f64>(&mut rng, n, m, 0.6, 1e-6);
        let pass_p = max_ea_criterion(&p, 1e-9).unwrap().0;
        let pass_q = max_ea_criterion(&q, 1e-9).unwrap().0;
        if !(pass_p && pass_q) {
            continue;
        }
        found += 1;
        for &t in &[0.25, 0.5, 0.75] {
            let mix = lorentz_map(p.mat.scale(t).add(&q.mat.scale(1.0 - t)), n, m);
            assert!(
                max_ea_criterion(&mix, 1e-7).unwrap().0,
                "convex combination must stay annihilating"
            );
        }
    }
}

#[test]
fn trace_duality_of_annihilating_maps() {
    // maxEA maps built from central forms (hs(v) <= t, dressed by
    // automorphisms) pair nonnegatively in the trace
    let mut rng = ChaCha8Rng::seed_from_u64(203);
    for _ in 0..100 {
        let (n, m) = (rng.gen_range(2..=4), rng.gen_range(2..=4));
        let v = sample::gaussian_mat::<f64>(&mut rng, m, n);
        let w = sample::gaussian_mat::<f64>(&mut rng, n, m);
        let tv = v.fro_norm() * rng.gen_range(1.0..1.5f64);
        let tw = w.fro_norm() * rng.gen_range(1.0..1.5f64);
        let p = sample::automorphism::<f64>(&mut rng, m, 0.7, true)
            .matmul(&conekit::lorentz::central_matrix(tv, &v))
            .matmul(&sample::automorphism::<f64>(&mut rng, n, 0.7, true));
        let q = sample::automorphism::<f64>(&mut rng, n, 0.7, true)
            .matmul(&conekit::lorentz::central_matrix(tw, &w))
            .matmul(&sample::automorphism::<f64>(&mut rng, m, 0.7, true));
        let p_map = lorentz_map(p.clone(), n, m);
        let q_map = lorentz_map(q.clone(), m, n);
        assert!(max_ea_criterion(&p_map, 1e-9).unwrap().0);
        assert!(max_ea_criterion(&q_map, 1e-9).unwrap().0);
        let tr = p.matmul(&q).trace();
        let scale = 1.0 + p.fro_norm() * q.fro_norm();
        assert!(tr >= -1e-8 * scale, "pairing negative: {tr}");
    }
}

#[test]
fn criterion_matches_eb_of_pjp() {
    // equivalence (2) <-> (3): verdict(P) == EB(P J_n P^T)
    let mut rng = ChaCha8Rng::seed_from_u64(204);
    for trial in 0..100 {
        let (n, m) = (rng.gen_range(2..=3), rng.gen_range(2..=3));
        let (p, _) = sample::dressed_central::<f64>(&mut rng, n, m, 0.7, 1e-5);
        let verdict = max_ea_criterion(&p, 1e-7).unwrap().0;
        let pjp = lorentz_map(
            p.mat.matmul(&j_mat::<f64>(n)).matmul(&p.mat.transpose()),
            m,
            m,
        );
        let eb = is_eb_lorentz(&pjp, 1e-7).unwrap();
        assert_eq!(verdict, eb, "trial {trial}: criterion {verdict} vs EB {eb}");
    }
}

#[test]
fn mixed_products_annihilate() {
    // for central P, Q passing the criterion, (P (x) Q)(J_hat) is separable:
    // the slice map Q J_n P^T is entanglement breaking
    let mut rng = ChaCha8Rng::seed_from_u64(205);
    let mut found = 0;
    while found < 40 {
        let (n, m) = (rng.gen_range(2..=3), rng.gen_range(2..=3));
        let (p, _) = sample::dressed_central::<f64>(&mut rng, n, m, 0.5, 1e-5);
        let (q, _) = sample::dressed_central::<f64>(&mut rng, n, m, 0.5, 1e-5);
        if !(max_ea_criterion(&p, 1e-9).unwrap().0 && max_ea_criterion(&q, 1e-9).unwrap().0) {
            continue;
        }
        found += 1;
        let slice = lorentz_map(
            q.mat.matmul(&j_mat::<f64>(n)).matmul(&p.mat.transpose()),
            m,
            m,
        );
        assert!(
            is_eb_lorentz(&slice, 1e-6).unwrap(),
            "mixed product slice must be entanglement breaking"
        );
    }
}

#[test]
fn sinkhorn_reconstruction_and_automorphism_outputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(206);
    for _ in 0..50 {
        let (n, m) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let (p, _) = sample::dressed_central::<f64>(&mut rng, n, m, 1.0, 1e-8);
        let form = sinkhorn_normal_form(&p, 1e-13, 10_000).unwrap();
        assert!(form.residual < 1e-8);
        // outputs are Lorentz automorphisms: J-congruence up to scale
        for (mat, dim) in [(&form.a, n), (&form.b, m)] {
            let j = j_mat::<f64>(dim);
            let g = mat.transpose().matmul(&j).matmul(mat);
            let c2 = g[(0, 0)];
            assert!(c2 > 0.0);
            assert!(g.sub(&j.scale(c2)).max_abs() < 1e-8 * (1.0 + c2));
        }
        // diagonal is a contraction
        for &vi in &form.v {
            assert!(vi.abs() <= 1.0 + 1e-9);
        }
    }
}

/// Extremal Gram bound: for extremal dual-normalized maps off the cube cone,
/// the central block of `Q P^T` has `gamma2` at most the corner entry.
#[test]
fn extremal_gram_gamma2_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(207);
    for trial in 0..40u64 {
        let k = rng.gen_range(2..=3);
        let n = rng.gen_range(2..=3);
        let m = rng.gen_range(2..=3);
        let q = extreme_pos0::<f64>(k, n, 1000 + trial);
        let p = extreme_pos_w(&mut rng, k, m);
        let prod = q.mat.matmul(&p.transpose());
        let t = prod[(0, 0)];
        let v = Mat::<f64>::from_fn(n, m, |i, j| prod[(i + 1, j + 1)]);
        let v_op = OperatorMatrix::new(v, SpaceDescriptor::l1(m), SpaceDescriptor::linf(n));
        let g = gamma2(&v_op).unwrap();
        assert!(g <= t + 1e-6, "trial {trial}: gamma2 {g} > t {t}");
    }
}

/// Extreme point of `Pos_w(L_k, C_linf^m)`: rows
/// are the extreme points of the slab `K_w` (the apexes `+-(1, w)` and
/// boundary points of its central ellipsoid section), first row `(1, w^T)`.
fn extreme_pos_w(rng: &mut ChaCha8Rng, k: usize, m: usize) -> Mat<f64> {
    let mut w = sample::unit_vector::<f64>(rng, k);
    let shrink = rng.gen_range(0.1..0.9);
    w.iter_mut().for_each(|x| *x *= shrink);
    let pool = conekit::lorentz::kw_extreme_sampler(&w, m + 8, rng.gen()).unwrap();
    let mut mat = Mat::<f64>::zeros(m + 1, k + 1);
    mat[(0, 0)] = 1.0;
    for (j, &wj) in w.iter().enumerate() {
        mat[(0, j + 1)] = wj;
    }
    for i in 1..=m {
        let (x, b) = &pool[rng.gen_range(0..pool.len())];
        mat[(i, 0)] = *x;
        for (j, &bj) in b.iter().enumerate() {
            mat[(i, j + 1)] = bj;
        }
    }
    // sanity: each row pair (1, w) +- (x_i, b_i) stays in the Lorentz cone
    for i in 1..=m {
        let plus: Vec<f64> = (0..=k).map(|j| mat[(0, j)] + mat[(i, j)]).collect();
        let minus: Vec<f64> = (0..=k).map(|j| mat[(0, j)] - mat[(i, j)]).collect();
        assert!(plus[0] >= norm2(&plus[1..]) - 1e-9);
        assert!(minus[0] >= norm2(&minus[1..]) - 1e-9);
    }
    mat
}
