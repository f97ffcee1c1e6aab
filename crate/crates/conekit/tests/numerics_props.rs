//! Numerical-kernel contracts: reconstruction residuals on a thousand seeded
//! matrices and bit-level determinism.

use conekit::numerics::{herm_eig, svd, sym_eig, CMat, Mat};
use conekit::sample;
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn sym_eig_residual_thousand_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(500);
    for trial in 0..1000 {
        let n = rng.gen_range(1..=16);
        let raw = Mat::<f64>::from_fn(n, n, |_, _| rng.gen_range(-1.0..1.0));
        let a = raw.symmetrize();
        let (vals, vecs) = sym_eig(&a);
        let rec = vecs.matmul(&Mat::diag(&vals)).matmul(&vecs.transpose());
        let scale = a.fro_norm().max(1e-300);
        let res = rec.sub(&a).fro_norm();
        assert!(res <= 1e-12 * scale, "trial {trial} dim {n}: residual {res:.3e}");
        // orthonormality
        let qtq = vecs.transpose().matmul(&vecs);
        assert!(qtq.sub(&Mat::identity(n)).max_abs() < 1e-12);
        // sorted descending
        for w in vals.windows(2) {
            assert!(w[0] >= w[1]);
        }
    }
}

#[test]
fn herm_eig_residual_thousand_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(501);
    for trial in 0..1000 {
        let n = rng.gen_range(1..=16);
        let g = sample::complex_gaussian::<f64>(&mut rng, n, n);
        let h = g.add(&g.adjoint()).scale_re(0.5);
        let (vals, vecs) = herm_eig(&h);
        let mut diag = CMat::<f64>::zeros(n, n);
        for (i, &v) in vals.iter().enumerate() {
            diag[(i, i)] = Complex::new(v, 0.0);
        }
        let rec = vecs.matmul(&diag).matmul(&vecs.adjoint());
        let scale = h.fro_norm().max(1e-300);
        let res = rec.sub(&h).fro_norm();
        assert!(res <= 1e-12 * scale, "trial {trial} dim {n}: residual {res:.3e}");
    }
}

#[test]
fn svd_residual_random_rectangular() {
    let mut rng = ChaCha8Rng::seed_from_u64(502);
    for trial in 0..400 {
        let r = rng.gen_range(1..=12);
        let c = rng.gen_range(1..=12);
        let m = Mat::<f64>::from_fn(r, c, |_, _| rng.gen_range(-1.0..1.0));
        let (u, s, v) = svd(&m);
        let rec = u.matmul(&Mat::diag(&s)).matmul(&v.transpose());
        let scale = m.fro_norm().max(1e-300);
        assert!(
            rec.sub(&m).fro_norm() <= 1e-12 * scale,
            "trial {trial} {r}x{c}: residual {:.3e}",
            rec.sub(&m).fro_norm()
        );
        for w in s.windows(2) {
            assert!(w[0] >= w[1] && w[1] >= 0.0);
        }
    }
}

#[test]
fn eig_deterministic_bits() {
    let build = || {
        let mut rng = ChaCha8Rng::seed_from_u64(503);
        Mat::<f64>::from_fn(9, 9, |_, _| rng.gen_range(-1.0..1.0)).symmetrize()
    };
    let (va, _) = sym_eig(&build());
    let (vb, _) = sym_eig(&build());
    for (a, b) in va.iter().zip(&vb) {
        assert_eq!(a.to_bits(), b.to_bits());
    }
}
