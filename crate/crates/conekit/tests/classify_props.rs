//! Classification invariants: the monotone class ladder, the Euclidean
//! collapse, ideal-property stability, and the constructive factorizations
//! behind the 2-summing characterizations.

use conekit::classify::{classify_central, CentralMap, MapClass, Verdict};
use conekit::cones::{ConeDescriptor, ConeMap};
use conekit::lorentz::{central_matrix, max_ea_criterion};
use conekit::numerics::Mat;
use conekit::sample;
use conekit::spaces::{op_norm, Family, OperatorMatrix, SpaceDescriptor};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FAMS: [Family; 3] = [Family::L1, Family::L2, Family::Linf];

#[test]
fn monotone_class_ladder() {
    // EB implies LorEB implies Positive; EB implies MaxEA where defined
    let mut rng = ChaCha8Rng::seed_from_u64(300);
    for _ in 0..60 {
        let fd = FAMS[rng.gen_range(0..3)];
        let fc = FAMS[rng.gen_range(0..3)];
        let dom = SpaceDescriptor::new(fd, rng.gen_range(2..=3));
        let cod = SpaceDescriptor::new(fc, rng.gen_range(2..=3));
        let raw = sample::gaussian_mat::<f64>(&mut rng, cod.dim, dom.dim);
        let lambda = rng.gen_range(0.5..3.0);
        let report = classify_central(&CentralMap::new(lambda, OperatorMatrix::new(raw, dom, cod)), 1e-6);
        let v = |c| report.verdict(c);
        if v(MapClass::Eb) == Verdict::True {
            if v(MapClass::LorEb) != Verdict::Unsupported {
                assert_eq!(v(MapClass::LorEb), Verdict::True, "EB must imply LorEB");
            }
            if v(MapClass::MaxEa) != Verdict::Unsupported {
                assert_eq!(v(MapClass::MaxEa), Verdict::True, "EB must imply MaxEA");
            }
        }
        if v(MapClass::LorEb) == Verdict::True {
            assert_eq!(v(MapClass::Positive), Verdict::True, "LorEB must imply Positive");
        }
        if v(MapClass::LorFact) == Verdict::True && v(MapClass::Positive) != Verdict::Unsupported {
            assert_eq!(v(MapClass::Positive), Verdict::True, "LorFact must imply Positive");
        }
    }
}

#[test]
fn euclidean_collapse_eb_equals_loreb() {
    // between Euclidean spaces gamma2* is the trace norm, which is the
    // nuclear norm, so the two verdicts agree
    let mut rng = ChaCha8Rng::seed_from_u64(301);
    for _ in 0..200 {
        let n = rng.gen_range(2..=4);
        let dom = SpaceDescriptor::l2(n);
        let raw = sample::gaussian_mat::<f64>(&mut rng, n, n);
        let lambda = rng.gen_range(0.5..3.0);
        let report = classify_central(&CentralMap::new(lambda, OperatorMatrix::new(raw, dom, dom)), 1e-6);
        let eb = report.get(MapClass::Eb);
        let loreb = report.get(MapClass::LorEb);
        assert!(
            (eb.certifying_value.unwrap() - loreb.certifying_value.unwrap()).abs() < 1e-6,
            "nuc {} vs gamma2* {}",
            eb.certifying_value.unwrap(),
            loreb.certifying_value.unwrap()
        );
        assert_eq!(eb.verdict, loreb.verdict);
    }
}

#[test]
fn loreb_verdict_survives_positive_contractions() {
    // the gamma2* ideal inequality: composing a LorEB central map with
    // central contractions keeps the verdict
    let mut rng = ChaCha8Rng::seed_from_u64(302);
    let mut found = 0;
    while found < 40 {
        let fd = FAMS[rng.gen_range(0..3)];
        let fc = FAMS[rng.gen_range(0..3)];
        let dom = SpaceDescriptor::new(fd, 3);
        let cod = SpaceDescriptor::new(fc, 3);
        let raw = sample::gaussian_mat::<f64>(&mut rng, 3, 3);
        let u = OperatorMatrix::new(raw, dom, cod);
        let lambda = rng.gen_range(1.0..2.0);
        let report = classify_central(&CentralMap::new(lambda, u.clone()), 1e-6);
        if report.verdict(MapClass::LorEb) != Verdict::True {
            continue;
        }
        found += 1;
        // contractions on both sides (any supported space pair)
        let fa = FAMS[rng.gen_range(0..3)];
        let fb = FAMS[rng.gen_range(0..3)];
        let t_pre = rng.gen_range(0.3..1.0);
        let pre = sample::operator_with_norm::<f64>(&mut rng, SpaceDescriptor::new(fa, 3), dom, t_pre);
        let t_post = rng.gen_range(0.3..1.0);
        let post = sample::operator_with_norm::<f64>(&mut rng, cod, SpaceDescriptor::new(fb, 3), t_post);
        let composed = post.compose(&u).compose(&pre);
        let report2 = classify_central(&CentralMap::new(lambda, composed), 1e-6);
        assert_eq!(
            report2.verdict(MapClass::LorEb),
            Verdict::True,
            "composition with contractions must stay LorEB"
        );
        found += 0;
    }
}

/// Builds the Pietsch-style parts of an operator with `pi2 <= 1`:
/// a contraction into `linf^k`, a diagonal with unit Hilbert-Schmidt norm and
/// a contraction out of `l2^k`.
fn pietsch_parts(
    rng: &mut ChaCha8Rng,
    dom: SpaceDescriptor,
    cod: SpaceDescriptor,
    k: usize,
) -> (OperatorMatrix<f64>, Vec<f64>, OperatorMatrix<f64>) {
    let t1 = rng.gen_range(0.4..1.0);
    let u1 = sample::operator_with_norm::<f64>(rng, dom, SpaceDescriptor::linf(k), t1);
    let mut delta: Vec<f64> = (0..k).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let nn = conekit::numerics::norm2(&delta);
    let target = rng.gen_range(0.4..1.0);
    delta.iter_mut().for_each(|d| *d *= target / nn);
    let t2 = rng.gen_range(0.4..1.0);
    let u2 = sample::operator_with_norm::<f64>(rng, SpaceDescriptor::l2(k), cod, t2);
    (u1, delta, u2)
}

#[test]
fn two_summing_constructive_factorization() {
    // pi2(v) <= 1 gives, for every positive S off a Lorentz cone, an exact
    // factorization (1 (+) v) S = P Q with Q annihilating max entanglement
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    for trial in 0..40 {
        let fd = FAMS[rng.gen_range(0..3)];
        let fc = FAMS[rng.gen_range(0..3)];
        let dom = SpaceDescriptor::new(fd, rng.gen_range(2..=3));
        let cod = SpaceDescriptor::new(fc, rng.gen_range(2..=3));
        let k = rng.gen_range(2..=3);
        let m_dim = rng.gen_range(2..=3);
        let (u1, delta, u2) = pietsch_parts(&mut rng, dom, cod, k);
        let v = u2.mat.matmul(&Mat::diag(&delta)).matmul(&u1.mat);
        // positive S: central contraction dressed by an automorphism
        let tw = rng.gen_range(0.3..1.0);
        let w = sample::operator_with_norm::<f64>(&mut rng, SpaceDescriptor::l2(m_dim), dom, tw);
        let s_mat = central_matrix(1.0, &w.mat)
            .matmul(&sample::automorphism::<f64>(&mut rng, m_dim, 0.8, true));

        let lhs = central_matrix(1.0, &v).matmul(&s_mat);
        let q_mat = central_matrix(1.0, &Mat::diag(&delta))
            .matmul(&central_matrix(1.0, &u1.mat))
            .matmul(&s_mat);
        let p_mat = central_matrix(1.0, &u2.mat);
        let rhs = p_mat.matmul(&q_mat);
        assert!(
            lhs.sub(&rhs).max_abs() < 1e-10,
            "trial {trial}: factorization defect {}",
            lhs.sub(&rhs).max_abs()
        );
        let q = ConeMap::new(q_mat, ConeDescriptor::Lorentz(m_dim), ConeDescriptor::Lorentz(k));
        assert!(
            max_ea_criterion(&q, 1e-7).unwrap().0,
            "trial {trial}: Q must annihilate max entanglement"
        );
    }
}

#[test]
fn pi2_dual_side_factorization() {
    // v: l2^m -> X with pi2(v) <= 1 factors as t (+) v = P Q with
    // P positive off the Lorentz cone and Q annihilating
    let mut rng = ChaCha8Rng::seed_from_u64(304);
    for trial in 0..40 {
        let fc = FAMS[rng.gen_range(0..3)];
        let cod = SpaceDescriptor::new(fc, rng.gen_range(2..=3));
        let m_dim = rng.gen_range(2..=3);
        let k = rng.gen_range(2..=3);
        let (u1, delta, u2) = pietsch_parts(&mut rng, SpaceDescriptor::l2(m_dim), cod, k);
        let v = u2.mat.matmul(&Mat::diag(&delta)).matmul(&u1.mat);
        let lhs = central_matrix(1.0, &v);
        let q_mat = central_matrix(1.0, &Mat::diag(&delta).matmul(&u1.mat));
        let p_mat = central_matrix(1.0, &u2.mat);
        assert!(lhs.sub(&p_mat.matmul(&q_mat)).max_abs() < 1e-12, "trial {trial}");
        let q = ConeMap::new(q_mat, ConeDescriptor::Lorentz(m_dim), ConeDescriptor::Lorentz(k));
        assert!(max_ea_criterion(&q, 1e-7).unwrap().0, "trial {trial}");
        // P is positive: ||u2|| <= 1
        assert!(op_norm(&u2).unwrap() <= 1.0 + 1e-12);
    }
}

#[test]
fn factorization_through_annihilating_legs_breaks_lorentz_entanglement() {
    use conekit::classify::factorization_lor_eb;
    let mut rng = ChaCha8Rng::seed_from_u64(305);
    for trial in 0..10 {
        let m_dim = rng.gen_range(2..=3);
        // central legs with pi2 <= 1 annihilate Lorentzian entanglement into
        // the Lorentz cone; their adjoint composition must then test LorEB
        let fa = FAMS[rng.gen_range(0..3)];
        let fb = FAMS[rng.gen_range(0..3)];
        let dom_a = SpaceDescriptor::new(fa, rng.gen_range(2..=3));
        let dom_b = SpaceDescriptor::new(fb, rng.gen_range(2..=3));
        let (a1, da, a2) = pietsch_parts(&mut rng, dom_a, SpaceDescriptor::l2(m_dim), 2);
        let va = a2.mat.matmul(&Mat::diag(&da)).matmul(&a1.mat);
        let (b1, db, b2) = pietsch_parts(&mut rng, dom_b, SpaceDescriptor::l2(m_dim), 2);
        let vb = b2.mat.matmul(&Mat::diag(&db)).matmul(&b1.mat);
        let leg_a = ConeMap::new(
            central_matrix(1.0, &va),
            ConeDescriptor::ConeOver(dom_a),
            ConeDescriptor::Lorentz(m_dim),
        );
        let leg_b = ConeMap::new(
            central_matrix(1.0, &vb),
            ConeDescriptor::ConeOver(dom_b),
            ConeDescriptor::Lorentz(m_dim),
        );
        assert!(
            factorization_lor_eb(&leg_a, &leg_b, 30, 1000 + trial).unwrap(),
            "trial {trial}: no witness may exist for pi2-bounded legs"
        );
    }
    // zero maps: trivially no witness
    let z1 = ConeMap::new(
        Mat::<f64>::zeros(3, 3),
        ConeDescriptor::ConeOver(SpaceDescriptor::l1(2)),
        ConeDescriptor::Lorentz(2),
    );
    let z2 = ConeMap::new(
        Mat::<f64>::zeros(3, 4),
        ConeDescriptor::ConeOver(SpaceDescriptor::linf(3)),
        ConeDescriptor::Lorentz(2),
    );
    assert!(factorization_lor_eb(&z1, &z2, 20, 77).unwrap());
}
