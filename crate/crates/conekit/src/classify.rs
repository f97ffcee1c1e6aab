//! Map-class verdicts: exact norm criteria for central maps, and randomized
//! falsifiers for general maps.
//!
//! The falsifiers are one-sided by design: a witness disproves membership,
//! absence of a witness proves nothing. Reports label the distinction.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cones::{bloch_cone_map, dual_cone, herm_to_vec, vec_to_herm, ConeDescriptor, ConeMap};
use crate::error::{Error, Result};
use crate::idealnorms::{gamma2, gamma2_star, hs, nuclear, pi2};
use crate::lorentz::{central_matrix, is_eb_lorentz, max_ea_criterion};
use crate::numerics::{outer, Mat};
use crate::sample;
use crate::scalar::{cast, Real};
use crate::spaces::{op_norm, Family, OperatorMatrix, SpaceDescriptor};

/// The central map `lambda (+) u` acting `(t, x) -> (lambda t, u x)` between
/// the cones over its endpoint spaces.
#[derive(Clone, Debug)]
pub struct CentralMap<R: Real> {
    pub lambda: R,
    pub u: OperatorMatrix<R>,
}

impl<R: Real> CentralMap<R> {
    pub fn new(lambda: R, u: OperatorMatrix<R>) -> Self {
        CentralMap { lambda, u }
    }

    pub fn cone_map(&self) -> ConeMap<R> {
        ConeMap::new(
            central_matrix(self.lambda, &self.u.mat),
            ConeDescriptor::ConeOver(self.u.dom),
            ConeDescriptor::ConeOver(self.u.cod),
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    True,
    False,
    Unsupported,
}

/// Which map class a verdict refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapClass {
    Positive,
    Eb,
    LorFact,
    LorEb,
    LorEaIntoLorentz,
    MaxEa,
}

impl MapClass {
    pub const ALL: [MapClass; 6] = [
        MapClass::Positive,
        MapClass::Eb,
        MapClass::LorFact,
        MapClass::LorEb,
        MapClass::LorEaIntoLorentz,
        MapClass::MaxEa,
    ];

    /// The norm whose comparison against `lambda` decides the class.
    pub fn norm_name(&self) -> &'static str {
        match self {
            MapClass::Positive => "op",
            MapClass::Eb => "nuc",
            MapClass::LorFact => "gamma2",
            MapClass::LorEb => "gamma2star",
            MapClass::LorEaIntoLorentz => "pi2",
            MapClass::MaxEa => "hs",
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassEntry {
    pub class: MapClass,
    pub verdict: Verdict,
    /// The certifying norm value, when the class is supported.
    pub certifying_value: Option<f64>,
    pub threshold: f64,
    pub tolerance: f64,
}

/// Per-class verdicts for a central map.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub entries: Vec<ClassEntry>,
}

impl ClassificationReport {
    pub fn get(&self, class: MapClass) -> &ClassEntry {
        self.entries.iter().find(|e| e.class == class).expect("all classes present")
    }

    pub fn verdict(&self, class: MapClass) -> Verdict {
        self.get(class).verdict
    }
}

/// Classifies a central map by the exact norm criteria:
/// positivity by the operator norm, entanglement breaking by the nuclear
/// norm, Lorentz factorizability by `gamma2`, Lorentz entanglement breaking
/// by `gamma2*`, Lorentz-entanglement annihilation into a Lorentz cone by
/// `pi2` (Euclidean codomain only) and max-entanglement annihilation by the
/// Hilbert-Schmidt norm (Euclidean endpoints only).
pub fn classify_central<R: Real>(m: &CentralMap<R>, tol: R) -> ClassificationReport {
    let norm_of = |class: MapClass| -> Result<R> {
        match class {
            MapClass::Positive => op_norm(&m.u),
            MapClass::Eb => nuclear(&m.u),
            MapClass::LorFact => gamma2(&m.u),
            MapClass::LorEb => gamma2_star(&m.u),
            MapClass::LorEaIntoLorentz => pi2(&m.u),
            MapClass::MaxEa => hs(&m.u),
        }
    };
    let entries = MapClass::ALL
        .iter()
        .map(|&class| {
            let (verdict, value) = match norm_of(class) {
                Ok(v) => {
                    let ok = v <= m.lambda + tol;
                    (if ok { Verdict::True } else { Verdict::False }, Some(to_f64(v)))
                }
                Err(Error::Unsupported(_)) | Err(Error::DimensionTooLarge(_)) => {
                    (Verdict::Unsupported, None)
                }
                Err(_) => (Verdict::Unsupported, None),
            };
            ClassEntry {
                class,
                verdict,
                certifying_value: value,
                threshold: to_f64(m.lambda),
                tolerance: to_f64(tol),
            }
        })
        .collect();
    ClassificationReport { entries }
}

fn to_f64<R: Real>(x: R) -> f64 {
    num_traits::ToPrimitive::to_f64(&x).unwrap_or(f64::NAN)
}

/// A falsification witness: positive legs whose sandwich of the candidate map
/// fails the Lorentz entanglement-breaking test.
#[derive(Clone, Debug)]
pub struct Witness<R: Real> {
    pub trial: usize,
    pub leg_in: ConeMap<R>,
    pub leg_out: ConeMap<R>,
}

/// Samples a positive map `Lorentz(k) -> cone`.
///
/// Mixes extreme points (for `linf` targets), Bloch-cone composites (for PSD
/// targets) and dressed central contractions, with a 70/30 extreme/interior
/// split where extreme generators exist.
pub fn sample_leg_into<R: Real>(rng: &mut impl Rng, k: usize, cone: &ConeDescriptor) -> ConeMap<R> {
    match *cone {
        ConeDescriptor::Lorentz(m) => {
            let (p, _) = sample::dressed_central::<R>(rng, k, m, 1.0, 0.0);
            p
        }
        ConeDescriptor::ConeOver(s) => {
            let extreme = s.family == Family::Linf && rng.gen_range(0.0..1.0f64) < 0.7;
            if extreme {
                crate::lorentz::extreme_pos0_with(k, s.dim, rng)
            } else {
                // central contraction from l2^k, pre-dressed by an automorphism
                let target = cast::<R>(rng.gen_range(0.1..1.0f64));
                let u = sample::operator_with_norm(rng, SpaceDescriptor::l2(k), s, target);
                let central = ConeMap::new(
                    central_matrix(R::one(), &u.mat),
                    ConeDescriptor::Lorentz(k),
                    ConeDescriptor::ConeOver(s),
                );
                let aut = sample::automorphism::<R>(rng, k, 0.7, true);
                let aut = ConeMap::new(aut, ConeDescriptor::Lorentz(k), ConeDescriptor::Lorentz(k));
                let mut leg = central.compose(&aut);
                if rng.gen_range(0.0..1.0f64) < 0.3 {
                    // interior perturbation towards a rank-one positive map
                    let x = sample::cone_point::<R>(rng, cone, 0.2);
                    let f = sample::cone_point::<R>(rng, &ConeDescriptor::Lorentz(k), 0.2);
                    let bump = ConeMap::new(outer(&x, &f), ConeDescriptor::Lorentz(k), *cone);
                    leg = leg.add(&bump.scale(cast(0.2)));
                }
                leg
            }
        }
        ConeDescriptor::Psd(d) => {
            if rng.gen::<bool>() {
                // rank-one positive map x f^T
                let x = sample::cone_point::<R>(rng, cone, 0.1);
                let f = sample::cone_point::<R>(rng, &ConeDescriptor::Lorentz(k), 0.1);
                let scale = cast::<R>(rng.gen_range(0.2..1.0f64));
                ConeMap::new(outer(&x, &f).scale(scale), ConeDescriptor::Lorentz(k), *cone)
            } else {
                // L_k -> L_3 -> Psd(2) -> Psd(d) through the Bloch ball
                let (into3, _) = sample::dressed_central::<R>(rng, k, 3, 0.7, 0.0);
                let bloch = bloch_cone_map::<R>();
                let embed = psd_embed::<R>(rng, 2, d);
                embed.compose(&bloch).compose(&into3)
            }
        }
    }
}

/// Samples a positive map `cone -> Lorentz(k)` by duality.
pub fn sample_leg_from<R: Real>(rng: &mut impl Rng, cone: &ConeDescriptor, k: usize) -> ConeMap<R> {
    sample_leg_into(rng, k, &dual_cone(cone)).adjoint()
}

/// Positive embedding `Psd(small) -> Psd(big)`: pad with zeros and conjugate
/// by a random unitary.
fn psd_embed<R: Real>(rng: &mut impl Rng, small: usize, big: usize) -> ConeMap<R> {
    assert!(small <= big);
    let u = complex_unitary::<R>(rng, big);
    let dim_in = small * small;
    let dim_out = big * big;
    let mut mat = Mat::zeros(dim_out, dim_in);
    for idx in 0..dim_in {
        let mut coords = vec![R::zero(); dim_in];
        coords[idx] = R::one();
        let h_small = vec_to_herm(&coords, small);
        let mut h_big = crate::numerics::CMat::zeros(big, big);
        for i in 0..small {
            for j in 0..small {
                h_big[(i, j)] = h_small[(i, j)];
            }
        }
        let h_big = u.matmul(&h_big).matmul(&u.adjoint());
        let out = herm_to_vec(&h_big);
        for (r, val) in out.iter().enumerate() {
            mat[(r, idx)] = *val;
        }
    }
    ConeMap::new(mat, ConeDescriptor::Psd(small), ConeDescriptor::Psd(big))
}

fn complex_unitary<R: Real>(rng: &mut impl Rng, d: usize) -> crate::numerics::CMat<R> {
    use num_complex::Complex;
    loop {
        let g = sample::complex_gaussian::<R>(rng, d, d);
        let mut q = crate::numerics::CMat::zeros(d, d);
        let mut ok = true;
        for j in 0..d {
            let mut col: Vec<Complex<R>> = (0..d).map(|i| g[(i, j)]).collect();
            for prev in 0..j {
                let mut proj = Complex::new(R::zero(), R::zero());
                for i in 0..d {
                    proj = proj + q[(i, prev)].conj() * col[i];
                }
                for i in 0..d {
                    col[i] = col[i] - q[(i, prev)] * proj;
                }
            }
            let nn = col.iter().fold(R::zero(), |a, z| a + z.norm_sqr()).sqrt();
            if nn < cast(1e-6) {
                ok = false;
                break;
            }
            for i in 0..d {
                q[(i, j)] = col[i] / Complex::new(nn, R::zero());
            }
        }
        if ok {
            return q;
        }
    }
}

/// Searches for positive legs `A in Pos(L_k, dom)`, `B in Pos(cod, L_k)` such
/// that `B P A` fails the Lorentz entanglement-breaking test
/// (`k = min(dim) - 1`). A witness disproves `P in LorEB`; `None` proves
/// nothing.
pub fn lor_eb_falsify<R: Real>(
    p: &ConeMap<R>,
    trials: usize,
    seed: u64,
) -> Result<Option<Witness<R>>> {
    let k = p.dom.ambient_dim().min(p.cod.ambient_dim()) - 1;
    let tol = cast::<R>(1e-6);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let leg_in = sample_leg_into::<R>(&mut rng, k, &p.dom);
        let leg_out = sample_leg_from::<R>(&mut rng, &p.cod, k);
        let candidate = leg_out.compose(p).compose(&leg_in);
        let eb = match is_eb_lorentz(&candidate, tol) {
            Ok(v) => v,
            // a positive-leg sandwich of a LorEB map stays positive, so a
            // positivity failure is itself a witness
            Err(Error::NotPositive) => false,
            Err(e) => return Err(e),
        };
        if !eb {
            return Ok(Some(Witness { trial, leg_in, leg_out }));
        }
    }
    Ok(None)
}

/// Sampled check that `P S` and `Q S` annihilate max entanglement for
/// positive legs `S in Pos(L_k, C)` with the shared domain cone `C`.
pub fn lor_ea_product_check<R: Real>(
    p: &ConeMap<R>,
    q: &ConeMap<R>,
    trials: usize,
    seed: u64,
) -> Result<bool> {
    if p.dom != q.dom {
        return Err(Error::DimensionMismatch("shared domain cone required".into()));
    }
    let tol = cast::<R>(1e-7);
    let k = p.dom.ambient_dim() - 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let s = sample_leg_into::<R>(&mut rng, k, &p.dom);
        for map in [p, q] {
            let ps = map.compose(&s);
            match max_ea_criterion(&ps, tol) {
                Ok((true, _)) => {}
                Ok((false, _)) | Err(Error::NotPositive) => return Ok(false),
                Err(e) => return Err(e),
            }
        }
    }
    Ok(true)
}

/// Sampled corroboration that `B^* A` breaks Lorentz entanglement when both
/// factors annihilate it.
pub fn factorization_lor_eb<R: Real>(
    a: &ConeMap<R>,
    b: &ConeMap<R>,
    trials: usize,
    seed: u64,
) -> Result<bool> {
    match (a.cod, b.cod) {
        (ConeDescriptor::Lorentz(m1), ConeDescriptor::Lorentz(m2)) if m1 == m2 => {}
        _ => return Err(Error::Unsupported("both factors must map into the same Lorentz cone".into())),
    }
    let composed = b.adjoint().compose(a);
    Ok(lor_eb_falsify(&composed, trials, seed)?.is_none())
}
