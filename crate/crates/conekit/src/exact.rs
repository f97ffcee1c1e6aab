//! Exact scalars for constant pipelines: rationals and terms of the form
//! `q * sqrt(r)` with `q, r` rational.
//!
//! Constants entered this way survive symbolic checks (weight sums, unit
//! norms) exactly; the single float-conversion point is [`SqrtRational::to_f64`].

use num_rational::Ratio;

pub type Rational = Ratio<i64>;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

/// The exact scalar `coeff * sqrt(radicand)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SqrtRational {
    pub coeff: Rational,
    pub radicand: Rational,
}

impl SqrtRational {
    pub fn new(coeff: Rational, radicand: Rational) -> Self {
        assert!(radicand >= Rational::from_integer(0), "radicand must be nonnegative");
        SqrtRational { coeff, radicand }
    }

    pub fn rational(q: Rational) -> Self {
        SqrtRational { coeff: q, radicand: Rational::from_integer(1) }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(Rational::from_integer(n))
    }

    pub fn zero() -> Self {
        Self::int(0)
    }

    /// `coeff^2 * radicand`, exactly.
    pub fn square(&self) -> Rational {
        self.coeff * self.coeff * self.radicand
    }

    pub fn mul(&self, other: &SqrtRational) -> SqrtRational {
        SqrtRational { coeff: self.coeff * other.coeff, radicand: self.radicand * other.radicand }
    }

    pub fn scale(&self, q: Rational) -> SqrtRational {
        SqrtRational { coeff: self.coeff * q, radicand: self.radicand }
    }

    /// The one place where exact constants become floats.
    pub fn to_f64(&self) -> f64 {
        let c = *self.coeff.numer() as f64 / *self.coeff.denom() as f64;
        let r = *self.radicand.numer() as f64 / *self.radicand.denom() as f64;
        c * r.sqrt()
    }
}

pub fn rational_to_f64(q: Rational) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

/// Exact squared Euclidean norm of a vector of `q sqrt(r)` terms.
pub fn norm2_squared(v: &[SqrtRational]) -> Rational {
    v.iter().map(SqrtRational::square).sum()
}
