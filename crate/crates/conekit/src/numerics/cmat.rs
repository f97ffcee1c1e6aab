//! Dense complex matrices, used for the Hermitian (PSD-cone) side.

use std::ops::{Index, IndexMut};

use num_complex::Complex;

use crate::scalar::{cast, Real};

use super::mat::Mat;

/// Dense complex matrix, row-major.
#[derive(Clone, PartialEq)]
pub struct CMat<R> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<R>>,
}

impl<R: Real> CMat<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMat { rows, cols, data: vec![Complex::new(R::zero(), R::zero()); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex::new(R::one(), R::zero());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex<R>) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Builds from row-major `(re, im)` pairs.
    pub fn from_entries(rows: usize, cols: usize, entries: &[(f64, f64)]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Self::from_fn(rows, cols, |i, j| {
            let (re, im) = entries[i * cols + j];
            Complex::new(cast(re), cast(im))
        })
    }

    pub fn from_real(m: &Mat<R>) -> Self {
        Self::from_fn(m.rows(), m.cols(), |i, j| Complex::new(m[(i, j)], R::zero()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                for j in 0..other.cols {
                    out[(i, j)] = out[(i, j)] + a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| a + b).collect();
        CMat { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| a - b).collect();
        CMat { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: Complex<R>) -> Self {
        let data = self.data.iter().map(|&a| a * s).collect();
        CMat { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale_re(&self, s: R) -> Self {
        self.scale(Complex::new(s, R::zero()))
    }

    pub fn kron(&self, other: &Self) -> Self {
        let (r2, c2) = (other.rows, other.cols);
        Self::from_fn(self.rows * r2, self.cols * c2, |i, j| {
            self[(i / r2, j / c2)] * other[(i % r2, j % c2)]
        })
    }

    pub fn trace(&self) -> Complex<R> {
        (0..self.rows.min(self.cols)).fold(Complex::new(R::zero(), R::zero()), |acc, i| acc + self[(i, i)])
    }

    pub fn fro_norm(&self) -> R {
        self.data.iter().fold(R::zero(), |acc, z| acc + z.norm_sqr()).sqrt()
    }

    pub fn max_abs(&self) -> R {
        self.data.iter().fold(R::zero(), |m, z| m.max(z.norm()))
    }

    /// Hermitian deviation `||M - M^dagger||_F`.
    pub fn herm_defect(&self) -> R {
        self.sub(&self.adjoint()).fro_norm()
    }

    /// Partial transpose over the first tensor factor of `C^{d1} (x) C^{d2}`.
    pub fn partial_transpose_first(&self, d1: usize, d2: usize) -> Self {
        assert_eq!(self.rows, d1 * d2);
        assert_eq!(self.cols, d1 * d2);
        Self::from_fn(self.rows, self.cols, |i, j| {
            let (i1, i2) = (i / d2, i % d2);
            let (j1, j2) = (j / d2, j % d2);
            self[(j1 * d2 + i2, i1 * d2 + j2)]
        })
    }
}

impl<R: Real> Index<(usize, usize)> for CMat<R> {
    type Output = Complex<R>;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex<R> {
        &self.data[i * self.cols + j]
    }
}

impl<R: Real> IndexMut<(usize, usize)> for CMat<R> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<R> {
        &mut self.data[i * self.cols + j]
    }
}

impl<R: Real> std::fmt::Debug for CMat<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "CMat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self[(i, j)];
                write!(f, "({:>9.4},{:>9.4}) ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}
