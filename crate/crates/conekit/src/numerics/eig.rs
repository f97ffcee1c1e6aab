//! Eigenvalue and singular value decompositions.
//!
//! Jacobi iterations carry the symmetric/Hermitian/SVD work; they are slow in
//! the asymptotic sense but rock-solid at the dimensions this crate handles
//! (tens, not thousands). General real spectra (needed for the products
//! `J_m P J_n P^T`, which are not symmetric) go through a balanced
//! Hessenberg reduction followed by Francis double-shift QR.

use num_complex::Complex;

use crate::scalar::{cast, Real};

use super::cmat::CMat;
use super::mat::Mat;

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi.
///
/// Returns eigenvalues sorted descending and the matching orthonormal
/// eigenvectors as columns, so `M = V diag(l) V^T`.
pub fn sym_eig<R: Real>(m: &Mat<R>) -> (Vec<R>, Mat<R>) {
    assert!(m.is_square(), "sym_eig needs a square matrix");
    let n = m.rows();
    let mut a = m.symmetrize();
    let mut v = Mat::identity(n);
    if n <= 1 {
        return (if n == 1 { vec![a[(0, 0)]] } else { vec![] }, v);
    }

    let eps = R::epsilon();
    for _sweep in 0..64 {
        let mut off = R::zero();
        for p in 0..n {
            for q in p + 1..n {
                off = off + a[(p, q)] * a[(p, q)];
            }
        }
        let scale = a.fro_norm().max(R::min_positive_value());
        if off.sqrt() <= eps * scale {
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq.abs() <= eps * eps * scale {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (cast::<R>(2.0) * apq);
                let t = {
                    let s = if theta >= R::zero() { R::one() } else { -R::one() };
                    s / (theta.abs() + (theta * theta + R::one()).sqrt())
                };
                let c = R::one() / (t * t + R::one()).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<R> = (0..n).map(|i| a[(i, i)]).collect();
    order.sort_by(|&i, &j| diag[j].partial_cmp(&diag[i]).unwrap_or(std::cmp::Ordering::Equal));
    let values: Vec<R> = order.iter().map(|&i| diag[i]).collect();
    let vectors = Mat::from_fn(n, n, |i, j| v[(i, order[j])]);
    (values, vectors)
}

/// Smallest eigenvalue of a symmetric matrix.
pub fn min_eig_sym<R: Real>(m: &Mat<R>) -> R {
    let (vals, _) = sym_eig(m);
    *vals.last().expect("nonempty matrix")
}

/// Eigendecomposition of a Hermitian matrix by phase-corrected Jacobi.
///
/// Returns real eigenvalues sorted descending and a unitary matrix of
/// eigenvectors as columns.
pub fn herm_eig<R: Real>(m: &CMat<R>) -> (Vec<R>, CMat<R>) {
    assert_eq!(m.rows(), m.cols(), "herm_eig needs a square matrix");
    let n = m.rows();
    // symmetrize against roundoff in the input
    let mut a = m.add(&m.adjoint()).scale_re(cast(0.5));
    let mut v = CMat::identity(n);
    if n <= 1 {
        return (if n == 1 { vec![a[(0, 0)].re] } else { vec![] }, v);
    }
    let eps = R::epsilon();
    for _sweep in 0..64 {
        let mut off = R::zero();
        for p in 0..n {
            for q in p + 1..n {
                off = off + a[(p, q)].norm_sqr();
            }
        }
        let scale = a.fro_norm().max(R::min_positive_value());
        if off.sqrt() <= eps * scale {
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let h = a[(p, q)];
                let habs = h.norm();
                if habs <= eps * eps * scale {
                    continue;
                }
                // phase step: column/row q so the pivot becomes real
                let phase = h / Complex::new(habs, R::zero());
                let phase_conj = phase.conj();
                for k in 0..n {
                    a[(k, q)] = a[(k, q)] * phase_conj;
                }
                for k in 0..n {
                    a[(q, k)] = a[(q, k)] * phase;
                }
                for k in 0..n {
                    v[(k, q)] = v[(k, q)] * phase_conj;
                }
                // now a real Jacobi rotation
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let apq = a[(p, q)].re;
                let theta = (aqq - app) / (cast::<R>(2.0) * apq);
                let t = {
                    let s = if theta >= R::zero() { R::one() } else { -R::one() };
                    s / (theta.abs() + (theta * theta + R::one()).sqrt())
                };
                let c = Complex::new(R::one() / (t * t + R::one()).sqrt(), R::zero());
                let s = c * Complex::new(t, R::zero());
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = akp * c - akq * s;
                    a[(k, q)] = akp * s + akq * c;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = apk * c - aqk * s;
                    a[(q, k)] = apk * s + aqk * c;
                }
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp * c - vkq * s;
                    v[(k, q)] = vkp * s + vkq * c;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<R> = (0..n).map(|i| a[(i, i)].re).collect();
    order.sort_by(|&i, &j| diag[j].partial_cmp(&diag[i]).unwrap_or(std::cmp::Ordering::Equal));
    let values: Vec<R> = order.iter().map(|&i| diag[i]).collect();
    let vectors = CMat::from_fn(n, n, |i, j| v[(i, order[j])]);
    (values, vectors)
}

/// Smallest eigenvalue of a Hermitian matrix.
pub fn min_eig_herm<R: Real>(m: &CMat<R>) -> R {
    let (vals, _) = herm_eig(m);
    *vals.last().expect("nonempty matrix")
}

/// Singular value decomposition `M = U diag(s) V^T` by one-sided Jacobi.
///
/// `U` is `rows x r`, `V` is `cols x r` with `r = min(rows, cols)`, both with
/// orthonormal columns; singular values are sorted descending.
pub fn svd<R: Real>(m: &Mat<R>) -> (Mat<R>, Vec<R>, Mat<R>) {
    if m.rows() < m.cols() {
        let (u, s, v) = svd(&m.transpose());
        return (v, s, u);
    }
    let (rows, cols) = (m.rows(), m.cols());
    let mut u = m.clone();
    let mut v = Mat::<R>::identity(cols);
    let eps = R::epsilon();
    let scale = m.fro_norm().max(R::min_positive_value());
    for _sweep in 0..64 {
        let mut rotated = false;
        for p in 0..cols.saturating_sub(1) {
            for q in p + 1..cols {
                let mut app = R::zero();
                let mut aqq = R::zero();
                let mut apq = R::zero();
                for i in 0..rows {
                    app = app + u[(i, p)] * u[(i, p)];
                    aqq = aqq + u[(i, q)] * u[(i, q)];
                    apq = apq + u[(i, p)] * u[(i, q)];
                }
                if apq.abs() <= eps * (app * aqq).sqrt().max(eps * scale * scale) {
                    continue;
                }
                rotated = true;
                let theta = (aqq - app) / (cast::<R>(2.0) * apq);
                let t = {
                    let s = if theta >= R::zero() { R::one() } else { -R::one() };
                    s / (theta.abs() + (theta * theta + R::one()).sqrt())
                };
                let c = R::one() / (t * t + R::one()).sqrt();
                let s = t * c;
                for i in 0..rows {
                    let uip = u[(i, p)];
                    let uiq = u[(i, q)];
                    u[(i, p)] = c * uip - s * uiq;
                    u[(i, q)] = s * uip + c * uiq;
                }
                for i in 0..cols {
                    let vip = v[(i, p)];
                    let viq = v[(i, q)];
                    v[(i, p)] = c * vip - s * viq;
                    v[(i, q)] = s * vip + c * viq;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    // column norms are the singular values
    let mut sigma: Vec<R> = (0..cols)
        .map(|j| (0..rows).fold(R::zero(), |acc, i| acc + u[(i, j)] * u[(i, j)]).sqrt())
        .collect();
    let mut order: Vec<usize> = (0..cols).collect();
    order.sort_by(|&i, &j| sigma[j].partial_cmp(&sigma[i]).unwrap());
    let mut u_out = Mat::zeros(rows, cols);
    let mut v_out = Mat::zeros(cols, cols);
    let cutoff = eps * scale * cast::<R>(16.0);
    for (new_j, &old_j) in order.iter().enumerate() {
        let s = sigma[old_j];
        if s > cutoff {
            for i in 0..rows {
                u_out[(i, new_j)] = u[(i, old_j)] / s;
            }
        } else {
            // null direction: complete to an orthonormal set
            complete_column(&mut u_out, new_j, rows);
        }
        for i in 0..cols {
            v_out[(i, new_j)] = v[(i, old_j)];
        }
    }
    sigma.sort_by(|a, b| b.partial_cmp(a).unwrap());
    for s in sigma.iter_mut() {
        if *s <= cutoff {
            *s = R::zero();
        }
    }
    (u_out, sigma, v_out)
}

/// Fills column `j` of `u` with a unit vector orthogonal to columns `0..j`.
fn complete_column<R: Real>(u: &mut Mat<R>, j: usize, rows: usize) {
    for trial in 0..rows {
        let mut cand = vec![R::zero(); rows];
        cand[trial] = R::one();
        for k in 0..j {
            let proj = (0..rows).fold(R::zero(), |acc, i| acc + cand[i] * u[(i, k)]);
            for i in 0..rows {
                let d = proj * u[(i, k)];
                cand[i] = cand[i] - d;
            }
        }
        let nrm = cand.iter().fold(R::zero(), |acc, &x| acc + x * x).sqrt();
        if nrm > cast(0.5) {
            for i in 0..rows {
                u[(i, j)] = cand[i] / nrm;
            }
            return;
        }
    }
    u[(j.min(rows - 1), j)] = R::one();
}

/// Largest singular value (spectral norm).
pub fn spectral_norm<R: Real>(m: &Mat<R>) -> R {
    let (_, s, _) = svd(m);
    s.first().copied().unwrap_or_else(R::zero)
}

/// Sum of singular values (trace norm).
pub fn trace_norm<R: Real>(m: &Mat<R>) -> R {
    let (_, s, _) = svd(m);
    s.iter().fold(R::zero(), |a, &b| a + b)
}

/// All eigenvalues of a general real square matrix.
///
/// Balances, reduces to Hessenberg form with Householder reflections and runs
/// Francis double-shift QR. Eigenvalues come back unsorted as complex pairs.
pub fn real_eig<R: Real>(m: &Mat<R>) -> Vec<Complex<R>> {
    assert!(m.is_square(), "real_eig needs a square matrix");
    let n = m.rows();
    if n == 0 {
        return vec![];
    }
    if n == 1 {
        return vec![Complex::new(m[(0, 0)], R::zero())];
    }
    let mut a = m.clone();
    balance(&mut a);
    hessenberg(&mut a);
    hqr(&mut a)
}

/// Parlett-Reinsch balancing (similarity by powers of 2).
fn balance<R: Real>(a: &mut Mat<R>) {
    let n = a.rows();
    let radix = cast::<R>(2.0);
    let sq = radix * radix;
    loop {
        let mut done = true;
        for i in 0..n {
            let mut r = R::zero();
            let mut c = R::zero();
            for j in 0..n {
                if j != i {
                    c = c + a[(j, i)].abs();
                    r = r + a[(i, j)].abs();
                }
            }
            if c != R::zero() && r != R::zero() {
                let mut g = r / radix;
                let mut f = R::one();
                let s = c + r;
                let mut c2 = c;
                while c2 < g {
                    f = f * radix;
                    c2 = c2 * sq;
                }
                g = r * radix;
                while c2 > g {
                    f = f / radix;
                    c2 = c2 / sq;
                }
                if (c2 + r) / f < cast::<R>(0.95) * s {
                    done = false;
                    let ginv = R::one() / f;
                    for j in 0..n {
                        a[(i, j)] = a[(i, j)] * ginv;
                    }
                    for j in 0..n {
                        a[(j, i)] = a[(j, i)] * f;
                    }
                }
            }
        }
        if done {
            break;
        }
    }
}

/// Householder reduction to upper Hessenberg form (in place).
fn hessenberg<R: Real>(a: &mut Mat<R>) {
    let n = a.rows();
    for k in 0..n.saturating_sub(2) {
        let mut xnorm = R::zero();
        for i in k + 1..n {
            xnorm = xnorm + a[(i, k)] * a[(i, k)];
        }
        xnorm = xnorm.sqrt();
        if xnorm == R::zero() {
            continue;
        }
        let x0 = a[(k + 1, k)];
        let alpha = if x0 >= R::zero() { -xnorm } else { xnorm };
        let mut v = vec![R::zero(); n];
        v[k + 1] = x0 - alpha;
        for i in k + 2..n {
            v[i] = a[(i, k)];
        }
        let vnorm2 = v.iter().fold(R::zero(), |acc, &x| acc + x * x);
        if vnorm2 == R::zero() {
            continue;
        }
        let beta = cast::<R>(2.0) / vnorm2;
        // A <- P A with P = I - beta v v^T
        for j in 0..n {
            let mut s = R::zero();
            for i in k + 1..n {
                s = s + v[i] * a[(i, j)];
            }
            s = s * beta;
            for i in k + 1..n {
                let d = s * v[i];
                a[(i, j)] = a[(i, j)] - d;
            }
        }
        // A <- A P
        for i in 0..n {
            let mut s = R::zero();
            for j in k + 1..n {
                s = s + a[(i, j)] * v[j];
            }
            s = s * beta;
            for j in k + 1..n {
                let d = s * v[j];
                a[(i, j)] = a[(i, j)] - d;
            }
        }
    }
    // clear below the subdiagonal
    for i in 2..n {
        for j in 0..i - 1 {
            a[(i, j)] = R::zero();
        }
    }
}

/// Francis double-shift QR on an upper Hessenberg matrix; eigenvalues only.
fn hqr<R: Real>(a: &mut Mat<R>) -> Vec<Complex<R>> {
    let n = a.rows();
    let mut eig = vec![Complex::new(R::zero(), R::zero()); n];
    let eps = R::epsilon();
    let mut anorm = R::zero();
    for i in 0..n {
        for j in i.saturating_sub(1)..n {
            anorm = anorm + a[(i, j)].abs();
        }
    }
    let mut nn = n as isize - 1;
    let mut t = R::zero();
    'outer: while nn >= 0 {
        let mut its = 0usize;
        loop {
            // find small subdiagonal element
            let mut l = nn;
            while l >= 1 {
                let s0 = a[((l - 1) as usize, (l - 1) as usize)].abs() + a[(l as usize, l as usize)].abs();
                let s0 = if s0 == R::zero() { anorm } else { s0 };
                if a[(l as usize, (l - 1) as usize)].abs() <= eps * s0 {
                    a[(l as usize, (l - 1) as usize)] = R::zero();
                    break;
                }
                l -= 1;
            }
            let x = a[(nn as usize, nn as usize)];
            if l == nn {
                eig[nn as usize] = Complex::new(x + t, R::zero());
                nn -= 1;
                continue 'outer;
            }
            let y = a[((nn - 1) as usize, (nn - 1) as usize)];
            let w = a[(nn as usize, (nn - 1) as usize)] * a[((nn - 1) as usize, nn as usize)];
            if l == nn - 1 {
                let p = cast::<R>(0.5) * (y - x);
                let q = p * p + w;
                let z = q.abs().sqrt();
                let x = x + t;
                if q >= R::zero() {
                    let z = p + if p >= R::zero() { z } else { -z };
                    let e1 = x + z;
                    let e2 = if z != R::zero() { x - w / z } else { e1 };
                    eig[(nn - 1) as usize] = Complex::new(e1, R::zero());
                    eig[nn as usize] = Complex::new(e2, R::zero());
                } else {
                    eig[(nn - 1) as usize] = Complex::new(x + p, z);
                    eig[nn as usize] = Complex::new(x + p, -z);
                }
                nn -= 2;
                continue 'outer;
            }
            if its == 60 {
                // stalled; return the current diagonal approximations
                for i in 0..=nn as usize {
                    eig[i] = Complex::new(a[(i, i)] + t, R::zero());
                }
                nn = -1;
                continue 'outer;
            }
            let (mut x, mut y, mut w) = (x, y, w);
            if its % 10 == 0 && its > 0 {
                // exceptional shift
                t = t + x;
                for i in 0..=nn as usize {
                    a[(i, i)] = a[(i, i)] - x;
                }
                let s = a[(nn as usize, (nn - 1) as usize)].abs()
                    + a[((nn - 1) as usize, (nn - 2) as usize)].abs();
                x = cast::<R>(0.75) * s;
                y = x;
                w = cast::<R>(-0.4375) * s * s;
            }
            its += 1;
            // look for two consecutive small subdiagonal elements
            let mut m = nn - 2;
            let (mut p, mut q, mut r) = (R::zero(), R::zero(), R::zero());
            while m >= l {
                let z = a[(m as usize, m as usize)];
                let rr = x - z;
                let ss = y - z;
                p = (rr * ss - w) / a[((m + 1) as usize, m as usize)] + a[(m as usize, (m + 1) as usize)];
                q = a[((m + 1) as usize, (m + 1) as usize)] - z - rr - ss;
                r = a[((m + 2) as usize, (m + 1) as usize)];
                let s = p.abs() + q.abs() + r.abs();
                p = p / s;
                q = q / s;
                r = r / s;
                if m == l {
                    break;
                }
                let u = a[(m as usize, (m - 1) as usize)].abs() * (q.abs() + r.abs());
                let v = p.abs()
                    * (a[((m - 1) as usize, (m - 1) as usize)].abs()
                        + z.abs()
                        + a[((m + 1) as usize, (m + 1) as usize)].abs());
                if u <= eps * v {
                    break;
                }
                m -= 1;
            }
            for i in (m + 2)..=nn {
                a[(i as usize, (i - 2) as usize)] = R::zero();
                if i != m + 2 {
                    a[(i as usize, (i - 3) as usize)] = R::zero();
                }
            }
            // double QR step
            for k in m..=nn - 1 {
                if k != m {
                    p = a[(k as usize, (k - 1) as usize)];
                    q = a[((k + 1) as usize, (k - 1) as usize)];
                    r = if k != nn - 1 { a[((k + 2) as usize, (k - 1) as usize)] } else { R::zero() };
                    x = p.abs() + q.abs() + r.abs();
                    if x != R::zero() {
                        p = p / x;
                        q = q / x;
                        r = r / x;
                    }
                }
                let mag = (p * p + q * q + r * r).sqrt();
                let s = if p >= R::zero() { mag } else { -mag };
                if s == R::zero() {
                    continue;
                }
                if k == m {
                    if l != m {
                        a[(k as usize, (k - 1) as usize)] = -a[(k as usize, (k - 1) as usize)];
                    }
                } else {
                    a[(k as usize, (k - 1) as usize)] = -s * x;
                }
                p = p + s;
                x = p / s;
                y = q / s;
                let z = r / s;
                q = q / p;
                r = r / p;
                for j in (k as usize)..=(nn as usize) {
                    let mut pp = a[(k as usize, j)] + q * a[((k + 1) as usize, j)];
                    if k != nn - 1 {
                        pp = pp + r * a[((k + 2) as usize, j)];
                        let d = pp * z;
                        a[((k + 2) as usize, j)] = a[((k + 2) as usize, j)] - d;
                    }
                    let d1 = pp * y;
                    a[((k + 1) as usize, j)] = a[((k + 1) as usize, j)] - d1;
                    let d2 = pp * x;
                    a[(k as usize, j)] = a[(k as usize, j)] - d2;
                }
                let mmin = if nn < k + 3 { nn } else { k + 3 };
                for i in (l as usize)..=(mmin as usize) {
                    let mut pp = x * a[(i, k as usize)] + y * a[(i, (k + 1) as usize)];
                    if k != nn - 1 {
                        pp = pp + z * a[(i, (k + 2) as usize)];
                        let d = pp * r;
                        a[(i, (k + 2) as usize)] = a[(i, (k + 2) as usize)] - d;
                    }
                    let d1 = pp * q;
                    a[(i, (k + 1) as usize)] = a[(i, (k + 1) as usize)] - d1;
                    a[(i, k as usize)] = a[(i, k as usize)] - pp;
                }
            }
        }
    }
    eig
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reconstruct(vals: &[f64], vecs: &Mat<f64>) -> Mat<f64> {
        let d = Mat::diag(vals);
        vecs.matmul(&d).matmul(&vecs.transpose())
    }

    #[test]
    fn sym_eig_identity() {
        let (vals, _) = sym_eig(&Mat::<f64>::identity(3));
        assert_eq!(vals, vec![1.0, 1.0, 1.0]);
    }

    #[test]
    fn sym_eig_diag() {
        let (vals, _) = sym_eig(&Mat::<f64>::diag(&[2.0, -1.0]));
        assert_eq!(vals, vec![2.0, -1.0]);
    }

    #[test]
    fn sym_eig_swap() {
        let m = Mat::<f64>::from_rows(&[&[0.0, 1.0], &[1.0, 0.0]]);
        let (vals, vecs) = sym_eig(&m);
        assert!((vals[0] - 1.0).abs() < 1e-14 && (vals[1] + 1.0).abs() < 1e-14);
        assert!(reconstruct(&vals, &vecs).sub(&m).max_abs() < 1e-14);
    }

    #[test]
    fn herm_eig_examples() {
        let i2 = CMat::<f64>::identity(2);
        assert_eq!(herm_eig(&i2).0, vec![1.0, 1.0]);

        let m = CMat::<f64>::from_entries(2, 2, &[(0.0, 0.0), (1.0, 0.0), (1.0, 0.0), (0.0, 0.0)]);
        let vals = herm_eig(&m).0;
        assert!((vals[0] - 1.0).abs() < 1e-14 && (vals[1] + 1.0).abs() < 1e-14);

        // [[1, i], [-i, 1]] -> (2, 0)
        let m = CMat::<f64>::from_entries(2, 2, &[(1.0, 0.0), (0.0, 1.0), (0.0, -1.0), (1.0, 0.0)]);
        let (vals, vecs) = herm_eig(&m);
        assert!((vals[0] - 2.0).abs() < 1e-14 && vals[1].abs() < 1e-14);
        // reconstruction
        let d = CMat::from_fn(2, 2, |i, j| {
            if i == j { Complex::new(vals[i], 0.0) } else { Complex::new(0.0, 0.0) }
        });
        let rec = vecs.matmul(&d).matmul(&vecs.adjoint());
        assert!(rec.sub(&m).max_abs() < 1e-13);
    }

    #[test]
    fn svd_examples() {
        let (_, s, _) = svd(&Mat::<f64>::identity(4));
        assert!(s.iter().all(|&x| (x - 1.0).abs() < 1e-14));

        let (_, s, _) = svd(&Mat::<f64>::diag(&[3.0, -4.0]));
        assert!((s[0] - 4.0).abs() < 1e-14 && (s[1] - 3.0).abs() < 1e-14);

        // rank-1 x y^T
        let m = crate::numerics::mat::outer(&[1.0, 2.0], &[3.0, 4.0, 0.0]);
        let (u, s, v) = svd(&m);
        let expect = (5.0f64).sqrt() * 5.0;
        assert!((s[0] - expect).abs() < 1e-12);
        assert!(s[1].abs() < 1e-12);
        let rec = u.matmul(&Mat::diag(&s)).matmul(&v.transpose());
        assert!(rec.sub(&m).max_abs() < 1e-12);
    }

    #[test]
    fn real_eig_agrees_with_jacobi_on_symmetric() {
        let m = Mat::<f64>::from_rows(&[
            &[2.0, 1.0, 0.5],
            &[1.0, -1.0, 0.25],
            &[0.5, 0.25, 3.0],
        ]);
        let mut sym = sym_eig(&m).0;
        let mut gen: Vec<f64> = real_eig(&m).into_iter().map(|z| z.re).collect();
        sym.sort_by(|a, b| a.partial_cmp(b).unwrap());
        gen.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (a, b) in sym.iter().zip(&gen) {
            assert!((a - b).abs() < 1e-10, "{a} vs {b}");
        }
        assert!(real_eig(&m).iter().all(|z| z.im.abs() < 1e-10));
    }

    #[test]
    fn real_eig_rotation_block() {
        // rotation by 90 degrees has eigenvalues +-i
        let m = Mat::<f64>::from_rows(&[&[0.0, -1.0], &[1.0, 0.0]]);
        let mut eig = real_eig(&m);
        eig.sort_by(|a, b| b.im.partial_cmp(&a.im).unwrap());
        assert!((eig[0].im - 1.0).abs() < 1e-12 && eig[0].re.abs() < 1e-12);
        assert!((eig[1].im + 1.0).abs() < 1e-12);
    }

    #[test]
    fn real_eig_companion() {
        // companion matrix of z^3 - 6z^2 + 11z - 6 = (z-1)(z-2)(z-3)
        let m = Mat::<f64>::from_rows(&[&[0.0, 0.0, 6.0], &[1.0, 0.0, -11.0], &[0.0, 1.0, 6.0]]);
        let mut re: Vec<f64> = real_eig(&m).into_iter().map(|z| z.re).collect();
        re.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (got, want) in re.iter().zip(&[1.0, 2.0, 3.0]) {
            assert!((got - want).abs() < 1e-9, "{got} vs {want}");
        }
    }
}
