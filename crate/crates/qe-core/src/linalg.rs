//! Dense linear algebra for small square systems.
//!
//! Frames in this crate have dimension three to six, so everything below is
//! written for clarity rather than asymptotic speed: row-major storage,
//! unblocked Cholesky, cyclic Jacobi for symmetric eigenproblems, partial
//! pivoting for the occasional general solve.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use crate::error::{GeomError, Result};
use crate::fmath;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn diag(entries: &[f64]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, &e) in entries.iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Builds from nested rows; `None` if the rows are ragged or empty.
    pub fn from_nested(rows: &[Vec<f64>]) -> Option<Self> {
        let r = rows.len();
        let c = rows.first()?.len();
        if c == 0 || rows.iter().any(|row| row.len() != c) {
            return None;
        }
        Some(Self::from_fn(r, c, |i, j| rows[i][j]))
    }

    pub fn to_nested(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn set_column(&mut self, j: usize, v: &[f64]) {
        for i in 0..self.rows {
            self[(i, j)] = v[i];
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.cols, rhs.rows);
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).map(|k| self[(i, k)] * rhs[(k, j)]).sum()
        })
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        debug_assert_eq!(self.cols, v.len());
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    /// `B^T * self * B`.
    pub fn congruence(&self, b: &Self) -> Self {
        b.transpose().matmul(&self.matmul(b))
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| s * self[(i, j)])
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)] + rhs[(i, j)])
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)] - rhs[(i, j)])
    }

    pub fn outer(u: &[f64], v: &[f64]) -> Self {
        Self::from_fn(u.len(), v.len(), |i, j| u[i] * v[j])
    }

    pub fn trace(&self) -> f64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius(&self) -> f64 {
        fmath::sqrt(self.data.iter().map(|x| x * x).sum())
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |acc, &x| acc.max(fmath::abs(x)))
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|x| x.is_finite())
    }

    pub fn symmetry_violation(&self) -> f64 {
        let mut v: f64 = 0.0;
        for i in 0..self.rows {
            for j in i + 1..self.cols {
                v = v.max(fmath::abs(self[(i, j)] - self[(j, i)]));
            }
        }
        v
    }

    pub fn symmetrized(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| 0.5 * (self[(i, j)] + self[(j, i)]))
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = f64;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn vec_scaled(v: &[f64], s: f64) -> Vec<f64> {
    v.iter().map(|x| s * x).collect()
}

pub fn vec_add(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |acc, &x| acc.max(fmath::abs(x)))
}

/// Euclidean norm of a coefficient vector (parameter-space measure, not a
/// metric norm).
pub fn vec_norm(v: &[f64]) -> f64 {
    fmath::sqrt(dot(v, v))
}

/// Lower-triangular Cholesky factor of a symmetric positive definite matrix.
/// `None` when a pivot falls below the positive-definiteness floor.
pub fn cholesky(a: &Mat) -> Option<Mat> {
    debug_assert!(a.is_square());
    let n = a.rows();
    let scale = a.max_abs().max(f64::MIN_POSITIVE);
    let mut l = Mat::zeros(n, n);
    for j in 0..n {
        let mut d = a[(j, j)];
        for k in 0..j {
            d -= l[(j, k)] * l[(j, k)];
        }
        // Written as a positive test so NaN pivots also bail out.
        if !(d > scale * 1e-14) {
            return None;
        }
        let dj = fmath::sqrt(d);
        l[(j, j)] = dj;
        for i in j + 1..n {
            let mut s = a[(i, j)];
            for k in 0..j {
                s -= l[(i, k)] * l[(j, k)];
            }
            l[(i, j)] = s / dj;
        }
    }
    Some(l)
}

/// Solves `L x = b` for lower-triangular `L`.
pub fn solve_lower(l: &Mat, b: &[f64]) -> Vec<f64> {
    let n = l.rows();
    let mut x = b.to_vec();
    for i in 0..n {
        for k in 0..i {
            let lik = l[(i, k)];
            x[i] -= lik * x[k];
        }
        x[i] /= l[(i, i)];
    }
    x
}

/// Solves `L^T x = b` for lower-triangular `L`.
pub fn solve_lower_transpose(l: &Mat, b: &[f64]) -> Vec<f64> {
    let n = l.rows();
    let mut x = b.to_vec();
    for i in (0..n).rev() {
        for k in i + 1..n {
            let lki = l[(k, i)];
            x[i] -= lki * x[k];
        }
        x[i] /= l[(i, i)];
    }
    x
}

pub fn spd_solve(a: &Mat, b: &[f64]) -> Result<Vec<f64>> {
    let l = cholesky(a).ok_or(GeomError::MetricNotPositiveDefinite)?;
    Ok(solve_lower_transpose(&l, &solve_lower(&l, b)))
}

pub fn spd_inverse(a: &Mat) -> Result<Mat> {
    let n = a.rows();
    let l = cholesky(a).ok_or(GeomError::MetricNotPositiveDefinite)?;
    let mut inv = Mat::zeros(n, n);
    let mut e = vec![0.0; n];
    for j in 0..n {
        e[j] = 1.0;
        let col = solve_lower_transpose(&l, &solve_lower(&l, &e));
        inv.set_column(j, &col);
        e[j] = 0.0;
    }
    Ok(inv.symmetrized())
}

/// Basis orthonormal for the inner product defined by the Gram matrix `g`,
/// returned as matrix columns. Coincides with Gram-Schmidt applied to the
/// frame vectors `e_1, ..., e_n` in that order, so the result is upper
/// triangular with positive diagonal.
pub fn onb_from_gram(g: &Mat) -> Result<Mat> {
    let n = g.rows();
    let l = cholesky(g).ok_or(GeomError::MetricNotPositiveDefinite)?;
    let mut b = Mat::zeros(n, n);
    let mut e = vec![0.0; n];
    for j in 0..n {
        e[j] = 1.0;
        let col = solve_lower_transpose(&l, &e);
        b.set_column(j, &col);
        e[j] = 0.0;
    }
    Ok(b)
}

/// Solves a general square system by LU with partial pivoting.
pub fn solve_lu(a: &Mat, b: &[f64]) -> Result<Vec<f64>> {
    let n = a.rows();
    let mut m = a.clone();
    let mut x = b.to_vec();
    let scale = a.max_abs().max(f64::MIN_POSITIVE);
    for col in 0..n {
        let mut piv = col;
        for r in col + 1..n {
            if fmath::abs(m[(r, col)]) > fmath::abs(m[(piv, col)]) {
                piv = r;
            }
        }
        if fmath::abs(m[(piv, col)]) <= scale * 1e-15 {
            return Err(GeomError::SingularMatrix);
        }
        if piv != col {
            for j in 0..n {
                let t = m[(col, j)];
                m[(col, j)] = m[(piv, j)];
                m[(piv, j)] = t;
            }
            x.swap(col, piv);
        }
        for r in col + 1..n {
            let f = m[(r, col)] / m[(col, col)];
            m[(r, col)] = 0.0;
            for j in col + 1..n {
                let v = m[(col, j)];
                m[(r, j)] -= f * v;
            }
            x[r] -= f * x[col];
        }
    }
    for i in (0..n).rev() {
        for j in i + 1..n {
            let v = m[(i, j)];
            x[i] -= v * x[j];
        }
        x[i] /= m[(i, i)];
    }
    Ok(x)
}

pub fn lu_inverse(a: &Mat) -> Result<Mat> {
    let n = a.rows();
    let mut inv = Mat::zeros(n, n);
    let mut e = vec![0.0; n];
    for j in 0..n {
        e[j] = 1.0;
        let col = solve_lu(a, &e)?;
        inv.set_column(j, &col);
        e[j] = 0.0;
    }
    Ok(inv)
}

pub fn determinant(a: &Mat) -> f64 {
    let n = a.rows();
    let mut m = a.clone();
    let mut det = 1.0;
    for col in 0..n {
        let mut piv = col;
        for r in col + 1..n {
            if fmath::abs(m[(r, col)]) > fmath::abs(m[(piv, col)]) {
                piv = r;
            }
        }
        if m[(piv, col)] == 0.0 {
            return 0.0;
        }
        if piv != col {
            det = -det;
            for j in 0..n {
                let t = m[(col, j)];
                m[(col, j)] = m[(piv, j)];
                m[(piv, j)] = t;
            }
        }
        det *= m[(col, col)];
        for r in col + 1..n {
            let f = m[(r, col)] / m[(col, col)];
            for j in col..n {
                let v = m[(col, j)];
                m[(r, j)] -= f * v;
            }
        }
    }
    det
}

/// Eigenvalues (ascending) and orthonormal eigenvectors (as columns) of a
/// symmetric matrix, by cyclic Jacobi rotations.
pub fn sym_eigen(a: &Mat) -> (Vec<f64>, Mat) {
    let n = a.rows();
    let mut m = a.symmetrized();
    let mut v = Mat::identity(n);
    let scale = m.max_abs().max(f64::MIN_POSITIVE);
    for _sweep in 0..64 {
        let mut off: f64 = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                off = off.max(fmath::abs(m[(p, q)]));
            }
        }
        if off <= scale * 1e-16 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[(p, q)];
                if fmath::abs(apq) <= scale * 1e-18 {
                    continue;
                }
                let theta = (m[(q, q)] - m[(p, p)]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + fmath::sqrt(theta * theta + 1.0))
                } else {
                    -1.0 / (-theta + fmath::sqrt(theta * theta + 1.0))
                };
                let c = 1.0 / fmath::sqrt(t * t + 1.0);
                let s = t * c;
                for k in 0..n {
                    let mp = m[(p, k)];
                    let mq = m[(q, k)];
                    m[(p, k)] = c * mp - s * mq;
                    m[(q, k)] = s * mp + c * mq;
                }
                for k in 0..n {
                    let mp = m[(k, p)];
                    let mq = m[(k, q)];
                    m[(k, p)] = c * mp - s * mq;
                    m[(k, q)] = s * mp + c * mq;
                }
                for k in 0..n {
                    let vp = v[(k, p)];
                    let vq = v[(k, q)];
                    v[(k, p)] = c * vp - s * vq;
                    v[(k, q)] = s * vp + c * vq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].partial_cmp(&m[(j, j)]).unwrap_or(core::cmp::Ordering::Equal));
    let vals = order.iter().map(|&i| m[(i, i)]).collect();
    let vecs = Mat::from_fn(n, n, |i, j| v[(i, order[j])]);
    (vals, vecs)
}

/// Solves `A v = mu G v` for symmetric `A` and symmetric positive definite
/// `G` by the Cholesky reduction `L^{-1} A L^{-T}`. Eigenvalues ascending;
/// eigenvector columns are G-orthonormal.
pub fn generalized_sym_eigen(a: &Mat, g: &Mat) -> Result<(Vec<f64>, Mat)> {
    let n = a.rows();
    let l = cholesky(g).ok_or(GeomError::MetricNotPositiveDefinite)?;
    let mut k = Mat::zeros(n, n);
    for j in 0..n {
        k.set_column(j, &solve_lower(&l, &a.column(j)));
    }
    let kt = k.transpose();
    let mut bt = Mat::zeros(n, n);
    for j in 0..n {
        bt.set_column(j, &solve_lower(&l, &kt.column(j)));
    }
    let b = bt.transpose().symmetrized();
    let (vals, w) = sym_eigen(&b);
    let mut v = Mat::zeros(n, n);
    for j in 0..n {
        v.set_column(j, &solve_lower_transpose(&l, &w.column(j)));
    }
    Ok((vals, v))
}

/// Matrix exponential of a symmetric matrix via its spectral decomposition.
pub fn sym_exp(s: &Mat) -> Mat {
    let n = s.rows();
    let (vals, q) = sym_eigen(s);
    let mut out = Mat::zeros(n, n);
    for k in 0..n {
        let ek = fmath::exp(vals[k]);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] += ek * q[(i, k)] * q[(j, k)];
            }
        }
    }
    out.symmetrized()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    #[test]
    fn cholesky_reconstructs() {
        let a = Mat::from_nested(&[
            vec![4.0, 2.0, 0.0],
            vec![2.0, 5.0, 1.0],
            vec![0.0, 1.0, 3.0],
        ])
        .unwrap();
        let l = cholesky(&a).unwrap();
        let rec = l.matmul(&l.transpose());
        assert!(rec.sub(&a).max_abs() < 1e-14);
    }

    #[test]
    fn cholesky_rejects_indefinite() {
        let a = Mat::from_nested(&[vec![1.0, 2.0], vec![2.0, 1.0]]).unwrap();
        assert!(cholesky(&a).is_none());
    }

    #[test]
    fn spd_solve_roundtrip() {
        let a = Mat::from_nested(&[vec![3.0, 1.0], vec![1.0, 2.0]]).unwrap();
        let x = spd_solve(&a, &[5.0, 5.0]).unwrap();
        let b = a.mul_vec(&x);
        assert_close(b[0], 5.0, 1e-13);
        assert_close(b[1], 5.0, 1e-13);
    }

    #[test]
    fn onb_is_gram_schmidt_in_frame_order() {
        let g = Mat::from_nested(&[
            vec![2.0, 1.0, 0.0],
            vec![1.0, 2.0, 1.0],
            vec![0.0, 1.0, 4.0],
        ])
        .unwrap();
        let b = onb_from_gram(&g).unwrap();
        let gram = g.congruence(&b);
        assert!(gram.sub(&Mat::identity(3)).max_abs() < 1e-13);
        // Upper triangular with positive diagonal: the first output vector is
        // a positive multiple of e_1, the second lies in span(e_1, e_2), ...
        assert_close(b[(1, 0)], 0.0, 0.0);
        assert_close(b[(2, 0)], 0.0, 0.0);
        assert_close(b[(2, 1)], 0.0, 0.0);
        assert!(b[(0, 0)] > 0.0 && b[(1, 1)] > 0.0 && b[(2, 2)] > 0.0);
    }

    #[test]
    fn lu_solves_general_system() {
        let a = Mat::from_nested(&[
            vec![0.0, 2.0, 1.0],
            vec![1.0, -1.0, 0.5],
            vec![3.0, 0.0, -1.0],
        ])
        .unwrap();
        let x = solve_lu(&a, &[1.0, 2.0, 3.0]).unwrap();
        let b = a.mul_vec(&x);
        assert_close(b[0], 1.0, 1e-12);
        assert_close(b[1], 2.0, 1e-12);
        assert_close(b[2], 3.0, 1e-12);
    }

    #[test]
    fn jacobi_eigen_known_spectrum() {
        let a = Mat::from_nested(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        let (vals, vecs) = sym_eigen(&a);
        assert_close(vals[0], 1.0, 1e-14);
        assert_close(vals[1], 3.0, 1e-14);
        for j in 0..2 {
            let v = vecs.column(j);
            let av = a.mul_vec(&v);
            for i in 0..2 {
                assert_close(av[i], vals[j] * v[i], 1e-13);
            }
        }
    }

    #[test]
    fn generalized_eigen_matches_pencil() {
        let a = Mat::diag(&[8.0, 0.0, 0.0]);
        let g = Mat::diag(&[2.0, 1.0, 1.0]);
        let (vals, vecs) = generalized_sym_eigen(&a, &g).unwrap();
        assert_close(vals[0], 0.0, 1e-13);
        assert_close(vals[1], 0.0, 1e-13);
        assert_close(vals[2], 4.0, 1e-13);
        let gram = g.congruence(&vecs);
        assert!(gram.sub(&Mat::identity(3)).max_abs() < 1e-12);
    }

    #[test]
    fn sym_exp_of_diagonal() {
        let s = Mat::diag(&[0.0, core::f64::consts::LN_2]);
        let e = sym_exp(&s);
        assert_close(e[(0, 0)], 1.0, 1e-14);
        assert_close(e[(1, 1)], 2.0, 1e-14);
        assert_close(e[(0, 1)], 0.0, 1e-14);
    }

    #[test]
    fn determinant_with_pivoting() {
        let a = Mat::from_nested(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        assert_close(determinant(&a), -1.0, 1e-15);
    }
}
