//! Invariant frames and constant-coefficient metrics.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{GeomError, Result};
use crate::fmath;
use crate::linalg::{self, Mat};
use crate::policy::NumericPolicy;

/// Basis `e_1, ..., e_d` of invariant vector fields together with the
/// constant structure coefficients `[e_i, e_j] = sum_k c(i,j,k) e_k`.
///
/// Construction validates antisymmetry in the first two slots and the Jacobi
/// identity, so every `LieFrame` in circulation presents an actual Lie
/// algebra. Indices are zero-based throughout.
#[derive(Clone, Debug, PartialEq)]
pub struct LieFrame {
    dim: usize,
    c: Vec<f64>,
}

impl LieFrame {
    /// Builds a frame from the full coefficient table, laid out as
    /// `c[(i * dim + j) * dim + k]`.
    pub fn new(dim: usize, coefficients: Vec<f64>, policy: &NumericPolicy) -> Result<Self> {
        if dim == 0 {
            return Err(GeomError::DimensionUnsupported("frame dimension must be positive"));
        }
        if coefficients.len() != dim * dim * dim {
            return Err(GeomError::DimensionMismatch {
                expected: dim * dim * dim,
                got: coefficients.len(),
            });
        }
        if !coefficients.iter().all(|x| x.is_finite()) {
            return Err(GeomError::NonFinite("structure coefficients"));
        }
        let frame = Self { dim, c: coefficients };
        let cmax = frame.max_coefficient();
        let anti = frame.antisymmetry_violation();
        if anti > policy.input_tol * cmax.max(1.0) {
            return Err(GeomError::BracketAntisymmetry { violation: anti });
        }
        // Jacobi terms are quadratic in the coefficients; scale the band
        // accordingly so large but exact tables still validate.
        let jac = frame.jacobi_violation();
        if jac > policy.input_tol * (cmax * cmax * dim as f64).max(1.0) {
            return Err(GeomError::JacobiIdentity { violation: jac });
        }
        Ok(frame)
    }

    /// Frame with all brackets zero.
    pub fn abelian(dim: usize) -> Self {
        Self { dim, c: vec![0.0; dim * dim * dim] }
    }

    /// Builds a frame from sparse bracket entries `(i, j, k, v)` meaning
    /// `[e_i, e_j] = v e_k + ...`, filling in the antisymmetric counterpart
    /// of each entry. Repeated `(i, j, k)` slots accumulate.
    pub fn from_bracket_list(
        dim: usize,
        entries: &[(usize, usize, usize, f64)],
        policy: &NumericPolicy,
    ) -> Result<Self> {
        let mut c = vec![0.0; dim * dim * dim];
        for &(i, j, k, v) in entries {
            for idx in [i, j, k] {
                if idx >= dim {
                    return Err(GeomError::IndexOutOfRange { index: idx, dim });
                }
            }
            if i == j && v != 0.0 {
                return Err(GeomError::BracketAntisymmetry { violation: fmath::abs(v) });
            }
            c[(i * dim + j) * dim + k] += v;
            c[(j * dim + i) * dim + k] -= v;
        }
        Self::new(dim, c, policy)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coefficient of `e_k` in `[e_i, e_j]`.
    #[inline]
    pub fn c(&self, i: usize, j: usize, k: usize) -> f64 {
        self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.c
    }

    /// `[x, y]` for invariant fields with constant coefficients.
    pub fn bracket(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        let d = self.dim;
        let mut out = vec![0.0; d];
        for i in 0..d {
            if x[i] == 0.0 {
                continue;
            }
            for j in 0..d {
                if y[j] == 0.0 {
                    continue;
                }
                for k in 0..d {
                    out[k] += x[i] * y[j] * self.c(i, j, k);
                }
            }
        }
        out
    }

    pub fn max_coefficient(&self) -> f64 {
        self.c.iter().fold(0.0, |acc, &x| acc.max(fmath::abs(x)))
    }

    pub fn antisymmetry_violation(&self) -> f64 {
        let d = self.dim;
        let mut v: f64 = 0.0;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    v = v.max(fmath::abs(self.c(i, j, k) + self.c(j, i, k)));
                }
            }
        }
        v
    }

    pub fn jacobi_violation(&self) -> f64 {
        let d = self.dim;
        let mut v: f64 = 0.0;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let mut s = 0.0;
                        for m in 0..d {
                            s += self.c(i, j, m) * self.c(m, k, l)
                                + self.c(j, k, m) * self.c(m, i, l)
                                + self.c(k, i, m) * self.c(m, j, l);
                        }
                        v = v.max(fmath::abs(s));
                    }
                }
            }
        }
        v
    }

    /// Structure coefficients of the new basis `f_a = sum_i p[(i,a)] e_i`.
    /// `p` must be invertible.
    pub fn transformed(&self, p: &Mat, policy: &NumericPolicy) -> Result<Self> {
        let d = self.dim;
        if p.rows() != d || p.cols() != d {
            return Err(GeomError::DimensionMismatch { expected: d, got: p.rows() });
        }
        let q = linalg::lu_inverse(p)?;
        let mut c = vec![0.0; d * d * d];
        for a in 0..d {
            for b in 0..d {
                let fa = p.column(a);
                let fb = p.column(b);
                let br = self.bracket(&fa, &fb);
                let new = q.mul_vec(&br);
                for (g, &val) in new.iter().enumerate() {
                    c[(a * d + b) * d + g] = val;
                }
            }
        }
        Self::new(d, c, policy)
    }
}

/// Invariant metric, stored as its Gram matrix `g_ij = g(e_i, e_j)` in the
/// frame. Validated symmetric positive definite at construction.
#[derive(Clone, Debug, PartialEq)]
pub struct FrameMetric {
    gram: Mat,
}

impl FrameMetric {
    pub fn new(gram: Mat, policy: &NumericPolicy) -> Result<Self> {
        if !gram.is_square() {
            return Err(GeomError::DimensionMismatch { expected: gram.rows(), got: gram.cols() });
        }
        if !gram.is_finite() {
            return Err(GeomError::NonFinite("metric entries"));
        }
        let violation = gram.symmetry_violation();
        if violation > policy.input_tol * gram.max_abs().max(1.0) {
            return Err(GeomError::MetricNotSymmetric { violation });
        }
        let sym = gram.symmetrized();
        if linalg::cholesky(&sym).is_none() {
            return Err(GeomError::MetricNotPositiveDefinite);
        }
        Ok(Self { gram: sym })
    }

    pub fn standard(dim: usize) -> Self {
        Self { gram: Mat::identity(dim) }
    }

    pub fn from_diagonal(entries: &[f64]) -> Result<Self> {
        if !entries.iter().all(|x| x.is_finite() && *x > 0.0) {
            return Err(GeomError::MetricNotPositiveDefinite);
        }
        Ok(Self { gram: Mat::diag(entries) })
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Mat {
        &self.gram
    }

    pub fn inner(&self, x: &[f64], y: &[f64]) -> f64 {
        linalg::dot(&self.gram.mul_vec(y), x)
    }

    pub fn norm_sq(&self, x: &[f64]) -> f64 {
        self.inner(x, x)
    }

    pub fn norm(&self, x: &[f64]) -> f64 {
        fmath::sqrt(self.norm_sq(x).max(0.0))
    }

    /// The covector `g(x, .)` in frame components.
    pub fn dual(&self, x: &[f64]) -> Vec<f64> {
        self.gram.mul_vec(x)
    }

    pub fn inverse(&self) -> Mat {
        linalg::spd_inverse(&self.gram).expect("metric validated positive definite")
    }

    /// Columns form a g-orthonormal basis; Gram-Schmidt in frame order.
    pub fn orthonormal_frame(&self) -> Mat {
        linalg::onb_from_gram(&self.gram).expect("metric validated positive definite")
    }

    /// Frobenius norm of a (0,2) tensor expressed in any g-orthonormal frame.
    pub fn tensor_norm(&self, t: &Mat) -> f64 {
        t.congruence(&self.orthonormal_frame()).frobenius()
    }

    /// The metric scaled by a positive constant factor.
    pub fn scaled(&self, c2: f64) -> Result<Self> {
        if !(c2 > 0.0 && c2.is_finite()) {
            return Err(GeomError::InfeasibleParameter("metric scale factor must be positive"));
        }
        Ok(Self { gram: self.gram.scaled(c2) })
    }

    /// Gram matrix of the same metric in the basis `f_a = sum_i p[(i,a)] e_i`.
    pub fn transformed(&self, p: &Mat, policy: &NumericPolicy) -> Result<Self> {
        Self::new(self.gram.congruence(p), policy)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn policy() -> NumericPolicy {
        NumericPolicy::default()
    }

    /// su(2) with brackets [e1,e2] = 2 e3 (cyclic).
    pub fn su2(policy: &NumericPolicy) -> LieFrame {
        LieFrame::from_bracket_list(
            3,
            &[(0, 1, 2, 2.0), (1, 2, 0, 2.0), (2, 0, 1, 2.0)],
            policy,
        )
        .unwrap()
    }

    #[test]
    fn bracket_list_closure() {
        let f = su2(&policy());
        assert_eq!(f.c(0, 1, 2), 2.0);
        assert_eq!(f.c(1, 0, 2), -2.0);
        assert_eq!(f.c(0, 0, 0), 0.0);
        let b = f.bracket(&[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0]);
        assert_eq!(b, vec![0.0, 0.0, 2.0]);
    }

    #[test]
    fn jacobi_violation_rejected() {
        // [e1,e2] = e3, [e1,e3] = e2, [e2,e3] = e1 fails Jacobi.
        let err = LieFrame::from_bracket_list(
            3,
            &[(0, 1, 2, 1.0), (0, 2, 1, 1.0), (1, 2, 0, 1.0)],
            &policy(),
        )
        .unwrap_err();
        assert!(matches!(err, GeomError::JacobiIdentity { .. }));
    }

    #[test]
    fn antisymmetry_rejected() {
        let mut c = vec![0.0; 27];
        c[(0 * 3 + 1) * 3 + 2] = 1.0; // c(0,1,2) without the mirror entry
        let err = LieFrame::new(3, c, &policy()).unwrap_err();
        assert!(matches!(err, GeomError::BracketAntisymmetry { .. }));
    }

    #[test]
    fn self_bracket_entry_rejected() {
        let err =
            LieFrame::from_bracket_list(3, &[(1, 1, 2, 1.0)], &policy()).unwrap_err();
        assert!(matches!(err, GeomError::BracketAntisymmetry { .. }));
    }

    #[test]
    fn out_of_range_index_rejected() {
        let err =
            LieFrame::from_bracket_list(3, &[(0, 1, 3, 1.0)], &policy()).unwrap_err();
        assert!(matches!(err, GeomError::IndexOutOfRange { index: 3, dim: 3 }));
    }

    #[test]
    fn metric_validation() {
        let p = policy();
        assert!(FrameMetric::new(Mat::diag(&[1.0, 1.0, -1.0]), &p).is_err());
        let asym = Mat::from_nested(&[vec![1.0, 0.5], vec![0.0, 1.0]]).unwrap();
        assert!(matches!(
            FrameMetric::new(asym, &p).unwrap_err(),
            GeomError::MetricNotSymmetric { .. }
        ));
        assert!(FrameMetric::from_diagonal(&[2.0, 1.0, 1.0]).is_ok());
        assert!(FrameMetric::from_diagonal(&[0.0, 1.0]).is_err());
    }

    #[test]
    fn dual_and_norm() {
        let g = FrameMetric::from_diagonal(&[2.0, 1.0, 1.0]).unwrap();
        let x = [3.0, 0.0, 4.0];
        assert_eq!(g.dual(&x), vec![6.0, 0.0, 4.0]);
        assert_eq!(g.norm_sq(&x), 34.0);
    }

    #[test]
    fn frame_change_roundtrip() {
        let p = policy();
        let f = su2(&p);
        // Swap e2 and e3 with a sign twist; an automorphism of su(2).
        let t = Mat::from_nested(&[
            vec![1.0, 0.0, 0.0],
            vec![0.0, 0.0, -1.0],
            vec![0.0, 1.0, 0.0],
        ])
        .unwrap();
        let g = f.transformed(&t, &p).unwrap();
        assert!((g.c(0, 1, 2) - 2.0).abs() < 1e-14);
        let back = g
            .transformed(&linalg::lu_inverse(&t).unwrap(), &p)
            .unwrap();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    assert!((back.c(i, j, k) - f.c(i, j, k)).abs() < 1e-13);
                }
            }
        }
    }
}
