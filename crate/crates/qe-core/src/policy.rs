//! Numeric tolerances shared across the crate.
//!
//! Checks fall into bands. Input validation guards identities the caller is
//! expected to satisfy exactly up to parser rounding, so it is the tightest.
//! Structural identities hold algebraically for valid data and only
//! accumulate floating-point noise through a handful of 3x3 contractions.
//! Verification and grouping decisions sit two orders looser because they
//! judge derived quantities (residual norms, eigenvalue gaps) whose noise
//! floor includes linear solves.

/// Tolerance bands used by every geometric check. Construct with
/// [`Default::default`] and override fields as needed.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NumericPolicy {
    /// Input validation: bracket antisymmetry, the Jacobi identity, metric
    /// symmetry.
    pub input_tol: f64,
    /// Identities that hold algebraically for valid data: torsion-freeness,
    /// metric compatibility, curvature symmetries, Killing and geodesic-fiber
    /// residuals, closedness of one-forms.
    pub structural_tol: f64,
    /// Acceptance bound on quasi-Einstein residual norms.
    pub verify_tol: f64,
    /// Grouping width for eigenvalue multiplicities and for curvature
    /// comparisons against pinned constants (sectional values against 1,
    /// phi-sectional bucket edges against -3).
    pub grouping_tol: f64,
    /// Cutoff below which a sectional-curvature denominator counts as a
    /// degenerate plane.
    pub degenerate_tol: f64,
}

impl Default for NumericPolicy {
    fn default() -> Self {
        Self {
            input_tol: 1e-12,
            structural_tol: 1e-10,
            verify_tol: 1e-8,
            grouping_tol: 1e-8,
            degenerate_tol: 1e-14,
        }
    }
}

impl NumericPolicy {
    /// Default bands with the verification bound replaced.
    pub fn with_verify_tol(tol: f64) -> Self {
        Self { verify_tol: tol, ..Self::default() }
    }
}
