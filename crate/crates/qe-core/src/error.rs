use core::fmt;

/// Errors produced by geometric constructions and checks.
#[derive(Clone, Debug, PartialEq)]
pub enum GeomError {
    /// Structure coefficients are not antisymmetric in the first two slots.
    BracketAntisymmetry { violation: f64 },
    /// Structure coefficients violate the Jacobi identity.
    JacobiIdentity { violation: f64 },
    /// A frame index lies outside `0..dim`.
    IndexOutOfRange { index: usize, dim: usize },
    /// Array or matrix size does not match the frame dimension.
    DimensionMismatch { expected: usize, got: usize },
    /// The operation is only defined in another dimension or parity.
    DimensionUnsupported(&'static str),
    MetricNotSymmetric { violation: f64 },
    MetricNotPositiveDefinite,
    /// A NaN or infinity appeared in the named input.
    NonFinite(&'static str),
    /// A scalar parameter is outside its admissible range (zero `m`,
    /// nonpositive scaling factor, negative squared norm, ...).
    InfeasibleParameter(&'static str),
    /// A direction that must be nonzero vanished.
    ZeroVector(&'static str),
    /// Sectional curvature of a plane whose Gram determinant is below the
    /// degeneracy cutoff.
    DegeneratePlane { denominator: f64 },
    /// A derived structure collapsed (for example a vanishing rotation
    /// endomorphism where a contact structure was expected).
    DegenerateStructure(&'static str),
    NotKilling { residual: f64 },
    NotUnitLength { norm_sq: f64 },
    /// Fibers of the requested fibration are not geodesic.
    NotGeodesicFibers { residual: f64 },
    /// The supplied field has a component outside the fiber direction.
    NotVertical { residual: f64 },
    /// The data fails the quasi-Einstein equation beyond tolerance.
    NotQuasiEinstein { residual: f64 },
    /// The potential field vanishes where a nontrivial one is required.
    TrivialField,
    /// `lambda + |X|^2/m` is not positive, so no Sasakian rescaling exists.
    NotRescalable { value: f64 },
    /// The quotient metric is not Einstein beyond tolerance.
    BaseNotEinstein { residual: f64 },
    /// An identity that must hold for consistent inputs failed; usually a
    /// sign of perturbed or hand-edited data.
    InconsistentInvariant(&'static str),
    /// No one-parameter family exists through the requested data.
    NoFamily(&'static str),
    SingularMatrix,
}

impl fmt::Display for GeomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::BracketAntisymmetry { violation } => {
                write!(f, "structure coefficients not antisymmetric (violation {violation:.3e})")
            }
            Self::JacobiIdentity { violation } => {
                write!(f, "Jacobi identity fails (violation {violation:.3e})")
            }
            Self::IndexOutOfRange { index, dim } => {
                write!(f, "frame index {index} out of range for dimension {dim}")
            }
            Self::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Self::DimensionUnsupported(what) => write!(f, "unsupported dimension: {what}"),
            Self::MetricNotSymmetric { violation } => {
                write!(f, "metric not symmetric (violation {violation:.3e})")
            }
            Self::MetricNotPositiveDefinite => write!(f, "metric not positive definite"),
            Self::NonFinite(what) => write!(f, "non-finite value in {what}"),
            Self::InfeasibleParameter(what) => write!(f, "infeasible parameter: {what}"),
            Self::ZeroVector(what) => write!(f, "zero vector: {what}"),
            Self::DegeneratePlane { denominator } => {
                write!(f, "degenerate plane (Gram determinant {denominator:.3e})")
            }
            Self::DegenerateStructure(what) => write!(f, "degenerate structure: {what}"),
            Self::NotKilling { residual } => {
                write!(f, "field is not Killing (residual {residual:.3e})")
            }
            Self::NotUnitLength { norm_sq } => {
                write!(f, "field is not unit length (|.|^2 = {norm_sq:.17})")
            }
            Self::NotGeodesicFibers { residual } => {
                write!(f, "fibers are not geodesic (residual {residual:.3e})")
            }
            Self::NotVertical { residual } => {
                write!(f, "field is not vertical (residual {residual:.3e})")
            }
            Self::NotQuasiEinstein { residual } => {
                write!(f, "not quasi-Einstein within tolerance (residual {residual:.3e})")
            }
            Self::TrivialField => write!(f, "potential field is zero (trivial solution)"),
            Self::NotRescalable { value } => {
                write!(f, "lambda + |X|^2/m = {value:.17} is not positive; no Sasakian rescaling")
            }
            Self::BaseNotEinstein { residual } => {
                write!(f, "quotient metric is not Einstein (residual {residual:.3e})")
            }
            Self::InconsistentInvariant(what) => write!(f, "inconsistent invariant: {what}"),
            Self::NoFamily(what) => write!(f, "no variation family: {what}"),
            Self::SingularMatrix => write!(f, "singular matrix"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for GeomError {}

pub type Result<T> = core::result::Result<T, GeomError>;
