//! Error type shared by every module.

use core::fmt;

/// Failure modes of the constructions in this crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Rest mass must be strictly positive and finite.
    NonPositiveMass { mass: f64 },
    /// Helicity constructions need a direction of motion; a particle at rest
    /// has none.
    RestFrameMomentum,
    /// A supplied 3x3 matrix is not orthogonal with unit determinant.
    NotARotation { residual: f64 },
    /// A supplied 4x4 matrix does not preserve the Minkowski metric.
    NotLorentz { residual: f64 },
    /// The time-time entry of a Lorentz matrix must be >= 1.
    NotOrthochronous { entry: f64 },
    /// Two-boson states require distinct momenta; coincident momenta are
    /// unsupported.
    CoincidentMomenta,
    /// Both particles of a pair must carry the same rest mass.
    MassMismatch { mass_k: f64, mass_p: f64 },
    /// A transverse gauge axis could not be resolved (zero vector, vector
    /// parallel to the momentum, or a pair gauge requested for a single
    /// particle).
    DegenerateGauge,
    /// Transversal polarization coefficients must satisfy |alpha|^2 + |beta|^2 = 1.
    UnnormalizedTransversal { norm_sq: f64 },
    /// A state with all-zero coefficients carries no physics.
    ZeroState,
    /// The two observables of a correlation must act on opposite particles.
    ObservableSides,
    /// An expectation value came out with an imaginary part beyond the
    /// allowed numerical residue, signalling a non-Hermitian observable.
    ImaginaryResidue { residual: f64 },
    /// Measurement directions must be unit vectors.
    NonUnitDirection { norm: f64 },
    /// No closed-form expression is implemented for this configuration.
    NoClosedForm,
    /// A correlation value escaped [-1, 1] beyond numerical slack.
    OutOfRange { value: f64 },
    /// Catch-all for invalid scalar parameters (ranges, angles, counts).
    InvalidParameter(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPositiveMass { mass } => {
                write!(f, "rest mass must be positive and finite, got {mass}")
            }
            Error::RestFrameMomentum => {
                write!(f, "zero spatial momentum: helicity is undefined at rest")
            }
            Error::NotARotation { residual } => {
                write!(f, "matrix is not a proper rotation (residual {residual:e})")
            }
            Error::NotLorentz { residual } => {
                write!(f, "matrix does not preserve the metric (residual {residual:e})")
            }
            Error::NotOrthochronous { entry } => {
                write!(f, "Lorentz matrix is not orthochronous (time-time entry {entry})")
            }
            Error::CoincidentMomenta => write!(
                f,
                "coincident momenta unsupported: the two-boson states require k != p"
            ),
            Error::MassMismatch { mass_k, mass_p } => {
                write!(f, "particle masses differ: {mass_k} vs {mass_p}")
            }
            Error::DegenerateGauge => {
                write!(f, "cannot resolve a transverse gauge axis for this configuration")
            }
            Error::UnnormalizedTransversal { norm_sq } => write!(
                f,
                "transversal coefficients must satisfy |alpha|^2 + |beta|^2 = 1, got {norm_sq}"
            ),
            Error::ZeroState => write!(f, "state coefficients are identically zero"),
            Error::ObservableSides => {
                write!(f, "correlation needs one k-side and one p-side observable")
            }
            Error::ImaginaryResidue { residual } => write!(
                f,
                "expectation value has imaginary residue {residual:e}; observable is not Hermitian"
            ),
            Error::NonUnitDirection { norm } => {
                write!(f, "measurement direction must be a unit vector, |a| = {norm}")
            }
            Error::NoClosedForm => {
                write!(f, "no closed form for this configuration; use the oracle")
            }
            Error::OutOfRange { value } => {
                write!(f, "correlation value {value} escaped [-1, 1]")
            }
            Error::InvalidParameter(what) => write!(f, "{what}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
