//! Default numerical tolerances.
//!
//! Exact matrix identities (metric preservation, orthogonality) are held to
//! `EXACT`; quantities assembled from several matrix products get `COMPOSED`.
//! Functions with a `_with_tol` variant accept anything else.

/// Tolerance for identities that are exact in real arithmetic.
pub const EXACT: f64 = 1e-12;

/// Tolerance for composed quantities (products of several exact pieces).
pub const COMPOSED: f64 = 1e-10;

/// Hermiticity slack for observable matrices.
pub const HERMITIAN: f64 = 1e-13;

/// Largest imaginary part tolerated in an expectation value before it is
/// treated as a Hermiticity bug rather than rounding noise.
pub const IMAGINARY_RESIDUE: f64 = 1e-13;

/// Slack on the |value| <= 1 bound of correlation functions.
pub const CORRELATION_RANGE: f64 = 1e-12;

/// Relative threshold below which two momenta count as coincident.
pub const MOMENTUM_COINCIDENCE: f64 = 1e-12;
