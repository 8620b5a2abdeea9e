//! Choice of the transverse gauge axis `a_p`.
//!
//! The rotation carrying the z-axis onto a momentum direction `n_p` is fixed
//! only up to a rotation about `n_p`; the free unit vector `a_p` (with
//! `a_p . n_p = 0`) completes it. Helicity observables do not depend on the
//! choice, but linear-polarization angles are measured relative to `a_p`, so
//! two-particle polarization work needs a deliberate convention.

use crate::error::{Error, Result};
use crate::kinematics::{project_transverse, spherical_transverse_axis, FourMomentum};
use crate::linalg::{cross, norm, scale};

/// How the transverse axis `a_p` is selected.
///
/// `PairCommon` is the default for two-particle polarization work: both
/// particles share the unit normal of the plane spanned by their momenta,
/// which is the convention under which the closed-form polarization
/// correlators hold. For collinear momenta (the center-of-mass
/// configuration) the normal degenerates and a deterministic fallback
/// perpendicular to the common axis is used for both particles.
#[derive(Debug, Clone, PartialEq)]
pub enum GaugeChoice {
    /// `a_p` from the spherical angles of `n_p`, azimuth zero on the poles.
    Spherical,
    /// `a_k = a_p = (k x p) / |k x p|`, with a common fallback when collinear.
    PairCommon,
    /// A caller-supplied vector, projected transverse to each momentum and
    /// normalized.
    Explicit([f64; 3]),
    /// Independent caller-supplied vectors for the two sides of a pair,
    /// each projected transverse to its momentum and normalized.
    ExplicitPair { a_k: [f64; 3], a_p: [f64; 3] },
}

/// Relative cross-product magnitude below which a pair counts as collinear.
const COLLINEAR_EPS: f64 = 1e-9;

impl GaugeChoice {
    /// Resolves the axis for a single particle. Pair-based choices error
    /// here because they need the partner momentum.
    pub fn resolve_single(&self, p: &FourMomentum) -> Result<[f64; 3]> {
        let n = p.direction()?;
        match self {
            GaugeChoice::Spherical => Ok(spherical_transverse_axis(n)),
            GaugeChoice::Explicit(v) => project_transverse(*v, n).ok_or(Error::DegenerateGauge),
            GaugeChoice::PairCommon | GaugeChoice::ExplicitPair { .. } => {
                Err(Error::DegenerateGauge)
            }
        }
    }

    /// Resolves the axes `(a_k, a_p)` for a pair of momenta.
    pub fn resolve_pair(&self, k: &FourMomentum, p: &FourMomentum) -> Result<([f64; 3], [f64; 3])> {
        let n_k = k.direction()?;
        let n_p = p.direction()?;
        match self {
            GaugeChoice::Spherical => Ok((
                spherical_transverse_axis(n_k),
                spherical_transverse_axis(n_p),
            )),
            GaugeChoice::PairCommon => {
                let c = cross(n_k, n_p);
                let len = norm(c);
                let common = if len < COLLINEAR_EPS {
                    spherical_transverse_axis(n_k)
                } else {
                    scale(c, 1.0 / len)
                };
                // Per-side cleanup keeps each axis transverse to machine
                // precision even when the pair is barely non-collinear.
                let a_k = project_transverse(common, n_k).ok_or(Error::DegenerateGauge)?;
                let a_p = project_transverse(common, n_p).ok_or(Error::DegenerateGauge)?;
                Ok((a_k, a_p))
            }
            GaugeChoice::Explicit(v) => {
                let a_k = project_transverse(*v, n_k).ok_or(Error::DegenerateGauge)?;
                let a_p = project_transverse(*v, n_p).ok_or(Error::DegenerateGauge)?;
                Ok((a_k, a_p))
            }
            GaugeChoice::ExplicitPair { a_k, a_p } => {
                let a_k = project_transverse(*a_k, n_k).ok_or(Error::DegenerateGauge)?;
                let a_p = project_transverse(*a_p, n_p).ok_or(Error::DegenerateGauge)?;
                Ok((a_k, a_p))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::dot;

    #[test]
    fn pair_common_is_perpendicular_to_both() {
        let k = FourMomentum::new(1.0, [1.0, 0.2, 0.0]).unwrap();
        let p = FourMomentum::new(1.0, [0.0, 1.5, -0.4]).unwrap();
        let (a_k, a_p) = GaugeChoice::PairCommon.resolve_pair(&k, &p).unwrap();
        assert!((norm(a_k) - 1.0).abs() < 1e-14);
        assert!(dot(a_k, k.direction().unwrap()).abs() < 1e-14);
        assert!(dot(a_k, p.direction().unwrap()).abs() < 1e-14);
        assert!(dot(a_p, p.direction().unwrap()).abs() < 1e-14);
        // Noncollinear momenta share the same axis.
        for i in 0..3 {
            assert!((a_k[i] - a_p[i]).abs() < 1e-12);
        }
    }

    #[test]
    fn pair_common_collinear_fallback_serves_both() {
        let k = FourMomentum::new(1.0, [0.3, -0.4, 1.2]).unwrap();
        let p = k.cm_partner();
        let (a_k, a_p) = GaugeChoice::PairCommon.resolve_pair(&k, &p).unwrap();
        assert_eq!(a_k, a_p);
        assert!(dot(a_k, k.direction().unwrap()).abs() < 1e-14);
        assert!(dot(a_k, p.direction().unwrap()).abs() < 1e-14);
    }

    #[test]
    fn explicit_axis_rejects_parallel_vector() {
        let p = FourMomentum::new(1.0, [0.0, 0.0, 2.0]).unwrap();
        let g = GaugeChoice::Explicit([0.0, 0.0, 5.0]);
        assert!(matches!(g.resolve_single(&p), Err(Error::DegenerateGauge)));
        let ok = GaugeChoice::Explicit([1.0, 0.0, 0.3]).resolve_single(&p).unwrap();
        assert!((ok[2]).abs() < 1e-15);
        assert!((norm(ok) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn pair_gauge_needs_a_pair() {
        let p = FourMomentum::new(1.0, [1.0, 0.0, 0.0]).unwrap();
        assert!(GaugeChoice::PairCommon.resolve_single(&p).is_err());
    }
}
