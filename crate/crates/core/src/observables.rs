//! Helicity and linear-polarization observables, each a 3x3 Hermitian matrix
//! acting on one particle's helicity index of a two-boson state.
//!
//! The full two-slot operators of the symmetrized model collapse, for
//! distinct momenta, to a single matrix on one index of the coefficient
//! array (the cross-momentum pieces vanish with the momentum-diagonal
//! normalization); the collapse is checked against an explicit two-slot
//! construction in the integration tests.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gauge::GaugeChoice;
use crate::kinematics::FourMomentum;
use crate::linalg::{cmat3_hermiticity_residual, CMat3, ZERO_C};
use crate::states::{make_polarization_with_axis, PolarizationKind, TwoBosonState};
use crate::tol;

/// Which particle of the pair an observable acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    K,
    P,
}

/// What an observable measures.
#[derive(Debug, Clone, PartialEq)]
pub enum ObservableLabel {
    Helicity,
    Polarization { theta: f64 },
}

/// A Hermitian 3x3 matrix acting on one side's helicity index.
#[derive(Debug, Clone, PartialEq)]
pub struct OneSidedObservable {
    side: Side,
    matrix: CMat3,
    label: ObservableLabel,
}

impl OneSidedObservable {
    pub fn side(&self) -> Side {
        self.side
    }

    pub fn label(&self) -> &ObservableLabel {
        &self.label
    }

    pub fn matrix(&self) -> &CMat3 {
        &self.matrix
    }

    pub fn hermiticity_residual(&self) -> f64 {
        cmat3_hermiticity_residual(&self.matrix)
    }
}

/// The helicity observable `diag(+1, 0, -1)` on the chosen side.
pub fn helicity_observable(side: Side) -> OneSidedObservable {
    let mut matrix = [[ZERO_C; 3]; 3];
    matrix[0][0] = Complex64::new(1.0, 0.0);
    matrix[2][2] = Complex64::new(-1.0, 0.0);
    OneSidedObservable {
        side,
        matrix,
        label: ObservableLabel::Helicity,
    }
}

/// Rank-one projector onto the linear polarization at angle `theta`,
/// `f f^dag` with `f` the helicity decomposition of the polarization vector.
pub fn polarization_projector(
    theta: f64,
    momentum: &FourMomentum,
    gauge: &GaugeChoice,
) -> Result<CMat3> {
    let axis = gauge.resolve_single(momentum)?;
    polarization_projector_with_axis(theta, momentum, axis)
}

pub(crate) fn polarization_projector_with_axis(
    theta: f64,
    momentum: &FourMomentum,
    axis: [f64; 3],
) -> Result<CMat3> {
    let eps = make_polarization_with_axis(momentum, PolarizationKind::Linear { theta }, axis)?;
    let f = eps.helicity_coeffs()?;
    let mut matrix = [[ZERO_C; 3]; 3];
    for (lam, row) in matrix.iter_mut().enumerate() {
        for (mu, entry) in row.iter_mut().enumerate() {
            *entry = f[lam] * f[mu].conj();
        }
    }
    Ok(matrix)
}

/// The polarization difference observable `S(theta) = Pi(theta) -
/// Pi(theta + pi/2)`, with eigenvalues {+1, -1, 0}.
pub fn polarization_observable(
    side: Side,
    theta: f64,
    momentum: &FourMomentum,
    gauge: &GaugeChoice,
) -> Result<OneSidedObservable> {
    let axis = gauge.resolve_single(momentum)?;
    polarization_observable_with_axis(side, theta, momentum, axis)
}

pub(crate) fn polarization_observable_with_axis(
    side: Side,
    theta: f64,
    momentum: &FourMomentum,
    axis: [f64; 3],
) -> Result<OneSidedObservable> {
    let plus = polarization_projector_with_axis(theta, momentum, axis)?;
    let minus =
        polarization_projector_with_axis(theta + core::f64::consts::FRAC_PI_2, momentum, axis)?;
    let mut matrix = [[ZERO_C; 3]; 3];
    for (lam, row) in matrix.iter_mut().enumerate() {
        for (mu, entry) in row.iter_mut().enumerate() {
            *entry = plus[lam][mu] - minus[lam][mu];
        }
    }
    let obs = OneSidedObservable {
        side,
        matrix,
        label: ObservableLabel::Polarization { theta },
    };
    if obs.hermiticity_residual() > tol::HERMITIAN {
        return Err(Error::ImaginaryResidue {
            residual: obs.hermiticity_residual(),
        });
    }
    Ok(obs)
}

impl TwoBosonState {
    /// Applies a one-sided observable, returning the transformed coefficient
    /// array (which may be zero) without touching the state.
    pub fn apply(&self, obs: &OneSidedObservable) -> [[Complex64; 3]; 3] {
        match obs.side() {
            Side::K => apply_k_side(obs.matrix(), self.coeffs()),
            Side::P => apply_p_side(obs.matrix(), self.coeffs()),
        }
    }
}

/// Matrix action on the first (k-side) index: `c'[l][l'] = sum_m A[l][m] c[m][l']`.
pub(crate) fn apply_k_side(a: &CMat3, c: &[[Complex64; 3]; 3]) -> [[Complex64; 3]; 3] {
    let mut out = [[ZERO_C; 3]; 3];
    for (lam, row) in out.iter_mut().enumerate() {
        for (lam2, entry) in row.iter_mut().enumerate() {
            for mu in 0..3 {
                *entry += a[lam][mu] * c[mu][lam2];
            }
        }
    }
    out
}

/// Matrix action on the second (p-side) index: `c'[l][l'] = sum_m B[l'][m] c[l][m]`.
pub(crate) fn apply_p_side(b: &CMat3, c: &[[Complex64; 3]; 3]) -> [[Complex64; 3]; 3] {
    let mut out = [[ZERO_C; 3]; 3];
    for (lam, row) in out.iter_mut().enumerate() {
        for (lam2, entry) in row.iter_mut().enumerate() {
            for mu in 0..3 {
                *entry += b[lam2][mu] * c[lam][mu];
            }
        }
    }
    out
}

/// `S` for the physical polarization direction defined by `theta` relative
/// to `physical_axis`, but expressed over the helicity basis built with
/// `gauge_axis`. With equal axes this reduces to the canonical form.
pub(crate) fn cross_gauge_polarization_matrix(
    theta: f64,
    momentum: &FourMomentum,
    physical_axis: [f64; 3],
    gauge_axis: [f64; 3],
) -> Result<CMat3> {
    let e = crate::spin1::AmplitudeMatrix::helicity_with_axis(momentum, gauge_axis)?;
    let mut s = [[ZERO_C; 3]; 3];
    for (angle, sign) in [(theta, 1.0), (theta + core::f64::consts::FRAC_PI_2, -1.0)] {
        let eps = make_polarization_with_axis(
            momentum,
            PolarizationKind::Linear { theta: angle },
            physical_axis,
        )?;
        let mut f = [ZERO_C; 3];
        for (lam, entry) in f.iter_mut().enumerate() {
            *entry = crate::linalg::c_minkowski4(*eps.components(), e.column(lam));
        }
        for (lam, row) in s.iter_mut().enumerate() {
            for (mu, entry) in row.iter_mut().enumerate() {
                *entry += f[lam] * f[mu].conj() * sign;
            }
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{cmat3_max_abs_diff, cmat3_mul};

    const PI: f64 = core::f64::consts::PI;

    fn test_momentum() -> FourMomentum {
        FourMomentum::new(1.0, [0.3, -0.8, 1.2]).unwrap()
    }

    #[test]
    fn helicity_observable_is_diagonal() {
        let h = helicity_observable(Side::K);
        let m = h.matrix();
        assert!((m[0][0].re - 1.0).abs() < 1e-15);
        assert!(m[1][1].norm() < 1e-15);
        assert!((m[2][2].re + 1.0).abs() < 1e-15);
        assert!(h.hermiticity_residual() == 0.0);
    }

    #[test]
    fn helicity_action_on_pure_rows() {
        let k = FourMomentum::new(1.0, [1.0, 0.0, 0.0]).unwrap();
        let p = FourMomentum::new(1.0, [0.0, 1.0, 0.0]).unwrap();
        let mut coeffs = [[ZERO_C; 3]; 3];
        coeffs[0][1] = Complex64::new(2.0, 1.0);
        let state =
            TwoBosonState::from_coeffs(&k, &p, coeffs, &GaugeChoice::PairCommon).unwrap();
        let out = state.apply(&helicity_observable(Side::K));
        assert_eq!(out[0][1], coeffs[0][1]);
        // A state living entirely in the helicity-0 row is annihilated.
        let mut zero_row = [[ZERO_C; 3]; 3];
        zero_row[1][0] = Complex64::new(1.0, 0.0);
        zero_row[1][2] = Complex64::new(0.0, -3.0);
        let state =
            TwoBosonState::from_coeffs(&k, &p, zero_row, &GaugeChoice::PairCommon).unwrap();
        let out = state.apply(&helicity_observable(Side::K));
        for row in &out {
            for entry in row {
                assert!(entry.norm() < 1e-15);
            }
        }
    }

    #[test]
    fn projector_is_rank_one_idempotent_trace_one() {
        let p = test_momentum();
        let pi = polarization_projector(0.7, &p, &GaugeChoice::Spherical).unwrap();
        let sq = cmat3_mul(&pi, &pi);
        assert!(cmat3_max_abs_diff(&sq, &pi) < 1e-13);
        let trace = pi[0][0] + pi[1][1] + pi[2][2];
        assert!((trace - Complex64::new(1.0, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn orthogonal_projectors_annihilate_and_span_transverse_plane() {
        let p = test_momentum();
        let theta = 1.13;
        let a = polarization_projector(theta, &p, &GaugeChoice::Spherical).unwrap();
        let b = polarization_projector(theta + PI / 2.0, &p, &GaugeChoice::Spherical).unwrap();
        let product = cmat3_mul(&a, &b);
        for row in &product {
            for entry in row {
                assert!(entry.norm() < 1e-13);
            }
        }
        let mut sum = [[ZERO_C; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                sum[i][j] = a[i][j] + b[i][j];
            }
        }
        // Pi(theta) + Pi(theta + pi/2) = diag(1, 0, 1).
        let mut expected = [[ZERO_C; 3]; 3];
        expected[0][0] = Complex64::new(1.0, 0.0);
        expected[2][2] = Complex64::new(1.0, 0.0);
        assert!(cmat3_max_abs_diff(&sum, &expected) < 1e-13);
    }

    #[test]
    fn polarization_observable_algebra() {
        let p = test_momentum();
        let gauge = GaugeChoice::Spherical;
        let theta = 0.37;
        let s = polarization_observable(Side::K, theta, &p, &gauge).unwrap();
        // S(theta)^2 equals the transverse projector Pi(theta) + Pi(theta_perp).
        let sq = cmat3_mul(s.matrix(), s.matrix());
        let a = polarization_projector(theta, &p, &gauge).unwrap();
        let b = polarization_projector(theta + PI / 2.0, &p, &gauge).unwrap();
        let mut transverse = [[ZERO_C; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                transverse[i][j] = a[i][j] + b[i][j];
            }
        }
        assert!(cmat3_max_abs_diff(&sq, &transverse) < 1e-13);
        // Quarter-turn flips the sign, half-turn is a symmetry.
        let quarter = polarization_observable(Side::K, theta + PI / 2.0, &p, &gauge).unwrap();
        let half = polarization_observable(Side::K, theta + PI, &p, &gauge).unwrap();
        let mut negated = *s.matrix();
        for row in &mut negated {
            for entry in row {
                *entry = -*entry;
            }
        }
        assert!(cmat3_max_abs_diff(quarter.matrix(), &negated) < 1e-13);
        assert!(cmat3_max_abs_diff(half.matrix(), s.matrix()) < 1e-13);
        assert!(s.hermiticity_residual() < 1e-15);
    }

    #[test]
    fn explicit_entries_of_s() {
        // S(theta) has the transverse off-diagonal form with phase 2 theta.
        let p = FourMomentum::new(1.0, [0.0, 0.0, 1.0]).unwrap();
        let theta = 0.81;
        let s = polarization_observable(Side::P, theta, &p, &GaugeChoice::Spherical).unwrap();
        let m = s.matrix();
        assert!((m[0][2] - Complex64::from_polar(1.0, 2.0 * theta)).norm() < 1e-14);
        assert!((m[2][0] - Complex64::from_polar(1.0, -2.0 * theta)).norm() < 1e-14);
        for i in 0..3 {
            assert!(m[i][i].norm() < 1e-14);
            assert!(m[1][i].norm() < 1e-14);
            assert!(m[i][1].norm() < 1e-14);
        }
    }

    #[test]
    fn k_side_and_p_side_actions_commute() {
        let k = FourMomentum::new(1.0, [0.5, 0.2, -1.0]).unwrap();
        let p = FourMomentum::new(1.0, [-0.3, 0.9, 0.1]).unwrap();
        let gauge = GaugeChoice::PairCommon;
        let state = TwoBosonState::xi(&k, &p, &gauge).unwrap();
        let (a_k, a_p) = state.axes();
        let s_k = polarization_observable_with_axis(Side::K, 0.9, &k, a_k).unwrap();
        let s_p = polarization_observable_with_axis(Side::P, 1.7, &p, a_p).unwrap();
        let kp_first = apply_p_side(s_p.matrix(), &apply_k_side(s_k.matrix(), state.coeffs()));
        let pk_first = apply_k_side(s_k.matrix(), &apply_p_side(s_p.matrix(), state.coeffs()));
        for i in 0..3 {
            for j in 0..3 {
                assert!((kp_first[i][j] - pk_first[i][j]).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn gauge_rotation_shifts_the_polarization_angle() {
        let p = test_momentum();
        let n = p.direction().unwrap();
        let a = crate::kinematics::spherical_transverse_axis(n);
        let delta = 0.61;
        let rotated = crate::kinematics::rotate_transverse_axis(a, n, delta);
        let theta = 1.9;
        // Rotating the gauge axis by delta relabels the same physical
        // direction as theta - delta: the vectors coincide componentwise.
        let before = {
            let eps = make_polarization_with_axis(&p, PolarizationKind::Linear { theta }, a)
                .unwrap();
            eps.components().to_owned()
        };
        let after = {
            let eps = make_polarization_with_axis(
                &p,
                PolarizationKind::Linear {
                    theta: theta - delta,
                },
                rotated,
            )
            .unwrap();
            eps.components().to_owned()
        };
        for i in 0..4 {
            assert!((before[i] - after[i]).norm() < 1e-13);
        }
        // Matrix form of the law: the observable anchored to the physical
        // direction (theta in the original gauge), written in the rotated
        // helicity basis, equals S(theta - delta) built in that basis.
        let s_physical = cross_gauge_polarization_matrix(theta, &p, a, rotated).unwrap();
        let s_shifted =
            polarization_observable_with_axis(Side::K, theta - delta, &p, rotated).unwrap();
        assert!(cmat3_max_abs_diff(&s_physical, s_shifted.matrix()) < 1e-12);
    }
}
