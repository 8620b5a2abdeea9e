//! CHSH-inequality evaluation for the polarization correlators: left-side
//! assembly, angle optimization, and the momentum threshold above which the
//! inequality is violated.

use crate::correlators::{
    cm_polarization_coefficient, evaluate, CorrelationRequest, CorrelationResult,
    MeasurementSpec, Method, StateSpec,
};
use crate::error::{Error, Result};
use crate::fp;
use crate::gauge::GaugeChoice;
use crate::kinematics::FourMomentum;

/// The standard angle quadruple `(0, pi/8, 6pi/8, 3pi/8)` that maximizes the
/// four-cosine combination at `2 sqrt 2`.
pub const CANONICAL_ANGLES: [f64; 4] = [
    0.0,
    core::f64::consts::PI / 8.0,
    6.0 * core::f64::consts::PI / 8.0,
    3.0 * core::f64::consts::PI / 8.0,
];

/// Momentum configuration of a CHSH evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum MomentumConfig {
    /// Center-of-mass pair parameterized by `x = (|k|/m)^2`.
    CenterOfMass { x: f64 },
    /// Arbitrary distinct momenta; correlators run closed-form where
    /// available and through the oracle otherwise.
    General { k: FourMomentum, p: FourMomentum },
}

/// A CHSH evaluation request: four polarization angles `(a, b, c, d)`, a
/// scalar state, and a momentum configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct ChshSetting {
    pub angles: [f64; 4],
    pub state: StateSpec,
    pub config: MomentumConfig,
}

/// Outcome of a CHSH evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct ChshReport {
    pub left_side: f64,
    pub violated: bool,
    pub margin: f64,
}

/// `|cos2(a+b) - cos2(a+d)| + |cos2(c+b) + cos2(c+d)|`, the angular factor
/// of the center-of-mass left side. Its supremum is `2 sqrt 2`.
pub fn four_cosine_combination(angles: [f64; 4]) -> f64 {
    let [a, b, c, d] = angles;
    fp::abs(fp::cos(2.0 * (a + b)) - fp::cos(2.0 * (a + d)))
        + fp::abs(fp::cos(2.0 * (c + b)) + fp::cos(2.0 * (c + d)))
}

/// The CHSH left side `|C_ab - C_ad| + |C_cb + C_cd|` for the polarization
/// correlators of the given setting.
pub fn chsh_left_side(setting: &ChshSetting) -> Result<f64> {
    let [a, b, c, d] = setting.angles;
    if !setting.angles.iter().all(|v| v.is_finite()) {
        return Err(Error::InvalidParameter("angles must be finite"));
    }
    match &setting.config {
        MomentumConfig::CenterOfMass { x } => {
            let coefficient = cm_polarization_coefficient(&setting.state, *x)?;
            Ok(coefficient * four_cosine_combination(setting.angles))
        }
        MomentumConfig::General { k, p } => {
            let correlate = |theta: f64, theta_tilde: f64| -> Result<f64> {
                let method = match setting.state {
                    StateSpec::Chi { .. } => Method::Oracle,
                    _ => Method::ClosedForm,
                };
                let result: CorrelationResult = evaluate(
                    &CorrelationRequest {
                        state: setting.state.clone(),
                        k: *k,
                        p: *p,
                        measurement: MeasurementSpec::Polarization { theta, theta_tilde },
                        gauge: GaugeChoice::PairCommon,
                    },
                    method,
                )?;
                Ok(result.value())
            };
            let c_ab = correlate(a, b)?;
            let c_ad = correlate(a, d)?;
            let c_cb = correlate(c, b)?;
            let c_cd = correlate(c, d)?;
            Ok(fp::abs(c_ab - c_ad) + fp::abs(c_cb + c_cd))
        }
    }
}

/// Evaluates the left side and compares against the local-realistic bound 2.
pub fn chsh_report(setting: &ChshSetting) -> Result<ChshReport> {
    let left_side = chsh_left_side(setting)?;
    Ok(ChshReport {
        left_side,
        violated: left_side > 2.0,
        margin: left_side - 2.0,
    })
}

/// The closed-form threshold `x0 = -1/2 + 1/(2 sqrt(2 sqrt 2 - 2))` above
/// which the center-of-mass xi family violates the inequality at the
/// canonical angles.
pub fn chsh_threshold_closed_form() -> f64 {
    -0.5 + 1.0 / (2.0 * fp::sqrt(2.0 * core::f64::consts::SQRT_2 - 2.0))
}

/// Bisection root of `left_side(x) = 2` on `[0, 1]` for the center-of-mass
/// xi family at the canonical angles. The bracket is guaranteed: the left
/// side is below 2 at `x = 0` and above it at `x = 1`.
pub fn chsh_threshold() -> f64 {
    let left = |x: f64| {
        let coefficient = cm_polarization_coefficient(&StateSpec::Xi, x)
            .expect("coefficient is defined for x >= 0");
        coefficient * four_cosine_combination(CANONICAL_ANGLES)
    };
    bisect(|x| left(x) - 2.0, 0.0, 1.0, 1e-12, 60)
}

/// Plain bisection; returns the midpoint once the bracket is below `tol` or
/// the iteration cap is hit.
fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64, max_iter: usize) -> f64 {
    let mut f_lo = f(lo);
    for _ in 0..max_iter {
        if hi - lo < tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid);
        if (f_lo <= 0.0) == (f_mid <= 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Golden-section maximization of `f` on `[a, b]`.
fn golden_max<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, evals: usize) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..evals {
        if f1 > f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    if f1 > f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Grid search plus per-coordinate golden-section refinement of the CHSH
/// left side over the four angles, for the center-of-mass family.
///
/// The left side factorizes there into `coefficient(x)` times the
/// four-cosine combination, which is invariant under a common shift of
/// `(a, c)` against `(b, d)`; the first angle is therefore pinned to zero
/// and only three angles are searched, on a pi-periodic grid of step pi/64.
pub fn optimize_angles(x: f64, state: &StateSpec) -> Result<([f64; 4], f64)> {
    let coefficient = cm_polarization_coefficient(state, x)?;
    let step = core::f64::consts::PI / 64.0;
    let g = |b: f64, c: f64, d: f64| four_cosine_combination([0.0, b, c, d]);

    let mut best = (0.0f64, 0.0f64, 0.0f64);
    let mut best_value = f64::NEG_INFINITY;
    for ib in 0..64 {
        let b = ib as f64 * step;
        for ic in 0..64 {
            let c = ic as f64 * step;
            for id in 0..64 {
                let d = id as f64 * step;
                let value = g(b, c, d);
                if value > best_value {
                    best_value = value;
                    best = (b, c, d);
                }
            }
        }
    }

    // Coordinate-wise refinement around the winning grid node.
    let (mut b, mut c, mut d) = best;
    for _ in 0..8 {
        let (nb, _) = golden_max(|t| g(t, c, d), b - step, b + step, 48);
        b = nb;
        let (nc, _) = golden_max(|t| g(b, t, d), c - step, c + step, 48);
        c = nc;
        let (nd, _) = golden_max(|t| g(b, c, t), d - step, d + step, 48);
        d = nd;
    }
    let refined = g(b, c, d).max(best_value);
    Ok(([0.0, b, c, d], coefficient * refined))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQRT_2: f64 = core::f64::consts::SQRT_2;

    #[test]
    fn canonical_angles_maximize_the_four_cosine_combination() {
        assert!((four_cosine_combination(CANONICAL_ANGLES) - 2.0 * SQRT_2).abs() < 1e-14);
    }

    #[test]
    fn left_side_at_rest_is_four_sqrt2_over_3() {
        let setting = ChshSetting {
            angles: CANONICAL_ANGLES,
            state: StateSpec::Xi,
            config: MomentumConfig::CenterOfMass { x: 0.0 },
        };
        let left = chsh_left_side(&setting).unwrap();
        assert!((left - 4.0 * SQRT_2 / 3.0).abs() < 1e-14);
        let report = chsh_report(&setting).unwrap();
        assert!(!report.violated);
        assert!(report.margin < 0.0);
    }

    #[test]
    fn left_side_approaches_tsirelson_for_large_x() {
        let setting = ChshSetting {
            angles: CANONICAL_ANGLES,
            state: StateSpec::Xi,
            config: MomentumConfig::CenterOfMass { x: 1e8 },
        };
        let left = chsh_left_side(&setting).unwrap();
        assert!((left - 2.0 * SQRT_2).abs() < 1e-7);
    }

    #[test]
    fn threshold_bisection_matches_closed_form() {
        let root = chsh_threshold();
        let exact = chsh_threshold_closed_form();
        assert!((root - exact).abs() < 1e-9);
        assert!((exact - 0.049).abs() < 5e-4);
        // Root bracketing.
        let left = |x: f64| {
            cm_polarization_coefficient(&StateSpec::Xi, x).unwrap()
                * four_cosine_combination(CANONICAL_ANGLES)
        };
        assert!(left(exact + 1e-6) > 2.0);
        assert!(left(exact - 1e-6) < 2.0);
    }

    #[test]
    fn optimizer_reaches_the_factorized_supremum() {
        for (state, x) in [
            (StateSpec::Xi, 0.7),
            (StateSpec::Xi, 0.0),
            (StateSpec::Psi, 0.0),
        ] {
            let coefficient = cm_polarization_coefficient(&state, x).unwrap();
            let (_, value) = optimize_angles(x, &state).unwrap();
            assert!(
                (value - coefficient * 2.0 * SQRT_2).abs() < 1e-6,
                "state {state:?} x {x}: {value}"
            );
            // The canonical angles sit on the search grid, so the optimum
            // can never fall below their value.
            let canonical = coefficient * four_cosine_combination(CANONICAL_ANGLES);
            assert!(value >= canonical - 1e-9);
        }
    }

    #[test]
    fn general_config_agrees_with_cm_parameterization() {
        let x = 0.9;
        let (k, p) = FourMomentum::cm_pair(x, 1.0).unwrap();
        let angles = [0.3, 1.1, 2.0, 0.7];
        let general = chsh_left_side(&ChshSetting {
            angles,
            state: StateSpec::Xi,
            config: MomentumConfig::General { k, p },
        })
        .unwrap();
        let parameterized = chsh_left_side(&ChshSetting {
            angles,
            state: StateSpec::Xi,
            config: MomentumConfig::CenterOfMass { x },
        })
        .unwrap();
        assert!((general - parameterized).abs() < 1e-12);
    }

    #[test]
    fn psi_family_left_side_formula() {
        for x in [0.0, 0.5, 2.0, 10.0] {
            let setting = ChshSetting {
                angles: CANONICAL_ANGLES,
                state: StateSpec::Psi,
                config: MomentumConfig::CenterOfMass { x },
            };
            let left = chsh_left_side(&setting).unwrap();
            let a2 = (2.0 * x + 1.0) * (2.0 * x + 1.0);
            assert!((left - 2.0 * SQRT_2 * 2.0 / (2.0 + a2)).abs() < 1e-12);
        }
    }
}
