//! Correlation functions of the two-boson scalar states, each available
//! through two independent routes: a closed-form expression in momentum
//! invariants and a brute-force expectation value in the coefficient model.
//!
//! The closed-form polarization correlators are derived in the pair-common
//! gauge (both particles share the transverse axis normal to the plane of
//! their momenta); the oracle runs in any gauge.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fp;
use crate::gauge::GaugeChoice;
use crate::kinematics::FourMomentum;
use crate::linalg::{cross, dot, norm};
use crate::observables::{
    helicity_observable, polarization_observable_with_axis, OneSidedObservable, Side,
};
use crate::states::{validate_pair, TwoBosonState};
use crate::tol;

/// Which scalar state a correlation refers to.
#[derive(Debug, Clone, PartialEq)]
pub enum StateSpec {
    Psi,
    Phi,
    Xi,
    Chi { alpha: Complex64, beta: Complex64 },
}

/// Which measurement pair a correlation refers to.
#[derive(Debug, Clone, PartialEq)]
pub enum MeasurementSpec {
    /// Helicity of each particle.
    Helicity,
    /// Linear polarization at angles `theta` (k side) and `theta_tilde`
    /// (p side).
    Polarization { theta: f64, theta_tilde: f64 },
    /// Spin components along unit directions `a` (k side) and `b` (p side);
    /// closed form only, and only for the psi state.
    Spin { a: [f64; 3], b: [f64; 3] },
}

/// A fully specified correlation evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationRequest {
    pub state: StateSpec,
    pub k: FourMomentum,
    pub p: FourMomentum,
    pub measurement: MeasurementSpec,
    pub gauge: GaugeChoice,
}

/// Which route(s) to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    Oracle,
    Both,
}

/// Evaluated correlation value(s).
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationResult {
    pub closed: Option<f64>,
    pub oracle: Option<f64>,
}

impl CorrelationResult {
    /// The evaluated value, preferring the closed form when both ran.
    pub fn value(&self) -> f64 {
        self.closed.or(self.oracle).unwrap_or(f64::NAN)
    }

    /// `closed - oracle` when both routes ran.
    pub fn residual(&self) -> Option<f64> {
        match (self.closed, self.oracle) {
            (Some(c), Some(o)) => Some(c - o),
            _ => None,
        }
    }
}

/// Brute-force expectation `<state| B A |state> / <state|state>` for a
/// k-side observable `A` and a p-side observable `B` acting on the
/// coefficient array.
pub fn oracle_expectation(
    state: &TwoBosonState,
    a: &OneSidedObservable,
    b: &OneSidedObservable,
) -> Result<f64> {
    if a.side() != Side::K || b.side() != Side::P {
        return Err(Error::ObservableSides);
    }
    let c = state.coeffs();
    let after_a = crate::observables::apply_k_side(a.matrix(), c);
    let after_both = crate::observables::apply_p_side(b.matrix(), &after_a);
    let mut numerator = Complex64::new(0.0, 0.0);
    let mut denominator = 0.0f64;
    for lam in 0..3 {
        for lam2 in 0..3 {
            numerator += c[lam][lam2].conj() * after_both[lam][lam2];
            denominator += c[lam][lam2].norm_sqr();
        }
    }
    if denominator == 0.0 {
        return Err(Error::ZeroState);
    }
    let ratio = numerator / denominator;
    if fp::abs(ratio.im) > tol::IMAGINARY_RESIDUE {
        return Err(Error::ImaginaryResidue { residual: ratio.im });
    }
    Ok(ratio.re)
}

struct PairInvariants {
    kp: f64,
    m: f64,
    d: f64,
    kmag: f64,
    pmag: f64,
    cross_sq: f64,
}

fn invariants(k: &FourMomentum, p: &FourMomentum) -> Result<PairInvariants> {
    validate_pair(k, p)?;
    let kv = k.spatial();
    let pv = p.spatial();
    let kmag = k.momentum_magnitude();
    let pmag = p.momentum_magnitude();
    if kmag == 0.0 || pmag == 0.0 {
        return Err(Error::RestFrameMomentum);
    }
    let c = cross(kv, pv);
    Ok(PairInvariants {
        kp: k.dot(p),
        m: k.mass(),
        d: dot(kv, pv),
        kmag,
        pmag,
        cross_sq: dot(c, c),
    })
}

/// Closed-form helicity correlation function of the given scalar state.
pub fn helicity_correlation_closed(
    state: &StateSpec,
    k: &FourMomentum,
    p: &FourMomentum,
) -> Result<f64> {
    let iv = invariants(k, p)?;
    let m2 = iv.m * iv.m;
    let m4 = m2 * m2;
    let q = iv.kp * iv.kp / m4;
    let cos_angle = iv.d / (iv.kmag * iv.pmag);
    let value = match state {
        StateSpec::Psi => -2.0 / (2.0 + q) * cos_angle,
        StateSpec::Phi => 0.0,
        StateSpec::Xi => {
            -2.0 * iv.kp * (iv.kp * iv.d - iv.cross_sq)
                / ((2.0 * iv.kp * iv.kp + m4) * iv.kmag * iv.pmag)
        }
        StateSpec::Chi { alpha, beta } => {
            // Matrix elements per 4 k0 p0: <psi|..|psi> = -2 d/(KP),
            // <phi|..|phi> = 0, <phi|..|psi> = -(k x p)^2/(KP).
            let a2 = alpha.norm_sqr();
            let b2 = beta.norm_sqr();
            let re_ab = (alpha.conj() * beta).re;
            let numerator = a2 * iv.kp * iv.kp * (-2.0 * cos_angle)
                + 2.0 * re_ab * iv.kp * (-iv.cross_sq / (iv.kmag * iv.pmag));
            let denominator = a2 * iv.kp * iv.kp * (q + 2.0)
                + b2 * m4 * (q - 1.0) * (q - 1.0)
                + 2.0 * re_ab * iv.kp * iv.kp * (q - 1.0);
            numerator / denominator
        }
    };
    check_range(value)
}

/// Closed-form spin correlation function in the psi state for measurement
/// directions `a` (with the k particle) and `b` (with the p particle).
///
/// At `a = k_hat`, `b = p_hat` this reduces to the psi helicity correlation.
pub fn spin_correlation_psi(
    k: &FourMomentum,
    p: &FourMomentum,
    a: [f64; 3],
    b: [f64; 3],
) -> Result<f64> {
    for v in [a, b] {
        let n = norm(v);
        if fp::abs(n - 1.0) > 1e-10 {
            return Err(Error::NonUnitDirection { norm: n });
        }
    }
    let iv = invariants(k, p)?;
    let m = iv.m;
    let m2 = m * m;
    let q = iv.kp * iv.kp / (m2 * m2);
    let kv = k.spatial();
    let pv = p.spatial();
    let (k0, p0) = (k.energy(), p.energy());
    let bracket = -dot(a, b) * iv.kp - dot(a, pv) * dot(b, kv)
        - dot(a, kv) * dot(b, pv) * iv.d / ((m + k0) * (m + p0))
        + k0 * dot(a, pv) * dot(b, pv) / (m + p0)
        + p0 * dot(a, kv) * dot(b, kv) / (m + k0);
    check_range(2.0 / (m2 * (2.0 + q)) * bracket)
}

/// Linear-polarization overlap `eps_theta(k) . eps_theta_tilde(p)` of the
/// two polarization three-vectors in the pair-common gauge, as a function
/// of the cosine of the momentum opening angle.
fn eps_dot(theta: f64, theta_tilde: f64, cos_angle: f64) -> f64 {
    -(fp::sin(theta) * fp::sin(theta_tilde)
        + fp::cos(theta) * fp::cos(theta_tilde) * cos_angle)
}

/// Sums `T` over the four angle combinations of the polarization-difference
/// observables with signs (+, +, -, -).
fn four_term<T: Fn(f64, f64) -> f64>(theta: f64, theta_tilde: f64, t: T) -> f64 {
    let perp = core::f64::consts::FRAC_PI_2;
    t(theta, theta_tilde) + t(theta + perp, theta_tilde + perp)
        - t(theta, theta_tilde + perp)
        - t(theta + perp, theta_tilde)
}

/// Closed-form linear-polarization correlation function, assembled from the
/// projector matrix elements in the pair-common gauge. The general chi state
/// has no closed form here; use the oracle.
pub fn polarization_correlation_closed(
    state: &StateSpec,
    k: &FourMomentum,
    p: &FourMomentum,
    theta: f64,
    theta_tilde: f64,
) -> Result<f64> {
    let iv = invariants(k, p)?;
    let m2 = iv.m * iv.m;
    let m4 = m2 * m2;
    let q = iv.kp * iv.kp / m4;
    let cos_angle = iv.d / (iv.kmag * iv.pmag);
    // [p . eps_theta(k)] [k . eps_theta_tilde(p)] = cos(t) cos(t~) X^2/(KP),
    // with X^2 the squared cross product of the spatial momenta.
    let cross_over_kp = iv.cross_sq / (iv.kmag * iv.pmag);
    let value = match state {
        StateSpec::Psi => {
            let numerator = four_term(theta, theta_tilde, |t, tt| {
                let e = eps_dot(t, tt, cos_angle);
                e * e
            });
            numerator / (q + 2.0)
        }
        StateSpec::Phi => {
            let numerator = four_term(theta, theta_tilde, |t, tt| {
                let f = fp::cos(t) * fp::cos(tt) * cross_over_kp;
                f * f
            });
            numerator / (m4 * (q - 1.0) * (q - 1.0))
        }
        StateSpec::Xi => {
            let numerator = four_term(theta, theta_tilde, |t, tt| {
                let w = iv.kp * eps_dot(t, tt, cos_angle) + fp::cos(t) * fp::cos(tt) * cross_over_kp;
                w * w
            });
            numerator / (2.0 * iv.kp * iv.kp + m4)
        }
        StateSpec::Chi { .. } => return Err(Error::NoClosedForm),
    };
    check_range(value)
}

/// The equal-energy xi-state polarization correlation as a function of
/// `x = (|k|/m)^2` and the opening angle `alpha` (with `|p| = |k|`).
pub fn equal_energy_correlation(x: f64, alpha: f64, theta: f64, theta_tilde: f64) -> Result<f64> {
    check_equal_energy_domain(x, alpha)?;
    let ca = fp::cos(alpha);
    let scale = x + 1.0 - x * ca;
    let cc = fp::cos(2.0 * theta) * fp::cos(2.0 * theta_tilde);
    let ss = fp::sin(2.0 * theta) * fp::sin(2.0 * theta_tilde);
    let numerator = (2.0 * x * (x + 1.0) * (ca - 1.0) * (ca - 1.0) + ca * ca + 1.0) * cc
        + 2.0 * scale * (-x + x * ca + ca) * ss;
    check_range(numerator / (2.0 * scale * scale + 1.0))
}

/// Equal-energy reduction of the psi polarization correlation.
pub fn equal_energy_correlation_psi(
    x: f64,
    alpha: f64,
    theta: f64,
    theta_tilde: f64,
) -> Result<f64> {
    check_equal_energy_domain(x, alpha)?;
    let ca = fp::cos(alpha);
    let q_sqrt = 1.0 + x * (1.0 - ca);
    let cc = fp::cos(2.0 * theta) * fp::cos(2.0 * theta_tilde);
    let ss = fp::sin(2.0 * theta) * fp::sin(2.0 * theta_tilde);
    check_range(((1.0 + ca * ca) * cc + 2.0 * ca * ss) / (2.0 + q_sqrt * q_sqrt))
}

/// Equal-energy reduction of the phi polarization correlation, written with
/// the `x^2` factor cancelled so the nonrelativistic endpoint is regular.
pub fn equal_energy_correlation_phi(
    x: f64,
    alpha: f64,
    theta: f64,
    theta_tilde: f64,
) -> Result<f64> {
    check_equal_energy_domain(x, alpha)?;
    let ca = fp::cos(alpha);
    let sa2 = 1.0 - ca * ca;
    let cc = fp::cos(2.0 * theta) * fp::cos(2.0 * theta_tilde);
    let denom = (1.0 - ca) * (2.0 + x * (1.0 - ca));
    check_range(sa2 * sa2 * cc / (denom * denom))
}

fn check_equal_energy_domain(x: f64, alpha: f64) -> Result<()> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::InvalidParameter("x must be a finite value >= 0"));
    }
    if !(alpha > 0.0 && alpha <= core::f64::consts::PI) {
        return Err(Error::InvalidParameter(
            "opening angle must lie in (0, pi]; alpha = 0 means coincident momenta",
        ));
    }
    Ok(())
}

/// Center-of-mass polarization correlations have the separable form
/// `coefficient(x) * cos 2(theta + theta_tilde)`; this returns the
/// coefficient.
pub fn cm_polarization_coefficient(state: &StateSpec, x: f64) -> Result<f64> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::InvalidParameter("x must be a finite value >= 0"));
    }
    let a = 2.0 * x + 1.0;
    let a2 = a * a;
    Ok(match state {
        StateSpec::Psi => 2.0 / (2.0 + a2),
        StateSpec::Phi => 0.0,
        StateSpec::Xi => 2.0 * a2 / (2.0 * a2 + 1.0),
        StateSpec::Chi { alpha, beta } => {
            let am = alpha.norm_sqr();
            let bm = beta.norm_sqr();
            let re_ab = (alpha.conj() * beta).re;
            let denominator = am * a2 * (a2 + 2.0)
                + bm * (a2 - 1.0) * (a2 - 1.0)
                + 2.0 * re_ab * a2 * (a2 - 1.0);
            2.0 * am * a2 / denominator
        }
    })
}

/// Center-of-mass polarization correlation `coefficient(x) * cos 2(theta +
/// theta_tilde)`.
pub fn cm_polarization_correlation(
    state: &StateSpec,
    x: f64,
    theta: f64,
    theta_tilde: f64,
) -> Result<f64> {
    let coefficient = cm_polarization_coefficient(state, x)?;
    check_range(coefficient * fp::cos(2.0 * (theta + theta_tilde)))
}

/// Builds the requested scalar state.
pub fn build_state(
    spec: &StateSpec,
    k: &FourMomentum,
    p: &FourMomentum,
    gauge: &GaugeChoice,
) -> Result<TwoBosonState> {
    match spec {
        StateSpec::Psi => TwoBosonState::psi(k, p, gauge),
        StateSpec::Phi => TwoBosonState::phi(k, p, gauge),
        StateSpec::Xi => TwoBosonState::xi(k, p, gauge),
        StateSpec::Chi { alpha, beta } => TwoBosonState::chi(k, p, *alpha, *beta, gauge),
    }
}

/// Evaluates a correlation request through the chosen route(s).
pub fn evaluate(request: &CorrelationRequest, method: Method) -> Result<CorrelationResult> {
    let closed = match method {
        Method::ClosedForm | Method::Both => Some(evaluate_closed(request)?),
        Method::Oracle => None,
    };
    let oracle = match method {
        Method::Oracle | Method::Both => Some(evaluate_oracle(request)?),
        Method::ClosedForm => None,
    };
    Ok(CorrelationResult { closed, oracle })
}

fn evaluate_closed(request: &CorrelationRequest) -> Result<f64> {
    match &request.measurement {
        MeasurementSpec::Helicity => {
            helicity_correlation_closed(&request.state, &request.k, &request.p)
        }
        MeasurementSpec::Polarization { theta, theta_tilde } => {
            if !matches!(request.gauge, GaugeChoice::PairCommon) {
                return Err(Error::InvalidParameter(
                    "closed-form polarization correlators hold in the pair-common gauge; \
                     pass that gauge or use the oracle",
                ));
            }
            polarization_correlation_closed(
                &request.state,
                &request.k,
                &request.p,
                *theta,
                *theta_tilde,
            )
        }
        MeasurementSpec::Spin { a, b } => {
            if !matches!(request.state, StateSpec::Psi) {
                return Err(Error::NoClosedForm);
            }
            spin_correlation_psi(&request.k, &request.p, *a, *b)
        }
    }
}

fn evaluate_oracle(request: &CorrelationRequest) -> Result<f64> {
    match &request.measurement {
        MeasurementSpec::Helicity => {
            let state = build_state(&request.state, &request.k, &request.p, &request.gauge)?;
            let value = oracle_expectation(
                &state,
                &helicity_observable(Side::K),
                &helicity_observable(Side::P),
            )?;
            check_range(value)
        }
        MeasurementSpec::Polarization { theta, theta_tilde } => {
            let state = build_state(&request.state, &request.k, &request.p, &request.gauge)?;
            let (axis_k, axis_p) = state.axes();
            let s_k = polarization_observable_with_axis(Side::K, *theta, &request.k, axis_k)?;
            let s_p =
                polarization_observable_with_axis(Side::P, *theta_tilde, &request.p, axis_p)?;
            let value = oracle_expectation(&state, &s_k, &s_p)?;
            check_range(value)
        }
        MeasurementSpec::Spin { .. } => Err(Error::InvalidParameter(
            "spin correlations are closed-form only",
        )),
    }
}

fn check_range(value: f64) -> Result<f64> {
    if fp::abs(value) > 1.0 + tol::CORRELATION_RANGE || !value.is_finite() {
        return Err(Error::OutOfRange { value });
    }
    Ok(value)
}
