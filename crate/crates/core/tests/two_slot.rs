//! Collapse check: the one-index observable matrices of the coefficient
//! model must reproduce the full two-slot operators (projector sandwich and
//! helicity product) acting on explicitly symmetrized product states.
//!
//! The two-slot model keeps both tensor orderings of the pair as an
//! 18-dimensional space with the momentum-diagonal inner product; nothing
//! here reuses the collapsed application path it is checking.

use num_complex::Complex64;
use vbcorr_core::correlators::oracle_expectation;
use vbcorr_core::gauge::GaugeChoice;
use vbcorr_core::kinematics::FourMomentum;
use vbcorr_core::observables::{helicity_observable, polarization_observable, Side};
use vbcorr_core::states::{make_polarization, PolarizationKind, TwoBosonState};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const HELICITY: [f64; 3] = [1.0, 0.0, -1.0];

/// Coefficients over the 18 product kets: `[ordering][first][second]`,
/// ordering 0 = (k-particle, p-particle), ordering 1 = (p-particle,
/// k-particle).
type TwoSlot = [[[Complex64; 3]; 3]; 2];

fn symmetrize(c: &[[Complex64; 3]; 3]) -> TwoSlot {
    let mut out = [[[ZERO; 3]; 3]; 2];
    let s = core::f64::consts::FRAC_1_SQRT_2;
    for lam in 0..3 {
        for lam2 in 0..3 {
            out[0][lam][lam2] += c[lam][lam2] * s;
            out[1][lam2][lam] += c[lam][lam2] * s;
        }
    }
    out
}

/// `lambda_k (x) 1 + 1 (x) lambda_k`: the helicity operator of the
/// k-momentum particle annihilates p-momentum kets.
fn apply_helicity_k(state: &TwoSlot) -> TwoSlot {
    let mut out = [[[ZERO; 3]; 3]; 2];
    for i in 0..3 {
        for j in 0..3 {
            out[0][i][j] = state[0][i][j] * HELICITY[i];
            out[1][i][j] = state[1][i][j] * HELICITY[j];
        }
    }
    out
}

fn apply_helicity_p(state: &TwoSlot) -> TwoSlot {
    let mut out = [[[ZERO; 3]; 3]; 2];
    for i in 0..3 {
        for j in 0..3 {
            out[0][i][j] = state[0][i][j] * HELICITY[j];
            out[1][i][j] = state[1][i][j] * HELICITY[i];
        }
    }
    out
}

/// The two-slot projector `(|e><e| (x) 1 + 1 (x) |e><e|) / (2 k0)` onto the
/// polarization ket with helicity decomposition `f`, attached to the
/// k-momentum particle. Cross-momentum overlaps vanish for distinct momenta.
fn apply_projector_k(state: &TwoSlot, f: &[Complex64; 3]) -> TwoSlot {
    let mut out = [[[ZERO; 3]; 3]; 2];
    for i in 0..3 {
        for j in 0..3 {
            for mu in 0..3 {
                // <e|k,i> = conj(f_i) 2k0; the 1/(2k0) cancels it.
                out[0][mu][j] += f[mu] * f[i].conj() * state[0][i][j];
                out[1][j][mu] += f[mu] * f[i].conj() * state[1][j][i];
            }
        }
    }
    out
}

fn apply_projector_p(state: &TwoSlot, g: &[Complex64; 3]) -> TwoSlot {
    let mut out = [[[ZERO; 3]; 3]; 2];
    for i in 0..3 {
        for j in 0..3 {
            for mu in 0..3 {
                out[0][i][mu] += g[mu] * g[j].conj() * state[0][i][j];
                out[1][mu][i] += g[mu] * g[j].conj() * state[1][j][i];
            }
        }
    }
    out
}

fn add(a: &TwoSlot, b: &TwoSlot, sign: f64) -> TwoSlot {
    let mut out = *a;
    for t in 0..2 {
        for i in 0..3 {
            for j in 0..3 {
                out[t][i][j] += b[t][i][j] * sign;
            }
        }
    }
    out
}

/// Inner product with the momentum-diagonal Gram matrix `4 k0 p0` (volume
/// regulator set to one), cross-ordering overlaps zero.
fn overlap(a: &TwoSlot, b: &TwoSlot, k0p0: f64) -> Complex64 {
    let mut sum = ZERO;
    for t in 0..2 {
        for i in 0..3 {
            for j in 0..3 {
                sum += a[t][i][j].conj() * b[t][i][j];
            }
        }
    }
    sum * (4.0 * k0p0)
}

fn linear_coeffs(p: &FourMomentum, theta: f64, axis: [f64; 3]) -> [Complex64; 3] {
    make_polarization(p, PolarizationKind::Linear { theta }, &GaugeChoice::Explicit(axis))
        .unwrap()
        .helicity_coeffs()
        .unwrap()
}

#[test]
fn helicity_product_collapses_to_index_action() {
    let k = FourMomentum::new(1.0, [0.8, -0.3, 0.5]).unwrap();
    let p = FourMomentum::new(1.0, [-0.2, 1.1, 0.9]).unwrap();
    let state = TwoBosonState::xi(&k, &p, &GaugeChoice::PairCommon).unwrap();
    let k0p0 = k.energy() * p.energy();

    let two_slot = symmetrize(state.coeffs());
    let acted = apply_helicity_p(&apply_helicity_k(&two_slot));
    let explicit = (overlap(&two_slot, &acted, k0p0) / overlap(&two_slot, &two_slot, k0p0)).re;

    let collapsed = oracle_expectation(
        &state,
        &helicity_observable(Side::K),
        &helicity_observable(Side::P),
    )
    .unwrap();
    assert!(
        (explicit - collapsed).abs() < 1e-13,
        "two-slot {explicit} vs collapsed {collapsed}"
    );
}

#[test]
fn helicity_product_on_basis_kets_gives_eigenvalue_products() {
    let k = FourMomentum::new(1.0, [1.0, 0.0, 0.0]).unwrap();
    let p = FourMomentum::new(1.0, [0.0, 0.0, 2.0]).unwrap();
    let k0p0 = k.energy() * p.energy();
    for lam in 0..3 {
        for lam2 in 0..3 {
            let mut c = [[ZERO; 3]; 3];
            c[lam][lam2] = Complex64::new(1.0, 0.0);
            let two_slot = symmetrize(&c);
            let acted = apply_helicity_p(&apply_helicity_k(&two_slot));
            let value =
                (overlap(&two_slot, &acted, k0p0) / overlap(&two_slot, &two_slot, k0p0)).re;
            assert!((value - HELICITY[lam] * HELICITY[lam2]).abs() < 1e-15);
        }
    }
}

#[test]
fn polarization_sandwich_collapses_to_one_index_matrices() {
    let k = FourMomentum::new(1.2, [1.0, 0.4, -0.9]).unwrap();
    let p = FourMomentum::new(1.2, [-0.7, 0.8, 0.3]).unwrap();
    let theta = 0.63;
    let theta_tilde = 2.17;
    let perp = core::f64::consts::FRAC_PI_2;

    let state = TwoBosonState::psi(&k, &p, &GaugeChoice::PairCommon).unwrap();
    let (axis_k, axis_p) = state.axes();
    let k0p0 = k.energy() * p.energy();
    let two_slot = symmetrize(state.coeffs());

    // S = Pi(theta) - Pi(theta + pi/2) on each side, assembled purely from
    // two-slot projector applications.
    let s_k = |input: &TwoSlot| {
        let plus = apply_projector_k(input, &linear_coeffs(&k, theta, axis_k));
        let minus = apply_projector_k(input, &linear_coeffs(&k, theta + perp, axis_k));
        add(&plus, &minus, -1.0)
    };
    let s_p = |input: &TwoSlot| {
        let plus = apply_projector_p(input, &linear_coeffs(&p, theta_tilde, axis_p));
        let minus = apply_projector_p(input, &linear_coeffs(&p, theta_tilde + perp, axis_p));
        add(&plus, &minus, -1.0)
    };
    let acted = s_p(&s_k(&two_slot));
    let explicit = (overlap(&two_slot, &acted, k0p0) / overlap(&two_slot, &two_slot, k0p0)).re;

    let collapsed = oracle_expectation(
        &state,
        &polarization_observable(Side::K, theta, &k, &GaugeChoice::Explicit(axis_k)).unwrap(),
        &polarization_observable(Side::P, theta_tilde, &p, &GaugeChoice::Explicit(axis_p))
            .unwrap(),
    )
    .unwrap();
    assert!(
        (explicit - collapsed).abs() < 1e-13,
        "two-slot {explicit} vs collapsed {collapsed}"
    );

    // Single projector sandwich as well, not just the signed difference.
    let pi_only = apply_projector_p(
        &apply_projector_k(&two_slot, &linear_coeffs(&k, theta, axis_k)),
        &linear_coeffs(&p, theta_tilde, axis_p),
    );
    let explicit_pi =
        (overlap(&two_slot, &pi_only, k0p0) / overlap(&two_slot, &two_slot, k0p0)).re;
    assert!(explicit_pi >= -1e-15);
    assert!(explicit_pi <= 1.0 + 1e-15);
}
