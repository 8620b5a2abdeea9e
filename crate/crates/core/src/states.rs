//! One-particle polarization states and the two-boson scalar states.
//!
//! A two-boson state is modelled by its 3x3 complex coefficient array over
//! the symmetrized helicity product basis for a fixed pair of distinct
//! momenta. Squared norms carry the covariant factor `4 k0 p0` explicitly;
//! the divergent volume regulator that would multiply every physical ratio
//! is set to one throughout, so all matrix elements stay finite while every
//! normalized quantity keeps its textbook value.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fp;
use crate::gauge::GaugeChoice;
use crate::kinematics::FourMomentum;
use crate::linalg::{c_minkowski4, cross, dot, rc_dot3, rc_minkowski4, ZERO_C};
use crate::spin1::AmplitudeMatrix;

/// The supported polarization kinds of a single boson.
#[derive(Debug, Clone, PartialEq)]
pub enum PolarizationKind {
    /// Spatial polarization along the momentum; the pure helicity-0 state.
    Longitudinal,
    /// General transverse polarization `alpha |+1> + beta |-1>` with
    /// `|alpha|^2 + |beta|^2 = 1`.
    Transversal { alpha: Complex64, beta: Complex64 },
    /// Pure helicity +1.
    CircularPlus,
    /// Pure helicity -1.
    CircularMinus,
    /// Linear polarization at angle `theta` from the `n x a` axis.
    Linear { theta: f64 },
}

/// A polarization four-vector tied to a momentum and a gauge axis.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarizationVector {
    momentum: FourMomentum,
    components: [Complex64; 4],
    kind: PolarizationKind,
    transverse_axis: [f64; 3],
}

/// Builds the polarization four-vector of the requested kind.
pub fn make_polarization(
    p: &FourMomentum,
    kind: PolarizationKind,
    gauge: &GaugeChoice,
) -> Result<PolarizationVector> {
    let axis = gauge.resolve_single(p)?;
    make_polarization_with_axis(p, kind, axis)
}

pub(crate) fn make_polarization_with_axis(
    p: &FourMomentum,
    kind: PolarizationKind,
    axis: [f64; 3],
) -> Result<PolarizationVector> {
    let n = p.direction()?;
    let nxa = cross(n, axis);
    let s = core::f64::consts::FRAC_1_SQRT_2;
    let components = match &kind {
        PolarizationKind::Longitudinal => {
            let m = p.mass();
            let mag = p.momentum_magnitude();
            let e = p.energy();
            let mut c = [ZERO_C; 4];
            c[0] = Complex64::new(-mag / m, 0.0);
            for i in 0..3 {
                c[i + 1] = Complex64::new(-e * n[i] / m, 0.0);
            }
            c
        }
        PolarizationKind::Transversal { alpha, beta } => {
            let norm_sq = alpha.norm_sqr() + beta.norm_sqr();
            if fp::abs(norm_sq - 1.0) > 1e-12 {
                return Err(Error::UnnormalizedTransversal { norm_sq });
            }
            transversal_components(*alpha, *beta, axis, nxa, s)
        }
        PolarizationKind::CircularPlus => transversal_components(
            Complex64::new(1.0, 0.0),
            ZERO_C,
            axis,
            nxa,
            s,
        ),
        PolarizationKind::CircularMinus => transversal_components(
            ZERO_C,
            Complex64::new(1.0, 0.0),
            axis,
            nxa,
            s,
        ),
        PolarizationKind::Linear { theta } => {
            // epsilon = i [ sin(theta) a + cos(theta) n x a ], time part zero.
            let (st, ct) = (fp::sin(*theta), fp::cos(*theta));
            let mut c = [ZERO_C; 4];
            for i in 0..3 {
                c[i + 1] = Complex64::new(0.0, st * axis[i] + ct * nxa[i]);
            }
            c
        }
    };
    Ok(PolarizationVector {
        momentum: *p,
        components,
        kind,
        transverse_axis: axis,
    })
}

fn transversal_components(
    alpha: Complex64,
    beta: Complex64,
    axis: [f64; 3],
    nxa: [f64; 3],
    s: f64,
) -> [Complex64; 4] {
    // epsilon = [ (alpha - beta) a + i (alpha + beta) n x a ] / sqrt2.
    let d = (alpha - beta) * s;
    let q = (alpha + beta) * Complex64::new(0.0, s);
    let mut c = [ZERO_C; 4];
    for i in 0..3 {
        c[i + 1] = d * axis[i] + q * nxa[i];
    }
    c
}

impl PolarizationVector {
    pub fn momentum(&self) -> &FourMomentum {
        &self.momentum
    }

    pub fn kind(&self) -> &PolarizationKind {
        &self.kind
    }

    pub fn components(&self) -> &[Complex64; 4] {
        &self.components
    }

    pub fn transverse_axis(&self) -> [f64; 3] {
        self.transverse_axis
    }

    /// `|epsilon_mu p^mu|`, which vanishes for every supported kind.
    pub fn transversality_residual(&self) -> f64 {
        rc_minkowski4(self.momentum.four_vector(), self.components).norm()
    }

    /// Decomposes the state over the helicity basis: `f_lambda =
    /// epsilon_mu E^mu_lambda` with the helicity amplitudes built in the
    /// same gauge this vector was built in.
    pub fn helicity_coeffs(&self) -> Result<[Complex64; 3]> {
        let e = AmplitudeMatrix::helicity_with_axis(&self.momentum, self.transverse_axis)?;
        let mut f = [ZERO_C; 3];
        for (lam, entry) in f.iter_mut().enumerate() {
            *entry = c_minkowski4(self.components, e.column(lam));
        }
        Ok(f)
    }

    /// Covariant overlap density `-epsilon*_mu epsilon'^mu` with another
    /// polarization of the same momentum (the `2 p0` factor is left off).
    pub fn overlap(&self, other: &PolarizationVector) -> Complex64 {
        let mut sum = self.components[0].conj() * other.components[0];
        for i in 1..4 {
            sum -= self.components[i].conj() * other.components[i];
        }
        -sum
    }
}

/// Decomposition coefficients of a polarization vector over the helicity
/// basis.
pub fn helicity_coeffs_of_polarization(eps: &PolarizationVector) -> Result<[Complex64; 3]> {
    eps.helicity_coeffs()
}

/// A two-boson state over the symmetrized helicity basis of a fixed pair
/// `(k, p)` with `k != p`, stored as the coefficient array `c[lambda][lambda']`
/// with both indices ordered (+1, 0, -1).
#[derive(Debug, Clone, PartialEq)]
pub struct TwoBosonState {
    k: FourMomentum,
    p: FourMomentum,
    coeffs: [[Complex64; 3]; 3],
    axis_k: [f64; 3],
    axis_p: [f64; 3],
}

pub(crate) fn validate_pair(k: &FourMomentum, p: &FourMomentum) -> Result<()> {
    if fp::abs(k.mass() - p.mass()) > 1e-12 * k.mass().max(p.mass()) {
        return Err(Error::MassMismatch {
            mass_k: k.mass(),
            mass_p: p.mass(),
        });
    }
    if k.coincides_with(p) {
        return Err(Error::CoincidentMomenta);
    }
    Ok(())
}

impl TwoBosonState {
    /// The scalar state with coefficients `eta_{mu nu} E^mu_lambda(k)
    /// E^nu_lambda'(p)`.
    pub fn psi(k: &FourMomentum, p: &FourMomentum, gauge: &GaugeChoice) -> Result<Self> {
        validate_pair(k, p)?;
        let (axis_k, axis_p) = gauge.resolve_pair(k, p)?;
        let ek = AmplitudeMatrix::helicity_with_axis(k, axis_k)?;
        let ep = AmplitudeMatrix::helicity_with_axis(p, axis_p)?;
        let mut coeffs = [[ZERO_C; 3]; 3];
        for (lam, row) in coeffs.iter_mut().enumerate() {
            for (lam2, entry) in row.iter_mut().enumerate() {
                *entry = c_minkowski4(ek.column(lam), ep.column(lam2));
            }
        }
        Self::from_parts(k, p, coeffs, axis_k, axis_p)
    }

    /// The scalar state with coefficients `[p_mu E^mu_lambda(k)] [k_nu
    /// E^nu_lambda'(p)]`; its coefficient array is a rank-one outer product.
    pub fn phi(k: &FourMomentum, p: &FourMomentum, gauge: &GaugeChoice) -> Result<Self> {
        validate_pair(k, p)?;
        let (axis_k, axis_p) = gauge.resolve_pair(k, p)?;
        let (u, v) = phi_factors(k, p, axis_k, axis_p)?;
        let mut coeffs = [[ZERO_C; 3]; 3];
        for (lam, row) in coeffs.iter_mut().enumerate() {
            for (lam2, entry) in row.iter_mut().enumerate() {
                *entry = u[lam] * v[lam2];
            }
        }
        Self::from_parts(k, p, coeffs, axis_k, axis_p)
    }

    /// The scalar state that stays finite in the small-mass regime, built
    /// directly from its helicity decomposition: the transverse block is
    /// `(k.p) [E(k).E(p)] + [p.E(k)][k.E(p)]`, the helicity-0 row and column
    /// carry explicit factors of the mass, and the 00 entry is
    /// `m^2 (k_vec . p_vec) / (|k||p|)`.
    ///
    /// Algebraically this equals `-(k.p) psi + phi`, but that combination
    /// cancels catastrophically for small masses while this construction
    /// does not.
    pub fn xi(k: &FourMomentum, p: &FourMomentum, gauge: &GaugeChoice) -> Result<Self> {
        validate_pair(k, p)?;
        let (axis_k, axis_p) = gauge.resolve_pair(k, p)?;
        let ek = AmplitudeMatrix::helicity_with_axis(k, axis_k)?;
        let ep = AmplitudeMatrix::helicity_with_axis(p, axis_p)?;
        let kp = k.dot(p);
        let m = k.mass();
        let (k0, p0) = (k.energy(), p.energy());
        let (kv, pv) = (k.spatial(), p.spatial());
        let (kmag, pmag) = (k.momentum_magnitude(), p.momentum_magnitude());

        let mut coeffs = [[ZERO_C; 3]; 3];
        for lam in [0usize, 2] {
            for lam2 in [0usize, 2] {
                let transverse = crate::linalg::c_dot3(
                    ek.spatial_column(lam),
                    ep.spatial_column(lam2),
                ) * kp;
                let longitudinal_pair =
                    rc_dot3(pv, ek.spatial_column(lam)) * rc_dot3(kv, ep.spatial_column(lam2));
                coeffs[lam][lam2] = transverse + longitudinal_pair;
            }
        }
        coeffs[1][1] = Complex64::new(m * m * dot(kv, pv) / (kmag * pmag), 0.0);
        for lam in [0usize, 2] {
            coeffs[lam][1] = rc_dot3(pv, ek.spatial_column(lam)) * (m * k0 / pmag);
            coeffs[1][lam] = rc_dot3(kv, ep.spatial_column(lam)) * (m * p0 / kmag);
        }
        Self::from_parts(k, p, coeffs, axis_k, axis_p)
    }

    /// The general scalar state `alpha (k.p) psi + beta phi`.
    pub fn chi(
        k: &FourMomentum,
        p: &FourMomentum,
        alpha: Complex64,
        beta: Complex64,
        gauge: &GaugeChoice,
    ) -> Result<Self> {
        if alpha.norm_sqr() + beta.norm_sqr() == 0.0 {
            return Err(Error::ZeroState);
        }
        let psi = Self::psi(k, p, gauge)?;
        let phi = Self::phi(k, p, gauge)?;
        let kp = k.dot(p);
        let mut coeffs = [[ZERO_C; 3]; 3];
        for (lam, row) in coeffs.iter_mut().enumerate() {
            for (lam2, entry) in row.iter_mut().enumerate() {
                *entry = alpha * kp * psi.coeffs[lam][lam2] + beta * phi.coeffs[lam][lam2];
            }
        }
        Self::from_parts(k, p, coeffs, psi.axis_k, psi.axis_p)
    }

    /// Wraps an explicit coefficient array; rejects the zero array.
    pub fn from_coeffs(
        k: &FourMomentum,
        p: &FourMomentum,
        coeffs: [[Complex64; 3]; 3],
        gauge: &GaugeChoice,
    ) -> Result<Self> {
        validate_pair(k, p)?;
        let (axis_k, axis_p) = gauge.resolve_pair(k, p)?;
        Self::from_parts(k, p, coeffs, axis_k, axis_p)
    }

    fn from_parts(
        k: &FourMomentum,
        p: &FourMomentum,
        coeffs: [[Complex64; 3]; 3],
        axis_k: [f64; 3],
        axis_p: [f64; 3],
    ) -> Result<Self> {
        let sum: f64 = coeffs
            .iter()
            .flatten()
            .map(num_complex::Complex64::norm_sqr)
            .sum();
        if sum == 0.0 {
            return Err(Error::ZeroState);
        }
        Ok(TwoBosonState {
            k: *k,
            p: *p,
            coeffs,
            axis_k,
            axis_p,
        })
    }

    pub fn k(&self) -> &FourMomentum {
        &self.k
    }

    pub fn p(&self) -> &FourMomentum {
        &self.p
    }

    pub fn coeffs(&self) -> &[[Complex64; 3]; 3] {
        &self.coeffs
    }

    /// Gauge axes `(a_k, a_p)` the state was built in.
    pub fn axes(&self) -> ([f64; 3], [f64; 3]) {
        (self.axis_k, self.axis_p)
    }

    /// `sum |c|^2` over the coefficient array.
    pub fn coeff_sum_sq(&self) -> f64 {
        self.coeffs
            .iter()
            .flatten()
            .map(num_complex::Complex64::norm_sqr)
            .sum()
    }

    /// Squared norm `4 k0 p0 sum |c|^2` (volume regulator set to one).
    pub fn norm_sq(&self) -> f64 {
        4.0 * self.k.energy() * self.p.energy() * self.coeff_sum_sq()
    }

    /// Overlap `<self|other> = 4 k0 p0 sum conj(c) c'` for states over the
    /// same pair; callers are responsible for using a common gauge.
    pub fn overlap(&self, other: &Self) -> Result<Complex64> {
        if !self.k.coincides_with(&other.k) || !self.p.coincides_with(&other.p) {
            return Err(Error::InvalidParameter(
                "overlap requires states over the same momentum pair",
            ));
        }
        let mut sum = ZERO_C;
        for lam in 0..3 {
            for lam2 in 0..3 {
                sum += self.coeffs[lam][lam2].conj() * other.coeffs[lam][lam2];
            }
        }
        Ok(sum * (4.0 * self.k.energy() * self.p.energy()))
    }
}

fn phi_factors(
    k: &FourMomentum,
    p: &FourMomentum,
    axis_k: [f64; 3],
    axis_p: [f64; 3],
) -> Result<([Complex64; 3], [Complex64; 3])> {
    let ek = AmplitudeMatrix::helicity_with_axis(k, axis_k)?;
    let ep = AmplitudeMatrix::helicity_with_axis(p, axis_p)?;
    let k4 = k.four_vector();
    let p4 = p.four_vector();
    let mut u = [ZERO_C; 3];
    let mut v = [ZERO_C; 3];
    for lam in 0..3 {
        u[lam] = rc_minkowski4(p4, ek.column(lam));
        v[lam] = rc_minkowski4(k4, ep.column(lam));
    }
    Ok((u, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQRT_2: f64 = core::f64::consts::SQRT_2;
    const PI: f64 = core::f64::consts::PI;

    fn cm_pair_x1() -> (FourMomentum, FourMomentum) {
        FourMomentum::cm_pair(1.0, 1.0).unwrap()
    }

    #[test]
    fn longitudinal_vector_explicit() {
        let p = FourMomentum::new(1.0, [1.0, 0.0, 0.0]).unwrap();
        let eps = make_polarization(&p, PolarizationKind::Longitudinal, &GaugeChoice::Spherical)
            .unwrap();
        let c = eps.components();
        assert!((c[0] - Complex64::new(-1.0, 0.0)).norm() < 1e-14);
        assert!((c[1] - Complex64::new(-SQRT_2, 0.0)).norm() < 1e-14);
        assert!(c[2].norm() < 1e-15);
        assert!(c[3].norm() < 1e-15);
        assert!(eps.transversality_residual() < 1e-14);
    }

    #[test]
    fn longitudinal_is_pure_helicity_zero() {
        let p = FourMomentum::new(0.5, [0.4, -2.0, 1.1]).unwrap();
        let eps = make_polarization(&p, PolarizationKind::Longitudinal, &GaugeChoice::Spherical)
            .unwrap();
        let f = eps.helicity_coeffs().unwrap();
        assert!(f[0].norm() < 1e-12);
        assert!((f[1] - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        assert!(f[2].norm() < 1e-12);
    }

    #[test]
    fn circular_plus_is_pure_helicity_plus() {
        let p = FourMomentum::new(1.0, [0.0, 0.3, 0.9]).unwrap();
        let eps =
            make_polarization(&p, PolarizationKind::CircularPlus, &GaugeChoice::Spherical).unwrap();
        let f = eps.helicity_coeffs().unwrap();
        assert!((f[0] - Complex64::new(1.0, 0.0)).norm() < 1e-13);
        assert!(f[1].norm() < 1e-13);
        assert!(f[2].norm() < 1e-13);
    }

    #[test]
    fn linear_coeffs_are_equal_weight_phases() {
        let p = FourMomentum::new(1.0, [0.7, 0.1, -0.4]).unwrap();
        let theta = 0.93;
        let eps = make_polarization(
            &p,
            PolarizationKind::Linear { theta },
            &GaugeChoice::Spherical,
        )
        .unwrap();
        let f = eps.helicity_coeffs().unwrap();
        let s = core::f64::consts::FRAC_1_SQRT_2;
        let expected_plus = Complex64::from_polar(s, theta);
        let expected_minus = Complex64::from_polar(s, -theta);
        assert!((f[0] - expected_plus).norm() < 1e-13);
        assert!(f[1].norm() < 1e-13);
        assert!((f[2] - expected_minus).norm() < 1e-13);
    }

    #[test]
    fn linear_zero_angle_points_along_nxa() {
        let p = FourMomentum::new(1.0, [0.0, 0.0, 2.0]).unwrap();
        let eps = make_polarization(
            &p,
            PolarizationKind::Linear { theta: 0.0 },
            &GaugeChoice::Spherical,
        )
        .unwrap();
        // a = e_x, n x a = e_y: components i * e_y.
        let c = eps.components();
        assert!(c[1].norm() < 1e-15);
        assert!((c[2] - Complex64::new(0.0, 1.0)).norm() < 1e-15);
        assert!(c[3].norm() < 1e-15);
    }

    #[test]
    fn linear_overlap_goes_as_cosine_of_angle_difference() {
        let p = FourMomentum::new(1.0, [0.2, -0.9, 0.5]).unwrap();
        let mk = |theta: f64| {
            make_polarization(
                &p,
                PolarizationKind::Linear { theta },
                &GaugeChoice::Spherical,
            )
            .unwrap()
        };
        let pairs = [(0.3, 0.3 + PI / 2.0), (0.0, 1.1), (2.1, -0.4)];
        for (t1, t2) in pairs {
            let overlap = mk(t1).overlap(&mk(t2));
            assert!((overlap.re - (t1 - t2).cos()).abs() < 1e-13);
            assert!(overlap.im.abs() < 1e-13);
        }
    }

    #[test]
    fn transversal_requires_normalized_coefficients() {
        let p = FourMomentum::new(1.0, [1.0, 0.0, 0.0]).unwrap();
        let bad = PolarizationKind::Transversal {
            alpha: Complex64::new(1.0, 0.0),
            beta: Complex64::new(1.0, 0.0),
        };
        assert!(matches!(
            make_polarization(&p, bad, &GaugeChoice::Spherical),
            Err(Error::UnnormalizedTransversal { .. })
        ));
    }

    #[test]
    fn psi_norm_matches_closed_form_at_cm() {
        let (k, p) = cm_pair_x1();
        let psi = TwoBosonState::psi(&k, &p, &GaugeChoice::PairCommon).unwrap();
        // (k.p)/m^2 = 3 at x = 1, so sum |c|^2 = 9 + 2 = 11.
        assert!((psi.coeff_sum_sq() - 11.0).abs() < 1e-12);
        assert!((psi.norm_sq() - 4.0 * k.energy() * p.energy() * 11.0).abs() < 1e-10);
    }

    #[test]
    fn phi_norm_and_overlap_at_cm() {
        let (k, p) = cm_pair_x1();
        let phi = TwoBosonState::phi(&k, &p, &GaugeChoice::PairCommon).unwrap();
        assert!((phi.coeff_sum_sq() - 64.0).abs() < 1e-10);
        let psi = TwoBosonState::psi(&k, &p, &GaugeChoice::PairCommon).unwrap();
        let overlap = phi.overlap(&psi).unwrap() / (4.0 * k.energy() * p.energy());
        // (k.p) [ (k.p)^2/m^4 - 1 ] = 3 * 8 = 24, real.
        assert!((overlap.re - 24.0).abs() < 1e-10);
        assert!(overlap.im.abs() < 1e-12);
    }

    #[test]
    fn phi_coefficients_are_rank_one() {
        let k = FourMomentum::new(1.0, [0.8, 0.0, 0.4]).unwrap();
        let p = FourMomentum::new(1.0, [-0.1, 1.2, 0.0]).unwrap();
        let phi = TwoBosonState::phi(&k, &p, &GaugeChoice::PairCommon).unwrap();
        let c = phi.coeffs();
        // Every 2x2 minor of an outer product vanishes.
        for i in 0..3 {
            for j in 0..3 {
                for a in (i + 1)..3 {
                    for b in (j + 1)..3 {
                        let minor = c[i][j] * c[a][b] - c[i][b] * c[a][j];
                        assert!(minor.norm() < 1e-10);
                    }
                }
            }
        }
    }

    #[test]
    fn xi_norm_at_cm() {
        let (k, p) = cm_pair_x1();
        let xi = TwoBosonState::xi(&k, &p, &GaugeChoice::PairCommon).unwrap();
        // 2 (k.p)^2 + m^4 = 19 at x = 1, m = 1.
        assert!((xi.coeff_sum_sq() - 19.0).abs() < 1e-12);
    }

    #[test]
    fn xi_matches_linear_combination_for_moderate_mass() {
        let k = FourMomentum::new(1.0, [1.4, -0.2, 0.8]).unwrap();
        let p = FourMomentum::new(1.0, [-0.6, 0.9, 2.0]).unwrap();
        let gauge = GaugeChoice::PairCommon;
        let xi = TwoBosonState::xi(&k, &p, &gauge).unwrap();
        let psi = TwoBosonState::psi(&k, &p, &gauge).unwrap();
        let phi = TwoBosonState::phi(&k, &p, &gauge).unwrap();
        let kp = k.dot(&p);
        let mut worst = 0.0f64;
        let mut scale = 0.0f64;
        for lam in 0..3 {
            for lam2 in 0..3 {
                let combo = phi.coeffs()[lam][lam2] - psi.coeffs()[lam][lam2] * kp;
                worst = worst.max((combo - xi.coeffs()[lam][lam2]).norm());
                scale = scale.max(xi.coeffs()[lam][lam2].norm());
            }
        }
        assert!(worst / scale < 1e-12);
    }

    #[test]
    fn xi_helicity_zero_entries_scale_with_mass() {
        let spatial_k = [0.9, 0.1, 0.2];
        let spatial_p = [-0.3, 0.7, 0.6];
        let gauge = GaugeChoice::PairCommon;
        let coeff_size = |m: f64| -> f64 {
            let k = FourMomentum::new(m, spatial_k).unwrap();
            let p = FourMomentum::new(m, spatial_p).unwrap();
            let xi = TwoBosonState::xi(&k, &p, &gauge).unwrap();
            let mut largest = 0.0f64;
            for lam in 0..3 {
                largest = largest.max(xi.coeffs()[lam][1].norm());
                largest = largest.max(xi.coeffs()[1][lam].norm());
            }
            largest
        };
        let at_1 = coeff_size(1e-3);
        let at_2 = coeff_size(1e-6);
        // Mixed entries are O(m) at fixed three-momenta, the 00 entry O(m^2).
        assert!(at_2 < at_1 * 1.1e-3);
    }

    #[test]
    fn chi_special_cases() {
        let (k, p) = cm_pair_x1();
        let gauge = GaugeChoice::PairCommon;
        let kp = k.dot(&p);
        let chi_psi = TwoBosonState::chi(
            &k,
            &p,
            Complex64::new(1.0, 0.0),
            ZERO_C,
            &gauge,
        )
        .unwrap();
        let psi = TwoBosonState::psi(&k, &p, &gauge).unwrap();
        for lam in 0..3 {
            for lam2 in 0..3 {
                let expected = psi.coeffs()[lam][lam2] * kp;
                assert!((chi_psi.coeffs()[lam][lam2] - expected).norm() < 1e-12);
            }
        }
        let chi_phi = TwoBosonState::chi(
            &k,
            &p,
            ZERO_C,
            Complex64::new(1.0, 0.0),
            &gauge,
        )
        .unwrap();
        let phi = TwoBosonState::phi(&k, &p, &gauge).unwrap();
        for lam in 0..3 {
            for lam2 in 0..3 {
                assert!((chi_phi.coeffs()[lam][lam2] - phi.coeffs()[lam][lam2]).norm() < 1e-12);
            }
        }
        assert!(matches!(
            TwoBosonState::chi(&k, &p, ZERO_C, ZERO_C, &gauge),
            Err(Error::ZeroState)
        ));
    }

    #[test]
    fn coincident_momenta_are_rejected() {
        let k = FourMomentum::new(1.0, [1.0, 0.0, 0.0]).unwrap();
        assert!(matches!(
            TwoBosonState::psi(&k, &k, &GaugeChoice::Spherical),
            Err(Error::CoincidentMomenta)
        ));
        let almost = FourMomentum::new(1.0, [1.0 + 1e-14, 0.0, 0.0]).unwrap();
        assert!(TwoBosonState::psi(&k, &almost, &GaugeChoice::Spherical).is_err());
    }

    #[test]
    fn mass_mismatch_is_rejected() {
        let k = FourMomentum::new(1.0, [1.0, 0.0, 0.0]).unwrap();
        let p = FourMomentum::new(2.0, [0.0, 1.0, 0.0]).unwrap();
        assert!(matches!(
            TwoBosonState::psi(&k, &p, &GaugeChoice::Spherical),
            Err(Error::MassMismatch { .. })
        ));
    }

    #[test]
    fn gauge_rotation_multiplies_rows_by_phases() {
        let k = FourMomentum::new(1.0, [0.9, -0.2, 0.4]).unwrap();
        let p = FourMomentum::new(1.0, [0.1, 1.3, -0.7]).unwrap();
        let (a_k, a_p) = GaugeChoice::PairCommon.resolve_pair(&k, &p).unwrap();
        let delta = 0.47;
        let n_k = k.direction().unwrap();
        let rotated = crate::kinematics::rotate_transverse_axis(a_k, n_k, delta);
        let base = TwoBosonState::psi(
            &k,
            &p,
            &GaugeChoice::ExplicitPair { a_k, a_p },
        )
        .unwrap();
        let turned = TwoBosonState::psi(
            &k,
            &p,
            &GaugeChoice::ExplicitPair { a_k: rotated, a_p },
        )
        .unwrap();
        let phase_plus = Complex64::from_polar(1.0, -delta);
        for lam2 in 0..3 {
            assert!(
                (turned.coeffs()[0][lam2] - base.coeffs()[0][lam2] * phase_plus).norm() < 1e-12
            );
            assert!((turned.coeffs()[1][lam2] - base.coeffs()[1][lam2]).norm() < 1e-13);
            assert!(
                (turned.coeffs()[2][lam2] - base.coeffs()[2][lam2] * phase_plus.conj()).norm()
                    < 1e-12
            );
        }
    }
}
