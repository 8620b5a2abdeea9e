//! Minkowski four-vector algebra, standard boosts, momentum-direction
//! rotations and Wigner rotations.
//!
//! Conventions: metric signature (+,-,-,-), natural units, orthochronous
//! proper Lorentz transformations only. The rest-frame momentum of a particle
//! of mass `m` is `(m, 0, 0, 0)`; the standard boost `L_p` is the pure boost
//! carrying it to `p`.

use crate::dd::{Dd, DD_ZERO};
use crate::error::{Error, Result};
use crate::fp;
use crate::gauge::GaugeChoice;
use crate::linalg::{
    self, cross, dot, mat3_apply, mat3_det, mat3_mul, mat3_transpose, mat4_apply, mat4_identity,
    mat4_mul, mat4_transpose, norm, scale, Mat3, Mat4,
};
use crate::tol;

/// Minkowski product `a.b = a0*b0 - a_vec.b_vec` of two raw four-vectors.
#[inline]
pub fn minkowski_product(a: [f64; 4], b: [f64; 4]) -> f64 {
    a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3]
}

/// An on-shell four-momentum of a massive particle.
///
/// Stores the rest mass and the spatial momentum; the energy is derived as
/// `sqrt(m^2 + |p|^2)`, so the mass-shell condition holds by construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourMomentum {
    mass: f64,
    spatial: [f64; 3],
}

impl FourMomentum {
    /// Builds an on-shell momentum from rest mass and spatial components.
    pub fn new(mass: f64, spatial: [f64; 3]) -> Result<Self> {
        if !(mass > 0.0) || !mass.is_finite() {
            return Err(Error::NonPositiveMass { mass });
        }
        if !spatial.iter().all(|c| c.is_finite()) {
            return Err(Error::InvalidParameter("momentum components must be finite"));
        }
        Ok(FourMomentum { mass, spatial })
    }

    /// The rest-frame momentum `(m, 0, 0, 0)`.
    pub fn rest(mass: f64) -> Result<Self> {
        FourMomentum::new(mass, [0.0, 0.0, 0.0])
    }

    /// A center-of-mass pair `(k, k^pi)` with `k` along the z-axis and
    /// `x = (|k|/m)^2`.
    pub fn cm_pair(x: f64, mass: f64) -> Result<(Self, Self)> {
        if !(x > 0.0) || !x.is_finite() {
            return Err(Error::InvalidParameter("cm pair needs x > 0"));
        }
        let k = FourMomentum::new(mass, [0.0, 0.0, mass * fp::sqrt(x)])?;
        let p = k.cm_partner();
        Ok((k, p))
    }

    /// An equal-energy pair with `|k| = |p| = m*sqrt(x)` and opening angle
    /// `alpha` between the spatial momenta (`k` along z, `p` in the x-z
    /// plane). `alpha` must lie in `(0, pi]`.
    pub fn equal_energy_pair(x: f64, alpha: f64, mass: f64) -> Result<(Self, Self)> {
        if !(x > 0.0) || !x.is_finite() {
            return Err(Error::InvalidParameter("equal-energy pair needs x > 0"));
        }
        if !(alpha > 0.0 && alpha <= core::f64::consts::PI) {
            return Err(Error::InvalidParameter(
                "opening angle must lie in (0, pi]; alpha = 0 means coincident momenta",
            ));
        }
        let mag = mass * fp::sqrt(x);
        let k = FourMomentum::new(mass, [0.0, 0.0, mag])?;
        let p = FourMomentum::new(mass, [mag * fp::sin(alpha), 0.0, mag * fp::cos(alpha)])?;
        Ok((k, p))
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    /// Energy `p0 = sqrt(m^2 + |p|^2)`.
    pub fn energy(&self) -> f64 {
        fp::sqrt(self.mass * self.mass + dot(self.spatial, self.spatial))
    }

    pub fn spatial(&self) -> [f64; 3] {
        self.spatial
    }

    /// `|p_vec|`.
    pub fn momentum_magnitude(&self) -> f64 {
        norm(self.spatial)
    }

    /// Unit vector along the spatial momentum; errors at rest.
    pub fn direction(&self) -> Result<[f64; 3]> {
        linalg::normalize(self.spatial).ok_or(Error::RestFrameMomentum)
    }

    /// `(p0, p_vec)` as a raw four-vector.
    pub fn four_vector(&self) -> [f64; 4] {
        let e = self.energy();
        [e, self.spatial[0], self.spatial[1], self.spatial[2]]
    }

    /// The center-of-mass partner `(p0, -p_vec)`, same mass.
    pub fn cm_partner(&self) -> Self {
        FourMomentum {
            mass: self.mass,
            spatial: [-self.spatial[0], -self.spatial[1], -self.spatial[2]],
        }
    }

    /// Minkowski product with another momentum.
    pub fn dot(&self, other: &Self) -> f64 {
        minkowski_product(self.four_vector(), other.four_vector())
    }

    /// The dimensionless momentum parameter `x = (|p|/m)^2`.
    pub fn x_parameter(&self) -> f64 {
        let r = self.momentum_magnitude() / self.mass;
        r * r
    }

    /// Componentwise coincidence test: `max_i |k_i - p_i| < tol * max(1, |p|)`.
    pub fn coincides_with(&self, other: &Self) -> bool {
        let scale = 1.0f64.max(other.momentum_magnitude());
        let d = sub_abs_max(self.spatial, other.spatial);
        d < tol::MOMENTUM_COINCIDENCE * scale
    }

    /// The momentum after a Lorentz transformation; the mass is kept and the
    /// energy recomputed from the transformed spatial part, which keeps the
    /// result exactly on-shell.
    pub fn transformed(&self, lambda: &LorentzMatrix) -> Result<Self> {
        let v = lambda.apply(self.four_vector());
        FourMomentum::new(self.mass, [v[1], v[2], v[3]])
    }
}

fn sub_abs_max(a: [f64; 3], b: [f64; 3]) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..3 {
        worst = worst.max(fp::abs(a[i] - b[i]));
    }
    worst
}

const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// A proper orthochronous Lorentz transformation.
#[derive(Debug, Clone, PartialEq)]
pub struct LorentzMatrix {
    m: Mat4,
}

impl LorentzMatrix {
    pub fn identity() -> Self {
        LorentzMatrix { m: mat4_identity() }
    }

    /// Validates metric preservation and orthochronicity before wrapping.
    pub fn from_matrix(m: Mat4) -> Result<Self> {
        Self::from_matrix_with_tol(m, tol::EXACT)
    }

    pub fn from_matrix_with_tol(m: Mat4, tolerance: f64) -> Result<Self> {
        let residual = metric_residual_of(&m);
        if residual > tolerance {
            return Err(Error::NotLorentz { residual });
        }
        if m[0][0] < 1.0 - tolerance {
            return Err(Error::NotOrthochronous { entry: m[0][0] });
        }
        Ok(LorentzMatrix { m })
    }

    /// Embeds a spatial rotation as a Lorentz transformation.
    pub fn from_rotation(r: &Rotation3) -> Self {
        let mut m = mat4_identity();
        for i in 0..3 {
            for j in 0..3 {
                m[i + 1][j + 1] = r.m[i][j];
            }
        }
        LorentzMatrix { m }
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.m
    }

    /// `self * other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        LorentzMatrix {
            m: mat4_mul(&self.m, &other.m),
        }
    }

    /// The inverse `eta Lambda^T eta`, exact for metric-preserving matrices.
    pub fn inverse(&self) -> Self {
        let t = mat4_transpose(&self.m);
        let mut m = [[0.0; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = METRIC[i] * t[i][j] * METRIC[j];
            }
        }
        LorentzMatrix { m }
    }

    pub fn apply(&self, v: [f64; 4]) -> [f64; 4] {
        mat4_apply(&self.m, v)
    }

    /// `max |Lambda^T eta Lambda - eta|`.
    pub fn metric_residual(&self) -> f64 {
        metric_residual_of(&self.m)
    }
}

// Evaluated in double-double: at Lorentz factor gamma the products grow
// like gamma^2 while the result is the order-one metric, and plain f64
// evaluation would report its own rounding instead of the matrix's actual
// deviation.
fn metric_residual_of(m: &Mat4) -> f64 {
    let mut worst = 0.0f64;
    for i in 0..4 {
        for j in 0..4 {
            let mut entry = DD_ZERO;
            for (k, metric) in METRIC.iter().enumerate() {
                entry = entry.add(Dd::from_product(m[k][i], m[k][j]).mul_f64(*metric));
            }
            let expected = if i == j { METRIC[i] } else { 0.0 };
            worst = worst.max(fp::abs(entry.add(Dd::from_f64(-expected)).value()));
        }
    }
    worst
}

/// A proper rotation of three-space.
#[derive(Debug, Clone, PartialEq)]
pub struct Rotation3 {
    m: Mat3,
}

impl Rotation3 {
    pub fn identity() -> Self {
        Rotation3 {
            m: linalg::mat3_identity(),
        }
    }

    /// Validates `R^T R = 1` and `det R = +1` before wrapping.
    pub fn from_matrix(m: Mat3) -> Result<Self> {
        Self::from_matrix_with_tol(m, tol::EXACT)
    }

    pub fn from_matrix_with_tol(m: Mat3, tolerance: f64) -> Result<Self> {
        let residual = orthogonality_residual_of(&m).max(fp::abs(mat3_det(&m) - 1.0));
        if residual > tolerance {
            return Err(Error::NotARotation { residual });
        }
        Ok(Rotation3 { m })
    }

    /// Rodrigues rotation about a (not necessarily normalized) axis.
    pub fn from_axis_angle(axis: [f64; 3], angle: f64) -> Result<Self> {
        let n = linalg::normalize(axis).ok_or(Error::InvalidParameter(
            "rotation axis must be a nonzero vector",
        ))?;
        let (s, c) = (fp::sin(angle), fp::cos(angle));
        let mut m = [[0.0; 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                let delta = if i == j { 1.0 } else { 0.0 };
                // levi_civita(i, j, k) n_k summed over k
                let eps = match (i, j) {
                    (0, 1) => n[2],
                    (1, 0) => -n[2],
                    (1, 2) => n[0],
                    (2, 1) => -n[0],
                    (2, 0) => n[1],
                    (0, 2) => -n[1],
                    _ => 0.0,
                };
                *entry = c * delta + (1.0 - c) * n[i] * n[j] - s * eps;
            }
        }
        Ok(Rotation3 { m })
    }

    pub(crate) fn from_columns_unchecked(c0: [f64; 3], c1: [f64; 3], c2: [f64; 3]) -> Self {
        Rotation3 {
            m: [
                [c0[0], c1[0], c2[0]],
                [c0[1], c1[1], c2[1]],
                [c0[2], c1[2], c2[2]],
            ],
        }
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.m
    }

    pub fn column(&self, j: usize) -> [f64; 3] {
        [self.m[0][j], self.m[1][j], self.m[2][j]]
    }

    pub fn compose(&self, other: &Self) -> Self {
        Rotation3 {
            m: mat3_mul(&self.m, &other.m),
        }
    }

    /// The inverse rotation.
    pub fn transpose(&self) -> Self {
        Rotation3 {
            m: mat3_transpose(&self.m),
        }
    }

    pub fn apply(&self, v: [f64; 3]) -> [f64; 3] {
        mat3_apply(&self.m, v)
    }

    /// `max |R^T R - 1|`.
    pub fn orthogonality_residual(&self) -> f64 {
        orthogonality_residual_of(&self.m)
    }
}

fn orthogonality_residual_of(m: &Mat3) -> f64 {
    let product = mat3_mul(&mat3_transpose(m), m);
    linalg::mat3_max_abs_diff(&product, &linalg::mat3_identity())
}

/// The standard boost `L_p` carrying the rest-frame momentum to `p`.
///
/// Block form: time-time entry `p0/m`, time row and column `p_vec/m`, spatial
/// block `1 + p (x) p / (m (m + p0))`.
pub fn standard_boost(p: &FourMomentum) -> LorentzMatrix {
    let m = p.mass();
    let e = p.energy();
    let v = p.spatial();
    let mut out = [[0.0; 4]; 4];
    out[0][0] = e / m;
    for i in 0..3 {
        out[0][i + 1] = v[i] / m;
        out[i + 1][0] = v[i] / m;
        for j in 0..3 {
            let delta = if i == j { 1.0 } else { 0.0 };
            out[i + 1][j + 1] = delta + v[i] * v[j] / (m * (m + e));
        }
    }
    LorentzMatrix { m: out }
}

/// The rotation `R_p = (a_p | n_p x a_p | n_p)` carrying the z-axis to the
/// momentum direction `n_p`, with the transverse axis `a_p` fixed by `gauge`.
///
/// Errors at rest and when a pair gauge is requested without a partner.
pub fn direction_rotation(p: &FourMomentum, gauge: &GaugeChoice) -> Result<Rotation3> {
    let axis = gauge.resolve_single(p)?;
    Ok(direction_rotation_with_axis(p.direction()?, axis))
}

/// `R_p` from an explicit unit transverse axis (must satisfy `a . n = 0`).
pub(crate) fn direction_rotation_with_axis(n: [f64; 3], a: [f64; 3]) -> Rotation3 {
    Rotation3::from_columns_unchecked(a, cross(n, a), n)
}

/// The Wigner rotation `R(Lambda, p) = L_{Lambda p}^{-1} Lambda L_p`.
///
/// The triple product is evaluated in double-double arithmetic: its
/// intermediates grow like the square of the stacked Lorentz factors while
/// the result is an order-one rotation, and plain f64 products would lose
/// that difference to cancellation. The product is checked to reduce to a
/// spatial rotation before the 3x3 block is extracted; violations surface
/// as errors.
pub fn wigner_rotation(lambda: &LorentzMatrix, p: &FourMomentum) -> Result<Rotation3> {
    let w = wigner_product_dd(lambda.matrix(), p);
    let mut corner = 0.0f64;
    for i in 1..4 {
        corner = corner.max(fp::abs(w[0][i])).max(fp::abs(w[i][0]));
    }
    corner = corner.max(fp::abs(w[0][0] - 1.0));
    if corner > tol::COMPOSED {
        return Err(Error::NotARotation { residual: corner });
    }
    let block = [
        [w[1][1], w[1][2], w[1][3]],
        [w[2][1], w[2][2], w[2][3]],
        [w[3][1], w[3][2], w[3][3]],
    ];
    Rotation3::from_matrix_with_tol(block, tol::COMPOSED)
}

/// On-shell energy `sqrt(m^2 + |v|^2)` in double-double form.
fn energy_dd(mass: f64, spatial: &[Dd; 3]) -> Dd {
    let mut sum = Dd::from_product(mass, mass);
    for component in spatial {
        sum = sum.add(component.mul(*component));
    }
    sum.sqrt()
}

/// Standard-boost entries from double-double momentum components,
/// optionally of the inverse boost (signs of the time row and column flip).
fn standard_boost_dd(mass: f64, spatial: &[Dd; 3], energy: Dd, inverse: bool) -> [[Dd; 4]; 4] {
    let sign = if inverse { -1.0 } else { 1.0 };
    let m_dd = Dd::from_f64(mass);
    // m (m + p0), kept unevaluated to feed exact divisions.
    let denom = m_dd.add(energy).mul(m_dd);
    let mut out = [[DD_ZERO; 4]; 4];
    out[0][0] = energy.div(m_dd);
    for i in 0..3 {
        let entry = spatial[i].mul_f64(sign).div(m_dd);
        out[0][i + 1] = entry;
        out[i + 1][0] = entry;
        for j in 0..3 {
            let mut entry = spatial[i].mul(spatial[j]).div(denom);
            if i == j {
                entry = entry.add(Dd::from_f64(1.0));
            }
            out[i + 1][j + 1] = entry;
        }
    }
    out
}

/// `L_q^{-1} Lambda L_p` carried entirely in double-double, including the
/// boosted momentum `q = Lambda p`; rounding `q` to f64 first would leave a
/// residue that grows with the cube of the stacked Lorentz factors.
fn wigner_product_dd(lambda: &Mat4, p: &FourMomentum) -> Mat4 {
    let mass = p.mass();
    let p_spatial = p.spatial().map(Dd::from_f64);
    let p_energy = energy_dd(mass, &p_spatial);
    let p_four = [p_energy, p_spatial[0], p_spatial[1], p_spatial[2]];

    let mut q_spatial = [DD_ZERO; 3];
    for (i, entry) in q_spatial.iter_mut().enumerate() {
        for nu in 0..4 {
            *entry = entry.add(p_four[nu].mul_f64(lambda[i + 1][nu]));
        }
    }
    let q_energy = energy_dd(mass, &q_spatial);

    let left = standard_boost_dd(mass, &q_spatial, q_energy, true);
    let right = standard_boost_dd(mass, &p_spatial, p_energy, false);
    // t = lambda * L_p.
    let mut t = [[DD_ZERO; 4]; 4];
    for (a, row) in t.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            for b in 0..4 {
                *entry = entry.add(right[b][j].mul_f64(lambda[a][b]));
            }
        }
    }
    let mut w = [[0.0f64; 4]; 4];
    for (i, row) in w.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            let mut acc = DD_ZERO;
            for a in 0..4 {
                acc = acc.add(left[i][a].mul(t[a][j]));
            }
            *entry = acc.value();
        }
    }
    w
}

/// Unit vector in the plane transverse to `n` chosen from the spherical
/// angles of `n`, with the azimuth taken as zero on the polar axis.
///
/// For `n = (sin t cos f, sin t sin f, cos t)` this is
/// `(cos t cos f, cos t sin f, -sin t)`; it degrades gracefully near the
/// poles because the azimuth direction is computed from the normalized
/// transverse part of `n`.
pub fn spherical_transverse_axis(n: [f64; 3]) -> [f64; 3] {
    let rho = fp::hypot(n[0], n[1]);
    let (cos_phi, sin_phi) = if rho > 0.0 {
        (n[0] / rho, n[1] / rho)
    } else {
        (1.0, 0.0)
    };
    // cos(theta) = n_z, sin(theta) = rho for a unit n.
    [n[2] * cos_phi, n[2] * sin_phi, -rho]
}

/// Rotates a transverse gauge axis by `delta`, measured in the same angular
/// sense as the linear-polarization angle: `a -> cos(delta) a - sin(delta) (n x a)`.
pub fn rotate_transverse_axis(a: [f64; 3], n: [f64; 3], delta: f64) -> [f64; 3] {
    let nxa = cross(n, a);
    let (s, c) = (fp::sin(delta), fp::cos(delta));
    [
        c * a[0] - s * nxa[0],
        c * a[1] - s * nxa[1],
        c * a[2] - s * nxa[2],
    ]
}

/// Projects `v` onto the plane transverse to the unit vector `n` and
/// normalizes; `None` when the projection is too short to define an axis.
pub(crate) fn project_transverse(v: [f64; 3], n: [f64; 3]) -> Option<[f64; 3]> {
    let parallel = dot(v, n);
    let transverse = sub3_scaled(v, n, parallel);
    let len = norm(transverse);
    let vlen = norm(v);
    if len <= 1e-12 * vlen.max(1.0) {
        return None;
    }
    Some(scale(transverse, 1.0 / len))
}

fn sub3_scaled(v: [f64; 3], n: [f64; 3], s: f64) -> [f64; 3] {
    linalg::sub3(v, scale(n, s))
}
