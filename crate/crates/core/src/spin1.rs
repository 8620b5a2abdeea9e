//! Spin-1 representation machinery: the intertwiner between the vector and
//! the spin-1 matrix representations of rotations, and the covariant
//! amplitude matrices in the spin and helicity bases.
//!
//! Amplitude matrices are 4x3: one four-vector column per spin/helicity
//! label. Helicity columns are ordered (+1, 0, -1) and all downstream
//! indexing relies on that order.

use num_complex::Complex64;

use crate::error::Result;
use crate::gauge::GaugeChoice;
use crate::kinematics::{wigner_rotation, FourMomentum, LorentzMatrix, Rotation3};
use crate::linalg::{
    c_minkowski4, c_minkowski4_conj, cmat3_adjoint, cmat3_from_real, cmat3_mul, cross, rc_minkowski4,
    CMat3, ZERO_C,
};

/// Helicity eigenvalues in column order.
pub const HELICITY_VALUES: [f64; 3] = [1.0, 0.0, -1.0];

const FRAC_1_SQRT_2: f64 = core::f64::consts::FRAC_1_SQRT_2;

/// The unitary intertwiner `V` with `D(R) = V R V^dag`.
pub fn intertwiner() -> CMat3 {
    let s = FRAC_1_SQRT_2;
    [
        [
            Complex64::new(-s, 0.0),
            Complex64::new(0.0, s),
            ZERO_C,
        ],
        [ZERO_C, ZERO_C, Complex64::new(1.0, 0.0)],
        [
            Complex64::new(s, 0.0),
            Complex64::new(0.0, s),
            ZERO_C,
        ],
    ]
}

/// `V V^T`, an exact antidiagonal sign matrix.
pub fn intertwiner_vvt() -> CMat3 {
    let one = Complex64::new(1.0, 0.0);
    [
        [ZERO_C, ZERO_C, -one],
        [ZERO_C, one, ZERO_C],
        [-one, ZERO_C, ZERO_C],
    ]
}

/// The spin-1 matrix representation `D(R) = V R V^dag` of a rotation.
///
/// Non-rotation inputs are rejected at [`Rotation3`] construction, so this
/// function is total on its domain.
pub fn rotation_rep(r: &Rotation3) -> CMat3 {
    let v = intertwiner();
    let rv = cmat3_mul(&cmat3_from_real(r.matrix()), &cmat3_adjoint(&v));
    cmat3_mul(&v, &rv)
}

/// Which basis the columns of an amplitude matrix refer to.
#[derive(Debug, Clone, PartialEq)]
pub enum AmplitudeBasis {
    /// Spin basis, columns labelled by the rest-frame spin projection.
    Spin,
    /// Helicity basis, columns ordered (+1, 0, -1); carries the transverse
    /// gauge axis the construction used.
    Helicity { transverse_axis: [f64; 3] },
}

/// The 4x3 coefficient array relating covariant states to spin-basis or
/// helicity-basis states.
#[derive(Debug, Clone, PartialEq)]
pub struct AmplitudeMatrix {
    momentum: FourMomentum,
    entries: [[Complex64; 3]; 4],
    basis: AmplitudeBasis,
}

impl AmplitudeMatrix {
    /// The spin-basis amplitudes: the spatial columns of the standard boost
    /// multiplied by `V^T`.
    pub fn spin(p: &FourMomentum) -> Self {
        let m = p.mass();
        let e = p.energy();
        let pv = p.spatial();
        let v = intertwiner();
        let mut entries = [[ZERO_C; 3]; 4];
        for sigma in 0..3 {
            // Column sigma of V^T is row sigma of V.
            let col = v[sigma];
            let p_dot: Complex64 = col[0] * pv[0] + col[1] * pv[1] + col[2] * pv[2];
            entries[0][sigma] = p_dot / m;
            for i in 0..3 {
                entries[i + 1][sigma] = col[i] + p_dot * (pv[i] / (m * (m + e)));
            }
        }
        AmplitudeMatrix {
            momentum: *p,
            entries,
            basis: AmplitudeBasis::Spin,
        }
    }

    /// The helicity-basis amplitudes, columns (+1, 0, -1):
    /// `(0, (-a + i n x a)/sqrt2)`, `(|p|/m, p0 p / (m |p|))`,
    /// `(0, (a + i n x a)/sqrt2)`.
    pub fn helicity(p: &FourMomentum, gauge: &GaugeChoice) -> Result<Self> {
        let axis = gauge.resolve_single(p)?;
        Self::helicity_with_axis(p, axis)
    }

    /// Helicity amplitudes from an already-resolved transverse axis.
    pub(crate) fn helicity_with_axis(p: &FourMomentum, axis: [f64; 3]) -> Result<Self> {
        let n = p.direction()?;
        let nxa = cross(n, axis);
        let m = p.mass();
        let e = p.energy();
        let mag = p.momentum_magnitude();
        let s = FRAC_1_SQRT_2;
        let mut entries = [[ZERO_C; 3]; 4];
        entries[0][1] = Complex64::new(mag / m, 0.0);
        for i in 0..3 {
            entries[i + 1][0] = Complex64::new(-axis[i] * s, nxa[i] * s);
            entries[i + 1][1] = Complex64::new(e * n[i] / m, 0.0);
            entries[i + 1][2] = Complex64::new(axis[i] * s, nxa[i] * s);
        }
        Ok(AmplitudeMatrix {
            momentum: *p,
            entries,
            basis: AmplitudeBasis::Helicity {
                transverse_axis: axis,
            },
        })
    }

    pub fn momentum(&self) -> &FourMomentum {
        &self.momentum
    }

    pub fn basis(&self) -> &AmplitudeBasis {
        &self.basis
    }

    pub fn entries(&self) -> &[[Complex64; 3]; 4] {
        &self.entries
    }

    /// Column `j` as a complex four-vector.
    pub fn column(&self, j: usize) -> [Complex64; 4] {
        [
            self.entries[0][j],
            self.entries[1][j],
            self.entries[2][j],
            self.entries[3][j],
        ]
    }

    /// Spatial part of column `j`.
    pub fn spatial_column(&self, j: usize) -> [Complex64; 3] {
        [self.entries[1][j], self.entries[2][j], self.entries[3][j]]
    }

    /// `max_sigma |p_mu e^mu_sigma|`.
    pub fn transversality_residual(&self) -> f64 {
        let p4 = self.momentum.four_vector();
        (0..3)
            .map(|j| rc_minkowski4(p4, self.column(j)).norm())
            .fold(0.0, f64::max)
    }

    /// `max |e*^mu_sigma e_{mu sigma'} + delta_{sigma sigma'}|`.
    pub fn orthonormality_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for a in 0..3 {
            for b in 0..3 {
                let delta = if a == b { 1.0 } else { 0.0 };
                let entry = c_minkowski4_conj(self.column(a), self.column(b))
                    + Complex64::new(delta, 0.0);
                worst = worst.max(entry.norm());
            }
        }
        worst
    }

    /// `max |e^mu_sigma e_{mu sigma'} + (V V^T)_{sigma sigma'}|`.
    pub fn symmetric_product_residual(&self) -> f64 {
        let w = intertwiner_vvt();
        let mut worst = 0.0f64;
        for a in 0..3 {
            for b in 0..3 {
                let entry = c_minkowski4(self.column(a), self.column(b)) + w[a][b];
                worst = worst.max(entry.norm());
            }
        }
        worst
    }

    /// `max |sum_sigma e*^mu_sigma e^nu_sigma + eta^{mu nu} - p^mu p^nu / m^2|`.
    pub fn completeness_residual(&self) -> f64 {
        let p4 = self.momentum.four_vector();
        let m2 = self.momentum.mass() * self.momentum.mass();
        let metric = [1.0, -1.0, -1.0, -1.0];
        let mut worst = 0.0f64;
        for mu in 0..4 {
            for nu in 0..4 {
                let mut sum = ZERO_C;
                for sigma in 0..3 {
                    sum += self.entries[mu][sigma].conj() * self.entries[nu][sigma];
                }
                let eta = if mu == nu { metric[mu] } else { 0.0 };
                let expected = Complex64::new(p4[mu] * p4[nu] / m2 - eta, 0.0);
                worst = worst.max((sum - expected).norm());
            }
        }
        worst
    }

    /// `max |(e V V^T)^mu_sigma - e*^mu_sigma|`.
    pub fn conjugation_residual(&self) -> f64 {
        let w = intertwiner_vvt();
        let mut worst = 0.0f64;
        for mu in 0..4 {
            for tau in 0..3 {
                let mut sum = ZERO_C;
                for sigma in 0..3 {
                    sum += self.entries[mu][sigma] * w[sigma][tau];
                }
                worst = worst.max((sum - self.entries[mu][tau].conj()).norm());
            }
        }
        worst
    }

    /// Largest of the four amplitude identities.
    pub fn max_identity_residual(&self) -> f64 {
        self.transversality_residual()
            .max(self.orthonormality_residual())
            .max(self.symmetric_product_residual())
            .max(self.completeness_residual())
            .max(self.conjugation_residual())
    }

    /// `max |a - b|` over matrix entries.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0f64;
        for mu in 0..4 {
            for j in 0..3 {
                worst = worst.max((self.entries[mu][j] - other.entries[mu][j]).norm());
            }
        }
        worst
    }
}

/// Residual of the compatibility condition tying the spin-basis amplitudes
/// at `Lambda p` to those at `p` through the Wigner rotation:
/// `max | e(Lambda p) - Lambda e(p) D(R(Lambda, p))^T |`.
pub fn check_weinberg(lambda: &LorentzMatrix, p: &FourMomentum) -> Result<f64> {
    let rotation = wigner_rotation(lambda, p)?;
    let d = rotation_rep(&rotation);
    let e_here = AmplitudeMatrix::spin(p);
    let e_there = AmplitudeMatrix::spin(&p.transformed(lambda)?);
    let l = lambda.matrix();

    let mut worst = 0.0f64;
    for mu in 0..4 {
        for sigma in 0..3 {
            // (Lambda e(p))^mu_tau, then contract with D_{sigma tau}.
            let mut entry = ZERO_C;
            for tau in 0..3 {
                let mut boosted = ZERO_C;
                for nu in 0..4 {
                    boosted += e_here.entries[nu][tau] * l[mu][nu];
                }
                entry += boosted * d[sigma][tau];
            }
            worst = worst.max((entry - e_there.entries[mu][sigma]).norm());
        }
    }
    Ok(worst)
}

/// Residual of `E(p) = e(p) D(R_p^{-1})^T`, reassembling the helicity
/// amplitudes from the spin-basis ones.
pub fn helicity_reassembly_residual(p: &FourMomentum, gauge: &GaugeChoice) -> Result<f64> {
    let e = AmplitudeMatrix::spin(p);
    let big_e = AmplitudeMatrix::helicity(p, gauge)?;
    let axis = match big_e.basis() {
        AmplitudeBasis::Helicity { transverse_axis } => *transverse_axis,
        AmplitudeBasis::Spin => unreachable!(),
    };
    let r_p = crate::kinematics::direction_rotation_with_axis(p.direction()?, axis);
    let d_inv = rotation_rep(&r_p.transpose());
    let mut worst = 0.0f64;
    for mu in 0..4 {
        for lam in 0..3 {
            let mut entry = ZERO_C;
            for sigma in 0..3 {
                entry += e.entries[mu][sigma] * d_inv[lam][sigma];
            }
            worst = worst.max((entry - big_e.entries[mu][lam]).norm());
        }
    }
    Ok(worst)
}

/// Residual of the block-product route to `E(p)`: the boost block applied to
/// `R_p V^T`, compared against the explicit column construction.
pub fn helicity_block_product_residual(p: &FourMomentum, axis: [f64; 3]) -> Result<f64> {
    let big_e = AmplitudeMatrix::helicity_with_axis(p, axis)?;
    let r_p = crate::kinematics::direction_rotation_with_axis(p.direction()?, axis);
    let v = intertwiner();
    let m = p.mass();
    let e0 = p.energy();
    let pv = p.spatial();
    let mut worst = 0.0f64;
    for lam in 0..3 {
        // Column lam of R_p V^T.
        let mut col = [ZERO_C; 3];
        for (i, entry) in col.iter_mut().enumerate() {
            for j in 0..3 {
                *entry += v[lam][j] * r_p.matrix()[i][j];
            }
        }
        let p_dot: Complex64 = col[0] * pv[0] + col[1] * pv[1] + col[2] * pv[2];
        let time = p_dot / m;
        worst = worst.max((time - big_e.entries[0][lam]).norm());
        for i in 0..3 {
            let spatial = col[i] + p_dot * (pv[i] / (m * (m + e0)));
            worst = worst.max((spatial - big_e.entries[i + 1][lam]).norm());
        }
    }
    Ok(worst)
}
