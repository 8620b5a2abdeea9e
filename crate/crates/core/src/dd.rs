//! Minimal double-double arithmetic for the one place that needs it: the
//! Wigner-rotation triple product, whose intermediates grow like the square
//! of the Lorentz factor while the result stays order one. Plain f64
//! products would lose up to eight digits to that cancellation.

use crate::fp;

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = fp::fma(a, b, -p);
    (p, err)
}

/// An unevaluated sum `hi + lo` with `|lo|` below half an ulp of `hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd {
    hi: f64,
    lo: f64,
}

pub(crate) const DD_ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

impl Dd {
    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn from_product(a: f64, b: f64) -> Dd {
        let (hi, lo) = two_prod(a, b);
        Dd { hi, lo }
    }

    #[inline]
    pub fn add(self, other: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, other.hi);
        let e = e + self.lo + other.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul(self, other: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, other: f64) -> Dd {
        self.mul(Dd::from_f64(other))
    }

    #[inline]
    pub fn div(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        let remainder = self.add(other.mul_f64(-q1));
        let q2 = (remainder.hi + remainder.lo) / other.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    /// One Newton step on the f64 square root reaches full double-double
    /// precision for the on-shell energies this crate feeds in.
    #[inline]
    pub fn sqrt(self) -> Dd {
        let s = fp::sqrt(self.hi);
        if s == 0.0 {
            return DD_ZERO;
        }
        let remainder = self.add(Dd::from_product(s, s).neg());
        let correction = (remainder.hi + remainder.lo) / (2.0 * s);
        let (hi, lo) = quick_two_sum(s, correction);
        Dd { hi, lo }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.hi + self.lo
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_is_tracked() {
        // (1 + h)(1 - h) - 1 = -h^2 exactly for h = 2^-30; the residue sits
        // far below one ulp of the leading term.
        let h = (2.0f64).powi(-30);
        let exact = Dd::from_product(1.0 + h, 1.0 - h).add(Dd::from_f64(-1.0));
        assert_eq!(exact.value(), -h * h);
    }

    #[test]
    fn division_round_trip() {
        let x = Dd::from_product(3.0, 1e-17).add(Dd::from_f64(7.0));
        let y = Dd::from_f64(1.3);
        let back = x.div(y).mul(y);
        assert!((back.value() - x.value()).abs() < 1e-15);
        assert!((back.add(x.neg()).value()).abs() < 1e-20);
    }

    #[test]
    fn sqrt_refines_beyond_f64() {
        let v = Dd::from_f64(2.0);
        let root = v.sqrt();
        let square = root.mul(root);
        let residual = square.add(v.neg());
        assert!(residual.value().abs() < 1e-31);
    }
}
