//! Double-double ("compensated") arithmetic.
//!
//! Phases of the form `t * log n` reach ~1e7 while the final answer needs
//! the phase modulo 1 to ~1e-12, which plain `f64` cannot deliver once
//! `t > 1e4`. A double-double value carries ~31 significant digits, enough
//! for every phase reduction in this crate and for the >= 30-digit test
//! oracles.

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    Dd { hi: s, lo: err }
}

#[inline]
fn fast_two_sum(a: f64, b: f64) -> Dd {
    // requires |a| >= |b|
    let s = a + b;
    let err = b - (s - a);
    Dd { hi: s, lo: err }
}

#[inline]
fn two_prod(a: f64, b: f64) -> Dd {
    let p = a * b;
    let err = a.mul_add(b, -p);
    Dd { hi: p, lo: err }
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub const PI: Dd = Dd { hi: 3.141592653589793, lo: 1.2246467991473532e-16 };
    pub const TWO_PI: Dd = Dd { hi: 6.283185307179586, lo: 2.4492935982947064e-16 };
    pub const LN_2PI: Dd = Dd { hi: 1.8378770664093456, lo: -7.756588316134483e-17 };
    pub const LN_2: Dd = Dd { hi: 0.6931471805599453, lo: 2.3190468138462996e-17 };
    pub const PI_OVER_8: Dd = Dd { hi: 0.39269908169872414, lo: 1.5308084989341915e-17 };
    /// Euler-Mascheroni constant (0.57721566490153286060651209008240243...).
    pub const EULER_GAMMA: Dd = Dd { hi: 0.5772156649015329, lo: -4.942915152430645e-18 };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, other: Dd) -> Dd {
        let s = two_sum(self.hi, other.hi);
        let lo = s.lo + self.lo + other.lo;
        fast_two_sum(s.hi, lo)
    }

    #[inline]
    pub fn add_f64(self, other: f64) -> Dd {
        let s = two_sum(self.hi, other);
        fast_two_sum(s.hi, s.lo + self.lo)
    }

    #[inline]
    pub fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    #[inline]
    pub fn mul(self, other: Dd) -> Dd {
        let p = two_prod(self.hi, other.hi);
        let lo = p.lo + self.hi * other.lo + self.lo * other.hi;
        fast_two_sum(p.hi, lo)
    }

    #[inline]
    pub fn mul_f64(self, other: f64) -> Dd {
        let p = two_prod(self.hi, other);
        fast_two_sum(p.hi, p.lo + self.lo * other)
    }

    #[inline]
    pub fn div(self, other: Dd) -> Dd {
        let q0 = self.hi / other.hi;
        let r = self.sub(other.mul_f64(q0));
        let q1 = r.hi / other.hi;
        let r2 = r.sub(other.mul_f64(q1));
        let q2 = r2.hi / other.hi;
        fast_two_sum(q0, q1).add_f64(q2)
    }

    #[inline]
    pub fn recip(self) -> Dd {
        Dd::ONE.div(self)
    }

    pub fn sqrt(self) -> Dd {
        if self.hi == 0.0 {
            return Dd::ZERO;
        }
        let s0 = self.hi.sqrt();
        let e = self.sub(two_prod(s0, s0)).to_f64() / (2.0 * s0);
        fast_two_sum(s0, e)
    }

    /// `exp(self)`; intended range `|self| <= ~40`.
    pub fn exp(self) -> Dd {
        let k = (self.hi / std::f64::consts::LN_2).round();
        let r = self.sub(Dd::LN_2.mul_f64(k));
        // Horner sum of exp(r), |r| <= ln(2)/2; the 1/i! factors enter by
        // exact double-double division so no coefficient is pre-rounded
        let mut p = Dd::ONE;
        for i in (1..=24u32).rev() {
            p = p.mul(r).div(Dd::from_f64(f64::from(i))).add(Dd::ONE);
        }
        let scale = f64::powi(2.0, k as i32);
        Dd { hi: p.hi * scale, lo: p.lo * scale }
    }

    /// Natural log of a positive value.
    pub fn ln(self) -> Dd {
        debug_assert!(self.hi > 0.0);
        let y0 = self.hi.ln();
        let t = self.mul(Dd::from_f64(-y0).exp());
        let d = t.sub(Dd::ONE);
        // ln(1 + d) with d ~ 1e-16
        let d2 = d.mul(d).mul_f64(0.5);
        Dd::from_f64(y0).add(d).sub(d2)
    }

    /// Fractional part reduced to `[0, 1)` (accurate even when `hi` is large,
    /// as long as `|hi| < 2^52`).
    pub fn fract(self) -> f64 {
        debug_assert!(self.hi.abs() < 4.5e15);
        let f = self.hi.floor();
        let mut r = two_sum(self.hi - f, self.lo);
        if r.hi >= 1.0 {
            r = r.add_f64(-1.0);
        } else if r.hi < 0.0 {
            r = r.add_f64(1.0);
        }
        let x = r.to_f64();
        if x >= 1.0 {
            x - 1.0
        } else if x < 0.0 {
            x + 1.0
        } else {
            x
        }
    }
}

/// `e(x) = exp(2 pi i x)` for a phase held in double-double, reduced mod 1
/// before the trig call.
#[inline]
pub fn e_of(phase: Dd) -> num_complex::Complex<f64> {
    let frac = phase.fract();
    let (s, c) = (2.0 * std::f64::consts::PI * frac).sin_cos();
    num_complex::Complex::new(c, s)
}
