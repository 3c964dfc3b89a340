//! Phase functions `F` with derivative access `F^(r)`, `r = 0..5`.

use std::fmt;
use std::sync::Arc;

use super::ExpSumError;

/// A custom phase given by a closure `(r, x) -> F^(r)(x)`.
pub struct CustomPhase {
    pub label: String,
    pub eval: Box<dyn Fn(u8, f64) -> f64 + Send + Sync>,
}

impl fmt::Debug for CustomPhase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CustomPhase({})", self.label)
    }
}

/// The phase of the exponential sums: `log x`, `log x - b M^2 x^2 / (8T)`,
/// or a caller-supplied table of derivatives.
#[derive(Clone, Debug)]
pub enum PhaseFunction {
    PureLog,
    /// `F(x) = log(x) - b M^2 x^2 / (8T)`; `m` and `t` are the `M` and `T`
    /// entering the phase itself (usually the sum's own parameters).
    LogMinusQuadratic { b: i64, m: f64, t: f64 },
    Custom(Arc<CustomPhase>),
}

impl PhaseFunction {
    /// Pure-log derivative `(-1)^(r-1) (r-1)! / x^r` for `r >= 1`.
    fn log_deriv(r: u8, x: f64) -> f64 {
        debug_assert!(r >= 1);
        let mut fact = 1.0;
        for i in 1..r {
            fact *= f64::from(i);
        }
        let sign = if r % 2 == 1 { 1.0 } else { -1.0 };
        sign * fact / x.powi(i32::from(r))
    }

    /// `F^(r)(x)` for `r = 0..=5`.
    pub fn deriv(&self, r: u8, x: f64) -> Result<f64, ExpSumError> {
        if r > 5 {
            return Err(ExpSumError::DerivativeOrder(r));
        }
        if !(x.is_finite() && x > 0.0) {
            return Err(ExpSumError::NonFiniteInput);
        }
        Ok(match self {
            PhaseFunction::PureLog => {
                if r == 0 {
                    x.ln()
                } else {
                    Self::log_deriv(r, x)
                }
            }
            PhaseFunction::LogMinusQuadratic { b, m, t } => {
                let coeff = *b as f64 * m * m / (8.0 * t);
                match r {
                    0 => x.ln() - coeff * x * x,
                    1 => 1.0 / x - 2.0 * coeff * x,
                    2 => -1.0 / (x * x) - 2.0 * coeff,
                    _ => Self::log_deriv(r, x),
                }
            }
            PhaseFunction::Custom(c) => (c.eval)(r, x),
        })
    }

    /// The same phase shifted by a constant (exercises cancellation of
    /// constants in phase differences).
    pub fn plus_constant(&self, c: f64) -> PhaseFunction {
        let inner = self.clone();
        PhaseFunction::Custom(Arc::new(CustomPhase {
            label: format!("{inner:?} + {c}"),
            eval: Box::new(move |r, x| {
                let base = inner.deriv(r, x).expect("base phase evaluates");
                if r == 0 {
                    base + c
                } else {
                    base
                }
            }),
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Central finite differences of `F^(r-1)` vs `F^(r)` on the working
    /// interval, per the declared phase invariant.
    fn check_derivative_chain(f: &PhaseFunction) {
        let h = 1e-6;
        for i in 0..20 {
            let x = 1.0 / 3.0 + (3.0 - 1.0 / 3.0) * (f64::from(i) + 0.5) / 20.0;
            for r in 1..=5u8 {
                let fd = (f.deriv(r - 1, x + h).unwrap() - f.deriv(r - 1, x - h).unwrap())
                    / (2.0 * h);
                let an = f.deriv(r, x).unwrap();
                let rel = (fd - an).abs() / an.abs().max(1e-8);
                assert!(rel < 1e-6, "r={r} x={x}: fd {fd} vs {an}");
            }
        }
    }

    #[test]
    fn pure_log_derivatives_match_finite_differences() {
        check_derivative_chain(&PhaseFunction::PureLog);
    }

    #[test]
    fn quadratic_phase_derivatives_match_finite_differences() {
        check_derivative_chain(&PhaseFunction::LogMinusQuadratic { b: 1, m: 3.0, t: 27.0 });
        check_derivative_chain(&PhaseFunction::LogMinusQuadratic { b: 2, m: 10.0, t: 50.0 });
    }

    #[test]
    fn b_zero_degenerates_to_pure_log() {
        let f = PhaseFunction::LogMinusQuadratic { b: 0, m: 40.0, t: 300.0 };
        for r in 0..=5u8 {
            for x in [0.4, 1.0, 2.5] {
                assert_eq!(f.deriv(r, x).unwrap(), PhaseFunction::PureLog.deriv(r, x).unwrap());
            }
        }
    }

    #[test]
    fn order_above_five_rejected() {
        assert!(matches!(
            PhaseFunction::PureLog.deriv(6, 1.0),
            Err(ExpSumError::DerivativeOrder(6))
        ));
    }
}
