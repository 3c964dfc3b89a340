//! The phase-geometry functions `omega`, its `u`-derivatives, and `phi`.

use super::ExpSumError;
use crate::scalar::Scalar;

/// Coefficient of the `k^(-3/2) l^3` term in the expansion
/// `omega(k, l) = k^(1/2) l + c k^(-3/2) l^3 + ...`; from the Taylor
/// expansion of `((1+x)^(3/2) - (1-x)^(3/2))/3` at `x = l/k` the cubic
/// coefficient is `2 * binom(3/2, 3) / 3 = -1/24`. The next term is
/// `-l^5 k^(-7/2) / 128`.
pub const OMEGA_EXPANSION_C: f64 = -1.0 / 24.0;

/// `omega(k, l) = ((k+l)^(3/2) - (k-l)^(3/2)) / 3` for `k >= l >= 0`.
pub fn omega<S: Scalar>(k: S, l: S) -> Result<S, ExpSumError> {
    if !(k.to_f64().is_finite() && l.to_f64().is_finite()) {
        return Err(ExpSumError::NonFiniteInput);
    }
    if l < S::ZERO || l > k {
        return Err(ExpSumError::OmegaDomain { k: k.to_f64(), l: l.to_f64() });
    }
    let p = S::from_f64(1.5);
    Ok(((k + l).powf(p) - (k - l).powf(p)) / S::from_f64(3.0))
}

/// `d^j/du^j omega(u, l)` for `j = 0, 1, 2`; needs `u > l > 0` for the
/// derivatives (`j = 0` falls back to [`omega`]'s domain `u >= l >= 0`).
pub fn omega_deriv<S: Scalar>(u: S, l: S, j: u8) -> Result<S, ExpSumError> {
    match j {
        0 => omega(u, l),
        1 | 2 => {
            if !(u > l && l > S::ZERO) {
                return Err(ExpSumError::OmegaDomain { k: u.to_f64(), l: l.to_f64() });
            }
            let half = S::from_f64(0.5);
            if j == 1 {
                Ok(((u + l).powf(half) - (u - l).powf(half)) / S::from_f64(2.0))
            } else {
                Ok(((u + l).powf(-half) - (u - l).powf(-half)) / S::from_f64(4.0))
            }
        }
        _ => Err(ExpSumError::DerivativeOrder(j)),
    }
}

/// `phi(u, l) = u - sqrt(u^2 - l^2)`, evaluated in the cancellation-free
/// form `l^2 / (u + sqrt(u^2 - l^2))`.
pub fn phi<S: Scalar>(u: S, l: S) -> Result<S, ExpSumError> {
    if l < S::ZERO || u < l {
        return Err(ExpSumError::PhiDomain { u: u.to_f64(), l: l.to_f64() });
    }
    if u == S::ZERO && l == S::ZERO {
        return Ok(S::ZERO);
    }
    let root = (u * u - l * l).sqrt();
    Ok(l * l / (u + root))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_vanishes_at_l_zero() {
        for k in [0.5, 1.0, 7.0, 123.0] {
            assert_eq!(omega(k, 0.0).unwrap(), 0.0);
        }
    }

    #[test]
    fn omega_reference_value() {
        // (8^(3/2) - 2^(3/2))/3
        let got: f64 = omega(5.0, 3.0).unwrap();
        assert!((got - 6.599663291074444).abs() < 1e-12, "got {got}");
    }

    #[test]
    fn omega_domain_error() {
        assert!(matches!(omega(3.0, 5.0), Err(ExpSumError::OmegaDomain { .. })));
    }

    #[test]
    fn expansion_constant_is_minus_one_24th() {
        // |omega(100, 2) - (sqrt(100)*2 - 2^3/(24*100^(3/2)))| < 10*2^5*100^(-7/2)
        let k: f64 = 100.0;
        let l: f64 = 2.0;
        let leading = k.sqrt() * l + OMEGA_EXPANSION_C * l.powi(3) / k.powf(1.5);
        let diff = (omega(k, l).unwrap() - leading).abs();
        assert!(diff < 10.0 * l.powi(5) * k.powf(-3.5), "diff {diff:e}");
        // and the next-order model (-l^5 k^(-7/2) / 128) captures it
        let next = l.powi(5) * k.powf(-3.5) / 128.0;
        assert!((diff - next).abs() < next * 0.05);
    }

    #[test]
    fn derivatives_match_finite_differences() {
        let (u, l) = (5.0f64, 3.0f64);
        let h = 1e-5;
        let d1 = (omega(u + h, l).unwrap() - omega(u - h, l).unwrap()) / (2.0 * h);
        assert!((d1 - omega_deriv(u, l, 1).unwrap()).abs() < 1e-8);
        let d2 =
            (omega(u + h, l).unwrap() - 2.0 * omega(u, l).unwrap() + omega(u - h, l).unwrap())
                / (h * h);
        assert!((d2 - omega_deriv(u, l, 2).unwrap()).abs() < 1e-5);
    }

    #[test]
    fn deriv_reference_values() {
        let d1: f64 = omega_deriv(5.0, 3.0, 1).unwrap();
        let d2: f64 = omega_deriv(5.0, 3.0, 2).unwrap();
        assert!((d1 - 0.7071067811865475).abs() < 1e-14);
        assert!((d2 - -0.08838834764831844).abs() < 1e-15);
    }

    #[test]
    fn deriv_domain_and_order() {
        assert!(omega_deriv(3.0, 3.0, 1).is_err());
        assert!(omega_deriv(3.0, 0.0, 2).is_err());
        assert!(matches!(omega_deriv(5.0, 3.0, 3), Err(ExpSumError::DerivativeOrder(3))));
        // j = 0 delegates to omega, which allows u = l
        assert!(omega_deriv(3.0, 3.0, 0).is_ok());
    }

    #[test]
    fn phi_trivial_values() {
        assert_eq!(phi(3.0, 3.0).unwrap(), 3.0);
        assert_eq!(phi(5.0, 3.0).unwrap(), 1.0);
        assert!(phi(2.0, 3.0).is_err());
    }

    #[test]
    fn phi_algebraic_identity_generic_scalar() {
        // phi(u, l) * (u + sqrt(u^2 - l^2)) = l^2, both precisions
        fn check<S: Scalar>(tol: S) {
            let mut state = 0x9E3779B97F4A7C15u64;
            let mut next = move || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (state >> 11) as f64 / (1u64 << 53) as f64
            };
            for _ in 0..100 {
                let l = S::from_f64(next() * 10.0);
                let u = l + S::from_f64(next() * 20.0 + 1e-3);
                let p = phi(u, l).unwrap();
                let lhs = p * (u + (u * u - l * l).sqrt());
                let rel = ((lhs - l * l) / (l * l + S::from_f64(1e-30))).abs();
                assert!(rel < tol);
            }
        }
        check::<f64>(1e-12);
        check::<f32>(1e-5);
    }
}
