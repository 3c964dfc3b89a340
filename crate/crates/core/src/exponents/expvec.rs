//! Monomial exponent vectors `T^a M^b H^c U^d (log T)^e (T^eps)` with exact
//! rational exponents.

use super::rat::Rat;
use super::ExponentsError;
use serde::Serialize;
use std::cmp::Ordering;
use std::fmt;

/// Variables a bound expression may carry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Var {
    T,
    M,
    H,
    U,
    LogT,
}

/// A monomial `T^t M^m H^h U^u (log T)^log_t` times the epsilon slot
/// `T^(eps * epsilon)`; multiplication adds the vectors, powers scale them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentVector {
    pub t: Rat,
    pub m: Rat,
    pub h: Rat,
    pub u: Rat,
    pub log_t: Rat,
    pub eps: Rat,
}

impl Default for ExponentVector {
    fn default() -> Self {
        Self::one()
    }
}

impl ExponentVector {
    pub fn one() -> Self {
        ExponentVector {
            t: Rat::zero(),
            m: Rat::zero(),
            h: Rat::zero(),
            u: Rat::zero(),
            log_t: Rat::zero(),
            eps: Rat::zero(),
        }
    }

    pub fn t_pow(e: Rat) -> Self {
        ExponentVector { t: e, ..Self::one() }
    }

    pub fn m_pow(e: Rat) -> Self {
        ExponentVector { m: e, ..Self::one() }
    }

    pub fn h_pow(e: Rat) -> Self {
        ExponentVector { h: e, ..Self::one() }
    }

    pub fn u_pow(e: Rat) -> Self {
        ExponentVector { u: e, ..Self::one() }
    }

    pub fn log_t_pow(e: Rat) -> Self {
        ExponentVector { log_t: e, ..Self::one() }
    }

    pub fn with_eps(mut self, e: Rat) -> Self {
        self.eps = e;
        self
    }

    /// Monomial product: exponents add.
    pub fn mul(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector {
            t: &self.t + &other.t,
            m: &self.m + &other.m,
            h: &self.h + &other.h,
            u: &self.u + &other.u,
            log_t: &self.log_t + &other.log_t,
            eps: &self.eps + &other.eps,
        }
    }

    /// Raise to a rational power: exponents scale.
    pub fn pow(&self, e: &Rat) -> ExponentVector {
        ExponentVector {
            t: &self.t * e,
            m: &self.m * e,
            h: &self.h * e,
            u: &self.u * e,
            log_t: &self.log_t * e,
            eps: &self.eps * e,
        }
    }

    pub fn is_pure_t(&self) -> bool {
        self.m.is_zero() && self.h.is_zero() && self.u.is_zero()
    }

    /// Numeric value at `(t, m, h, u)` with `log t` evaluated in real
    /// arithmetic and the epsilon slot at `eps_value`.
    pub fn eval(&self, t: f64, m: f64, h: f64, u: f64, eps_value: f64) -> f64 {
        let lt = t.ln();
        ((self.t.to_f64() + self.eps.to_f64() * eps_value) * lt
            + self.m.to_f64() * m.ln()
            + self.h.to_f64() * h.ln()
            + self.u.to_f64() * u.ln()
            + self.log_t.to_f64() * lt.ln())
        .exp()
    }

    /// Substitute `M = T^regime.m`, `H = T^regime.h`, `U = T^regime.u`,
    /// collapsing to a pure-T exponent plus a log power. A variable with a
    /// nonzero exponent but no regime entry is an error.
    pub fn reduce(&self, regime: &Regime) -> Result<PureT, ExponentsError> {
        let mut t = self.t.clone();
        for (exp, sub, name) in [
            (&self.m, &regime.m, "M"),
            (&self.h, &regime.h, "H"),
            (&self.u, &regime.u, "U"),
        ] {
            if !exp.is_zero() {
                match sub {
                    Some(r) => t = &t + &(exp * r),
                    None => return Err(ExponentsError::UnboundVariable(name)),
                }
            }
        }
        Ok(PureT { t, log_t: self.log_t.clone(), eps: self.eps.clone() })
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (e, name) in [
            (&self.t, "T"),
            (&self.m, "M"),
            (&self.h, "H"),
            (&self.u, "U"),
            (&self.log_t, "logT"),
        ] {
            if !e.is_zero() {
                if any {
                    write!(f, " ")?;
                }
                write!(f, "{name}^({e})")?;
                any = true;
            }
        }
        if !self.eps.is_zero() {
            if any {
                write!(f, " ")?;
            }
            write!(f, "T^({}eps)", self.eps)?;
            any = true;
        }
        if !any {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// T-exponents assigned to the other variables for a dominance comparison.
#[derive(Clone, Debug, Default)]
pub struct Regime {
    pub m: Option<Rat>,
    pub h: Option<Rat>,
    pub u: Option<Rat>,
}

/// A vector reduced to pure powers of `T` and `log T`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PureT {
    pub t: Rat,
    pub log_t: Rat,
    pub eps: Rat,
}

impl PureT {
    /// Exact ordering as `T -> infinity`: compare `t + eps*eps_value`
    /// exactly, then the log power.
    pub fn cmp_at(&self, other: &PureT, eps_value: &Rat) -> Ordering {
        let a = &self.t + &(&self.eps * eps_value);
        let b = &other.t + &(&other.eps * eps_value);
        a.cmp_rat(&b).then_with(|| self.log_t.cmp_rat(&other.log_t))
    }
}

/// Exact dominance comparison of two bound expressions under a regime.
pub fn compare_bounds(
    e1: &ExponentVector,
    e2: &ExponentVector,
    regime: &Regime,
    eps_value: &Rat,
) -> Result<Ordering, ExponentsError> {
    Ok(e1.reduce(regime)?.cmp_at(&e2.reduce(regime)?, eps_value))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mul_adds_and_pow_scales() {
        let a = ExponentVector::t_pow(Rat::frac(1, 2)).mul(&ExponentVector::m_pow(Rat::int(3)));
        let b = a.pow(&Rat::frac(2, 3));
        assert_eq!(b.t, Rat::frac(1, 3));
        assert_eq!(b.m, Rat::int(2));
    }

    #[test]
    fn pure_t_ordering() {
        let a = ExponentVector::t_pow(Rat::frac(1, 2));
        let b = ExponentVector::t_pow(Rat::frac(1, 3));
        let ord = compare_bounds(&a, &b, &Regime::default(), &Rat::zero()).unwrap();
        assert_eq!(ord, Ordering::Greater);
    }

    #[test]
    fn unbound_variable_rejected() {
        let a = ExponentVector::m_pow(Rat::one());
        let err = a.reduce(&Regime::default()).unwrap_err();
        assert!(matches!(err, ExponentsError::UnboundVariable("M")));
    }

    #[test]
    fn log_breaks_ties() {
        let a = ExponentVector::t_pow(Rat::frac(1, 2)).mul(&ExponentVector::log_t_pow(Rat::int(2)));
        let b = ExponentVector::t_pow(Rat::frac(1, 2));
        let ord = compare_bounds(&a, &b, &Regime::default(), &Rat::zero()).unwrap();
        assert_eq!(ord, Ordering::Greater);
        // a positive epsilon slot outweighs any log power
        let c = b.clone().with_eps(Rat::one());
        let ord2 = compare_bounds(&a, &c, &Regime::default(), &Rat::frac(1, 1000)).unwrap();
        assert_eq!(ord2, Ordering::Less);
    }
}
