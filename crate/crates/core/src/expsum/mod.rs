//! The two-variable exponential sums: `S_F`, the log-ratio sum `S_*`, the
//! Gaussian-weighted pair sum `G+`, and the single-row ratio used to probe
//! the exponent-pair bound. Every phase is reduced modulo 1 in
//! double-double arithmetic before the trig call.

mod conditions;
mod geometry;
mod phase;

pub use conditions::{condition_6_3_expression, condition_report, ConditionCheck, ConditionReport};
pub use geometry::{omega, omega_deriv, phi, OMEGA_EXPANSION_C};
pub use phase::{CustomPhase, PhaseFunction};

use crate::dd::{e_of, Dd};
use crate::kahan::chunked_sum_complex;
use crate::CReal;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExpSumError {
    #[error("non-finite input")]
    NonFiniteInput,
    #[error("omega(k, l) needs k >= l >= 0; got k = {k}, l = {l}")]
    OmegaDomain { k: f64, l: f64 },
    #[error("phi(u, l) needs u >= l >= 0; got u = {u}, l = {l}")]
    PhiDomain { u: f64, l: f64 },
    #[error("derivative order {0} not available (r = 0..5)")]
    DerivativeOrder(u8),
    #[error("invalid sum parameters: {0}")]
    InvalidParams(String),
    #[error("phase argument {x} outside [1/3, 3]")]
    PhaseDomain { x: f64 },
    #[error("m - h = {0} <= 0 in a log-ratio sum")]
    NonPositiveRatio(i64),
    #[error("w_h ratio needs 1 <= h < M1; got h = {h}, M1 = {m1}")]
    WhDomain { h: i64, m1: f64 },
    #[error("G+ needs t >= 8 pi and delta >= 1; got t = {t}, delta = {delta}")]
    GPlusDomain { t: f64, delta: f64 },
    #[error("condition constant C_{index} = {value} must be >= 2")]
    InvalidConstant { index: usize, value: f64 },
}

/// Parameters `(T; H, H1; M, M1)` of the sum `S_F`, validated against
/// `H/2 <= H1 <= H` and `M/2 <= M1 <= M`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ExpSumParams {
    pub t: f64,
    pub h: f64,
    pub h1: f64,
    pub m: f64,
    pub m1: f64,
}

impl ExpSumParams {
    pub fn new(t: f64, h: f64, h1: f64, m: f64, m1: f64) -> Result<Self, ExpSumError> {
        for v in [t, h, h1, m, m1] {
            if !v.is_finite() {
                return Err(ExpSumError::NonFiniteInput);
            }
        }
        if t <= 0.0 || m <= 0.0 || h < 0.0 {
            return Err(ExpSumError::InvalidParams(format!(
                "need T > 0, M > 0, H >= 0; got T = {t}, M = {m}, H = {h}"
            )));
        }
        if !(h / 2.0 <= h1 && h1 <= h) {
            return Err(ExpSumError::InvalidParams(format!(
                "need H/2 <= H1 <= H; got H = {h}, H1 = {h1}"
            )));
        }
        if !(m / 2.0 <= m1 && m1 <= m) {
            return Err(ExpSumError::InvalidParams(format!(
                "need M/2 <= M1 <= M; got M = {m}, M1 = {m1}"
            )));
        }
        Ok(ExpSumParams { t, h, h1, m, m1 })
    }
}

/// A finished sum: value and the number of summed terms.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SumValue {
    pub value: CReal,
    pub term_count: u64,
}

impl SumValue {
    const EMPTY: SumValue = SumValue { value: CReal::new(0.0, 0.0), term_count: 0 };
}

/// Integers in the half-open real interval `(lo, hi]`.
fn int_range(lo: f64, hi: f64) -> std::ops::RangeInclusive<i64> {
    let first = lo.floor() as i64 + 1;
    let last = hi.floor() as i64;
    first..=last
}

fn range_len(r: &std::ops::RangeInclusive<i64>) -> u64 {
    if r.end() < r.start() {
        0
    } else {
        (r.end() - r.start() + 1) as u64
    }
}

/// `S_F(T; H, H1; M, M1) = sum_{H1 < h <= H} sum_{M1 < m <= M}
/// e(T F((m+h)/M) - T F((m-h)/M))`.
///
/// For the log phases the difference `T(F((m+h)/M) - F((m-h)/M))` collapses
/// to `T(log(m+h) - log(m-h))` plus, for the quadratic perturbation with
/// matching `(M, T)`, the exact half-integer `-b m h / 2`; both paths keep
/// the phase in double-double until the final reduction.
pub fn s_f(params: &ExpSumParams, f: &PhaseFunction) -> Result<SumValue, ExpSumError> {
    let hs = int_range(params.h1, params.h);
    let ms = int_range(params.m1, params.m);
    let (nh, nm) = (range_len(&hs), range_len(&ms));
    if nh == 0 || nm == 0 {
        return Ok(SumValue::EMPTY);
    }
    let (h_max, m_min, m_max) = (*hs.end(), *ms.start(), *ms.end());
    // phase domain (m +- h)/M within [1/3, 3]
    let x_hi = (m_max + h_max) as f64 / params.m;
    let x_lo = (m_min - h_max) as f64 / params.m;
    if x_lo < 1.0 / 3.0 - 1e-12 {
        return Err(ExpSumError::PhaseDomain { x: x_lo });
    }
    if x_hi > 3.0 + 1e-12 {
        return Err(ExpSumError::PhaseDomain { x: x_hi });
    }

    enum Path<'a> {
        LogExact { half_parity_b: i64 },
        Generic(&'a PhaseFunction),
    }
    let path = match f {
        PhaseFunction::PureLog => Path::LogExact { half_parity_b: 0 },
        PhaseFunction::LogMinusQuadratic { b, m, t }
            if (m - params.m).abs() <= 1e-12 * params.m
                && (t - params.t).abs() <= 1e-12 * params.t =>
        {
            Path::LogExact { half_parity_b: *b }
        }
        other => Path::Generic(other),
    };

    let t = params.t;
    let m_scale = params.m;
    let h0 = *hs.start();
    let total = (nh * nm) as usize;
    let value = chunked_sum_complex(total, |idx| {
        let h = h0 + (idx as u64 / nm) as i64;
        let m = m_min + (idx as u64 % nm) as i64;
        match &path {
            Path::LogExact { half_parity_b } => {
                let phase = Dd::from_f64((m + h) as f64)
                    .ln()
                    .sub(Dd::from_f64((m - h) as f64).ln())
                    .mul_f64(t);
                let z = e_of(phase);
                if half_parity_b * m * h % 2 != 0 {
                    -z
                } else {
                    z
                }
            }
            Path::Generic(f) => {
                let f1 = f.deriv(0, (m + h) as f64 / m_scale).expect("phase evaluates");
                let f2 = f.deriv(0, (m - h) as f64 / m_scale).expect("phase evaluates");
                let phase = Dd::from_f64(t).mul_f64(f1).sub(Dd::from_f64(t).mul_f64(f2));
                e_of(phase)
            }
        }
    });
    Ok(SumValue { value, term_count: nh * nm })
}

/// `S_*(T; U; M, M1) = sum_{0 < h <= (e^(1/U)-1) M/2} sum_{M1 < m <= M}
/// ((m+h)/(m-h))^(2 pi i T)`.
pub fn s_star(t: f64, u: f64, m: f64, m1: f64) -> Result<SumValue, ExpSumError> {
    if !(t.is_finite() && u.is_finite() && m.is_finite() && m1.is_finite()) {
        return Err(ExpSumError::NonFiniteInput);
    }
    if u < 1.0 {
        return Err(ExpSumError::InvalidParams(format!("need U >= 1, got {u}")));
    }
    if !(m / 2.0 <= m1 && m1 <= m) {
        return Err(ExpSumError::InvalidParams(format!(
            "need M/2 <= M1 <= M; got M = {m}, M1 = {m1}"
        )));
    }
    let h_hi = (1.0 / u).exp_m1() * m / 2.0;
    let hs = int_range(0.0, h_hi);
    let ms = int_range(m1, m);
    let (nh, nm) = (range_len(&hs), range_len(&ms));
    if nh == 0 || nm == 0 {
        return Ok(SumValue::EMPTY);
    }
    if *ms.start() - *hs.end() <= 0 {
        return Err(ExpSumError::NonPositiveRatio(*ms.start() - *hs.end()));
    }
    // x^(2 pi i T) = e(T log x)
    let m_min = *ms.start();
    let value = chunked_sum_complex((nh * nm) as usize, |idx| {
        let h = 1 + (idx as u64 / nm) as i64;
        let m = m_min + (idx as u64 % nm) as i64;
        let phase = Dd::from_f64((m + h) as f64)
            .ln()
            .sub(Dd::from_f64((m - h) as f64).ln())
            .mul_f64(t);
        e_of(phase)
    });
    Ok(SumValue { value, term_count: nh * nm })
}

/// `G+(t, Delta)`: sum over integer pairs `m n <= t/(2 pi)` with
/// `0 < Delta log(m/n) <= log t` of
/// `(m/n)^(it) exp(-(Delta log(m/n)/2)^2) / (sqrt(mn) log(m/n))`.
pub fn g_plus(t: f64, delta: f64) -> Result<SumValue, ExpSumError> {
    if !(t.is_finite() && delta.is_finite()) {
        return Err(ExpSumError::NonFiniteInput);
    }
    if t < 8.0 * std::f64::consts::PI || delta < 1.0 {
        return Err(ExpSumError::GPlusDomain { t, delta });
    }
    let lim = t / (2.0 * std::f64::consts::PI);
    let log_t = t.ln();
    let mut value = CReal::new(0.0, 0.0);
    let mut count = 0u64;
    let m_max = lim.floor() as i64;
    for m in 1..=m_max {
        let n_max = (lim / m as f64).floor() as i64;
        for n in 1..=n_max {
            let lr_dd = Dd::from_f64(m as f64).ln().sub(Dd::from_f64(n as f64).ln());
            let lr = lr_dd.to_f64();
            if !(delta * lr > 0.0 && delta * lr <= log_t) {
                continue;
            }
            // (m/n)^(it) = exp(i t log(m/n)); reduce (t lr)/(2 pi) mod 1
            let angle = e_of(lr_dd.mul_f64(t).div(Dd::TWO_PI));
            let amp = (-(delta * lr / 2.0).powi(2)).exp() / (((m * n) as f64).sqrt() * lr);
            value += angle * amp;
            count += 1;
        }
    }
    Ok(SumValue { value, term_count: count })
}

/// `|sum_{M1 < m <= M} ((m+h)/(m-h))^(2 pi i T)| / (hT)^(2/7)`, the
/// empirical constant of the exponent-pair bound for a single `h`-row.
pub fn w_h_ratio(t: f64, m: f64, m1: f64, h: i64) -> Result<f64, ExpSumError> {
    if !(t.is_finite() && m.is_finite() && m1.is_finite()) {
        return Err(ExpSumError::NonFiniteInput);
    }
    if h < 1 || (h as f64) >= m1 {
        return Err(ExpSumError::WhDomain { h, m1 });
    }
    let ms = int_range(m1, m);
    if range_len(&ms) == 0 {
        return Ok(0.0);
    }
    let mut sum = CReal::new(0.0, 0.0);
    for mm in ms {
        let phase = Dd::from_f64((mm + h) as f64)
            .ln()
            .sub(Dd::from_f64((mm - h) as f64).ln())
            .mul_f64(t);
        sum += e_of(phase);
    }
    Ok(sum.norm() / (h as f64 * t).powf(2.0 / 7.0))
}
