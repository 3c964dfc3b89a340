//! Critical-line zeta evaluation by Riemann-Siegel and Euler-Maclaurin,
//! and the mean-square functionals built on top of them.

mod em;
mod meansq;
mod rs;
mod tables;
mod theta;

pub use em::zeta_em;
pub(crate) use em::zeta_em_fast;
pub use meansq::{
    envelope_reference, local_main_average, local_mean_i, local_mean_i_with, mean_square_e,
    mean_square_e_with, node_floor, remark_identity_sides, MeanSquareKind, MeanSquareResult, Stack,
};
pub use rs::{zeta_rs, RS_MIN_T};
pub use theta::theta_dd;

use crate::CReal;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ZetaError {
    #[error("non-finite input")]
    NonFiniteInput,
    #[error("{what}; got {value}")]
    Domain { what: &'static str, value: f64 },
    #[error("riemann_siegel needs t >= 2 pi (main sum length >= 1); got t = {t}")]
    MethodDomain { t: f64 },
    #[error("|t| = {t} beyond the supported range (1e7)")]
    AboveSupportedRange { t: f64 },
    #[error("node count {got} below the resolution floor; need at least {required}")]
    NodesBelowFloor { required: u64, got: u64 },
}

/// Evaluation method tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Method {
    RiemannSiegel,
    EulerMaclaurin,
}

impl Method {
    pub fn label(self) -> &'static str {
        match self {
            Method::RiemannSiegel => "riemann_siegel",
            Method::EulerMaclaurin => "euler_maclaurin",
        }
    }
}

/// One critical-line evaluation.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ZetaPoint {
    pub t: f64,
    pub value: CReal,
    pub method: Method,
    pub error_estimate: f64,
}

/// `zeta(1/2 + it)` by the chosen method. Negative ordinates go through
/// the conjugation path `zeta(1/2 - it) = conj(zeta(1/2 + it))` on the same
/// code, so evenness of the modulus is exact.
pub fn zeta_half_line(t: f64, method: Method) -> Result<ZetaPoint, ZetaError> {
    if !t.is_finite() {
        return Err(ZetaError::NonFiniteInput);
    }
    let ta = t.abs();
    if ta > 1e7 {
        return Err(ZetaError::AboveSupportedRange { t: ta });
    }
    let (value, error_estimate) = match method {
        Method::RiemannSiegel => {
            if ta < RS_MIN_T {
                return Err(ZetaError::MethodDomain { t: ta });
            }
            zeta_rs(ta)
        }
        Method::EulerMaclaurin => zeta_em(ta),
    };
    let value = if t < 0.0 { value.conj() } else { value };
    Ok(ZetaPoint { t, value, method, error_estimate })
}
