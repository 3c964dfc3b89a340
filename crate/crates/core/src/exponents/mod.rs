//! Exact big-rational verification of the exponent identities,
//! interpolations, and condition predicates that assemble the final
//! mean-square bounds.

mod expvec;
mod qnu;
mod rat;
mod registry;
mod theorem2;

pub use expvec::{compare_bounds, ExponentVector, PureT, Regime, Var};
pub use qnu::{a_of_q, b_of_q, holder_interpolate, q_nu, solve_theta, solve_theta_for_lhs};
pub use rat::{Rat, RatError};
pub use registry::{registry, verify_all, verify_identity, Identity, IdentityOutcome};
pub use theorem2::{
    cond_6_6_log_exponent, cond_6_6_t_exponent, theorem2_case_eval, BoundTerm, CaseReport,
    ConditionOutcome, ConditionParams, Part,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExponentsError {
    #[error("nu = {0} is below the domain of q_nu")]
    NuTooSmall(u32),
    #[error("{func}(q) has a pole at q = {at}")]
    Pole { func: &'static str, at: Rat },
    #[error("theta = {0} outside [0, 1]")]
    ThetaOutOfRange(Rat),
    #[error("exponents must be positive")]
    NonPositiveExponent,
    #[error("degenerate interpolation system")]
    DegenerateSystem,
    #[error("variable {0} has no regime assignment")]
    UnboundVariable(&'static str),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("invalid parameter {name} = {value}")]
    InvalidParam { name: &'static str, value: Rat },
    #[error(transparent)]
    Rat(#[from] RatError),
}
