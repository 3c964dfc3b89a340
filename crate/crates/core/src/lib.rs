//! A desk-scale laboratory around the mean square of `|zeta(1/2 + it)|`:
//! critical-line evaluation by two independent methods, the mean-square
//! functionals `E(T)` and `I(t, U)`, two-variable exponential sums with
//! brute-force self-verification, exhaustive enumeration of the first
//! spacing systems, a numerical check of a modified double large sieve
//! inequality, and exact big-rational verification of the exponent
//! calculus that assembles the final bounds.
//!
//! Floating-point kernels that are precision-agnostic (the phase-geometry
//! functions, quadrature, compensated reduction, the sieve kernels) are
//! generic over [`Scalar`]; the zeta evaluators are `f64`-only because they
//! lean on double-double compensation internally.

pub mod dd;
pub mod expsum;
pub mod exponents;
pub mod kahan;
pub mod quad;
pub mod scalar;
pub mod sieve;
pub mod spacing;
pub mod zeta;

pub use scalar::Scalar;

/// The concrete scalar used by every shipped evaluator and by the CLI.
pub type Real = f64;

/// Complex value over [`Real`].
pub type CReal = num_complex::Complex<Real>;
