//! Brute-force enumeration of the first spacing systems, the printed
//! analytic bounds as evaluable formulas, the L^4/counting identity, and
//! tensor-quadrature moment estimates.

use crate::dd::Dd;
use crate::expsum::omega;
use crate::kahan::KahanSum;
use crate::quad::gauss_legendre;
use crate::CReal;
use serde::Serialize;
use std::collections::BTreeMap;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpacingError {
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("enumeration size {size:e} exceeds the desk-scale cap {cap:e}")]
    TooLarge { size: f64, cap: f64 },
    #[error("system B needs nu (3 or 4); got {0:?}")]
    MissingNu(Option<u32>),
    #[error("nu = {0} beyond the desk-scale enumerator (nu <= 4)")]
    NuTooLarge(u32),
    #[error("bound formula needs nu >= 3")]
    BoundNeedsNu,
    #[error("grid {axis} = {got} below the Nyquist-style floor {required}")]
    GridBelowFloor { axis: &'static str, got: usize, required: usize },
    #[error("coefficient modulus {0} exceeds 1")]
    CoefficientTooLarge(f64),
}

/// A `(K, L, eta, nu, window_constant)` counting problem over
/// `k in (K, 2K]`, `l in (L, 2L]`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SpacingInstance {
    pub k: u64,
    pub l: u64,
    pub eta: f64,
    pub nu: Option<u32>,
    pub window_constant: f64,
}

impl SpacingInstance {
    pub fn new(
        k: u64,
        l: u64,
        eta: f64,
        nu: Option<u32>,
        window_constant: f64,
    ) -> Result<Self, SpacingError> {
        if k < 1 || l < 1 {
            return Err(SpacingError::InvalidInstance("K, L >= 1".into()));
        }
        if !(eta > 0.0 && eta.is_finite()) {
            return Err(SpacingError::InvalidInstance(format!("eta must be positive, got {eta}")));
        }
        if !(window_constant > 0.0 && window_constant.is_finite()) {
            return Err(SpacingError::InvalidInstance(format!(
                "window_constant must be positive, got {window_constant}"
            )));
        }
        // omega(k, l) needs k >= l on every enumerated pair: min k = K + 1,
        // max l = 2L
        if k + 1 < 2 * l {
            return Err(SpacingError::InvalidInstance(format!(
                "ranges admit l > k (K = {k}, L = {l}); omega(k, l) undefined there"
            )));
        }
        if let Some(n) = nu {
            if n < 3 {
                return Err(SpacingError::InvalidInstance("nu >= 3".into()));
            }
        }
        Ok(SpacingInstance { k, l, eta, nu, window_constant })
    }

    fn ks(&self) -> std::ops::RangeInclusive<i64> {
        (self.k as i64 + 1)..=(2 * self.k as i64)
    }

    fn ls(&self) -> std::ops::RangeInclusive<i64> {
        (self.l as i64 + 1)..=(2 * self.l as i64)
    }
}

/// Result of an exact enumeration next to the printed analytic bound.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SolutionCount {
    pub exact: u64,
    pub diagonal: u64,
    pub analytic_bound: f64,
    pub ratio: f64,
}

fn omega_f(k: i64, l: i64) -> f64 {
    omega(k as f64, l as f64).expect("validated k >= l >= 0")
}

/// System A: 8-tuples `(k_1..k_4, l_1..l_4)` with
/// `l1 + l2 = l3 + l4`, `l1 k1 + l2 k2 = l3 k3 + l4 k4`,
/// `|omega(k1,l1) + omega(k2,l2) - omega(k3,l3) - omega(k4,l4)|
///    <= window_constant * eta * sqrt(K) * L`,
/// `diam(k) <= sqrt(eta) K`, `diam(l) <= sqrt(eta) K`.
///
/// The two linear equations are joined by hashing pairs on
/// `(l1 + l2, l1 k1 + l2 k2)`, cutting the (KL)^4 product to pair space.
pub fn count_system_a(inst: &SpacingInstance) -> Result<SolutionCount, SpacingError> {
    let size = ((inst.k * inst.l) as f64).powi(4);
    if size > 1e10 {
        return Err(SpacingError::TooLarge { size, cap: 1e10 });
    }
    let window = inst.window_constant * inst.eta * (inst.k as f64).sqrt() * inst.l as f64;
    let diam_cap = inst.eta.sqrt() * inst.k as f64;

    // pair list bucketed by the linear invariants
    type Pair = (i64, i64, i64, i64); // (k1, l1, k2, l2)
    let mut buckets: HashMap<(i64, i64), Vec<Pair>> = HashMap::new();
    for k1 in inst.ks() {
        for l1 in inst.ls() {
            for k2 in inst.ks() {
                for l2 in inst.ls() {
                    buckets
                        .entry((l1 + l2, l1 * k1 + l2 * k2))
                        .or_default()
                        .push((k1, l1, k2, l2));
                }
            }
        }
    }

    let mut exact = 0u64;
    let mut diagonal = 0u64;
    for pairs in buckets.values() {
        for &(k1, l1, k2, l2) in pairs {
            let w12 = omega_f(k1, l1) + omega_f(k2, l2);
            for &(k3, l3, k4, l4) in pairs {
                let kmin = k1.min(k2).min(k3).min(k4);
                let kmax = k1.max(k2).max(k3).max(k4);
                if (kmax - kmin) as f64 > diam_cap {
                    continue;
                }
                let lmin = l1.min(l2).min(l3).min(l4);
                let lmax = l1.max(l2).max(l3).max(l4);
                if (lmax - lmin) as f64 > diam_cap {
                    continue;
                }
                let w = w12 - omega_f(k3, l3) - omega_f(k4, l4);
                if w.abs() > window {
                    continue;
                }
                exact += 1;
                let left = if (k1, l1) <= (k2, l2) { ((k1, l1), (k2, l2)) } else { ((k2, l2), (k1, l1)) };
                let right = if (k3, l3) <= (k4, l4) { ((k3, l3), (k4, l4)) } else { ((k4, l4), (k3, l3)) };
                if left == right {
                    diagonal += 1;
                }
            }
        }
    }

    let bound = prop7_bound(inst);
    Ok(SolutionCount {
        exact,
        diagonal,
        analytic_bound: bound,
        ratio: exact as f64 / bound,
    })
}

/// System B: `nu`-tuples `(k_i, l_i, u_i)` with `sum u_i l_i = 0`,
/// `|sum_i omega(k_i + u_i, l_i) - omega(k_i, l_i)| <= wc sqrt(K) L eta`,
/// `|u_i| <= L^2/K`. The all-zero `u` stratum contributes exactly
/// `K^nu L^nu` and is reported as `diagonal`.
pub fn count_system_b(inst: &SpacingInstance) -> Result<SolutionCount, SpacingError> {
    let nu = match inst.nu {
        Some(n) if n <= 4 => n as usize,
        Some(n) => return Err(SpacingError::NuTooLarge(n)),
        None => return Err(SpacingError::MissingNu(inst.nu)),
    };
    let u_cap = ((inst.l * inst.l) as f64 / inst.k as f64).floor() as i64;
    let k_count = inst.k as f64;
    let l_count = inst.l as f64;
    let size = (k_count * l_count * (2.0 * u_cap as f64 + 1.0)).powi(nu as i32);
    if size > 1e10 {
        return Err(SpacingError::TooLarge { size, cap: 1e10 });
    }
    // omega(k + u, l) must stay in-domain on the extreme tuple
    let k_min_shifted = inst.k as i64 + 1 - u_cap;
    if k_min_shifted < 2 * inst.l as i64 {
        return Err(SpacingError::InvalidInstance(format!(
            "k + u can drop to {k_min_shifted} < 2L = {}; omega undefined",
            2 * inst.l
        )));
    }

    let window = inst.window_constant * (inst.k as f64).sqrt() * inst.l as f64 * inst.eta;
    let ls: Vec<i64> = inst.ls().collect();
    let ks: Vec<i64> = inst.ks().collect();
    let us: Vec<i64> = (-u_cap..=u_cap).collect();

    // enumerate (l_i, u_i) tuples with sum u_i l_i = 0, then count the
    // k-tuples passing the omega window
    let mut exact = 0u64;
    let mut lu_stack: Vec<(i64, i64)> = Vec::with_capacity(nu);
    fn lu_rec(
        depth: usize,
        nu: usize,
        partial: i64,
        ls: &[i64],
        us: &[i64],
        ks: &[i64],
        window: f64,
        stack: &mut Vec<(i64, i64)>,
        exact: &mut u64,
    ) {
        if depth == nu {
            if partial != 0 {
                return;
            }
            // count k-tuples: the omega increments are independent per
            // coordinate; enumerate with running partial sums
            let mut deltas: Vec<Vec<f64>> = Vec::with_capacity(nu);
            for &(l, u) in stack.iter() {
                deltas.push(
                    ks.iter()
                        .map(|&k| omega_f(k + u, l) - omega_f(k, l))
                        .collect(),
                );
            }
            fn k_rec(depth: usize, acc: f64, deltas: &[Vec<f64>], window: f64, exact: &mut u64) {
                if depth == deltas.len() {
                    if acc.abs() <= window {
                        *exact += 1;
                    }
                    return;
                }
                for &d in &deltas[depth] {
                    k_rec(depth + 1, acc + d, deltas, window, exact);
                }
            }
            k_rec(0, 0.0, &deltas, window, exact);
            return;
        }
        for &l in ls {
            for &u in us {
                stack.push((l, u));
                lu_rec(depth + 1, nu, partial + u * l, ls, us, ks, window, stack, exact);
                stack.pop();
            }
        }
    }
    lu_rec(0, nu, 0, &ls, &us, &ks, window, &mut lu_stack, &mut exact);

    let diagonal = (inst.k * inst.l).pow(nu as u32);
    let bound = prop_4_10_bound(inst, nu as u32);
    Ok(SolutionCount { exact, diagonal, analytic_bound: bound, ratio: exact as f64 / bound })
}

/// Identifiers of the printed bound formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BoundFormula {
    Prop7,
    Prop9,
    Prop10Rhs,
    Prop10PrimeRhs,
}

impl BoundFormula {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "prop7" => Some(BoundFormula::Prop7),
            "prop9" => Some(BoundFormula::Prop9),
            "prop10_rhs" => Some(BoundFormula::Prop10Rhs),
            "prop10prime_rhs" => Some(BoundFormula::Prop10PrimeRhs),
            _ => None,
        }
    }
}

fn prop7_bound(inst: &SpacingInstance) -> f64 {
    let (k, l, eta) = (inst.k as f64, inst.l as f64, inst.eta);
    eta * eta * k.powi(5) + eta * k.powi(3) * l
}

/// The (4.10) count bound `K^nu L^nu (1 + L^(2nu-3)/K^nu
/// + (eta K L) L^(2nu-6)/K^(nu-2))` with the epsilon losses taken as 1.
fn prop_4_10_bound(inst: &SpacingInstance, nu: u32) -> f64 {
    let (k, l, eta) = (inst.k as f64, inst.l as f64, inst.eta);
    let n = nu as i32;
    (k * l).powi(n)
        * (1.0 + l.powi(2 * n - 3) / k.powi(n) + (eta * k * l) * l.powi(2 * n - 6) / k.powi(n - 2))
}

/// The common bracket `1 + L^(2nu-3)/K^nu + (eta K L) L^(2nu-6)/K^(nu-2)`.
fn moment_bracket(k: f64, l: f64, eta: f64, n: i32) -> f64 {
    1.0 + l.powi(2 * n - 3) / k.powi(n) + (eta * k * l) * l.powi(2 * n - 6) / k.powi(n - 2)
}

/// Evaluates the named closed-form bound exactly as printed, with every
/// `K^(0+)`-style epsilon factor taken as 1.
pub fn analytic_bound_formula(
    which: BoundFormula,
    inst: &SpacingInstance,
    nu: Option<u32>,
) -> Result<f64, SpacingError> {
    let (k, l, eta) = (inst.k as f64, inst.l as f64, inst.eta);
    let need_nu = || nu.or(inst.nu).filter(|&n| n >= 3).ok_or(SpacingError::BoundNeedsNu);
    Ok(match which {
        BoundFormula::Prop7 => prop7_bound(inst),
        BoundFormula::Prop9 => {
            let n = need_nu()? as i32;
            let nf = n as f64;
            (1.0 + l.powi(3) / (k * k)).powf(0.5 - 0.5 / nf)
                * moment_bracket(k, l, eta, n).powf(1.0 / (2.0 * nf))
                * (k * l).sqrt()
        }
        BoundFormula::Prop10Rhs => {
            let n = need_nu()? as i32;
            let nf = n as f64;
            let d = 13.0 * nf - 12.0;
            (1.0 + eta * k * k / l).powf(3.0 * (nf - 1.0) / d)
                * (1.0 + l.powi(3) / (k * k)).powf((nf - 1.0) / (2.0 * d))
                * moment_bracket(k, l, eta, n).powf(1.0 / (2.0 * d))
                * (k * l).sqrt()
        }
        BoundFormula::Prop10PrimeRhs => {
            (1.0 + eta * k * l).powf(1.0 / 48.0)
                * (1.0 + eta * k * k / l).powf(5.0 / 24.0)
                * (k * l).sqrt()
        }
    })
}

/// Outcome of the L^4-moment/counting identity.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct L4Identity {
    /// Parseval evaluation of the fourth moment (exact integer).
    pub moment: u64,
    /// Direct count of solutions of the two linear equations.
    pub count: u64,
    /// Tensor-quadrature evaluation of the same moment.
    pub moment_quadrature: f64,
}

impl L4Identity {
    /// Parseval and enumeration must agree exactly; quadrature to 1e-6
    /// relative.
    pub fn verified(&self) -> bool {
        self.moment == self.count
            && (self.moment_quadrature - self.moment as f64).abs()
                <= 1e-6 * (self.moment as f64).max(1.0)
    }
}

/// `moment = int_[0,1]^2 |sum_{k,l} e(l x1 + k l x2)|^4`, via Parseval
/// (frequency multiplicities) and independently via a uniform tensor grid;
/// `count` = solutions of the two linear equations by an `O((KL)^3)`
/// solve-the-last-pair loop.
pub fn l4_count_identity(k_cap: u64, l_cap: u64) -> Result<L4Identity, SpacingError> {
    let size = ((k_cap * l_cap) as f64).powi(2);
    if size > 1e8 {
        return Err(SpacingError::TooLarge { size, cap: 1e8 });
    }
    let inst = SpacingInstance::new(k_cap.max(2 * l_cap), l_cap, 1.0, None, 1.0)?;
    // ranges are built directly; the omega guard in the constructor is not
    // needed here (no omega in this identity), so use raw ranges instead
    let ks: Vec<i64> = ((k_cap as i64 + 1)..=(2 * k_cap as i64)).collect();
    let ls: Vec<i64> = ((l_cap as i64 + 1)..=(2 * l_cap as i64)).collect();
    let _ = inst;

    // Parseval: multiplicities of (l1 + l2, l1 k1 + l2 k2)
    let mut mult: HashMap<(i64, i64), u64> = HashMap::new();
    for &k1 in &ks {
        for &l1 in &ls {
            for &k2 in &ks {
                for &l2 in &ls {
                    *mult.entry((l1 + l2, l1 * k1 + l2 * k2)).or_default() += 1;
                }
            }
        }
    }
    let moment: u64 = mult.values().map(|&c| c * c).sum();

    // independent count: choose (k1,l1,k2,l2,k3,l3), solve for (k4,l4)
    let mut count = 0u64;
    for &k1 in &ks {
        for &l1 in &ls {
            for &k2 in &ks {
                for &l2 in &ls {
                    for &k3 in &ks {
                        for &l3 in &ls {
                            let l4 = l1 + l2 - l3;
                            if l4 < *ls.first().unwrap() || l4 > *ls.last().unwrap() {
                                continue;
                            }
                            let rhs = l1 * k1 + l2 * k2 - l3 * k3;
                            if rhs % l4 != 0 {
                                continue;
                            }
                            let k4 = rhs / l4;
                            if k4 >= *ks.first().unwrap() && k4 <= *ks.last().unwrap() {
                                count += 1;
                            }
                        }
                    }
                }
            }
        }
    }

    let moment_quadrature = l4_moment_quadrature(&ks, &ls, 1.0);
    Ok(L4Identity { moment, count, moment_quadrature })
}

/// Uniform-grid evaluation of `int |sum a e(l x1 + k l x2)|^4` over the unit
/// torus with all coefficients equal to `coeff`; exact for grids beyond the
/// Nyquist floor because the integrand is a trigonometric polynomial.
pub fn l4_moment_quadrature(ks: &[i64], ls: &[i64], coeff: f64) -> f64 {
    let max_l = ls.iter().copied().max().unwrap_or(0);
    let max_kl = ks.iter().copied().max().unwrap_or(0) * max_l;
    let n1 = (4 * max_l + 1) as usize;
    let n2 = (4 * max_kl + 1) as usize;
    let mut outer = KahanSum::new();
    for i1 in 0..n1 {
        let x1 = i1 as f64 / n1 as f64;
        let mut row = KahanSum::new();
        for i2 in 0..n2 {
            let x2 = i2 as f64 / n2 as f64;
            let mut s = CReal::new(0.0, 0.0);
            for &k in ks {
                for &l in ls {
                    let phase = Dd::from_f64(l as f64 * x1).add(Dd::from_f64((k * l) as f64).mul_f64(x2));
                    s += crate::dd::e_of(phase) * coeff;
                }
            }
            row.add(s.norm_sqr() * s.norm_sqr());
        }
        outer.add(row.value() / n2 as f64);
    }
    outer.value() / n1 as f64
}

/// Averaged L^q moment of `sum a_{kl} e(l x1 + k l x2 + omega(k, l) x3)`.
#[derive(Clone, Debug, Serialize)]
pub struct MomentEstimate {
    pub q: f64,
    pub grid: (usize, usize, usize),
    pub value: f64,
    pub coefficients: BTreeMap<(u64, u64), (f64, f64)>,
}

/// Whether the third axis integrates over the spacing box or is pinned to
/// zero (the orthogonality test mode).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum X3Mode {
    Box,
    Disabled,
}

/// Tensor-product averaged `L^q` norm over
/// `[-1,1] x [-1,1] x [-X3, X3]`, `X3 = 1/(eta L sqrt(K))`: uniform grids
/// on the two periodic axes, Gauss-Legendre on the third.
pub fn moment_estimate(
    inst: &SpacingInstance,
    q: f64,
    coefficients: &BTreeMap<(u64, u64), (f64, f64)>,
    grid: (usize, usize, usize),
    x3: X3Mode,
) -> Result<MomentEstimate, SpacingError> {
    if !(q >= 1.0) {
        return Err(SpacingError::InvalidInstance(format!("q >= 1 required, got {q}")));
    }
    let ks: Vec<i64> = inst.ks().collect();
    let ls: Vec<i64> = inst.ls().collect();

    // Nyquist-style floors: 4x the distinct frequencies per axis
    let distinct_l = ls.len();
    let mut kl: Vec<i64> = ks.iter().flat_map(|&k| ls.iter().map(move |&l| k * l)).collect();
    kl.sort_unstable();
    kl.dedup();
    let distinct_kl = kl.len();
    let distinct_omega = ks.len() * ls.len();
    let (n1, n2, n3) = grid;
    if n1 < 4 * distinct_l {
        return Err(SpacingError::GridBelowFloor { axis: "n1", got: n1, required: 4 * distinct_l });
    }
    if n2 < 4 * distinct_kl {
        return Err(SpacingError::GridBelowFloor { axis: "n2", got: n2, required: 4 * distinct_kl });
    }
    if x3 == X3Mode::Box && n3 < 4 * distinct_omega {
        return Err(SpacingError::GridBelowFloor {
            axis: "n3",
            got: n3,
            required: 4 * distinct_omega,
        });
    }

    // per-term data
    struct Term {
        l: f64,
        kl: f64,
        omega: f64,
        a: CReal,
    }
    let mut terms = Vec::with_capacity(ks.len() * ls.len());
    for &k in &ks {
        for &l in &ls {
            let a = match coefficients.get(&(k as u64, l as u64)) {
                Some(&(re, im)) => {
                    let a = CReal::new(re, im);
                    if a.norm() > 1.0 + 1e-12 {
                        return Err(SpacingError::CoefficientTooLarge(a.norm()));
                    }
                    a
                }
                None => CReal::new(1.0, 0.0),
            };
            terms.push(Term { l: l as f64, kl: (k * l) as f64, omega: omega_f(k, l), a });
        }
    }

    let x3_extent = 1.0 / (inst.eta * inst.l as f64 * (inst.k as f64).sqrt());
    let (x3_nodes, x3_weights): (Vec<f64>, Vec<f64>) = match x3 {
        X3Mode::Disabled => (vec![0.0], vec![2.0]),
        X3Mode::Box => {
            let (n, w) = gauss_legendre(n3);
            (n.iter().map(|x| x * x3_extent).collect(), w.to_vec())
        }
    };

    // averaged q-th moment: mean over x1, x2 (uniform, periodic), weighted
    // mean over x3 (GL weights sum to 2)
    let mut total = KahanSum::new();
    for (x3v, w3) in x3_nodes.iter().zip(x3_weights.iter()) {
        let mut plane = KahanSum::new();
        for i1 in 0..n1 {
            let x1 = i1 as f64 / n1 as f64;
            for i2 in 0..n2 {
                let x2 = i2 as f64 / n2 as f64;
                let mut s = CReal::new(0.0, 0.0);
                for t in &terms {
                    let phase = Dd::from_f64(t.l * x1)
                        .add(Dd::from_f64(t.kl).mul_f64(x2))
                        .add(Dd::from_f64(t.omega).mul_f64(*x3v));
                    s += t.a * crate::dd::e_of(phase);
                }
                plane.add(s.norm().powf(q));
            }
        }
        total.add(w3 / 2.0 * plane.value() / (n1 as f64 * n2 as f64));
    }
    let value = total.value().powf(1.0 / q);

    Ok(MomentEstimate { q, grid, value, coefficients: coefficients.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(k: u64, l: u64, eta: f64) -> SpacingInstance {
        SpacingInstance::new(k, l, eta, None, 1.0).unwrap()
    }

    #[test]
    fn singleton_instance_counts_one() {
        let c = count_system_a(&inst(1, 1, 1.0)).unwrap();
        assert_eq!(c.exact, 1);
        assert_eq!(c.diagonal, 1);
    }

    #[test]
    fn frozen_counts_match_independent_enumeration() {
        // frozen from a direct 8-fold loop in exact/high-precision arithmetic
        let cases = [
            ((2u64, 1u64, 1.0), 6u64, 6u64),
            ((4, 2, 1.0), 152, 120),
            ((8, 2, 1.0 / 16.0), 304, 256),
            ((8, 2, 0.25), 688, 400),
            ((8, 2, 1.0), 1104, 496),
        ];
        for ((k, l, eta), exact, diagonal) in cases {
            let c = count_system_a(&inst(k, l, eta)).unwrap();
            assert_eq!(c.exact, exact, "K={k} L={l} eta={eta}");
            assert_eq!(c.diagonal, diagonal, "K={k} L={l} eta={eta}");
        }
    }

    #[test]
    fn diagonal_formula_when_constraints_slack() {
        // with eta = 1 the diam caps are slack and the diagonal is
        // 2 (KL)^2 - KL
        for (k, l) in [(2u64, 1u64), (4, 2), (7, 2)] {
            let c = count_system_a(&inst(k, l, 1.0)).unwrap();
            let kl = k * l;
            assert_eq!(c.diagonal, 2 * kl * kl - kl);
            assert!(c.diagonal <= c.exact);
        }
    }

    #[test]
    fn exact_monotone_in_eta_and_window() {
        let base = count_system_a(&inst(8, 2, 0.25)).unwrap();
        let larger_eta = count_system_a(&inst(8, 2, 0.5)).unwrap();
        assert!(base.exact <= larger_eta.exact);
        let wc = SpacingInstance::new(8, 2, 0.25, None, 3.0).unwrap();
        let larger_wc = count_system_a(&wc).unwrap();
        assert!(base.exact <= larger_wc.exact);
    }

    #[test]
    fn ill_posed_ranges_rejected() {
        assert!(SpacingInstance::new(4, 4, 1.0, None, 1.0).is_err());
        assert!(SpacingInstance::new(8, 6, 1.0, None, 1.0).is_err());
        assert!(SpacingInstance::new(8, 4, 1.0, None, 1.0).is_ok());
    }

    #[test]
    fn size_caps_enforced() {
        assert!(matches!(
            count_system_a(&inst(600, 2, 1.0)),
            Err(SpacingError::TooLarge { .. })
        ));
    }

    #[test]
    fn system_b_zero_u_gives_exact_power() {
        // L^2/K < 1 forces u = 0: exact = (KL)^nu
        let i = SpacingInstance::new(6, 2, 0.25, Some(3), 1.0).unwrap();
        let c = count_system_b(&i).unwrap();
        assert_eq!(c.exact, 1728);
        assert_eq!(c.diagonal, 1728);
    }

    #[test]
    fn system_b_frozen_value() {
        // L^2/K = 1 admits u in {-1, 0, 1}
        let i = SpacingInstance::new(4, 2, 0.25, Some(3), 1.0).unwrap();
        let c = count_system_b(&i).unwrap();
        assert_eq!(c.exact, 2048);
        assert_eq!(c.diagonal, 512);
        assert!(c.exact as f64 <= 100.0 * c.analytic_bound);
    }

    #[test]
    fn system_b_requires_nu() {
        let i = inst(6, 2, 0.25);
        assert!(matches!(count_system_b(&i), Err(SpacingError::MissingNu(None))));
        let big = SpacingInstance::new(6, 2, 0.25, Some(5), 1.0).unwrap();
        assert!(matches!(count_system_b(&big), Err(SpacingError::NuTooLarge(5))));
    }

    #[test]
    fn prop7_direct_substitution() {
        // 0.01 * 8^5 + 0.1 * 8^3 * 2 = 430.08
        let i = inst(8, 2, 0.1);
        let b = analytic_bound_formula(BoundFormula::Prop7, &i, None).unwrap();
        assert!((b - 430.08).abs() < 1e-9);
    }

    #[test]
    fn prop10_degenerates_to_sqrt_kl() {
        // eta K^2/L -> 0 and L^3/K^2 -> 0: all brackets -> 1
        let i = SpacingInstance::new(1000, 2, 1e-12, Some(3), 1.0).unwrap();
        let b = analytic_bound_formula(BoundFormula::Prop10Rhs, &i, Some(3)).unwrap();
        assert!((b - (2000.0f64).sqrt()).abs() < 1e-3, "{b}");
    }

    #[test]
    fn prop10prime_matches_independent_evaluation() {
        // (1 + eta K L)^(1/48) (1 + eta K^2/L)^(5/24) sqrt(KL) at
        // K=16, L=2, eta=1/32: frozen from 30-digit arithmetic
        let i = inst(16, 2, 1.0 / 32.0);
        let b = analytic_bound_formula(BoundFormula::Prop10PrimeRhs, &i, None).unwrap();
        let want = 2.0f64.powf(1.0 / 48.0) * 5.0f64.powf(5.0 / 24.0) * 32.0f64.sqrt();
        assert!((b - want).abs() < 1e-12);
    }

    #[test]
    fn bound_formula_requires_nu() {
        let i = inst(8, 2, 0.5);
        assert!(matches!(
            analytic_bound_formula(BoundFormula::Prop9, &i, None),
            Err(SpacingError::BoundNeedsNu)
        ));
    }

    #[test]
    fn l4_identity_small_cases() {
        let one = l4_count_identity(1, 1).unwrap();
        assert_eq!(one.moment, 1);
        assert_eq!(one.count, 1);
        assert!(one.verified());

        let two = l4_count_identity(2, 2).unwrap();
        assert_eq!(two.moment, 28);
        assert_eq!(two.count, 28);
        assert!(two.verified());

        let three = l4_count_identity(3, 2).unwrap();
        assert_eq!(three.count, 74);
        assert!(three.verified());
    }

    #[test]
    fn l4_scaling_homogeneity() {
        // doubling every coefficient multiplies the moment by 2^4
        let ks: Vec<i64> = (3..=4).collect();
        let ls: Vec<i64> = (2..=4).collect();
        let base = l4_moment_quadrature(&ks, &ls, 1.0);
        let doubled = l4_moment_quadrature(&ks, &ls, 2.0);
        assert!((doubled - 16.0 * base).abs() < 1e-6 * base);
    }

    #[test]
    fn moment_orthogonality_at_q2() {
        // x3 disabled, q = 2: value^2 = KL exactly
        let i = inst(4, 2, 0.5);
        let grid = (8 * 2, 4 * 8 * 2, 1);
        let m = moment_estimate(&i, 2.0, &BTreeMap::new(), grid, X3Mode::Disabled).unwrap();
        assert!((m.value * m.value - 8.0).abs() < 1e-10, "{}", m.value);
    }

    #[test]
    fn moment_monotone_in_q() {
        let i = inst(4, 2, 0.5);
        let grid = (8, 40, 32);
        let m2 = moment_estimate(&i, 2.0, &BTreeMap::new(), grid, X3Mode::Box).unwrap();
        let m4 = moment_estimate(&i, 4.0, &BTreeMap::new(), grid, X3Mode::Box).unwrap();
        let m48 = moment_estimate(&i, 4.8, &BTreeMap::new(), grid, X3Mode::Box).unwrap();
        assert!(m2.value <= m4.value + 1e-12);
        assert!(m4.value <= m48.value + 1e-12);
    }

    #[test]
    fn moment_grid_floor() {
        let i = inst(4, 2, 0.5);
        assert!(matches!(
            moment_estimate(&i, 2.0, &BTreeMap::new(), (4, 40, 32), X3Mode::Box),
            Err(SpacingError::GridBelowFloor { axis: "n1", .. })
        ));
    }
}
