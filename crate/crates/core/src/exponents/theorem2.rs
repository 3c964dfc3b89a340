//! Numeric evaluation of the condition set and bound expressions attached to
//! the two-part exponential-sum theorem: conditions (6.4)-(6.6), (6.10),
//! (6.11) decide which part applies, (6.7)/(6.12) pick between the explicit
//! bounds (6.8)/(6.13) and the `q_nu` bounds (6.9)/(6.14). All exponents are
//! exact rationals; only the final comparison is floating point.

use super::expvec::ExponentVector;
use super::qnu::q_nu;
use super::rat::Rat;
use super::ExponentsError;
use serde::Serialize;
use std::collections::BTreeMap;

/// The constants a caller fixes before invoking the theorem.
#[derive(Clone, Debug, Serialize)]
pub struct ConditionParams {
    pub c2: Rat,
    pub c3: Rat,
    pub c4: Rat,
    pub c5: Rat,
    pub c6: Rat,
    pub b4: Rat,
    pub b5: Rat,
    pub nu: u32,
    pub epsilon: Rat,
    /// Exponent `c` of the lemma hypothesis `T^c <= U <= 3 T^c`.
    pub c: Rat,
    pub delta0: Rat,
}

impl ConditionParams {
    pub fn new(
        c: [Rat; 5],
        b4: Rat,
        b5: Rat,
        nu: u32,
        epsilon: Rat,
        c_exp: Rat,
        delta0: Rat,
    ) -> Result<Self, ExponentsError> {
        let [c2, c3, c4, c5, c6] = c;
        for (v, name) in [(&c2, "C2"), (&c3, "C3"), (&c4, "C4"), (&c5, "C5"), (&c6, "C6")] {
            if v < &Rat::int(2) {
                return Err(ExponentsError::InvalidParam { name, value: v.clone() });
            }
        }
        for (v, name) in [(&b4, "B4"), (&b5, "B5")] {
            if v <= &Rat::zero() || v > &Rat::one() {
                return Err(ExponentsError::InvalidParam { name, value: v.clone() });
            }
        }
        if nu < 6 {
            return Err(ExponentsError::NuTooSmall(nu));
        }
        if epsilon <= Rat::zero() {
            return Err(ExponentsError::InvalidParam { name: "epsilon", value: epsilon });
        }
        if delta0 <= Rat::zero() || delta0 >= Rat::one() {
            return Err(ExponentsError::InvalidParam { name: "delta0", value: delta0 });
        }
        Ok(ConditionParams { c2, c3, c4, c5, c6, b4, b5, nu, epsilon, c: c_exp, delta0 })
    }

    /// The constants used when the theorem is applied to the phase
    /// `log(x) - b M^2 x^2 / (8T)`: `C_r = (r-1)! 3^r` for `r = 3..5`,
    /// `C_2 = 1309`, `C_6 = 4`, unit `B`-constants, `nu = 7`.
    pub fn lemma_defaults() -> Self {
        ConditionParams::new(
            [Rat::int(1309), Rat::int(54), Rat::int(486), Rat::int(5832), Rat::int(4)],
            Rat::one(),
            Rat::one(),
            7,
            Rat::frac(1, 1000),
            Rat::frac(19, 60),
            Rat::frac(1, 2),
        )
        .expect("defaults are valid")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Part {
    A,
    B,
    None,
}

/// One evaluated condition: `lhs <cmp> rhs` with the premise state for the
/// conditionally-required ones.
#[derive(Clone, Debug, Serialize)]
pub struct ConditionOutcome {
    pub holds: bool,
    /// False when the condition's premise fails, making it vacuous.
    pub applicable: bool,
    pub lhs: f64,
    pub rhs: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundTerm {
    pub label: String,
    pub vector: ExponentVector,
    pub value: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub t: f64,
    pub m: f64,
    pub h: f64,
    pub nu: u32,
    pub conditions: BTreeMap<String, ConditionOutcome>,
    pub applicable_part: Part,
    pub bound_terms: Vec<BoundTerm>,
}

/// `(149 nu - 400)/(16 (29 nu - 75))`, the `T`-exponent in (6.6).
pub fn cond_6_6_t_exponent(nu: u32) -> Rat {
    let n = i64::from(nu);
    Rat::frac(149 * n - 400, 16 * (29 * n - 75))
}

/// `969 nu / (2240 (29 nu - 75))`, the log-exponent in (6.6).
pub fn cond_6_6_log_exponent(nu: u32) -> Rat {
    let n = i64::from(nu);
    Rat::frac(969 * n, 2240 * (29 * n - 75))
}

fn monomial(t: (i64, i64), m: (i64, i64), h: (i64, i64)) -> ExponentVector {
    ExponentVector::t_pow(Rat::frac(t.0, t.1))
        .mul(&ExponentVector::m_pow(Rat::frac(m.0, m.1)))
        .mul(&ExponentVector::h_pow(Rat::frac(h.0, h.1)))
}

/// The four explicit terms of (6.13) followed by the two of its second
/// branch; all still need the `T^eps` slot.
fn bound_terms_6_13() -> Vec<(&'static str, ExponentVector)> {
    vec![
        ("6.13a", monomial((13, 160), (125, 192), (179, 320))),
        ("6.13b", monomial((32, 153), (19, 51), (283, 612))),
        ("6.13c", monomial((151, 520), (-11, 208), (1473, 1040))),
        ("6.13d", monomial((113, 221), (-118, 221), (276, 221))),
        ("6.13e", monomial((17, 80), (7, 32), (171, 160))),
        ("6.13f", monomial((79, 204), (-11, 68), (191, 204))),
    ]
}

fn bound_terms_6_8() -> Vec<(&'static str, ExponentVector)> {
    vec![
        ("6.8a", monomial((397, 2400), (277, 600), (323, 600))),
        ("6.8b", monomial((1133, 2600), (-19, 50), (69, 50))),
        ("6.8c", monomial((131, 400), (-1, 25), (26, 25))),
    ]
}

fn bound_terms_6_9(q: &Rat) -> Vec<(String, ExponentVector)> {
    let qi = q.recip().expect("q_nu > 0");
    let me = &(Rat::frac(22, 25) * qi.clone()) - &Rat::frac(9, 50);
    vec![(
        "6.9".to_string(),
        ExponentVector {
            t: &(Rat::frac(33, 100) * qi) + &Rat::frac(49, 200),
            m: -&me,
            h: Rat::one() + me,
            u: Rat::zero(),
            log_t: Rat::zero(),
            eps: Rat::zero(),
        },
    )]
}

fn bound_terms_6_14(q: &Rat) -> Vec<(String, ExponentVector)> {
    let qi = q.recip().expect("q_nu > 0");
    let t1 = ExponentVector {
        t: &(Rat::frac(11, 20) * qi.clone()) + &Rat::frac(3, 40),
        m: &Rat::frac(9, 16) - &(Rat::frac(11, 8) * qi.clone()),
        h: &(Rat::frac(33, 40) * qi.clone()) + &Rat::frac(69, 80),
        u: Rat::zero(),
        log_t: Rat::zero(),
        eps: Rat::zero(),
    };
    let t2 = ExponentVector {
        t: &(Rat::frac(11, 51) * qi.clone()) + &Rat::frac(1, 3),
        m: -(Rat::frac(11, 17) * qi.clone()),
        h: &(Rat::frac(55, 51) * qi) + &Rat::frac(2, 3),
        u: Rat::zero(),
        log_t: Rat::zero(),
        eps: Rat::zero(),
    };
    vec![("6.14a".to_string(), t1), ("6.14b".to_string(), t2)]
}

/// Evaluates every condition predicate of the theorem at `(t, m, h)` and
/// assembles the applicable part and its bound expressions.
pub fn theorem2_case_eval(t: f64, m: f64, h: f64, params: &ConditionParams) -> CaseReport {
    assert!(t >= 1.0 && m >= 1.0 && h >= 1.0, "T, M, H >= 1");
    let lt = t.ln();
    let llt = lt.ln();
    let nu = params.nu;
    let q = q_nu(nu).expect("nu >= 6");

    let pow = |t_e: &Rat, log_e: &Rat| (t_e.to_f64() * lt + log_e.to_f64() * llt).exp();
    let mut conditions = BTreeMap::new();

    // (6.4): if M <= T^(7/16) (log T)^(57/448) then H >= M^-9 T^4 (log T)^(171/140)
    let premise_6_4 = m <= pow(&Rat::frac(7, 16), &Rat::frac(57, 448));
    let rhs_6_4 = m.powi(-9) * pow(&Rat::int(4), &Rat::frac(171, 140));
    conditions.insert(
        "6.4".to_string(),
        ConditionOutcome {
            holds: !premise_6_4 || h >= rhs_6_4,
            applicable: premise_6_4,
            lhs: h,
            rhs: rhs_6_4,
        },
    );

    // (6.5): if M >= T^(9/16) (log T)^(-57/448) then H >= M^11 T^-6 (log T)^(171/140)
    let premise_6_5 = m >= pow(&Rat::frac(9, 16), &Rat::frac(-57, 448));
    let rhs_6_5 = m.powi(11) * pow(&Rat::int(-6), &Rat::frac(171, 140));
    conditions.insert(
        "6.5".to_string(),
        ConditionOutcome {
            holds: !premise_6_5 || h >= rhs_6_5,
            applicable: premise_6_5,
            lhs: h,
            rhs: rhs_6_5,
        },
    );

    // (6.6): H <= B5 M T^-e(nu) (log T)^l(nu)
    let rhs_6_6 =
        params.b5.to_f64() * m * pow(&-cond_6_6_t_exponent(nu), &cond_6_6_log_exponent(nu));
    conditions.insert(
        "6.6".to_string(),
        ConditionOutcome { holds: h <= rhs_6_6, applicable: true, lhs: h, rhs: rhs_6_6 },
    );

    // (6.7): H <= M T^(-149/464) (log T)^(969/64960)
    let rhs_6_7 = m * pow(&Rat::frac(-149, 464), &Rat::frac(969, 64960));
    conditions.insert(
        "6.7".to_string(),
        ConditionOutcome { holds: h <= rhs_6_7, applicable: true, lhs: h, rhs: rhs_6_7 },
    );

    // (6.10): M <= C6 T^(1/2)
    let rhs_6_10 = params.c6.to_f64() * t.sqrt();
    conditions.insert(
        "6.10".to_string(),
        ConditionOutcome { holds: m <= rhs_6_10, applicable: true, lhs: m, rhs: rhs_6_10 },
    );

    // (6.11): H <= B4 min{ (M^(155nu-480) (log T)^(969nu/140) / T^(46nu-160))^(1/(189nu-480)),
    //                      (M^3/T)^((5nu-12)/(13nu-36)) }
    let n = i64::from(nu);
    let inv = Rat::frac(1, 189 * n - 480);
    let term1 = m.powf((Rat::int(155 * n - 480) * inv.clone()).to_f64())
        * pow(
            &(Rat::int(-(46 * n - 160)) * inv.clone()),
            &(Rat::frac(969 * n, 140) * inv),
        );
    let e2 = Rat::frac(5 * n - 12, 13 * n - 36).to_f64();
    let term2 = (m.powi(3) / t).powf(e2);
    let rhs_6_11 = params.b4.to_f64() * term1.min(term2);
    conditions.insert(
        "6.11".to_string(),
        ConditionOutcome { holds: h <= rhs_6_11, applicable: true, lhs: h, rhs: rhs_6_11 },
    );

    // (6.12): H <= min{ M^(155/189) T^(-46/189) (log T)^(323/8820), M^(15/13) T^(-5/13) }
    let rhs_6_12 = (m.powf(Rat::frac(155, 189).to_f64())
        * pow(&Rat::frac(-46, 189), &Rat::frac(323, 8820)))
    .min(m.powf(Rat::frac(15, 13).to_f64()) * pow(&Rat::frac(-5, 13), &Rat::zero()));
    conditions.insert(
        "6.12".to_string(),
        ConditionOutcome { holds: h <= rhs_6_12, applicable: true, lhs: h, rhs: rhs_6_12 },
    );

    let holds = |id: &str| conditions[id].holds;
    let applicable_part = if holds("6.4") && holds("6.5") && holds("6.6") {
        Part::A
    } else if holds("6.10") && holds("6.11") {
        Part::B
    } else {
        Part::None
    };

    let eps = params.epsilon.clone();
    let mut bound_terms = Vec::new();
    let mut push = |label: String, v: ExponentVector| {
        let v = v.with_eps(eps.clone());
        let value = v.eval(t, m, h, 1.0, 0.0);
        bound_terms.push(BoundTerm { label, vector: v, value });
    };
    match applicable_part {
        Part::A => {
            if holds("6.7") {
                for (l, v) in bound_terms_6_8() {
                    push(l.to_string(), v);
                }
            } else {
                for (l, v) in bound_terms_6_9(&q) {
                    push(l, v);
                }
            }
        }
        Part::B => {
            if holds("6.12") {
                for (l, v) in bound_terms_6_13() {
                    push(l.to_string(), v);
                }
            } else {
                for (l, v) in bound_terms_6_14(&q) {
                    push(l, v);
                }
            }
        }
        Part::None => {}
    }

    CaseReport { t, m, h, nu, conditions, applicable_part, bound_terms }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cond_6_6_exponents_at_nu_7() {
        assert_eq!(cond_6_6_t_exponent(7), Rat::frac(643, 2048));
        assert_eq!(cond_6_6_log_exponent(7), Rat::frac(969, 40960));
    }

    #[test]
    fn violating_6_6_excludes_part_a() {
        let params = ConditionParams::lemma_defaults();
        let t = 1e12f64;
        let m = t.sqrt();
        // H far above the (6.6) ceiling M T^(-643/2048+..)
        let h = m;
        let report = theorem2_case_eval(t, m, h, &params);
        assert!(!report.conditions["6.6"].holds);
        assert_ne!(report.applicable_part, Part::A);
    }

    #[test]
    fn part_b_case_emits_6_13_terms() {
        // M = T^0.43 makes the (6.4) premise bite and its requirement fail
        // (so part A is out), while (6.10)/(6.11) still admit H = 20
        let params = ConditionParams::lemma_defaults();
        let t = 1e12f64;
        let m = t.powf(0.43);
        let h = 20.0;
        let report = theorem2_case_eval(t, m, h, &params);
        assert!(!report.conditions["6.4"].holds);
        assert_eq!(report.applicable_part, Part::B);
        assert!(report.conditions["6.10"].holds && report.conditions["6.11"].holds);
        assert!(report.conditions["6.12"].holds);
        assert_eq!(report.bound_terms.len(), 6);
        for bt in &report.bound_terms {
            assert!(bt.value.is_finite() && bt.value > 0.0);
        }
    }

    #[test]
    fn part_a_takes_priority_when_both_apply() {
        // M = sqrt(T) leaves both premises of (6.4)/(6.5) vacuous and H
        // small enough for every ceiling, so parts A and B both apply; the
        // report resolves to A
        let params = ConditionParams::lemma_defaults();
        let t = 1e12f64;
        let m = t.sqrt();
        let h = m * t.powf(-0.33);
        let report = theorem2_case_eval(t, m, h, &params);
        assert!(report.conditions["6.10"].holds && report.conditions["6.11"].holds);
        assert_eq!(report.applicable_part, Part::A);
    }

    #[test]
    fn params_validation() {
        let bad = ConditionParams::new(
            [Rat::int(1), Rat::int(54), Rat::int(486), Rat::int(5832), Rat::int(4)],
            Rat::one(),
            Rat::one(),
            7,
            Rat::frac(1, 1000),
            Rat::frac(19, 60),
            Rat::frac(1, 2),
        );
        assert!(bad.is_err());
        let bad_nu = ConditionParams::new(
            [Rat::int(2), Rat::int(2), Rat::int(2), Rat::int(2), Rat::int(2)],
            Rat::one(),
            Rat::one(),
            5,
            Rat::frac(1, 1000),
            Rat::frac(19, 60),
            Rat::frac(1, 2),
        );
        assert!(matches!(bad_nu, Err(ExponentsError::NuTooSmall(5))));
    }
}
