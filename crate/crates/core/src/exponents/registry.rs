//! Registry of the printed exponent identities, each re-derived by exact
//! rational arithmetic.

use super::expvec::{ExponentVector, Regime};
use super::qnu::{a_of_q, b_of_q, holder_interpolate, q_nu, solve_theta, solve_theta_for_lhs};
use super::rat::Rat;
use super::ExponentsError;
use num_bigint::BigInt;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct IdentityOutcome {
    pub id: &'static str,
    pub holds: bool,
    pub lhs: String,
    pub rhs: String,
}

pub struct Identity {
    pub id: &'static str,
    pub description: &'static str,
    check: fn() -> IdentityOutcome,
}

impl Identity {
    pub fn run(&self) -> IdentityOutcome {
        (self.check)()
    }
}

fn outcome(id: &'static str, holds: bool, lhs: impl ToString, rhs: impl ToString) -> IdentityOutcome {
    IdentityOutcome { id, holds, lhs: lhs.to_string(), rhs: rhs.to_string() }
}

/// First `digits` decimal digits of a positive rational, truncated.
fn decimal_prefix(r: &Rat, digits: u32) -> BigInt {
    let scale = Rat::int(10).pow_i32(digits as i32).expect("positive power");
    (r * &scale).floor()
}

fn x1() -> ExponentVector {
    ExponentVector {
        t: Rat::frac(13, 160),
        m: Rat::frac(125, 192),
        h: Rat::frac(-141, 320),
        u: Rat::zero(),
        log_t: Rat::zero(),
        eps: Rat::zero(),
    }
}

fn y1() -> ExponentVector {
    ExponentVector {
        t: Rat::frac(32, 153),
        m: Rat::frac(19, 51),
        h: Rat::frac(-329, 612),
        u: Rat::zero(),
        log_t: Rat::zero(),
        eps: Rat::zero(),
    }
}

fn z1() -> ExponentVector {
    ExponentVector {
        t: Rat::frac(17, 80),
        m: Rat::frac(7, 32),
        h: Rat::frac(11, 160),
        u: Rat::zero(),
        log_t: Rat::zero(),
        eps: Rat::zero(),
    }
}

/// Regime encoding the constraint `M^9 H = T^4` via `M = T^mu`,
/// `H = T^(4 - 9 mu)`; the final exponent must not depend on `mu`.
fn m9h_regime(mu: Rat) -> Regime {
    Regime {
        h: Some(&Rat::int(4) - &(Rat::int(9) * mu.clone())),
        m: Some(mu),
        u: None,
    }
}

fn check_thm4_chain() -> IdentityOutcome {
    let x2 = x1().pow(&Rat::frac(24, 301)).mul(&z1().pow(&Rat::frac(277, 301)));
    // closed form (M^9 H)^(271/9632) T^(139/688)
    let closed = x2.t == Rat::frac(139, 688)
        && x2.m == Rat::frac(2439, 9632)
        && x2.h == Rat::frac(271, 9632);
    let target = Rat::frac(1515, 4816);
    let mut holds = closed;
    for mu in [Rat::frac(1, 2), Rat::frac(2, 5), Rat::frac(3, 7)] {
        let reduced = x2.reduce(&m9h_regime(mu)).expect("all variables bound");
        holds &= reduced.t == target;
    }
    outcome("thm4_chain", holds, x2, format!("T^({target}) under M^9 H = T^4"))
}

fn check_y2_exponent() -> IdentityOutcome {
    let y2 = y1().pow(&Rat::frac(408, 5723)).mul(&z1().pow(&Rat::frac(5315, 5723)));
    let closed = y2.t == Rat::frac(58309, 274704)
        && y2.m == Rat::frac(42069, 183136)
        && y2.h == Rat::frac(14023, 549408);
    let target = Rat::frac(28785, 91568);
    let mut holds = closed;
    for mu in [Rat::frac(1, 2), Rat::frac(2, 5)] {
        let reduced = y2.reduce(&m9h_regime(mu)).expect("all variables bound");
        holds &= reduced.t == target;
    }
    outcome("y2_exponent", holds, y2, format!("T^({target}) under M^9 H = T^4"))
}

fn check_q6_reduction() -> IdentityOutcome {
    let q6 = q_nu(6).expect("nu = 6");
    let lhs = &(&Rat::int(4) - &(Rat::int(41) * (&q6 - &Rat::int(4)))) / &Rat::int(119);
    let rhs = Rat::frac(-12, 217);
    outcome("q6_reduction", lhs == rhs, lhs, rhs)
}

fn check_intro_compare() -> IdentityOutcome {
    let old = Rat::frac(131, 416);
    let new = Rat::frac(1515, 4816);
    let holds = old > new
        && decimal_prefix(&old, 6) == BigInt::from(314903)
        && decimal_prefix(&new, 6) == BigInt::from(314576);
    outcome(
        "intro_compare",
        holds,
        format!("131/416 = 0.{}...", decimal_prefix(&old, 6)),
        format!("1515/4816 = 0.{}...", decimal_prefix(&new, 6)),
    )
}

fn check_a_q7() -> IdentityOutcome {
    let a = a_of_q(&q_nu(7).expect("nu = 7")).expect("not a pole");
    let rhs = Rat::frac(1273, 4053);
    outcome("a_q7", a == rhs, a, rhs)
}

fn check_b_q7() -> IdentityOutcome {
    let b = b_of_q(&q_nu(7).expect("nu = 7")).expect("not a pole");
    let rhs = Rat::new(75789, 241304).expect("valid");
    // printed decimal 0.3140809... is the truncation of b
    let decimal_ok = decimal_prefix(&b, 7) == BigInt::from(3_140_809);
    outcome("b_q7", b == rhs && decimal_ok, b, format!("{rhs} (= 0.3140809...)"))
}

fn check_a_q8() -> IdentityOutcome {
    let a = a_of_q(&q_nu(8).expect("nu = 8")).expect("not a pole");
    let rhs = Rat::frac(5927, 18872);
    let decimal_ok = decimal_prefix(&a, 5) == BigInt::from(31406);
    outcome("a_q8", a == rhs && decimal_ok, a, format!("{rhs} (= 0.31406...)"))
}

fn check_remark_iii_crossover() -> IdentityOutcome {
    let q7 = q_nu(7).expect("nu = 7");
    let q8 = q_nu(8).expect("nu = 8");
    let a7 = a_of_q(&q7).expect("not a pole");
    let b7 = b_of_q(&q7).expect("not a pole");
    let a8 = a_of_q(&q8).expect("not a pole");
    let b8 = b_of_q(&q8).expect("not a pole");
    let mut holds = a7 > b7 && a8 < b8 && b8 == Rat::frac(6323, 20128);
    // a decreasing, b increasing across q_6..q_12
    let qs: Vec<Rat> = (6..=12).map(|n| q_nu(n).expect("nu >= 6")).collect();
    for w in qs.windows(2) {
        holds &= a_of_q(&w[0]).unwrap() > a_of_q(&w[1]).unwrap();
        holds &= b_of_q(&w[0]).unwrap() < b_of_q(&w[1]).unwrap();
    }
    outcome(
        "remark_iii_crossover",
        holds,
        format!("a(q7) = {a7} > b(q7) = {b7}"),
        format!("a(q8) = {a8} < b(q8) = {b8}"),
    )
}

fn check_interp_48_11() -> IdentityOutcome {
    match solve_theta(&Rat::int(8), &Rat::int(4), &Rat::int(3), &Rat::frac(24, 5)) {
        Ok((theta, q)) => {
            let holds = theta == Rat::frac(5, 6) && q == Rat::frac(48, 11);
            outcome("interp_48_11", holds, format!("theta = {theta}, q = {q}"), "theta = 5/6, q = 48/11")
        }
        Err(e) => outcome("interp_48_11", false, format!("error: {e}"), "theta = 5/6, q = 48/11"),
    }
}

fn check_interp_24_5() -> IdentityOutcome {
    let theta = match solve_theta_for_lhs(&Rat::frac(1, 4), &Rat::int(2), &Rat::int(6)) {
        Ok(t) => t,
        Err(e) => return outcome("interp_24_5", false, format!("error: {e}"), "theta = 3/4"),
    };
    let q = match holder_interpolate(&Rat::int(3), &Rat::int(6), &theta) {
        Ok(q) => q,
        Err(e) => return outcome("interp_24_5", false, format!("error: {e}"), "q = 24/5"),
    };
    // the system's solution; the value printed beside it is 25/4, which the
    // solution demonstrably is not
    let holds = theta == Rat::frac(3, 4) && q == Rat::frac(24, 5) && q != Rat::frac(25, 4);
    outcome(
        "interp_24_5",
        holds,
        format!("theta = {theta}, q = {q}"),
        "theta = 3/4, q = 24/5 (printed alternative 25/4 differs)",
    )
}

fn check_eq13_10() -> IdentityOutcome {
    let q7 = q_nu(7).expect("nu = 7");
    let holds = q7 == Rat::frac(158, 37) && q7 == &Rat::int(4) + &Rat::frac(10, 37);
    outcome("eq13_10", holds, q7, "158/37 = 4 + 10/37")
}

fn check_eq12_10_interval() -> IdentityOutcome {
    let lo = Rat::frac(132, 31);
    let hi = Rat::frac(48, 11);
    let left_open = Rat::frac(2129, 500); // 4.258
    let limit = Rat::frac(13, 3);
    let mut holds = lo > left_open && limit < hi;
    let mut prev: Option<Rat> = None;
    for n in 6..=40 {
        let q = q_nu(n).expect("nu >= 6");
        holds &= q >= lo && q <= hi && q < limit;
        if let Some(p) = prev {
            holds &= q > p;
        }
        prev = Some(q);
    }
    outcome(
        "eq12_10_interval",
        holds,
        "q_nu for nu in 6..=40, increasing, < 13/3",
        format!("within [{lo}, {hi}] subset (4.258, 4.3636..]"),
    )
}

fn check_q3_forms() -> IdentityOutcome {
    // q_nu() itself asserts the two printed forms agree
    let q3 = q_nu(3).expect("nu = 3");
    outcome("q3_forms", q3 == Rat::frac(54, 13), q3, "54/13")
}

fn check_eq13_16_exponents() -> IdentityOutcome {
    let qi = q_nu(7).expect("nu = 7").recip().expect("positive");
    let e1 = &(Rat::frac(22, 25) * qi.clone()) - &Rat::frac(9, 50);
    let e2 = &(Rat::frac(33, 100) * qi) + &Rat::frac(49, 200);
    let holds = e1 == Rat::frac(103, 3950) && e2 == Rat::frac(1273, 3950);
    outcome(
        "eq13_16_exponents",
        holds,
        format!("(22/25)/q7 - 9/50 = {e1}, (33/100)/q7 + 49/200 = {e2}"),
        "103/3950 and 1273/3950",
    )
}

fn check_eq13_18_exponents() -> IdentityOutcome {
    let qi = q_nu(7).expect("nu = 7").recip().expect("positive");
    let checks = [
        (&(Rat::frac(11, 20) * qi.clone()) + &Rat::frac(3, 40), Rat::frac(161, 790)),
        (&Rat::frac(9, 16) - &(Rat::frac(11, 8) * qi.clone()), Rat::frac(19, 79)),
        (&(Rat::frac(33, 40) * qi.clone()) + &Rat::frac(69, 80), Rat::frac(417, 395)),
        (&(Rat::frac(11, 51) * qi.clone()) + &Rat::frac(1, 3), Rat::frac(1031, 2686)),
        (-(Rat::frac(11, 17) * qi.clone()), Rat::frac(-407, 2686)),
        (&(Rat::frac(55, 51) * qi) + &Rat::frac(2, 3), Rat::frac(2469, 2686)),
    ];
    let holds = checks.iter().all(|(got, want)| got == want);
    outcome(
        "eq13_18_exponents",
        holds,
        "all six exponents of the nu = 7 case of (6.14)",
        "161/790, 19/79, 417/395, 1031/2686, -407/2686, 2469/2686",
    )
}

fn check_cond_6_6_nu7() -> IdentityOutcome {
    let te = super::theorem2::cond_6_6_t_exponent(7);
    let le = super::theorem2::cond_6_6_log_exponent(7);
    let holds = te == Rat::frac(643, 2048) && le == Rat::frac(969, 40960);
    outcome(
        "cond_6_6_nu7",
        holds,
        format!("T-exponent {te}, log-exponent {le}"),
        "643/2048 and 969/40960",
    )
}

pub fn registry() -> Vec<Identity> {
    vec![
        Identity { id: "thm4_chain", description: "X1^(24/301) Z1^(277/301) gives T^(1515/4816) under M^9 H = T^4", check: check_thm4_chain },
        Identity { id: "y2_exponent", description: "Y1^(408/5723) Z1^(5315/5723) gives T^(28785/91568) under M^9 H = T^4", check: check_y2_exponent },
        Identity { id: "q6_reduction", description: "(4 - 41(q6 - 4))/119 = -12/217", check: check_q6_reduction },
        Identity { id: "intro_compare", description: "131/416 > 1515/4816 with decimals 0.314903/0.314576", check: check_intro_compare },
        Identity { id: "a_q7", description: "a(q7) = 1273/4053", check: check_a_q7 },
        Identity { id: "b_q7", description: "b(q7) = 75789/241304 = 0.3140809...", check: check_b_q7 },
        Identity { id: "a_q8", description: "a(q8) = 5927/18872 = 0.31406...", check: check_a_q8 },
        Identity { id: "remark_iii_crossover", description: "a(q7) > b(q7) but a(q8) < b(q8); a decreasing, b increasing", check: check_remark_iii_crossover },
        Identity { id: "interp_48_11", description: "interpolation system solves to theta = 5/6, q = 48/11", check: check_interp_48_11 },
        Identity { id: "interp_24_5", description: "interpolation system solves to theta = 3/4, q = 24/5 (not the printed 25/4)", check: check_interp_24_5 },
        Identity { id: "eq13_10", description: "q7 = 158/37 = 4 + 10/37", check: check_eq13_10 },
        Identity { id: "eq12_10_interval", description: "q_nu increasing on nu >= 6, inside [132/31, 48/11] subset (4.258, 4.3636..], below 13/3", check: check_eq12_10_interval },
        Identity { id: "q3_forms", description: "q_3 = 54/13 from both printed forms", check: check_q3_forms },
        Identity { id: "eq13_16_exponents", description: "nu = 7 exponents of the part-A q-bound", check: check_eq13_16_exponents },
        Identity { id: "eq13_18_exponents", description: "nu = 7 exponents of the part-B q-bound", check: check_eq13_18_exponents },
        Identity { id: "cond_6_6_nu7", description: "condition (6.6) exponents at nu = 7", check: check_cond_6_6_nu7 },
    ]
}

/// Runs one registry identity by id.
pub fn verify_identity(id: &str) -> Result<IdentityOutcome, ExponentsError> {
    registry()
        .iter()
        .find(|i| i.id == id)
        .map(Identity::run)
        .ok_or_else(|| ExponentsError::UnknownIdentity(id.to_string()))
}

/// Runs every registry identity.
pub fn verify_all() -> Vec<IdentityOutcome> {
    registry().iter().map(Identity::run).collect()
}
