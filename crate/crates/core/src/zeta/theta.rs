//! The Riemann-Siegel theta function in double-double precision.

use crate::dd::Dd;

/// `theta(t) = (t/2) log(t/2pi) - t/2 - pi/8 + 1/(48t) + 7/(5760 t^3)
/// + 31/(80640 t^5) + 127/(430080 t^7) + 511/(1216512 t^9)`.
///
/// The tail beyond `t^-9` is below 1e-12 for `t >= 2 pi`, far under the
/// phase budget; the leading terms are kept in double-double because
/// `theta` itself reaches ~1e6 while only its value mod 1 matters.
pub fn theta_dd(t: f64) -> Dd {
    debug_assert!(t > 0.0);
    let td = Dd::from_f64(t);
    let half_t = td.mul_f64(0.5);
    let main = half_t
        .mul(td.div(Dd::TWO_PI).ln())
        .sub(half_t)
        .sub(Dd::PI_OVER_8);
    let inv2 = 1.0 / (t * t);
    let mut corr = 511.0 / 1216512.0;
    for c in [127.0 / 430080.0, 31.0 / 80640.0, 7.0 / 5760.0, 1.0 / 48.0] {
        corr = c + corr * inv2;
    }
    main.add_f64(corr / t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_reference_values() {
        // reference values rounded to f64; the double-double result must
        // agree to within the literal's own rounding
        let cases = [
            (10.0, -3.0670743962898954),
            (100.0, 87.97216523178722),
            (1000.0, 2034.5464280380315),
            (100000.0, 433752.0272291708),
        ];
        for (t, want) in cases {
            let err = theta_dd(t).add_f64(-want).to_f64();
            assert!(err.abs() < 6e-14 + 1e-15 * want.abs(), "t={t}: err {err:e}");
        }
    }

    #[test]
    fn theta_first_gram_point_neighborhood() {
        // theta(t) = 0 near t = 17.8455995; sign change brackets it
        assert!(theta_dd(17.8).to_f64() < 0.0);
        assert!(theta_dd(17.9).to_f64() > 0.0);
    }
}
