//! Generating-function identities behind the closed form.

use num_traits::Zero;

use super::{pn_graphsum, CartanLayout};
use crate::algebra::AlgebraContext;
use crate::bernoulli::i_closed;
use crate::error::Result;
use crate::genera::series::{log_coeffs, named_coeffs, rescale_coeffs, Coefficients};
use crate::rational::{factorial, int, pow, sign_pow, Rational};

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

/// `Σ_{j≥2} I_j/(2^j j) x^j`.
pub fn cycle_log_series(order: u32) -> Coefficients {
    (0..=order)
        .map(|j| {
            if j < 2 {
                Rational::zero()
            } else {
                i_closed(j) / (pow(&int(2), j) * int(i64::from(j)))
            }
        })
        .collect()
}

/// `Σ_{j≥2} −(−1)^{j/2} I_j/(2^j j) x^j` (odd `j` contribute nothing).
pub fn signed_cycle_log_series(order: u32) -> Coefficients {
    cycle_log_series(order)
        .into_iter()
        .enumerate()
        .map(|(j, c)| if j % 2 == 0 { -sign_pow(j as u32 / 2) * c } else { Rational::zero() })
        .collect()
}

/// `log((x/2)/sinh(x/2))`.
pub fn log_ahat(order: u32) -> Result<Coefficients> {
    Ok(log_coeffs(&named_coeffs("Ahat", order)?, order))
}

/// `log(sin(x/2)/(x/2))`.
pub fn log_sine_ratio(order: u32) -> Coefficients {
    let sin = crate::genera::series::sin_coeffs(order + 1);
    let over_x: Coefficients = (1..=order as usize + 1).map(|k| sin[k].clone()).collect();
    log_coeffs(&rescale_coeffs(&over_x, &half()), order)
}

/// One-variable generating function `Σ Pₙ tⁿ/n!` of the graph sum restricted to a
/// single definite pair `κ` (type `(0|0,2)`), in powers of `ħκ`.
pub fn kappa_sector_series(order: u32) -> Result<Coefficients> {
    let ctx = AlgebraContext::new(0, 0, 2)?;
    let layout = CartanLayout::of(&ctx);
    let mut out = Vec::with_capacity(order as usize + 1);
    for n in 0..=order as usize {
        let p = pn_graphsum(&ctx, n)?;
        let mut e = vec![0u32; layout.num_vars()];
        e[layout.kappa(0)] = n as u32;
        e[layout.hbar()] = n as u32;
        out.push(p.poly().coeff(&e) / Rational::from_integer(factorial(n as u32)));
    }
    Ok(out)
}

/// `(−1)^ẑ cos(t/2)` for one definite pair.
pub fn signed_cosine_half(zhat: usize, order: u32) -> Result<Coefficients> {
    let c = rescale_coeffs(&named_coeffs("cos", order)?, &half());
    let s = sign_pow(zhat as u32);
    Ok(c.into_iter().map(|x| x * &s).collect())
}

/// Per-pair factor in the closed form: `cos(t/2)·sin(t)/t`.
pub fn closed_form_kappa_factor(order: u32) -> Result<Coefficients> {
    named_coeffs("Chat", order)
}

/// `sin(t)/t`.
pub fn sine_over_t(order: u32) -> Coefficients {
    let sin = crate::genera::series::sin_coeffs(order + 1);
    (1..=order as usize + 1).map(|k| sin[k].clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genera::series::mul_coeffs;

    #[test]
    fn log_identities_to_order_ten() {
        assert_eq!(cycle_log_series(10), log_ahat(10).unwrap());
        assert_eq!(signed_cycle_log_series(10), log_sine_ratio(10));
    }

    #[test]
    fn kappa_sector_is_cosine() {
        let got = kappa_sector_series(6).unwrap();
        assert_eq!(got, signed_cosine_half(0, 6).unwrap());
        assert_ne!(got, signed_cosine_half(1, 6).unwrap());
        // the closed form's factor carries an extra sin(t)/t
        let expected = mul_coeffs(&signed_cosine_half(0, 6).unwrap(), &sine_over_t(6), 6);
        assert_eq!(closed_form_kappa_factor(6).unwrap(), expected);
    }
}
