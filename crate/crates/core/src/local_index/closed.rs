use num_traits::One;

use super::{CartanLayout, CartanPolynomial};
use crate::algebra::AlgebraContext;
use crate::error::Result;
use crate::genera::series::{exp_coeffs, named_coeffs, Coefficients};
use crate::genera::TruncatedSeries;
use crate::poly::{Exponents, Poly};
use crate::rational::{factorial, sign_pow, Rational};

/// `(e^t − 1)/t`.
fn exp_minus_one_over_t(order: u32) -> Coefficients {
    (0..=order)
        .map(|k| Rational::new(1.into(), factorial(k + 1)))
        .collect()
}

fn product(
    layout: CartanLayout,
    n: usize,
    lambda_series: &Coefficients,
    kappa_series: &Coefficients,
    sign: Rational,
    scale: Rational,
) -> Result<CartanPolynomial> {
    let order = n as u32;
    let nv = layout.num_vars();
    let names = layout.names()[..nv - 1].to_vec();
    let ahat = named_coeffs("Ahat", order)?;
    let chat = kappa_series;
    let mut acc = TruncatedSeries::one(names.clone(), order)?;
    for v in 0..nv - 1 {
        let coeffs = if v < layout.lambda(0) {
            ahat.clone()
        } else if v < layout.kappa(0) {
            lambda_series.clone()
        } else if v < layout.x2() {
            chat.clone()
        } else {
            exp_coeffs(order)
        };
        let mut linear = vec![Rational::from_integer(0.into()); nv - 1];
        linear[v] = Rational::one();
        acc = acc.mul(&TruncatedSeries::compose_linear(names.clone(), order, &coeffs, &linear)?)?;
    }
    let sign = sign * scale;
    let mut out = Poly::zero(nv);
    for (e, c) in acc.homogeneous_part(order).terms() {
        // each γ, λ, κ enters as ħ·(parameter)
        let hbar: u32 = e[..layout.x2()].iter().sum();
        let mut full = Exponents::from_elem(0, nv);
        full[..nv - 1].copy_from_slice(e);
        full[layout.hbar()] = hbar;
        out.add_term(full, c * &sign);
    }
    Ok(CartanPolynomial::new(layout, out))
}

/// `(−1)^{a+ẑ}[∏Â(ħγᵢ)·∏B̂(ħλ_r)·∏Ĉ(ħκ_s)·e^{x₂}]_n`, degree counted in the Cartan parameters.
pub fn closed_form(ctx: &AlgebraContext, n: usize) -> Result<CartanPolynomial> {
    let order = n as u32;
    product(
        CartanLayout::of(ctx),
        n,
        &named_coeffs("Bhat", order)?,
        &named_coeffs("Chat", order)?,
        closed_form_sign(ctx),
        Rational::one(),
    )
}

fn closed_form_sign(ctx: &AlgebraContext) -> Rational {
    sign_pow((ctx.a() + ctx.zhat()) as u32)
}

/// The product before sign averaging: `B̂(t)` replaced by `cosh(t/2)(e^t − 1)/t`.
pub fn closed_form_pre_average(ctx: &AlgebraContext, n: usize) -> Result<CartanPolynomial> {
    let order = n as u32;
    let half = Rational::new(1.into(), 2.into());
    let cosh_half = crate::genera::series::rescale_coeffs(&named_coeffs("cosh", order)?, &half);
    let series = crate::genera::series::mul_coeffs(&cosh_half, &exp_minus_one_over_t(order), order);
    product(
        CartanLayout::of(ctx),
        n,
        &series,
        &named_coeffs("Chat", order)?,
        closed_form_sign(ctx),
        Rational::one(),
    )
}

/// `n!·[∏Â(ħγᵢ)·∏cosh(ħλ_r/2)·∏cos(ħκ_s/2)·e^{x₂}]_n`: the generating function the
/// graph sum actually produces, with no overall sign.
pub fn closed_form_evaluated(ctx: &AlgebraContext, n: usize) -> Result<CartanPolynomial> {
    let order = n as u32;
    let half = Rational::new(1.into(), 2.into());
    product(
        CartanLayout::of(ctx),
        n,
        &crate::genera::series::rescale_coeffs(&named_coeffs("cosh", order)?, &half),
        &crate::genera::series::rescale_coeffs(&named_coeffs("cos", order)?, &half),
        Rational::one(),
        Rational::from_integer(factorial(order)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn examples() {
        let ctx = AlgebraContext::new(1, 1, 1).unwrap();
        let l = CartanLayout::of(&ctx);
        let c = closed_form(&ctx, 1).unwrap();
        assert_eq!(c.poly(), &Poly::monomial(l.num_vars(), l.x2(), 1, int(-1)));
        let ctx = AlgebraContext::new(1, 0, 0).unwrap();
        let c = closed_form(&ctx, 2).unwrap();
        assert_eq!(c.poly().coeff(&[2, 0, 2]), rat(-1, 24));
        for (n, a, b) in [(0, 0, 0), (1, 1, 1), (2, 0, 3)] {
            let ctx = AlgebraContext::new(n, a, b).unwrap();
            let l = CartanLayout::of(&ctx);
            let expect = sign_pow((ctx.a() + ctx.zhat()) as u32);
            assert_eq!(closed_form(&ctx, 0).unwrap().poly(), &Poly::constant(l.num_vars(), expect));
        }
    }
}
