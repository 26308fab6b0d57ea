use num_traits::One;

use crate::algebra::{star, AlgebraContext, SuperPolynomial};
use crate::error::Result;
use crate::rational::Rational;

/// A formal linear combination of chains of symbols.
pub type FormalSum = Vec<(Rational, Vec<SuperPolynomial>)>;

/// The Hochschild boundary of `a₀ ⊗ ⋯ ⊗ a_{k+1}`:
///
/// `Σ_{i≤k} (−1)^i a₀⊗⋯⊗(a_i⋆a_{i+1})⊗⋯ + (−1)^{k+1}(−1)^{|a_{k+1}|(|a₀|+⋯+|a_k|)} (a_{k+1}⋆a₀)⊗a₁⊗⋯⊗a_k`.
pub fn hochschild_boundary(ctx: &AlgebraContext, chain: &[SuperPolynomial]) -> Result<FormalSum> {
    let len = chain.len();
    let mut out = FormalSum::new();
    if len < 2 {
        return Ok(out);
    }
    for i in 0..len - 1 {
        let mut next = Vec::with_capacity(len - 1);
        next.extend_from_slice(&chain[..i]);
        next.push(star(ctx, &chain[i], &chain[i + 1]));
        next.extend_from_slice(&chain[i + 2..]);
        let sign = if i % 2 == 0 { Rational::one() } else { -Rational::one() };
        out.push((sign, next));
    }
    let last = &chain[len - 1];
    let last_parity = last.require_parity()?.bit();
    let mut rest_parity = 0;
    for a in &chain[..len - 1] {
        rest_parity ^= a.require_parity()?.bit();
    }
    let mut wrap = Vec::with_capacity(len - 1);
    wrap.push(star(ctx, last, &chain[0]));
    wrap.extend_from_slice(&chain[1..len - 1]);
    let negative = ((len - 1) % 2 == 1) ^ (last_parity & rest_parity == 1);
    out.push((if negative { -Rational::one() } else { Rational::one() }, wrap));
    Ok(out)
}

/// Apply the boundary to every chain of a formal sum.
pub fn boundary_of_sum(ctx: &AlgebraContext, sum: &FormalSum) -> Result<FormalSum> {
    let mut out = FormalSum::new();
    for (c, chain) in sum {
        for (s, next) in hochschild_boundary(ctx, chain)? {
            out.push((c * s, next));
        }
    }
    Ok(out)
}

/// Whether a formal sum vanishes after multilinear expansion.
pub fn formal_sum_is_zero(sum: &FormalSum) -> bool {
    use super::chain::TensorChain;
    let Some((_, first)) = sum.first() else {
        return true;
    };
    let mut acc = TensorChain::zero(first.len());
    for (c, chain) in sum {
        acc.add_chain(&TensorChain::from_slots(chain), c);
    }
    acc.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_superpoly, super_bracket};

    #[test]
    fn arity_two_is_bracket() {
        let ctx = AlgebraContext::new(1, 1, 1).unwrap();
        let x = parse_superpoly(&ctx, "p1*th1").unwrap();
        let y = parse_superpoly(&ctx, "q1*th2 + th1").unwrap();
        let d = hochschild_boundary(&ctx, &[x.clone(), y.clone()]).unwrap();
        let mut total = SuperPolynomial::zero(&ctx);
        for (c, ch) in d {
            total += &ch[0].scale(&c);
        }
        assert_eq!(total, super_bracket(&ctx, &x, &y).unwrap());
    }

    #[test]
    fn boundary_squares_to_zero() {
        let ctx = AlgebraContext::new(1, 1, 1).unwrap();
        let chain: Vec<SuperPolynomial> = ["p1 + th1*th2", "th1", "q1*th2", "p1*q1"]
            .iter()
            .map(|s| parse_superpoly(&ctx, s).unwrap())
            .collect();
        let d = hochschild_boundary(&ctx, &chain).unwrap();
        assert!(formal_sum_is_zero(&boundary_of_sum(&ctx, &d).unwrap()));
    }
}
