use num_traits::Zero;
use rayon::prelude::*;

use super::{CartanLayout, CartanPolynomial};
use crate::algebra::{phi_embed, AlgebraContext, CartanBasis, SuperPolynomial};
use crate::bernoulli::IntegralCache;
use crate::error::{Error, Result};
use crate::hochschild::trace::upsilon_tensor;
use crate::hochschild::{omega_expand, TensorChain, TraceConvention};
use crate::poly::{Exponents, Poly};
use crate::rational::{factorial, Rational};

/// Largest `n` accepted by [`pn_direct`].
pub const MAX_DIRECT: usize = 3;

/// The Cartan generators with the index of their coefficient variable.
fn cartan_generators(ctx: &AlgebraContext, layout: CartanLayout) -> Result<Vec<(usize, SuperPolynomial)>> {
    let mut out = Vec::new();
    for i in 0..layout.n {
        out.push((layout.gamma(i), phi_embed(ctx, CartanBasis::Symplectic(i + 1))?));
    }
    for r in 0..layout.a {
        out.push((layout.lambda(r), phi_embed(ctx, CartanBasis::Hyperbolic(r + 1))?));
    }
    for s in 0..layout.zhat {
        out.push((layout.kappa(s), phi_embed(ctx, CartanBasis::Definite(s + 1))?));
    }
    out.push((layout.x2(), phi_embed(ctx, CartanBasis::Center)?));
    Ok(out)
}

/// Nondecreasing index sequences of length `n` over `0..k`.
fn multisets(k: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, n: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for c in start..k {
            cur.push(c);
            rec(k, n, c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, n, 0, &mut Vec::new(), &mut out);
    out
}

/// `Υ ∫_{[0,1]^n} ω(f₀ ⊗ f₁ ⊗ ⋯ ⊗ fₙ) dv₁⋯dvₙ` with `v₀ = 0`, as a polynomial in `ħ`.
pub fn cube_weight(
    ctx: &AlgebraContext,
    slots: &[SuperPolynomial],
    convention: TraceConvention,
    integrals: &IntegralCache,
) -> Result<Poly> {
    let k = slots.len() - 1;
    let start = if convention.root_pairs { 0 } else { 1 };
    let pairs: Vec<(usize, usize)> = (start..=k)
        .flat_map(|i| (i + 1..=k).map(move |j| (i, j)))
        .collect();
    let chain = TensorChain::from_slots(slots);
    let mut out = Poly::zero(1);
    for term in omega_expand(ctx, &chain, &pairs, convention.g_sign)? {
        let factors: Vec<(usize, usize, u32)> = pairs
            .iter()
            .zip(&term.powers)
            .filter(|(_, &e)| e > 0)
            .map(|(&(i, j), &e)| (i, j, e))
            .collect();
        let weight = integrals.cube(k, &factors);
        if weight.is_zero() {
            continue;
        }
        for (tensor, c) in term.chain.terms() {
            let u = upsilon_tensor(ctx, tensor, convention.slot_product);
            if !u.is_zero() {
                out += &u.scale(&(c * &weight));
            }
        }
    }
    Ok(out)
}

/// `Pₙ(X, …, X) = Υ ∫_{[0,1]^n} ω(Θ ⊗ X^{⊗n})` for the generic Cartan element `X`.
pub fn pn_direct(ctx: &AlgebraContext, n: usize) -> Result<CartanPolynomial> {
    pn_direct_with(ctx, n, TraceConvention::default())
}

pub fn pn_direct_with(ctx: &AlgebraContext, n: usize, convention: TraceConvention) -> Result<CartanPolynomial> {
    if n > MAX_DIRECT {
        return Err(Error::BoundExceeded(format!(
            "direct evaluation supports n <= {MAX_DIRECT}, got {n}"
        )));
    }
    let layout = CartanLayout::of(ctx);
    let nv = layout.num_vars();
    let generators = cartan_generators(ctx, layout)?;
    let theta = SuperPolynomial::orientation(ctx);
    let integrals = IntegralCache::new();
    let n_fact = Rational::from_integer(factorial(n as u32));
    let parts = multisets(generators.len(), n)
        .into_par_iter()
        .map(|choice| -> Result<Poly> {
            let mut slots = vec![theta.clone()];
            let mut exps = Exponents::from_elem(0, nv);
            for &c in &choice {
                slots.push(generators[c].1.clone());
                exps[generators[c].0] += 1;
            }
            // number of orderings of the multiset
            let mut mult = n_fact.clone();
            let mut run = 1u32;
            for w in 1..=choice.len() {
                if w < choice.len() && choice[w] == choice[w - 1] {
                    run += 1;
                } else {
                    mult /= Rational::from_integer(factorial(run));
                    run = 1;
                }
            }
            let value = cube_weight(ctx, &slots, convention, &integrals)?;
            let mut out = Poly::zero(nv);
            for (e, c) in value.terms() {
                let mut full = exps.clone();
                full[layout.hbar()] = e[0];
                out.add_term(full, c * &mult);
            }
            Ok(out)
        })
        .collect::<Result<Vec<Poly>>>()?;
    let mut total = Poly::zero(nv);
    for p in parts {
        total += &p;
    }
    Ok(CartanPolynomial::new(layout, total))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiset_counts() {
        assert_eq!(multisets(3, 2).len(), 6);
        assert_eq!(multisets(4, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn degree_zero_is_one() {
        for (a, b) in [(0, 0), (1, 1), (0, 3)] {
            let ctx = AlgebraContext::new(1, a, b).unwrap();
            let p = pn_direct(&ctx, 0).unwrap();
            assert_eq!(p.poly(), &Poly::one(CartanLayout::of(&ctx).num_vars()));
        }
        let ctx = AlgebraContext::new(0, 0, 0).unwrap();
        assert!(pn_direct(&ctx, 4).is_err());
    }
}
