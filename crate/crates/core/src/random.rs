//! Seeded random elements for property checks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::monomial::Monomial;
use crate::algebra::{AlgebraContext, Parity, SuperPolynomial};
use crate::rational::int;

/// All monomials (without `ħ`) of total degree `≤ max_degree`.
pub fn monomials_up_to(ctx: &AlgebraContext, max_degree: u32) -> Vec<Monomial> {
    let even = ctx.num_even();
    let mut evens: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..even {
        let mut next = Vec::new();
        for e in &evens {
            let used: u32 = e.iter().sum();
            for k in 0..=max_degree - used {
                let mut e2 = e.clone();
                e2.push(k);
                next.push(e2);
            }
        }
        evens = next;
    }
    let mut out = Vec::new();
    for e in &evens {
        let used: u32 = e.iter().sum();
        for mask in 0u32..(1 << ctx.num_odd()) {
            if used + mask.count_ones() <= max_degree {
                out.push(Monomial {
                    even: e.iter().copied().collect(),
                    odd: mask,
                    hbar: 0,
                });
            }
        }
    }
    out.sort();
    out
}

/// Random element with coefficients uniform in `{−3..3}` over the monomials of the
/// given parity and degree `≤ max_degree`; never zero.
pub fn random_element<R: Rng>(
    ctx: &AlgebraContext,
    rng: &mut R,
    max_degree: u32,
    parity: Parity,
) -> SuperPolynomial {
    let pool: Vec<Monomial> = monomials_up_to(ctx, max_degree)
        .into_iter()
        .filter(|m| m.parity() == parity.bit())
        .collect();
    assert!(!pool.is_empty(), "no monomials of parity {parity:?}");
    loop {
        let mut f = SuperPolynomial::zero(ctx);
        for m in &pool {
            f.add_term(m.clone(), int(rng.gen_range(-3..=3)));
        }
        if !f.is_zero() {
            return f;
        }
    }
}

/// Like [`random_element`], but supported on at most `max_terms` monomials drawn
/// without replacement when the monomial pool is larger than that.
pub fn random_sparse<R: Rng>(
    ctx: &AlgebraContext,
    rng: &mut R,
    max_degree: u32,
    parity: Parity,
    max_terms: usize,
) -> SuperPolynomial {
    let pool: Vec<Monomial> = monomials_up_to(ctx, max_degree)
        .into_iter()
        .filter(|m| m.parity() == parity.bit())
        .collect();
    assert!(!pool.is_empty(), "no monomials of parity {parity:?}");
    let support: Vec<&Monomial> = if pool.len() <= max_terms {
        pool.iter().collect()
    } else {
        pool.choose_multiple(rng, max_terms).collect()
    };
    loop {
        let mut f = SuperPolynomial::zero(ctx);
        for m in &support {
            f.add_term((*m).clone(), int(rng.gen_range(-3..=3)));
        }
        if !f.is_zero() {
            return f;
        }
    }
}

/// Random element of random parity (odd only if the context has odd generators).
pub fn random_homogeneous<R: Rng>(ctx: &AlgebraContext, rng: &mut R, max_degree: u32) -> SuperPolynomial {
    let parity = if ctx.num_odd() > 0 && rng.gen_bool(0.5) {
        Parity::Odd
    } else {
        Parity::Even
    };
    random_element(ctx, rng, max_degree, parity)
}

/// Random chain of homogeneous elements.
pub fn random_chain<R: Rng>(
    ctx: &AlgebraContext,
    rng: &mut R,
    arity: usize,
    max_degree: u32,
) -> Vec<SuperPolynomial> {
    (0..arity)
        .map(|_| random_homogeneous(ctx, rng, max_degree))
        .collect()
}
