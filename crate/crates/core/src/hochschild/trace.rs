use std::collections::HashMap;
use std::sync::Mutex;

use num_traits::Zero;
use rayon::prelude::*;

use super::chain::{Tensor, TensorChain};
use super::ops::{omega_expand, pi_2n};
use crate::algebra::star::star_all;
use crate::algebra::{AlgebraContext, Monomial, SuperPolynomial};
use crate::bernoulli::IntegralCache;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::Rational;

/// How `Υ` multiplies the slots after the even variables are evaluated at 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SlotProduct {
    /// Evaluate each slot at `y = 0`, then take the Clifford product.
    Clifford,
    /// Evaluate each slot at `y = 0`, then take the supercommutative product.
    Supercommutative,
    /// Star-multiply the full slots, then evaluate at `y = 0`.
    Star,
}

/// The sign and placement conventions of `ω` and `Υ` that the cocycle depends on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TraceConvention {
    /// Include the pairs `(0, j)` in `ω` (with `v₀ = 0`).
    pub root_pairs: bool,
    /// Sign `s` in `ħψ(α_ij + s·g_ij)`.
    pub g_sign: i64,
    pub slot_product: SlotProduct,
}

impl Default for TraceConvention {
    fn default() -> Self {
        TraceConvention {
            root_pairs: true,
            g_sign: -1,
            slot_product: SlotProduct::Supercommutative,
        }
    }
}

/// `Υ(m₀ ⊗ ⋯ ⊗ m_k)` as a polynomial in `ħ` (one variable).
pub fn upsilon_tensor(ctx: &AlgebraContext, t: &Tensor, product: SlotProduct) -> Poly {
    let as_poly = |m: &Monomial| SuperPolynomial::from_monomial(m.clone(), Rational::from_integer(1.into()));
    let value = match product {
        SlotProduct::Clifford => {
            if t.iter().any(|m| !m.is_even_free()) {
                return Poly::zero(1);
            }
            let slots: Vec<SuperPolynomial> = t.iter().map(as_poly).collect();
            star_all(ctx, &slots)
        }
        SlotProduct::Supercommutative => {
            if t.iter().any(|m| !m.is_even_free()) {
                return Poly::zero(1);
            }
            let mut acc = SuperPolynomial::one(ctx);
            for m in t {
                acc = acc.mul(&as_poly(m));
            }
            acc
        }
        SlotProduct::Star => {
            let slots: Vec<SuperPolynomial> = t.iter().map(as_poly).collect();
            star_all(ctx, &slots).at_even_origin()
        }
    };
    value
        .berezin(ctx)
        .at_even_origin()
        .hbar_polynomial()
        .expect("berezin at the origin is a polynomial in hbar")
}

/// `Υ` on a list of symbols (multilinear extension).
pub fn upsilon(ctx: &AlgebraContext, slots: &[SuperPolynomial], product: SlotProduct) -> Poly {
    let chain = TensorChain::from_slots(slots);
    let mut out = Poly::zero(1);
    for (t, c) in chain.terms() {
        out += &upsilon_tensor(ctx, t, product).scale(c);
    }
    out
}

/// The supertrace cocycle `τ_{2n|a,b} = Υ ∫_{Δ_{2n}} ω ∘ π_{2n}`.
#[derive(Debug)]
pub struct Cocycle {
    ctx: AlgebraContext,
    n: usize,
    convention: TraceConvention,
    integrals: IntegralCache,
    memo: Mutex<HashMap<Tensor, Poly>>,
}

impl Cocycle {
    pub fn new(ctx: &AlgebraContext) -> Self {
        Self::with_convention(ctx, TraceConvention::default())
    }

    pub fn with_convention(ctx: &AlgebraContext, convention: TraceConvention) -> Self {
        Cocycle {
            ctx: ctx.clone(),
            n: ctx.n(),
            convention,
            integrals: IntegralCache::new(),
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn context(&self) -> &AlgebraContext {
        &self.ctx
    }

    pub fn arity(&self) -> usize {
        2 * self.n + 1
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        let k = 2 * self.n;
        let start = if self.convention.root_pairs { 0 } else { 1 };
        let mut out = Vec::new();
        for i in start..=k {
            for j in i + 1..=k {
                out.push((i, j));
            }
        }
        out
    }

    /// `τ` on a pure tensor of monomials.
    pub fn eval_tensor(&self, t: &Tensor) -> Result<Poly> {
        if t.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                got: t.len(),
            });
        }
        if let Some(v) = self.memo.lock().expect("memo poisoned").get(t) {
            return Ok(v.clone());
        }
        let v = self.compute(t)?;
        self.memo
            .lock()
            .expect("memo poisoned")
            .insert(t.clone(), v.clone());
        Ok(v)
    }

    fn compute(&self, t: &Tensor) -> Result<Poly> {
        // parity selection rule: Υ needs total odd parity a+b
        let parity: u32 = t.iter().map(Monomial::parity).sum();
        if (parity as usize) % 2 != self.ctx.num_odd() % 2 {
            return Ok(Poly::zero(1));
        }
        let chain = TensorChain::pure(t.clone(), Rational::from_integer(1.into()));
        let projected = pi_2n(&self.ctx, &chain)?;
        if projected.is_zero() {
            return Ok(Poly::zero(1));
        }
        let pairs = self.pairs();
        let k = 2 * self.n;
        let mut out = Poly::zero(1);
        for term in omega_expand(&self.ctx, &projected, &pairs, self.convention.g_sign)? {
            let factors: Vec<(usize, usize, u32)> = pairs
                .iter()
                .zip(&term.powers)
                .filter(|(_, &e)| e > 0)
                .map(|(&(i, j), &e)| (i, j, e))
                .collect();
            let weight = self.integrals.simplex(k, &factors);
            if weight.is_zero() {
                continue;
            }
            for (tensor, c) in term.chain.terms() {
                let u = upsilon_tensor(&self.ctx, tensor, self.convention.slot_product);
                if !u.is_zero() {
                    out += &u.scale(&(c * &weight));
                }
            }
        }
        Ok(out)
    }

    /// `τ` on a chain (linear extension).
    pub fn eval_chain(&self, chain: &TensorChain) -> Result<Poly> {
        let terms: Vec<(&Tensor, &Rational)> = chain.terms().collect();
        let parts = terms
            .par_iter()
            .map(|(t, c)| self.eval_tensor(t).map(|v| v.scale(c)))
            .collect::<Result<Vec<Poly>>>()?;
        let mut out = Poly::zero(1);
        for p in parts {
            out += &p;
        }
        Ok(out)
    }

    /// `τ(f₀ ⊗ ⋯ ⊗ f_{2n})`.
    pub fn eval(&self, slots: &[SuperPolynomial]) -> Result<Poly> {
        if slots.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                got: slots.len(),
            });
        }
        self.eval_chain(&TensorChain::from_slots(slots))
    }
}

/// `τ_{2n|a,b}` with the default conventions.
pub fn tau(ctx: &AlgebraContext, slots: &[SuperPolynomial]) -> Result<Poly> {
    Cocycle::new(ctx).eval(slots)
}
