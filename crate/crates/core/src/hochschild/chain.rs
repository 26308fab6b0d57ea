use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::monomial::{odd_left_derivative, Monomial};
use crate::algebra::SuperPolynomial;
use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// A pure tensor of monomials `m₀ ⊗ ⋯ ⊗ m_k`.
pub type Tensor = Vec<Monomial>;

/// A finite linear combination of pure tensors of a fixed arity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorChain {
    arity: usize,
    terms: BTreeMap<Tensor, Rational>,
}

impl TensorChain {
    pub fn zero(arity: usize) -> Self {
        TensorChain {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn pure(tensor: Tensor, c: Rational) -> Self {
        let mut out = Self::zero(tensor.len());
        out.add(tensor, c);
        out
    }

    /// Multilinear expansion of `f₀ ⊗ ⋯ ⊗ f_k`.
    pub fn from_slots(slots: &[SuperPolynomial]) -> Self {
        let mut partial: Vec<(Tensor, Rational)> = vec![(Vec::new(), Rational::one())];
        for f in slots {
            let mut next = Vec::with_capacity(partial.len() * f.len());
            for (t, c) in &partial {
                for (m, v) in f.terms() {
                    let mut t2 = t.clone();
                    t2.push(m.clone());
                    next.push((t2, c * v));
                }
            }
            partial = next;
        }
        let mut out = Self::zero(slots.len());
        for (t, c) in partial {
            out.add(t, c);
        }
        out
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn add(&mut self, t: Tensor, c: Rational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(t.len(), self.arity);
        match self.terms.entry(t) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_chain(&mut self, other: &TensorChain, scale: &Rational) {
        for (t, c) in &other.terms {
            self.add(t.clone(), c * scale);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.arity);
        out.add_chain(self, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Tensor, &Rational)> {
        self.terms.iter()
    }

    /// Total polynomial degree in `p, q, θ` of the heaviest term.
    pub fn max_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|t| t.iter().map(|m| m.even_degree() + m.odd_degree()).sum())
            .max()
            .unwrap_or(0)
    }

    /// Render as `c [m₀ | m₁ | …]` lines, for debugging and golden output.
    pub fn to_text(&self) -> String {
        let mut lines = Vec::new();
        for (t, c) in &self.terms {
            let slots: Vec<String> = t
                .iter()
                .map(|m| SuperPolynomial::from_monomial(m.clone(), Rational::one()).to_text())
                .collect();
            lines.push(format!(
                "{} [{}]",
                crate::rational::format_rational(c),
                slots.join(" | ")
            ));
        }
        lines.join("\n")
    }

    pub(crate) fn check_slot(&self, slot: usize) -> Result<()> {
        if slot < self.arity {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: slot,
                limit: self.arity,
            })
        }
    }

    /// Apply a map on pure tensors linearly.
    pub fn map_linear(&self, mut f: impl FnMut(&Tensor, &Rational, &mut TensorChain)) -> TensorChain {
        let mut out = TensorChain::zero(self.arity);
        for (t, c) in &self.terms {
            f(t, c, &mut out);
        }
        out
    }
}

/// Parity of slots `0..slot`.
fn parity_before(t: &Tensor, slot: usize) -> bool {
    t[..slot].iter().map(Monomial::parity).sum::<u32>() & 1 == 1
}

/// `∂/∂(even var at position idx)` on one slot.
pub fn slot_partial_even(t: &Tensor, slot: usize, idx: usize) -> Option<(Tensor, Rational)> {
    let e = t[slot].even[idx];
    if e == 0 {
        return None;
    }
    let mut out = t.clone();
    out[slot].even[idx] -= 1;
    Some((out, int(i64::from(e))))
}

/// `∂/∂θ_m` on one slot, with the Koszul sign of passing the earlier slots.
pub fn slot_partial_odd(t: &Tensor, slot: usize, m: usize) -> Option<(Tensor, bool)> {
    let (odd, neg) = odd_left_derivative(t[slot].odd, m)?;
    let koszul = parity_before(t, slot);
    let mut out = t.clone();
    out[slot].odd = odd;
    Some((out, neg ^ koszul))
}

/// Multiply the tensor by `ħ^k` (carried on slot 0).
pub fn with_hbar(mut t: Tensor, k: u32) -> Tensor {
    if let Some(first) = t.first_mut() {
        first.hbar += k;
    }
    t
}

