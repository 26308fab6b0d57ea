//! The local index polynomial `Pₙ` on a Cartan subalgebra: direct evaluation,
//! the graph sum, sign averaging and the closed genus product.

pub mod closed;
pub mod direct;
pub mod graphs;
pub mod identities;

use std::fmt;

use num_traits::Zero;

use crate::algebra::AlgebraContext;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::Rational;

pub use closed::{closed_form, closed_form_evaluated, closed_form_pre_average};
pub use direct::{pn_direct, MAX_DIRECT};
pub use graphs::{enumerate_graphs, pn_graphsum, IndexGraph, MAX_GRAPHSUM};

/// Variable layout `γ₁..γₙ, λ₁..λ_a, κ₁..κ_ẑ, x₂, ħ` of a Cartan polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CartanLayout {
    pub n: usize,
    pub a: usize,
    pub zhat: usize,
}

impl CartanLayout {
    pub fn of(ctx: &AlgebraContext) -> Self {
        CartanLayout {
            n: ctx.n(),
            a: ctx.a(),
            zhat: ctx.zhat(),
        }
    }

    pub fn gamma(&self, i: usize) -> usize {
        i
    }

    pub fn lambda(&self, r: usize) -> usize {
        self.n + r
    }

    pub fn kappa(&self, s: usize) -> usize {
        self.n + self.a + s
    }

    pub fn x2(&self) -> usize {
        self.n + self.a + self.zhat
    }

    pub fn hbar(&self) -> usize {
        self.x2() + 1
    }

    pub fn num_vars(&self) -> usize {
        self.hbar() + 1
    }

    pub fn names(&self) -> Vec<String> {
        let mut out = Vec::with_capacity(self.num_vars());
        out.extend((1..=self.n).map(|i| format!("g{i}")));
        out.extend((1..=self.a).map(|i| format!("l{i}")));
        out.extend((1..=self.zhat).map(|i| format!("k{i}")));
        out.push("x2".into());
        out.push("hbar".into());
        out
    }
}

/// An exact polynomial in the Cartan parameters and `ħ`.
#[derive(Clone, PartialEq, Eq)]
pub struct CartanPolynomial {
    layout: CartanLayout,
    poly: Poly,
}

impl CartanPolynomial {
    pub fn new(layout: CartanLayout, poly: Poly) -> Self {
        assert_eq!(poly.nvars(), layout.num_vars());
        CartanPolynomial { layout, poly }
    }

    pub fn zero(layout: CartanLayout) -> Self {
        Self::new(layout, Poly::zero(layout.num_vars()))
    }

    pub fn layout(&self) -> CartanLayout {
        self.layout
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.layout, self.poly.scale(c))
    }

    /// Part of total degree `d` in the Cartan parameters (ignoring `ħ`).
    pub fn cartan_degree_part(&self, d: u32) -> Self {
        let h = self.layout.hbar();
        let p = self
            .poly
            .filter(|e| e.iter().enumerate().filter(|(i, _)| *i != h).map(|(_, k)| k).sum::<u32>() == d);
        Self::new(self.layout, p)
    }

    /// Substitutes numeric Cartan parameters, leaving a polynomial in `ħ`.
    pub fn evaluate(&self, x: &CartanElement) -> Result<Poly> {
        x.check(self.layout)?;
        let mut out = Poly::zero(1);
        for (e, c) in self.poly.terms() {
            let mut v = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if i == self.layout.hbar() || k == 0 {
                    continue;
                }
                v *= crate::rational::pow(x.value(self.layout, i), k);
            }
            if !v.is_zero() {
                out.add_term(smallvec::smallvec![e[self.layout.hbar()]], v);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for CartanPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.poly.display_with(&self.layout.names()))
    }
}

impl fmt::Debug for CartanPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A Cartan element `Σγᵢ qᵢpᵢ + Σλ_r η_rζ_r − Σκ_s ξ_sμ_s + x₂` with numeric coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanElement {
    pub gamma: Vec<Rational>,
    pub lambda: Vec<Rational>,
    pub kappa: Vec<Rational>,
    pub x2: Rational,
}

impl CartanElement {
    fn check(&self, layout: CartanLayout) -> Result<()> {
        for (got, expected) in [
            (self.gamma.len(), layout.n),
            (self.lambda.len(), layout.a),
            (self.kappa.len(), layout.zhat),
        ] {
            if got != expected {
                return Err(Error::ArityMismatch { expected, got });
            }
        }
        Ok(())
    }

    fn value(&self, layout: CartanLayout, var: usize) -> &Rational {
        if var < layout.lambda(0) {
            &self.gamma[var]
        } else if var < layout.kappa(0) {
            &self.lambda[var - layout.lambda(0)]
        } else if var < layout.x2() {
            &self.kappa[var - layout.kappa(0)]
        } else {
            &self.x2
        }
    }
}

/// Drops every monomial of odd degree in some `λ_r`.
pub fn average(p: &CartanPolynomial) -> CartanPolynomial {
    let layout = p.layout;
    let poly = p
        .poly
        .filter(|e| (0..layout.a).all(|r| e[layout.lambda(r)] % 2 == 0));
    CartanPolynomial::new(layout, poly)
}
