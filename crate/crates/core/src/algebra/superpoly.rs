use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::context::{AlgebraContext, Var};
use super::monomial::{mul_monomials, odd_left_derivative, Monomial};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{format_rational, int, Rational};

/// Parity of a homogeneous element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn bit(self) -> u32 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn from_bit(bit: u32) -> Self {
        if bit & 1 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A polynomial in `p, q, θ, ħ` with rational coefficients.
///
/// This is the symbol of an element of the Weyl-Clifford algebra; products
/// between symbols are either the supercommutative product ([`SuperPolynomial::mul`])
/// or the star product (see [`super::star`]).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SuperPolynomial {
    num_even: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl SuperPolynomial {
    pub fn zero_with(num_even: usize) -> Self {
        SuperPolynomial {
            num_even,
            terms: BTreeMap::new(),
        }
    }

    pub fn zero(ctx: &AlgebraContext) -> Self {
        Self::zero_with(ctx.num_even())
    }

    pub fn constant(ctx: &AlgebraContext, c: Rational) -> Self {
        Self::from_monomial(Monomial::one(ctx.num_even()), c)
    }

    pub fn one(ctx: &AlgebraContext) -> Self {
        Self::constant(ctx, Rational::one())
    }

    pub fn from_monomial(m: Monomial, c: Rational) -> Self {
        let mut out = Self::zero_with(m.even.len());
        out.add_term(m, c);
        out
    }

    pub fn var(ctx: &AlgebraContext, var: Var) -> Result<Self> {
        ctx.check_var(var)?;
        let mut m = Monomial::one(ctx.num_even());
        match var {
            Var::Theta(k) => m.odd = 1 << (k - 1),
            _ => m.even[ctx.even_slot(var).expect("checked")] = 1,
        }
        Ok(Self::from_monomial(m, Rational::one()))
    }

    /// The odd generator with 0-based θ-index `k`.
    pub fn theta(ctx: &AlgebraContext, k: usize) -> Self {
        let mut m = Monomial::one(ctx.num_even());
        m.odd = 1 << k;
        Self::from_monomial(m, Rational::one())
    }

    pub fn hbar(ctx: &AlgebraContext) -> Self {
        let mut m = Monomial::one(ctx.num_even());
        m.hbar = 1;
        Self::from_monomial(m, Rational::one())
    }

    /// The orientation monomial `Θ = θ_1⋯θ_{a+b}`.
    pub fn orientation(ctx: &AlgebraContext) -> Self {
        let mut m = Monomial::one(ctx.num_even());
        m.odd = ctx.orientation_mask();
        Self::from_monomial(m, Rational::one())
    }

    pub fn num_even(&self) -> usize {
        self.num_even
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.even.len(), self.num_even);
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Rational)> {
        self.terms.into_iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Parity if every term has the same parity; the zero polynomial is even.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(Monomial::parity);
        match it.next() {
            None => Some(Parity::Even),
            Some(first) => it
                .all(|p| p == first)
                .then(|| Parity::from_bit(first)),
        }
    }

    pub fn require_parity(&self) -> Result<Parity> {
        self.parity().ok_or(Error::NonHomogeneous)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero_with(self.num_even);
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.terms.insert(m.clone(), v * c);
        }
        out
    }

    /// Multiply by `ħ^k`.
    pub fn shift_hbar(&self, k: u32) -> Self {
        let mut out = Self::zero_with(self.num_even);
        for (m, v) in &self.terms {
            let mut m = m.clone();
            m.hbar += k;
            out.terms.insert(m, v.clone());
        }
        out
    }

    pub fn filter(&self, mut keep: impl FnMut(&Monomial) -> bool) -> Self {
        let mut out = Self::zero_with(self.num_even);
        for (m, v) in &self.terms {
            if keep(m) {
                out.terms.insert(m.clone(), v.clone());
            }
        }
        out
    }

    /// Supercommutative product of symbols.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero_with(self.num_even);
        for (x, cx) in &self.terms {
            for (y, cy) in &other.terms {
                if let Some((m, neg)) = mul_monomials(x, y) {
                    let c = cx * cy;
                    out.add_term(m, if neg { -c } else { c });
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::from_monomial(Monomial::one(self.num_even), Rational::one());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// `∂/∂var`; odd derivatives act from the left.
    pub fn partial(&self, ctx: &AlgebraContext, var: Var) -> Result<Self> {
        ctx.check_var(var)?;
        let mut out = Self::zero_with(self.num_even);
        match var {
            Var::Theta(k) => {
                for (m, c) in &self.terms {
                    if let Some((odd, neg)) = odd_left_derivative(m.odd, k - 1) {
                        let mut d = m.clone();
                        d.odd = odd;
                        out.add_term(d, if neg { -c.clone() } else { c.clone() });
                    }
                }
            }
            _ => {
                let slot = ctx.even_slot(var).expect("checked");
                for (m, c) in &self.terms {
                    let e = m.even[slot];
                    if e > 0 {
                        let mut d = m.clone();
                        d.even[slot] -= 1;
                        out.add_term(d, c * int(e as i64));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Berezin integral: the coefficient of `Θ`, as a polynomial in `p, q, ħ`.
    pub fn berezin(&self, ctx: &AlgebraContext) -> Self {
        let full = ctx.orientation_mask();
        let mut out = Self::zero_with(self.num_even);
        for (m, c) in &self.terms {
            if m.odd == full {
                let mut r = m.clone();
                r.odd = 0;
                out.add_term(r, c.clone());
            }
        }
        out
    }

    /// Set every `p, q` to zero.
    pub fn at_even_origin(&self) -> Self {
        self.filter(Monomial::is_even_free)
    }

    /// Coefficients of an even-free, odd-free polynomial as a polynomial in `ħ`.
    pub fn hbar_polynomial(&self) -> Result<Poly> {
        let mut out = Poly::zero(1);
        for (m, c) in &self.terms {
            if !m.is_even_free() || m.odd != 0 {
                return Err(Error::DegreeMismatch(
                    "expected a polynomial in hbar only".into(),
                ));
            }
            out.add_term(smallvec::smallvec![m.hbar], c.clone());
        }
        Ok(out)
    }

    /// Canonical text form, e.g. `th1*th2 + 1/2 hbar`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let n = self.num_even / 2;
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let factors = monomial_factors(m, n);
            if factors.is_empty() {
                out.push_str(&format_rational(&mag));
            } else {
                if !mag.is_one() {
                    let _ = write!(out, "{} ", format_rational(&mag));
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

fn monomial_factors(m: &Monomial, n: usize) -> Vec<String> {
    let mut f = Vec::new();
    let power = |name: String, e: u32| {
        if e == 1 {
            name
        } else {
            format!("{name}^{e}")
        }
    };
    if m.hbar > 0 {
        f.push(power("hbar".into(), m.hbar));
    }
    for (slot, &e) in m.even.iter().enumerate() {
        if e > 0 {
            let name = if slot < n {
                format!("p{}", slot + 1)
            } else {
                format!("q{}", slot - n + 1)
            };
            f.push(power(name, e));
        }
    }
    let mut bits = m.odd;
    while bits != 0 {
        let k = bits.trailing_zeros();
        f.push(format!("th{}", k + 1));
        bits &= bits - 1;
    }
    f
}

impl std::fmt::Debug for SuperPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl std::fmt::Display for SuperPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl AddAssign<&SuperPolynomial> for SuperPolynomial {
    fn add_assign(&mut self, rhs: &SuperPolynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&SuperPolynomial> for SuperPolynomial {
    fn sub_assign(&mut self, rhs: &SuperPolynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Add for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn add(self, rhs: &SuperPolynomial) -> SuperPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn sub(self, rhs: &SuperPolynomial) -> SuperPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn neg(self) -> SuperPolynomial {
        self.scale(&-Rational::one())
    }
}

impl Mul for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn mul(self, rhs: &SuperPolynomial) -> SuperPolynomial {
        SuperPolynomial::mul(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn supercommutative_product_signs() {
        let ctx = AlgebraContext::new(0, 1, 1).unwrap();
        let t1 = SuperPolynomial::theta(&ctx, 0);
        let t2 = SuperPolynomial::theta(&ctx, 1);
        assert_eq!((&t1 * &t2).to_text(), "th1*th2");
        assert_eq!((&t2 * &t1).to_text(), "-th1*th2");
        assert!((&t1 * &t1).is_zero());
    }

    #[test]
    fn derivatives() {
        let ctx = AlgebraContext::new(1, 1, 1).unwrap();
        let theta = SuperPolynomial::orientation(&ctx);
        let d2 = theta.partial(&ctx, Var::Theta(2)).unwrap();
        assert_eq!(d2.to_text(), "-th1");
        let p = SuperPolynomial::var(&ctx, Var::P(1)).unwrap();
        let p3 = p.pow(3);
        assert_eq!(p3.partial(&ctx, Var::P(1)).unwrap().to_text(), "3 p1^2");
        assert!(p3.partial(&ctx, Var::Q(1)).unwrap().is_zero());
    }

    #[test]
    fn parity_and_berezin() {
        let ctx = AlgebraContext::new(0, 1, 1).unwrap();
        let t1 = SuperPolynomial::theta(&ctx, 0);
        let one = SuperPolynomial::one(&ctx);
        assert_eq!(t1.parity(), Some(Parity::Odd));
        assert_eq!((&t1 + &one).parity(), None);
        let theta = SuperPolynomial::orientation(&ctx);
        assert_eq!(theta.scale(&int(3)).berezin(&ctx).to_text(), "3");
        assert!(t1.berezin(&ctx).is_zero());
    }
}
