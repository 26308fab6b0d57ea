use std::collections::HashMap;

use num_traits::{One, Zero};

use super::context::AlgebraContext;
use super::monomial::{mul_monomials, odd_left_derivative, Monomial};
use super::superpoly::SuperPolynomial;
use crate::error::Result;
use crate::rational::{factorial, int, Rational};

type PairMap = HashMap<(Monomial, Monomial), Rational>;

fn bump(map: &mut PairMap, key: (Monomial, Monomial), c: Rational) {
    if c.is_zero() {
        return;
    }
    let e = map.entry(key).or_insert_with(Rational::zero);
    *e += c;
}

/// One application of the Poisson bivector
/// `Σ_l (∂p_l⊗∂q_l − ∂q_l⊗∂p_l) − Σ h^{ml} ∂θ_m⊗∂θ_l`
/// with the Koszul rule `(D1⊗D2)(x⊗y) = (−1)^{|D2||x|} D1x ⊗ D2y`.
fn apply_bivector(ctx: &AlgebraContext, pairs: &PairMap) -> PairMap {
    let n = ctx.n();
    let m_odd = ctx.num_odd();
    let mut out = PairMap::new();
    for ((x, y), c) in pairs {
        for l in 0..n {
            let (pl, ql) = (l, n + l);
            for (dx, dy, sign) in [(pl, ql, 1i64), (ql, pl, -1i64)] {
                let ex = x.even[dx];
                let ey = y.even[dy];
                if ex == 0 || ey == 0 {
                    continue;
                }
                let mut x2 = x.clone();
                x2.even[dx] -= 1;
                let mut y2 = y.clone();
                y2.even[dy] -= 1;
                bump(&mut out, (x2, y2), c * int(sign * ex as i64 * ey as i64));
            }
        }
        if x.odd == 0 || y.odd == 0 {
            continue;
        }
        let koszul = x.parity() == 1;
        for i in 0..m_odd {
            let Some((ox, nx)) = odd_left_derivative(x.odd, i) else {
                continue;
            };
            for j in 0..m_odd {
                let h = ctx.h_entry(i, j);
                if h == 0 {
                    continue;
                }
                let Some((oy, ny)) = odd_left_derivative(y.odd, j) else {
                    continue;
                };
                let mut x2 = x.clone();
                x2.odd = ox;
                let mut y2 = y.clone();
                y2.odd = oy;
                let neg = nx ^ ny ^ koszul;
                let v = c * int(-h);
                bump(&mut out, (x2, y2), if neg { -v } else { v });
            }
        }
    }
    out
}

/// Star product of two monomials.
pub fn star_monomials(ctx: &AlgebraContext, x: &Monomial, y: &Monomial) -> SuperPolynomial {
    let mut out = SuperPolynomial::zero(ctx);
    let mut pairs = PairMap::new();
    pairs.insert((x.clone(), y.clone()), Rational::one());
    let mut k = 0u32;
    while !pairs.is_empty() {
        let weight = Rational::new(1.into(), factorial(k) << k as usize);
        for ((a, b), c) in &pairs {
            if let Some((mut m, neg)) = mul_monomials(a, b) {
                m.hbar += k;
                let v = c * &weight;
                out.add_term(m, if neg { -v } else { v });
            }
        }
        pairs = apply_bivector(ctx, &pairs);
        k += 1;
    }
    out
}

/// The Moyal-Clifford star product `f ⋆ g`.
pub fn star(ctx: &AlgebraContext, f: &SuperPolynomial, g: &SuperPolynomial) -> SuperPolynomial {
    let mut out = SuperPolynomial::zero(ctx);
    for (x, cx) in f.terms() {
        for (y, cy) in g.terms() {
            let c = cx * cy;
            for (m, v) in star_monomials(ctx, x, y).into_terms() {
                out.add_term(m, v * &c);
            }
        }
    }
    out
}

/// Left-to-right star product of a sequence; the empty product is 1.
pub fn star_all<'a>(
    ctx: &AlgebraContext,
    items: impl IntoIterator<Item = &'a SuperPolynomial>,
) -> SuperPolynomial {
    let mut acc = SuperPolynomial::one(ctx);
    for f in items {
        acc = star(ctx, &acc, f);
    }
    acc
}

/// Graded commutator `[f, g] = f⋆g − (−1)^{|f||g|} g⋆f`.
pub fn super_bracket(
    ctx: &AlgebraContext,
    f: &SuperPolynomial,
    g: &SuperPolynomial,
) -> Result<SuperPolynomial> {
    let pf = f.require_parity()?;
    let pg = g.require_parity()?;
    let fg = star(ctx, f, g);
    let gf = star(ctx, g, f);
    Ok(if pf.bit() & pg.bit() == 1 {
        &fg + &gf
    } else {
        &fg - &gf
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::context::Var;
    use crate::rational::rat;

    #[test]
    fn canonical_relations() {
        let ctx = AlgebraContext::new(1, 1, 2).unwrap();
        let p = SuperPolynomial::var(&ctx, Var::P(1)).unwrap();
        let q = SuperPolynomial::var(&ctx, Var::Q(1)).unwrap();
        let hbar = SuperPolynomial::hbar(&ctx);
        assert_eq!(super_bracket(&ctx, &p, &q).unwrap(), hbar);
        let zeta = SuperPolynomial::theta(&ctx, 0);
        let eta = SuperPolynomial::theta(&ctx, 1);
        let ups = SuperPolynomial::theta(&ctx, 2);
        assert_eq!(super_bracket(&ctx, &zeta, &eta).unwrap(), hbar);
        assert!(star(&ctx, &zeta, &zeta).is_zero());
        assert_eq!(star(&ctx, &ups, &ups), hbar.scale(&rat(-1, 2)));
        assert!(super_bracket(&ctx, &zeta, &ups).unwrap().is_zero());
    }

    #[test]
    fn star_of_p_and_q() {
        let ctx = AlgebraContext::new(1, 0, 0).unwrap();
        let p = SuperPolynomial::var(&ctx, Var::P(1)).unwrap();
        let q = SuperPolynomial::var(&ctx, Var::Q(1)).unwrap();
        assert_eq!(star(&ctx, &p, &q).to_text(), "p1*q1 + 1/2 hbar");
    }
}
