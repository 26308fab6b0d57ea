use num_traits::{One, Zero};

use super::context::{AlgebraContext, Var};
use super::star::super_bracket;
use super::superpoly::SuperPolynomial;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Basis elements of the Cartan subalgebra of `sp(2n) ⊕ so(a,b) ⊕ gl(1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CartanBasis {
    /// `t_i ↦ q_i p_i`
    Symplectic(usize),
    /// `−E_{i,i} + E_{a+i,a+i} ↦ η_i ζ_i`
    Hyperbolic(usize),
    /// `E_{2a+j,2a+ẑ+j} − E_{2a+ẑ+j,2a+j} ↦ −ξ_j μ_j`
    Definite(usize),
    /// `gl(1) ↦ 1`
    Center,
}

/// Image of a Cartan basis element in the Weyl-Clifford algebra.
pub fn phi_embed(ctx: &AlgebraContext, kind: CartanBasis) -> Result<SuperPolynomial> {
    match kind {
        CartanBasis::Symplectic(i) => {
            let q = SuperPolynomial::var(ctx, Var::Q(i))?;
            let p = SuperPolynomial::var(ctx, Var::P(i))?;
            Ok(q.mul(&p))
        }
        CartanBasis::Hyperbolic(i) => {
            let eta = SuperPolynomial::theta(ctx, ctx.eta(i)?);
            let zeta = SuperPolynomial::theta(ctx, ctx.zeta(i)?);
            Ok(eta.mul(&zeta))
        }
        CartanBasis::Definite(j) => {
            let xi = SuperPolynomial::theta(ctx, ctx.xi(j)?);
            let mu = SuperPolynomial::theta(ctx, ctx.mu(j)?);
            Ok(-&xi.mul(&mu))
        }
        CartanBasis::Center => Ok(SuperPolynomial::one(ctx)),
    }
}

/// Matrix of a Cartan element of `so(a,b)` in the basis
/// `ζ_1..ζ_a, η_1..η_a, ξ_1..ξ_ẑ, μ_1..μ_ẑ, υ`.
pub fn so_matrix(ctx: &AlgebraContext, kind: CartanBasis) -> Result<Vec<Vec<Rational>>> {
    let m = ctx.num_odd();
    let (a, z) = (ctx.a(), ctx.zhat());
    let mut out = vec![vec![Rational::zero(); m]; m];
    match kind {
        CartanBasis::Hyperbolic(i) if (1..=a).contains(&i) => {
            out[i - 1][i - 1] = -Rational::one();
            out[a + i - 1][a + i - 1] = Rational::one();
        }
        CartanBasis::Definite(j) if (1..=z).contains(&j) => {
            out[2 * a + j - 1][2 * a + z + j - 1] = Rational::one();
            out[2 * a + z + j - 1][2 * a + j - 1] = -Rational::one();
        }
        _ => {
            return Err(Error::InvalidContext(format!(
                "{kind:?} is not an so({a},{}) Cartan element",
                ctx.b()
            )))
        }
    }
    Ok(out)
}

/// θ-index of the `k`-th vector of the block basis used by [`so_matrix`].
pub fn block_basis_theta(ctx: &AlgebraContext, k: usize) -> usize {
    let (a, z) = (ctx.a(), ctx.zhat());
    if k < a {
        2 * k
    } else if k < 2 * a {
        2 * (k - a) + 1
    } else if k < 2 * a + z {
        2 * a + 2 * (k - 2 * a)
    } else if k < 2 * a + 2 * z {
        2 * a + 2 * (k - 2 * a - z) + 1
    } else {
        2 * a + 2 * z
    }
}

/// The action `v ↦ ħ⁻¹ [Φ(U), v]` on the odd generators, written in the block basis.
pub fn adjoint_action_matrix(ctx: &AlgebraContext, image: &SuperPolynomial) -> Result<Vec<Vec<Rational>>> {
    let m = ctx.num_odd();
    let mut out = vec![vec![Rational::zero(); m]; m];
    for col in 0..m {
        let v = SuperPolynomial::theta(ctx, block_basis_theta(ctx, col));
        let w = super_bracket(ctx, image, &v)?;
        for (mono, c) in w.terms() {
            if mono.hbar != 1 || !mono.is_even_free() || mono.odd.count_ones() != 1 {
                return Err(Error::DegreeMismatch(format!(
                    "bracket is not linear in the odd generators: {w}"
                )));
            }
            let theta = mono.odd.trailing_zeros() as usize;
            let row = (0..m)
                .find(|&r| block_basis_theta(ctx, r) == theta)
                .expect("every generator has a block index");
            out[row][col] = c.clone();
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn images() {
        let ctx = AlgebraContext::new(1, 1, 3).unwrap();
        assert_eq!(phi_embed(&ctx, CartanBasis::Symplectic(1)).unwrap().to_text(), "p1*q1");
        assert_eq!(phi_embed(&ctx, CartanBasis::Hyperbolic(1)).unwrap().to_text(), "-th1*th2");
        assert_eq!(phi_embed(&ctx, CartanBasis::Definite(1)).unwrap().to_text(), "-th3*th4");
        assert_eq!(phi_embed(&ctx, CartanBasis::Center).unwrap().to_text(), "1");
    }

    #[test]
    fn compatible_with_matrix_action() {
        for (a, b) in [(1, 1), (1, 3), (0, 2), (2, 2), (0, 5)] {
            let ctx = AlgebraContext::new(0, a, b).unwrap();
            let mut kinds: Vec<_> = (1..=a).map(CartanBasis::Hyperbolic).collect();
            kinds.extend((1..=ctx.zhat()).map(CartanBasis::Definite));
            for kind in kinds {
                let image = phi_embed(&ctx, kind).unwrap();
                assert_eq!(
                    adjoint_action_matrix(&ctx, &image).unwrap(),
                    so_matrix(&ctx, kind).unwrap(),
                    "{kind:?} in ({a},{b})"
                );
            }
        }
    }
}
