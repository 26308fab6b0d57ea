use rand::Rng;

use super::trace::Cocycle;
use crate::algebra::{phi_embed, super_bracket, AlgebraContext, CartanBasis, SuperPolynomial};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::random::random_chain;

/// Outcome of the relative-trace check on random samples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelativeReport {
    pub samples: usize,
    /// Failures with `a = (1/ħ)[Φ(x), 1]`.
    pub derivation_failures: usize,
    /// Failures with `Φ(x)` itself inserted.
    pub insertion_failures: usize,
}

impl RelativeReport {
    pub fn passed(&self) -> bool {
        self.derivation_failures == 0 && self.insertion_failures == 0
    }
}

/// `Σ_{j=1}^{2n} (−1)^j τ(a₀ ⊗ ⋯ ⊗ a_{j−1} ⊗ a ⊗ a_j ⊗ ⋯ ⊗ a_{2n−1})`.
pub fn insertion_sum(cocycle: &Cocycle, chain: &[SuperPolynomial], a: &SuperPolynomial) -> Result<Poly> {
    let mut total = Poly::zero(1);
    for j in 1..=chain.len() {
        let mut slots = chain.to_vec();
        slots.insert(j, a.clone());
        let v = cocycle.eval(&slots)?;
        total += &(if j % 2 == 0 { v } else { -&v });
    }
    Ok(total)
}

/// `f/ħ`; every term of `f` must carry a factor `ħ`.
fn divide_by_hbar(f: &SuperPolynomial) -> Result<SuperPolynomial> {
    let mut out = SuperPolynomial::zero_with(f.num_even());
    for (m, c) in f.terms() {
        if m.hbar == 0 {
            return Err(Error::DegreeMismatch("bracket is not divisible by hbar".into()));
        }
        let mut m2 = m.clone();
        m2.hbar -= 1;
        out.add_term(m2, c.clone());
    }
    Ok(out)
}

/// Cartan generators of `sp(2n) ⊕ so(a,b)` in the algebra.
pub fn cartan_images(ctx: &AlgebraContext) -> Result<Vec<SuperPolynomial>> {
    let mut out = Vec::new();
    for i in 1..=ctx.n() {
        out.push(phi_embed(ctx, CartanBasis::Symplectic(i))?);
    }
    for r in 1..=ctx.a() {
        out.push(phi_embed(ctx, CartanBasis::Hyperbolic(r))?);
    }
    for s in 1..=ctx.zhat() {
        out.push(phi_embed(ctx, CartanBasis::Definite(s))?);
    }
    Ok(out)
}

/// Checks the relative condition on `samples` random chains of `2n` slots of degree `≤ 2`.
///
/// `ρ(x)·1 = (1/ħ)[Φ(x), 1]` vanishes, so the derivation reading is checked as stated
/// and the insertion of `Φ(x)` itself is checked alongside it.
pub fn check_relative<R: Rng>(ctx: &AlgebraContext, samples: usize, rng: &mut R) -> Result<RelativeReport> {
    let cocycle = Cocycle::new(ctx);
    let images = cartan_images(ctx)?;
    let one = SuperPolynomial::one(ctx);
    let mut report = RelativeReport {
        samples,
        derivation_failures: 0,
        insertion_failures: 0,
    };
    for _ in 0..samples {
        let chain = random_chain(ctx, rng, 2 * ctx.n(), 2);
        for x in &images {
            let a = divide_by_hbar(&super_bracket(ctx, x, &one)?)?;
            if !insertion_sum(&cocycle, &chain, &a)?.is_zero() {
                report.derivation_failures += 1;
            }
            if !insertion_sum(&cocycle, &chain, x)?.is_zero() {
                report.insertion_failures += 1;
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn relative_condition_in_degree_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (n, a, b) in [(1, 0, 0), (1, 1, 1)] {
            let ctx = AlgebraContext::new(n, a, b).unwrap();
            let report = check_relative(&ctx, 5, &mut rng).unwrap();
            assert!(report.passed(), "{report:?}");
        }
    }

    #[test]
    fn cartan_image_count() {
        let ctx = AlgebraContext::new(2, 1, 3).unwrap();
        assert_eq!(cartan_images(&ctx).unwrap().len(), 2 + 1 + 1);
    }
}
