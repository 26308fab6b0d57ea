use crate::algebra::{super_bracket, AlgebraContext, SuperPolynomial};
use crate::bernoulli::permutations;
use crate::error::{Error, Result};
use crate::poly::Poly;

/// Sign of a permutation given in one-line form.
pub fn permutation_sign(p: &[usize]) -> i64 {
    let mut seen = vec![false; p.len()];
    let mut sign = 1;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Alternating version of a cochain `b(a₀ ⊗ a₁ ⊗ ⋯ ⊗ a_k)` in its last `k` arguments.
///
/// The returned evaluator takes `a₀, a₁, …, a_k` and sums `sign(s)·b(a₀ ⊗ a_{s(1)} ⊗ ⋯)`.
pub fn lie_antisymmetrize<F>(cochain: F, k: usize) -> Result<impl Fn(&[SuperPolynomial]) -> Result<Poly>>
where
    F: Fn(&[SuperPolynomial]) -> Result<Poly>,
{
    if k > 4 {
        return Err(Error::BoundExceeded(format!("antisymmetrization in {k} > 4 arguments")));
    }
    let perms: Vec<(Vec<usize>, i64)> = permutations(k)
        .into_iter()
        .map(|p| {
            let s = permutation_sign(&p);
            (p, s)
        })
        .collect();
    Ok(move |args: &[SuperPolynomial]| {
        if args.len() != k + 1 {
            return Err(Error::ArityMismatch {
                expected: k + 1,
                got: args.len(),
            });
        }
        let mut total: Option<Poly> = None;
        for (p, s) in &perms {
            let mut permuted = Vec::with_capacity(k + 1);
            permuted.push(args[0].clone());
            permuted.extend(p.iter().map(|&i| args[i + 1].clone()));
            let v = cochain(&permuted)?;
            let v = if *s < 0 { -&v } else { v };
            total = Some(match total {
                None => v,
                Some(t) => &t + &v,
            });
        }
        Ok(total.unwrap_or_else(|| Poly::zero(1)))
    })
}

/// Projection onto the constant plus homogeneous quadratic part (in `p, q, θ`; `ħ` is a scalar).
pub fn projection(f: &SuperPolynomial) -> SuperPolynomial {
    f.filter(|m| matches!(m.even_degree() + m.odd_degree(), 0 | 2))
}

/// Curvature of the projection: `[pr v, pr w] − pr([v, w])`.
fn curvature(ctx: &AlgebraContext, v: &SuperPolynomial, w: &SuperPolynomial) -> Result<SuperPolynomial> {
    let bracket_of_projections = super_bracket(ctx, &projection(v), &projection(w))?;
    let projected_bracket = projection(&super_bracket(ctx, v, w)?);
    Ok(&bracket_of_projections - &projected_bracket)
}

/// Chern-Weil cochain of an invariant polynomial `invariant` of degree `degree` on the
/// quadratic-plus-constant subalgebra:
/// `Σ_σ sign(σ) P(C(v_σ1, v_σ2), …, C(v_σ(2m−1), v_σ(2m)))` over pairings with `σ(2i−1) < σ(2i)`.
pub fn chi<P>(ctx: &AlgebraContext, degree: usize, invariant: P, args: &[SuperPolynomial]) -> Result<Poly>
where
    P: Fn(&[SuperPolynomial]) -> Result<Poly>,
{
    if args.len() != 2 * degree {
        return Err(Error::DegreeMismatch(format!(
            "invariant polynomial of degree {degree} needs {} arguments, got {}",
            2 * degree,
            args.len()
        )));
    }
    let mut total = Poly::zero(1);
    for p in permutations(2 * degree) {
        if (0..degree).any(|i| p[2 * i] > p[2 * i + 1]) {
            continue;
        }
        let mut curvatures = Vec::with_capacity(degree);
        for i in 0..degree {
            curvatures.push(curvature(ctx, &args[p[2 * i]], &args[p[2 * i + 1]])?);
        }
        let v = invariant(&curvatures)?;
        total = if permutation_sign(&p) < 0 { &total - &v } else { &total + &v };
    }
    Ok(total)
}

/// Product of the `𝔤𝔩₁` coordinates (constant terms, as polynomials in `ħ`);
/// the simplest invariant polynomial, of degree `values.len()`.
pub fn center_part(values: &[SuperPolynomial]) -> Result<Poly> {
    let mut acc = Poly::one(1);
    for v in values {
        acc = &acc * &v.at_even_origin().filter(|m| m.odd == 0).hbar_polynomial()?;
    }
    Ok(acc)
}
