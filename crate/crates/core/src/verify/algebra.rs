use num_traits::One;
use rand::Rng;
use rayon::prelude::*;

use super::{Check, RunConfig, TypeSpec};
use crate::algebra::phi::{adjoint_action_matrix, so_matrix};
use crate::algebra::supermatrix::{random_invertible, random_super_symplectic};
use crate::algebra::{phi_embed, star, super_bracket, AlgebraContext, CartanBasis, Monomial, Parity, SuperPolynomial, Var};
use crate::error::Result;
use crate::random::{random_homogeneous, random_sparse};
use crate::rational::{int, Rational};

const DEFAULT_TYPES: [(usize, usize, usize); 3] = [(1, 1, 1), (1, 0, 2), (2, 2, 2)];
/// Sparse support keeps the degree-4 products on `(4|2,2)` affordable.
const MAX_TERMS: usize = 8;

fn random_bounded<R: Rng>(ctx: &AlgebraContext, rng: &mut R, max_degree: u32) -> SuperPolynomial {
    let parity = if ctx.num_odd() > 0 && rng.gen_bool(0.5) {
        Parity::Odd
    } else {
        Parity::Even
    };
    random_sparse(ctx, rng, max_degree, parity, MAX_TERMS)
}

pub(super) fn run(cfg: &RunConfig) -> Result<Vec<Check>> {
    let per_type = cfg
        .types_or(&DEFAULT_TYPES)
        .into_par_iter()
        .map(|kind| checks_for(cfg, kind))
        .collect::<Result<Vec<_>>>()?;
    Ok(per_type.into_iter().flatten().collect())
}

fn checks_for(cfg: &RunConfig, kind: TypeSpec) -> Result<Vec<Check>> {
    let ctx = kind.context()?;
    let id = |name: &str| format!("algebra.{kind}.{name}");
    let mut checks = Vec::new();

    let samples = cfg.samples_or(100);
    let mut rng = cfg.rng(&id("associativity"));
    let triples: Vec<[SuperPolynomial; 3]> = (0..samples)
        .map(|_| std::array::from_fn(|_| random_bounded(&ctx, &mut rng, 4)))
        .collect();
    let failures = triples
        .par_iter()
        .filter(|[f, g, h]| star(&ctx, &star(&ctx, f, g), h) != star(&ctx, f, &star(&ctx, g, h)))
        .count();
    checks.push(Check::sampled(
        id("associativity"),
        "(f*g)*h = f*(g*h) on random triples of degree <= 4",
        failures,
        samples,
    ));

    let unit_failures = triples
        .iter()
        .filter(|[f, _, _]| star(&ctx, &SuperPolynomial::one(&ctx), f) != *f || star(&ctx, f, &SuperPolynomial::one(&ctx)) != *f)
        .count();
    checks.push(Check::sampled(id("unit"), "1*f = f*1 = f", unit_failures, samples));

    checks.push(clifford_generators(&ctx, &id("clifford-generators")));
    let mut rng = cfg.rng(&id("clifford-square"));
    checks.push(clifford_square(&ctx, &mut rng, &id("clifford-square"), samples.min(50)));
    if ctx.n() > 0 {
        checks.push(weyl_relations(&ctx, &id("weyl"))?);
    }
    let mut rng = cfg.rng(&id("odd-derivatives"));
    checks.push(odd_derivatives(&ctx, &mut rng, &id("odd-derivatives"), samples.min(20))?);
    let mut rng = cfg.rng(&id("jacobi"));
    checks.push(graded_jacobi(&ctx, &mut rng, &id("jacobi"), samples.min(20))?);
    if ctx.a() + ctx.zhat() > 0 {
        checks.push(phi_compatibility(&ctx, &id("phi-compatibility"))?);
    }

    let mut rng = cfg.rng(&id("berezinian-symplectic"));
    let count = samples.clamp(1, 20);
    let mut failures = 0;
    for _ in 0..count {
        let m = random_super_symplectic(&mut rng, ctx.n(), ctx.h(), 3)?;
        let ber = m.berezinian()?;
        if ber != SuperPolynomial::from_monomial(Monomial::one(0), Rational::one()) {
            failures += 1;
        }
    }
    checks.push(Check::sampled(
        id("berezinian-symplectic"),
        "Berezinian of a super-symplectic matrix is 1",
        failures,
        count,
    ));

    let mut rng = cfg.rng(&id("berezinian-multiplicative"));
    let mut failures = 0;
    for _ in 0..count {
        let (even, odd) = (2 * ctx.n(), ctx.num_odd());
        let x = random_invertible(&mut rng, even, odd, 3);
        let y = random_invertible(&mut rng, even, odd, 3);
        let lhs = x.mul(&y)?.berezinian()?;
        let rhs = x.berezinian()?.mul(&y.berezinian()?);
        if lhs != rhs {
            failures += 1;
        }
    }
    checks.push(Check::sampled(
        id("berezinian-multiplicative"),
        "Ber(MN) = Ber(M) Ber(N)",
        failures,
        count,
    ));
    Ok(checks)
}

fn clifford_generators(ctx: &AlgebraContext, id: &str) -> Check {
    let hbar = SuperPolynomial::hbar(ctx);
    let mut failures = 0;
    let m = ctx.num_odd();
    for i in 0..m {
        for j in 0..m {
            let (ti, tj) = (SuperPolynomial::theta(ctx, i), SuperPolynomial::theta(ctx, j));
            let anti = &star(ctx, &ti, &tj) + &star(ctx, &tj, &ti);
            if anti != hbar.scale(&int(ctx.h_entry(i, j))) {
                failures += 1;
            }
        }
    }
    Check::sampled(
        id,
        "theta_i*theta_j + theta_j*theta_i = hbar h_Q[i][j] for all generator pairs",
        failures,
        m * m,
    )
}

fn clifford_square<R: Rng>(ctx: &AlgebraContext, rng: &mut R, id: &str, samples: usize) -> Check {
    let hbar = SuperPolynomial::hbar(ctx);
    let mut failures = 0;
    for _ in 0..samples {
        let c: Vec<Rational> = (0..ctx.num_odd()).map(|_| int(rng.gen_range(-3..=3))).collect();
        let mut v = SuperPolynomial::zero(ctx);
        for (k, ck) in c.iter().enumerate() {
            v += &SuperPolynomial::theta(ctx, k).scale(ck);
        }
        if star(ctx, &v, &v) != hbar.scale(&ctx.quadratic_form(&c)) {
            failures += 1;
        }
    }
    Check::sampled(id, "v*v = hbar Q(v) for odd-linear v", failures, samples)
}

fn weyl_relations(ctx: &AlgebraContext, id: &str) -> Result<Check> {
    let hbar = SuperPolynomial::hbar(ctx);
    let zero = SuperPolynomial::zero(ctx);
    let n = ctx.n();
    let mut failures = 0;
    let mut total = 0;
    for i in 1..=n {
        for j in 1..=n {
            let (pi, qi) = (SuperPolynomial::var(ctx, Var::P(i))?, SuperPolynomial::var(ctx, Var::Q(i))?);
            let (pj, qj) = (SuperPolynomial::var(ctx, Var::P(j))?, SuperPolynomial::var(ctx, Var::Q(j))?);
            let expected = if i == j { hbar.clone() } else { zero.clone() };
            for (lhs, rhs) in [
                (super_bracket(ctx, &pi, &qj)?, expected),
                (super_bracket(ctx, &pi, &pj)?, zero.clone()),
                (super_bracket(ctx, &qi, &qj)?, zero.clone()),
            ] {
                total += 1;
                if lhs != rhs {
                    failures += 1;
                }
            }
        }
    }
    Ok(Check::sampled(
        id,
        "[p_i,q_j] = hbar delta_ij and [p_i,p_j] = [q_i,q_j] = 0",
        failures,
        total,
    ))
}

fn odd_derivatives<R: Rng>(ctx: &AlgebraContext, rng: &mut R, id: &str, samples: usize) -> Result<Check> {
    let m = ctx.num_odd();
    let mut failures = 0;
    for _ in 0..samples {
        let f = random_homogeneous(ctx, rng, 3);
        for i in 1..=m {
            let di = |g: &SuperPolynomial| g.partial(ctx, Var::Theta(i));
            if !di(&di(&f)?)?.is_zero() {
                failures += 1;
            }
            for j in i + 1..=m {
                let dj = |g: &SuperPolynomial| g.partial(ctx, Var::Theta(j));
                if di(&dj(&f)?)? != -&dj(&di(&f)?)? {
                    failures += 1;
                }
            }
        }
    }
    Ok(Check::sampled(
        id,
        "odd partial derivatives square to zero and anticommute",
        failures,
        samples,
    ))
}

fn graded_jacobi<R: Rng>(ctx: &AlgebraContext, rng: &mut R, id: &str, samples: usize) -> Result<Check> {
    let mut failures = 0;
    for _ in 0..samples {
        let f = random_bounded(ctx, rng, 3);
        let g = random_bounded(ctx, rng, 3);
        let h = random_bounded(ctx, rng, 3);
        let both_odd = f.require_parity()? == Parity::Odd && g.require_parity()? == Parity::Odd;
        let lhs = super_bracket(ctx, &f, &super_bracket(ctx, &g, &h)?)?;
        let first = super_bracket(ctx, &super_bracket(ctx, &f, &g)?, &h)?;
        let second = super_bracket(ctx, &g, &super_bracket(ctx, &f, &h)?)?;
        let rhs = if both_odd { &first - &second } else { &first + &second };
        if lhs != rhs {
            failures += 1;
        }
    }
    Ok(Check::sampled(
        id,
        "[f,[g,h]] = [[f,g],h] + (-1)^{|f||g|} [g,[f,h]]",
        failures,
        samples,
    ))
}

fn phi_compatibility(ctx: &AlgebraContext, id: &str) -> Result<Check> {
    let mut kinds: Vec<CartanBasis> = (1..=ctx.a()).map(CartanBasis::Hyperbolic).collect();
    kinds.extend((1..=ctx.zhat()).map(CartanBasis::Definite));
    let mut failures = 0;
    for &kind in &kinds {
        let image = phi_embed(ctx, kind)?;
        if adjoint_action_matrix(ctx, &image)? != so_matrix(ctx, kind)? {
            failures += 1;
        }
    }
    Ok(Check::sampled(
        id,
        "(1/hbar)[Phi(U), v] = U v on odd-linear v for Cartan elements U of so(a,b)",
        failures,
        kinds.len(),
    ))
}
