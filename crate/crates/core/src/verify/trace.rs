use num_traits::One;
use rayon::prelude::*;

use super::{Check, RunConfig, TypeSpec};
use crate::algebra::{parse_superpoly, super_bracket, AlgebraContext, Monomial, SuperPolynomial};
use crate::error::Result;
use crate::hochschild::boundary::{boundary_of_sum, formal_sum_is_zero};
use crate::hochschild::relative::{cartan_images, check_relative};
use crate::hochschild::{hh0_dimension, hochschild_boundary, upsilon, Cocycle, FormalSum};
use crate::poly::Poly;
use crate::random::random_chain;
use crate::rational::Rational;

const SMALL_TYPES: [(usize, usize, usize); 3] = [(1, 0, 0), (1, 1, 1), (1, 0, 2)];

fn show(p: &Poly) -> String {
    p.display_with(&["hbar".to_string()])
}

fn odd_signatures(max_total: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for total in 0..=max_total {
        for a in 0..=total / 2 {
            out.push((a, total - a));
        }
    }
    out
}

pub(super) fn run(cfg: &RunConfig) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let degree_zero: Vec<(usize, usize)> = match cfg.kind {
        Some(k) if k.n == 0 => vec![(k.a, k.b)],
        Some(_) => Vec::new(),
        None => odd_signatures(4),
    };
    let parts = degree_zero
        .par_iter()
        .map(|&(a, b)| degree_zero_checks(a, b))
        .collect::<Result<Vec<_>>>()?;
    checks.extend(parts.into_iter().flatten());

    let hh: Vec<(usize, usize)> = match cfg.kind {
        Some(k) if k.a + k.b <= 4 => vec![(k.a, k.b)],
        Some(_) => Vec::new(),
        None => odd_signatures(4),
    };
    for (a, b) in hh {
        checks.push(Check::equal(
            format!("trace.hh0.({a},{b})"),
            "dim Cliff(a,b)/[Cliff,Cliff] = 1 (graded commutators, hbar = 1)",
            hh0_dimension(a, b)?.to_string(),
            "1".into(),
        ));
    }

    if cfg.kind.is_none() {
        let ctx = AlgebraContext::new(1, 1, 1)?;
        let slots = |src: &[&str]| -> Result<Vec<SuperPolynomial>> {
            src.iter().map(|s| parse_superpoly(&ctx, s)).collect()
        };
        let convention = crate::hochschild::TraceConvention::default().slot_product;
        for (name, src, expected) in [
            ("theta-1-1", vec!["Theta", "1", "1"], "1"),
            ("theta-qp", vec!["Theta", "q1*p1"], "0"),
            ("unit", vec!["1"], "0"),
        ] {
            checks.push(Check::equal(
                format!("trace.upsilon.(2|1,1).{name}"),
                "Upsilon: Berezin integral of the slot product at y = 0",
                show(&upsilon(&ctx, &slots(&src)?, convention)),
                expected.into(),
            ));
        }
    }

    let types = match cfg.kind {
        Some(k) if k.n > 0 => vec![k],
        Some(_) => Vec::new(),
        None => SMALL_TYPES.iter().map(|&(n, a, b)| TypeSpec::new(n, a, b)).collect(),
    };
    let parts = types
        .par_iter()
        .map(|&kind| positive_degree_checks(cfg, kind))
        .collect::<Result<Vec<_>>>()?;
    checks.extend(parts.into_iter().flatten());
    Ok(checks)
}

fn degree_zero_checks(a: usize, b: usize) -> Result<Vec<Check>> {
    let ctx = AlgebraContext::new(0, a, b)?;
    let cocycle = Cocycle::new(&ctx);
    let label = ctx.label();
    let mut checks = vec![Check::equal(
        format!("trace.n0.{label}.orientation"),
        "tau_0(Theta) = 1",
        show(&cocycle.eval(&[SuperPolynomial::orientation(&ctx)])?),
        "1".into(),
    )];
    if (a, b) == (1, 1) {
        checks.push(Check::equal(
            format!("trace.n0.{label}.zeta-eta"),
            "tau_0(zeta1 eta1) = coefficient of Theta = 1",
            show(&cocycle.eval(&[parse_superpoly(&ctx, "zeta1*eta1")?])?),
            "1".into(),
        ));
    }
    let basis: Vec<SuperPolynomial> = (0..1u32 << ctx.num_odd())
        .map(|mask| {
            let mut m = Monomial::one(0);
            m.odd = mask;
            SuperPolynomial::from_monomial(m, Rational::one())
        })
        .collect();
    let mut failures = 0;
    for x in &basis {
        for y in &basis {
            if !tau_of_sum(&cocycle, &hochschild_boundary(&ctx, &[x.clone(), y.clone()])?)?.is_zero() {
                failures += 1;
            }
        }
    }
    checks.push(Check::sampled(
        format!("trace.n0.{label}.supertrace"),
        "tau_0(x*y - (-1)^{|x||y|} y*x) = 0 on all pairs of basis monomials",
        failures,
        basis.len() * basis.len(),
    ));
    Ok(checks)
}

fn tau_of_sum(cocycle: &Cocycle, sum: &FormalSum) -> Result<Poly> {
    let mut acc = Poly::zero(1);
    for (c, chain) in sum {
        acc += &cocycle.eval(chain)?.scale(c);
    }
    Ok(acc)
}

fn positive_degree_checks(cfg: &RunConfig, kind: TypeSpec) -> Result<Vec<Check>> {
    let ctx = kind.context()?;
    let cocycle = Cocycle::new(&ctx);
    let arity = cocycle.arity();
    let id = |name: &str| format!("trace.{kind}.{name}");
    let samples = cfg.samples_or(20);
    let mut checks = Vec::new();

    let ones = vec![SuperPolynomial::one(&ctx); arity];
    checks.push(Check::equal(
        id("constants"),
        "tau(1, ..., 1) = 0",
        show(&cocycle.eval(&ones)?),
        "0".into(),
    ));

    // chains whose total parity differs from a + b; with no odd generators every
    // chain is even, so there is nothing to test
    if ctx.num_odd() > 0 {
        let mut rng = cfg.rng(&id("parity"));
        let theta = SuperPolynomial::theta(&ctx, 0);
        let mut failures = 0;
        let mut tried = 0;
        while tried < samples {
            let mut chain = random_chain(&ctx, &mut rng, arity, 2);
            let parity: u32 = chain.iter().map(|f| f.require_parity().map(|p| p.bit())).sum::<Result<u32>>()?;
            if parity as usize % 2 == ctx.num_odd() % 2 {
                chain[0] = theta.mul(&chain[0]);
                if chain[0].is_zero() {
                    continue;
                }
            }
            tried += 1;
            if !cocycle.eval(&chain)?.is_zero() {
                failures += 1;
            }
        }
        checks.push(Check::sampled(
            id("parity"),
            "tau vanishes on chains of total parity different from a+b",
            failures,
            samples,
        ));
    }

    let mut rng = cfg.rng(&id("boundary-squared"));
    let mut failures = 0;
    for s in 0..samples {
        let chain = random_chain(&ctx, &mut rng, 3 + s % 3, 2);
        let once = hochschild_boundary(&ctx, &chain)?;
        if !formal_sum_is_zero(&boundary_of_sum(&ctx, &once)?) {
            failures += 1;
        }
    }
    checks.push(Check::sampled(
        id("boundary-squared"),
        "Hochschild boundary squares to zero on chains of arity 3 to 5",
        failures,
        samples,
    ));

    let mut rng = cfg.rng(&id("equivariance"));
    let generators = quadratic_generators(&ctx)?;
    let count = samples.min(10);
    let mut failures = 0;
    for _ in 0..count {
        let chain = random_chain(&ctx, &mut rng, arity, 2);
        for x in &generators {
            let mut total = Poly::zero(1);
            for j in 0..arity {
                let mut slots = chain.clone();
                slots[j] = super_bracket(&ctx, x, &chain[j])?;
                total += &cocycle.eval(&slots)?;
            }
            if !total.is_zero() {
                failures += 1;
            }
        }
    }
    checks.push(Check::sampled(
        id("equivariance"),
        "infinitesimal invariance: sum over slots of tau(.., [x, a_j], ..) = 0 for quadratic x",
        failures,
        count * generators.len(),
    ));

    let mut rng = cfg.rng(&id("relative"));
    let report = check_relative(&ctx, samples.min(10), &mut rng)?;
    let count = report.samples * cartan_images(&ctx)?.len();
    checks.push(Check::sampled(
        id("relative"),
        "alternating insertion of rho(x) 1 = (1/hbar)[Phi(x), 1] vanishes",
        report.derivation_failures,
        count,
    ));
    checks.push(Check::sampled(
        id("relative-phi"),
        "alternating insertion of Phi(x) itself vanishes",
        report.insertion_failures,
        count,
    ));
    Ok(checks)
}

/// Quadratic elements spanning `sp(2n) ⊕ so(a,b)`: all `p_i p_j`, `p_i q_j`,
/// `q_i q_j` and `θ_k θ_l` with `k < l`.
fn quadratic_generators(ctx: &AlgebraContext) -> Result<Vec<SuperPolynomial>> {
    let n = ctx.n();
    let mut even = Vec::new();
    for i in 1..=n {
        even.push(parse_superpoly(ctx, &format!("p{i}"))?);
        even.push(parse_superpoly(ctx, &format!("q{i}"))?);
    }
    let mut out = Vec::new();
    for i in 0..even.len() {
        for j in i..even.len() {
            out.push(even[i].mul(&even[j]));
        }
    }
    for k in 0..ctx.num_odd() {
        for l in k + 1..ctx.num_odd() {
            out.push(SuperPolynomial::theta(ctx, k).mul(&SuperPolynomial::theta(ctx, l)));
        }
    }
    Ok(out)
}
