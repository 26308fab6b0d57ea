use num_traits::Zero;
use rayon::prelude::*;

use super::{Check, RunConfig, TypeSpec};
use crate::error::Result;
use crate::local_index::{
    average, closed_form, closed_form_evaluated, pn_direct, pn_graphsum, CartanElement, CartanLayout,
    CartanPolynomial, MAX_DIRECT,
};
use crate::rational::{sign_pow, Rational};

/// `(n, a, b, degree)`: the types `(2n|0,0), (2n|1,1), (2n|0,2), (2n|0,3)` at degree `n`.
fn default_cases() -> Vec<(TypeSpec, usize)> {
    let mut out = Vec::new();
    for n in 1..=3 {
        for (a, b) in [(0, 0), (1, 1), (0, 2), (0, 3)] {
            out.push((TypeSpec::new(n, a, b), n));
        }
    }
    out
}

pub(super) fn run(cfg: &RunConfig) -> Result<Vec<Check>> {
    let cases = match cfg.kind {
        Some(k) => vec![(k, cfg.degree.unwrap_or(k.n))],
        None => default_cases(),
    };
    let parts = cases
        .par_iter()
        .map(|&(kind, degree)| case_checks(kind, degree))
        .collect::<Result<Vec<_>>>()?;
    let mut checks: Vec<Check> = parts.into_iter().flatten().collect();
    if cfg.kind.is_none() {
        checks.extend(flower_checks()?);
    }
    Ok(checks)
}

fn case_checks(kind: TypeSpec, degree: usize) -> Result<Vec<Check>> {
    let ctx = kind.context()?;
    let id = |name: &str| format!("local-index.{kind}.n{degree}.{name}");
    let mut checks = Vec::new();
    let graphsum = pn_graphsum(&ctx, degree)?;
    let averaged = average(&graphsum);

    if degree <= MAX_DIRECT {
        let direct = pn_direct(&ctx, degree)?;
        checks.push(Check::equal(
            id("direct-vs-graphsum"),
            "P_n by direct cube integration equals the graph sum over index graphs",
            direct.to_string(),
            graphsum.to_string(),
        ));
        checks.push(Check::equal(
            id("direct-vs-graphsum-averaged"),
            "average(P_n direct) = average(P_n graph sum)",
            average(&direct).to_string(),
            averaged.to_string(),
        ));
    }

    checks.push(Check::equal(
        id("closed-form"),
        "average(P_n) = (-1)^{a+zhat} [prod Ahat(hbar gamma) prod Bhat(hbar lambda) prod Chat(hbar kappa) e^{x2}]_n",
        averaged.to_string(),
        closed_form(&ctx, degree)?.to_string(),
    ));
    checks.push(Check::equal(
        id("evaluated-form"),
        "average(P_n) = n! [prod Ahat(hbar gamma) prod cosh(hbar lambda/2) prod cos(hbar kappa/2) e^{x2}]_n",
        averaged.to_string(),
        average(&closed_form_evaluated(&ctx, degree)?).to_string(),
    ));

    let layout = CartanLayout::of(&ctx);
    let origin = CartanElement {
        gamma: vec![Rational::zero(); layout.n],
        lambda: vec![Rational::zero(); layout.a],
        kappa: vec![Rational::zero(); layout.zhat],
        x2: Rational::zero(),
    };
    let at_origin = graphsum.evaluate(&origin)?;
    checks.push(Check::equal(
        id("vanishes-at-zero"),
        "P_n vanishes when all Cartan parameters are 0 (n >= 1)",
        at_origin.display_with(&["hbar".to_string()]),
        if degree == 0 { "1" } else { "0" }.into(),
    ));
    checks.push(Check::equal(
        id("even"),
        "average(P_n) is even in every gamma, lambda and kappa",
        is_even(&averaged).to_string(),
        "true".into(),
    ));
    Ok(checks)
}

fn is_even(p: &CartanPolynomial) -> bool {
    let layout = p.layout();
    let x2 = layout.x2();
    p.poly()
        .terms()
        .all(|(e, _)| (0..x2).all(|v| e[v] % 2 == 0))
}

/// The definite-pair sector of the graph sum against the cosine product, with and
/// without the sign `(−1)^ẑ`.
fn flower_checks() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (zhat, max_degree) in [(1usize, 6usize), (2, 4)] {
        let ctx = TypeSpec::new(0, 0, 2 * zhat).context()?;
        let layout = CartanLayout::of(&ctx);
        let x2 = layout.x2();
        let sector = |p: &CartanPolynomial| p.poly().filter(|e| e[x2] == 0);
        let mut unsigned = 0;
        let mut signed = 0;
        for degree in 1..=max_degree {
            let graphs = sector(&pn_graphsum(&ctx, degree)?);
            let cosines = sector(&closed_form_evaluated(&ctx, degree)?);
            if graphs != cosines {
                unsigned += 1;
            }
            if graphs != cosines.scale(&sign_pow(zhat as u32)) {
                signed += 1;
            }
        }
        let label = format!("local-index.flower.zhat{zhat}");
        checks.push(Check::sampled(
            format!("{label}.cosine"),
            "definite-pair sector of the graph sum = n! [prod cos(hbar kappa/2)]_n",
            unsigned,
            max_degree,
        ));
        checks.push(Check::sampled(
            format!("{label}.signed-cosine"),
            "definite-pair sector of the graph sum = (-1)^zhat n! [prod cos(hbar kappa/2)]_n",
            signed,
            max_degree,
        ));
    }
    Ok(checks)
}
