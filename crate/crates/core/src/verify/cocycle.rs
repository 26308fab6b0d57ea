use rayon::prelude::*;

use super::{Check, RunConfig, TypeSpec};
use crate::error::Result;
use crate::hochschild::{hochschild_boundary, Cocycle};
use crate::poly::Poly;
use crate::random::random_chain;

const DEFAULT_TYPES: [(usize, usize, usize); 3] = [(1, 0, 0), (1, 1, 1), (1, 0, 2)];

pub(super) fn run(cfg: &RunConfig) -> Result<Vec<Check>> {
    cfg.types_or(&DEFAULT_TYPES)
        .into_par_iter()
        .map(|kind| closed_on_boundaries(cfg, kind))
        .collect()
}

/// `τ ∘ ∂ = 0` on random chains of `2n + 2` slots of degree `≤ 2`.
fn closed_on_boundaries(cfg: &RunConfig, kind: TypeSpec) -> Result<Check> {
    let ctx = kind.context()?;
    let cocycle = Cocycle::new(&ctx);
    let id = format!("cocycle.{kind}.closed");
    let samples = cfg.samples_or(50);
    let mut rng = cfg.rng(&id);
    let chains: Vec<_> = (0..samples)
        .map(|_| random_chain(&ctx, &mut rng, cocycle.arity() + 1, 2))
        .collect();
    let failures = chains
        .par_iter()
        .map(|chain| -> Result<bool> {
            let mut acc = Poly::zero(1);
            for (c, face) in hochschild_boundary(&ctx, chain)? {
                acc += &cocycle.eval(&face)?.scale(&c);
            }
            Ok(!acc.is_zero())
        })
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .filter(|&failed| failed)
        .count();
    Ok(Check::sampled(
        id,
        "tau composed with the Hochschild boundary vanishes (tau is a 2n-derived supertrace)",
        failures,
        samples,
    ))
}
