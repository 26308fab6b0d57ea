use super::chain::{slot_partial_even, slot_partial_odd, with_hbar, TensorChain};
use crate::algebra::AlgebraContext;
use crate::error::{Error, Result};
use crate::rational::{int, rat, Rational};

fn check_pair(chain: &TensorChain, i: usize, j: usize) -> Result<()> {
    chain.check_slot(i)?;
    chain.check_slot(j)
}

/// `α_ij = ½ Σ_l (∂p_l^{(i)} ∂q_l^{(j)} − ∂q_l^{(i)} ∂p_l^{(j)})`, so `α_ji = −α_ij`.
pub fn alpha_ij(ctx: &AlgebraContext, i: usize, j: usize, chain: &TensorChain) -> Result<TensorChain> {
    check_pair(chain, i, j)?;
    if i == j {
        return Err(Error::InvalidArgument("alpha_ij needs i != j".into()));
    }
    let n = ctx.n();
    let half = rat(1, 2);
    Ok(chain.map_linear(|t, c, out| {
        for l in 0..n {
            for (a, b, sign) in [(l, n + l, 1), (n + l, l, -1)] {
                let Some((t1, e1)) = slot_partial_even(t, j, b) else {
                    continue;
                };
                let Some((t2, e2)) = slot_partial_even(&t1, i, a) else {
                    continue;
                };
                out.add(t2, c * &half * e1 * e2 * int(sign));
            }
        }
    }))
}

/// `g_ij = ½ Σ h^{ml} ∂θ_m^{(i)} ∘ ∂θ_l^{(j)}` with Koszul slot signs.
///
/// For `i < j` this is the odd half of the star bivector between slots `i` and `j`
/// up to sign: `ħ/2 · B_ij = ħ(α_ij − g_ij)`. Swapping the slots gives `g_ji = −g_ij`.
pub fn g_ij(ctx: &AlgebraContext, i: usize, j: usize, chain: &TensorChain) -> Result<TensorChain> {
    check_pair(chain, i, j)?;
    let m_odd = ctx.num_odd();
    let half = rat(1, 2);
    Ok(chain.map_linear(|t, c, out| {
        for m in 0..m_odd {
            for l in 0..m_odd {
                let h = ctx.h_entry(m, l);
                if h == 0 {
                    continue;
                }
                let Some((t1, n1)) = slot_partial_odd(t, j, l) else {
                    continue;
                };
                let Some((t2, n2)) = slot_partial_odd(&t1, i, m) else {
                    continue;
                };
                let v = c * &half * int(h);
                out.add(t2, if n1 ^ n2 { -v } else { v });
            }
        }
    }))
}

/// `ħ(α_ij + s·g_ij)` for the sign `s = ±1` of the odd part.
pub fn pair_operator(
    ctx: &AlgebraContext,
    i: usize,
    j: usize,
    g_sign: i64,
    chain: &TensorChain,
) -> Result<TensorChain> {
    let mut out = alpha_ij(ctx, i, j, chain)?;
    if g_sign != 0 {
        out.add_chain(&g_ij(ctx, i, j, chain)?, &int(g_sign));
    }
    Ok(out.map_linear(|t, c, acc| acc.add(with_hbar(t.clone(), 1), c.clone())))
}

/// One term of the expansion of `exp(Σ_p ψ_p E_p)`: the powers of each `ψ_p`
/// and the chain `∏ E_p^{m_p}/m_p! (input)`.
#[derive(Debug, Clone)]
pub struct OmegaTerm {
    pub powers: Vec<u32>,
    pub chain: TensorChain,
}

/// Expand `exp(Σ_{(i,j) ∈ pairs} ħψ(v_i−v_j)(α_ij + s·g_ij))` on a chain.
///
/// The pair operators commute, so the exponential factors into one series per
/// pair; each series stops once the derivatives exhaust the polynomial degree.
pub fn omega_expand(
    ctx: &AlgebraContext,
    chain: &TensorChain,
    pairs: &[(usize, usize)],
    g_sign: i64,
) -> Result<Vec<OmegaTerm>> {
    let cap = chain.max_degree() / 2 + 1;
    let mut out = Vec::new();
    let mut powers = vec![0u32; pairs.len()];
    expand_rec(ctx, chain.clone(), pairs, g_sign, 0, cap, &mut powers, &mut out)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn expand_rec(
    ctx: &AlgebraContext,
    chain: TensorChain,
    pairs: &[(usize, usize)],
    g_sign: i64,
    p: usize,
    cap: u32,
    powers: &mut Vec<u32>,
    out: &mut Vec<OmegaTerm>,
) -> Result<()> {
    if chain.is_zero() {
        return Ok(());
    }
    if p == pairs.len() {
        out.push(OmegaTerm {
            powers: powers.clone(),
            chain,
        });
        return Ok(());
    }
    let (i, j) = pairs[p];
    let mut cur = chain;
    let mut t = 0u32;
    while !cur.is_zero() {
        if t > cap {
            return Err(Error::BoundExceeded(
                "omega expansion did not terminate within the degree bound".into(),
            ));
        }
        powers[p] = t;
        expand_rec(ctx, cur.clone(), pairs, g_sign, p + 1, cap, powers, out)?;
        t += 1;
        cur = pair_operator(ctx, i, j, g_sign, &cur)?.scale(&Rational::new(1.into(), t.into()));
    }
    powers[p] = 0;
    Ok(())
}

/// Perfect matchings of `1..=2n` with the sign of the permutation `(j₁ k₁ j₂ k₂ …)`.
pub fn perfect_matchings(n: usize) -> Vec<(Vec<(usize, usize)>, i64)> {
    fn rec(rest: &[usize], acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let Some((&first, tail)) = rest.split_first() else {
            out.push(acc.clone());
            return;
        };
        for (k, &partner) in tail.iter().enumerate() {
            let mut remaining = tail.to_vec();
            remaining.remove(k);
            acc.push((first, partner));
            rec(&remaining, acc, out);
            acc.pop();
        }
    }
    let verts: Vec<usize> = (1..=2 * n).collect();
    let mut all = Vec::new();
    rec(&verts, &mut Vec::new(), &mut all);
    all.into_iter()
        .map(|m| {
            let seq: Vec<usize> = m.iter().flat_map(|&(a, b)| [a, b]).collect();
            let mut inv = 0;
            for x in 0..seq.len() {
                for y in x + 1..seq.len() {
                    if seq[x] > seq[y] {
                        inv += 1;
                    }
                }
            }
            (m, if inv % 2 == 0 { 1 } else { -1 })
        })
        .collect()
}

/// `π_{2n} = (1/n!)(Σ_{1≤j<k≤2n} α_jk dv_j∧dv_k)^n`, read off at the top form.
pub fn pi_2n(ctx: &AlgebraContext, chain: &TensorChain) -> Result<TensorChain> {
    let arity = chain.arity();
    if arity % 2 == 0 {
        return Err(Error::ArityMismatch {
            expected: arity + 1,
            got: arity,
        });
    }
    let n = (arity - 1) / 2;
    let mut out = TensorChain::zero(arity);
    for (matching, sign) in perfect_matchings(n) {
        let mut cur = chain.clone();
        for &(j, k) in &matching {
            cur = alpha_ij(ctx, j, k, &cur)?;
            if cur.is_zero() {
                break;
            }
        }
        out.add_chain(&cur, &int(sign));
    }
    Ok(out)
}
