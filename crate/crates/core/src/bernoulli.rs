//! Bernoulli numbers and polynomials, the sawtooth weight `ψ = 2B₁`, and exact
//! integration of `ψ`-products over order regions of the unit cube.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Zero};
use rayon::prelude::*;
use smallvec::smallvec;

use crate::poly::Poly;
use crate::rational::{binomial, factorial, int, pow, Rational};

fn bernoulli_cache() -> &'static Mutex<Vec<Rational>> {
    static CACHE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![Rational::one()]))
}

/// `B_j` with `B₁ = −1/2`.
pub fn bernoulli_number(j: u32) -> Rational {
    let mut cache = bernoulli_cache().lock().expect("bernoulli cache poisoned");
    while cache.len() <= j as usize {
        // Σ_{k<m} C(m+1,k) B_k + (m+1) B_m = 0
        let m = cache.len() as u32;
        let mut acc = Rational::zero();
        for (k, b) in cache.iter().enumerate() {
            acc += Rational::from_integer(binomial(m + 1, k as u32)) * b;
        }
        cache.push(-acc / int(i64::from(m) + 1));
    }
    cache[j as usize].clone()
}

/// `B_m(v) = Σ C(m,k) B_k v^{m−k}` as a polynomial in one variable.
pub fn bernoulli_poly(m: u32) -> Poly {
    let mut out = Poly::zero(1);
    for k in 0..=m {
        let c = Rational::from_integer(binomial(m, k)) * bernoulli_number(k);
        out.add_term(smallvec![m - k], c);
    }
    out
}

/// `I_j = ∫_{[0,1]^j} ψ(v₁−v₂)⋯ψ(v_j−v₁) = −(−2)^j B_j / j!`.
pub fn i_closed(j: u32) -> Rational {
    let two_pow = pow(&int(-2), j);
    -two_pow * bernoulli_number(j) / Rational::from_integer(factorial(j))
}

/// The closed form `Ĩ_j = −I_{j+1}` quoted for the Θ-rooted cycle.
///
/// Direct integration of the rooted cycle with `v₀ = 0` gives `+I_{j+1}`
/// (see [`rooted_cycle`]); the graph sum uses the integrated value.
pub fn itilde_closed(j: u32) -> Rational {
    -i_closed(j + 1)
}

/// Product `∏ ψ(v_i − v_j)^{power} · extra` over variables `v₀..v_k`.
///
/// Variable 0 is the root slot: when it occurs it is pinned to `0`, below every other variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiProduct {
    pub factors: Vec<(usize, usize, u32)>,
    pub extra: Poly,
}

impl PsiProduct {
    /// `ψ`-factors only, over `v₀..v_k`.
    pub fn new(k: usize, factors: Vec<(usize, usize, u32)>) -> Self {
        assert!(factors.iter().all(|&(i, j, _)| i != j && i <= k && j <= k));
        PsiProduct {
            factors,
            extra: Poly::one(k + 1),
        }
    }

    pub fn with_extra(mut self, extra: Poly) -> Self {
        self.extra = extra;
        self
    }

    pub fn num_vars(&self) -> usize {
        self.extra.nvars()
    }
}

/// Cycle `ψ(v₁−v₂)ψ(v₂−v₃)⋯ψ(v_j−v₁)` over `v₀..v_j`.
pub fn cycle(j: usize) -> PsiProduct {
    let mut f: Vec<_> = (1..j).map(|i| (i, i + 1, 1)).collect();
    f.push((j, 1, 1));
    PsiProduct::new(j, f)
}

/// Open chain `ψ(v₁−v₂)⋯ψ(v_{j−1}−v_j)`.
pub fn open_chain(j: usize) -> PsiProduct {
    PsiProduct::new(j, (1..j).map(|i| (i, i + 1, 1)).collect())
}

/// Rooted cycle `ψ(v₀−v₁)ψ(v₁−v₂)⋯ψ(v_j−v₀)`.
pub fn rooted_cycle(j: usize) -> PsiProduct {
    let mut f: Vec<_> = (0..j).map(|i| (i, i + 1, 1)).collect();
    f.push((j, 0, 1));
    PsiProduct::new(j, f)
}

/// Rooted chain `ψ(v₀−v₁)ψ(v₁−v₂)⋯ψ(v_{j−1}−v_j)`.
pub fn rooted_chain(j: usize) -> PsiProduct {
    PsiProduct::new(j, (0..j).map(|i| (i, i + 1, 1)).collect())
}

/// `ψ(v_i − v_j)` on a region where `v_i < v_j` iff `i_below`.
pub fn psi_on_region(nvars: usize, i: usize, j: usize, i_below: bool) -> Poly {
    let mut p = Poly::var(nvars, i).scale(&int(2));
    p -= &Poly::var(nvars, j).scale(&int(2));
    p += &Poly::constant(nvars, if i_below { int(1) } else { int(-1) });
    p
}

/// `∫ p` over `{0 ≤ v_{σ(1)} ≤ ⋯ ≤ v_{σ(k)} ≤ 1}`; every variable of `p`
/// must be listed in `ordering` or already substituted.
pub fn integrate_order_region(p: &Poly, ordering: &[usize]) -> Rational {
    let nvars = p.nvars();
    let mut acc = p.clone();
    for (idx, &var) in ordering.iter().enumerate() {
        let upper = match ordering.get(idx + 1) {
            Some(&next) => Poly::var(nvars, next),
            None => Poly::one(nvars),
        };
        acc = acc.integrate(var, &Poly::zero(nvars), &upper);
    }
    acc.constant_term()
}

/// Integrand of `pp` on the region `v₀ = 0 ≤ v_{σ(1)} ≤ ⋯`.
pub fn region_integrand(pp: &PsiProduct, ordering: &[usize]) -> Poly {
    let nvars = pp.num_vars();
    let mut rank = vec![0usize; nvars];
    for (r, &v) in ordering.iter().enumerate() {
        rank[v] = r + 1;
    }
    let mut p = pp.extra.clone();
    for &(i, j, e) in &pp.factors {
        let f = psi_on_region(nvars, i, j, rank[i] < rank[j]);
        p = &p * &f.pow(e);
    }
    p.substitute(0, &Poly::zero(nvars))
}

/// `∫_{[0,1]^k} pp dv₁⋯dv_k`, summed over the `k!` order regions.
pub fn integrate_psi_cube(pp: &PsiProduct, k: usize) -> Rational {
    assert_eq!(pp.num_vars(), k + 1, "PsiProduct must live on v₀..v_k");
    permutations(k)
        .into_par_iter()
        .map(|perm| {
            let ordering: Vec<usize> = perm.iter().map(|&i| i + 1).collect();
            integrate_order_region(&region_integrand(pp, &ordering), &ordering)
        })
        .reduce(Rational::zero, |a, b| a + b)
}

/// `∫_{Δ_k} pp` over the single region `v₁ < ⋯ < v_k`.
pub fn integrate_psi_simplex(pp: &PsiProduct, k: usize) -> Rational {
    let ordering: Vec<usize> = (1..=k).collect();
    integrate_order_region(&region_integrand(pp, &ordering), &ordering)
}

/// All permutations of `0..k` in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..k).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..k).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// Memoized cube integrals keyed by factor list.
#[derive(Debug, Default)]
pub struct IntegralCache {
    map: Mutex<HashMap<(usize, bool, Vec<(usize, usize, u32)>), Rational>>,
}

impl IntegralCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cube(&self, k: usize, factors: &[(usize, usize, u32)]) -> Rational {
        self.lookup(k, false, factors)
    }

    pub fn simplex(&self, k: usize, factors: &[(usize, usize, u32)]) -> Rational {
        self.lookup(k, true, factors)
    }

    fn lookup(&self, k: usize, simplex: bool, factors: &[(usize, usize, u32)]) -> Rational {
        let key = (k, simplex, factors.to_vec());
        if let Some(v) = self.map.lock().expect("cache poisoned").get(&key) {
            return v.clone();
        }
        let pp = PsiProduct::new(k, factors.to_vec());
        let v = if simplex {
            integrate_psi_simplex(&pp, k)
        } else {
            integrate_psi_cube(&pp, k)
        };
        self.map
            .lock()
            .expect("cache poisoned")
            .insert(key, v.clone());
        v
    }
}

/// `∫₀¹ B_n(u) B_m(v−u) du` with `B_m` extended 1-periodically, as a polynomial in `v ∈ [0,1)`.
pub fn bernoulli_convolution(n: u32, m: u32) -> Poly {
    // variables: 0 = v, 1 = u
    let bn = bernoulli_poly(n).remap(2, &[1]);
    let bm = bernoulli_poly(m);
    let diff = &Poly::var(2, 0) - &Poly::var(2, 1);
    // u < v: B_m(v−u); u > v: B_m(v−u+1)
    let below = &bn * &bm.remap(2, &[0]).substitute(0, &diff);
    let shifted = &diff + &Poly::one(2);
    let above = &bn * &bm.remap(2, &[0]).substitute(0, &shifted);
    let mut out = below.integrate(1, &Poly::zero(2), &Poly::var(2, 0));
    out += &above.integrate(1, &Poly::var(2, 0), &Poly::one(2));
    out.remap(1, &[0, usize::MAX])
}

/// `∫_x^{x+1} B_n(u) du` as a polynomial in `x`.
pub fn bernoulli_shift_integral(n: u32) -> Poly {
    let b = bernoulli_poly(n).remap(2, &[1]);
    let x = Poly::var(2, 0);
    let out = b.integrate(1, &x, &(&x + &Poly::one(2)));
    out.remap(1, &[0, usize::MAX])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn numbers() {
        assert_eq!(bernoulli_number(0), int(1));
        assert_eq!(bernoulli_number(1), rat(-1, 2));
        assert_eq!(bernoulli_number(2), rat(1, 6));
        assert_eq!(bernoulli_number(3), int(0));
        assert_eq!(bernoulli_number(4), rat(-1, 30));
        assert_eq!(bernoulli_number(12), rat(-691, 2730));
    }

    #[test]
    fn polynomials() {
        let names = vec!["v".to_string()];
        assert_eq!(bernoulli_poly(0).display_with(&names), "1");
        assert_eq!(bernoulli_poly(1).display_with(&names), "-1/2 + v");
        assert_eq!(bernoulli_poly(2).display_with(&names), "1/6 - v + v^2");
    }

    #[test]
    fn order_regions() {
        assert_eq!(integrate_order_region(&Poly::one(2), &[0, 1]), rat(1, 2));
        assert_eq!(integrate_order_region(&Poly::var(2, 0), &[0, 1]), rat(1, 6));
        assert_eq!(integrate_order_region(&Poly::one(3), &[2, 0, 1]), rat(1, 6));
    }

    #[test]
    fn cycles_match_closed_form() {
        assert_eq!(integrate_psi_cube(&cycle(2), 2), rat(-1, 3));
        assert_eq!(integrate_psi_cube(&cycle(3), 3), int(0));
        assert_eq!(integrate_psi_cube(&cycle(4), 4), rat(1, 45));
        for j in 2..=5 {
            assert_eq!(integrate_psi_cube(&cycle(j), j), i_closed(j as u32));
        }
    }

    #[test]
    fn chains_vanish() {
        for j in 2..=5 {
            assert!(integrate_psi_cube(&open_chain(j), j).is_zero());
        }
        for j in 1..=4 {
            assert!(integrate_psi_cube(&rooted_chain(j), j).is_zero());
        }
    }

    #[test]
    fn rooted_cycle_is_translation_of_cycle() {
        for j in 1..=4 {
            assert_eq!(integrate_psi_cube(&rooted_cycle(j), j), i_closed(j as u32 + 1));
        }
        assert_eq!(itilde_closed(1), rat(1, 3));
    }

    #[test]
    fn convolution_identity() {
        for n in 1..=4 {
            for m in 1..=4 {
                let lhs = bernoulli_convolution(n, m);
                let rhs = bernoulli_poly(n + m).scale(&-(Rational::from_integer(
                    factorial(n) * factorial(m),
                ) / Rational::from_integer(factorial(n + m))));
                assert_eq!(lhs, rhs, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn shift_integral() {
        for n in 0..=5 {
            assert_eq!(bernoulli_shift_integral(n), Poly::monomial(1, 0, n, int(1)));
        }
    }
}
