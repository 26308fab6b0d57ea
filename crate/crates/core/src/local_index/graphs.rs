use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{CartanLayout, CartanPolynomial};
use crate::algebra::AlgebraContext;
use crate::bernoulli::{i_closed, integrate_psi_cube, rooted_cycle};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{factorial, int, pow, rat, sign_pow, Rational};

/// Largest `n` accepted by [`pn_graphsum`].
pub const MAX_GRAPHSUM: usize = 6;

/// Which Cartan generator labels the vertices of a component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    /// `γᵢ qᵢpᵢ`, 0-based `i`.
    Symplectic(usize),
    /// `λ_r η_rζ_r`.
    Hyperbolic(usize),
    /// `−κ_s ξ_sμ_s`.
    Definite(usize),
}

impl Color {
    fn variable(self, layout: CartanLayout) -> usize {
        match self {
            Color::Symplectic(i) => layout.gamma(i),
            Color::Hyperbolic(r) => layout.lambda(r),
            Color::Definite(s) => layout.kappa(s),
        }
    }
}

/// A petal of the Θ-flower: a cycle through the Θ vertex and `length` vertices of
/// one odd color, decorated by one spare vertex of the same color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Petal {
    pub length: usize,
    pub root: Color,
}

/// Isomorphism class of a surviving graph: cycles on `X` vertices, a Θ-flower and
/// edgeless `x₂` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexGraph {
    /// Cycle `(length, color)` with multiplicity.
    pub cycles: BTreeMap<(usize, Color), usize>,
    /// At most one petal per odd color.
    pub petals: Vec<Petal>,
    /// Edgeless vertices labelled by the `gl₁` part.
    pub solo: usize,
}

impl IndexGraph {
    /// Vertices on cycles.
    pub fn n1(&self) -> usize {
        self.cycles.iter().map(|((j, _), m)| j * m).sum()
    }

    /// Vertices on the flower, spares included.
    pub fn n2(&self) -> usize {
        self.petals.iter().map(|p| p.length + 1).sum()
    }

    pub fn n3(&self) -> usize {
        self.solo
    }

    /// Spare vertices, one per petal.
    pub fn spares(&self) -> usize {
        self.petals.len()
    }

    /// `|Aut|` relative to the labelled expansion of the exponential weight.
    ///
    /// A `j`-cycle has `j!/(2j)` labellings (for `j = 2` the `1/2!` of the
    /// exponential plays the role of the reflection); a petal with its spare has
    /// `(j+1)!/2`.
    pub fn automorphism_order(&self) -> Rational {
        let mut out = Rational::from_integer(factorial(self.solo as u32));
        for (&(j, _), &m) in &self.cycles {
            out *= Rational::from_integer(factorial(m as u32)) * pow(&int(2 * j as i64), m as u32);
        }
        out * pow(&int(2), self.petals.len() as u32)
    }
}

/// All graph classes with `n` labelled `X` vertices for the given type.
pub fn enumerate_graphs(layout: CartanLayout, n: usize) -> Vec<IndexGraph> {
    let mut colors: Vec<Color> = (0..layout.n).map(Color::Symplectic).collect();
    colors.extend((0..layout.a).map(Color::Hyperbolic));
    colors.extend((0..layout.zhat).map(Color::Definite));
    let kinds: Vec<(usize, Color)> = (2..=n)
        .flat_map(|j| colors.iter().map(move |&c| (j, c)))
        .collect();
    let roots: Vec<Color> = colors
        .iter()
        .copied()
        .filter(|c| !matches!(c, Color::Symplectic(_)))
        .collect();

    let mut out = Vec::new();
    let mut cycles = BTreeMap::new();
    choose_cycles(&kinds, 0, n, &mut cycles, &mut |cycles, left| {
        let mut petals = Vec::new();
        choose_petals(&roots, 0, left, &mut petals, &mut |petals, solo| {
            out.push(IndexGraph {
                cycles: cycles.clone(),
                petals: petals.to_vec(),
                solo,
            });
        });
    });
    out
}

fn choose_cycles(
    kinds: &[(usize, Color)],
    from: usize,
    left: usize,
    acc: &mut BTreeMap<(usize, Color), usize>,
    emit: &mut dyn FnMut(&BTreeMap<(usize, Color), usize>, usize),
) {
    emit(acc, left);
    for (idx, &(j, c)) in kinds.iter().enumerate().skip(from) {
        if j > left {
            continue;
        }
        *acc.entry((j, c)).or_insert(0) += 1;
        choose_cycles(kinds, idx, left - j, acc, emit);
        let m = acc.get_mut(&(j, c)).expect("just inserted");
        *m -= 1;
        if *m == 0 {
            acc.remove(&(j, c));
        }
    }
}

fn choose_petals(
    roots: &[Color],
    from: usize,
    left: usize,
    acc: &mut Vec<Petal>,
    emit: &mut dyn FnMut(&[Petal], usize),
) {
    emit(acc, left);
    for (idx, &root) in roots.iter().enumerate().skip(from) {
        for length in 1..left {
            acc.push(Petal { length, root });
            choose_petals(roots, idx + 1, left - length - 1, acc, emit);
            acc.pop();
        }
    }
}

/// `Υ` of the operator cycle `D₁₂D₂₃⋯D_{j1}` on `Θ ⊗ Y^{⊗j}`, per unit coefficient,
/// without the `ħ^j`. Only even `j` is needed.
pub fn cycle_value(color: Color, j: usize) -> Rational {
    let base = pow(&rat(1, 2), j as u32 - 1);
    match color {
        Color::Symplectic(_) => base,
        Color::Hyperbolic(_) => -base,
        Color::Definite(_) => -sign_pow(j as u32 / 2) * base,
    }
}

/// `Υ` of the petal `D₀₁D₁₂⋯D_{j0}` on `Θ ⊗ Y^{⊗j} ⊗ Y` (the last slot is the spare),
/// per unit coefficient, without the `ħ^{j+1}`. Only odd `j` is needed.
pub fn petal_value(root: Color, j: usize) -> Result<Rational> {
    let base = pow(&rat(1, 2), j as u32);
    match root {
        Color::Hyperbolic(_) => Ok(-base),
        Color::Definite(_) => Ok(-sign_pow((j as u32).div_ceil(2)) * base),
        Color::Symplectic(_) => Err(Error::InvalidArgument("petals carry an odd color".into())),
    }
}

/// Integral of the Θ-rooted cycle with `v₀ = 0`.
pub fn rooted_cycle_integral(j: usize) -> Rational {
    integrate_psi_cube(&rooted_cycle(j), j)
}

/// `Pₙ` as the sum over graph classes of `n!/|Aut| · C_G`.
pub fn pn_graphsum(ctx: &AlgebraContext, n: usize) -> Result<CartanPolynomial> {
    if n > MAX_GRAPHSUM {
        return Err(Error::BoundExceeded(format!(
            "graph sum supports n <= {MAX_GRAPHSUM}, got {n}"
        )));
    }
    let layout = CartanLayout::of(ctx);
    let nv = layout.num_vars();
    let cycle_integrals: Vec<Rational> = (0..=n).map(|j| if j >= 2 { i_closed(j as u32) } else { Rational::zero() }).collect();
    let rooted: Vec<Rational> = (0..n).map(|j| if j >= 1 { rooted_cycle_integral(j) } else { Rational::zero() }).collect();
    let n_fact = Rational::from_integer(factorial(n as u32));
    let mut total = Poly::zero(nv);
    'graphs: for g in enumerate_graphs(layout, n) {
        let mut term = Poly::constant(nv, &n_fact / g.automorphism_order());
        for (&(j, color), &m) in &g.cycles {
            let weight = &cycle_integrals[j];
            if weight.is_zero() {
                continue 'graphs;
            }
            let c = weight * cycle_value(color, j);
            let mut factor = Poly::monomial(nv, color.variable(layout), j as u32, c);
            factor = &factor * &Poly::monomial(nv, layout.hbar(), j as u32, Rational::one());
            term = &term * &factor.pow(m as u32);
        }
        for p in &g.petals {
            let weight = &rooted[p.length];
            if weight.is_zero() {
                continue 'graphs;
            }
            let c = weight * petal_value(p.root, p.length)?;
            let e = p.length as u32 + 1;
            let factor = &Poly::monomial(nv, p.root.variable(layout), e, c)
                * &Poly::monomial(nv, layout.hbar(), e, Rational::one());
            term = &term * &factor;
        }
        term = &term * &Poly::monomial(nv, layout.x2(), g.solo as u32, Rational::one());
        total += &term;
    }
    Ok(CartanPolynomial::new(layout, total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{phi_embed, CartanBasis, SuperPolynomial};
    use crate::hochschild::ops::pair_operator;
    use crate::hochschild::trace::upsilon_tensor;
    use crate::hochschild::{SlotProduct, TensorChain, TraceConvention};

    /// `Υ(∏ D_e (slots))` for the given edge list, divided by `ħ^{#edges}`.
    fn operator_value(ctx: &AlgebraContext, slots: &[SuperPolynomial], edges: &[(usize, usize)]) -> Rational {
        let conv = TraceConvention::default();
        let mut chain = TensorChain::from_slots(slots);
        for &(a, b) in edges {
            let (i, j, s) = if a < b { (a, b, 1) } else { (b, a, -1) };
            chain = pair_operator(ctx, i, j, conv.g_sign, &chain).unwrap().scale(&int(s));
        }
        let mut out = Poly::zero(1);
        for (t, c) in chain.terms() {
            out += &upsilon_tensor(ctx, t, SlotProduct::Supercommutative).scale(c);
        }
        assert!(out.len() <= 1);
        out.coeff(&[edges.len() as u32])
    }

    fn cycle_edges(j: usize, through_root: bool) -> Vec<(usize, usize)> {
        if through_root {
            (0..=j).map(|k| (k, (k + 1) % (j + 1))).collect()
        } else {
            (1..=j).map(|k| (k, k % j + 1)).collect()
        }
    }

    #[test]
    fn cycle_values_match_operators() {
        for (a, b, basis, color) in [
            (0, 0, CartanBasis::Symplectic(1), Color::Symplectic(0)),
            (1, 1, CartanBasis::Hyperbolic(1), Color::Hyperbolic(0)),
            (0, 2, CartanBasis::Definite(1), Color::Definite(0)),
            (0, 3, CartanBasis::Definite(1), Color::Definite(0)),
        ] {
            let ctx = AlgebraContext::new(1, a, b).unwrap();
            let x = phi_embed(&ctx, basis).unwrap();
            for j in [2usize, 4] {
                let mut slots = vec![SuperPolynomial::orientation(&ctx)];
                slots.extend(std::iter::repeat(x.clone()).take(j));
                let got = operator_value(&ctx, &slots, &cycle_edges(j, false));
                assert_eq!(got, cycle_value(color, j), "({a},{b}) j={j}");
            }
        }
    }

    #[test]
    fn petal_values_match_operators() {
        for (a, b, basis, color) in [
            (1, 1, CartanBasis::Hyperbolic(1), Color::Hyperbolic(0)),
            (0, 2, CartanBasis::Definite(1), Color::Definite(0)),
            (0, 3, CartanBasis::Definite(1), Color::Definite(0)),
        ] {
            let ctx = AlgebraContext::new(0, a, b).unwrap();
            let y = phi_embed(&ctx, basis).unwrap();
            for j in [1usize, 3] {
                let mut slots = vec![SuperPolynomial::orientation(&ctx)];
                slots.extend(std::iter::repeat(y.clone()).take(j + 1));
                let got = operator_value(&ctx, &slots, &cycle_edges(j, true));
                assert_eq!(got, petal_value(color, j).unwrap(), "({a},{b}) j={j}");
            }
        }
    }

    #[test]
    fn automorphisms() {
        let layout = CartanLayout { n: 1, a: 1, zhat: 0 };
        let graphs = enumerate_graphs(layout, 2);
        // solo², 2-cycle γ, 2-cycle λ, petal(1) on λ
        assert_eq!(graphs.len(), 4);
        let petal = graphs.iter().find(|g| !g.petals.is_empty()).unwrap();
        assert_eq!(petal.automorphism_order(), int(2));
        assert_eq!((petal.n1(), petal.n2(), petal.n3(), petal.spares()), (0, 2, 0, 1));
    }

    #[test]
    fn degree_zero_and_bound() {
        let ctx = AlgebraContext::new(2, 1, 1).unwrap();
        assert_eq!(pn_graphsum(&ctx, 0).unwrap().poly(), &Poly::one(CartanLayout::of(&ctx).num_vars()));
        assert!(pn_graphsum(&ctx, 7).is_err());
    }
}
