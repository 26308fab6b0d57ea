use num_traits::One;

use super::series::{named_coeffs, TruncatedSeries};
use crate::algebra::AlgebraContext;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{factorial, sign_pow, Rational};

/// Formal curvature symbols, each of cohomological degree 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvatureData {
    /// Eigenvalue symbols of the symplectic curvature on a Cartan.
    pub sp_roots: Vec<String>,
    /// Hyperbolic eigenvalue symbols of the orthogonal curvature.
    pub so_hyperbolic: Vec<String>,
    /// Definite eigenvalue symbols of the orthogonal curvature.
    pub so_definite: Vec<String>,
    /// The characteristic 2-form of the deformation.
    pub omega: String,
}

impl CurvatureData {
    /// Symbols `r1.., s1.., u1.., Omega` sized for the context.
    pub fn generic(ctx: &AlgebraContext) -> Self {
        CurvatureData {
            sp_roots: (1..=ctx.n()).map(|i| format!("r{i}")).collect(),
            so_hyperbolic: (1..=ctx.a()).map(|i| format!("s{i}")).collect(),
            so_definite: (1..=ctx.zhat()).map(|i| format!("u{i}")).collect(),
            omega: "Omega".into(),
        }
    }

    /// Every root symbol in order; repeated names denote the same variable.
    fn roots(&self) -> impl Iterator<Item = &String> {
        self.sp_roots.iter().chain(&self.so_hyperbolic).chain(&self.so_definite)
    }

    /// Distinct symbols in order of first appearance.
    fn symbols(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for s in self.roots() {
            if !out.contains(s) {
                out.push(s.clone());
            }
        }
        out
    }
}

/// `(−1)^{n+a+ẑ} ħⁿ [Â(R)·B̂C(S)·exp(−Ω/ħ)]_{2n}` as a polynomial in the curvature
/// symbols, `Ω` and `ħ` (variables in that order, `ħ` named `hbar`). Roots given the
/// same symbol are the same variable.
pub fn rhs_index(ctx: &AlgebraContext, n: usize, data: &CurvatureData) -> Result<TruncatedSeries> {
    for (got, expected) in [
        (data.sp_roots.len(), ctx.n()),
        (data.so_hyperbolic.len(), ctx.a()),
        (data.so_definite.len(), ctx.zhat()),
    ] {
        if got != expected {
            return Err(Error::ArityMismatch { expected, got });
        }
    }
    let order = u32::try_from(2 * n)
        .ok()
        .filter(|&o| o <= super::MAX_ORDER)
        .ok_or_else(|| Error::BoundExceeded(format!("degree {n} too large")))?;
    let n32 = order / 2;
    let symbols = data.symbols();
    let nsym = symbols.len();
    let ahat = named_coeffs("Ahat", n32)?;
    let bhat = named_coeffs("Bhat", n32)?;
    let chat = named_coeffs("Chat", n32)?;
    let mut genus = TruncatedSeries::one(symbols.clone(), n32)?;
    for (i, root) in data.roots().enumerate() {
        let coeffs = if i < data.sp_roots.len() {
            &ahat
        } else if i < data.sp_roots.len() + data.so_hyperbolic.len() {
            &bhat
        } else {
            &chat
        };
        let var = symbols.iter().position(|s| s == root).expect("symbol listed");
        let mut linear = vec![Rational::from_integer(0.into()); nsym];
        linear[var] = Rational::one();
        genus = genus.mul(&TruncatedSeries::compose_linear(symbols.clone(), n32, coeffs, &linear)?)?;
    }

    let total_vars = nsym + 2;
    let omega_var = nsym;
    let hbar_var = nsym + 1;
    let embed: Vec<usize> = (0..nsym).collect();
    let mut out = Poly::zero(total_vars);
    for k in 0..=n32 {
        let part = genus.homogeneous_part(n32 - k).remap(total_vars, &embed);
        let coeff = sign_pow(k) / Rational::from_integer(factorial(k));
        let factor = Poly::monomial(total_vars, omega_var, k, coeff);
        let hbar = Poly::monomial(total_vars, hbar_var, n32 - k, Rational::one());
        out += &(&(&part * &factor) * &hbar);
    }
    let sign = sign_pow(n32 + (ctx.a() + ctx.zhat()) as u32);
    let mut vars = symbols;
    vars.push(data.omega.clone());
    vars.push("hbar".into());
    TruncatedSeries::new(vars, order, out.scale(&sign))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn degree_zero() {
        let ctx = AlgebraContext::new(0, 1, 1).unwrap();
        let r = rhs_index(&ctx, 0, &CurvatureData::generic(&ctx)).unwrap();
        assert_eq!(r.poly(), &Poly::constant(3, int(-1)));
    }

    #[test]
    fn degree_one_omega_term() {
        let ctx = AlgebraContext::new(1, 0, 0).unwrap();
        let r = rhs_index(&ctx, 1, &CurvatureData::generic(&ctx)).unwrap();
        // only Ω survives at degree 2: (−1)^1 ħ · (−Ω/ħ) = Ω
        assert_eq!(r.coeff(&[0, 1, 0]), int(1));
        assert_eq!(r.poly().len(), 1);
        let wrong = CurvatureData {
            sp_roots: vec![],
            ..CurvatureData::generic(&ctx)
        };
        assert!(rhs_index(&ctx, 1, &wrong).is_err());
    }
}
