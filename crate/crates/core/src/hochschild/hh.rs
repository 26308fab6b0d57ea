use num_traits::{One, Zero};

use crate::algebra::monomial::Monomial;
use crate::algebra::{super_bracket, AlgebraContext, SuperPolynomial};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Rank of a rational matrix by Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = Rational::one() / &rows[r][c];
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for k in c..cols {
                    let t = &rows[r][k] * &f;
                    rows[i][k] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

/// `dim Cliff(a,b) / [Cliff, Cliff]` at `ħ = 1`, with the graded commutator.
pub fn hh0_dimension(a: usize, b: usize) -> Result<usize> {
    if a + b > 4 {
        return Err(Error::BoundExceeded(format!(
            "hh0_dimension supports a + b <= 4, got {}",
            a + b
        )));
    }
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    let ctx = AlgebraContext::new(0, a, b)?;
    let size = 1usize << ctx.num_odd();
    let basis: Vec<SuperPolynomial> = (0..size as u32)
        .map(|mask| {
            let mut m = Monomial::one(0);
            m.odd = mask;
            SuperPolynomial::from_monomial(m, Rational::one())
        })
        .collect();
    let mut rows = Vec::new();
    for x in &basis {
        for y in &basis {
            let br = super_bracket(&ctx, x, y)?;
            if br.is_zero() {
                continue;
            }
            let mut row = vec![Rational::zero(); size];
            for (m, c) in br.terms() {
                row[m.odd as usize] += c;
            }
            rows.push(row);
        }
    }
    Ok(size - rank(rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clifford_hh0_is_one_dimensional() {
        for (a, b) in [(0, 0), (1, 1), (0, 2), (1, 2), (0, 3), (0, 1)] {
            assert_eq!(hh0_dimension(a, b).unwrap(), 1, "({a},{b})");
        }
        assert!(hh0_dimension(2, 3).is_err());
    }
}
