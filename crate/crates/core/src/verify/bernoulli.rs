use super::{Check, RunConfig};
use crate::bernoulli::{
    bernoulli_convolution, bernoulli_poly, bernoulli_shift_integral, cycle, i_closed, integrate_psi_cube,
    open_chain, rooted_chain, rooted_cycle,
};
use crate::error::Result;
use crate::poly::Poly;
use crate::rational::{factorial, format_rational, int, Rational};

fn show(p: &Poly) -> String {
    p.display_with(&["x".to_string()])
}

pub(super) fn run(_cfg: &RunConfig) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for j in 2..=6usize {
        checks.push(Check::equal(
            format!("bernoulli.cycle-integral.I{j}"),
            "I_j = integral of the j-cycle of psi over the cube = -(-2)^j B_j/j!",
            format_rational(&integrate_psi_cube(&cycle(j), j)),
            format_rational(&i_closed(j as u32)),
        ));
    }
    for j in 1..=4usize {
        checks.push(Check::equal(
            format!("bernoulli.rooted-cycle.{j}"),
            "cycle through the root slot v0 = 0 integrates to I_{j+1}",
            format_rational(&integrate_psi_cube(&rooted_cycle(j), j)),
            format_rational(&i_closed(j as u32 + 1)),
        ));
        checks.push(Check::equal(
            format!("bernoulli.rooted-chain.{j}"),
            "open chains from the root integrate to 0",
            format_rational(&integrate_psi_cube(&rooted_chain(j), j)),
            "0".into(),
        ));
    }
    for j in 2..=5usize {
        checks.push(Check::equal(
            format!("bernoulli.open-chain.{j}"),
            "open chains integrate to 0",
            format_rational(&integrate_psi_cube(&open_chain(j), j)),
            "0".into(),
        ));
    }
    for n in 1..=4u32 {
        for m in 1..=4u32 {
            let ratio = Rational::from_integer(factorial(n) * factorial(m)) / Rational::from_integer(factorial(n + m));
            checks.push(Check::equal(
                format!("bernoulli.convolution.{n}.{m}"),
                "integral of B_n(u) B_m(x-u) over u in [0,1] = -n!m!/(n+m)! B_{n+m}(x)",
                show(&bernoulli_convolution(n, m)),
                show(&bernoulli_poly(n + m).scale(&-ratio)),
            ));
        }
    }
    for n in 0..=5u32 {
        checks.push(Check::equal(
            format!("bernoulli.shift-integral.{n}"),
            "integral of B_n over [x, x+1] = x^n",
            show(&bernoulli_shift_integral(n)),
            show(&Poly::monomial(1, 0, n, int(1))),
        ));
    }
    Ok(checks)
}
