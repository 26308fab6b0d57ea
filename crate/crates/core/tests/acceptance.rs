//! Acceptance criteria. Runs every criterion, prints one line per criterion and
//! exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};

use superindex::algebra::AlgebraContext;
use superindex::bernoulli::{bernoulli_convolution, bernoulli_shift_integral, cycle, integrate_psi_cube};
use superindex::genera::named_coeffs;
use superindex::hochschild::hh0_dimension;
use superindex::local_index::identities::{cycle_log_series, signed_cycle_log_series};
use superindex::local_index::{average, closed_form, closed_form_evaluated, pn_direct, pn_graphsum};
use superindex::poly::Poly;
use superindex::verify::{self, Report, RunConfig, Suite};
use superindex::{Rational, Result};

struct Outcome {
    passed: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { passed: true, notes: Vec::new() }
    }

    fn require(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.passed = false;
            self.notes.push(what.into());
        }
    }

    fn note(&mut self, what: impl Into<String>) {
        self.notes.push(what.into());
    }

    fn within(&mut self, elapsed: Duration, limit: Duration) {
        self.require(elapsed < limit, format!("took {elapsed:?}, limit {limit:?}"));
    }
}

fn rat(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

fn factorial(n: u32) -> Rational {
    (1..=n).fold(Rational::one(), |acc, k| acc * rat(k.into(), 1))
}

fn binomial(n: u32, k: u32) -> Rational {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Bernoulli numbers with `B₁ = −1/2` from `Σ_{k<m+1} C(m+1,k) B_k = 0`.
fn bernoulli_numbers(up_to: u32) -> Vec<Rational> {
    let mut b = vec![Rational::one()];
    for m in 1..=up_to {
        let s = (0..m).fold(Rational::zero(), |acc, k| acc + binomial(m + 1, k) * &b[k as usize]);
        b.push(-s / rat((m + 1).into(), 1));
    }
    b
}

/// `B_n(x) = Σ C(n,k) B_k x^{n−k}`.
fn bernoulli_polynomial(n: u32, b: &[Rational]) -> Poly {
    let mut p = Poly::zero(1);
    for k in 0..=n {
        p += &Poly::monomial(1, 0, n - k, binomial(n, k) * &b[k as usize]);
    }
    p
}

fn suite_report(suite: Suite) -> Result<(Report, Duration)> {
    let start = Instant::now();
    let report = verify::run(suite, &RunConfig::default())?;
    Ok((report, start.elapsed()))
}

fn require_checks(out: &mut Outcome, report: &Report, prefix: &str, min_samples: Option<usize>) {
    let selected: Vec<_> = report.checks.iter().filter(|c| c.id.starts_with(prefix)).collect();
    out.require(!selected.is_empty(), format!("no checks under {prefix}"));
    for c in selected {
        out.require(c.passed, format!("{} failed: {} vs {}", c.id, c.value, c.expected));
        if let Some(min) = min_samples {
            let samples: usize = c
                .value
                .rsplit(' ')
                .nth(1)
                .and_then(|s| s.parse().ok())
                .unwrap_or(0);
            out.require(samples >= min, format!("{} ran {samples} samples, need {min}", c.id));
        }
    }
}

fn bernoulli_criterion() -> Result<Outcome> {
    let mut out = Outcome::new();
    let start = Instant::now();
    let b = bernoulli_numbers(10);
    for j in 2..=5u32 {
        let expected = -(rat(-2, 1).pow(j as i32)) * &b[j as usize] / factorial(j);
        let got = integrate_psi_cube(&cycle(j as usize), j as usize);
        out.require(got == expected, format!("I_{j} = {got}, expected {expected}"));
    }
    for n in 1..=4u32 {
        for m in 1..=4u32 {
            let scale = -(factorial(n) * factorial(m) / factorial(n + m));
            let expected = bernoulli_polynomial(n + m, &b).scale(&scale);
            out.require(bernoulli_convolution(n, m) == expected, format!("convolution n={n} m={m}"));
        }
    }
    for n in 0..=5u32 {
        let expected = Poly::monomial(1, 0, n, Rational::one());
        out.require(bernoulli_shift_integral(n) == expected, format!("shift integral n={n}"));
    }
    out.within(start.elapsed(), Duration::from_secs(10));
    Ok(out)
}

fn algebra_criterion() -> Result<Outcome> {
    let mut out = Outcome::new();
    let (report, elapsed) = suite_report(Suite::Algebra)?;
    for kind in ["(2|1,1)", "(2|0,2)", "(4|2,2)"] {
        let base = format!("algebra.{kind}.");
        require_checks(&mut out, &report, &format!("{base}associativity"), Some(100));
        require_checks(&mut out, &report, &format!("{base}berezinian-symplectic"), Some(20));
        for name in ["unit", "clifford-generators", "clifford-square", "weyl", "odd-derivatives", "jacobi"] {
            require_checks(&mut out, &report, &format!("{base}{name}"), None);
        }
    }
    out.require(report.passed, format!("{} algebra checks failed", report.failed));
    out.within(elapsed, Duration::from_secs(60));
    Ok(out)
}

fn cocycle_criterion() -> Result<Outcome> {
    let mut out = Outcome::new();
    let (report, elapsed) = suite_report(Suite::Cocycle)?;
    for kind in ["(2|0,0)", "(2|1,1)", "(2|0,2)"] {
        require_checks(&mut out, &report, &format!("cocycle.{kind}.closed"), Some(50));
        // a chain whose boundary is a 3-chain has 4 slots
        let ctx = AlgebraContext::new(1, 0, 0)?;
        out.require(superindex::hochschild::Cocycle::new(&ctx).arity() + 1 == 4, "chains have arity 4");
    }
    out.within(elapsed, Duration::from_secs(300));
    Ok(out)
}

fn hh_criterion() -> Result<Outcome> {
    let mut out = Outcome::new();
    let start = Instant::now();
    for total in 0..=3 {
        for a in 0..=total / 2 {
            let b = total - a;
            let dim = hh0_dimension(a, b)?;
            out.require(dim == 1, format!("HH0 of Cliff({a},{b}) has dimension {dim}"));
        }
    }
    out.within(start.elapsed(), Duration::from_secs(30));
    Ok(out)
}

fn local_index_criterion() -> Result<Outcome> {
    let mut out = Outcome::new();
    let start = Instant::now();
    let mut direct_ok = true;
    let mut evaluated_ok = true;
    for n in 1..=3 {
        for (a, b) in [(0, 0), (1, 1), (0, 2), (0, 3)] {
            let ctx = AlgebraContext::new(n, a, b)?;
            let label = ctx.label();
            let graphs = average(&pn_graphsum(&ctx, n)?);
            if n <= 2 {
                let direct = average(&pn_direct(&ctx, n)?);
                direct_ok &= direct == graphs;
                out.require(direct == graphs, format!("{label} n={n}: direct {direct} vs graph sum {graphs}"));
            }
            let closed = closed_form(&ctx, n)?;
            out.require(graphs == closed, format!("{label} n={n}: graph sum {graphs} vs closed form {closed}"));
            evaluated_ok &= graphs == average(&closed_form_evaluated(&ctx, n)?);
        }
    }
    out.note(format!(
        "direct = graph sum for n <= 2: {}; graph sum = n! [prod Ahat prod cosh prod cos e^x2]_n: {}",
        direct_ok, evaluated_ok
    ));
    out.within(start.elapsed(), Duration::from_secs(600));
    Ok(out)
}

/// Coefficients of `log f` for `f = 1 + O(x)`, from `f (log f)' = f'`.
fn log_series(f: &[Rational]) -> Vec<Rational> {
    let order = f.len() - 1;
    let mut d = vec![Rational::zero(); order];
    for k in 0..order {
        // coefficient of x^k in f' minus the contributions of earlier terms
        let mut s = f[k + 1].clone() * rat(k as i64 + 1, 1);
        for i in 0..k {
            s -= &d[i] * &f[k - i];
        }
        d[k] = s;
    }
    let mut out = vec![Rational::zero()];
    out.extend(d.iter().enumerate().map(|(k, c)| c / rat(k as i64 + 1, 1)));
    out
}

/// `sinh(x/2)/(x/2)` (or the sine version when `alternating`) up to `x^order`.
fn half_ratio(order: usize, alternating: bool) -> Vec<Rational> {
    (0..=order)
        .map(|k| {
            if k % 2 == 1 {
                return Rational::zero();
            }
            let sign = if alternating && k % 4 == 2 { -1 } else { 1 };
            rat(sign, 1) / (factorial(k as u32 + 1) * rat(1 << k, 1))
        })
        .collect()
}

fn generating_function_criterion() -> Result<Outcome> {
    let mut out = Outcome::new();
    let start = Instant::now();
    let sinh_log: Vec<Rational> = log_series(&half_ratio(8, false)).into_iter().map(|c| -c).collect();
    out.require(cycle_log_series(8) == sinh_log, "sum I_j/(2^j j) x^j vs log((x/2)/sinh(x/2))");
    let sin_log = log_series(&half_ratio(8, true));
    out.require(signed_cycle_log_series(8) == sin_log, "signed cycle series vs log(sin(x/2)/(x/2))");
    let (report, _) = suite_report(Suite::Genera)?;
    require_checks(&mut out, &report, "genera.purely-even", None);
    // a = b = 0 at n = 1: [Ahat(hbar g) e^x2]_1 = x2
    let ctx = AlgebraContext::new(1, 0, 0)?;
    out.require(closed_form(&ctx, 1)?.to_string() == "x2", "purely even n = 1 is x2");
    out.within(start.elapsed(), Duration::from_secs(10));
    Ok(out)
}

fn genus_criterion() -> Result<Outcome> {
    let mut out = Outcome::new();
    let start = Instant::now();
    let order = 8;
    let b = bernoulli_numbers(order as u32);
    // (t/2) coth(t/2) = sum B_{2k} t^{2k}/(2k)!
    let l_half: Vec<Rational> = (0..=order)
        .map(|k| if k % 2 == 0 { &b[k] / factorial(k as u32) } else { Rational::zero() })
        .collect();
    let ahat = named_coeffs("Ahat", order as u32)?;
    let cosh_half: Vec<Rational> = (0..=order)
        .map(|k| if k % 2 == 0 { Rational::one() / (factorial(k as u32) * rat(1 << k, 1)) } else { Rational::zero() })
        .collect();
    let product: Vec<Rational> = (0..=order)
        .map(|k| (0..=k).fold(Rational::zero(), |acc, i| acc + &ahat[i] * &cosh_half[k - i]))
        .collect();
    out.require(product == l_half, "Ahat(t) cosh(t/2) vs L(t/2)");
    let l = named_coeffs("L", order as u32)?;
    let l_rescaled: Vec<Rational> = l.iter().enumerate().map(|(k, c)| c / rat(1 << k, 1)).collect();
    out.require(l_rescaled == l_half, "named L series vs t coth t");

    let (report, _) = suite_report(Suite::Genera)?;
    for n in 1..=3 {
        require_checks(&mut out, &report, &format!("genera.l-genus-pattern.n{n}"), None);
    }
    require_checks(&mut out, &report, "genera.bhat-definition", None);
    out.within(start.elapsed(), Duration::from_secs(10));
    Ok(out)
}

fn determinism_criterion() -> Result<Outcome> {
    let mut out = Outcome::new();
    let cfg = RunConfig { seed: 20261016, ..RunConfig::default() };
    let first = verify::run(Suite::All, &cfg)?.to_json();
    let second = verify::run(Suite::All, &cfg)?.to_json();
    out.require(first == second, "two runs of verify all differ");
    out.note(format!("{} bytes of JSON", first.len()));
    Ok(out)
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Result<Outcome>); 8] = [
        ("bernoulli identities", bernoulli_criterion),
        ("star product, Clifford and Weyl relations, Berezinian", algebra_criterion),
        ("tau vanishes on boundaries", cocycle_criterion),
        ("HH0 of Clifford algebras", hh_criterion),
        ("local index polynomial closed form", local_index_criterion),
        ("generating function identities", generating_function_criterion),
        ("genus identities", genus_criterion),
        ("determinism of verify all", determinism_criterion),
    ];
    let mut all = true;
    for (i, (name, criterion)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = criterion().unwrap_or_else(|e| Outcome {
            passed: false,
            notes: vec![format!("error: {e}")],
        });
        all &= outcome.passed;
        let mark = if outcome.passed { "PASS" } else { "FAIL" };
        println!("criterion {}: {mark} {name} ({:.2?})", i + 1, start.elapsed());
        for note in &outcome.notes {
            println!("    {note}");
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
