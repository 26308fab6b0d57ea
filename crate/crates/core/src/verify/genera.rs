use num_traits::{One, Zero};

use super::{Check, RunConfig};
use crate::algebra::{parse_superpoly, phi_embed, AlgebraContext, CartanBasis};
use crate::error::Result;
use crate::genera::series::{inverse_coeffs, mul_coeffs, rescale_coeffs};
use crate::genera::{center_part, chi, named_coeffs, rhs_index, Coefficients, CurvatureData, TruncatedSeries};
use crate::local_index::identities::{cycle_log_series, log_ahat, log_sine_ratio, signed_cycle_log_series};
use crate::local_index::{closed_form, CartanLayout};
use crate::poly::Poly;
use crate::rational::{factorial, format_rational, int, rat, Rational};

const ORDER: u32 = 8;

fn show(c: &Coefficients) -> String {
    let mut p = Poly::zero(1);
    for (k, v) in c.iter().enumerate() {
        p += &Poly::monomial(1, 0, k as u32, v.clone());
    }
    p.display_with(&["t".to_string()])
}

pub(super) fn run(_cfg: &RunConfig) -> Result<Vec<Check>> {
    let mut checks = vec![
        Check::equal(
            "genera.log-identity.sinh",
            "sum_{j>=2} I_j/(2^j j) x^j = log((x/2)/sinh(x/2))",
            show(&cycle_log_series(ORDER)),
            show(&log_ahat(ORDER)?),
        ),
        Check::equal(
            "genera.log-identity.sin",
            "sum_{j>=2} -(-1)^{j/2} I_j/(2^j j) x^j = log(sin(x/2)/(x/2))",
            show(&signed_cycle_log_series(ORDER)),
            show(&log_sine_ratio(ORDER)),
        ),
    ];

    let half = rat(1, 2);
    let ahat = named_coeffs("Ahat", ORDER)?;
    let sinh_over_t = inverse_coeffs(&rescale_coeffs(&ahat, &int(2)), ORDER);
    let lhs = mul_coeffs(
        &mul_coeffs(&ahat, &rescale_coeffs(&named_coeffs("cosh", ORDER)?, &half), ORDER),
        &sinh_over_t,
        ORDER,
    );
    let rhs = mul_coeffs(&rescale_coeffs(&named_coeffs("L", ORDER)?, &half), &sinh_over_t, ORDER);
    checks.push(Check::equal(
        "genera.l-genus-identity",
        "(t/2)/sinh(t/2) cosh(t/2) sinh(t)/t = (t/2)/tanh(t/2) sinh(t)/t",
        show(&lhs),
        show(&rhs),
    ));
    checks.push(Check::equal(
        "genera.bhat-definition",
        "Ahat(t) Bhat(t) = L(t/2) sinh(t)/t",
        show(&mul_coeffs(&ahat, &named_coeffs("Bhat", ORDER)?, ORDER)),
        show(&rhs),
    ));

    checks.push(multiplicativity()?);
    for n in 1..=3 {
        checks.push(purely_even(n)?);
        checks.push(l_genus_pattern(n)?);
    }
    checks.extend(rhs_examples()?);
    checks.extend(chi_examples()?);
    Ok(checks)
}

/// The product of per-root series has coefficients `a_i a_j a_k`.
fn multiplicativity() -> Result<Check> {
    let order = 6;
    let vars: Vec<String> = ["r1", "r2", "r3"].iter().map(|s| s.to_string()).collect();
    let ahat = named_coeffs("Ahat", order)?;
    let mut product = TruncatedSeries::one(vars.clone(), order)?;
    for i in 0..3 {
        let mut linear = vec![Rational::zero(); 3];
        linear[i] = Rational::one();
        product = product.mul(&TruncatedSeries::compose_linear(vars.clone(), order, &ahat, &linear)?)?;
    }
    let mut failures = 0;
    let mut total = 0;
    for i in 0..=order {
        for j in 0..=order - i {
            for k in 0..=order - i - j {
                total += 1;
                let expected = &ahat[i as usize] * &ahat[j as usize] * &ahat[k as usize];
                if product.coeff(&[i, j, k]) != expected {
                    failures += 1;
                }
            }
        }
    }
    Ok(Check::sampled(
        "genera.multiplicativity",
        "product over three roots of Ahat equals the coefficientwise product to order 6",
        failures,
        total,
    ))
}

/// For `a = b = 0` the closed form is `[∏ Ahat(ħγ) e^{x₂}]_n`, built here from the
/// one-variable series directly.
fn purely_even(n: usize) -> Result<Check> {
    let ctx = AlgebraContext::new(n, 0, 0)?;
    let layout = CartanLayout::of(&ctx);
    let nv = layout.num_vars();
    let order = n as u32;
    let ahat = named_coeffs("Ahat", order)?;
    let exp = named_coeffs("exp", order)?;
    let mut factors: Vec<Poly> = Vec::new();
    for i in 0..n {
        let mut f = Poly::zero(nv);
        for (k, c) in ahat.iter().enumerate() {
            let k = k as u32;
            f += &(&Poly::monomial(nv, layout.gamma(i), k, c.clone()) * &Poly::monomial(nv, layout.hbar(), k, Rational::one()));
        }
        factors.push(f);
    }
    let mut e = Poly::zero(nv);
    for (k, c) in exp.iter().enumerate() {
        e += &Poly::monomial(nv, layout.x2(), k as u32, c.clone());
    }
    factors.push(e);
    let mut product = Poly::one(nv);
    for f in &factors {
        product = &product * f;
    }
    let hbar = layout.hbar();
    let expected = product.filter(|ex| ex.iter().enumerate().filter(|(v, _)| *v != hbar).map(|(_, k)| k).sum::<u32>() == order);
    Ok(Check::equal(
        format!("genera.purely-even.n{n}"),
        "for a = b = 0 the closed form is [prod Ahat(hbar gamma) e^{x2}]_n",
        closed_form(&ctx, n)?.to_string(),
        crate::local_index::CartanPolynomial::new(layout, expected).to_string(),
    ))
}

/// `rhs_index` on `(2n|n,n)` with the orthogonal roots set equal to the symplectic
/// ones, against `ħⁿ [∏ L(r/2)·Â⁻¹(2r) · exp(−Ω/ħ)]_n` built from `L` and `1/Â`.
fn l_genus_pattern(n: usize) -> Result<Check> {
    let ctx = AlgebraContext::new(n, n, n)?;
    let mut data = CurvatureData::generic(&ctx);
    data.so_hyperbolic = data.sp_roots.clone();
    let computed = rhs_index(&ctx, n, &data)?;

    // variables r1..rn, Omega, hbar
    let order = n as u32;
    let nv = n + 2;
    let (omega, hbar) = (n, n + 1);
    let ahat = named_coeffs("Ahat", order)?;
    let per_root = mul_coeffs(
        &rescale_coeffs(&named_coeffs("L", order)?, &rat(1, 2)),
        &inverse_coeffs(&rescale_coeffs(&ahat, &int(2)), order),
        order,
    );
    let mut genus = Poly::one(nv);
    for i in 0..n {
        let mut f = Poly::zero(nv);
        for (k, c) in per_root.iter().enumerate() {
            f += &Poly::monomial(nv, i, k as u32, c.clone());
        }
        genus = (&genus * &f).truncate(order);
    }
    let mut expected = Poly::zero(nv);
    for k in 0..=order {
        let coeff = crate::rational::sign_pow(k) / Rational::from_integer(factorial(k));
        let part = genus.homogeneous_part(order - k);
        let term = &(&part * &Poly::monomial(nv, omega, k, coeff)) * &Poly::monomial(nv, hbar, order - k, Rational::one());
        expected += &term;
    }
    let mut names: Vec<String> = (1..=n).map(|i| format!("r{i}")).collect();
    names.push("Omega".into());
    names.push("hbar".into());
    let value = if computed.vars() == names.as_slice() {
        computed.poly().display_with(&names)
    } else {
        format!("variables {:?}", computed.vars())
    };
    Ok(Check::equal(
        format!("genera.l-genus-pattern.n{n}"),
        "rhs on (2n|n,n) with S = R equals hbar^n [L(M) Ahat(-TM) exp(-Omega/hbar)]_{2n}",
        value,
        expected.display_with(&names),
    ))
}

fn rhs_examples() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (a, b) in [(0, 0), (1, 1), (0, 2), (0, 3)] {
        let ctx = AlgebraContext::new(0, a, b)?;
        let r = rhs_index(&ctx, 0, &CurvatureData::generic(&ctx))?;
        let sign = crate::rational::sign_pow((ctx.a() + ctx.zhat()) as u32);
        checks.push(Check::equal(
            format!("genera.rhs.{}.n0", ctx.label()),
            "rhs at n = 0 is (-1)^{a+zhat}",
            format_rational(&r.poly().constant_term()),
            format_rational(&sign),
        ));
    }
    let ctx = AlgebraContext::new(1, 0, 0)?;
    let r = rhs_index(&ctx, 1, &CurvatureData::generic(&ctx))?;
    let only_omega = r.poly().filter(|e| e[0] == 0);
    checks.push(Check::equal(
        "genera.rhs.(2|0,0).n1-omega",
        "with zero curvature the degree-2 part is the Omega term",
        only_omega.display_with(r.vars()),
        "Omega".into(),
    ));
    Ok(checks)
}

fn chi_examples() -> Result<Vec<Check>> {
    let ctx = AlgebraContext::new(1, 1, 1)?;
    let p = parse_superpoly(&ctx, "p1")?;
    let q = parse_superpoly(&ctx, "q1")?;
    let w = parse_superpoly(&ctx, "p1^3 + q1*zeta1*eta1 + 2")?;
    let names = ["hbar".to_string()];
    let mut checks = vec![
        Check::equal(
            "genera.chi.canonical-pair",
            "chi(gl1 coordinate)(p1, q1) = -hbar",
            chi(&ctx, 1, center_part, &[p.clone(), q.clone()])?.display_with(&names),
            "-hbar".into(),
        ),
        Check::equal(
            "genera.chi.antisymmetric",
            "chi(gl1 coordinate)(q1, p1) = hbar",
            chi(&ctx, 1, center_part, &[q, p])?.display_with(&names),
            "hbar".into(),
        ),
    ];
    for (name, kind) in [("symplectic", CartanBasis::Symplectic(1)), ("hyperbolic", CartanBasis::Hyperbolic(1))] {
        let x = phi_embed(&ctx, kind)?;
        checks.push(Check::equal(
            format!("genera.chi.relative.{name}"),
            "chi vanishes when an argument is the image of a Cartan element",
            chi(&ctx, 1, center_part, &[x, w.clone()])?.display_with(&names),
            "0".into(),
        ));
    }
    Ok(checks)
}
