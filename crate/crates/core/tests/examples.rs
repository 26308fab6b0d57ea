use superindex::algebra::{parse_superpoly, phi_embed, star, super_bracket, AlgebraContext, CartanBasis, SuperPolynomial, Var};
use superindex::bernoulli::{bernoulli_number, bernoulli_poly, cycle, i_closed, integrate_psi_cube, open_chain};
use superindex::genera::{rhs_index, series, CurvatureData};
use superindex::hochschild::{hh0_dimension, hochschild_boundary, tau};
use superindex::local_index::{average, closed_form, closed_form_evaluated, pn_direct, pn_graphsum};
use superindex::rational::format_rational;

fn ctx(n: usize, a: usize, b: usize) -> AlgebraContext {
    AlgebraContext::new(n, a, b).unwrap()
}

fn el(ctx: &AlgebraContext, src: &str) -> SuperPolynomial {
    parse_superpoly(ctx, src).unwrap()
}

#[test]
fn star_products() {
    let c = ctx(1, 0, 2);
    assert_eq!(star(&c, &el(&c, "p1"), &el(&c, "q1")), el(&c, "p1*q1 + 1/2 hbar"));
    assert_eq!(star(&c, &el(&c, "xi1"), &el(&c, "xi1")), el(&c, "-1/2 hbar"));
    let f = el(&c, "p1^2*th1 - 3 q1 + th1*th2");
    assert_eq!(star(&c, &SuperPolynomial::one(&c), &f), f);
}

#[test]
fn brackets_and_derivatives() {
    let c = ctx(2, 1, 1);
    assert_eq!(super_bracket(&c, &el(&c, "eta1"), &el(&c, "zeta1")).unwrap(), el(&c, "hbar"));
    assert_eq!(super_bracket(&c, &el(&c, "p1"), &el(&c, "q1")).unwrap(), el(&c, "hbar"));
    let f = el(&c, "p1*q2 + zeta1*eta1*p2");
    assert!(super_bracket(&c, &f, &f).unwrap().is_zero());

    let ze = el(&c, "zeta1*eta1");
    assert_eq!(ze.partial(&c, Var::Theta(1)).unwrap(), el(&c, "eta1"));
    assert_eq!(ze.partial(&c, Var::Theta(2)).unwrap(), el(&c, "-zeta1"));
    assert_eq!(el(&c, "p1^2*q2").partial(&c, Var::P(1)).unwrap(), el(&c, "2 p1*q2"));
}

#[test]
fn berezin_integral() {
    let c = ctx(1, 1, 1);
    assert_eq!(el(&c, "Theta").berezin(&c), el(&c, "1"));
    assert!(el(&c, "1").berezin(&c).is_zero());
    assert_eq!(el(&c, "p1*Theta + zeta1").berezin(&c), el(&c, "p1"));
}

#[test]
fn cartan_images() {
    let c = ctx(1, 1, 3);
    assert_eq!(phi_embed(&c, CartanBasis::Hyperbolic(1)).unwrap(), el(&c, "eta1*zeta1"));
    assert_eq!(phi_embed(&c, CartanBasis::Definite(1)).unwrap(), el(&c, "-xi1*mu1"));
}

#[test]
fn bernoulli_values() {
    let show = |k| format_rational(&bernoulli_number(k));
    assert_eq!([show(2), show(3), show(4)], ["1/6", "0", "-1/30"]);
    assert_eq!(bernoulli_poly(2).display_with(&["v".to_string()]), "1/6 - v + v^2");
    assert_eq!(format_rational(&integrate_psi_cube(&cycle(2), 2)), "-1/3");
    assert_eq!(format_rational(&integrate_psi_cube(&cycle(3), 3)), "0");
    assert_eq!(format_rational(&integrate_psi_cube(&cycle(4), 4)), "1/45");
    assert_eq!(integrate_psi_cube(&cycle(6), 6), i_closed(6));
    assert_eq!(format_rational(&integrate_psi_cube(&open_chain(3), 3)), "0");
}

#[test]
fn clifford_hh0() {
    for (a, b) in [(0, 0), (1, 1), (0, 2), (1, 2), (0, 3), (2, 2)] {
        assert_eq!(hh0_dimension(a, b).unwrap(), 1, "({a},{b})");
    }
}

#[test]
fn trace_values() {
    let c = ctx(0, 1, 1);
    let show = |slots: &[SuperPolynomial]| tau(&c, slots).unwrap().display_with(&["hbar".to_string()]);
    assert_eq!(show(&[el(&c, "Theta")]), "1");
    assert_eq!(show(&[el(&c, "1")]), "0");
    let mut total = superindex::poly::Poly::zero(1);
    for (k, chain) in hochschild_boundary(&c, &[el(&c, "zeta1"), el(&c, "eta1")]).unwrap() {
        total += &tau(&c, &chain).unwrap().scale(&k);
    }
    assert!(total.is_zero());

    let c = ctx(1, 1, 1);
    let ones = vec![SuperPolynomial::one(&c); 3];
    assert!(tau(&c, &ones).unwrap().is_zero());
}

#[test]
fn local_index_polynomials() {
    assert_eq!(pn_graphsum(&ctx(0, 0, 0), 0).unwrap().to_string(), "1");
    assert_eq!(closed_form(&ctx(1, 1, 1), 1).unwrap().to_string(), "-x2");
    assert_eq!(closed_form(&ctx(0, 1, 1), 0).unwrap().to_string(), "-1");
    for (n, a, b) in [(1, 0, 0), (1, 1, 1), (2, 0, 2), (2, 0, 3)] {
        let c = ctx(n, a, b);
        let graphs = average(&pn_graphsum(&c, n).unwrap());
        assert_eq!(average(&pn_direct(&c, n).unwrap()), graphs);
        assert_eq!(average(&closed_form_evaluated(&c, n).unwrap()), graphs);
    }
}

#[test]
fn genus_series() {
    assert_eq!(series("Ahat", &["t"], 4).unwrap().to_string(), "1 - 1/24 t^2 + 7/5760 t^4");
    assert_eq!(series("L", &["t"], 4).unwrap().to_string(), "1 + 1/3 t^2 - 1/45 t^4");
    assert_eq!(series("exp", &["t"], 0).unwrap().to_string(), "1");
}

#[test]
fn rhs_values() {
    for (a, b, expected) in [(0, 0, "1"), (1, 1, "-1"), (0, 2, "-1"), (0, 4, "1")] {
        let c = ctx(0, a, b);
        assert_eq!(rhs_index(&c, 0, &CurvatureData::generic(&c)).unwrap().to_string(), expected);
    }
}
