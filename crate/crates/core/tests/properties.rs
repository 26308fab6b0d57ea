use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use superindex::algebra::supermatrix::random_invertible;
use superindex::algebra::{star, super_bracket, AlgebraContext, Parity, SuperPolynomial, Var};
use superindex::random::{random_homogeneous, random_sparse};
use superindex::rational::int;

fn context() -> impl Strategy<Value = AlgebraContext> {
    prop_oneof![Just((1, 1, 1)), Just((1, 0, 2)), Just((1, 1, 2)), Just((2, 0, 1)), Just((0, 2, 2))]
        .prop_map(|(n, a, b)| AlgebraContext::new(n, a, b).unwrap())
}

fn element(ctx: &AlgebraContext, rng: &mut ChaCha8Rng, max_degree: u32) -> SuperPolynomial {
    let parity = if ctx.num_odd() > 0 && rng.gen_bool(0.5) { Parity::Odd } else { Parity::Even };
    random_sparse(ctx, rng, max_degree, parity, 6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn star_is_associative(ctx in context(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let [f, g, h] = std::array::from_fn(|_| element(&ctx, &mut rng, 3));
        prop_assert_eq!(star(&ctx, &star(&ctx, &f, &g), &h), star(&ctx, &f, &star(&ctx, &g, &h)));
    }

    #[test]
    fn odd_linear_squares_to_quadratic_form(ctx in context(), coeffs in prop::collection::vec(-3i64..=3, 4)) {
        let c: Vec<_> = coeffs.iter().take(ctx.num_odd()).map(|&x| int(x)).collect();
        let mut v = SuperPolynomial::zero(&ctx);
        for (k, ck) in c.iter().enumerate() {
            v += &SuperPolynomial::theta(&ctx, k).scale(ck);
        }
        prop_assert_eq!(star(&ctx, &v, &v), SuperPolynomial::hbar(&ctx).scale(&ctx.quadratic_form(&c)));
    }

    #[test]
    fn weyl_bracket_is_central(ctx in context(), seed in any::<u64>()) {
        prop_assume!(ctx.n() > 0);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let i = rng.gen_range(1..=ctx.n());
        let j = rng.gen_range(1..=ctx.n());
        let p = SuperPolynomial::var(&ctx, Var::P(i)).unwrap();
        let q = SuperPolynomial::var(&ctx, Var::Q(j)).unwrap();
        let bracket = super_bracket(&ctx, &p, &q).unwrap();
        let expected = if i == j { SuperPolynomial::hbar(&ctx) } else { SuperPolynomial::zero(&ctx) };
        prop_assert_eq!(&bracket, &expected);
        let f = element(&ctx, &mut rng, 3);
        prop_assert!(super_bracket(&ctx, &bracket, &f).unwrap().is_zero());
    }

    #[test]
    fn graded_jacobi(ctx in context(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let [f, g, h] = std::array::from_fn(|_| element(&ctx, &mut rng, 3));
        let sign_odd = f.require_parity().unwrap() == Parity::Odd && g.require_parity().unwrap() == Parity::Odd;
        let br = |x: &SuperPolynomial, y: &SuperPolynomial| super_bracket(&ctx, x, y).unwrap();
        let lhs = br(&f, &br(&g, &h));
        let (first, second) = (br(&br(&f, &g), &h), br(&g, &br(&f, &h)));
        let rhs = if sign_odd { &first - &second } else { &first + &second };
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn odd_derivatives_anticommute(ctx in context(), seed in any::<u64>()) {
        prop_assume!(ctx.num_odd() >= 2);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_homogeneous(&ctx, &mut rng, 3);
        let d = |k: usize, g: &SuperPolynomial| g.partial(&ctx, Var::Theta(k)).unwrap();
        for i in 1..=ctx.num_odd() {
            prop_assert!(d(i, &d(i, &f)).is_zero());
            for j in i + 1..=ctx.num_odd() {
                prop_assert_eq!(d(i, &d(j, &f)), -&d(j, &d(i, &f)));
            }
        }
    }

    #[test]
    fn berezinian_is_multiplicative(even in 1usize..=2, odd in 1usize..=2, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_invertible(&mut rng, even, odd, 2);
        let y = random_invertible(&mut rng, even, odd, 2);
        let lhs = x.mul(&y).unwrap().berezinian().unwrap();
        prop_assert_eq!(lhs, x.berezinian().unwrap().mul(&y.berezinian().unwrap()));
    }
}
