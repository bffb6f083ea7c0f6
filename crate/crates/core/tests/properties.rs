use proptest::prelude::*;
use qnarayana::exactalg::{
    poly_exact_div, poly_mul, poly_substitute, series_invert, series_mul, Substituted, Substitution,
};
use qnarayana::{Integer, Polynomial, TruncatedSeries, Var};

fn small_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-9i64..=9, 0..=9).prop_map(|c| Polynomial::from_i64s(Var::T, &c))
}

fn nonzero_poly() -> impl Strategy<Value = Polynomial> {
    small_poly().prop_filter("nonzero", |p| !p.is_zero())
}

/// Series of a fixed order with polynomial coefficients.
fn series(order: usize) -> impl Strategy<Value = TruncatedSeries<Polynomial>> {
    prop::collection::vec(small_poly(), order + 1).prop_map(TruncatedSeries::new)
}

fn series_triple() -> impl Strategy<Value = [TruncatedSeries<Polynomial>; 3]> {
    (0usize..=8).prop_flat_map(|order| [series(order), series(order), series(order)])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn polynomial_ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Polynomial::zero(Var::T));
        prop_assert_eq!(&a * &Polynomial::one(Var::T), a.clone());
    }

    #[test]
    fn series_ring_axioms([f, g, h] in series_triple()) {
        let add = |x: &TruncatedSeries<Polynomial>, y: &TruncatedSeries<Polynomial>| x.try_add(y).unwrap();
        let mul = |x: &TruncatedSeries<Polynomial>, y: &TruncatedSeries<Polynomial>| series_mul(x, y).unwrap();
        prop_assert_eq!(add(&add(&f, &g), &h), add(&f, &add(&g, &h)));
        prop_assert_eq!(add(&f, &g), add(&g, &f));
        prop_assert_eq!(mul(&mul(&f, &g), &h), mul(&f, &mul(&g, &h)));
        prop_assert_eq!(mul(&f, &g), mul(&g, &f));
        prop_assert_eq!(mul(&f, &add(&g, &h)), add(&mul(&f, &g), &mul(&f, &h)));
    }

    #[test]
    fn exact_division_undoes_multiplication(a in small_poly(), b in nonzero_poly()) {
        let product = poly_mul(&a, &b).unwrap();
        prop_assert_eq!(poly_exact_div(&product, &b).unwrap(), a);
    }

    #[test]
    fn series_times_inverse_is_one(
        order in 0usize..=8,
        sign in prop::bool::ANY,
        tail in prop::collection::vec(small_poly(), 8),
    ) {
        let unit = Polynomial::constant(Var::T, Integer::from(if sign { 1 } else { -1 }));
        let mut coeffs = vec![unit];
        coeffs.extend(tail.into_iter().take(order));
        let f = TruncatedSeries::new(coeffs);
        let product = series_mul(&f, &series_invert(&f).unwrap()).unwrap();
        prop_assert!(product.is_one(), "{}", product);
    }

    #[test]
    fn negating_the_variable_twice_is_identity(a in small_poly()) {
        let once = match poly_substitute(&a, &Substitution::Negate) {
            Substituted::Polynomial(p) => p,
            other => panic!("unexpected {other:?}"),
        };
        let twice = match poly_substitute(&once, &Substitution::Negate) {
            Substituted::Polynomial(p) => p,
            other => panic!("unexpected {other:?}"),
        };
        prop_assert_eq!(twice, a);
    }

    #[test]
    fn display_parses_back(a in small_poly()) {
        prop_assert_eq!(Polynomial::parse(&a.to_string(), Var::T).unwrap(), a);
    }
}
