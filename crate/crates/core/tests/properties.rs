use proptest::prelude::*;
use proptest::strategy::Strategy;
use qhyper_core::Strategy as Redex;
use qhyper_core::*;

fn s(n: i64, d: i64) -> Scalar {
    Scalar::ratio(n, d)
}

fn small_rational() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| s(n, d))
}

fn admissible_q() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=5)
        .prop_filter("q² != 0, 1", |(n, d)| *n != 0 && n.abs() != *d)
        .prop_map(|(n, d)| s(n, d))
}

fn params() -> impl Strategy<Value = Params> {
    (admissible_q(), small_rational(), small_rational()).prop_map(|(q, h, c)| Params::new(q, h, c).unwrap())
}

fn contracting_params() -> impl Strategy<Value = Params> {
    (
        prop_oneof![Just(s(1, 2)), Just(s(-2, 3)), Just(s(3, 4))],
        small_rational(),
        small_rational(),
    )
        .prop_map(|(q, h, c)| Params::new(q, h, c).unwrap())
        .prop_filter("distinct roots", |p| !RootPair::new(p).is_confluent())
}

fn word(max_len: usize) -> impl Strategy<Value = FreeElement> {
    prop::collection::vec(
        prop_oneof![Just(Letter::U), Just(Letter::V), Just(Letter::W)],
        0..=max_len,
    )
    .prop_map(FreeElement::word)
}

fn normal_form() -> impl Strategy<Value = NormalForm> {
    prop::collection::vec((0u32..3, 0u32..3, any::<bool>(), -4i64..=4), 1..4).prop_map(|terms| {
        let mut x = NormalForm::zero();
        for (e, t, left, c) in terms {
            let m = if left {
                Monomial::new(e, t, 0)
            } else {
                Monomial::new(0, t, e)
            };
            x.add_term(m, Scalar::from_int(c));
        }
        x
    })
}

fn generator() -> impl Strategy<Value = Generator> {
    prop_oneof![
        Just(Generator::Eplus),
        Just(Generator::Eminus),
        Just(Generator::X),
        Just(Generator::Y)
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reduction_is_strategy_independent(p in params(), w in word(6), seed in any::<u64>()) {
        let left = reduce_with(&w, &p, Redex::Leftmost);
        prop_assert_eq!(&left, &reduce_with(&w, &p, Redex::Rightmost));
        prop_assert_eq!(&left, &reduce_with(&w, &p, Redex::Random(seed)));
    }

    #[test]
    fn multiplication_is_associative(p in params(), x in normal_form(), y in normal_form(), z in normal_form()) {
        let xy_z = multiply(&multiply(&x, &y, &p), &z, &p);
        let x_yz = multiply(&x, &multiply(&y, &z, &p), &p);
        prop_assert_eq!(xy_z, x_yz);
    }

    #[test]
    fn action_preserves_the_ideal(p in params(), w in word(5), g in generator()) {
        // acting then reducing agrees with reducing then acting
        let upstairs = reduce(&act(g, &w, &p), &p);
        let downstairs = act(g, &reduce(&w, &p), &p);
        prop_assert_eq!(upstairs, downstairs);
    }

    #[test]
    fn genericity_report_is_prefix_monotone(p in params(), k in 1u32..12) {
        let short = genericity_check(&p, k);
        let long = genericity_check(&p, k + 3);
        prop_assert!(short.violations.iter().all(|v| long.violations.contains(v)));
        prop_assert!(short.moment_violations.iter().all(|v| long.moment_violations.contains(v)));
    }

    #[test]
    fn special_polynomial_is_unique(p in params(), k in 1u32..=5, j in 1usize..=5, bump in small_rational()) {
        prop_assume!(j <= k as usize && !bump.is_zero());
        let pk = special_polynomial(k, &p).unwrap();
        let lambda = casimir_eigenvalue(k, &p);
        prop_assert_eq!(casimir_on_poly(pk.poly(), &p), pk.poly().scale(&lambda));
        let perturbed = pk.poly() + &VPoly::term(bump, k as usize - j);
        prop_assert_ne!(casimir_on_poly(&perturbed, &p), perturbed.scale(&lambda));
    }

    #[test]
    fn parity_at_zero_hbar(q in admissible_q(), c in small_rational(), k in 0u32..=8) {
        let p = Params::new(q, Scalar::zero(), c).unwrap();
        let pk = special_polynomial(k, &p).unwrap();
        for (d, coeff) in pk.poly().coeffs().iter().enumerate() {
            if (k as usize + d) % 2 == 1 {
                prop_assert!(coeff.is_zero());
            }
        }
        let table = moments_recurrence(9, &p, Normalization::Projector);
        for m in (1..=9).step_by(2) {
            prop_assert!(table.mu[m].is_zero());
        }
    }

    #[test]
    fn p2_linear_term_tracks_hbar(p in params()) {
        let p2 = special_polynomial(2, &p).unwrap();
        prop_assert_eq!(p2.poly().coeff(1).is_zero(), p.hbar().is_zero());
    }

    #[test]
    fn three_way_casimir_on_random_polys(p in params(), coeffs in prop::collection::vec(small_rational(), 0..7)) {
        let f = VPoly::new(coeffs);
        let closed = casimir_on_poly(&f, &p);
        prop_assert_eq!(&closed, &casimir_via_qdiff(&f, &p));
        prop_assert_eq!(Some(closed), act_casimir(&NormalForm::from_vpoly(&f), &p).to_vpoly());
    }

    #[test]
    fn moments_closed_form_matches_recurrence(p in params()) {
        prop_assume!(!RootPair::new(&p).is_confluent());
        for norm in [Normalization::Projector, Normalization::TildeOrigin] {
            let table = moments_recurrence(12, &p, norm);
            for k in 0..=12 {
                prop_assert_eq!(&moment_closed_form(k, &p, norm).unwrap(), &table.mu[k as usize]);
            }
        }
    }

    #[test]
    fn integral_annihilates_special_polynomials(p in params(), k in 1u32..=6) {
        let pk = special_polynomial(k, &p).unwrap();
        prop_assert!(integrate(pk.poly(), &p).is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// Summing `f(x) - Q f(Qx)` over the nodes telescopes: the series for
    /// `g(t) = f(t) - Q f(Q t)` equals its first-node value `-Σ f_k γ_k`.
    #[test]
    fn jackson_series_telescopes(p in contracting_params(), coeffs in prop::collection::vec(small_rational(), 1..5)) {
        let f = VPoly::new(coeffs);
        let q2 = p.q2().clone();
        let scaled = VPoly::new(
            f.coeffs().iter().enumerate().map(|(k, c)| c * q2.pow(k as i32 + 1)).collect(),
        );
        let g = &f - &scaled;
        let table = moments_recurrence(f.coeffs().len() as u32, &p, Normalization::Projector);
        let expected: Scalar = f.coeffs().iter().zip(&table.gamma).map(|(c, g)| -(c * g)).sum();
        let tol = Scalar::pow10_neg(15);
        let r = jackson_series(&g, &p, Normalization::Projector, &tol, 2000).unwrap();
        prop_assert!((r.value - &expected).abs() < Scalar::pow10_neg(10));
        // and the untransformed series converges to the exact integral
        let r = jackson_series(&f, &p, Normalization::Projector, &tol, 2000).unwrap();
        prop_assert!((r.value - integrate(&f, &p)).abs() < Scalar::pow10_neg(10));
    }
}
