//! Values derived by hand or by independent routes, checked against the engine.

use qhyper_core::*;

fn s(n: i64, d: i64) -> Scalar {
    Scalar::ratio(n, d)
}

#[test]
fn derived_constants_at_q2() {
    let p = Params::ints(2, 1, 1).unwrap();
    // a = ħ/(1 - q²) = -1/3, c̃ = c - a² = 8/9
    assert_eq!(p.a(), &s(-1, 3));
    assert_eq!(p.c_tilde(), &s(8, 9));
    // λ_1 = 1 + q², λ_2 = (Q² - 1)(Q³ - 1)/(Q (Q - 1)²) = 15·63/(4·9)
    assert_eq!(casimir_eigenvalue(1, &p), s(5, 1));
    assert_eq!(casimir_eigenvalue(2, &p), s(105, 4));
    assert_eq!(casimir_eigenvalue(0, &p), Scalar::zero());
}

#[test]
fn low_degree_special_polynomials_by_hand() {
    let p = Params::ints(2, 1, 1).unwrap();
    // P_1 = ṽ + a
    assert_eq!(
        special_polynomial(1, &p).unwrap().recurrence_coeffs(),
        vec![Scalar::one(), s(-1, 3)]
    );
    // P_2 = ṽ² + A_1 ṽ + A_2 with A_1 = b_2/(λ_2 - λ_1), A_2 = c_2/λ_2 + A_1 b_1/λ_2
    // b_2 = a(Q+1)(Q²-1)²/(Q(Q-1)²) = -125/12, b_1 = a(Q+1) = -5/3
    // c_2 = -c̃(Q²-1)(Q-1)/(Q-1)² = -40/9
    let a1 = s(-125, 12) / (s(105, 4) - s(5, 1));
    let a2 = (s(-40, 9) + &a1 * s(-5, 3)) / s(105, 4);
    assert_eq!((&a1, &a2), (&s(-25, 51), &s(-148, 1071)));
    assert_eq!(
        special_polynomial(2, &p).unwrap().recurrence_coeffs(),
        vec![Scalar::one(), a1, a2]
    );
}

#[test]
fn p2_constant_at_hbar_zero() {
    // ħ = 0, q = 2, c = 1: P_2 = ṽ² - c Q/(Q² + Q + 1) = ṽ² - 4/21
    let p = Params::ints(2, 0, 1).unwrap();
    assert_eq!(
        special_polynomial(2, &p).unwrap().poly(),
        &VPoly::new(vec![s(-4, 21), s(0, 1), s(1, 1)])
    );
}

#[test]
fn second_moment_both_normalizations() {
    let p = Params::ints(2, 1, 1).unwrap();
    // μ₂ = Q c̃ (Q - 1)/(Q³ - 1) = 4·(8/9)·3/63
    assert_eq!(moments_recurrence(2, &p, Normalization::TildeOrigin).mu[2], s(32, 189));
    // projector: μ₁ = -a and γ₂ = -a(1+Q)γ₁ + Q c̃ γ₀ with γ₀ = 3, γ₁ = -a·15
    let g2 = s(1, 3) * s(5, 1) * s(5, 1) + s(4, 1) * s(8, 9) * s(3, 1);
    let table = moments_recurrence(2, &p, Normalization::Projector);
    assert_eq!(table.mu[1], s(1, 3));
    assert_eq!(table.mu[2], g2 / s(63, 1));
    assert_eq!(table.mu[2], s(19, 63));
}

/// Moments pinned down by invariance alone: `Int(Y·(u ṽ^j)) = 0` fixes
/// `μ_{j+1}` from lower moments, with `μ₀ = 1`.
fn moments_from_invariance(k_max: usize, p: &Params) -> Vec<Scalar> {
    let mut mu = vec![Scalar::one()];
    for j in 0..k_max {
        let x = multiply(&NormalForm::u(), &NormalForm::t_pow(j as u32), p);
        let g = act(Generator::Y, &x, p).to_vpoly().expect("weight zero");
        assert_eq!(g.degree(), Some(j + 1));
        let lower: Scalar = (0..=j).map(|i| g.coeff(i) * &mu[i]).sum();
        mu.push(-(lower / g.coeff(j + 1)));
    }
    mu
}

#[test]
fn projector_moments_match_invariance_oracle() {
    for p in verify::default_param_grid() {
        let oracle = moments_from_invariance(12, &p);
        assert_eq!(
            moments_recurrence(12, &p, Normalization::Projector).mu,
            oracle,
            "{}",
            verify::describe(&p)
        );
        // X·(w ṽ^j) gives the mirror conditions
        for j in 0..6u32 {
            let x = multiply(&NormalForm::t_pow(j), &NormalForm::w(), &p);
            let g = act(Generator::X, &x, &p).to_vpoly().unwrap();
            assert!(integrate(&g, &p).is_zero());
        }
    }
}

#[test]
fn legendre_oracle_by_hand() {
    // monic Legendre on z² - c: P_2 = z² - c/3, P_3 = z³ - 3c z/5
    let c = s(7, 2);
    assert_eq!(monic_legendre(2, &c), VPoly::new(vec![s(-7, 6), s(0, 1), s(1, 1)]));
    assert_eq!(
        monic_legendre(3, &c),
        VPoly::new(vec![s(0, 1), s(-21, 10), s(0, 1), s(1, 1)])
    );
}

#[test]
fn casimir_on_low_powers_by_hand() {
    // K ṽ = (1 + Q)(ṽ + a); K 1 = 0
    let p = Params::new(s(-3, 2), s(2, 5), s(1, 7)).unwrap();
    assert!(casimir_closed_form(0, &p).is_zero());
    let one_plus_q = p.q2() + Scalar::one();
    assert_eq!(
        casimir_closed_form(1, &p),
        VPoly::new(vec![p.a() * &one_plus_q, one_plus_q])
    );
}

#[test]
fn braided_casimir_is_c_across_grid() {
    for p in verify::default_param_grid() {
        assert_eq!(&braided_casimir_value(&p).unwrap(), p.c());
    }
}

#[test]
fn jackson_matches_exact_moment_at_half() {
    // q = 1/2, ħ = 0, c = 1: μ₂ = Q c (Q - 1)/(Q³ - 1) = 4/21
    let p = Params::new(s(1, 2), s(0, 1), s(1, 1)).unwrap();
    let tol = Scalar::pow10_neg(15);
    let r = jackson_series(&VPoly::monomial(2), &p, Normalization::Projector, &tol, 2000).unwrap();
    assert!(r.converged);
    assert!((r.value - s(4, 21)).abs() < Scalar::pow10_neg(12));
}

#[test]
fn degenerate_inputs() {
    for q in [0, 1, -1] {
        assert!(matches!(Params::ints(q, 1, 1), Err(Error::DegenerateQ(_))));
    }
    let p = Params::ints(2, 1, 1).unwrap();
    assert!(matches!(
        jackson_series(&VPoly::one(), &p, Normalization::Projector, &s(1, 1000), 10),
        Err(Error::NonConvergent(_))
    ));
    assert!(matches!(
        qdiff_plus(&VPoly::monomial(2), &Scalar::one()),
        Err(Error::DegenerateBase(_))
    ));
    assert!(matches!(
        qdiff_minus(&VPoly::monomial(2), &Scalar::zero()),
        Err(Error::DegenerateBase(_))
    ));
}

#[test]
fn rational_q_is_always_generic() {
    // For rational q, Q = q² > 0 and λ_k = √Q [k][k+1] in symmetric q-numbers,
    // strictly increasing in k, so every accepted input is generic.
    let p = Params::new(s(-7, 3), s(1, 1), s(0, 1)).unwrap();
    assert!(genericity_check(&p, 20).is_generic());
}
