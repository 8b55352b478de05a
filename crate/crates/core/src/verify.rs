//! The invariant suite: every structural identity of the engine, checked
//! exactly on a grid of parameters and on seeded random inputs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{
    braided_casimir_value, multiply, reduce, reduce_with, FreeElement, Letter, Monomial, NormalForm, Strategy,
};
use crate::casimir::{casimir_closed_form, casimir_on_poly, casimir_via_qdiff};
use crate::integral::{
    integrate, moment_closed_form, moments_recurrence, orthogonality_matrix, Normalization, RootPair,
};
use crate::params::Params;
use crate::quantum_group::{act, act_casimir, act_word, casimir_eigenvalue, verify_v2_decomposition, Generator};
use crate::report::CheckRecord;
use crate::scalar::Scalar;
use crate::special::{casimir_row, special_polynomial};
use crate::vpoly::VPoly;

pub const DEFAULT_SEED: u64 = 0x5eed_2026;

/// Knobs for [`run_suite`].
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub params: Vec<Params>,
    pub seed: u64,
    /// Highest `k` in the three-way Casimir comparison.
    pub casimir_k_max: u32,
    /// Highest `k` in the eigenfunction checks.
    pub eigen_k_max: u32,
    pub confluence_words: usize,
    pub max_word_len: usize,
    pub random_elements: usize,
    pub moment_k_max: u32,
    pub orthogonality_k_max: u32,
    /// Negative control: add 1 to `A^k_1` before the eigenfunction checks.
    pub perturb_special: bool,
}

impl SuiteConfig {
    pub fn new(params: Vec<Params>) -> Self {
        SuiteConfig {
            params,
            seed: DEFAULT_SEED,
            casimir_k_max: 15,
            eigen_k_max: 10,
            confluence_words: 500,
            max_word_len: 6,
            random_elements: 20,
            moment_k_max: 20,
            orthogonality_k_max: 6,
            perturb_special: false,
        }
    }
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self::new(default_param_grid())
    }
}

/// Five generic tuples, two of them at `ħ = 0`.
pub fn default_param_grid() -> Vec<Params> {
    let s = Scalar::ratio;
    [
        (s(2, 1), s(1, 1), s(1, 1)),
        (s(2, 1), s(0, 1), s(1, 1)),
        (s(1, 2), s(3, 5), s(-2, 3)),
        (s(-3, 2), s(0, 1), s(5, 4)),
        (s(5, 3), s(-7, 2), s(2, 9)),
    ]
    .into_iter()
    .map(|(q, h, c)| Params::new(q, h, c).expect("grid is non-degenerate"))
    .collect()
}

pub fn describe(p: &Params) -> String {
    format!("q={} hbar={} c={}", p.q(), p.hbar(), p.c())
}

pub fn random_free_word(rng: &mut impl Rng, max_len: usize) -> FreeElement {
    let len = rng.gen_range(0..=max_len);
    let word = (0..len)
        .map(|_| match rng.gen_range(0..3) {
            0 => Letter::U,
            1 => Letter::V,
            _ => Letter::W,
        })
        .collect();
    FreeElement::word(word)
}

fn random_coeff(rng: &mut impl Rng) -> Scalar {
    let n = rng.gen_range(-9..=9);
    let d = rng.gen_range(1..=5);
    Scalar::ratio(if n == 0 { 1 } else { n }, d)
}

/// A few basis monomials of degree `<= max_degree` with small rational
/// coefficients.
pub fn random_normal_form(rng: &mut impl Rng, max_degree: u32) -> NormalForm {
    let mut out = NormalForm::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let deg = rng.gen_range(0..=max_degree);
        let t = rng.gen_range(0..=deg);
        let rest = deg - t;
        let m = if rng.gen_bool(0.5) {
            Monomial::new(rest, t, 0)
        } else {
            Monomial::new(0, t, rest)
        };
        out.add_term(m, random_coeff(rng));
    }
    out
}

fn count_record(check: &str, input: String, total: usize, agree: usize) -> CheckRecord {
    CheckRecord::new(check, input, total, agree, total == agree)
}

pub fn check_braided_casimir(p: &Params) -> CheckRecord {
    let got = braided_casimir_value(p);
    match got {
        Ok(v) => CheckRecord::scalar("braided_casimir", describe(p), p.c(), &v),
        Err(e) => CheckRecord::new("braided_casimir", describe(p), p.c(), e, false),
    }
}

/// Reduce random words under leftmost, rightmost and random redex choice.
pub fn check_confluence(p: &Params, rng: &mut impl Rng, words: usize, max_len: usize) -> CheckRecord {
    let mut agree = 0;
    for _ in 0..words {
        let w = random_free_word(rng, max_len);
        let left = reduce_with(&w, p, Strategy::Leftmost);
        let ok =
            left == reduce_with(&w, p, Strategy::Rightmost) && left == reduce_with(&w, p, Strategy::Random(rng.gen()));
        agree += ok as usize;
    }
    count_record(
        "confluence",
        format!("{} words<={max_len} {}", words, describe(p)),
        words,
        agree,
    )
}

/// `reduce(g·W) = g·reduce(W)` for every generator.
pub fn check_ideal_invariance(p: &Params, rng: &mut impl Rng, words: usize, max_len: usize) -> CheckRecord {
    let gens = [Generator::Eplus, Generator::Eminus, Generator::X, Generator::Y];
    let mut agree = 0;
    for _ in 0..words {
        let w = random_free_word(rng, max_len);
        let nf = reduce(&w, p);
        let ok = gens.iter().all(|&g| reduce(&act(g, &w, p), p) == act(g, &nf, p));
        agree += ok as usize;
    }
    count_record("ideal_invariance", describe(p), words, agree)
}

/// The defining relations of the quantum group, applied to random elements.
pub fn check_hopf_relations(p: &Params, rng: &mut impl Rng, samples: usize) -> CheckRecord {
    use Generator::*;
    let mut agree = 0;
    let denom = p.q() - p.q_inv();
    for _ in 0..samples {
        let x = random_normal_form(rng, 4);
        let ex = act_word(&[Eplus, X], &x, p) == act_word(&[X, Eplus], &x, p).scale(p.q());
        let ey = act_word(&[Eplus, Y], &x, p) == act_word(&[Y, Eplus], &x, p).scale(&p.q_inv());
        let inv = act_word(&[Eplus, Eminus], &x, p) == x;
        let comm = act_word(&[X, Y], &x, p).sub(&act_word(&[Y, X], &x, p))
            == act_word(&[Eplus, Eplus], &x, p)
                .sub(&act_word(&[Eminus, Eminus], &x, p))
                .scale(&denom.inv().expect("q^2 != 1"));
        // K is central: it commutes with every generator
        let central = [Eplus, X, Y]
            .iter()
            .all(|&g| act_casimir(&act(g, &x, p), p) == act(g, &act_casimir(&x, p), p));
        agree += (ex && ey && inv && comm && central) as usize;
    }
    count_record("hopf_relations", describe(p), samples, agree)
}

pub fn check_associativity(p: &Params, rng: &mut impl Rng, samples: usize) -> CheckRecord {
    let mut agree = 0;
    for _ in 0..samples {
        let x = random_normal_form(rng, 3);
        let y = random_normal_form(rng, 3);
        let z = random_normal_form(rng, 3);
        let ok = multiply(&multiply(&x, &y, p), &z, p) == multiply(&x, &multiply(&y, &z, p), p);
        agree += ok as usize;
    }
    count_record("associativity", describe(p), samples, agree)
}

/// `K ṽ^k` three ways: through the algebra, the closed form and the
/// q-difference factorization.
pub fn check_casimir_three_way(p: &Params, k_max: u32) -> CheckRecord {
    let mut agree = 0;
    for k in 0..=k_max {
        let oracle = act_casimir(&NormalForm::t_pow(k), p).to_vpoly();
        let closed = casimir_closed_form(k, p);
        let qdiff = casimir_via_qdiff(&VPoly::monomial(k as usize), p);
        let lead = closed.coeff(k as usize) == casimir_eigenvalue(k, p);
        agree += (oracle.as_ref() == Some(&closed) && closed == qdiff && lead) as usize;
    }
    count_record(
        "casimir_three_way",
        format!("k=0..{k_max} {}", describe(p)),
        k_max as usize + 1,
        agree,
    )
}

pub fn check_eigenfunctions(p: &Params, k_max: u32, perturb: bool) -> CheckRecord {
    let mut agree = 0;
    for k in 0..=k_max {
        let Ok(pk) = special_polynomial(k, p) else {
            continue;
        };
        let mut poly = pk.poly().clone();
        if perturb && k >= 1 {
            poly = &poly + &VPoly::term(Scalar::one(), k as usize - 1);
        }
        let lambda = casimir_eigenvalue(k, p);
        let expected = poly.scale(&lambda);
        let closed = casimir_on_poly(&poly, p) == expected;
        let algebra = act_casimir(&NormalForm::from_vpoly(&poly), p).to_vpoly() == Some(expected);
        let row = casimir_row(k, p).a == lambda;
        agree += (closed && algebra && row) as usize;
    }
    count_record(
        "eigenfunction",
        format!("k=0..{k_max} {}", describe(p)),
        k_max as usize + 1,
        agree,
    )
}

pub fn check_moments(p: &Params, k_max: u32) -> Vec<CheckRecord> {
    if RootPair::new(p).is_confluent() {
        return vec![CheckRecord::new(
            "moment_closed_form",
            describe(p),
            "skipped",
            "confluent roots",
            true,
        )];
    }
    [Normalization::Projector, Normalization::TildeOrigin]
        .into_iter()
        .map(|norm| {
            let table = moments_recurrence(k_max, p, norm);
            let agree = (0..=k_max)
                .filter(|&k| moment_closed_form(k, p, norm).ok().as_ref() == Some(&table.mu[k as usize]))
                .count();
            count_record(
                "moment_closed_form",
                format!("k=0..{k_max} {norm:?} {}", describe(p)),
                k_max as usize + 1,
                agree,
            )
        })
        .collect()
}

/// `Int(P_k) = 0` for `1 <= k <= k_max`.
pub fn check_integral_kills_special(p: &Params, k_max: u32) -> CheckRecord {
    let agree = (1..=k_max)
        .filter(|&k| {
            special_polynomial(k, p)
                .map(|pk| integrate(pk.poly(), p).is_zero())
                .unwrap_or(false)
        })
        .count();
    count_record(
        "integral_of_special",
        format!("k=1..{k_max} {}", describe(p)),
        k_max as usize,
        agree,
    )
}

pub fn check_orthogonality(p: &Params, k_max: u32) -> CheckRecord {
    let input = format!("k_max={k_max} {}", describe(p));
    match orthogonality_matrix(k_max, p) {
        Ok(m) => {
            let off: usize = (0..m.len())
                .flat_map(|i| (0..m.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| i != j && !m[i][j].is_zero())
                .count();
            CheckRecord::new("orthogonality", input, 0, off, off == 0)
        }
        Err(e) => CheckRecord::new("orthogonality", input, 0, e, false),
    }
}

/// `Int(Y(u ṽ^k)) = 0`: the moments are those of the trivial-component
/// projector.
pub fn check_projector_property(p: &Params, k_max: u32) -> CheckRecord {
    let agree = (0..=k_max)
        .filter(|&k| {
            let f = act(Generator::Y, &NormalForm::monomial(Monomial::new(1, k, 0)), p);
            f.to_vpoly().is_some_and(|poly| integrate(&poly, p).is_zero())
        })
        .count();
    count_record(
        "projector_property",
        format!("k=0..{k_max} {}", describe(p)),
        k_max as usize + 1,
        agree,
    )
}

/// Run every check for every parameter tuple.
pub fn run_suite(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::new();
    for p in &cfg.params {
        out.push(check_braided_casimir(p));
        out.extend(verify_v2_decomposition(p));
        out.push(check_confluence(p, &mut rng, cfg.confluence_words, cfg.max_word_len));
        out.push(check_ideal_invariance(
            p,
            &mut rng,
            cfg.random_elements,
            cfg.max_word_len,
        ));
        out.push(check_hopf_relations(p, &mut rng, cfg.random_elements));
        out.push(check_associativity(p, &mut rng, cfg.random_elements));
        out.push(check_casimir_three_way(p, cfg.casimir_k_max));
        out.push(check_eigenfunctions(p, cfg.eigen_k_max, cfg.perturb_special));
        out.extend(check_moments(p, cfg.moment_k_max));
        out.push(check_integral_kills_special(p, 8));
        out.push(check_orthogonality(p, cfg.orthogonality_k_max));
        out.push(check_projector_property(p, 8));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let mut cfg = SuiteConfig::new(vec![Params::ints(2, 1, 1).unwrap()]);
        cfg.confluence_words = 30;
        cfg.random_elements = 4;
        cfg.casimir_k_max = 6;
        cfg.eigen_k_max = 5;
        for rec in run_suite(&cfg) {
            assert!(rec.pass, "{rec:?}");
        }
    }

    #[test]
    fn perturbation_is_caught() {
        let p = Params::ints(2, 1, 1).unwrap();
        assert!(check_eigenfunctions(&p, 4, false).pass);
        assert!(!check_eigenfunctions(&p, 4, true).pass);
    }
}
