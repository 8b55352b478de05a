//! The quantum hyperboloid algebra as a rewriting system on words in
//! `u, v, w`.
//!
//! The free side ([`FreeElement`]) lives in the tensor algebra on the letters
//! `u, v, w`; [`reduce`] maps it onto the quotient, whose elements are kept as
//! [`NormalForm`]s over the shifted variable `ṽ = v - a`.

mod normal;
pub(crate) mod rewrite;
mod word;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

pub use normal::{Monomial, NormalForm};
pub use rewrite::Strategy;
pub use word::{FreeElement, FreeWord, Letter};

use rewrite::{Combination, Rewriter, Sym, SymWord};

use crate::error::{Error, Result};
use crate::params::Params;
use crate::scalar::Scalar;

pub(crate) fn accumulate<K: Ord>(map: &mut BTreeMap<K, Scalar>, key: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Substitute `v = ṽ + a` in every word.
fn to_sym_combination(x: &FreeElement, p: &Params) -> Combination {
    let mut out = Combination::new();
    for (word, coeff) in x.terms() {
        let mut partial: Combination = BTreeMap::from([(SymWord::new(), coeff.clone())]);
        for letter in word {
            let mut next = Combination::new();
            for (w, c) in partial {
                match letter {
                    Letter::U | Letter::W => {
                        let mut w = w;
                        w.push(if *letter == Letter::U { Sym::U } else { Sym::W });
                        accumulate(&mut next, w, c);
                    }
                    Letter::V => {
                        if !p.a().is_zero() {
                            accumulate(&mut next, w.clone(), &c * p.a());
                        }
                        let mut w = w;
                        w.push(Sym::T);
                        accumulate(&mut next, w, c);
                    }
                }
            }
            partial = next;
        }
        for (w, c) in partial {
            accumulate(&mut out, w, c);
        }
    }
    out
}

pub(crate) fn normal_to_combination(x: &NormalForm) -> Combination {
    x.terms().map(|(m, c)| (m.to_syms(), c.clone())).collect()
}

/// Normal form of a free element, contracting leftmost redexes first.
pub fn reduce(x: &FreeElement, p: &Params) -> NormalForm {
    reduce_with(x, p, Strategy::Leftmost)
}

/// Normal form of a free element under an explicit redex-selection strategy.
/// The result does not depend on the strategy.
pub fn reduce_with(x: &FreeElement, p: &Params, strategy: Strategy) -> NormalForm {
    Rewriter::new(p).normalize(to_sym_combination(x, p), strategy)
}

pub(crate) fn reduce_combination(x: Combination, p: &Params) -> NormalForm {
    Rewriter::new(p).normalize(x, Strategy::Leftmost)
}

/// Product in the quotient algebra.
pub fn multiply(x: &NormalForm, y: &NormalForm, p: &Params) -> NormalForm {
    let mut words = Combination::new();
    for (m1, c1) in x.terms() {
        for (m2, c2) in y.terms() {
            let mut w = m1.to_syms();
            w.extend(m2.to_syms());
            accumulate(&mut words, w, c1 * c2);
        }
    }
    reduce_combination(words, p)
}

/// The braided Casimir `(q²+1)uw + vv + (q²+1)q⁻² wu` as a free element.
pub fn braided_casimir_element(p: &Params) -> FreeElement {
    use Letter::*;
    let q2p1 = p.q2() + Scalar::one();
    FreeElement::term(q2p1.clone(), vec![U, W])
        .add(&FreeElement::word(vec![V, V]))
        .add(&FreeElement::term(q2p1 / p.q2(), vec![W, U]))
}

/// Reduce the braided Casimir; it must come out as the scalar `c`.
pub fn braided_casimir_value(p: &Params) -> Result<Scalar> {
    let nf = reduce(&braided_casimir_element(p), p);
    nf.as_scalar().ok_or_else(|| Error::NotScalar(nf.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params() -> Params {
        Params::ints(2, 1, 1).unwrap()
    }

    fn word(s: &str) -> FreeElement {
        s.parse().unwrap()
    }

    #[test]
    fn vu_relation() {
        let p = params();
        // vu -> q² uv + ħ u
        let expected = reduce(&word("uv"), &p)
            .scale(p.q2())
            .add(&NormalForm::u().scale(p.hbar()));
        assert_eq!(reduce(&word("vu"), &p), expected);
    }

    #[test]
    fn uw_matches_closed_formula() {
        let p = params();
        let q2 = p.q2();
        let s = (q2 + Scalar::one()).square().inv().unwrap();
        let expected = NormalForm::scalar(p.c_tilde() * q2 * &s)
            .add(&NormalForm::t().scale(&-(p.a() * (Scalar::one() + q2) * &s)))
            .add(&NormalForm::t_pow(2).scale(&-s));
        assert_eq!(reduce(&word("uw"), &p), expected);
    }

    #[test]
    fn wu_matches_v_basis_formula() {
        // wu = q²(q²+1)⁻² (c - ħv - q²v²), with v = ṽ + a
        let p = Params::new(Scalar::ratio(3, 2), Scalar::ratio(-2, 5), Scalar::from_int(3)).unwrap();
        let q2 = p.q2();
        let s = q2 / (q2 + Scalar::one()).square();
        let rhs = FreeElement::term(p.c().clone(), vec![])
            .add(&FreeElement::term(-p.hbar(), vec![Letter::V]))
            .add(&FreeElement::term(-q2.clone(), vec![Letter::V, Letter::V]))
            .scale(&s);
        assert_eq!(reduce(&word("wu"), &p), reduce(&rhs, &p));
    }

    #[test]
    fn unit_and_empty_word() {
        let p = params();
        assert_eq!(reduce(&FreeElement::unit(), &p), NormalForm::unit());
        let x = reduce(&word("uvvw"), &p);
        assert_eq!(multiply(&NormalForm::unit(), &x, &p), x);
        assert_eq!(multiply(&x, &NormalForm::unit(), &p), x);
    }

    #[test]
    fn tilde_commutation() {
        let p = params();
        let tu = multiply(&NormalForm::t(), &NormalForm::u(), &p);
        assert_eq!(tu, NormalForm::monomial(Monomial::new(1, 1, 0)).scale(p.q2()));
        let ut = multiply(&NormalForm::u(), &NormalForm::t(), &p);
        assert_eq!(ut, tu.scale(&p.q2().inv().unwrap()));
        let tw = multiply(&NormalForm::t(), &NormalForm::w(), &p);
        let wt = multiply(&NormalForm::w(), &NormalForm::t(), &p);
        assert_eq!(tw, wt.scale(&p.q2().inv().unwrap()));
    }

    #[test]
    fn braided_casimir_is_c() {
        assert_eq!(braided_casimir_value(&params()).unwrap(), Scalar::one());
        assert_eq!(
            braided_casimir_value(&Params::ints(2, 0, 0).unwrap()).unwrap(),
            Scalar::zero()
        );
        assert_eq!(
            braided_casimir_value(&Params::ints(3, 2, 7).unwrap()).unwrap(),
            Scalar::from_int(7)
        );
    }

    #[test]
    fn remaining_defining_relations_vanish() {
        let p = Params::new(Scalar::ratio(-5, 3), Scalar::ratio(7, 4), Scalar::ratio(2, 9)).unwrap();
        let q2 = p.q2().clone();
        let one = Scalar::one();
        // (q²+1)(uw - wu) + (1-q²)vv - ħv
        let r2 = word("uw")
            .sub(&word("wu"))
            .scale(&(&q2 + &one))
            .add(&word("vv").scale(&(&one - &q2)))
            .sub(&word("v").scale(p.hbar()));
        assert!(reduce(&r2, &p).is_zero());
        // -q² vw + wv - ħw
        let r3 = word("wv").sub(&word("vw").scale(&q2)).sub(&word("w").scale(p.hbar()));
        assert!(reduce(&r3, &p).is_zero());
    }

    #[test]
    fn strategies_agree_on_a_long_word() {
        let p = params();
        let x = word("wvuwwvuu");
        let left = reduce_with(&x, &p, Strategy::Leftmost);
        assert_eq!(left, reduce_with(&x, &p, Strategy::Rightmost));
        for seed in 0..5 {
            assert_eq!(left, reduce_with(&x, &p, Strategy::Random(seed)));
        }
    }
}
