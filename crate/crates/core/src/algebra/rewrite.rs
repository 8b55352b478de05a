//! Rewriting words over `u, ṽ, w` to the PBW normal form.
//!
//! Rules (`Q = q²`):
//!
//! ```text
//! ṽ u        -> Q u ṽ
//! w ṽ        -> Q ṽ w
//! w u        -> Q (Q+1)^-2 (c̃ - a(1+Q) ṽ - Q ṽ²)
//! u ṽ^j w    -> Q^-j (Q+1)^-2 (c̃ Q - a(1+Q) ṽ - ṽ²) ṽ^j      (j >= 0)
//! ```
//!
//! Irreducible words are exactly `u^i ṽ^j` and `ṽ^j w^k`. Every rule either
//! removes a `u`/`w` pair or removes an inversion, so rewriting terminates.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::accumulate;
use super::normal::{Monomial, NormalForm};
use crate::params::Params;
use crate::scalar::Scalar;

/// Internal alphabet: `u`, `ṽ` (written `t`), `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) enum Sym {
    U,
    T,
    W,
}

pub(crate) type SymWord = Vec<Sym>;
pub(crate) type Combination = BTreeMap<SymWord, Scalar>;

/// Which redex to contract when a word has several.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
    /// Uniformly random redex, from a seeded generator.
    Random(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Redex {
    TU,
    WT,
    WU,
    /// `u ṽ^j w`
    Utw(usize),
}

impl Redex {
    fn len(self) -> usize {
        match self {
            Redex::Utw(j) => j + 2,
            _ => 2,
        }
    }
}

/// Rule coefficients, precomputed per parameter set.
pub(crate) struct Rewriter {
    q2: Scalar,
    q2_inv: Scalar,
    /// `uw` as a polynomial in `ṽ` (coefficients of 1, ṽ, ṽ²).
    uw: [Scalar; 3],
    /// `wu` likewise.
    wu: [Scalar; 3],
}

impl Rewriter {
    pub(crate) fn new(p: &Params) -> Self {
        let q2 = p.q2().clone();
        let q2_inv = q2.inv().expect("q != 0");
        let one = Scalar::one();
        let s = (&q2 + &one).square().inv().expect("q² + 1 != 0 over the rationals");
        let a1q = p.a() * (&one + &q2);
        let uw = [p.c_tilde() * &q2 * &s, -(&a1q * &s), -s.clone()];
        let wu = [p.c_tilde() * &q2 * &s, -(&a1q * &q2 * &s), -(&q2 * &q2 * &s)];
        Rewriter { q2, q2_inv, uw, wu }
    }

    fn find_redexes(word: &[Sym]) -> Vec<(usize, Redex)> {
        let mut out = Vec::new();
        for i in 0..word.len().saturating_sub(1) {
            match (word[i], word[i + 1]) {
                (Sym::T, Sym::U) => out.push((i, Redex::TU)),
                (Sym::W, Sym::T) => out.push((i, Redex::WT)),
                (Sym::W, Sym::U) => out.push((i, Redex::WU)),
                (Sym::U, _) => {
                    let j = word[i + 1..].iter().take_while(|&&s| s == Sym::T).count();
                    if word.get(i + 1 + j) == Some(&Sym::W) {
                        out.push((i, Redex::Utw(j)));
                    }
                }
                _ => {}
            }
        }
        out
    }

    /// Right-hand side of the rule for `redex`, as (replacement, coefficient).
    fn contract(&self, redex: Redex) -> Vec<(SymWord, Scalar)> {
        match redex {
            Redex::TU => vec![(vec![Sym::U, Sym::T], self.q2.clone())],
            Redex::WT => vec![(vec![Sym::T, Sym::W], self.q2.clone())],
            Redex::WU => poly_words(&self.wu, 0, &Scalar::one()),
            Redex::Utw(j) => poly_words(&self.uw, j, &self.q2_inv.pow(j as i32)),
        }
    }

    /// Rewrite a combination of words until every word is irreducible.
    pub(crate) fn normalize(&self, input: Combination, strategy: Strategy) -> NormalForm {
        let mut rng = match strategy {
            Strategy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            _ => None,
        };
        let mut pending = input;
        let mut done = NormalForm::zero();
        while let Some((word, coeff)) = pending.pop_first() {
            let redexes = Self::find_redexes(&word);
            if redexes.is_empty() {
                let m = Monomial::from_syms(&word).expect("irreducible words are basis monomials");
                done.add_term(m, coeff);
                continue;
            }
            let (pos, redex) = match (&mut rng, strategy) {
                (Some(rng), _) => redexes[rng.gen_range(0..redexes.len())],
                (None, Strategy::Rightmost) => *redexes.last().unwrap(),
                _ => redexes[0],
            };
            for (replacement, c) in self.contract(redex) {
                let mut next = Vec::with_capacity(word.len() + 2);
                next.extend_from_slice(&word[..pos]);
                next.extend_from_slice(&replacement);
                next.extend_from_slice(&word[pos + redex.len()..]);
                accumulate(&mut pending, next, &coeff * &c);
            }
        }
        done
    }
}

/// `scale · (p0 + p1 ṽ + p2 ṽ²) · ṽ^shift` as a list of words.
fn poly_words(poly: &[Scalar; 3], shift: usize, scale: &Scalar) -> Vec<(SymWord, Scalar)> {
    poly.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(d, c)| (vec![Sym::T; d + shift], c * scale))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_all_redex_shapes() {
        use Sym::*;
        let r = Rewriter::find_redexes(&[T, U, T, T, W, U]);
        assert_eq!(r, vec![(0, Redex::TU), (1, Redex::Utw(2)), (4, Redex::WU)]);
        assert!(Rewriter::find_redexes(&[U, U, T, T]).is_empty());
        assert!(Rewriter::find_redexes(&[T, W, W]).is_empty());
    }
}
