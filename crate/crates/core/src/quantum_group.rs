//! The `U_q(sl(2))` module-algebra action and the quantum Casimir.
//!
//! Generators act on products through the coproduct
//! `Δ(E±) = E±⊗E±`, `Δ(X) = E₋⊗X + X⊗E₊`, `Δ(Y) = E₋⊗Y + Y⊗E₊`, i.e.
//! `X(ab) = E₋(a)·X(b) + X(a)·E₊(b)`. Applied letter by letter this gives
//! `X(l₁…lₙ) = Σᵢ E₋(l₁…lᵢ₋₁) X(lᵢ) E₊(lᵢ₊₁…lₙ)`.
//!
//! On the free algebra the letters are `u, v, w`; on normal forms the letters
//! are `u, ṽ, w` and `Xw = ṽ + a`, `Yu = -(ṽ + a)` produce a unit term.

use std::fmt;

use crate::algebra::rewrite::{Combination, Sym};
use crate::algebra::{accumulate, normal_to_combination, reduce_combination, FreeElement, Letter, NormalForm};
use crate::params::Params;
use crate::report::CheckRecord;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Eplus,
    Eminus,
    X,
    Y,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Generator::Eplus => "E+",
            Generator::Eminus => "E-",
            Generator::X => "X",
            Generator::Y => "Y",
        };
        f.write_str(s)
    }
}

/// Anything the quantum group acts on linearly.
pub trait ModuleElement: Clone + PartialEq + fmt::Debug {
    fn act_generator(&self, g: Generator, p: &Params) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn scale(&self, s: &Scalar) -> Self;
}

/// Apply one generator.
pub fn act<M: ModuleElement>(g: Generator, x: &M, p: &Params) -> M {
    x.act_generator(g, p)
}

/// Apply a word of generators, rightmost first: `act_word([X, Y], x) = X(Y(x))`.
pub fn act_word<M: ModuleElement>(gens: &[Generator], x: &M, p: &Params) -> M {
    gens.iter().rev().fold(x.clone(), |acc, &g| acc.act_generator(g, p))
}

/// `K = (q/2)(XY + YX) + q²(1+q²)/(2(1-q²)²)·(E₊² + E₋² - 2)`.
pub fn act_casimir<M: ModuleElement>(x: &M, p: &Params) -> M {
    use Generator::*;
    let one = Scalar::one();
    let two = Scalar::from_int(2);
    let xy = act_word(&[X, Y], x, p);
    let yx = act_word(&[Y, X], x, p);
    let first = xy.add(&yx).scale(&(p.q() / &two));
    let e2 = act_word(&[Eplus, Eplus], x, p)
        .add(&act_word(&[Eminus, Eminus], x, p))
        .add(&x.scale(&-two.clone()));
    let coeff = p.q2() * (&one + p.q2()) / (&two * (&one - p.q2()).square());
    first.add(&e2.scale(&coeff))
}

/// `λ_k = (q^{2k}-1)(q^{2k+2}-1) / (q^{2k-2}(q²-1)²)`, the value of `K` on
/// the spin-`k` module.
pub fn casimir_eigenvalue(k: u32, p: &Params) -> Scalar {
    p.lambda(k)
}

/// Letter-level data of a module: `E₊`-weight and the images under `X`, `Y`.
/// `None` in an image stands for the unit.
trait LetterAction: Copy {
    fn weight(self) -> i32;
    fn image(self, g: Generator, p: &Params) -> Vec<(Option<Self>, Scalar)>;
}

impl LetterAction for Letter {
    fn weight(self) -> i32 {
        match self {
            Letter::U => 1,
            Letter::V => 0,
            Letter::W => -1,
        }
    }

    fn image(self, g: Generator, p: &Params) -> Vec<(Option<Self>, Scalar)> {
        let qq = p.q_plus_q_inv();
        match (g, self) {
            (Generator::X, Letter::V) => vec![(Some(Letter::U), -qq)],
            (Generator::X, Letter::W) => vec![(Some(Letter::V), Scalar::one())],
            (Generator::Y, Letter::U) => vec![(Some(Letter::V), -Scalar::one())],
            (Generator::Y, Letter::V) => vec![(Some(Letter::W), qq)],
            _ => vec![],
        }
    }
}

impl LetterAction for Sym {
    fn weight(self) -> i32 {
        match self {
            Sym::U => 1,
            Sym::T => 0,
            Sym::W => -1,
        }
    }

    fn image(self, g: Generator, p: &Params) -> Vec<(Option<Self>, Scalar)> {
        let qq = p.q_plus_q_inv();
        match (g, self) {
            (Generator::X, Sym::T) => vec![(Some(Sym::U), -qq)],
            (Generator::X, Sym::W) => vec![(Some(Sym::T), Scalar::one()), (None, p.a().clone())],
            (Generator::Y, Sym::U) => vec![(Some(Sym::T), -Scalar::one()), (None, -p.a())],
            (Generator::Y, Sym::T) => vec![(Some(Sym::W), qq)],
            _ => vec![],
        }
    }
}

/// Action of `g` on a single word, as a list of (word, coefficient).
fn act_on_word<L: LetterAction>(g: Generator, word: &[L], p: &Params) -> Vec<(Vec<L>, Scalar)> {
    let weights: Vec<i32> = word.iter().map(|l| l.weight()).collect();
    let total: i32 = weights.iter().sum();
    match g {
        Generator::Eplus => vec![(word.to_vec(), p.q_pow(total))],
        Generator::Eminus => vec![(word.to_vec(), p.q_pow(-total))],
        Generator::X | Generator::Y => {
            let mut out = Vec::new();
            let mut before = 0;
            for (i, &letter) in word.iter().enumerate() {
                let after = total - before - weights[i];
                let images = letter.image(g, p);
                if !images.is_empty() {
                    let factor = p.q_pow(after - before);
                    for (img, c) in images {
                        let mut next = Vec::with_capacity(word.len());
                        next.extend_from_slice(&word[..i]);
                        next.extend(img);
                        next.extend_from_slice(&word[i + 1..]);
                        out.push((next, &factor * &c));
                    }
                }
                before += weights[i];
            }
            out
        }
    }
}

impl ModuleElement for FreeElement {
    fn act_generator(&self, g: Generator, p: &Params) -> Self {
        let mut out = FreeElement::zero();
        for (word, c) in self.terms() {
            for (w, d) in act_on_word(g, word, p) {
                out.add_term(w, c * &d);
            }
        }
        out
    }

    fn add(&self, other: &Self) -> Self {
        FreeElement::add(self, other)
    }

    fn scale(&self, s: &Scalar) -> Self {
        FreeElement::scale(self, s)
    }
}

impl ModuleElement for NormalForm {
    /// Act on each basis word, then reduce.
    fn act_generator(&self, g: Generator, p: &Params) -> Self {
        match g {
            // E± preserve every monomial; skip the rewriter.
            Generator::Eplus | Generator::Eminus => {
                let sign = if g == Generator::Eplus { 1 } else { -1 };
                let mut out = NormalForm::zero();
                for (m, c) in self.terms() {
                    out.add_term(*m, c * p.q_pow(sign * (m.u as i32 - m.w as i32)));
                }
                out
            }
            Generator::X | Generator::Y => {
                let mut words = Combination::new();
                for (word, c) in normal_to_combination(self) {
                    for (w, d) in act_on_word(g, &word, p) {
                        accumulate(&mut words, w, &c * &d);
                    }
                }
                reduce_combination(words, p)
            }
        }
    }

    fn add(&self, other: &Self) -> Self {
        NormalForm::add(self, other)
    }

    fn scale(&self, s: &Scalar) -> Self {
        NormalForm::scale(self, s)
    }
}

/// Spanning vectors of the spin 0, 1, 2 summands of `V⊗V`, as
/// `(spin, label, vector)`.
pub fn v2_spanning_vectors(p: &Params) -> Vec<(u32, &'static str, FreeElement)> {
    let q = p.q();
    let q2 = p.q2();
    let one = Scalar::one();
    let w = |s: &str| -> FreeElement { s.parse().expect("static word") };
    let q2p1 = q2 + &one;
    vec![
        (
            0,
            "(q^2+1)uw + vv + (q^2+1)q^-2 wu",
            w("uw").scale(&q2p1).add(&w("vv")).add(&w("wu").scale(&(&q2p1 / q2))),
        ),
        (1, "q^2 uv - vu", w("uv").scale(q2).sub(&w("vu"))),
        (
            1,
            "(q^2+1)(uw - wu) + (1-q^2)vv",
            w("uw").sub(&w("wu")).scale(&q2p1).add(&w("vv").scale(&(&one - q2))),
        ),
        (1, "-q^2 vw + wv", w("wv").sub(&w("vw").scale(q2))),
        (2, "uu", w("uu")),
        (2, "uv + q^2 vu", w("uv").add(&w("vu").scale(q2))),
        (
            2,
            "q^-1 uw - q vv + q^3 wu",
            w("uw")
                .scale(&p.q_inv())
                .sub(&w("vv").scale(q))
                .add(&w("wu").scale(&q.pow(3))),
        ),
        (2, "vw + q^2 wv", w("vw").add(&w("wv").scale(q2))),
        (2, "ww", w("ww")),
    ]
}

/// Apply `K` to each spanning vector of `V⊗V` (unreduced tensor words) and
/// check it is an eigenvector with eigenvalue `λ_spin`.
pub fn verify_v2_decomposition(p: &Params) -> Vec<CheckRecord> {
    v2_spanning_vectors(p)
        .into_iter()
        .map(|(spin, label, vec)| {
            let expected = casimir_eigenvalue(spin, p);
            let image = act_casimir(&vec, p);
            let got = free_ratio(&image, &vec);
            let pass = got.as_ref() == Some(&expected);
            CheckRecord::new(
                format!("v2_spin{spin}_eigenvector"),
                label,
                &expected,
                got.map_or_else(|| "not an eigenvector".to_string(), |s| s.to_string()),
                pass,
            )
        })
        .collect()
}

/// `s` with `x = s·y`, if it exists.
fn free_ratio(x: &FreeElement, y: &FreeElement) -> Option<Scalar> {
    let (word, c) = y.terms().next()?;
    let s = x.coeff(word) / c;
    (y.scale(&s) == *x).then_some(s)
}
