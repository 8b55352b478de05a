//! Unreduced elements of the tensor algebra on `u, v, w`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::accumulate;
use crate::error::Error;
use crate::scalar::Scalar;

/// Basis letter of the three-dimensional module `V`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    U,
    V,
    W,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::U => 'u',
            Letter::V => 'v',
            Letter::W => 'w',
        }
    }
}

/// Ordered tensor word; the empty word is the unit.
pub type FreeWord = Vec<Letter>;

/// Formal linear combination of tensor words with exact coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FreeElement {
    terms: BTreeMap<FreeWord, Scalar>,
}

impl FreeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit() -> Self {
        Self::word(Vec::new())
    }

    pub fn word(w: FreeWord) -> Self {
        Self::term(Scalar::one(), w)
    }

    pub fn term(c: Scalar, w: FreeWord) -> Self {
        let mut out = Self::zero();
        out.add_term(w, c);
        out
    }

    pub fn letter(l: Letter) -> Self {
        Self::word(vec![l])
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: FreeWord, c: Scalar) {
        accumulate(&mut self.terms, w, c);
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        FreeElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * s)).collect(),
        }
    }

    /// Concatenation product in the tensor algebra.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, c1 * c2);
            }
        }
        out
    }

    /// Coefficient of `word` (zero if absent).
    pub fn coeff(&self, word: &[Letter]) -> Scalar {
        self.terms.get(word).cloned().unwrap_or_default()
    }
}

impl fmt::Display for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let word: String = if w.is_empty() {
                "1".into()
            } else {
                w.iter().map(|l| l.as_char()).collect()
            };
            write!(f, "({c})*{word}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for FreeElement {
    type Err = Error;

    /// Parse a single word such as `"uvw"`; `"1"` or `""` is the unit.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Self::unit());
        }
        let word = s
            .chars()
            .map(|ch| match ch {
                'u' => Ok(Letter::U),
                'v' => Ok(Letter::V),
                'w' => Ok(Letter::W),
                _ => Err(Error::Parse(format!("unknown letter {ch:?} in word {s:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::word(word))
    }
}
