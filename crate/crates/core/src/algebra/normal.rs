//! Elements of the quotient algebra in the PBW-style basis
//! `{u^i ṽ^j (i >= 1), ṽ^j w^k}`.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::accumulate;
use super::rewrite::Sym;
use crate::scalar::Scalar;
use crate::vpoly::VPoly;

/// Basis monomial `u^u ṽ^t w^w`; at most one of `u`, `w` is nonzero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub u: u32,
    pub t: u32,
    pub w: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { u: 0, t: 0, w: 0 };

    /// Panics if both `u` and `w` are positive.
    pub fn new(u: u32, t: u32, w: u32) -> Self {
        assert!(u == 0 || w == 0, "basis monomials never mix u and w");
        Monomial { u, t, w }
    }

    pub fn degree(&self) -> u32 {
        self.u + self.t + self.w
    }

    pub(crate) fn to_syms(self) -> Vec<Sym> {
        let mut out = Vec::with_capacity(self.degree() as usize);
        out.extend(std::iter::repeat_n(Sym::U, self.u as usize));
        out.extend(std::iter::repeat_n(Sym::T, self.t as usize));
        out.extend(std::iter::repeat_n(Sym::W, self.w as usize));
        out
    }

    /// Inverse of [`Monomial::to_syms`] for words already in normal order.
    pub(crate) fn from_syms(word: &[Sym]) -> Option<Self> {
        let u = word.iter().take_while(|&&s| s == Sym::U).count();
        let t = word[u..].iter().take_while(|&&s| s == Sym::T).count();
        let w = word[u + t..].iter().take_while(|&&s| s == Sym::W).count();
        if u + t + w != word.len() || (u > 0 && w > 0) {
            return None;
        }
        Some(Monomial {
            u: u as u32,
            t: t as u32,
            w: w as u32,
        })
    }
}

impl fmt::Display for Monomial {
    /// `u^2*t^3`, `t^1*w^2`, `1`; `t` stands for `ṽ`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = [("u", self.u), ("t", self.t), ("w", self.w)]
            .into_iter()
            .filter(|(_, e)| *e > 0)
            .map(|(s, e)| format!("{s}^{e}"))
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Reduced element of the algebra; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct NormalForm {
    terms: BTreeMap<Monomial, Scalar>,
}

impl NormalForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit() -> Self {
        Self::scalar(Scalar::one())
    }

    pub fn scalar(c: Scalar) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(Scalar::one(), m)
    }

    pub fn term(c: Scalar, m: Monomial) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    pub fn u() -> Self {
        Self::monomial(Monomial::new(1, 0, 0))
    }

    /// The shifted generator `ṽ = v - a`.
    pub fn t() -> Self {
        Self::monomial(Monomial::new(0, 1, 0))
    }

    pub fn w() -> Self {
        Self::monomial(Monomial::new(0, 0, 1))
    }

    /// `ṽ^k`
    pub fn t_pow(k: u32) -> Self {
        Self::monomial(Monomial::new(0, k, 0))
    }

    pub fn from_vpoly(f: &VPoly) -> Self {
        let mut out = Self::zero();
        for (k, c) in f.coeffs().iter().enumerate() {
            out.add_term(Monomial::new(0, k as u32, 0), c.clone());
        }
        out
    }

    /// The polynomial in `ṽ` this element equals, if it has no `u`/`w` content.
    pub fn to_vpoly(&self) -> Option<VPoly> {
        let max = self.terms.keys().map(|m| m.t).max().unwrap_or(0) as usize;
        let mut coeffs = vec![Scalar::zero(); max + 1];
        for (m, c) in &self.terms {
            if m.u > 0 || m.w > 0 {
                return None;
            }
            coeffs[m.t as usize] = c.clone();
        }
        Some(VPoly::new(coeffs))
    }

    /// The coefficient of `1` if this element is a scalar multiple of the unit.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        accumulate(&mut self.terms, m, c);
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
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
        NormalForm {
            terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect(),
        }
    }

    /// If `self = s·other` for a scalar `s`, return `s`.
    pub fn ratio_to(&self, other: &Self) -> Option<Scalar> {
        if other.is_zero() {
            return self.is_zero().then(Scalar::zero);
        }
        let (m, c) = other.terms.iter().next()?;
        let s = self.coeff(m) / c;
        (other.scale(&s) == *self).then_some(s)
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize)]
struct TermRecord<'a> {
    monomial: String,
    coeff: &'a Scalar,
}

impl Serialize for NormalForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            seq.serialize_element(&TermRecord {
                monomial: m.to_string(),
                coeff: c,
            })?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_strings() {
        assert_eq!(Monomial::new(2, 3, 0).to_string(), "u^2*t^3");
        assert_eq!(Monomial::new(0, 1, 2).to_string(), "t^1*w^2");
        assert_eq!(Monomial::ONE.to_string(), "1");
    }

    #[test]
    #[should_panic]
    fn mixed_monomial_rejected() {
        Monomial::new(1, 0, 1);
    }

    #[test]
    fn syms_roundtrip() {
        for m in [Monomial::new(2, 3, 0), Monomial::new(0, 1, 4), Monomial::ONE] {
            assert_eq!(Monomial::from_syms(&m.to_syms()), Some(m));
        }
        assert_eq!(Monomial::from_syms(&[Sym::T, Sym::U]), None);
        assert_eq!(Monomial::from_syms(&[Sym::U, Sym::W]), None);
    }

    #[test]
    fn json_shape() {
        let x = NormalForm::term(Scalar::ratio(-1, 3), Monomial::new(2, 3, 0)).add(&NormalForm::unit());
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(
            json,
            r#"[{"monomial":"1","coeff":"1"},{"monomial":"u^2*t^3","coeff":"-1/3"}]"#
        );
    }

    #[test]
    fn vpoly_roundtrip() {
        let f = VPoly::new(vec![Scalar::from_int(3), Scalar::zero(), Scalar::ratio(1, 2)]);
        assert_eq!(NormalForm::from_vpoly(&f).to_vpoly(), Some(f));
        assert_eq!(NormalForm::u().to_vpoly(), None);
    }
}
