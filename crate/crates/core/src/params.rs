//! The parameter context `(q, ħ, c)` shared by every other module.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Specialized parameters of the quantum hyperboloid together with the
/// derived shift `a = ħ/(1 - q²)` and the shifted orbit label `c̃ = c - a²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    q: Scalar,
    hbar: Scalar,
    c: Scalar,
    a: Scalar,
    c_tilde: Scalar,
    #[serde(skip)]
    q2: Scalar,
}

/// Build a parameter tuple, rejecting `q = 0` and `q² = 1`.
pub fn make_params(q: Scalar, hbar: Scalar, c: Scalar) -> Result<Params> {
    Params::new(q, hbar, c)
}

impl Params {
    pub fn new(q: Scalar, hbar: Scalar, c: Scalar) -> Result<Self> {
        let q2 = q.square();
        if q.is_zero() || q2.is_one() {
            return Err(Error::DegenerateQ(q.to_string()));
        }
        let a = &hbar / (Scalar::one() - &q2);
        let c_tilde = &c - a.square();
        Ok(Params {
            q,
            hbar,
            c,
            a,
            c_tilde,
            q2,
        })
    }

    /// Shorthand for tests and examples: `Params::ints(2, 1, 1)`.
    pub fn ints(q: i64, hbar: i64, c: i64) -> Result<Self> {
        Self::new(q.into(), hbar.into(), c.into())
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }

    pub fn hbar(&self) -> &Scalar {
        &self.hbar
    }

    pub fn c(&self) -> &Scalar {
        &self.c
    }

    pub fn a(&self) -> &Scalar {
        &self.a
    }

    pub fn c_tilde(&self) -> &Scalar {
        &self.c_tilde
    }

    /// `q²`
    pub fn q2(&self) -> &Scalar {
        &self.q2
    }

    pub fn q_inv(&self) -> Scalar {
        self.q.inv().expect("q != 0 by construction")
    }

    /// `q^n` for any integer `n`.
    pub fn q_pow(&self, n: i32) -> Scalar {
        self.q.pow(n)
    }

    /// `q^(2n) - 1`
    pub fn q2_pow_minus_one(&self, n: i32) -> Scalar {
        self.q2.pow(n) - Scalar::one()
    }

    /// `q + q⁻¹`
    pub fn q_plus_q_inv(&self) -> Scalar {
        &self.q + self.q_inv()
    }

    /// Casimir eigenvalue on the spin-`k` module,
    /// `(q^{2k}-1)(q^{2k+2}-1) / (q^{2k-2}(q²-1)²)`.
    pub fn lambda(&self, k: u32) -> Scalar {
        let k = k as i32;
        let num = self.q2_pow_minus_one(k) * self.q2_pow_minus_one(k + 1);
        let den = self.q2.pow(k - 1) * self.q2_pow_minus_one(1).square();
        num / den
    }

    /// Same `q` with a different `ħ`; `c` is kept.
    pub fn with_hbar(&self, hbar: Scalar) -> Self {
        Self::new(self.q.clone(), hbar, self.c.clone()).expect("q already validated")
    }
}

/// Result of scanning the recurrence and moment denominators up to `k_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenericityReport {
    pub k_max: u32,
    /// Pairs `(k, j)`, `1 <= j <= k`, with `a_k - a_(k-j) = 0`.
    pub violations: Vec<(u32, u32)>,
    /// Values `k` with `q^(2k+2) = 1`.
    pub moment_violations: Vec<u32>,
}

impl GenericityReport {
    pub fn is_generic(&self) -> bool {
        self.violations.is_empty() && self.moment_violations.is_empty()
    }
}

/// Evaluate every denominator the special-polynomial recurrence and the
/// moment table will divide by, up to degree `k_max`.
pub fn genericity_check(p: &Params, k_max: u32) -> GenericityReport {
    let lambdas: Vec<Scalar> = (0..=k_max).map(|k| p.lambda(k)).collect();
    let mut violations = Vec::new();
    for k in 1..=k_max {
        for j in 1..=k {
            if lambdas[k as usize] == lambdas[(k - j) as usize] {
                violations.push((k, j));
            }
        }
    }
    let moment_violations = (0..=k_max)
        .filter(|&k| p.q2_pow_minus_one(k as i32 + 1).is_zero())
        .collect();
    GenericityReport {
        k_max,
        violations,
        moment_violations,
    }
}
