//! The `(ħ, q)`-special polynomials: monic Casimir eigenpolynomials in `ṽ`.
//!
//! Writing `K ṽ^k = a_k ṽ^k + b_k ṽ^{k-1} + c_k ṽ^{k-2}`, the polynomial
//! `P_k = Σ_j A_j ṽ^{k-j}` with `A_0 = 1` satisfies `K P_k = a_k P_k` iff
//!
//! ```text
//! A_1 = b_k / (a_k - a_{k-1})
//! A_j = (A_{j-2} c_{k-j+2} + A_{j-1} b_{k-j+1}) / (a_k - a_{k-j})
//! ```
//!
//! The same recurrence with the `q -> 1`, `ħ = 0` rows
//! `a_k = k(k+1)`, `b_k = 0`, `c_k = -c·k(k-1)` produces monic Legendre
//! polynomials on the hyperboloid, used as the classical oracle.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::params::Params;
use crate::scalar::Scalar;
use crate::vpoly::VPoly;

/// Coefficients of `K ṽ^k` on `ṽ^k, ṽ^{k-1}, ṽ^{k-2}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CasimirRow {
    pub k: u32,
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
}

pub fn casimir_row(k: u32, p: &Params) -> CasimirRow {
    let ki = k as i32;
    let qm1_sq = p.q2_pow_minus_one(1).square();
    let qk = p.q2_pow_minus_one(ki);
    let a = p.lambda(k);
    let b = p.a() * (p.q2() + Scalar::one()) * qk.square() / (p.q2().pow(ki - 1) * &qm1_sq);
    let c = -(p.c_tilde() * &qk * p.q2_pow_minus_one(ki - 1) / (p.q2().pow(ki - 2) * &qm1_sq));
    CasimirRow { k, a, b, c }
}

/// Monic Casimir eigenpolynomial of degree `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialPolynomial {
    pub k: u32,
    poly: VPoly,
}

impl SpecialPolynomial {
    /// As a polynomial in `ṽ` (index = degree).
    pub fn poly(&self) -> &VPoly {
        &self.poly
    }

    /// `A_j`, the coefficient of `ṽ^{k-j}`, for `j = 0..=k`.
    pub fn recurrence_coeffs(&self) -> Vec<Scalar> {
        (0..=self.k as usize)
            .map(|j| self.poly.coeff(self.k as usize - j))
            .collect()
    }

    /// CSV rows `(k, j, A_j)`.
    pub fn csv_rows(&self) -> Vec<(u32, u32, Scalar)> {
        self.recurrence_coeffs()
            .into_iter()
            .enumerate()
            .map(|(j, a)| (self.k, j as u32, a))
            .collect()
    }
}

impl Serialize for SpecialPolynomial {
    /// `{"k": k, "coeffs": [A_0, ..., A_k]}`
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SpecialPolynomial", 2)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("coeffs", &self.recurrence_coeffs())?;
        st.end()
    }
}

/// Run the monic eigenpolynomial recurrence for rows `(a, b, c)`.
/// Returns `A_0..=A_k`, or the first `(k, j)` whose denominator vanishes.
fn eigen_recurrence(
    k: u32,
    row: impl Fn(u32) -> (Scalar, Scalar, Scalar),
) -> std::result::Result<Vec<Scalar>, (u32, u32)> {
    let rows: Vec<_> = (0..=k).map(&row).collect();
    let a_k = &rows[k as usize].0;
    let mut coeffs = vec![Scalar::one()];
    for j in 1..=k {
        let denom = a_k - &rows[(k - j) as usize].0;
        if denom.is_zero() {
            return Err((k, j));
        }
        let mut num = &coeffs[j as usize - 1] * &rows[(k - j + 1) as usize].1;
        if j >= 2 {
            num += &coeffs[j as usize - 2] * &rows[(k - j + 2) as usize].2;
        }
        coeffs.push(num / denom);
    }
    Ok(coeffs)
}

fn from_recurrence_coeffs(k: u32, coeffs: Vec<Scalar>) -> VPoly {
    let poly = VPoly::new(coeffs.into_iter().rev().collect());
    debug_assert_eq!(poly.degree(), Some(k as usize));
    poly
}

/// `P_k` for the given parameters; fails with `NonGenericQ` when a
/// recurrence denominator `a_k - a_{k-j}` vanishes.
pub fn special_polynomial(k: u32, p: &Params) -> Result<SpecialPolynomial> {
    let coeffs = eigen_recurrence(k, |i| {
        let r = casimir_row(i, p);
        (r.a, r.b, r.c)
    })
    .map_err(|(k, j)| Error::NonGenericQ { k, j })?;
    Ok(SpecialPolynomial {
        k,
        poly: from_recurrence_coeffs(k, coeffs),
    })
}

/// Monic eigenpolynomial of `f ↦ d/dz[(z² - c)·f']` with eigenvalue `k(k+1)`.
pub fn monic_legendre(k: u32, c_val: &Scalar) -> VPoly {
    let coeffs = eigen_recurrence(k, |i| {
        let i = i as i64;
        (
            Scalar::from_int(i * (i + 1)),
            Scalar::zero(),
            -(c_val * Scalar::from_int(i * (i - 1))),
        )
    })
    .expect("classical denominators k(k+1) - m(m+1) are positive");
    from_recurrence_coeffs(k, coeffs)
}

/// Coefficientwise comparison of `P_k` at `q = 1 + eps`, `ħ = 0` against the
/// monic Legendre oracle, repeated at `eps/2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LimitReport {
    pub k: u32,
    pub c: Scalar,
    pub eps: Scalar,
    /// `|A_j(q) - A_j(legendre)|` for `j = 0..=k` at `eps`.
    pub diffs: Vec<Scalar>,
    pub max_diff: Scalar,
    pub max_diff_half_eps: Scalar,
    /// `max_diff_half_eps < max_diff`, or both are zero.
    pub converging: bool,
}

fn coeff_diffs(k: u32, c: &Scalar, eps: &Scalar) -> Result<Vec<Scalar>> {
    let p = Params::new(Scalar::one() + eps, Scalar::zero(), c.clone())?;
    let pk = special_polynomial(k, &p)?;
    let legendre = monic_legendre(k, c);
    Ok((0..=k as usize)
        .map(|d| (pk.poly().coeff(d) - legendre.coeff(d)).abs())
        .rev()
        .collect())
}

pub fn classical_limit_report(k: u32, c: &Scalar, eps: &Scalar) -> Result<LimitReport> {
    let diffs = coeff_diffs(k, c, eps)?;
    let half = coeff_diffs(k, c, &(eps / Scalar::from_int(2)))?;
    let max_diff = diffs.iter().max().cloned().unwrap_or_default();
    let max_diff_half_eps = half.into_iter().max().unwrap_or_default();
    let converging = max_diff_half_eps < max_diff || (max_diff.is_zero() && max_diff_half_eps.is_zero());
    Ok(LimitReport {
        k,
        c: c.clone(),
        eps: eps.clone(),
        diffs,
        max_diff,
        max_diff_half_eps,
        converging,
    })
}
