//! Closed-form action of the quantum Casimir on polynomials in `ṽ`, and its
//! factorization through right/left `q²`-difference operators.
//!
//! With `Q = q²`:
//!
//! ```text
//! K ṽ^k = qβ_k [ (Q^{k+1}-1)/(Q-1) ṽ^k + a(Q+1)(Q^k-1)/(Q-1) ṽ^{k-1}
//!                - c̃Q(Q^{k-1}-1)/(Q-1) ṽ^{k-2} ],
//! qβ_k  = (Q^k-1) / (Q^{k-1}(Q-1)),
//! K     = δ⁺_Q ∘ (ṽ² + a(Q+1)ṽ - c̃Q) ∘ δ⁻_Q.
//! ```
//!
//! Negative powers of `ṽ` are zero.

use crate::error::{Error, Result};
use crate::params::Params;
use crate::scalar::Scalar;
use crate::vpoly::VPoly;

/// `qβ_k(q) = (q^{2k}-1) / (q^{2k-2}(q²-1))`
fn q_beta(k: u32, p: &Params) -> Scalar {
    let k = k as i32;
    p.q2_pow_minus_one(k) / (p.q2().pow(k - 1) * p.q2_pow_minus_one(1))
}

/// `K ṽ^k` as a polynomial in `ṽ`.
pub fn casimir_closed_form(k: u32, p: &Params) -> VPoly {
    let ki = k as i32;
    let qm1 = p.q2_pow_minus_one(1);
    let scale = q_beta(k, p);
    let mut coeffs = vec![Scalar::zero(); k as usize + 1];
    coeffs[k as usize] = p.q2_pow_minus_one(ki + 1) / &qm1;
    if k >= 1 {
        coeffs[k as usize - 1] = p.a() * (p.q2() + Scalar::one()) * p.q2_pow_minus_one(ki) / &qm1;
    }
    if k >= 2 {
        coeffs[k as usize - 2] = -(p.c_tilde() * p.q2() * p.q2_pow_minus_one(ki - 1) / &qm1);
    }
    VPoly::new(coeffs).scale(&scale)
}

/// Linear extension of [`casimir_closed_form`].
pub fn casimir_on_poly(f: &VPoly, p: &Params) -> VPoly {
    f.map_linear(|k| casimir_closed_form(k as u32, p))
}

fn check_base(base: &Scalar) -> Result<()> {
    if base.is_zero() || base.is_one() {
        Err(Error::DegenerateBase(base.to_string()))
    } else {
        Ok(())
    }
}

/// Right q-difference: `δ⁺_B z^k = z^{k-1} (B^k-1)/(B-1)`.
pub fn qdiff_plus(f: &VPoly, base: &Scalar) -> Result<VPoly> {
    check_base(base)?;
    let bm1 = base - Scalar::one();
    Ok(shifted_down(f, |k| (base.pow(k as i32) - Scalar::one()) / &bm1))
}

/// Left q-difference: `δ⁻_B z^k = z^{k-1} (B^k-1)/(B^{k-1}(B-1))`.
pub fn qdiff_minus(f: &VPoly, base: &Scalar) -> Result<VPoly> {
    check_base(base)?;
    let bm1 = base - Scalar::one();
    Ok(shifted_down(f, |k| {
        (base.pow(k as i32) - Scalar::one()) / (base.pow(k as i32 - 1) * &bm1)
    }))
}

/// `Σ_k f_k·factor(k)·z^{k-1}` for `k >= 1`; the constant term is dropped.
fn shifted_down(f: &VPoly, factor: impl Fn(usize) -> Scalar) -> VPoly {
    VPoly::new(
        f.coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * factor(k))
            .collect(),
    )
}

/// The middle factor `ṽ² + a(q²+1)ṽ - c̃q²` of the factorized Casimir.
pub fn casimir_middle_factor(p: &Params) -> VPoly {
    VPoly::new(vec![
        -(p.c_tilde() * p.q2()),
        p.a() * (p.q2() + Scalar::one()),
        Scalar::one(),
    ])
}

/// `δ⁺_{q²} ∘ M ∘ δ⁻_{q²}` applied to `f`.
pub fn casimir_via_qdiff(f: &VPoly, p: &Params) -> VPoly {
    let base = p.q2();
    let inner = qdiff_minus(f, base).expect("q² is never 0 or 1 for valid params");
    let middle = &casimir_middle_factor(p) * &inner;
    qdiff_plus(&middle, base).expect("q² is never 0 or 1 for valid params")
}
