//! The invariant `(ħ, q)`-integral on polynomials in `ṽ`.
//!
//! Moments `μ_k = Int(ṽ^k)` are driven by `Int(Y(u ṽ^k)) = 0`, which in terms
//! of `γ_k = μ_k (q^{2k+2} - 1)` reads
//!
//! ```text
//! γ_{k+1} + a(1+q²) γ_k - q² c̃ γ_{k-1} = 0.
//! ```
//!
//! Its characteristic roots `x₁, x₂` solve `x² + a(1+q²)x - q²c̃ = 0`, so
//! `x₁ + x₂ = -a(1+q²)` and `x₁x₂ = -q²c̃`. The exact path never extracts
//! the roots: closed forms go through complete homogeneous symmetric
//! polynomials in `(x₁, x₂)`, and the Jackson-type series evaluates `f` at the
//! nodes `x_i q^{2m}` inside `Q[r]/(r² - D)`, `D` the discriminant.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::params::Params;
use crate::scalar::Scalar;
use crate::special::special_polynomial;
use crate::vpoly::VPoly;

/// How the two free initial values of the moment recurrence are fixed.
/// Both choices set `Int(1) = 1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Normalization {
    /// `Int(v) = 0`, i.e. `μ₁ = -a`. This is the projector onto the trivial
    /// component: it also satisfies `Int(Yu) = 0`, and kills every `P_k`,
    /// `k >= 1`.
    #[default]
    Projector,
    /// `Int(ṽ) = 0`, i.e. `μ₁ = 0`. Agrees with [`Normalization::Projector`]
    /// when `ħ = 0`.
    TildeOrigin,
}

impl Normalization {
    /// `(γ₀, γ₁)`
    fn initial_gammas(self, p: &Params) -> (Scalar, Scalar) {
        let gamma0 = p.q2_pow_minus_one(1);
        let gamma1 = match self {
            Normalization::Projector => -(p.a() * p.q2_pow_minus_one(2)),
            Normalization::TildeOrigin => Scalar::zero(),
        };
        (gamma0, gamma1)
    }
}

impl std::str::FromStr for Normalization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "projector" => Ok(Normalization::Projector),
            "tilde" | "tilde-origin" => Ok(Normalization::TildeOrigin),
            _ => Err(Error::Parse(format!(
                "unknown normalization {s:?} (expected projector|tilde)"
            ))),
        }
    }
}

/// Roots of `x² + a(1+q²)x - q²c̃`, through their symmetric functions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootPair {
    pub sum: Scalar,
    pub product: Scalar,
    pub discriminant: Scalar,
    /// `(x₁, x₂)` with `x₁ >= x₂` when the discriminant is a rational square.
    pub rational_roots: Option<(Scalar, Scalar)>,
}

impl RootPair {
    pub fn new(p: &Params) -> Self {
        let sum = -(p.a() * (p.q2() + Scalar::one()));
        let product = -(p.q2() * p.c_tilde());
        let discriminant = sum.square() - Scalar::from_int(4) * &product;
        let two = Scalar::from_int(2);
        let rational_roots = discriminant
            .sqrt_exact()
            .map(|r| ((&sum + &r) / &two, (&sum - &r) / &two));
        RootPair {
            sum,
            product,
            discriminant,
            rational_roots,
        }
    }

    pub fn is_confluent(&self) -> bool {
        self.discriminant.is_zero()
    }

    /// `h_j(x₁, x₂) = Σ_{i=0}^{j} x₁^i x₂^{j-i}`, from
    /// `h_j = Σ_m (-1)^m C(j-m, m) s^{j-2m} p^m`.
    pub fn complete_homogeneous(&self, j: u32) -> Scalar {
        let mut total = Scalar::zero();
        for m in 0..=j / 2 {
            let term = Scalar::from_big(binomial(j - m, m), 1.into())
                * self.sum.pow((j - 2 * m) as i32)
                * self.product.pow(m as i32);
            if m % 2 == 0 {
                total += term;
            } else {
                total -= &term;
            }
        }
        total
    }
}

fn binomial(n: u32, k: u32) -> num_bigint::BigInt {
    let mut acc = num_bigint::BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `μ_0..=μ_{k_max}` together with `γ_k = μ_k (q^{2k+2} - 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MomentTable {
    pub k_max: u32,
    pub normalization: Normalization,
    pub mu: Vec<Scalar>,
    pub gamma: Vec<Scalar>,
}

impl MomentTable {
    /// CSV rows `(k, mu_k, gamma_k)`.
    pub fn csv_rows(&self) -> impl Iterator<Item = (u32, &Scalar, &Scalar)> {
        (0..=self.k_max).map(move |k| (k, &self.mu[k as usize], &self.gamma[k as usize]))
    }
}

/// Moments by the three-term recurrence.
pub fn moments_recurrence(k_max: u32, p: &Params, norm: Normalization) -> MomentTable {
    let (g0, g1) = norm.initial_gammas(p);
    let s = -(p.a() * (p.q2() + Scalar::one()));
    let qc = p.q2() * p.c_tilde();
    let mut gamma = vec![g0, g1];
    for k in 1..k_max as usize {
        let next = &s * &gamma[k] + &qc * &gamma[k - 1];
        gamma.push(next);
    }
    gamma.truncate(k_max as usize + 1);
    let mu = gamma
        .iter()
        .enumerate()
        .map(|(k, g)| g / p.q2_pow_minus_one(k as i32 + 1))
        .collect();
    MomentTable {
        k_max,
        normalization: norm,
        mu,
        gamma,
    }
}

/// Closed form `μ_k = (q^{2k+2}-1)⁻¹ [γ₀ (x₂x₁^k - x₁x₂^k)/(x₂-x₁) + γ₁ (x₁^k - x₂^k)/(x₁-x₂)]`,
/// using `(x₂x₁^k - x₁x₂^k)/(x₂-x₁) = -x₁x₂ h_{k-2}` and
/// `(x₁^k - x₂^k)/(x₁-x₂) = h_{k-1}`. With [`Normalization::TildeOrigin`]
/// (`γ₁ = 0`) this is `(q²-1)(q^{2k+2}-1)⁻¹(x₂x₁^k - x₁x₂^k)/(x₂-x₁)`.
pub fn moment_closed_form(k: u32, p: &Params, norm: Normalization) -> Result<Scalar> {
    let roots = RootPair::new(p);
    if roots.is_confluent() {
        return Err(Error::ConfluentRoots);
    }
    let (g0, g1) = norm.initial_gammas(p);
    let gamma = match k {
        0 => g0,
        _ => {
            let first = if k >= 2 {
                -(&roots.product * roots.complete_homogeneous(k - 2))
            } else {
                Scalar::zero()
            };
            g0 * first + g1 * roots.complete_homogeneous(k - 1)
        }
    };
    Ok(gamma / p.q2_pow_minus_one(k as i32 + 1))
}

/// `Int(f)` under the given normalization.
pub fn integrate_with(f: &VPoly, p: &Params, norm: Normalization) -> Scalar {
    let Some(deg) = f.degree() else {
        return Scalar::zero();
    };
    let table = moments_recurrence(deg as u32, p, norm);
    f.coeffs().iter().zip(&table.mu).map(|(c, m)| c * m).sum()
}

/// `Int(f)` with the projector normalization.
pub fn integrate(f: &VPoly, p: &Params) -> Scalar {
    integrate_with(f, p, Normalization::Projector)
}

/// Element `re + im·r` of `Q[r]/(r² - D)`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Quad {
    re: Scalar,
    im: Scalar,
}

impl Quad {
    fn real(re: Scalar) -> Self {
        Quad { re, im: Scalar::zero() }
    }

    fn sub(&self, o: &Quad) -> Quad {
        Quad {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    fn mul(&self, o: &Quad, d: &Scalar) -> Quad {
        Quad {
            re: &self.re * &o.re + d * &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn scale(&self, s: &Scalar) -> Quad {
        Quad {
            re: &self.re * s,
            im: &self.im * s,
        }
    }

    /// Divide by `r`: `(α + βr)/r = β + (α/D) r`.
    fn div_root(&self, d: &Scalar) -> Quad {
        Quad {
            re: self.im.clone(),
            im: &self.re / d,
        }
    }
}

/// Partial sum of the Jackson-type series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacksonResult {
    /// Exact value of the truncated series.
    pub value: Scalar,
    pub terms_used: u32,
    /// Whether the last term fell below the tolerance before `m_max`.
    pub converged: bool,
}

impl Serialize for JacksonResult {
    /// `{"value": "<decimal>", "terms_used": n, "converged": bool}`
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("JacksonResult", 3)?;
        st.serialize_field("value", &self.value.to_decimal_string(40))?;
        st.serialize_field("terms_used", &self.terms_used)?;
        st.serialize_field("converged", &self.converged)?;
        st.end()
    }
}

pub const DEFAULT_JACKSON_M_MAX: u32 = 2000;

pub fn default_jackson_tol() -> Scalar {
    Scalar::pow10_neg(15)
}

/// `Int(f) ≈ -Σ_{m>=0} (A f(x₁q^{2m}) + B f(x₂q^{2m})) q^{2m}` where
/// `A + B = γ₀` and `A x₁ + B x₂ = γ₁`. For [`Normalization::TildeOrigin`]
/// this is `(1-q²)(x₂-x₁)⁻¹ Σ_m (x₂ f(x₁q^{2m}) - x₁ f(x₂q^{2m})) q^{2m}`.
///
/// Stops after the first term with magnitude below `tol`, or after `m_max`
/// terms.
pub fn jackson_series(f: &VPoly, p: &Params, norm: Normalization, tol: &Scalar, m_max: u32) -> Result<JacksonResult> {
    if p.q().abs() >= Scalar::one() {
        return Err(Error::NonConvergent(p.q().to_string()));
    }
    let roots = RootPair::new(p);
    if roots.is_confluent() {
        return Err(Error::ConfluentRoots);
    }
    let d = &roots.discriminant;
    let half = Scalar::ratio(1, 2);
    // x₁ = (s + r)/2, x₂ = (s - r)/2
    let x1 = Quad {
        re: &roots.sum * &half,
        im: half.clone(),
    };
    let (g0, g1) = norm.initial_gammas(p);
    // A = (γ₁ - γ₀x₂)/(x₁ - x₂) with x₁ - x₂ = r. Conjugation r -> -r swaps
    // the roots and maps A to the second weight B, so A f(x₁Qᵐ) + B f(x₂Qᵐ)
    // is twice the rational part of A f(x₁Qᵐ).
    let x2 = Quad {
        re: x1.re.clone(),
        im: -half,
    };
    let weight_a = Quad::real(g1).sub(&x2.scale(&g0)).div_root(d);
    // f(x Qᵐ) = Σ f_k x^k Q^{mk}, so the node weights fold into one rational
    // coefficient per degree: w_k = 2 f_k Re(A x₁^k).
    let two = Scalar::from_int(2);
    let mut power = weight_a;
    let mut weights = Vec::with_capacity(f.coeffs().len());
    for c in f.coeffs() {
        weights.push(&power.re * &two * c);
        power = power.mul(&x1, d);
    }

    let mut value = Scalar::zero();
    let mut q2m = Scalar::one();
    let mut terms_used = 0;
    let mut converged = false;
    while terms_used < m_max {
        let node = weights.iter().rev().fold(Scalar::zero(), |acc, w| acc * &q2m + w);
        let term = -(node * &q2m);
        value += &term;
        terms_used += 1;
        if term.abs() < *tol {
            converged = true;
            break;
        }
        q2m *= p.q2();
    }
    Ok(JacksonResult {
        value,
        terms_used,
        converged,
    })
}

/// Gram matrix `Int(P_k P_l)`, `0 <= k, l <= k_max`, under the projector
/// normalization.
pub fn orthogonality_matrix(k_max: u32, p: &Params) -> Result<Vec<Vec<Scalar>>> {
    let polys = (0..=k_max)
        .map(|k| special_polynomial(k, p).map(|s| s.poly().clone()))
        .collect::<Result<Vec<_>>>()?;
    let table = moments_recurrence(2 * k_max, p, Normalization::Projector);
    let pair = |f: &VPoly, g: &VPoly| -> Scalar { (f * g).coeffs().iter().zip(&table.mu).map(|(c, m)| c * m).sum() };
    Ok(polys
        .iter()
        .map(|f| polys.iter().map(|g| pair(f, g)).collect())
        .collect())
}
