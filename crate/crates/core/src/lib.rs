//! Exact computer algebra for the two-parameter quantum hyperboloid.
//!
//! The crate covers the whole computational pipeline:
//!
//! - [`scalar`] / [`params`]: exact rationals and the `(q, ħ, c)` context;
//! - [`algebra`]: words in `u, v, w`, the rewriting system and the product;
//! - [`quantum_group`]: the `U_q(sl(2))` action and the quantum Casimir;
//! - [`casimir`]: the closed-form Casimir on polynomials in `ṽ` and its
//!   second-order q-difference factorization;
//! - [`special`]: the `(ħ, q)`-special polynomials and a Legendre oracle;
//! - [`integral`]: the invariant integral (moments, closed form, Jackson-type
//!   series, orthogonality);
//! - [`verify`]: the invariant suite used by the CLI and the acceptance tests.

pub mod algebra;
pub mod casimir;
pub mod error;
pub mod integral;
pub mod params;
pub mod quantum_group;
pub mod report;
pub mod scalar;
pub mod special;
pub mod verify;
pub mod vpoly;

pub use algebra::{
    braided_casimir_value, multiply, reduce, reduce_with, FreeElement, Letter, Monomial, NormalForm, Strategy,
};
pub use casimir::{casimir_closed_form, casimir_on_poly, casimir_via_qdiff, qdiff_minus, qdiff_plus};
pub use error::{Error, Result};
pub use integral::{
    integrate, integrate_with, jackson_series, moment_closed_form, moments_recurrence, orthogonality_matrix,
    JacksonResult, MomentTable, Normalization, RootPair,
};
pub use params::{genericity_check, make_params, GenericityReport, Params};
pub use quantum_group::{act, act_casimir, casimir_eigenvalue, verify_v2_decomposition, Generator, ModuleElement};
pub use report::CheckRecord;
pub use scalar::Scalar;
pub use special::{
    casimir_row, classical_limit_report, monic_legendre, special_polynomial, CasimirRow, LimitReport, SpecialPolynomial,
};
pub use vpoly::VPoly;
