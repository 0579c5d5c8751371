//! Tropical polytopes over max-plus.
//!
//! The rows `Z_{c,−}` of `Z: A ⇸ C` are points of `ℝ^A`. For a fixed pair
//! `(X, Y)`, `X_a = min_c (λ_c + Z_{c,a})` with `λ = −Y`, so `X` is a
//! tropical linear combination (min convention) of the rows, and `−Y` gives
//! its coefficients. The finite points of the hull form the polytope.

use crate::error::{ensure_same, Result};
use crate::isbell::{closure_row, is_member, normalize_row, IsbellPair};
use crate::matrix::QMatrix;
use crate::quantale::{QuantaleId, Scalar};

/// Whether `point` has finite coordinates and lies in the hull of `z`.
pub fn tropical_membership(z: &QMatrix, point: &QMatrix) -> Result<bool> {
    ensure_same(QuantaleId::MaxPlus, z.quantale())?;
    let point = normalize_row(z, point)?;
    if !point.entries().iter().all(Scalar::is_finite_number) {
        return Ok(false);
    }
    is_member(z, &point)
}

/// The least hull point above `point`.
pub fn tropical_closure(z: &QMatrix, point: &QMatrix) -> Result<QMatrix> {
    ensure_same(QuantaleId::MaxPlus, z.quantale())?;
    closure_row(z, point)
}

/// Coefficients `λ_c = −Y_c` expressing `X` as `min_c (λ_c + Z_{c,−})`.
pub fn ds_coefficients(p: &IsbellPair) -> QMatrix {
    p.y().map(Scalar::negated)
}

/// `(X, Y) ↦ (Yᵀ, Xᵀ)`, an order-reversing bijection onto the hull of `Zᵀ`.
///
/// Valid for any commutative quantale; the result is checked for fixedness.
pub fn tropical_dual(z: &QMatrix, p: &IsbellPair) -> Result<IsbellPair> {
    let p = IsbellPair::new(z, p.x().clone(), p.y().clone())?;
    IsbellPair::new(&z.transpose(), p.y().transpose(), p.x().transpose())
}
