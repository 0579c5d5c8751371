//! Linear algebra over unital quantales.
//!
//! Matrices over a quantale compose by join-of-products and have right
//! adjoints on both sides (right extension `Z↙X` and right lifting `Y↘Z`).
//! The fixed points of the adjunction `Z↙(−) ⊣ (−)↘Z` form the Isbell hull
//! of `Z`, a complete semimodule. Tropical polytopes, directed tight spans,
//! concept lattices and grid Legendre–Fenchel transforms are instances.

pub mod applications;
pub mod cli;
pub mod error;
pub mod io;
pub mod isbell;
pub mod laws;
pub mod matrix;
pub mod quantale;
pub mod semimodule;

pub use error::{AxiomViolation, Error, Result};
pub use isbell::{IsbellHull, IsbellPair};
pub use laws::{check_quantale_laws, LawReport, Violation};
pub use matrix::{IndexSet, QMatrix};
pub use quantale::{QuantaleId, QuantaleValue, Scalar};
pub use semimodule::{check_semimodule_laws, macneille, MacNeille, QCategory, SemimoduleView};
