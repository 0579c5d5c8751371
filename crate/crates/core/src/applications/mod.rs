//! Concrete instances of the hull machinery.

pub mod fca;
pub mod legendre;
pub mod tight_span;
pub mod tropical;

pub use fca::{concepts, Concept, ConceptLattice, Context};
pub use legendre::{lf_biconjugate, lf_conjugate, pairing_matrix, GridFunction};
pub use tight_span::{tight_span_embed, tight_span_hom, GeneralizedMetric};
pub use tropical::{ds_coefficients, tropical_closure, tropical_dual, tropical_membership};
