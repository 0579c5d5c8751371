//! Formal concept analysis: the hull of a Boolean incidence relation is the
//! concept lattice of the context.

use crate::error::{Error, Result};
use crate::isbell::IsbellHull;
use crate::matrix::{IndexSet, QMatrix};
use crate::quantale::{QuantaleId, Scalar};

/// Objects `C`, attributes `A`, and incidence `Z ⊆ C × A` stored as a
/// Boolean matrix `A ⇸ C` (rows are objects).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Context {
    incidence: QMatrix,
}

impl Context {
    pub fn new(objects: IndexSet, attributes: IndexSet, incidence: Vec<Vec<bool>>) -> Result<Self> {
        let rows = incidence.into_iter().map(|r| r.into_iter().map(Scalar::Bool).collect()).collect();
        Context::from_matrix(QMatrix::new(QuantaleId::Boolean, objects, attributes, rows)?)
    }

    pub fn from_matrix(incidence: QMatrix) -> Result<Self> {
        if incidence.quantale() != QuantaleId::Boolean {
            return Err(Error::InstanceMismatch { left: QuantaleId::Boolean, right: incidence.quantale() });
        }
        Ok(Context { incidence })
    }

    pub fn objects(&self) -> &IndexSet {
        self.incidence.rows()
    }

    pub fn attributes(&self) -> &IndexSet {
        self.incidence.cols()
    }

    pub fn incidence(&self) -> &QMatrix {
        &self.incidence
    }

    pub fn has(&self, object: usize, attribute: usize) -> bool {
        self.incidence.get(object, attribute) == &Scalar::Bool(true)
    }
}

/// A concept: the objects having every attribute of the intent, and the
/// attributes shared by every object of the extent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Concept {
    pub extent: Vec<String>,
    pub intent: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct ConceptLattice {
    pub hull: IsbellHull,
    /// Concepts in the order of `hull`, from the smallest intent upwards.
    pub concepts: Vec<Concept>,
    /// Covering pairs `(i, j)`: the intent of `i` is a maximal proper subset of the intent of `j`.
    pub covers: Vec<(usize, usize)>,
}

fn selected(set: &IndexSet, v: &QMatrix) -> Vec<String> {
    v.entries()
        .iter()
        .enumerate()
        .filter(|(_, s)| **s == Scalar::Bool(true))
        .map(|(i, _)| set.label(i).to_string())
        .collect()
}

/// Lists all concepts of a context.
pub fn concepts(ctx: &Context, guard: u32) -> Result<ConceptLattice> {
    let hull = IsbellHull::enumerate(ctx.incidence.clone(), guard)?;
    let concepts = hull
        .elements()
        .expect("enumerated hull")
        .iter()
        .map(|p| Concept { extent: selected(ctx.objects(), p.y()), intent: selected(ctx.attributes(), p.x()) })
        .collect();
    let covers = hull.covering_pairs();
    Ok(ConceptLattice { hull, concepts, covers })
}
