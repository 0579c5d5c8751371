//! Directed tight spans: the hull of a generalized metric over the Lawvere
//! quantale, with the induced asymmetric sup-metric.

use crate::error::{ensure_same, Error, Result};
use crate::isbell::IsbellPair;
use crate::matrix::{IndexSet, QMatrix};
use crate::quantale::{QuantaleId, Scalar};
use crate::semimodule::{QCategory, SemimoduleView};

/// Points with a distance `d(a, b) ∈ [0, ∞]` satisfying `d(a, a) = 0` and the
/// triangle inequality; symmetry is not required.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedMetric {
    category: QCategory,
}

impl GeneralizedMetric {
    /// `d[i][j]` is the distance from point `i` to point `j`.
    pub fn new(points: IndexSet, d: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = points.len();
        if d.len() != n || d.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch(format!("distance table must be {n} × {n}")));
        }
        for s in d.iter().flatten() {
            QuantaleId::Lawvere.check(s)?;
        }
        let category = QCategory::from_fn(QuantaleId::Lawvere, points, |a, b| d[a][b].clone())?;
        Ok(GeneralizedMetric { category })
    }

    pub fn from_category(category: QCategory) -> Result<Self> {
        ensure_same(QuantaleId::Lawvere, category.quantale())?;
        Ok(GeneralizedMetric { category })
    }

    pub fn points(&self) -> &IndexSet {
        self.category.objects()
    }

    pub fn distance(&self, a: &str, b: &str) -> Result<&Scalar> {
        self.category.hom(a, b)
    }

    pub fn category(&self) -> &QCategory {
        &self.category
    }

    /// The hom matrix, `H[b][a] = d(a, b)`.
    pub fn matrix(&self) -> &QMatrix {
        self.category.hom_matrix()
    }

    pub fn view(&self) -> SemimoduleView {
        SemimoduleView::intensional(self.matrix().clone())
    }
}

/// The image of a point: `X_a = d(a, c)`, `Y_b = d(c, b)`.
pub fn tight_span_embed(m: &GeneralizedMetric, label: &str) -> Result<IsbellPair> {
    let h = m.matrix();
    IsbellPair::new(h, h.row(label)?, h.col(label)?)
}

/// `sup_a max(X'_a − X_a, 0)`, the distance from `p` to `q` in the span.
pub fn tight_span_hom(m: &GeneralizedMetric, p: &IsbellPair, q: &IsbellPair) -> Result<Scalar> {
    Ok(m.view().hom(p, q)?.into_scalar())
}
