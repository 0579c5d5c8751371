//! Q-categories, the complete-semimodule structure of an Isbell hull, and the
//! MacNeille completion.
//!
//! A Q-category is stored as its square hom matrix `H` with
//! `H[c'][c] = C(c, c')`, the same orientation as a matrix `C ⇸ C`.
//!
//! On a hull the hom is taken covariantly in the hull order:
//! `hom((X,Y), (X',Y')) = ⋀_a X'_a ↙ X_a = ⋀_c Y_c ↙ Y'_c`, so that
//! `I ⪯ hom(p, q)` exactly when `p ⪯ q`, and the canonical embedding of a
//! Q-category is isometric.

use crate::error::{ensure_same, AxiomViolation, Error, Result};
use crate::isbell::{closure_row, hull_join, hull_meet, normalize_row, IsbellHull, IsbellPair};
use crate::laws::{subfamilies, LawReport};
use crate::matrix::{IndexSet, QMatrix};
use crate::quantale::{QuantaleId, QuantaleValue, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QCategory {
    hom: QMatrix,
}

impl QCategory {
    /// Validates a square hom matrix against the unit and composition axioms.
    pub fn new(hom: QMatrix) -> Result<Self> {
        let hom = square(&hom)?;
        let violations = axiom_violations(&hom);
        if violations.is_empty() {
            Ok(QCategory { hom })
        } else {
            Err(Error::NotQCategory(violations))
        }
    }

    /// Lists every `(c)` and `(c, c', c'')` witness violating the axioms.
    pub fn check(hom: &QMatrix) -> Result<Vec<AxiomViolation>> {
        Ok(axiom_violations(&square(hom)?))
    }

    /// Builds the category with `C(c, c') = f(c, c')`.
    pub fn from_fn(quantale: QuantaleId, objects: IndexSet, f: impl Fn(usize, usize) -> Scalar) -> Result<Self> {
        let rows = (0..objects.len()).map(|c1| (0..objects.len()).map(|c| f(c, c1)).collect()).collect();
        QCategory::new(QMatrix::new(quantale, objects.clone(), objects, rows)?)
    }

    pub fn quantale(&self) -> QuantaleId {
        self.hom.quantale()
    }

    pub fn objects(&self) -> &IndexSet {
        self.hom.cols()
    }

    pub fn len(&self) -> usize {
        self.hom.n_cols()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn hom_matrix(&self) -> &QMatrix {
        &self.hom
    }

    /// `C(c, c')` by position.
    pub fn hom_at(&self, c: usize, c1: usize) -> &Scalar {
        self.hom.get(c1, c)
    }

    /// `C(c, c')` by label.
    pub fn hom(&self, c: &str, c1: &str) -> Result<&Scalar> {
        self.hom.entry(c1, c)
    }

    fn index(&self, label: &str) -> Result<usize> {
        self.objects().position(label).ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    fn below(&self, c: usize, c1: usize) -> bool {
        let q = self.quantale();
        q.leq(&q.unit(), self.hom_at(c, c1))
    }

    /// `c ⪯ c'` iff `I ⪯ C(c, c')`, as a Boolean matrix in hom orientation.
    pub fn induced_preorder(&self) -> QMatrix {
        let n = self.len();
        let rows = (0..n).map(|c1| (0..n).map(|c| Scalar::Bool(self.below(c, c1))).collect()).collect();
        QMatrix::new(QuantaleId::Boolean, self.objects().clone(), self.objects().clone(), rows)
            .expect("square Boolean matrix over known labels")
    }

    /// Pairs of distinct isomorphic objects, in label order.
    pub fn isomorphic_objects(&self) -> Vec<(String, String)> {
        let n = self.len();
        let mut out = Vec::new();
        for c in 0..n {
            for c1 in c + 1..n {
                if self.below(c, c1) && self.below(c1, c) {
                    out.push((self.objects().label(c).to_string(), self.objects().label(c1).to_string()));
                }
            }
        }
        out
    }

    pub fn is_skeletal(&self) -> bool {
        self.isomorphic_objects().is_empty()
    }

    /// All `c'` with `C(c', d) = C(c, d) ↙ x` for every `d`.
    pub fn copower_class(&self, c: &str, x: &QuantaleValue) -> Result<Vec<String>> {
        ensure_same(self.quantale(), x.quantale())?;
        let c = self.index(c)?;
        let q = self.quantale();
        Ok(self.witnesses(|c1, d| *self.hom_at(c1, d) == q.rext(self.hom_at(c, d), x.scalar())))
    }

    /// All `c'` with `C(d, c') = x ↘ C(d, c)` for every `d`.
    pub fn power_class(&self, c: &str, x: &QuantaleValue) -> Result<Vec<String>> {
        ensure_same(self.quantale(), x.quantale())?;
        let c = self.index(c)?;
        let q = self.quantale();
        Ok(self.witnesses(|c1, d| *self.hom_at(d, c1) == q.rlift(x.scalar(), self.hom_at(d, c))))
    }

    /// The first copower of `c` by `x` in label order, if any.
    pub fn copower_of(&self, c: &str, x: &QuantaleValue) -> Result<Option<String>> {
        Ok(self.copower_class(c, x)?.into_iter().next())
    }

    /// The first power of `c` by `x` in label order, if any.
    pub fn power_of(&self, c: &str, x: &QuantaleValue) -> Result<Option<String>> {
        Ok(self.power_class(c, x)?.into_iter().next())
    }

    fn witnesses(&self, ok: impl Fn(usize, usize) -> bool) -> Vec<String> {
        (0..self.len())
            .filter(|&c1| (0..self.len()).all(|d| ok(c1, d)))
            .map(|c1| self.objects().label(c1).to_string())
            .collect()
    }

    /// Every subset has a supremum in the induced preorder. For a finite
    /// category this means a least object exists and every pair has a join.
    pub fn is_order_complete(&self) -> bool {
        let n = self.len();
        let least = |cands: Vec<usize>| cands.iter().any(|&u| cands.iter().all(|&v| self.below(u, v)));
        if !least((0..n).collect()) {
            return false;
        }
        (0..n).all(|a| (a + 1..n).all(|b| least((0..n).filter(|&u| self.below(a, u) && self.below(b, u)).collect())))
    }

    /// Checks copowers, powers and order-completeness.
    ///
    /// Over `bool` every scalar is tried; otherwise only `samples` are, and
    /// the result says so.
    pub fn completeness(&self, samples: &[Scalar]) -> Result<Completeness> {
        let q = self.quantale();
        let (scalars, scope) = if q.is_enumerable() {
            (q.sample_carrier(), Scope::Exhaustive)
        } else {
            (samples.to_vec(), Scope::Sampled)
        };
        let mut missing_copowers = Vec::new();
        let mut missing_powers = Vec::new();
        for s in &scalars {
            let x = QuantaleValue::new(q, s.clone())?;
            for c in self.objects().labels() {
                if self.copower_of(c, &x)?.is_none() {
                    missing_copowers.push((c.clone(), s.literal()));
                }
                if self.power_of(c, &x)?.is_none() {
                    missing_powers.push((c.clone(), s.literal()));
                }
            }
        }
        Ok(Completeness { scope, order_complete: self.is_order_complete(), missing_copowers, missing_powers })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    /// All scalars of a finite quantale were tried.
    Exhaustive,
    /// Only the given scalars were tried.
    Sampled,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Completeness {
    pub scope: Scope,
    pub order_complete: bool,
    /// `(object, scalar)` pairs without a copower.
    pub missing_copowers: Vec<(String, String)>,
    pub missing_powers: Vec<(String, String)>,
}

impl Completeness {
    pub fn is_complete(&self) -> bool {
        self.order_complete && self.missing_copowers.is_empty() && self.missing_powers.is_empty()
    }
}

fn square(hom: &QMatrix) -> Result<QMatrix> {
    if !hom.rows().same_set(hom.cols()) {
        return Err(Error::ShapeMismatch(format!(
            "hom matrix must be square over one object set, got {} × {}",
            hom.rows(),
            hom.cols()
        )));
    }
    hom.reindexed(hom.cols(), hom.cols())
}

fn axiom_violations(hom: &QMatrix) -> Vec<AxiomViolation> {
    let q = hom.quantale();
    let n = hom.n_cols();
    let label = |i: usize| hom.cols().label(i).to_string();
    let c_hom = |c: usize, c1: usize| hom.get(c1, c);
    let mut out = Vec::new();
    for c in 0..n {
        if !q.leq(&q.unit(), c_hom(c, c)) {
            out.push(AxiomViolation::Unit { object: label(c) });
        }
    }
    for c in 0..n {
        for c1 in 0..n {
            for c2 in 0..n {
                if !q.leq(&q.mul(c_hom(c1, c2), c_hom(c, c1)), c_hom(c, c2)) {
                    out.push(AxiomViolation::Composition { c: label(c), c1: label(c1), c2: label(c2) });
                }
            }
        }
    }
    out
}

/// The hull of an ambient matrix viewed as a complete semimodule.
#[derive(Clone, Debug)]
pub struct SemimoduleView {
    carrier: IsbellHull,
}

impl SemimoduleView {
    pub fn new(carrier: IsbellHull) -> Self {
        SemimoduleView { carrier }
    }

    pub fn intensional(ambient: QMatrix) -> Self {
        SemimoduleView { carrier: IsbellHull::intensional(ambient) }
    }

    pub fn ambient(&self) -> &QMatrix {
        self.carrier.ambient()
    }

    pub fn carrier(&self) -> &IsbellHull {
        &self.carrier
    }

    pub fn quantale(&self) -> QuantaleId {
        self.ambient().quantale()
    }

    /// Fails unless `p` is a fixed pair of the ambient matrix.
    pub fn ensure_member(&self, p: &IsbellPair) -> Result<()> {
        let z = self.ambient();
        ensure_same(z.quantale(), p.quantale())?;
        if p.x().cols() != z.cols() || p.y().rows() != z.rows() {
            return Err(Error::NotMember("pair belongs to a different ambient matrix".into()));
        }
        if &closure_row(z, p.x())? != p.x() || &z.right_extension(p.x())? != p.y() {
            return Err(Error::NotMember(format!("({}, {}) is not a fixed pair", p.x(), p.y())));
        }
        Ok(())
    }

    fn scalar<'a>(&self, x: &'a QuantaleValue) -> Result<&'a Scalar> {
        ensure_same(self.quantale(), x.quantale())?;
        Ok(x.scalar())
    }

    /// `x ∗ p`: the least hull element whose first coordinate lies above `x∘X`.
    pub fn copower(&self, x: &QuantaleValue, p: &IsbellPair) -> Result<IsbellPair> {
        let s = self.scalar(x)?;
        self.ensure_member(p)?;
        let q = self.quantale();
        let acted = p.x().map(|v| q.mul(s, v));
        let x_new = closure_row(self.ambient(), &acted)?;
        let y = self.ambient().right_extension(&x_new)?;
        Ok(IsbellPair::from_parts(x_new, y))
    }

    /// The copower computed on second coordinates: `Y ↦ Y ↙ x` entrywise.
    pub fn copower_via_y(&self, x: &QuantaleValue, p: &IsbellPair) -> Result<IsbellPair> {
        let s = self.scalar(x)?;
        self.ensure_member(p)?;
        let q = self.quantale();
        let y = p.y().map(|v| q.rext(v, s));
        let x_new = y.right_lifting(self.ambient())?;
        Ok(IsbellPair::from_parts(x_new, y))
    }

    /// `x ↘ p`: acts on the first coordinate by entrywise lifting.
    pub fn power(&self, x: &QuantaleValue, p: &IsbellPair) -> Result<IsbellPair> {
        let s = self.scalar(x)?;
        self.ensure_member(p)?;
        let q = self.quantale();
        let x_new = normalize_row(self.ambient(), &p.x().map(|v| q.rlift(s, v)))?;
        let y = self.ambient().right_extension(&x_new)?;
        Ok(IsbellPair::from_parts(x_new, y))
    }

    /// `hom(p, p') = ⋀_a X'_a ↙ X_a`.
    pub fn hom(&self, p: &IsbellPair, p1: &IsbellPair) -> Result<QuantaleValue> {
        self.ensure_member(p)?;
        self.ensure_member(p1)?;
        let q = self.quantale();
        let parts: Vec<Scalar> = p.x().entries().iter().zip(p1.x().entries()).map(|(x, x1)| q.rext(x1, x)).collect();
        QuantaleValue::new(q, q.meet(parts.iter()))
    }

    /// `hom(p, p') = ⋀_c Y'_c ↘ Y_c`, the same value computed on second coordinates.
    pub fn hom_via_y(&self, p: &IsbellPair, p1: &IsbellPair) -> Result<QuantaleValue> {
        self.ensure_member(p)?;
        self.ensure_member(p1)?;
        let q = self.quantale();
        let parts: Vec<Scalar> = p.y().entries().iter().zip(p1.y().entries()).map(|(y, y1)| q.rlift(y1, y)).collect();
        QuantaleValue::new(q, q.meet(parts.iter()))
    }

    pub fn leq(&self, p: &IsbellPair, p1: &IsbellPair) -> Result<bool> {
        p.leq(p1)
    }

    pub fn join(&self, pairs: &[IsbellPair]) -> Result<IsbellPair> {
        hull_join(self.ambient(), pairs)
    }

    pub fn meet(&self, pairs: &[IsbellPair]) -> Result<IsbellPair> {
        hull_meet(self.ambient(), pairs)
    }

    /// The listed hull as a Q-category with objects `h0, h1, …`.
    pub fn to_category(&self) -> Result<Option<QCategory>> {
        let Some(elements) = self.carrier.elements() else {
            return Ok(None);
        };
        let objects = IndexSet::numbered("h", elements.len());
        let mut homs = vec![vec![self.quantale().bottom(); elements.len()]; elements.len()];
        for (i, p) in elements.iter().enumerate() {
            for (j, p1) in elements.iter().enumerate() {
                homs[i][j] = self.hom(p, p1)?.into_scalar();
            }
        }
        QCategory::from_fn(self.quantale(), objects, |c, c1| homs[c][c1].clone()).map(Some)
    }
}

/// Checks the action laws, the hom/copower/power adjointness and the dual
/// laws of the power on the given scalars and hull elements.
pub fn check_semimodule_laws(view: &SemimoduleView, scalars: &[Scalar], elements: &[IsbellPair]) -> Result<LawReport> {
    let q = view.quantale();
    let mut report = LawReport::default();
    let xs: Vec<QuantaleValue> = scalars.iter().map(|s| QuantaleValue::new(q, s.clone())).collect::<Result<_>>()?;
    for p in elements {
        view.ensure_member(p)?;
    }
    let unit = QuantaleValue::unit(q);
    let show = |p: &IsbellPair| format!("({}, {})", p.x(), p.y());

    for p in elements {
        report.expect(&view.copower(&unit, p)? == p, "copower unit", || show(p));
        report.expect(&view.power(&unit, p)? == p, "power unit", || show(p));
        report.expect(unit.leq(&view.hom(p, p)?)?, "hom unit", || show(p));
    }

    for x in &xs {
        for p in elements {
            let cp = view.copower(x, p)?;
            report.expect(cp == view.copower_via_y(x, p)?, "copower coordinates agree", || {
                format!("{} ∗ {}", x.scalar(), show(p))
            });
            let pw = view.power(x, p)?;
            report.expect(closure_row(view.ambient(), pw.x())? == *pw.x(), "power is fixed", || {
                format!("{} ↘ {}", x.scalar(), show(p))
            });
            for y in &xs {
                let yx = y.mul(x)?;
                report.expect(view.copower(y, &cp)? == view.copower(&yx, p)?, "copower associativity", || {
                    format!("{} ∗ ({} ∗ {})", y.scalar(), x.scalar(), show(p))
                });
                report.expect(view.power(x, &view.power(y, p)?)? == view.power(&yx, p)?, "power associativity", || {
                    format!("{} ↘ ({} ↘ {})", x.scalar(), y.scalar(), show(p))
                });
            }
            for r in elements {
                let h = view.hom(p, r)?;
                report.expect(h == view.hom_via_y(p, r)?, "hom coordinates agree", || {
                    format!("{} → {}", show(p), show(r))
                });
                let a = x.leq(&h)?;
                let b = cp.leq(r)?;
                let c = p.leq(&view.power(x, r)?)?;
                report.expect(a == b && b == c, "hom adjointness", || {
                    format!("x={}, p={}, q={}: {a}/{b}/{c}", x.scalar(), show(p), show(r))
                });
            }
        }
    }

    for family in subfamilies(&xs) {
        let joined = QuantaleValue::new(q, q.join(family.iter().map(|v| v.scalar())))?;
        for p in elements {
            let copowers = family.iter().map(|x| view.copower(x, p)).collect::<Result<Vec<_>>>()?;
            report.expect(view.copower(&joined, p)? == view.join(&copowers)?, "copower preserves scalar joins", || {
                format!("{family:?} ∗ {}", show(p))
            });
            let powers = family.iter().map(|x| view.power(x, p)).collect::<Result<Vec<_>>>()?;
            report.expect(
                view.power(&joined, p)? == view.meet(&powers)?,
                "power turns scalar joins into meets",
                || format!("{family:?} ↘ {}", show(p)),
            );
        }
    }

    for family in subfamilies(elements) {
        let joined = view.join(&family)?;
        let met = view.meet(&family)?;
        for x in &xs {
            let copowers = family.iter().map(|p| view.copower(x, p)).collect::<Result<Vec<_>>>()?;
            report.expect(view.copower(x, &joined)? == view.join(&copowers)?, "copower preserves joins", || {
                format!("{} ∗ ⋁{}", x.scalar(), family.len())
            });
            let powers = family.iter().map(|p| view.power(x, p)).collect::<Result<Vec<_>>>()?;
            report.expect(view.power(x, &met)? == view.meet(&powers)?, "power preserves meets", || {
                format!("{} ↘ ⋀{}", x.scalar(), family.len())
            });
        }
    }
    Ok(report)
}

/// The MacNeille completion of a Q-category: the hull of its hom matrix and
/// the embedding `c ↦ (row C_{c,−}, column C_{−,c})`.
#[derive(Clone, Debug)]
pub struct MacNeille {
    pub view: SemimoduleView,
    /// Image of each object, in object order.
    pub embedding: Vec<(String, IsbellPair)>,
}

impl MacNeille {
    /// Positions of the embedded objects in the listed carrier.
    pub fn embedding_positions(&self) -> Option<Vec<Option<usize>>> {
        self.view.carrier().elements()?;
        Some(self.embedding.iter().map(|(_, p)| self.view.carrier().position(p)).collect())
    }
}

/// Builds the completion, listing the carrier when the quantale is `bool`
/// and the enumeration fits under `2^guard`.
pub fn macneille(c: &QCategory, guard: u32) -> Result<MacNeille> {
    let z = c.hom_matrix().clone();
    let mut embedding = Vec::with_capacity(c.len());
    for label in c.objects().labels() {
        let x = z.row(label)?;
        let y = z.col(label)?;
        embedding.push((label.clone(), IsbellPair::new(&z, x, y)?));
    }
    let carrier =
        if z.quantale().is_enumerable() { IsbellHull::enumerate(z, guard)? } else { IsbellHull::intensional(z) };
    Ok(MacNeille { view: SemimoduleView::new(carrier), embedding })
}
