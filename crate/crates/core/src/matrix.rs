//! Finite matrices over a quantale.
//!
//! A matrix `X: A ⇸ B` has rows indexed by `B` and columns by `A`, so that
//! `Y ∘ X` for `Y: B ⇸ C` is the usual row-by-column product with joins in
//! place of sums. Index sets are ordered label lists; operations that pair
//! two index sets match them as *sets*, so label order never matters.

use std::fmt;

use crate::error::{ensure_same, Error, Result};
use crate::quantale::{QuantaleId, Scalar};

/// The label of the one-point index set `1 = {*}`.
pub const POINT: &str = "*";

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IndexSet {
    labels: Vec<String>,
}

impl IndexSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(IndexSet { labels })
    }

    /// `{prefix0, prefix1, ...}` with `n` elements.
    pub fn numbered(prefix: &str, n: usize) -> Self {
        IndexSet { labels: (0..n).map(|i| format!("{prefix}{i}")).collect() }
    }

    /// The singleton `{*}`.
    pub fn point() -> Self {
        IndexSet { labels: vec![POINT.to_string()] }
    }

    pub fn empty() -> Self {
        IndexSet { labels: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// For each label of `self`, its position in `other`; `None` unless both
    /// sets hold the same labels.
    pub fn alignment(&self, other: &IndexSet) -> Option<Vec<usize>> {
        if self.len() != other.len() {
            return None;
        }
        self.labels.iter().map(|l| other.position(l)).collect()
    }

    pub fn same_set(&self, other: &IndexSet) -> bool {
        self.alignment(other).is_some()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels.join(", "))
    }
}

fn align(from: &IndexSet, to: &IndexSet, what: &str) -> Result<Vec<usize>> {
    from.alignment(to).ok_or_else(|| Error::ShapeMismatch(format!("{what}: {from} does not match {to}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QMatrix {
    quantale: QuantaleId,
    rows: IndexSet,
    cols: IndexSet,
    // row-major
    entries: Vec<Scalar>,
}

impl QMatrix {
    pub fn new(quantale: QuantaleId, rows: IndexSet, cols: IndexSet, entries: Vec<Vec<Scalar>>) -> Result<Self> {
        if entries.len() != rows.len() || entries.iter().any(|r| r.len() != cols.len()) {
            return Err(Error::ShapeMismatch(format!("expected {}×{} entries", rows.len(), cols.len())));
        }
        let entries: Vec<Scalar> = entries.into_iter().flatten().collect();
        entries.iter().try_for_each(|s| quantale.check(s))?;
        Ok(QMatrix { quantale, rows, cols, entries })
    }

    /// Builds a matrix from a generator that is trusted to stay in the carrier.
    pub(crate) fn from_fn(
        quantale: QuantaleId,
        rows: IndexSet,
        cols: IndexSet,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for r in 0..rows.len() {
            for c in 0..cols.len() {
                let s = f(r, c);
                debug_assert!(quantale.admits(&s), "{s} escaped {quantale}");
                entries.push(s);
            }
        }
        QMatrix { quantale, rows, cols, entries }
    }

    pub fn filled(quantale: QuantaleId, rows: IndexSet, cols: IndexSet, value: &Scalar) -> Result<Self> {
        quantale.check(value)?;
        Ok(Self::from_fn(quantale, rows, cols, |_, _| value.clone()))
    }

    /// The least matrix of the given shape.
    pub fn bottom(quantale: QuantaleId, rows: IndexSet, cols: IndexSet) -> Self {
        let b = quantale.bottom();
        Self::from_fn(quantale, rows, cols, |_, _| b.clone())
    }

    pub fn top(quantale: QuantaleId, rows: IndexSet, cols: IndexSet) -> Self {
        let t = quantale.top();
        Self::from_fn(quantale, rows, cols, |_, _| t.clone())
    }

    /// `I_A`: the unit on the diagonal and `𝟎` elsewhere.
    pub fn identity(quantale: QuantaleId, set: &IndexSet) -> Self {
        let (unit, zero) = (quantale.unit(), quantale.bottom());
        Self::from_fn(quantale, set.clone(), set.clone(), |r, c| if r == c { unit.clone() } else { zero.clone() })
    }

    /// A row vector `A ⇸ 1`.
    pub fn row_vector(quantale: QuantaleId, cols: IndexSet, entries: Vec<Scalar>) -> Result<Self> {
        Self::new(quantale, IndexSet::point(), cols, vec![entries])
    }

    /// A column vector `1 ⇸ C`.
    pub fn column_vector(quantale: QuantaleId, rows: IndexSet, entries: Vec<Scalar>) -> Result<Self> {
        Self::new(quantale, rows, IndexSet::point(), entries.into_iter().map(|s| vec![s]).collect())
    }

    pub fn scalar(quantale: QuantaleId, value: Scalar) -> Result<Self> {
        Self::new(quantale, IndexSet::point(), IndexSet::point(), vec![vec![value]])
    }

    pub fn quantale(&self) -> QuantaleId {
        self.quantale
    }

    pub fn rows(&self) -> &IndexSet {
        &self.rows
    }

    pub fn cols(&self) -> &IndexSet {
        &self.cols
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols.len()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols.len() + c]
    }

    /// The entry `X_{row,col}` addressed by labels.
    pub fn entry(&self, row: &str, col: &str) -> Result<&Scalar> {
        let r = self.rows.position(row).ok_or_else(|| Error::UnknownLabel(row.to_string()))?;
        let c = self.cols.position(col).ok_or_else(|| Error::UnknownLabel(col.to_string()))?;
        Ok(self.get(r, c))
    }

    pub fn row_entries(&self, r: usize) -> &[Scalar] {
        let n = self.cols.len();
        &self.entries[r * n..(r + 1) * n]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.n_rows()).map(|r| self.row_entries(r).to_vec()).collect()
    }

    pub fn is_row_vector(&self) -> bool {
        self.rows.len() == 1
    }

    pub fn is_column_vector(&self) -> bool {
        self.cols.len() == 1
    }

    /// The unique entry of a `1 × 1` matrix.
    pub fn as_scalar(&self) -> Option<&Scalar> {
        (self.rows.len() == 1 && self.cols.len() == 1).then(|| &self.entries[0])
    }

    pub fn same_shape(&self, other: &QMatrix) -> bool {
        self.rows == other.rows && self.cols == other.cols
    }

    fn ensure_same_shape(&self, other: &QMatrix) -> Result<()> {
        ensure_same(self.quantale, other.quantale)?;
        if self.same_shape(other) {
            Ok(())
        } else {
            Err(Error::ShapeMismatch(format!("{}×{} vs {}×{}", self.rows, self.cols, other.rows, other.cols)))
        }
    }

    pub fn map(&self, mut f: impl FnMut(&Scalar) -> Scalar) -> Self {
        let q = self.quantale;
        let entries = self.entries.iter().map(|s| {
            let t = f(s);
            debug_assert!(q.admits(&t));
            t
        });
        QMatrix { quantale: q, rows: self.rows.clone(), cols: self.cols.clone(), entries: entries.collect() }
    }

    /// `X^⊤`.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.quantale, self.cols.clone(), self.rows.clone(), |r, c| self.get(c, r).clone())
    }

    /// `Y ∘ X` for `self = Y: B ⇸ C` and `X: A ⇸ B`.
    pub fn compose(&self, x: &QMatrix) -> Result<QMatrix> {
        ensure_same(self.quantale, x.quantale)?;
        let perm = align(&self.cols, &x.rows, "composition")?;
        let q = self.quantale;
        Ok(Self::from_fn(q, self.rows.clone(), x.cols.clone(), |c, a| {
            let mut acc = q.bottom();
            for (b, &xb) in perm.iter().enumerate() {
                acc = q.join2(&acc, &q.mul(self.get(c, b), x.get(xb, a)));
            }
            acc
        }))
    }

    /// `Z ↙ X` for `self = Z: A ⇸ C` and `X: A ⇸ B`; the result is `B ⇸ C`.
    ///
    /// `(Z↙X)_{c,b} = ⋀_a Z_{c,a} ↙ X_{b,a}`, so an empty `A` gives the top matrix.
    pub fn right_extension(&self, x: &QMatrix) -> Result<QMatrix> {
        ensure_same(self.quantale, x.quantale)?;
        let perm = align(&self.cols, &x.cols, "right extension")?;
        let q = self.quantale;
        Ok(Self::from_fn(q, self.rows.clone(), x.rows.clone(), |c, b| {
            let mut acc = q.top();
            for (a, &xa) in perm.iter().enumerate() {
                acc = q.meet2(&acc, &q.rext(self.get(c, a), x.get(b, xa)));
            }
            acc
        }))
    }

    /// `Y ↘ Z` for `self = Y: B ⇸ C` and `Z: A ⇸ C`; the result is `A ⇸ B`.
    ///
    /// `(Y↘Z)_{b,a} = ⋀_c Y_{c,b} ↘ Z_{c,a}`.
    pub fn right_lifting(&self, z: &QMatrix) -> Result<QMatrix> {
        ensure_same(self.quantale, z.quantale)?;
        let perm = align(&self.rows, &z.rows, "right lifting")?;
        let q = self.quantale;
        Ok(Self::from_fn(q, self.cols.clone(), z.cols.clone(), |b, a| {
            let mut acc = q.top();
            for (c, &zc) in perm.iter().enumerate() {
                acc = q.meet2(&acc, &q.rlift(self.get(c, b), z.get(zc, a)));
            }
            acc
        }))
    }

    /// Entrywise order.
    pub fn leq(&self, other: &QMatrix) -> Result<bool> {
        self.ensure_same_shape(other)?;
        let q = self.quantale;
        Ok(self.entries.iter().zip(&other.entries).all(|(a, b)| q.leq(a, b)))
    }

    fn combine(&self, other: &QMatrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<QMatrix> {
        self.ensure_same_shape(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect();
        Ok(QMatrix { quantale: self.quantale, rows: self.rows.clone(), cols: self.cols.clone(), entries })
    }

    pub fn join(&self, other: &QMatrix) -> Result<QMatrix> {
        let q = self.quantale;
        self.combine(other, |a, b| q.join2(a, b))
    }

    pub fn meet(&self, other: &QMatrix) -> Result<QMatrix> {
        let q = self.quantale;
        self.combine(other, |a, b| q.meet2(a, b))
    }

    /// Entrywise join of a nonempty family.
    pub fn join_all(family: &[QMatrix]) -> Result<QMatrix> {
        let (first, rest) = family.split_first().ok_or(Error::EmptyFamily("matrix join"))?;
        rest.iter().try_fold(first.clone(), |acc, m| acc.join(m))
    }

    /// Entrywise meet of a nonempty family.
    pub fn meet_all(family: &[QMatrix]) -> Result<QMatrix> {
        let (first, rest) = family.split_first().ok_or(Error::EmptyFamily("matrix meet"))?;
        rest.iter().try_fold(first.clone(), |acc, m| acc.meet(m))
    }

    /// Entrywise join with an explicit shape, so the empty family is the bottom matrix.
    pub fn join_in(quantale: QuantaleId, rows: &IndexSet, cols: &IndexSet, family: &[QMatrix]) -> Result<QMatrix> {
        family.iter().try_fold(Self::bottom(quantale, rows.clone(), cols.clone()), |acc, m| acc.join(m))
    }

    /// Entrywise meet with an explicit shape, so the empty family is the top matrix.
    pub fn meet_in(quantale: QuantaleId, rows: &IndexSet, cols: &IndexSet, family: &[QMatrix]) -> Result<QMatrix> {
        family.iter().try_fold(Self::top(quantale, rows.clone(), cols.clone()), |acc, m| acc.meet(m))
    }

    /// `⋁_a Y_{*,a} ∘ X_{a,*}` for a row vector `self = Y` and a column vector `X`.
    pub fn scalar_product(&self, x: &QMatrix) -> Result<Scalar> {
        if !self.is_row_vector() || !x.is_column_vector() {
            return Err(Error::ShapeMismatch("scalar product needs a row and a column vector".into()));
        }
        Ok(self.compose(x)?.entries[0].clone())
    }

    /// The row `X_{b,-}` as a row vector.
    pub fn row(&self, label: &str) -> Result<QMatrix> {
        let r = self.rows.position(label).ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
        Ok(QMatrix {
            quantale: self.quantale,
            rows: IndexSet::point(),
            cols: self.cols.clone(),
            entries: self.row_entries(r).to_vec(),
        })
    }

    /// The column `X_{-,a}` as a column vector.
    pub fn col(&self, label: &str) -> Result<QMatrix> {
        let c = self.cols.position(label).ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
        Ok(Self::from_fn(self.quantale, self.rows.clone(), IndexSet::point(), |r, _| self.get(r, c).clone()))
    }

    /// The same matrix with its rows and columns reordered to the given label
    /// orders (which must be permutations of the current ones).
    pub fn reindexed(&self, rows: &IndexSet, cols: &IndexSet) -> Result<QMatrix> {
        let rp = align(rows, &self.rows, "row reindexing")?;
        let cp = align(cols, &self.cols, "column reindexing")?;
        Ok(Self::from_fn(self.quantale, rows.clone(), cols.clone(), |r, c| self.get(rp[r], cp[c]).clone()))
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.n_rows())
            .map(|r| {
                let cells: Vec<String> = self.row_entries(r).iter().map(Scalar::literal).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}
