//! The Isbell adjunction `Z↙(−) ⊣ (−)↘Z` between row vectors `A ⇸ 1` and
//! column vectors `1 ⇸ C` of a matrix `Z: A ⇸ C`, and its fixed points.
//!
//! A fixed point `(X, Y)` has `Y = Z↙X` and `X = Y↘Z`. Fixed points are
//! ordered by their first coordinate, equivalently by the reverse of the
//! second. Over `bool` the hull is finite and can be listed; over the numeric
//! quantales it is only queried pointwise.

use std::collections::BTreeSet;

use crate::error::{ensure_same, Error, Result};
use crate::matrix::{IndexSet, QMatrix};
use crate::quantale::{QuantaleId, Scalar};

/// Default enumeration guard: at most `2^20` candidate vectors.
pub const DEFAULT_GUARD: u32 = 20;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IsbellPair {
    x: QMatrix,
    y: QMatrix,
}

impl IsbellPair {
    /// Checks that `(x, y)` is a fixed pair of `z`.
    pub fn new(z: &QMatrix, x: QMatrix, y: QMatrix) -> Result<Self> {
        let x = normalize_row(z, &x)?;
        let y = normalize_col(z, &y)?;
        let expected_y = z.right_extension(&x)?;
        let expected_x = y.right_lifting(z)?;
        if expected_y != y {
            return Err(Error::NotMember(format!("Y = {y} but Z↙X = {expected_y}")));
        }
        if expected_x != x {
            return Err(Error::NotMember(format!("X = {x} but Y↘Z = {expected_x}")));
        }
        Ok(IsbellPair { x, y })
    }

    pub(crate) fn from_parts(x: QMatrix, y: QMatrix) -> Self {
        IsbellPair { x, y }
    }

    /// The row vector `X: A ⇸ 1`.
    pub fn x(&self) -> &QMatrix {
        &self.x
    }

    /// The column vector `Y: 1 ⇸ C`.
    pub fn y(&self) -> &QMatrix {
        &self.y
    }

    pub fn into_parts(self) -> (QMatrix, QMatrix) {
        (self.x, self.y)
    }

    pub fn quantale(&self) -> QuantaleId {
        self.x.quantale()
    }

    /// Hull order: `(X, Y) ⪯ (X', Y')` iff `X ⪯ X'`.
    pub fn leq(&self, other: &IsbellPair) -> Result<bool> {
        self.x.leq(&other.x)
    }
}

/// Returns `x` as a row vector over `z`'s columns, in `z`'s label order.
pub(crate) fn normalize_row(z: &QMatrix, x: &QMatrix) -> Result<QMatrix> {
    ensure_same(z.quantale(), x.quantale())?;
    if !x.is_row_vector() || !x.cols().same_set(z.cols()) {
        return Err(Error::ShapeMismatch(format!(
            "expected a row vector over {}, got {}×{}",
            z.cols(),
            x.rows(),
            x.cols()
        )));
    }
    x.reindexed(&IndexSet::point(), z.cols())
}

/// Returns `y` as a column vector over `z`'s rows, in `z`'s label order.
pub(crate) fn normalize_col(z: &QMatrix, y: &QMatrix) -> Result<QMatrix> {
    ensure_same(z.quantale(), y.quantale())?;
    if !y.is_column_vector() || !y.rows().same_set(z.rows()) {
        return Err(Error::ShapeMismatch(format!(
            "expected a column vector over {}, got {}×{}",
            z.rows(),
            y.rows(),
            y.cols()
        )));
    }
    y.reindexed(z.rows(), &IndexSet::point())
}

/// `X ↦ (Z↙X)↘Z`, the least first coordinate of a fixed pair above `X`.
pub fn closure_row(z: &QMatrix, x: &QMatrix) -> Result<QMatrix> {
    let x = normalize_row(z, x)?;
    z.right_extension(&x)?.right_lifting(z)
}

/// `Y ↦ Z↙(Y↘Z)`, the dual closure on column vectors.
pub fn closure_col(z: &QMatrix, y: &QMatrix) -> Result<QMatrix> {
    let y = normalize_col(z, y)?;
    z.right_extension(&y.right_lifting(z)?)
}

/// Whether `X` is the first coordinate of some fixed pair.
pub fn is_member(z: &QMatrix, x: &QMatrix) -> Result<bool> {
    let x = normalize_row(z, x)?;
    Ok(closure_row(z, &x)? == x)
}

/// Whether `Y` is the second coordinate of some fixed pair.
pub fn is_member_col(z: &QMatrix, y: &QMatrix) -> Result<bool> {
    let y = normalize_col(z, y)?;
    Ok(closure_col(z, &y)? == y)
}

/// The fixed pair generated by a row vector: `((Z↙X)↘Z, Z↙X)`.
pub fn pair_from_row(z: &QMatrix, x: &QMatrix) -> Result<IsbellPair> {
    let x = normalize_row(z, x)?;
    let y = z.right_extension(&x)?;
    let x = y.right_lifting(z)?;
    Ok(IsbellPair { x, y })
}

/// The fixed pair generated by a column vector: `(Y↘Z, Z↙(Y↘Z))`.
pub fn pair_from_col(z: &QMatrix, y: &QMatrix) -> Result<IsbellPair> {
    let y = normalize_col(z, y)?;
    let x = y.right_lifting(z)?;
    let y = z.right_extension(&x)?;
    Ok(IsbellPair { x, y })
}

/// Enlarges a pair under-approximating `Z` (`Y'∘X' ⪯ Z`) to a fixed pair
/// `(X, Y)` with `X' ⪯ X` and `Y' ⪯ Y`.
///
/// The construction starts from `X'`: `Y = Z↙X'` and `X = Y↘Z`.
pub fn complete_pair(z: &QMatrix, x0: &QMatrix, y0: &QMatrix) -> Result<IsbellPair> {
    let x0 = normalize_row(z, x0)?;
    let y0 = normalize_col(z, y0)?;
    if !y0.compose(&x0)?.leq(z)? {
        return Err(Error::NotUnderApproximating(format!("Y'∘X' = {} ⋠ Z", y0.compose(&x0)?)));
    }
    let pair = pair_from_row(z, &x0)?;
    // Y' ⪯ Z↙X' follows from Y'∘X' ⪯ Z; kept as a guard on the coordinate that would obstruct.
    if !y0.leq(&pair.y)? {
        return Err(Error::NotUnderApproximating("Y' is not below Z↙X'".into()));
    }
    Ok(pair)
}

fn check_pairs(z: &QMatrix, pairs: &[IsbellPair]) -> Result<()> {
    for p in pairs {
        ensure_same(z.quantale(), p.quantale())?;
        if p.x.cols() != z.cols() || p.y.rows() != z.rows() {
            return Err(Error::ShapeMismatch("pair belongs to a different ambient matrix".into()));
        }
    }
    Ok(())
}

/// Infimum in the hull: `(⋀ X_i, Z↙⋀ X_i)`; the empty meet is the top pair.
pub fn hull_meet(z: &QMatrix, pairs: &[IsbellPair]) -> Result<IsbellPair> {
    check_pairs(z, pairs)?;
    let xs: Vec<QMatrix> = pairs.iter().map(|p| p.x.clone()).collect();
    let x = QMatrix::meet_in(z.quantale(), &IndexSet::point(), z.cols(), &xs)?;
    let y = z.right_extension(&x)?;
    Ok(IsbellPair { x, y })
}

/// Supremum in the hull, computed on second coordinates.
///
/// The hull order reverses `Y`, so the join takes the entrywise *meet* of the
/// `Y_i` and then `X = (⋀ Y_i)↘Z`; the empty join is the bottom pair.
pub fn hull_join(z: &QMatrix, pairs: &[IsbellPair]) -> Result<IsbellPair> {
    check_pairs(z, pairs)?;
    let ys: Vec<QMatrix> = pairs.iter().map(|p| p.y.clone()).collect();
    let y = QMatrix::meet_in(z.quantale(), z.rows(), &IndexSet::point(), &ys)?;
    let x = y.right_lifting(z)?;
    Ok(IsbellPair { x, y })
}

/// The Isbell hull of an ambient matrix, either listed or intensional.
#[derive(Clone, Debug)]
pub struct IsbellHull {
    ambient: QMatrix,
    elements: Option<Vec<IsbellPair>>,
}

impl IsbellHull {
    /// A hull that only answers membership, closure and lattice queries.
    pub fn intensional(ambient: QMatrix) -> Self {
        IsbellHull { ambient, elements: None }
    }

    /// Lists every fixed pair of a Boolean matrix.
    ///
    /// Candidates are all subsets of the smaller of `A` and `C`; the
    /// enumeration is refused when that exceeds `2^guard`. Elements come out
    /// in a linear extension of the hull order (by size of `X`, then by label).
    pub fn enumerate(ambient: QMatrix, guard: u32) -> Result<Self> {
        if !ambient.quantale().is_enumerable() {
            return Err(Error::NotEnumerable(ambient.quantale()));
        }
        let size = ambient.n_cols().min(ambient.n_rows());
        if size > guard as usize || size >= 64 {
            return Err(Error::GuardExceeded { size, guard });
        }
        let mut fixed: Vec<Vec<bool>> = if ambient.n_cols() <= 64 && ambient.n_rows() <= 64 {
            enumerate_bitmask(&ambient)
        } else {
            enumerate_generic(&ambient)?
        };
        fixed.sort_by_key(|bits| (bits.iter().filter(|b| **b).count(), bits.iter().map(|b| !b).collect::<Vec<_>>()));
        let elements = fixed
            .into_iter()
            .map(|bits| {
                let x = QMatrix::row_vector(
                    QuantaleId::Boolean,
                    ambient.cols().clone(),
                    bits.into_iter().map(Scalar::Bool).collect(),
                )?;
                let y = ambient.right_extension(&x)?;
                Ok(IsbellPair { x, y })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IsbellHull { ambient, elements: Some(elements) })
    }

    pub fn ambient(&self) -> &QMatrix {
        &self.ambient
    }

    pub fn elements(&self) -> Option<&[IsbellPair]> {
        self.elements.as_deref()
    }

    pub fn is_explicit(&self) -> bool {
        self.elements.is_some()
    }

    pub fn len(&self) -> Option<usize> {
        self.elements.as_ref().map(Vec::len)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == Some(0)
    }

    pub fn contains_row(&self, x: &QMatrix) -> Result<bool> {
        is_member(&self.ambient, x)
    }

    pub fn position(&self, p: &IsbellPair) -> Option<usize> {
        self.elements.as_ref()?.iter().position(|e| e == p)
    }

    pub fn closure(&self, x: &QMatrix) -> Result<IsbellPair> {
        pair_from_row(&self.ambient, x)
    }

    pub fn meet(&self, pairs: &[IsbellPair]) -> Result<IsbellPair> {
        hull_meet(&self.ambient, pairs)
    }

    pub fn join(&self, pairs: &[IsbellPair]) -> Result<IsbellPair> {
        hull_join(&self.ambient, pairs)
    }

    pub fn bottom(&self) -> Result<IsbellPair> {
        self.join(&[])
    }

    pub fn top(&self) -> Result<IsbellPair> {
        self.meet(&[])
    }

    /// Covering relation `(i, j)`, `i ⋖ j`, over the listed elements.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        let Some(elements) = &self.elements else {
            return Vec::new();
        };
        let n = elements.len();
        let below: Vec<Vec<bool>> =
            (0..n).map(|i| (0..n).map(|j| elements[i].leq(&elements[j]).unwrap_or(false)).collect()).collect();
        let mut covers = Vec::new();
        for i in 0..n {
            let ups: Vec<usize> = (0..n).filter(|&j| j != i && below[i][j]).collect();
            for &j in &ups {
                if !ups.iter().any(|&k| k != j && below[k][j]) {
                    covers.push((i, j));
                }
            }
        }
        covers
    }
}

fn enumerate_bitmask(z: &QMatrix) -> Vec<Vec<bool>> {
    let (n_c, n_a) = (z.n_rows(), z.n_cols());
    let truth = |c: usize, a: usize| z.get(c, a) == &Scalar::Bool(true);
    let row_masks: Vec<u64> = (0..n_c).map(|c| (0..n_a).filter(|&a| truth(c, a)).fold(0, |m, a| m | 1 << a)).collect();
    let col_masks: Vec<u64> = (0..n_a).map(|a| (0..n_c).filter(|&c| truth(c, a)).fold(0, |m, c| m | 1 << c)).collect();
    // Z↙X = {c : X ⊆ row_c},  Y↘Z = {a : Y ⊆ col_a}
    let ext = |x: u64| (0..n_c).filter(|&c| x & !row_masks[c] == 0).fold(0u64, |m, c| m | 1 << c);
    let lift = |y: u64| (0..n_a).filter(|&a| y & !col_masks[a] == 0).fold(0u64, |m, a| m | 1 << a);
    let to_bits = |x: u64| (0..n_a).map(|a| x & (1 << a) != 0).collect::<Vec<bool>>();
    if n_a <= n_c {
        (0..1u64 << n_a).filter(|&x| lift(ext(x)) == x).map(to_bits).collect()
    } else {
        (0..1u64 << n_c).filter(|&y| ext(lift(y)) == y).map(|y| to_bits(lift(y))).collect()
    }
}

fn enumerate_generic(z: &QMatrix) -> Result<Vec<Vec<bool>>> {
    let enumerate_rows = z.n_cols() <= z.n_rows();
    let side = if enumerate_rows { z.cols() } else { z.rows() };
    let mut out = BTreeSet::new();
    for mask in 0..1u64 << side.len() {
        let bits: Vec<Scalar> = (0..side.len()).map(|i| Scalar::Bool(mask & (1 << i) != 0)).collect();
        let pair = if enumerate_rows {
            pair_from_row(z, &QMatrix::row_vector(QuantaleId::Boolean, side.clone(), bits)?)?
        } else {
            pair_from_col(z, &QMatrix::column_vector(QuantaleId::Boolean, side.clone(), bits)?)?
        };
        out.insert(pair.x.entries().iter().map(|s| s == &Scalar::Bool(true)).collect::<Vec<_>>());
    }
    Ok(out.into_iter().collect())
}
