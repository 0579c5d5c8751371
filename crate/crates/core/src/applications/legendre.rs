//! Legendre–Fenchel conjugation on finite grids.
//!
//! With the pairing matrix `P[p][v] = ⟨p, v⟩` over min-plus, the conjugate
//! `f*(p) = max_v (⟨p, v⟩ − f(v))` is the right extension `P ↙ f`, and the
//! biconjugate is the right lifting `f* ↘ P`.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::{IndexSet, QMatrix};
use crate::quantale::{QuantaleId, Scalar};

pub type Point = Vec<BigRational>;

/// Values of a function `ℝⁿ → [−∞, ∞]` on distinct grid points, `1 ≤ n ≤ 3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridFunction {
    dim: usize,
    grid: Vec<Point>,
    values: Vec<Scalar>,
}

impl GridFunction {
    pub fn new(dim: usize, grid: Vec<Point>, values: Vec<Scalar>) -> Result<Self> {
        check_grid(dim, &grid)?;
        if values.len() != grid.len() {
            return Err(Error::ShapeMismatch(format!("{} values for {} grid points", values.len(), grid.len())));
        }
        for v in &values {
            QuantaleId::MinPlus.check(v)?;
        }
        Ok(GridFunction { dim, grid, values })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn grid(&self) -> &[Point] {
        &self.grid
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    fn as_row(&self) -> QMatrix {
        QMatrix::row_vector(QuantaleId::MinPlus, IndexSet::numbered("v", self.grid.len()), self.values.clone())
            .expect("one value per grid point")
    }
}

fn check_grid(dim: usize, grid: &[Point]) -> Result<()> {
    if !(1..=3).contains(&dim) {
        return Err(Error::Invalid(format!("grid dimension {dim} is outside 1..=3")));
    }
    if grid.is_empty() {
        return Err(Error::EmptyFamily("grid"));
    }
    for (i, p) in grid.iter().enumerate() {
        if p.len() != dim {
            return Err(Error::ShapeMismatch(format!("grid point {i} has {} coordinates, expected {dim}", p.len())));
        }
        if grid[..i].contains(p) {
            return Err(Error::Invalid(format!("grid point {i} is repeated")));
        }
    }
    Ok(())
}

/// `P[p][v] = ⟨p, v⟩` over min-plus, rows `p0, p1, …`, columns `v0, v1, …`.
pub fn pairing_matrix(dual_grid: &[Point], grid: &[Point]) -> QMatrix {
    QMatrix::from_fn(
        QuantaleId::MinPlus,
        IndexSet::numbered("p", dual_grid.len()),
        IndexSet::numbered("v", grid.len()),
        |r, c| {
            let dot = dual_grid[r].iter().zip(&grid[c]).fold(BigRational::zero(), |acc, (a, b)| acc + a * b);
            Scalar::Finite(dot)
        },
    )
}

/// `f*(p) = max_v (⟨p, v⟩ − f(v))` on `dual_grid`.
pub fn lf_conjugate(f: &GridFunction, dual_grid: &[Point]) -> Result<GridFunction> {
    check_grid(f.dim, dual_grid)?;
    let pairing = pairing_matrix(dual_grid, &f.grid);
    let conj = pairing.right_extension(&f.as_row())?;
    GridFunction::new(f.dim, dual_grid.to_vec(), conj.entries().to_vec())
}

/// `f**(v) = max_p (⟨p, v⟩ − f*(p))` back on `f`'s grid.
pub fn lf_biconjugate(f: &GridFunction, dual_grid: &[Point]) -> Result<GridFunction> {
    let conj = lf_conjugate(f, dual_grid)?;
    let pairing = pairing_matrix(dual_grid, &f.grid);
    let column = QMatrix::column_vector(QuantaleId::MinPlus, pairing.rows().clone(), conj.values)?;
    let bi = column.right_lifting(&pairing)?;
    GridFunction::new(f.dim, f.grid.clone(), bi.entries().to_vec())
}
