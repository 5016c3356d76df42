use num_bigint::BigInt;
use num_traits::Signed;

use crate::exact::Rational;
use crate::linalg::Matrix;

use super::graph::{match_shape, Classification, Graph};
use super::RootSysError;

/// `A = 2·Id − R` for the multiplicity matrix `R` of a graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CartanMatrix {
    a: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn from_graph(g: &Graph) -> Self {
        let r = g.vertices();
        let a = (0..r)
            .map(|i| (0..r).map(|j| if i == j { 2 } else { -(g.multiplicity(i, j) as i64) }).collect())
            .collect();
        CartanMatrix { a }
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.a
    }

    /// `B(x, y) = xᵀ A y`.
    pub fn bilinear(&self, x: &[i64], y: &[i64]) -> i64 {
        self.a.iter().zip(x).map(|(row, xi)| xi * row.iter().zip(y).map(|(a, yj)| a * yj).sum::<i64>()).sum()
    }

    /// `B(x, α_i)`.
    pub fn pair_with_simple(&self, x: &[i64], i: usize) -> i64 {
        self.a[i].iter().zip(x).map(|(a, xj)| a * xj).sum()
    }

    pub fn to_matrix(&self) -> Matrix {
        let r = self.rank();
        Matrix::from_fn(r, r, |i, j| Rational::from(self.a[i][j]))
    }

    fn minor(&self, idx: &[usize]) -> BigInt {
        if idx.is_empty() {
            return BigInt::from(1);
        }
        let m = self.to_matrix().select_rows(idx).select_columns(idx);
        m.determinant().expect("square").to_integer().expect("integer determinant")
    }

    pub fn determinant(&self) -> BigInt {
        self.minor(&(0..self.rank()).collect::<Vec<_>>())
    }

    /// Leading principal minors, top-left `1×1` through the full matrix.
    pub fn leading_minors(&self) -> Vec<BigInt> {
        (1..=self.rank()).map(|k| self.minor(&(0..k).collect::<Vec<_>>())).collect()
    }

    /// Sylvester's criterion on the leading minors.
    pub fn is_positive_definite(&self) -> bool {
        self.leading_minors().iter().all(Signed::is_positive)
    }

    /// Every principal minor is nonnegative.
    pub fn is_positive_semidefinite(&self) -> bool {
        let r = self.rank();
        (1u64..1 << r).all(|mask| {
            let idx: Vec<usize> = (0..r).filter(|&i| mask >> i & 1 == 1).collect();
            !self.minor(&idx).is_negative()
        })
    }
}

/// Dynkin, affine or indefinite, decided by exact minors; definite and
/// affine graphs are then named by shape.
pub fn classify(g: &Graph) -> Result<Classification, RootSysError> {
    if !g.is_connected() {
        return Err(RootSysError::Disconnected);
    }
    let c = CartanMatrix::from_graph(g);
    if c.is_positive_definite() {
        let name = match_shape(g, true).ok_or_else(|| RootSysError::Malformed("definite but unmatched".into()))?;
        return Ok(Classification::Dynkin(name.parse()?));
    }
    if c.is_positive_semidefinite() {
        return Ok(Classification::Affine(match_shape(g, false)));
    }
    Ok(Classification::Indefinite)
}
