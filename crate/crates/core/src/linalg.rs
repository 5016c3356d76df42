//! Dense exact linear algebra over a [`Field`].

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::exact::{Field, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
}

/// Dense row-major matrix. Zero-row and zero-column shapes are allowed.
#[derive(Clone, PartialEq)]
pub struct Matrix<T: Field = Rational> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Field> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    /// Builds from nested rows; `cols` is needed to shape a matrix with no rows.
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Result<Self, LinalgError> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(LinalgError::DimensionMismatch(format!(
                "row of length {} in a matrix with {cols} columns",
                bad.len()
            )));
        }
        let r = rows.len();
        Ok(Matrix { rows: r, cols, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    /// Integer matrix from row slices, all of equal length.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_fn(rows.len(), cols, |i, j| T::from_i64(rows[i][j]))
    }

    /// A single column vector.
    pub fn column_vector(v: Vec<T>) -> Self {
        let n = v.len();
        Matrix { rows: n, cols: 1, entries: v }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(T::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::<T>::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.entries[idx] = out.entries[idx].clone() + &(a.clone() * b);
                    }
                }
            }
        }
        Ok(out)
    }

    fn same_shape(&self, other: &Self, what: &str) -> Result<(), LinalgError> {
        if self.shape() != other.shape() {
            return Err(LinalgError::DimensionMismatch(format!(
                "cannot {what} {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinalgError> {
        self.same_shape(other, "add")?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.clone() + b).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinalgError> {
        self.same_shape(other, "subtract")?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a.clone() - b).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn scale(&self, c: &T) -> Self {
        let entries = self.entries.iter().map(|a| a.clone() * c).collect();
        Matrix { rows: self.rows, cols: self.cols, entries }
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.rows != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "hstack of {} and {} rows",
                self.rows, other.rows
            )));
        }
        Ok(Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    /// `[self; other]`.
    pub fn vstack(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "vstack of {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, entries })
    }

    pub fn block_diag(&self, other: &Self) -> Self {
        Matrix::from_fn(self.rows + other.rows, self.cols + other.cols, |i, j| {
            if i < self.rows && j < self.cols {
                self.get(i, j).clone()
            } else if i >= self.rows && j >= self.cols {
                other.get(i - self.rows, j - self.cols).clone()
            } else {
                T::zero()
            }
        })
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Matrix::from_fn(idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        Matrix::from_fn(self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    /// Rows `r0..r1` and columns `c0..c1`.
    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        Matrix::from_fn(r1 - r0, c1 - c0, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// Reduced row echelon form together with its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            m.swap_rows(r, p);
            let inv = m.get(r, c).try_inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j).clone() * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let pv = m.get(r, j);
                    if pv.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j).clone() - &(f.clone() * pv);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Columns form a basis of the null space.
    pub fn kernel_basis(&self) -> Self {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(self.cols, free.len());
        for (col, &f) in free.iter().enumerate() {
            k.set(f, col, T::one());
            for (i, &p) in pivots.iter().enumerate() {
                k.set(p, col, -r.get(i, f).clone());
            }
        }
        k
    }

    /// A basis of the column space and a complement spanned by standard
    /// basis vectors at the non-pivot positions of the echelon form of the
    /// transpose.
    pub fn image_and_complement(&self) -> (Self, Self) {
        let (r, pivots) = self.transpose().rref();
        let n = self.rows;
        let image = r.submatrix(0, pivots.len(), 0, n).transpose();
        let rest: Vec<usize> = (0..n).filter(|k| !pivots.contains(k)).collect();
        let complement = Matrix::from_fn(n, rest.len(), |i, j| if rest[j] == i { T::one() } else { T::zero() });
        (image, complement)
    }

    /// A particular solution of `self · X = rhs`, or `None` if inconsistent.
    pub fn solve(&self, rhs: &Self) -> Result<Option<Self>, LinalgError> {
        if rhs.rows != self.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "system has {} equations but right-hand side has {} rows",
                self.rows, rhs.rows
            )));
        }
        let (r, pivots) = self.hstack(rhs)?.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.cols, rhs.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(p, j, r.get(i, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<Self, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let (r, pivots) = self.hstack(&Matrix::identity(n))?.rref();
        if pivots.len() < n || pivots[..n].iter().enumerate().any(|(i, &p)| p != i) {
            return Err(LinalgError::Singular);
        }
        Ok(r.submatrix(0, n, n, 2 * n))
    }

    pub fn determinant(&self) -> Result<T, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut m = self.clone();
        let n = self.rows;
        let mut det = T::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else { return Ok(T::zero()) };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            let inv = pivot.try_inv().expect("nonzero pivot");
            det = det * &pivot;
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone() * &inv;
                for j in c..n {
                    let v = m.get(i, j).clone() - &(f.clone() * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    pub fn pow(&self, exp: u32) -> Result<Self, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut result = Matrix::identity(self.rows);
        for _ in 0..exp {
            result = result.mul(self)?;
        }
        Ok(result)
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }
}

impl<T: Field + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(|x| x.to_string()).collect()).collect();
        let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        for row in &cells {
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

impl<T: Field> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{}{:?}", self.rows, self.cols, self.to_rows())
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr<T> {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<T>>,
}

impl<T: Field + Serialize> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        MatrixRepr { rows: self.rows, cols: self.cols, entries: self.to_rows() }.serialize(serializer)
    }
}

impl<'de, T: Field + Deserialize<'de>> Deserialize<'de> for Matrix<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = MatrixRepr::<T>::deserialize(deserializer)?;
        if repr.entries.len() != repr.rows {
            return Err(D::Error::custom(format!(
                "matrix declares {} rows but lists {}",
                repr.rows,
                repr.entries.len()
            )));
        }
        Matrix::from_rows(repr.entries, repr.cols).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(rows: &[&[i64]]) -> Matrix {
        Matrix::from_ints(rows)
    }

    #[test]
    fn rref_examples() {
        let i2 = Matrix::<Rational>::identity(2);
        assert_eq!(i2.rref(), (i2.clone(), vec![0, 1]));
        let (r, p) = q(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r, q(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
        let empty = Matrix::<Rational>::zeros(0, 3);
        assert_eq!(empty.rref(), (empty.clone(), vec![]));
    }

    #[test]
    fn kernels() {
        let k = q(&[&[1, 1]]).kernel_basis();
        assert_eq!(k, q(&[&[-1], &[1]]));
        assert_eq!(Matrix::<Rational>::identity(3).kernel_basis().cols(), 0);
        let m = q(&[&[1, 1]]);
        assert!(m.mul(&k).unwrap().is_zero());
    }

    #[test]
    fn images_and_complements() {
        let (im, co) = q(&[&[1], &[0]]).image_and_complement();
        assert_eq!(im, q(&[&[1], &[0]]));
        assert_eq!(co, q(&[&[0], &[1]]));
        let (_, co) = Matrix::<Rational>::identity(2).image_and_complement();
        assert_eq!(co.shape(), (2, 0));
        let (im, co) = q(&[&[1, 1], &[1, 1]]).image_and_complement();
        assert_eq!((im.cols(), co.cols()), (1, 1));
        let (im, co) = Matrix::<Rational>::zeros(2, 0).image_and_complement();
        assert_eq!((im.shape(), co.shape()), ((2, 0), (2, 2)));
    }

    #[test]
    fn solving() {
        let b = q(&[&[3], &[4]]);
        assert_eq!(Matrix::identity(2).solve(&b).unwrap(), Some(b.clone()));
        let m = q(&[&[1, 1]]);
        let x = m.solve(&q(&[&[2]])).unwrap().unwrap();
        assert_eq!(m.mul(&x).unwrap(), q(&[&[2]]));
        assert_eq!(q(&[&[0]]).solve(&q(&[&[1]])).unwrap(), None);
        assert!(matches!(m.solve(&b), Err(LinalgError::DimensionMismatch(_))));
    }

    #[test]
    fn inverse_and_determinant() {
        let m = q(&[&[2, 1], &[7, 4]]);
        assert_eq!(m.determinant().unwrap(), Rational::from(1));
        assert_eq!(m.mul(&m.inverse().unwrap()).unwrap(), Matrix::identity(2));
        assert_eq!(q(&[&[1, 2], &[2, 4]]).inverse(), Err(LinalgError::Singular));
        assert_eq!(q(&[&[0, 1], &[1, 0]]).determinant().unwrap(), Rational::from(-1));
        assert_eq!(Matrix::<Rational>::zeros(0, 0).determinant().unwrap(), Rational::one());
    }

    #[test]
    fn json_shape() {
        let m = q(&[&[1, 2]]);
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"rows":1,"cols":2,"entries":[["1/1","2/1"]]}"#);
        assert_eq!(serde_json::from_str::<Matrix>(&s).unwrap(), m);
        let z = Matrix::<Rational>::zeros(2, 0);
        let back: Matrix = serde_json::from_str(&serde_json::to_string(&z).unwrap()).unwrap();
        assert_eq!(back.shape(), (2, 0));
    }

    fn matrix() -> impl Strategy<Value = Matrix> {
        (0usize..=8, 0usize..=8).prop_flat_map(|(r, c)| {
            prop::collection::vec(-3i64..=3, r * c).prop_map(move |v| {
                Matrix::new(r, c, v.into_iter().map(Rational::from).collect()).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(96))]

        #[test]
        fn rank_nullity(m in matrix()) {
            let k = m.kernel_basis();
            prop_assert_eq!(m.rank() + k.cols(), m.cols());
            prop_assert!(m.mul(&k).unwrap().is_zero());
            prop_assert_eq!(k.rank(), k.cols());
        }

        #[test]
        fn rref_is_idempotent(m in matrix()) {
            let (r, p) = m.rref();
            prop_assert_eq!(r.rref(), (r.clone(), p));
        }

        #[test]
        fn image_plus_complement_is_everything(m in matrix()) {
            let (im, co) = m.image_and_complement();
            prop_assert_eq!(im.cols(), m.rank());
            let both = im.hstack(&co).unwrap();
            prop_assert_eq!(both.rank(), m.rows());
            prop_assert_eq!(both.cols(), m.rows());
            prop_assert_eq!(m.hstack(&im).unwrap().rank(), m.rank());
        }

        #[test]
        fn solve_by_substitution(m in matrix(), seed in prop::collection::vec(-3i64..=3, 8)) {
            let x0 = Matrix::column_vector(
                (0..m.cols()).map(|i| Rational::from(seed[i])).collect());
            let b = m.mul(&x0).unwrap();
            let x = m.solve(&b).unwrap().expect("consistent by construction");
            prop_assert_eq!(m.mul(&x).unwrap(), b);
        }
    }
}
