use serde::{Deserialize, Deserializer, Serialize};

use crate::exact::Rational;
use crate::linalg::Matrix;

use super::quiver::Quiver;
use super::QuiverError;

/// A vertex space `k^{dims[i]}` at each vertex and a `dims[t] × dims[s]`
/// matrix on each arrow `s → t`.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct QuiverRep {
    quiver: Quiver,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl QuiverRep {
    pub fn new(quiver: Quiver, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self, QuiverError> {
        if dims.len() != quiver.vertices() {
            return Err(QuiverError::Malformed(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                quiver.vertices()
            )));
        }
        if maps.len() != quiver.arrows().len() {
            return Err(QuiverError::Malformed(format!(
                "{} maps for {} arrows",
                maps.len(),
                quiver.arrows().len()
            )));
        }
        for (h, (m, &(s, t))) in maps.iter().zip(quiver.arrows()).enumerate() {
            if m.shape() != (dims[t], dims[s]) {
                return Err(QuiverError::ShapeMismatch { arrow: h, expected: (dims[t], dims[s]), found: m.shape() });
            }
        }
        Ok(QuiverRep { quiver, dims, maps })
    }

    pub fn zero(quiver: &Quiver) -> Self {
        let maps = quiver.arrows().iter().map(|_| Matrix::zeros(0, 0)).collect();
        QuiverRep { quiver: quiver.clone(), dims: vec![0; quiver.vertices()], maps }
    }

    /// `k` at vertex `i`, zero elsewhere.
    pub fn simple(quiver: &Quiver, i: usize) -> Self {
        let mut dims = vec![0; quiver.vertices()];
        dims[i] = 1;
        let maps = quiver.arrows().iter().map(|&(s, t)| Matrix::zeros(dims[t], dims[s])).collect();
        QuiverRep { quiver: quiver.clone(), dims, maps }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_vector(&self) -> Vec<i64> {
        self.dims.iter().map(|&d| d as i64).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map(&self, h: usize) -> &Matrix {
        &self.maps[h]
    }

    pub fn direct_sum(&self, other: &QuiverRep) -> Result<QuiverRep, QuiverError> {
        if self.quiver != other.quiver {
            return Err(QuiverError::QuiverMismatch);
        }
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.block_diag(b)).collect();
        Ok(QuiverRep { quiver: self.quiver.clone(), dims, maps })
    }

    pub fn direct_sum_all<'a>(quiver: &Quiver, reps: impl IntoIterator<Item = &'a QuiverRep>) -> Result<QuiverRep, QuiverError> {
        reps.into_iter().try_fold(QuiverRep::zero(quiver), |acc, r| acc.direct_sum(r))
    }

    /// `x_h ↦ g_t x_h g_s⁻¹` for invertible `g_i` at each vertex.
    pub fn change_basis(&self, g: &[Matrix]) -> Result<QuiverRep, QuiverError> {
        if g.len() != self.dims.len() || g.iter().zip(&self.dims).any(|(m, &d)| m.shape() != (d, d)) {
            return Err(QuiverError::Malformed("base change shapes do not match the dimensions".into()));
        }
        let inv = g.iter().map(Matrix::inverse).collect::<Result<Vec<_>, _>>()?;
        let maps = self
            .maps
            .iter()
            .zip(self.quiver.arrows())
            .map(|(x, &(s, t))| g[t].mul(x).and_then(|m| m.mul(&inv[s])))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(QuiverRep { quiver: self.quiver.clone(), dims: self.dims.clone(), maps })
    }
}

#[derive(Deserialize)]
struct RepFile {
    quiver: Quiver,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl<'de> Deserialize<'de> for QuiverRep {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let f = RepFile::deserialize(d)?;
        QuiverRep::new(f.quiver, f.dims, f.maps).map_err(serde::de::Error::custom)
    }
}

/// `dim Hom(a, b)`: families `φ_i : a_i → b_i` with `y_h φ_s = φ_t x_h` on
/// every arrow `h : s → t`, counted as the nullity of that linear system.
pub fn hom_dim(a: &QuiverRep, b: &QuiverRep) -> Result<usize, QuiverError> {
    if a.quiver != b.quiver {
        return Err(QuiverError::QuiverMismatch);
    }
    let n = a.dims.len();
    let mut offset = vec![0; n + 1];
    for i in 0..n {
        offset[i + 1] = offset[i] + a.dims[i] * b.dims[i];
    }
    let unknowns = offset[n];
    let var = |i: usize, r: usize, c: usize| offset[i] + r * a.dims[i] + c;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (h, &(s, t)) in a.quiver.arrows().iter().enumerate() {
        let (x, y) = (&a.maps[h], &b.maps[h]);
        for r in 0..b.dims[t] {
            for c in 0..a.dims[s] {
                let mut eq = vec![Rational::zero(); unknowns];
                for k in 0..b.dims[s] {
                    let v = eq[var(s, k, c)].clone() + y.get(r, k);
                    eq[var(s, k, c)] = v;
                }
                for k in 0..a.dims[t] {
                    let v = eq[var(t, r, k)].clone() - x.get(k, c);
                    eq[var(t, r, k)] = v;
                }
                if eq.iter().any(|e| !e.is_zero()) {
                    rows.push(eq);
                }
            }
        }
    }
    if rows.is_empty() {
        return Ok(unknowns);
    }
    let m = Matrix::from_rows(rows, unknowns)?;
    Ok(unknowns - m.rank())
}

/// `dim End(V) = 1`.
pub fn is_indecomposable(v: &QuiverRep) -> Result<bool, QuiverError> {
    Ok(!v.is_zero() && hom_dim(v, v)? == 1)
}
