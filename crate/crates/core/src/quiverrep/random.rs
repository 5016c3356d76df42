//! Random instances for round-trip checks.

use std::collections::BTreeMap;

use rand::Rng;

use crate::exact::Rational;
use crate::linalg::Matrix;
use crate::rootsys::{height, RootVector};

use super::quiver::Quiver;
use super::rep::QuiverRep;
use super::QuiverError;

/// Entries uniform in `-range..=range`.
pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, range: i64) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| Rational::from(rng.gen_range(-range..=range)))
}

/// A small-integer matrix with nonzero determinant.
pub fn random_invertible<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    loop {
        let m = random_matrix(rng, n, n, 3);
        if !m.determinant().expect("square").is_zero() {
            return m;
        }
    }
}

/// `v` conjugated by independent random invertible matrices at each vertex.
pub fn random_base_change<R: Rng>(rng: &mut R, v: &QuiverRep) -> Result<QuiverRep, QuiverError> {
    let g: Vec<Matrix> = v.dims().iter().map(|&d| random_invertible(rng, d)).collect();
    v.change_basis(&g)
}

/// A representation with the given dimensions and random maps.
pub fn random_rep<R: Rng>(rng: &mut R, q: &Quiver, dims: &[usize]) -> Result<QuiverRep, QuiverError> {
    let maps = q.arrows().iter().map(|&(s, t)| random_matrix(rng, dims[t], dims[s], 2)).collect();
    QuiverRep::new(q.clone(), dims.to_vec(), maps)
}

/// A direct sum of between one and `max_summands` of the given
/// indecomposables with total dimension at most `max_total`, returned with
/// its multiset of dimension vectors in root order.
pub fn random_direct_sum<R: Rng>(
    rng: &mut R,
    q: &Quiver,
    indecomposables: &[(RootVector, QuiverRep)],
    max_summands: usize,
    max_total: usize,
) -> Result<(QuiverRep, Vec<(RootVector, usize)>), QuiverError> {
    let count = rng.gen_range(1..=max_summands);
    let mut picked: BTreeMap<(i64, RootVector), usize> = BTreeMap::new();
    let mut parts = Vec::new();
    let mut total = 0;
    for _ in 0..count {
        let (root, v) = &indecomposables[rng.gen_range(0..indecomposables.len())];
        if total + v.total_dim() > max_total {
            continue;
        }
        total += v.total_dim();
        *picked.entry((height(root), root.clone())).or_insert(0) += 1;
        parts.push(v);
    }
    let sum = QuiverRep::direct_sum_all(q, parts)?;
    Ok((sum, picked.into_iter().map(|((_, r), m)| (r, m)).collect()))
}
