use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact::Field;
use crate::linalg::Matrix;

use super::partition::Partition;
use super::SymError;

/// `x^e` for any integer `e`; negative powers need `x ≠ 0`.
pub fn field_pow<F: Field>(x: &F, e: i64) -> Result<F, SymError> {
    let base = if e < 0 { x.try_inv().map_err(|_| SymError::DegenerateSpecialization)? } else { x.clone() };
    let mut out = F::one();
    let mut sq = base;
    let mut k = e.unsigned_abs();
    while k > 0 {
        if k & 1 == 1 {
            out = out * &sq;
        }
        sq = sq.clone() * &sq;
        k >>= 1;
    }
    Ok(out)
}

fn padded(lambda: &Partition, n: usize) -> Result<Vec<i64>, SymError> {
    if lambda.len() > n {
        return Err(SymError::TooManyParts { parts: lambda.len(), vars: n });
    }
    Ok((0..n).map(|j| lambda.part(j) as i64).collect())
}

/// The alternant `det(x_i^{e_j})`.
fn alternant<F: Field>(points: &[F], exps: &[i64]) -> Result<F, SymError> {
    let n = points.len();
    let mut rows = Vec::with_capacity(n);
    for x in points {
        rows.push(exps.iter().map(|&e| field_pow(x, e)).collect::<Result<Vec<_>, _>>()?);
    }
    let m = Matrix::from_rows(rows, n).expect("square alternant");
    Ok(m.determinant().expect("square alternant"))
}

/// `S_λ(x_1,…,x_N) = det(x_i^{λ_j+N−j}) / det(x_i^{N−j})` at `N` distinct points.
pub fn schur_eval<F: Field>(lambda: &Partition, points: &[F]) -> Result<F, SymError> {
    let n = points.len();
    let lam = padded(lambda, n)?;
    for i in 0..n {
        for j in i + 1..n {
            if points[i] == points[j] {
                return Err(SymError::RepeatedPoints(i, j));
            }
        }
    }
    let rho: Vec<i64> = (0..n).map(|j| (n - 1 - j) as i64).collect();
    let shifted: Vec<i64> = lam.iter().zip(&rho).map(|(l, r)| l + r).collect();
    let num = alternant(points, &shifted)?;
    let den = alternant(points, &rho)?;
    let inv = den.try_inv().map_err(|_| SymError::DegenerateSpecialization)?;
    Ok(num * &inv)
}

/// `S_λ(1, z, …, z^{N−1}) = ∏_{i<j} (z^{λ_i−i} − z^{λ_j−j}) / (z^{−i} − z^{−j})`.
pub fn schur_geometric<F: Field>(lambda: &Partition, n: usize, z: &F) -> Result<F, SymError> {
    let lam = padded(lambda, n)?;
    let mut num = F::one();
    let mut den = F::one();
    for i in 1..=n {
        for j in i + 1..=n {
            let (li, lj) = (lam[i - 1], lam[j - 1]);
            let (i, j) = (i as i64, j as i64);
            num = num * (field_pow(z, li - i)? - field_pow(z, lj - j)?);
            den = den * (field_pow(z, -i)? - field_pow(z, -j)?);
        }
    }
    let inv = den.try_inv().map_err(|_| SymError::DegenerateSpecialization)?;
    Ok(num * &inv)
}

/// `S_λ(1, …, 1)` in `N` variables, which is `dim L_λ`.
pub fn schur_all_ones(lambda: &Partition, n: usize) -> Result<BigInt, SymError> {
    let lam = padded(lambda, n)?;
    gl_dim(&lam, n)
}

/// `dim L_λ = ∏_{i<j} (λ_i − λ_j + j − i)/(j − i)` for a weakly decreasing
/// integer weight, padded with zeros to length `N`.
pub fn gl_dim(lambda: &[i64], n: usize) -> Result<BigInt, SymError> {
    if lambda.len() > n {
        return Err(SymError::TooManyParts { parts: lambda.len(), vars: n });
    }
    let mut lam = lambda.to_vec();
    lam.resize(n, 0);
    if lam.windows(2).any(|w| w[0] < w[1]) {
        return Err(SymError::NotMonotone(format!("{lam:?}")));
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= lam[i] - lam[j] + (j - i) as i64;
            den *= (j - i) as i64;
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    Ok(q)
}
