use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A polynomial in `nvars` variables with integer coefficients, stored as a
/// map from exponent vectors to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        SparsePoly { nvars, terms: BTreeMap::from([(vec![0; nvars], BigInt::one())]) }
    }

    /// `H_m = Σ_i x_i^m`.
    pub fn power_sum(nvars: usize, m: u32) -> Self {
        let mut p = SparsePoly::zero(nvars);
        for i in 0..nvars {
            let mut e = vec![0; nvars];
            e[i] = m;
            p.add_term(e, BigInt::one());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, coeff: BigInt) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length");
        let entry = self.terms.entry(exps).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Product keeping only monomials whose exponents are componentwise at
    /// most `bound`.
    pub fn mul_bounded(&self, other: &SparsePoly, bound: &[u32]) -> SparsePoly {
        let mut out: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                if e.iter().zip(bound).any(|(x, b)| x > b) {
                    continue;
                }
                *out.entry(e).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        out.retain(|_, c| !c.is_zero());
        SparsePoly { nvars: self.nvars, terms: out }
    }

    pub fn mul(&self, other: &SparsePoly) -> SparsePoly {
        self.mul_bounded(other, &vec![u32::MAX; self.nvars])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squares() {
        let h1 = SparsePoly::power_sum(2, 1);
        let sq = h1.mul(&h1);
        assert_eq!(sq.coefficient(&[1, 1]), BigInt::from(2));
        assert_eq!(sq.coefficient(&[2, 0]), BigInt::from(1));
        assert_eq!(sq.len(), 3);
        let pruned = h1.mul_bounded(&h1, &[1, 1]);
        assert_eq!(pruned.len(), 1);
    }

    #[test]
    fn cancellation_removes_terms() {
        let mut p = SparsePoly::one(1);
        p.add_term(vec![0], BigInt::from(-1));
        assert!(p.is_empty());
    }
}
