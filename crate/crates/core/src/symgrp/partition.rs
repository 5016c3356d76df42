use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::SymError;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, SymError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymError::NotAPartition(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `λ_j`, zero beyond the last part.
    pub fn part(&self, j: usize) -> usize {
        self.0.get(j).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        Partition((1..=first).map(|k| self.0.iter().filter(|&&p| p >= k).count()).collect())
    }

    /// `Σ (i - j)` over cells in column `i`, row `j` (both from 1).
    pub fn content(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(row, &len)| (1..=len).map(|col| col as i64 - (row as i64 + 1)).sum::<i64>())
            .sum()
    }

    pub fn hook_length(&self, row: usize, col: usize) -> usize {
        let arm = self.0[row] - col - 1;
        let leg = self.0[row + 1..].iter().filter(|&&p| p > col).count();
        arm + leg + 1
    }

    /// `n! / ∏ h(i,j)`.
    pub fn hook_dim(&self) -> BigInt {
        let mut hooks = BigInt::one();
        for (row, &len) in self.0.iter().enumerate() {
            for col in 0..len {
                hooks *= self.hook_length(row, col);
            }
        }
        factorial(self.size()) / hooks
    }

    /// Partitions obtained by removing one corner cell.
    pub fn removable(&self) -> Vec<Partition> {
        (0..self.0.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| {
                let mut p = self.0.clone();
                p[i] -= 1;
                Partition::from_unsorted(p)
            })
            .collect()
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = SymError;
    fn try_from(v: Vec<usize>) -> Result<Self, SymError> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = SymError;

    /// Comma lists such as `3,1,1`; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self, SymError> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Partition(vec![]));
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| SymError::NotAPartition(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            prefix.push(k);
            go(rest - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Multiplicities `(i_1, i_2, …, i_n)` of cycle lengths.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct CycleType(Vec<usize>);

impl CycleType {
    pub fn new(mult: Vec<usize>) -> Self {
        let mut mult = mult;
        while mult.last() == Some(&0) {
            mult.pop();
        }
        CycleType(mult)
    }

    /// The cycle type whose cycle lengths are the parts of `p`.
    pub fn from_partition(p: &Partition) -> Self {
        let mut mult = vec![0; p.part(0)];
        for &m in p.parts() {
            mult[m - 1] += 1;
        }
        CycleType(mult)
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::new();
        for (i, &k) in self.0.iter().enumerate().rev() {
            parts.extend(std::iter::repeat(i + 1).take(k));
        }
        Partition(parts)
    }

    /// `i_m`.
    pub fn mult(&self, m: usize) -> usize {
        if m == 0 {
            0
        } else {
            self.0.get(m - 1).copied().unwrap_or(0)
        }
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &k)| (i + 1) * k).sum()
    }

    /// `∏ m^{i_m} i_m!`, the order of the centralizer.
    pub fn centralizer_order(&self) -> BigInt {
        self.0
            .iter()
            .enumerate()
            .fold(BigInt::one(), |acc, (i, &k)| acc * BigInt::from(i + 1).pow(k as u32) * factorial(k))
    }

    /// `n! / ∏ m^{i_m} i_m!`.
    pub fn class_size(&self) -> BigInt {
        factorial(self.size()) / self.centralizer_order()
    }

    /// Sign of the permutations in the class.
    pub fn sign(&self) -> i64 {
        let even_cycles: usize = self.0.iter().enumerate().filter(|(i, _)| (i + 1) % 2 == 0).map(|(_, &k)| k).sum();
        if even_cycles % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Cycle type of the square of a permutation of this type.
    pub fn square(&self) -> CycleType {
        let mut parts = Vec::new();
        for &m in self.to_partition().parts() {
            if m % 2 == 1 {
                parts.push(m);
            } else {
                parts.extend([m / 2, m / 2]);
            }
        }
        CycleType::from_partition(&Partition::from_unsorted(parts))
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_partition())
    }
}

impl FromStr for CycleType {
    type Err = SymError;

    /// Cycle lengths as a comma list: `2,2,1` is two 2-cycles and a fixed point.
    fn from_str(s: &str) -> Result<Self, SymError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(CycleType(vec![]));
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| SymError::NotAPartition(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        if parts.contains(&0) {
            return Err(SymError::NotAPartition(s.to_string()));
        }
        Ok(CycleType::from_partition(&Partition::from_unsorted(parts)))
    }
}
