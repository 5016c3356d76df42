use std::collections::{HashSet, VecDeque};

use crate::exact::Rational;
use crate::linalg::Matrix;

use super::cartan::CartanMatrix;
use super::RootSysError;

/// Coordinates in the basis of simple roots `α_i`.
pub type RootVector = Vec<i64>;

pub fn height(v: &[i64]) -> i64 {
    v.iter().sum()
}

pub fn is_positive(v: &[i64]) -> bool {
    v.iter().all(|&x| x >= 0) && v.iter().any(|&x| x > 0)
}

pub fn simple_root(rank: usize, i: usize) -> RootVector {
    let mut v = vec![0; rank];
    v[i] = 1;
    v
}

/// `s_i(v) = v − B(v, α_i) α_i`.
pub fn reflect(c: &CartanMatrix, i: usize, v: &[i64]) -> RootVector {
    let mut out = v.to_vec();
    out[i] -= c.pair_with_simple(v, i);
    out
}

/// Roots sorted by height, then lexicographically; the negatives are the
/// positives negated, in the same order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootSet {
    pub positive: Vec<RootVector>,
    pub negative: Vec<RootVector>,
}

impl RootSet {
    pub fn total(&self) -> usize {
        self.positive.len() + self.negative.len()
    }

    pub fn all(&self) -> impl Iterator<Item = &RootVector> {
        self.negative.iter().rev().chain(&self.positive)
    }
}

pub fn sort_roots(roots: &mut [RootVector]) {
    roots.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| a.cmp(b)));
}

/// Closure of the simple roots under the simple reflections.
pub fn enumerate_roots(c: &CartanMatrix) -> Result<RootSet, RootSysError> {
    if !c.is_positive_definite() {
        return Err(RootSysError::NotDefinite);
    }
    let r = c.rank();
    let mut seen: HashSet<RootVector> = HashSet::new();
    let mut queue: VecDeque<RootVector> = VecDeque::new();
    for i in 0..r {
        let a = simple_root(r, i);
        seen.insert(a.clone());
        queue.push_back(a);
    }
    while let Some(v) = queue.pop_front() {
        for i in 0..r {
            let w = reflect(c, i, &v);
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    let mut positive: Vec<RootVector> = seen.iter().filter(|v| is_positive(v)).cloned().collect();
    sort_roots(&mut positive);
    let negative = positive.iter().map(|v| v.iter().map(|x| -x).collect()).collect();
    Ok(RootSet { positive, negative })
}

pub const DEFAULT_WEYL_BOUND: usize = 100_000;

/// `|W|` counted as the orbit of `ρ = (1, …, 1)` in fundamental-weight
/// coordinates, where `s_i` acts by `c ↦ c − c_i · A_i` and the orbit of a
/// regular weight is in bijection with `W`. `None` when the orbit grows
/// past `bound`.
pub fn weyl_group_order(c: &CartanMatrix, bound: usize) -> Result<Option<usize>, RootSysError> {
    if !c.is_positive_definite() {
        return Err(RootSysError::NotDefinite);
    }
    let r = c.rank();
    let rho = vec![1i64; r];
    let mut seen: HashSet<Vec<i64>> = HashSet::from([rho.clone()]);
    let mut queue = VecDeque::from([rho]);
    while let Some(v) = queue.pop_front() {
        for i in 0..r {
            let ci = v[i];
            let w: Vec<i64> = v.iter().zip(c.rows()[i].iter()).map(|(x, a)| x - ci * a).collect();
            if seen.insert(w.clone()) {
                if seen.len() > bound {
                    return Ok(None);
                }
                queue.push_back(w);
            }
        }
    }
    Ok(Some(seen.len()))
}

/// Matrix of `s_i` acting on root coordinates (columns are images of the
/// simple roots).
pub fn reflection_matrix(c: &CartanMatrix, i: usize) -> Matrix {
    let r = c.rank();
    Matrix::from_fn(r, r, |row, col| {
        let v = reflect(c, i, &simple_root(r, col));
        Rational::from(v[row])
    })
}

#[derive(Clone, PartialEq, Debug)]
pub struct Coxeter {
    pub labeling: Vec<usize>,
    pub matrix: Matrix,
    pub order: u64,
    /// `det(c − Id)`, nonzero when 1 is not an eigenvalue.
    pub det_minus_identity: Rational,
}

pub const COXETER_ORDER_BOUND: u64 = 1000;

/// `c = s_{l_1} s_{l_2} ⋯ s_{l_r}` for the labeling `l`, with its order.
pub fn coxeter(c: &CartanMatrix, labeling: &[usize]) -> Result<Coxeter, RootSysError> {
    let r = c.rank();
    let mut sorted = labeling.to_vec();
    sorted.sort_unstable();
    if sorted != (0..r).collect::<Vec<_>>() {
        return Err(RootSysError::Malformed(format!("{labeling:?} is not a labeling of {r} vertices")));
    }
    let mut m = Matrix::identity(r);
    for &i in labeling {
        m = m.mul(&reflection_matrix(c, i)).expect("square");
    }
    let id = Matrix::identity(r);
    let det_minus_identity = m.sub(&id).expect("square").determinant().expect("square");
    let mut power = m.clone();
    let mut order = 1;
    while power != id {
        if order >= COXETER_ORDER_BOUND {
            return Err(RootSysError::InfiniteOrder(COXETER_ORDER_BOUND));
        }
        power = power.mul(&m).expect("square");
        order += 1;
    }
    Ok(Coxeter { labeling: labeling.to_vec(), matrix: m, order, det_minus_identity })
}
