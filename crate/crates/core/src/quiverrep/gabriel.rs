use std::collections::BTreeMap;

use crate::linalg::Matrix;
use crate::rootsys::{classify, enumerate_roots, height, is_positive, reflect, CartanMatrix, Classification, RootVector};

use super::quiver::{admissible_ordering, Quiver};
use super::rep::{hom_dim, QuiverRep};
use super::QuiverError;

fn empty_map(rows: usize) -> Matrix {
    Matrix::zeros(rows, 0)
}

/// `F_i⁺`: at the sink `i` the space becomes `ker(⊕_{j→i} V_j → V_i)` and
/// each reversed arrow carries the projection of that kernel onto its
/// summand. On input that is not surjective at `i` this is `F_i⁺` of the
/// part surjective at `i`.
pub fn reflect_sink(v: &QuiverRep, i: usize) -> Result<QuiverRep, QuiverError> {
    let q = v.quiver();
    if !q.is_sink(i) {
        return Err(QuiverError::NotSink(i));
    }
    let incoming = q.incoming(i);
    let mut phi = empty_map(v.dims()[i]);
    for &h in &incoming {
        phi = phi.hstack(v.map(h))?;
    }
    let kernel = phi.kernel_basis();
    let k = kernel.cols();
    let mut dims = v.dims().to_vec();
    dims[i] = k;
    let mut maps = v.maps().to_vec();
    let mut row = 0;
    for &h in &incoming {
        let d = v.dims()[q.source(h)];
        maps[h] = kernel.submatrix(row, row + d, 0, k);
        row += d;
    }
    QuiverRep::new(q.reverse_at(i), dims, maps)
}

/// `F_i⁻`: at the source `i` the space becomes `coker(V_i → ⊕_{i→j} V_j)`,
/// realized on the complement basis of the image, and each reversed arrow
/// carries the summand inclusion followed by the quotient map.
pub fn reflect_source(v: &QuiverRep, i: usize) -> Result<QuiverRep, QuiverError> {
    let q = v.quiver();
    if !q.is_source(i) {
        return Err(QuiverError::NotSource(i));
    }
    let outgoing = q.outgoing(i);
    let mut psi = Matrix::zeros(0, v.dims()[i]);
    for &h in &outgoing {
        psi = psi.vstack(v.map(h))?;
    }
    let total = psi.rows();
    let (image, complement) = psi.image_and_complement();
    let c = complement.cols();
    let quotient = if total == 0 {
        Matrix::zeros(0, 0)
    } else {
        let basis = image.hstack(&complement)?.inverse()?;
        basis.submatrix(image.cols(), total, 0, total)
    };
    let mut dims = v.dims().to_vec();
    dims[i] = c;
    let mut maps = v.maps().to_vec();
    let mut col = 0;
    for &h in &outgoing {
        let d = v.dims()[q.target(h)];
        maps[h] = quotient.submatrix(0, c, col, col + d);
        col += d;
    }
    QuiverRep::new(q.reverse_at(i), dims, maps)
}

/// The admissible sink sequence `k_1, k_2, …`: labels `n, n−1, …, 1`,
/// repeated. After each full round the quiver is back to itself.
struct SinkSequence {
    order: Vec<usize>,
    step: usize,
}

impl SinkSequence {
    fn new(q: &Quiver) -> Result<Self, QuiverError> {
        Ok(SinkSequence { order: admissible_ordering(q)?, step: 0 })
    }
}

impl Iterator for SinkSequence {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        let n = self.order.len();
        if n == 0 {
            return None;
        }
        let k = self.order[n - 1 - self.step % n];
        self.step += 1;
        Some(k)
    }
}

/// Cartan matrix and positive roots of a quiver whose graph is Dynkin.
fn dynkin_data(q: &Quiver) -> Result<(CartanMatrix, Vec<RootVector>), QuiverError> {
    let g = q.graph()?;
    match classify(&g)? {
        Classification::Dynkin(_) => {
            let c = CartanMatrix::from_graph(&g);
            let roots = enumerate_roots(&c)?.positive;
            Ok((c, roots))
        }
        other => Err(QuiverError::NotFiniteType(other.to_string())),
    }
}

fn step_limit(q: &Quiver, roots: usize) -> usize {
    2 * q.vertices() * (roots + 2)
}

fn indecomposable_with(q: &Quiver, c: &CartanMatrix, roots: &[RootVector], alpha: &[i64]) -> Result<QuiverRep, QuiverError> {
    if !roots.iter().any(|r| r.as_slice() == alpha) {
        return Err(QuiverError::NotPositiveRoot(alpha.to_vec()));
    }
    let mut word = Vec::new();
    let mut quiver = q.clone();
    let mut beta = alpha.to_vec();
    let mut sinks = SinkSequence::new(q)?;
    for _ in 0..step_limit(q, roots.len()) {
        let k = sinks.next().expect("nonempty quiver");
        let next = reflect(c, k, &beta);
        if !is_positive(&next) {
            debug_assert_eq!(beta.iter().sum::<i64>(), 1, "only a simple root turns negative");
            let mut v = QuiverRep::simple(&quiver, k);
            for &s in word.iter().rev() {
                v = reflect_source(&v, s)?;
            }
            return Ok(v);
        }
        beta = next;
        quiver = quiver.reverse_at(k);
        word.push(k);
    }
    Err(QuiverError::StepLimit)
}

/// The indecomposable with dimension vector `α`, obtained by reflecting
/// `α` along the admissible sink sequence down to a simple root `α_i` and
/// applying the matching source reflections to the simple at `i`.
pub fn indecomposable_for_root(q: &Quiver, alpha: &[i64]) -> Result<QuiverRep, QuiverError> {
    let (c, roots) = dynkin_data(q)?;
    indecomposable_with(q, &c, &roots, alpha)
}

/// One indecomposable per positive root, in root order.
pub fn enumerate_indecomposables(q: &Quiver) -> Result<Vec<(RootVector, QuiverRep)>, QuiverError> {
    let (c, roots) = dynkin_data(q)?;
    roots
        .iter()
        .map(|alpha| indecomposable_with(q, &c, &roots, alpha).map(|v| (alpha.clone(), v)))
        .collect()
}

/// Multiplicities of the indecomposable summands, keyed by dimension
/// vector and listed in root order.
///
/// Walks the sink sequence: at sink `k` the cokernel of the incoming sum
/// map splits off as copies of the simple at `k`, recorded as the root
/// `s_{k_1} ⋯ s_{k_{t−1}} α_k` of the original quiver, and the rest is
/// replaced by `F_k⁺`.
pub fn decompose(v: &QuiverRep) -> Result<Vec<(RootVector, usize)>, QuiverError> {
    let q = v.quiver().clone();
    let (c, roots) = dynkin_data(&q)?;
    let mut found: BTreeMap<(i64, RootVector), usize> = BTreeMap::new();
    let mut word: Vec<usize> = Vec::new();
    let mut current = v.clone();
    let mut sinks = SinkSequence::new(&q)?;
    let limit = step_limit(&q, roots.len());
    while !current.is_zero() {
        if word.len() >= limit {
            return Err(QuiverError::StepLimit);
        }
        let k = sinks.next().expect("nonempty quiver");
        let cq = current.quiver();
        let mut phi = empty_map(current.dims()[k]);
        for h in cq.incoming(k) {
            phi = phi.hstack(current.map(h))?;
        }
        let split = current.dims()[k] - phi.rank();
        if split > 0 {
            let mut beta = vec![0; q.vertices()];
            beta[k] = 1;
            for &s in word.iter().rev() {
                beta = reflect(&c, s, &beta);
            }
            *found.entry((height(&beta), beta)).or_insert(0) += split;
        }
        current = reflect_sink(&current, k)?;
        word.push(k);
    }
    let out: Vec<(RootVector, usize)> = found.into_iter().map(|((_, r), m)| (r, m)).collect();
    let mut total = vec![0i64; q.vertices()];
    for (r, m) in &out {
        for (t, x) in total.iter_mut().zip(r) {
            *t += x * *m as i64;
        }
    }
    if total != v.dim_vector() {
        return Err(QuiverError::Inconsistent(format!("summands add up to {total:?}")));
    }
    Ok(out)
}

/// Isomorphism on a Dynkin quiver: equal `dim Hom(X, −)` for every
/// indecomposable `X`, which determines a representation up to
/// isomorphism.
pub fn isomorphic(a: &QuiverRep, b: &QuiverRep) -> Result<bool, QuiverError> {
    if a.quiver() != b.quiver() {
        return Err(QuiverError::QuiverMismatch);
    }
    if a.dims() != b.dims() {
        return Ok(false);
    }
    for (_, x) in enumerate_indecomposables(a.quiver())? {
        if hom_dim(&x, a)? != hom_dim(&x, b)? {
            return Ok(false);
        }
    }
    Ok(true)
}
