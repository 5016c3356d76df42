use serde::{Deserialize, Deserializer, Serialize};

use crate::rootsys::{DynkinType, Graph, RootSysError};

use super::QuiverError;

/// A directed multigraph on `0..n`; arrow `h` runs from `arrows[h].0` to
/// `arrows[h].1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Quiver {
    vertices: usize,
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn new(vertices: usize, arrows: Vec<(usize, usize)>) -> Result<Self, QuiverError> {
        for &(s, t) in &arrows {
            if s >= vertices || t >= vertices {
                return Err(QuiverError::VertexOutOfRange(s.max(t), vertices));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    /// The Dynkin diagram of `t` with every edge `i - j` (`i < j`) oriented
    /// `i → j`.
    pub fn dynkin(t: DynkinType) -> Self {
        let g = Graph::dynkin(t);
        Quiver { vertices: g.vertices(), arrows: g.edges().into_iter().map(|(i, j, _)| (i, j)).collect() }
    }

    /// `D_4` with the three outer vertices `0, 1, 2` pointing at the center `3`.
    pub fn d4_inward() -> Self {
        Quiver { vertices: 4, arrows: vec![(0, 3), (1, 3), (2, 3)] }
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn source(&self, h: usize) -> usize {
        self.arrows[h].0
    }

    pub fn target(&self, h: usize) -> usize {
        self.arrows[h].1
    }

    /// Arrows ending at `i`, in arrow order.
    pub fn incoming(&self, i: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&h| self.arrows[h].1 == i).collect()
    }

    /// Arrows starting at `i`, in arrow order.
    pub fn outgoing(&self, i: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&h| self.arrows[h].0 == i).collect()
    }

    pub fn is_sink(&self, i: usize) -> bool {
        self.arrows.iter().all(|&(s, _)| s != i)
    }

    pub fn is_source(&self, i: usize) -> bool {
        self.arrows.iter().all(|&(_, t)| t != i)
    }

    /// The quiver with every arrow at `i` turned around; arrow indices are
    /// kept.
    pub fn reverse_at(&self, i: usize) -> Quiver {
        let arrows =
            self.arrows.iter().map(|&(s, t)| if s == i || t == i { (t, s) } else { (s, t) }).collect();
        Quiver { vertices: self.vertices, arrows }
    }

    /// The underlying graph; fails on self-loops.
    pub fn graph(&self) -> Result<Graph, RootSysError> {
        let edges: Vec<_> = self.arrows.iter().map(|&(s, t)| (s, t, 1)).collect();
        Graph::new(self.vertices, &edges)
    }
}

#[derive(Deserialize)]
struct QuiverFile {
    vertices: usize,
    arrows: Vec<(usize, usize)>,
}

impl<'de> Deserialize<'de> for Quiver {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let f = QuiverFile::deserialize(d)?;
        Quiver::new(f.vertices, f.arrows).map_err(serde::de::Error::custom)
    }
}

/// Vertices in label order `1, …, n`: label `n` goes to a sink, `n − 1` to
/// a sink of what remains, and so on, always taking the lowest-index sink.
pub fn admissible_ordering(q: &Quiver) -> Result<Vec<usize>, QuiverError> {
    let n = q.vertices();
    let mut removed = vec![false; n];
    let mut reversed = Vec::with_capacity(n);
    for _ in 0..n {
        let sink = (0..n)
            .find(|&i| !removed[i] && q.arrows().iter().all(|&(s, t)| s != i || removed[t]))
            .ok_or(QuiverError::DirectedCycle)?;
        removed[sink] = true;
        reversed.push(sink);
    }
    reversed.reverse();
    Ok(reversed)
}
