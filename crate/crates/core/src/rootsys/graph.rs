use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::RootSysError;

/// An undirected multigraph on `0..r` given by its symmetric edge
/// multiplicity matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    mult: Vec<Vec<u32>>,
}

impl Graph {
    pub fn new(vertices: usize, edges: &[(usize, usize, u32)]) -> Result<Self, RootSysError> {
        let mut mult = vec![vec![0; vertices]; vertices];
        for &(i, j, m) in edges {
            if i >= vertices || j >= vertices {
                return Err(RootSysError::VertexOutOfRange(i.max(j), vertices));
            }
            if i == j {
                return Err(RootSysError::SelfLoop(i));
            }
            mult[i][j] += m;
            mult[j][i] += m;
        }
        Ok(Graph { mult })
    }

    pub fn from_multiplicities(mult: Vec<Vec<u32>>) -> Result<Self, RootSysError> {
        let r = mult.len();
        for (i, row) in mult.iter().enumerate() {
            if row.len() != r {
                return Err(RootSysError::Malformed(format!("row {i} has length {}", row.len())));
            }
            if row[i] != 0 {
                return Err(RootSysError::SelfLoop(i));
            }
            for j in 0..r {
                if mult[j][i] != row[j] {
                    return Err(RootSysError::Malformed(format!("entries ({i},{j}) and ({j},{i}) differ")));
                }
            }
        }
        Ok(Graph { mult })
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i, 1)).collect();
        Graph::new(n, &edges).expect("path")
    }

    /// The cycle on `n ≥ 2` vertices; for `n = 2` a double edge.
    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i, 1)).collect();
        if n >= 2 {
            edges.push((n - 1, 0, 1));
        }
        Graph::new(n, &edges).expect("cycle")
    }

    /// A central vertex 0 with arms of the given lengths.
    pub fn star(arms: &[usize]) -> Self {
        let n = 1 + arms.iter().sum::<usize>();
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in arms {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next, 1));
                prev = next;
                next += 1;
            }
        }
        Graph::new(n, &edges).expect("star")
    }

    /// The standard diagram of a simply-laced Dynkin type: `A_n` a path,
    /// `D_n` and `E_n` a path with one extra vertex (the last) attached near
    /// its start.
    pub fn dynkin(t: DynkinType) -> Self {
        let n = t.rank;
        match t.family {
            Family::A => Graph::path(n),
            Family::D | Family::E => {
                let attach = if t.family == Family::D { n - 3 } else { 2 };
                let mut edges: Vec<_> = (1..n - 1).map(|i| (i - 1, i, 1)).collect();
                edges.push((attach, n - 1, 1));
                Graph::new(n, &edges).expect("dynkin")
            }
        }
    }

    pub fn vertices(&self) -> usize {
        self.mult.len()
    }

    pub fn multiplicity(&self, i: usize, j: usize) -> u32 {
        self.mult[i][j]
    }

    pub fn multiplicities(&self) -> &[Vec<u32>] {
        &self.mult
    }

    /// Edges `(i, j, m)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize, u32)> {
        let r = self.vertices();
        (0..r)
            .flat_map(|i| (i + 1..r).filter(move |&j| self.mult[i][j] > 0).map(move |j| (i, j, self.mult[i][j])))
            .collect()
    }

    /// Number of edge ends at `i`, counted with multiplicity.
    pub fn degree(&self, i: usize) -> u32 {
        self.mult[i].iter().sum()
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.vertices()).filter(|&j| self.mult[i][j] > 0).collect()
    }

    pub fn is_connected(&self) -> bool {
        let r = self.vertices();
        if r == 0 {
            return false;
        }
        let mut seen = vec![false; r];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(i) = queue.pop_front() {
            for j in self.neighbors(i) {
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected()
            && self.edges().iter().all(|e| e.2 == 1)
            && self.edges().len() + 1 == self.vertices()
    }
}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    vertices: usize,
    edges: Vec<(usize, usize, u32)>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GraphFile { vertices: self.vertices(), edges: self.edges() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let f = GraphFile::deserialize(d)?;
        Graph::new(f.vertices, &f.edges).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E,
}

/// A simply-laced Dynkin type `A_n (n ≥ 1)`, `D_n (n ≥ 4)`, `E_6`, `E_7`, `E_8`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct DynkinType {
    pub family: Family,
    pub rank: usize,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootSysError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if ok {
            Ok(DynkinType { family, rank })
        } else {
            Err(RootSysError::UnknownType(format!("{family:?}{rank}")))
        }
    }

    pub fn a(n: usize) -> Self {
        DynkinType::new(Family::A, n).expect("A_n")
    }

    pub fn d(n: usize) -> Self {
        DynkinType::new(Family::D, n).expect("D_n")
    }

    pub fn e(n: usize) -> Self {
        DynkinType::new(Family::E, n).expect("E_n")
    }

    /// Every type of rank at most `max_rank`.
    pub fn all_up_to(max_rank: usize) -> Vec<DynkinType> {
        let mut out: Vec<_> = (1..=max_rank).map(DynkinType::a).collect();
        out.extend((4..=max_rank).map(DynkinType::d));
        out.extend((6..=max_rank.min(8)).map(DynkinType::e));
        out
    }

    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * (n + 1) / 2,
            (Family::D, _) => n * (n - 1),
            (Family::E, 6) => 36,
            (Family::E, 7) => 63,
            _ => 120,
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A_{}", self.rank),
            Family::D => write!(f, "D_{}", self.rank),
            Family::E => write!(f, "E{}", self.rank),
        }
    }
}

impl FromStr for DynkinType {
    type Err = RootSysError;

    /// `A3`, `A_3`, `D4`, `E8`, case-insensitive.
    fn from_str(s: &str) -> Result<Self, RootSysError> {
        let bad = || RootSysError::UnknownType(s.to_string());
        let t = s.trim();
        let mut chars = t.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => return Err(bad()),
        };
        let rank = chars.as_str().trim_start_matches('_').parse::<usize>().map_err(|_| bad())?;
        DynkinType::new(family, rank).map_err(|_| bad())
    }
}

/// Outcome of classifying a connected graph by its quadratic form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Classification {
    Dynkin(DynkinType),
    /// Positive semidefinite but not definite; the name of the matched
    /// extended diagram, when there is one.
    Affine(Option<String>),
    Indefinite,
}

impl Classification {
    pub fn is_dynkin(&self) -> bool {
        matches!(self, Classification::Dynkin(_))
    }

    pub fn is_affine(&self) -> bool {
        matches!(self, Classification::Affine(_))
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Dynkin(t) => write!(f, "{t}"),
            Classification::Affine(Some(name)) => write!(f, "affine ({name})"),
            Classification::Affine(None) => write!(f, "affine (unnamed)"),
            Classification::Indefinite => write!(f, "indefinite"),
        }
    }
}

/// Arm lengths from the branch vertex of a tree with exactly one vertex of
/// degree greater than two, sorted ascending.
fn arms(g: &Graph, center: usize) -> Vec<usize> {
    let mut out: Vec<usize> = g
        .neighbors(center)
        .into_iter()
        .map(|start| {
            let (mut prev, mut cur, mut len) = (center, start, 1);
            loop {
                let next: Vec<usize> = g.neighbors(cur).into_iter().filter(|&x| x != prev).collect();
                if next.len() != 1 {
                    return len;
                }
                prev = cur;
                cur = next[0];
                len += 1;
            }
        })
        .collect();
    out.sort_unstable();
    out
}

/// Names a tree or cycle by shape; `definite` selects between the finite
/// and the extended lists.
pub(crate) fn match_shape(g: &Graph, definite: bool) -> Option<String> {
    let r = g.vertices();
    let degrees: Vec<u32> = (0..r).map(|i| g.degree(i)).collect();
    if !g.is_tree() {
        if definite {
            return None;
        }
        if r == 2 && g.multiplicity(0, 1) == 2 {
            return Some("A~1".into());
        }
        let simple_cycle = r >= 3 && degrees.iter().all(|&d| d == 2) && g.edges().iter().all(|e| e.2 == 1);
        return simple_cycle.then(|| format!("A~{}", r - 1));
    }
    let branches: Vec<usize> = (0..r).filter(|&i| degrees[i] > 2).collect();
    match branches.as_slice() {
        [] => definite.then(|| DynkinType::a(r).to_string()),
        [c] => {
            let a = arms(g, *c);
            let name = match (definite, a.as_slice()) {
                (true, [1, 1, k]) => DynkinType::d(k + 3).to_string(),
                (true, [1, 2, 2]) => "E6".into(),
                (true, [1, 2, 3]) => "E7".into(),
                (true, [1, 2, 4]) => "E8".into(),
                (false, [1, 1, 1, 1]) => "D~4".into(),
                (false, [2, 2, 2]) => "E~6".into(),
                (false, [1, 3, 3]) => "E~7".into(),
                (false, [1, 2, 5]) => "E~8".into(),
                _ => return None,
            };
            Some(name)
        }
        [b1, b2] if !definite => {
            let forks = [*b1, *b2].iter().all(|&b| degrees[b] == 3 && {
                let leaves = g.neighbors(b).into_iter().filter(|&x| degrees[x] == 1).count();
                leaves >= 2
            });
            forks.then(|| format!("D~{}", r - 1))
        }
        _ => None,
    }
}
