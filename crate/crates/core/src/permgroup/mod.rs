//! Finite permutation groups with fully enumerated elements and classes.

mod named;
mod perm;
mod subgroup;

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chartab::{ClassInfo, ClassLayout};

pub use named::{cyclic, dihedral, direct_product, named_group, quaternion, symmetric, alternating};
pub use perm::Permutation;
pub use subgroup::SubgroupView;

pub const DEFAULT_BOUND: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermGroupError {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("generator of degree {found} in a group of degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group has more than {0} elements")]
    BoundExceeded(usize),
    #[error("{0} is not an element of the group")]
    NotInGroup(String),
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: Permutation,
    pub size: usize,
    /// Indices into [`PermGroup::elements`].
    pub members: Vec<usize>,
    pub centralizer_order: usize,
    pub element_order: u64,
}

/// A permutation group with its elements enumerated breadth-first from the
/// identity and its conjugacy classes ordered by element order, class size
/// and then lexicographically smallest representative.
#[derive(Debug, Clone)]
pub struct PermGroup {
    name: String,
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
    exponent: u64,
    layout: Arc<ClassLayout>,
}

/// Serialized group input: `{"degree": m, "generators": [[...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl PermGroup {
    pub fn from_generators(degree: usize, gens: Vec<Permutation>) -> Result<Self, PermGroupError> {
        Self::from_generators_bounded(degree, gens, DEFAULT_BOUND)
    }

    pub fn from_generators_bounded(
        degree: usize,
        gens: Vec<Permutation>,
        bound: usize,
    ) -> Result<Self, PermGroupError> {
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(PermGroupError::DegreeMismatch { expected: degree, found: g.degree() });
        }
        let id = Permutation::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(e) = queue.pop_front() {
            for s in &gens {
                let next = s.compose(&elements[e]);
                if !index.contains_key(&next) {
                    if elements.len() >= bound {
                        return Err(PermGroupError::BoundExceeded(bound));
                    }
                    index.insert(next.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(next);
                }
            }
        }

        let gen_inverses: Vec<Permutation> = gens.iter().map(Permutation::inverse).collect();
        let mut class_id = vec![usize::MAX; elements.len()];
        let mut raw: Vec<Vec<usize>> = Vec::new();
        for start in 0..elements.len() {
            if class_id[start] != usize::MAX {
                continue;
            }
            let cid = raw.len();
            class_id[start] = cid;
            let mut members = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for (s, si) in gens.iter().zip(&gen_inverses) {
                    let c = s.compose(&elements[x]).compose(si);
                    let ci = index[&c];
                    if class_id[ci] == usize::MAX {
                        class_id[ci] = cid;
                        members.push(ci);
                        queue.push_back(ci);
                    }
                }
            }
            members.sort_unstable();
            raw.push(members);
        }

        let order = elements.len();
        let mut classes: Vec<ConjugacyClass> = raw
            .into_iter()
            .map(|members| {
                let rep = members.iter().map(|&m| &elements[m]).min().expect("nonempty class").clone();
                ConjugacyClass {
                    element_order: rep.order(),
                    representative: rep,
                    size: members.len(),
                    centralizer_order: order / members.len(),
                    members,
                }
            })
            .collect();
        classes.sort_by(|a, b| {
            (a.element_order, a.size, &a.representative).cmp(&(b.element_order, b.size, &b.representative))
        });
        let mut class_of = vec![0; order];
        for (ci, c) in classes.iter().enumerate() {
            for &m in &c.members {
                class_of[m] = ci;
            }
        }
        let exponent = classes.iter().fold(1u64, |acc, c| acc.lcm(&c.element_order));
        let mut group = PermGroup {
            name: format!("<{} generators on {degree} points>", gens.len()),
            degree,
            generators: gens,
            elements,
            index,
            classes,
            class_of,
            exponent,
            layout: Arc::new(ClassLayout {
                name: String::new(),
                group_order: 0,
                classes: vec![],
                power2: None,
                inverse: None,
            }),
        };
        group.rebuild_layout();
        Ok(group)
    }

    pub fn from_spec(spec: &GroupSpec) -> Result<Self, PermGroupError> {
        Self::from_generators(spec.degree, spec.generators.clone())
    }

    pub fn spec(&self) -> GroupSpec {
        GroupSpec { degree: self.degree, generators: self.generators.clone() }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self.rebuild_layout();
        self
    }

    fn rebuild_layout(&mut self) {
        let classes = self
            .classes
            .iter()
            .map(|c| ClassInfo {
                label: c.representative.cycle_string(),
                size: c.size as u64,
                element_order: c.element_order,
                rep: Some(c.representative.images().to_vec()),
                descriptor: None,
            })
            .collect();
        self.layout = Arc::new(ClassLayout {
            name: self.name.clone(),
            group_order: self.order() as u64,
            classes,
            power2: Some(self.power_class_map(2)),
            inverse: Some(self.power_class_map(-1)),
        });
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Class index of the element with the given index.
    pub fn class_of_element(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn class_index_of(&self, p: &Permutation) -> Option<usize> {
        self.index_of(p).map(|i| self.class_of[i])
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn layout(&self) -> Arc<ClassLayout> {
        self.layout.clone()
    }

    /// For each class, the class containing `rep^k`.
    pub fn power_class_map(&self, k: i64) -> Vec<usize> {
        self.classes
            .iter()
            .map(|c| self.class_index_of(&c.representative.pow(k)).expect("closed under powers"))
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .enumerate()
            .all(|(i, a)| self.generators[i + 1..].iter().all(|b| a.compose(b) == b.compose(a)))
    }

    /// Number of elements with `g² = 1`, the identity included.
    pub fn involution_count(&self) -> usize {
        self.elements.iter().filter(|g| g.compose(g).is_identity()).count()
    }

    pub fn multiply(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].compose(&self.elements[b])]
    }

    pub fn inverse_index(&self, a: usize) -> usize {
        self.index[&self.elements[a].inverse()]
    }
}
