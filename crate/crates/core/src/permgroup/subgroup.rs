use std::sync::Arc;

use super::{PermGroup, PermGroupError, Permutation};

/// A subgroup `H ⊂ G` with its own class data and the fusion of its
/// classes into those of `G`.
#[derive(Debug, Clone)]
pub struct SubgroupView {
    parent: Arc<PermGroup>,
    sub: Arc<PermGroup>,
    parent_index: Vec<usize>,
    fusion: Vec<usize>,
}

impl SubgroupView {
    pub fn new(parent: Arc<PermGroup>, h_gens: Vec<Permutation>) -> Result<Self, PermGroupError> {
        for g in &h_gens {
            if g.degree() != parent.degree() {
                return Err(PermGroupError::DegreeMismatch { expected: parent.degree(), found: g.degree() });
            }
            if !parent.contains(g) {
                return Err(PermGroupError::NotInGroup(g.to_string()));
            }
        }
        let sub = PermGroup::from_generators(parent.degree(), h_gens)?;
        Ok(Self::from_groups(parent, Arc::new(sub)))
    }

    /// `sub` must consist of elements of `parent` on the same points.
    pub fn from_groups(parent: Arc<PermGroup>, sub: Arc<PermGroup>) -> Self {
        let parent_index: Vec<usize> = sub
            .elements()
            .iter()
            .map(|h| parent.index_of(h).expect("subgroup element lies in the parent"))
            .collect();
        let fusion = sub
            .classes()
            .iter()
            .map(|c| parent.class_index_of(&c.representative).expect("class representative in parent"))
            .collect();
        SubgroupView { parent, sub, parent_index, fusion }
    }

    pub fn parent(&self) -> &Arc<PermGroup> {
        &self.parent
    }

    pub fn subgroup(&self) -> &Arc<PermGroup> {
        &self.sub
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.sub.order()
    }

    /// Index in the parent of each subgroup element.
    pub fn parent_index(&self) -> &[usize] {
        &self.parent_index
    }

    /// Parent class containing each subgroup class.
    pub fn fusion(&self) -> &[usize] {
        &self.fusion
    }
}

#[cfg(test)]
mod tests {
    use super::super::{symmetric, alternating};
    use super::*;

    fn perm(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn subgroups_of_s3_and_s4() {
        let s3 = Arc::new(symmetric(3));
        let z2 = SubgroupView::new(s3.clone(), vec![perm(3, &[&[0, 1]])]).unwrap();
        assert_eq!(z2.index(), 3);
        assert_eq!(z2.subgroup().num_classes(), 2);
        assert_eq!(z2.fusion(), &[0, 1]);
        let z3 = SubgroupView::new(s3, vec![perm(3, &[&[0, 1, 2]])]).unwrap();
        assert_eq!(z3.index(), 2);
        let s4 = Arc::new(symmetric(4));
        let s3in4 = SubgroupView::new(s4, vec![perm(4, &[&[0, 1]]), perm(4, &[&[0, 1, 2]])]).unwrap();
        assert_eq!(s3in4.index(), 4);
    }

    #[test]
    fn foreign_generators_are_rejected() {
        let a4 = Arc::new(alternating(4));
        let r = SubgroupView::new(a4.clone(), vec![perm(4, &[&[0, 1]])]);
        assert!(matches!(r, Err(PermGroupError::NotInGroup(_))));
        let r = SubgroupView::new(a4, vec![perm(3, &[&[0, 1, 2]])]);
        assert!(matches!(r, Err(PermGroupError::DegreeMismatch { .. })));
    }
}
