use crate::exact::{Cyclotomic, Rational};
use crate::permgroup::SubgroupView;

use super::classfn::same_group;
use super::{ChartabError, ClassFunction};

/// Mackey's formula, summed literally over `x ∈ G`:
/// `Ind f(g) = (1/|H|) Σ_{x : xgx⁻¹ ∈ H} f(xgx⁻¹)`.
pub fn induce(sub: &SubgroupView, f: &ClassFunction) -> Result<ClassFunction, ChartabError> {
    let h = sub.subgroup();
    let g = sub.parent();
    if !same_group(f.layout(), &h.layout()) {
        return Err(ChartabError::GroupMismatch(f.layout().name.clone(), h.name().to_string()));
    }
    let scale = Rational::new(1, h.order()).expect("nonempty subgroup");
    let values = g
        .classes()
        .iter()
        .map(|c| {
            let rep = &c.representative;
            // count how often each H-class is hit, then weight once per class
            let mut hits = vec![0u64; h.num_classes()];
            for x in g.elements() {
                let conj = x.compose(rep).compose(&x.inverse());
                if let Some(hc) = h.class_index_of(&conj) {
                    hits[hc] += 1;
                }
            }
            let sum: Cyclotomic = hits
                .iter()
                .enumerate()
                .filter(|(_, &n)| n > 0)
                .map(|(hc, &n)| f.value(hc).scale(&Rational::from(n)))
                .sum();
            sum.scale(&scale)
        })
        .collect();
    ClassFunction::new(g.layout(), values)
}

/// Restriction along the class fusion `H → G`.
pub fn restrict(sub: &SubgroupView, f: &ClassFunction) -> Result<ClassFunction, ChartabError> {
    let g = sub.parent();
    if !same_group(f.layout(), &g.layout()) {
        return Err(ChartabError::GroupMismatch(f.layout().name.clone(), g.name().to_string()));
    }
    let values = sub.fusion().iter().map(|&gc| f.value(gc).clone()).collect();
    ClassFunction::new(sub.subgroup().layout(), values)
}
