use std::collections::VecDeque;

use crate::exact::{zeta, Cyclotomic};
use crate::permgroup::{PermGroup, Permutation};

use super::{ChartabError, CharacterRow, CharacterTable};

/// Generators with repeats and redundant ones dropped.
fn reduced_generators(g: &PermGroup) -> Vec<Permutation> {
    let mut kept: Vec<Permutation> = Vec::new();
    let mut span = PermGroup::from_generators(g.degree(), vec![]).expect("trivial group");
    for s in g.generators() {
        if span.contains(s) {
            continue;
        }
        kept.push(s.clone());
        span = PermGroup::from_generators(g.degree(), kept.clone()).expect("subgroup of a finite group");
    }
    kept
}

/// Exponents `e(x)` with `χ(x) = ζ_N^{e(x)}` for the assignment
/// `χ(s_i) = ζ_N^{k_i}`, or `None` if the assignment is not a homomorphism.
fn extend_assignment(g: &PermGroup, gens: &[Permutation], ks: &[u64], n: u64) -> Option<Vec<u64>> {
    let mut exps: Vec<Option<u64>> = vec![None; g.order()];
    exps[0] = Some(0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let ex = exps[x].expect("visited");
        for (s, &k) in gens.iter().zip(ks) {
            let y = g.index_of(&s.compose(g.element(x))).expect("closed");
            let ey = (ex + k) % n;
            match exps[y] {
                None => {
                    exps[y] = Some(ey);
                    queue.push_back(y);
                }
                Some(prev) if prev != ey => return None,
                Some(_) => {}
            }
        }
    }
    exps.into_iter().collect()
}

/// The character group of an abelian group: one linear character for each
/// consistent choice of roots of unity on a reduced generating set.
pub fn abelian_dual_table(g: &PermGroup) -> Result<CharacterTable, ChartabError> {
    if !g.is_abelian() {
        return Err(ChartabError::NotAbelian(g.name().to_string()));
    }
    let gens = reduced_generators(g);
    let n = g.exponent();
    let orders: Vec<u64> = gens.iter().map(Permutation::order).collect();
    let mut rows = Vec::new();
    let mut choice = vec![0u64; gens.len()];
    loop {
        let ks: Vec<u64> = choice.iter().zip(&orders).map(|(&m, &o)| m * (n / o)).collect();
        if let Some(exps) = extend_assignment(g, &gens, &ks, n) {
            let values: Vec<Cyclotomic> = g
                .classes()
                .iter()
                .map(|c| zeta(n as usize, exps[c.members[0]] as i64))
                .collect();
            let label: Vec<String> = choice.iter().map(u64::to_string).collect();
            rows.push(CharacterRow { name: format!("chi({})", label.join(",")), degree: 1, values });
        }
        // odometer over the choices
        let mut pos = 0;
        loop {
            if pos == choice.len() {
                return CharacterTable::new(g.layout(), rows);
            }
            choice[pos] += 1;
            if choice[pos] < orders[pos] {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}
