use std::collections::VecDeque;
use std::sync::Arc;

use crate::exact::{Cyclotomic, Rational};
use crate::permgroup::{self, PermGroup, Permutation};

use super::classfn::same_group;
use super::{abelian_dual_table, ChartabError, CharacterRow, CharacterTable};

/// `G ⋉ A` as a regular permutation group together with its character
/// table. Point `g·|A| + a` stands for the pair `(a, g)`.
#[derive(Debug, Clone)]
pub struct SemidirectProduct {
    pub group: Arc<PermGroup>,
    pub table: CharacterTable,
    /// Orbits of `G` on the rows of the dual of `A`, in order of their
    /// smallest member.
    pub orbits: Vec<Vec<usize>>,
}

/// The automorphism of `a` (as a permutation of element indices) sending
/// generator `i` to `images[i]`.
pub fn automorphism_from_images(a: &PermGroup, images: &[Permutation]) -> Result<Permutation, ChartabError> {
    let gens = a.generators();
    if images.len() != gens.len() {
        return Err(ChartabError::InvalidAction(format!(
            "{} generator images for {} generators",
            images.len(),
            gens.len()
        )));
    }
    let mut map: Vec<Option<usize>> = vec![None; a.order()];
    map[0] = Some(0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let fx = a.element(map[x].expect("visited")).clone();
        for (s, img) in gens.iter().zip(images) {
            let y = a.index_of(&s.compose(a.element(x))).expect("closed");
            let fy = a
                .index_of(&img.compose(&fx))
                .ok_or_else(|| ChartabError::InvalidAction(format!("{img} is not in {}", a.name())))?;
            match map[y] {
                None => {
                    map[y] = Some(fy);
                    queue.push_back(y);
                }
                Some(prev) if prev != fy => {
                    return Err(ChartabError::InvalidAction("generator images do not define a homomorphism".into()))
                }
                Some(_) => {}
            }
        }
    }
    let images: Vec<usize> = map.into_iter().map(|m| m.expect("all elements reached")).collect();
    Permutation::new(images).map_err(|_| ChartabError::InvalidAction("map is not bijective".into()))
}

fn is_automorphism(a: &PermGroup, phi: &Permutation) -> bool {
    (0..a.order()).all(|x| {
        (0..a.order()).all(|y| phi.apply(a.multiply(x, y)) == a.multiply(phi.apply(x), phi.apply(y)))
    })
}

/// Extends the action of the generators of `g` to every element.
fn extend_action(g: &PermGroup, a: &PermGroup, action: &[Permutation]) -> Result<Vec<Permutation>, ChartabError> {
    if action.len() != g.generators().len() {
        return Err(ChartabError::InvalidAction(format!(
            "{} automorphisms for {} generators",
            action.len(),
            g.generators().len()
        )));
    }
    for phi in action {
        if phi.degree() != a.order() || !is_automorphism(a, phi) {
            return Err(ChartabError::InvalidAction(format!("{phi:?} is not an automorphism of {}", a.name())));
        }
    }
    let mut act: Vec<Option<Permutation>> = vec![None; g.order()];
    act[0] = Some(Permutation::identity(a.order()));
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let ax = act[x].clone().expect("visited");
        for (s, phi) in g.generators().iter().zip(action) {
            let y = g.index_of(&s.compose(g.element(x))).expect("closed");
            let ay = phi.compose(&ax);
            match &act[y] {
                None => {
                    act[y] = Some(ay);
                    queue.push_back(y);
                }
                Some(prev) if *prev != ay => {
                    return Err(ChartabError::InvalidAction("action is not a homomorphism".into()))
                }
                Some(_) => {}
            }
        }
    }
    Ok(act.into_iter().map(|p| p.expect("all elements reached")).collect())
}

/// Irreducible characters of `G ⋉ A` for abelian `A`, one for each pair of
/// an orbit `O` of `G` on the dual of `A` and an irreducible `U` of the
/// stabilizer `G_x` of its first member, with values
/// `χ(a,g) = (1/|G_x|) Σ_{h : hgh⁻¹ ∈ G_x} x(h(a)) χ_U(hgh⁻¹)`.
///
/// `action[i]` is the automorphism of `a` (on element indices) by which the
/// `i`-th generator of `g` acts. Stabilizers other than `G` itself must be
/// abelian.
pub fn semidirect_table(
    g: &PermGroup,
    g_table: &CharacterTable,
    a: &PermGroup,
    action: &[Permutation],
) -> Result<SemidirectProduct, ChartabError> {
    if !a.is_abelian() {
        return Err(ChartabError::NotAbelian(a.name().to_string()));
    }
    if !same_group(g_table.layout(), &g.layout()) {
        return Err(ChartabError::GroupMismatch(g_table.layout().name.clone(), g.name().to_string()));
    }
    let act = extend_action(g, a, action)?;
    let na = a.order();
    let point = |gi: usize, ai: usize| gi * na + ai;
    let degree = g.order() * na;

    let mut gens = Vec::new();
    for s in g.generators() {
        let si = g.index_of(s).expect("generator in group");
        gens.push(Permutation::new(
            (0..degree).map(|p| point(g.multiply(si, p / na), act[si].apply(p % na))).collect(),
        )?);
    }
    for t in a.generators() {
        let ti = a.index_of(t).expect("generator in group");
        gens.push(Permutation::new((0..degree).map(|p| point(p / na, a.multiply(ti, p % na))).collect())?);
    }
    let product = PermGroup::from_generators(degree, gens)?
        .with_name(format!("{}:{}", a.name(), g.name()));

    let dual = abelian_dual_table(a)?;
    let x_value = |j: usize, ai: usize| &dual.rows()[j].values[a.class_of_element(ai)];
    let m = dual.num_rows();
    let find_row = |values: Vec<Cyclotomic>| dual.rows().iter().position(|r| r.values == values);
    // result[h][j]: the row of h·x_j, where (h·x)(a) = x(h⁻¹(a))
    let moved: Vec<Vec<usize>> = (0..g.order())
        .map(|h| {
            let inv = act[h].inverse();
            (0..m)
                .map(|j| {
                    let mut vals = vec![Cyclotomic::zero(); a.num_classes()];
                    for ai in 0..na {
                        vals[a.class_of_element(ai)] = x_value(j, inv.apply(ai)).clone();
                    }
                    find_row(vals).expect("G permutes the characters of A")
                })
                .collect()
        })
        .collect();

    let mut seen = vec![false; m];
    let mut orbits = Vec::new();
    for j in 0..m {
        if seen[j] {
            continue;
        }
        let mut orbit: Vec<usize> = (0..g.order()).map(|h| moved[h][j]).collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &o in &orbit {
            seen[o] = true;
        }
        orbits.push(orbit);
    }

    let class_pairs: Vec<(usize, usize)> = product
        .classes()
        .iter()
        .map(|c| {
            let p = c.representative.apply(0);
            (p % na, p / na)
        })
        .collect();

    let mut rows = Vec::new();
    for orbit in &orbits {
        let x = orbit[0];
        let stab: Vec<usize> = (0..g.order()).filter(|&h| moved[h][x] == x).collect();
        let in_stab = |k: usize| stab.binary_search(&k).is_ok();
        // characters of the stabilizer as functions of G-element indices
        let (u_rows, u_value): (Vec<CharacterRow>, Box<dyn Fn(usize, &CharacterRow) -> Cyclotomic>) =
            if stab.len() == g.order() {
                (g_table.rows().to_vec(), Box::new(|k: usize, r: &CharacterRow| r.values[g.class_of_element(k)].clone()))
            } else {
                let sub_gens: Vec<Permutation> = stab.iter().skip(1).map(|&k| g.element(k).clone()).collect();
                let sub = PermGroup::from_generators(g.degree(), sub_gens)?;
                if !sub.is_abelian() {
                    return Err(ChartabError::StabilizerTableUnavailable(format!(
                        "stabilizer of order {} is not abelian",
                        sub.order()
                    )));
                }
                let t = abelian_dual_table(&sub)?;
                let class_of: Vec<usize> = (0..g.order())
                    .map(|k| sub.class_index_of(g.element(k)).unwrap_or(usize::MAX))
                    .collect();
                (t.rows().to_vec(), Box::new(move |k: usize, r: &CharacterRow| r.values[class_of[k]].clone()))
            };
        let scale = Rational::new(1, stab.len()).expect("nonempty stabilizer");
        for u in &u_rows {
            let values: Vec<Cyclotomic> = class_pairs
                .iter()
                .map(|&(ai, gi)| {
                    let sum: Cyclotomic = (0..g.order())
                        .filter_map(|h| {
                            let k = g.multiply(g.multiply(h, gi), g.inverse_index(h));
                            in_stab(k).then(|| x_value(x, act[h].apply(ai)) * &u_value(k, u))
                        })
                        .sum();
                    sum.scale(&scale)
                })
                .collect();
            rows.push(CharacterRow {
                name: format!("({},{})", dual.rows()[x].name, u.name),
                degree: orbit.len() as u64 * u.degree,
                values,
            });
        }
    }
    let table = CharacterTable::new(product.layout(), rows)?;
    Ok(SemidirectProduct { group: Arc::new(product), table, orbits })
}

/// `D_n = Z_2 ⋉ Z_n` with the generator of `Z_2` acting by inversion.
pub fn dihedral_semidirect(n: usize) -> Result<SemidirectProduct, ChartabError> {
    let z2 = permgroup::cyclic(2);
    let zn = permgroup::cyclic(n);
    let r = zn.generators().first().cloned().unwrap_or_else(|| Permutation::identity(zn.degree()));
    let inversion = if zn.generators().is_empty() {
        Permutation::identity(1)
    } else {
        automorphism_from_images(&zn, &[r.inverse()])?
    };
    let t2 = abelian_dual_table(&z2)?;
    semidirect_table(&z2, &t2, &zn, &[inversion])
}

/// The Heisenberg group of order `p³` as `Z_p ⋉ (Z_p × Z_p)`, the generator
/// acting by `(u, v) ↦ (u, u + v)`.
pub fn heisenberg_semidirect(p: usize) -> Result<SemidirectProduct, ChartabError> {
    let zp = permgroup::cyclic(p);
    let a = permgroup::direct_product(&[permgroup::cyclic(p), permgroup::cyclic(p)]);
    let e1 = a.generators()[0].clone();
    let e2 = a.generators()[1].clone();
    let shear = automorphism_from_images(&a, &[e1.compose(&e2), e2])?;
    let t = abelian_dual_table(&zp)?;
    semidirect_table(&zp, &t, &a, &[shear])
}
