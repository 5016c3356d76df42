use std::sync::Arc;

use crate::exact::{zeta, Cyclotomic};
use crate::permgroup::{self, PermGroup, Permutation};

use super::{ChartabError, CharacterRow, CharacterTable, ClassInfo, ClassLayout};

struct Spec {
    group: PermGroup,
    labels: &'static [&'static str],
    reps: Vec<Permutation>,
    rows: Vec<(&'static str, Vec<Cyclotomic>)>,
}

fn ints(v: &[i64]) -> Vec<Cyclotomic> {
    v.iter().map(|&x| Cyclotomic::from_integer(x)).collect()
}

fn cycles(n: usize, cs: &[&[usize]]) -> Permutation {
    Permutation::from_cycles(n, cs).expect("valid cycles")
}

fn spec(name: &str) -> Option<Spec> {
    let s = match name {
        "S3" => Spec {
            group: permgroup::symmetric(3),
            labels: &["Id", "(12)", "(123)"],
            reps: vec![cycles(3, &[]), cycles(3, &[&[0, 1]]), cycles(3, &[&[0, 1, 2]])],
            rows: vec![
                ("C+", ints(&[1, 1, 1])),
                ("C-", ints(&[1, -1, 1])),
                ("C^2", ints(&[2, 0, -1])),
            ],
        },
        "A4" => {
            let e = zeta(3, 1);
            let e2 = zeta(3, 2);
            let one = Cyclotomic::one();
            Spec {
                group: permgroup::alternating(4),
                labels: &["Id", "(123)", "(132)", "(12)(34)"],
                reps: vec![
                    cycles(4, &[]),
                    cycles(4, &[&[0, 1, 2]]),
                    cycles(4, &[&[0, 2, 1]]),
                    cycles(4, &[&[0, 1], &[2, 3]]),
                ],
                rows: vec![
                    ("C", ints(&[1, 1, 1, 1])),
                    ("C_eps", vec![one.clone(), e.clone(), e2.clone(), one.clone()]),
                    ("C_eps2", vec![one.clone(), e2, e, one]),
                    ("C^3", ints(&[3, 0, 0, -1])),
                ],
            }
        }
        "S4" => Spec {
            group: permgroup::symmetric(4),
            labels: &["Id", "(12)", "(12)(34)", "(123)", "(1234)"],
            reps: vec![
                cycles(4, &[]),
                cycles(4, &[&[0, 1]]),
                cycles(4, &[&[0, 1], &[2, 3]]),
                cycles(4, &[&[0, 1, 2]]),
                cycles(4, &[&[0, 1, 2, 3]]),
            ],
            rows: vec![
                ("C+", ints(&[1, 1, 1, 1, 1])),
                ("C-", ints(&[1, -1, 1, 1, -1])),
                ("C^2", ints(&[2, 0, 2, -1, 0])),
                ("C^3+", ints(&[3, -1, -1, 0, 1])),
                ("C^3-", ints(&[3, 1, -1, 0, -1])),
            ],
        },
        "A5" => {
            // (1+√5)/2 and (1-√5)/2
            let plus = -(zeta(5, 2) + zeta(5, 3));
            let minus = -(zeta(5, 1) + zeta(5, 4));
            let int = Cyclotomic::from_integer;
            Spec {
                group: permgroup::alternating(5),
                labels: &["Id", "(123)", "(12)(34)", "(12345)", "(13245)"],
                reps: vec![
                    cycles(5, &[]),
                    cycles(5, &[&[0, 1, 2]]),
                    cycles(5, &[&[0, 1], &[2, 3]]),
                    cycles(5, &[&[0, 1, 2, 3, 4]]),
                    cycles(5, &[&[0, 2, 1, 3, 4]]),
                ],
                rows: vec![
                    ("C", ints(&[1, 1, 1, 1, 1])),
                    ("C^3+", vec![int(3), int(0), int(-1), plus.clone(), minus.clone()]),
                    ("C^3-", vec![int(3), int(0), int(-1), minus, plus]),
                    ("C^4", ints(&[4, 1, 0, -1, -1])),
                    ("C^5", ints(&[5, -1, 1, 0, 0])),
                ],
            }
        }
        "Q8" => {
            let group = permgroup::quaternion();
            let i = group.generators()[0].clone();
            let j = group.generators()[1].clone();
            let k = i.compose(&j);
            Spec {
                labels: &["1", "-1", "i", "j", "k"],
                reps: vec![Permutation::identity(8), i.compose(&i), i, j, k],
                group,
                rows: vec![
                    ("C++", ints(&[1, 1, 1, 1, 1])),
                    ("C+-", ints(&[1, 1, 1, -1, -1])),
                    ("C-+", ints(&[1, 1, -1, 1, -1])),
                    ("C--", ints(&[1, 1, -1, -1, 1])),
                    ("C^2", ints(&[2, -2, 0, 0, 0])),
                ],
            }
        }
        _ => return None,
    };
    Some(s)
}

pub const BUILTIN_TABLES: [&str; 5] = ["S3", "A4", "S4", "A5", "Q8"];

/// The stored tables of `S3`, `A4`, `S4`, `A5` and `Q8`, laid out with the
/// classes in their conventional order.
pub fn builtin_table(name: &str) -> Result<CharacterTable, ChartabError> {
    let s = spec(name).ok_or_else(|| ChartabError::UnknownTable(name.to_string()))?;
    let g = &s.group;
    let class_ids: Vec<usize> = s
        .reps
        .iter()
        .map(|r| g.class_index_of(r).expect("representative lies in the group"))
        .collect();
    let position = |gc: usize| class_ids.iter().position(|&c| c == gc).expect("all classes listed");
    let classes = s
        .reps
        .iter()
        .zip(s.labels)
        .zip(&class_ids)
        .map(|((rep, label), &gc)| ClassInfo {
            label: label.to_string(),
            size: g.classes()[gc].size as u64,
            element_order: rep.order(),
            rep: Some(rep.images().to_vec()),
            descriptor: None,
        })
        .collect();
    let remap = |k: i64| -> Vec<usize> {
        s.reps.iter().map(|r| position(g.class_index_of(&r.pow(k)).expect("power in group"))).collect()
    };
    let layout = Arc::new(ClassLayout {
        name: name.to_string(),
        group_order: g.order() as u64,
        classes,
        power2: Some(remap(2)),
        inverse: Some(remap(-1)),
    });
    let rows = s
        .rows
        .into_iter()
        .map(|(n, values)| CharacterRow {
            name: n.to_string(),
            degree: values[0].to_integer().and_then(|d| u64::try_from(d).ok()).expect("integral degree"),
            values,
        })
        .collect();
    CharacterTable::new(layout, rows)
}

/// A builtin table expressed over the classes of `group`, which may act on
/// more points than the table's own representatives (e.g. `S3` inside `S4`).
pub fn builtin_table_on(name: &str, group: &PermGroup) -> Result<CharacterTable, ChartabError> {
    builtin_table(name)?.transport(group)
}
