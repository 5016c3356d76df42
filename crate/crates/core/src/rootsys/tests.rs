use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::prelude::*;

use super::*;
use crate::exact::Rational;
use crate::linalg::Matrix;

fn cartan(t: DynkinType) -> CartanMatrix {
    CartanMatrix::from_graph(&Graph::dynkin(t))
}

/// `{x : B(x,x) = 2}` inside the box `|x_i| ≤ ⌊√(2 (A⁻¹)_{ii})⌋`, the bound
/// forced by positive definiteness.
fn box_search(c: &CartanMatrix) -> Vec<RootVector> {
    let r = c.rank();
    let inv = c.to_matrix().inverse().unwrap();
    let bounds: Vec<i64> = (0..r)
        .map(|i| {
            let v = (inv.get(i, i).clone() * Rational::from(2)).to_f64();
            (v.sqrt() + 1e-9).floor() as i64
        })
        .collect();
    let mut out = Vec::new();
    let mut x: Vec<i64> = bounds.iter().map(|b| -b).collect();
    loop {
        if c.bilinear(&x, &x) == 2 {
            out.push(x.clone());
        }
        let mut k = 0;
        loop {
            if k == r {
                return out;
            }
            if x[k] < bounds[k] {
                x[k] += 1;
                break;
            }
            x[k] = -bounds[k];
            k += 1;
        }
    }
}

/// `|W|` by closing the reflection matrices under multiplication.
fn weyl_by_matrices(c: &CartanMatrix) -> usize {
    let gens: Vec<Matrix> = (0..c.rank()).map(|i| reflection_matrix(c, i)).collect();
    let id = Matrix::identity(c.rank());
    let key = |m: &Matrix| format!("{m:?}");
    let mut seen = HashSet::from([key(&id)]);
    let mut frontier = vec![id];
    while let Some(m) = frontier.pop() {
        for g in &gens {
            let p = g.mul(&m).unwrap();
            if seen.insert(key(&p)) {
                frontier.push(p);
            }
        }
    }
    seen.len()
}

#[test]
fn positive_root_counts() {
    for t in DynkinType::all_up_to(8) {
        let roots = enumerate_roots(&cartan(t)).unwrap();
        assert_eq!(roots.positive.len(), t.positive_root_count(), "{t}");
        assert_eq!(roots.negative.len(), roots.positive.len());
    }
    assert_eq!(enumerate_roots(&cartan(DynkinType::a(3))).unwrap().total(), 12);
    assert_eq!(enumerate_roots(&cartan(DynkinType::d(4))).unwrap().total(), 24);
    let e8 = enumerate_roots(&cartan(DynkinType::e(8))).unwrap();
    assert_eq!((e8.positive.len(), e8.total()), (120, 240));
    assert_eq!(cartan(DynkinType::e(6)).rank(), 6);
    assert_eq!(enumerate_roots(&cartan(DynkinType::e(7))).unwrap().total(), 126);
    assert_eq!(enumerate_roots(&cartan(DynkinType::e(6))).unwrap().total(), 72);
}

#[test]
fn closure_matches_box_search() {
    for t in DynkinType::all_up_to(6) {
        let c = cartan(t);
        let roots = enumerate_roots(&c).unwrap();
        let mut closure: Vec<RootVector> = roots.all().cloned().collect();
        let mut boxed = box_search(&c);
        closure.sort();
        boxed.sort();
        assert_eq!(closure, boxed, "{t}");
    }
}

#[test]
fn roots_are_sign_coherent_and_ordered() {
    let c = cartan(DynkinType::e(7));
    let roots = enumerate_roots(&c).unwrap();
    for v in roots.all() {
        assert_eq!(c.bilinear(v, v), 2);
        assert!(v.iter().all(|&x| x >= 0) || v.iter().all(|&x| x <= 0));
    }
    assert!(roots.positive.windows(2).all(|w| (height(&w[0]), &w[0]) < (height(&w[1]), &w[1])));
    assert_eq!(roots.positive[0], simple_root(7, 6));
    assert_eq!(roots.positive[6], simple_root(7, 0));
}

#[test]
fn reflection_examples() {
    let c = cartan(DynkinType::a(2));
    assert_eq!(reflect(&c, 0, &[1, 0]), vec![-1, 0]);
    assert_eq!(reflect(&c, 0, &[0, 1]), vec![1, 1]);
    assert!(matches!(enumerate_roots(&CartanMatrix::from_graph(&Graph::cycle(3))), Err(RootSysError::NotDefinite)));
}

#[test]
fn classification_of_paths_and_dynkin_types() {
    for n in 1..=8 {
        let c = CartanMatrix::from_graph(&Graph::path(n));
        assert_eq!(c.determinant(), BigInt::from(n + 1));
        assert_eq!(classify(&Graph::path(n)).unwrap(), Classification::Dynkin(DynkinType::a(n)));
    }
    for t in DynkinType::all_up_to(8) {
        assert_eq!(classify(&Graph::dynkin(t)).unwrap(), Classification::Dynkin(t), "{t}");
    }
    assert_eq!(Classification::Dynkin(DynkinType::e(8)).to_string(), "E8");
    assert_eq!(Classification::Dynkin(DynkinType::d(5)).to_string(), "D_5");
    assert_eq!("a_3".parse::<DynkinType>().unwrap(), DynkinType::a(3));
    assert!("E9".parse::<DynkinType>().is_err());
    assert!("D3".parse::<DynkinType>().is_err());
}

#[test]
fn forbidden_diagrams_are_affine() {
    let mut cases: Vec<(Graph, &str)> = (2..=9).map(|n| (Graph::cycle(n), "")).collect();
    cases.push((Graph::star(&[1, 1, 1, 1]), "D~4"));
    cases.push((Graph::star(&[2, 2, 2]), "E~6"));
    cases.push((Graph::star(&[1, 3, 3]), "E~7"));
    cases.push((Graph::star(&[1, 2, 5]), "E~8"));
    for n in 5..=8 {
        // two forks joined by a path: n + 1 vertices
        let mut edges = vec![(0, 2, 1), (1, 2, 1)];
        for k in 2..n - 2 {
            edges.push((k, k + 1, 1));
        }
        edges.push((n - 2, n - 1, 1));
        edges.push((n - 2, n, 1));
        cases.push((Graph::new(n + 1, &edges).unwrap(), ""));
        let name = format!("D~{n}");
        assert_eq!(classify(&cases.last().unwrap().0).unwrap(), Classification::Affine(Some(name)));
    }
    for (g, name) in &cases {
        assert_eq!(CartanMatrix::from_graph(g).determinant(), BigInt::from(0));
        let cls = classify(g).unwrap();
        assert!(cls.is_affine(), "{cls}");
        if !name.is_empty() {
            assert_eq!(cls, Classification::Affine(Some(name.to_string())));
        }
    }
    assert_eq!(classify(&Graph::cycle(4)).unwrap().to_string(), "affine (A~3)");
    assert_eq!(classify(&Graph::cycle(2)).unwrap().to_string(), "affine (A~1)");
}

#[test]
fn indefinite_and_invalid_graphs() {
    assert_eq!(classify(&Graph::star(&[1, 1, 1, 1, 1])).unwrap(), Classification::Indefinite);
    assert_eq!(classify(&Graph::star(&[2, 2, 3])).unwrap(), Classification::Indefinite);
    assert_eq!(classify(&Graph::new(2, &[(0, 1, 3)]).unwrap()).unwrap(), Classification::Indefinite);
    assert!(matches!(Graph::new(2, &[(0, 0, 1)]), Err(RootSysError::SelfLoop(0))));
    assert!(matches!(classify(&Graph::new(3, &[(0, 1, 1)]).unwrap()), Err(RootSysError::Disconnected)));
}

#[test]
fn graph_json() {
    let g = Graph::dynkin(DynkinType::d(4));
    let s = serde_json::to_string(&g).unwrap();
    assert_eq!(s, r#"{"vertices":4,"edges":[[0,1,1],[1,2,1],[1,3,1]]}"#);
    assert_eq!(serde_json::from_str::<Graph>(&s).unwrap(), g);
    assert!(serde_json::from_str::<Graph>(r#"{"vertices":2,"edges":[[1,1,1]]}"#).is_err());
}

#[test]
fn coxeter_orders() {
    for (t, order) in [(DynkinType::a(2), 3), (DynkinType::a(3), 4), (DynkinType::d(4), 6)] {
        let c = cartan(t);
        let labeling: Vec<usize> = (0..t.rank).collect();
        let cox = coxeter(&c, &labeling).unwrap();
        assert_eq!(cox.order, order, "{t}");
        // independent power check
        let mut p = Matrix::identity(t.rank);
        for _ in 0..order {
            p = p.mul(&cox.matrix).unwrap();
        }
        assert_eq!(p, Matrix::identity(t.rank));
    }
    let exp = [(DynkinType::e(6), 12), (DynkinType::e(7), 18), (DynkinType::e(8), 30)];
    for (t, h) in exp {
        assert_eq!(coxeter(&cartan(t), &(0..t.rank).collect::<Vec<_>>()).unwrap().order, h);
    }
}

#[test]
fn one_is_never_an_eigenvalue() {
    for t in DynkinType::all_up_to(8) {
        let c = cartan(t);
        let mut labeling: Vec<usize> = (0..t.rank).collect();
        for _ in 0..2 {
            let cox = coxeter(&c, &labeling).unwrap();
            assert_ne!(cox.det_minus_identity, Rational::from(0), "{t}");
            labeling.reverse();
        }
    }
    assert!(coxeter(&cartan(DynkinType::a(2)), &[0, 0]).is_err());
}

#[test]
fn weyl_group_orders() {
    for n in 1..=5 {
        let fact: usize = (1..=n + 1).product();
        assert_eq!(weyl_group_order(&cartan(DynkinType::a(n)), DEFAULT_WEYL_BOUND).unwrap(), Some(fact));
    }
    assert_eq!(weyl_group_order(&cartan(DynkinType::d(4)), DEFAULT_WEYL_BOUND).unwrap(), Some(192));
    assert_eq!(weyl_group_order(&cartan(DynkinType::e(6)), DEFAULT_WEYL_BOUND).unwrap(), Some(51840));
    assert_eq!(weyl_group_order(&cartan(DynkinType::e(7)), DEFAULT_WEYL_BOUND).unwrap(), None);
    for t in [DynkinType::a(2), DynkinType::a(3), DynkinType::d(4)] {
        let c = cartan(t);
        assert_eq!(weyl_group_order(&c, DEFAULT_WEYL_BOUND).unwrap(), Some(weyl_by_matrices(&c)), "{t}");
    }
}

#[test]
fn inverse_entries_are_rational() {
    let inv = cartan(DynkinType::e(8)).to_matrix().inverse().unwrap();
    assert!(inv.entries().iter().all(|x| x.to_integer().is_some()));
    assert_eq!(cartan(DynkinType::e(8)).determinant().to_i64(), Some(1));
}

fn type_strategy() -> impl Strategy<Value = DynkinType> {
    let all = DynkinType::all_up_to(8);
    (0..all.len()).prop_map(move |i| all[i])
}

proptest! {
    #[test]
    fn form_takes_even_values(t in type_strategy(), seed in prop::collection::vec(-5i64..6, 8)) {
        let c = cartan(t);
        let x = &seed[..t.rank];
        prop_assert_eq!(c.bilinear(x, x) % 2, 0);
    }

    #[test]
    fn reflections_preserve_the_form(t in type_strategy(), u in prop::collection::vec(-5i64..6, 8), v in prop::collection::vec(-5i64..6, 8), k in 0usize..8) {
        let c = cartan(t);
        let (u, v, i) = (&u[..t.rank], &v[..t.rank], k % t.rank);
        let (su, sv) = (reflect(&c, i, u), reflect(&c, i, v));
        prop_assert_eq!(c.bilinear(&su, &sv), c.bilinear(u, v));
        prop_assert_eq!(reflect(&c, i, &su), u.to_vec());
        prop_assert_eq!(reflect(&c, i, &simple_root(t.rank, i)), simple_root(t.rank, i).iter().map(|x| -x).collect::<Vec<_>>());
    }
}
