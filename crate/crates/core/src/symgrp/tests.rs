use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use super::*;
use crate::chartab::{builtin_table_on, ClassFunction};
use crate::exact::{Cyclotomic, Rational};
use crate::permgroup;

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn t(s: &str) -> CycleType {
    s.parse().unwrap()
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn identity_type(n: usize) -> CycleType {
    CycleType::new(vec![n])
}

/// `n!/∏ l_j! · ∏_{i<j} (l_i − l_j)` with `l_j = λ_j + N − j`.
fn determinant_formula(lambda: &Partition) -> BigInt {
    let n = lambda.len().max(1);
    let l: Vec<i64> = (0..n).map(|j| (lambda.part(j) + n - 1 - j) as i64).collect();
    let mut num = factorial(lambda.size());
    let mut den = BigInt::one();
    for i in 0..n {
        den *= factorial(l[i] as usize);
        for j in i + 1..n {
            num *= l[i] - l[j];
        }
    }
    num / den
}

/// Semistandard tableaux of shape `λ` with entries `< n`, as monomial weights.
fn ssyt_weights(lambda: &Partition, n: usize) -> Vec<Vec<usize>> {
    let cells: Vec<(usize, usize)> =
        lambda.parts().iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut out = Vec::new();
    let mut fill = vec![vec![0usize; lambda.part(0)]; lambda.len()];
    fn go(k: usize, cells: &[(usize, usize)], n: usize, fill: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<usize>>) {
        if k == cells.len() {
            let mut w = vec![0; n];
            for (r, c) in cells {
                w[fill[*r][*c]] += 1;
            }
            out.push(w);
            return;
        }
        let (r, c) = cells[k];
        let lo_row = if c > 0 { fill[r][c - 1] } else { 0 };
        let lo_col = if r > 0 { fill[r - 1][c] + 1 } else { 0 };
        for v in lo_row.max(lo_col)..n {
            fill[r][c] = v;
            go(k + 1, cells, n, fill, out);
        }
    }
    go(0, &cells, n, &mut fill, &mut out);
    out
}

fn ssyt_value(lambda: &Partition, points: &[Rational]) -> Rational {
    ssyt_weights(lambda, points.len())
        .iter()
        .map(|w| w.iter().zip(points).fold(Rational::from(1), |acc, (&e, x)| acc * x.pow(e as i32).unwrap()))
        .fold(Rational::from(0), |a, b| a + b)
}

fn rat(n: i64) -> Rational {
    Rational::from(n)
}

#[test]
fn frobenius_examples() {
    assert_eq!(frobenius_character(&p("2,1"), &t("1,1,1")).unwrap(), big(2));
    assert_eq!(frobenius_character(&p("2,1"), &t("3")).unwrap(), big(-1));
    for n in 1..=6 {
        for ty in partitions_of(n) {
            let ty = CycleType::from_partition(&ty);
            assert_eq!(frobenius_character(&Partition::new(vec![n]).unwrap(), &ty).unwrap(), big(1));
        }
    }
    assert!(matches!(frobenius_character(&p("2,1"), &t("2,2")), Err(SymError::SizeMismatch(3, 4))));
}

#[test]
fn u_character_examples() {
    for n in 1..=5 {
        let ones = Partition::new(vec![1; n]).unwrap();
        for ty in partitions_of(n) {
            let ty = CycleType::from_partition(&ty);
            let expect = if ty == identity_type(n) { factorial(n) } else { BigInt::zero() };
            assert_eq!(u_character(&ones, &ty).unwrap(), expect);
            assert_eq!(u_character(&Partition::new(vec![n]).unwrap(), &ty).unwrap(), big(1));
        }
    }
    assert_eq!(u_character(&p("2,1"), &t("1,1,1")).unwrap(), big(3));
}

#[test]
fn kostka_examples() {
    assert_eq!(kostka(&p("2,1"), &p("1,1,1")).unwrap(), big(2));
    assert_eq!(kostka(&p("1,1,1"), &p("2,1")).unwrap(), big(0));
    for n in 1..=6 {
        for lambda in partitions_of(n) {
            assert_eq!(kostka(&lambda, &lambda).unwrap(), big(1), "{lambda}");
        }
    }
}

#[test]
fn kostka_triangularity() {
    for n in 1..=6 {
        for lambda in partitions_of(n) {
            for mu in partitions_of(n) {
                if mu < lambda {
                    assert!(kostka(&mu, &lambda).unwrap().is_zero(), "K({mu},{lambda})");
                }
            }
        }
    }
}

#[test]
fn u_character_expands_in_kostka_numbers() {
    for n in 1..=6 {
        let parts = partitions_of(n);
        for lambda in &parts {
            let ks: Vec<BigInt> = parts.iter().map(|mu| kostka(mu, lambda).unwrap()).collect();
            for ty in &parts {
                let ty = CycleType::from_partition(ty);
                let rhs: BigInt =
                    parts.iter().zip(&ks).map(|(mu, k)| k * frobenius_character(mu, &ty).unwrap()).sum();
                assert_eq!(u_character(lambda, &ty).unwrap(), rhs);
            }
        }
    }
}

#[test]
fn dimensions_agree_three_ways() {
    for n in 0..=8 {
        for lambda in partitions_of(n) {
            let f = frobenius_character(&lambda, &identity_type(n)).unwrap();
            assert_eq!(f, lambda.hook_dim(), "{lambda}");
            assert_eq!(f, determinant_formula(&lambda), "{lambda}");
        }
    }
}

#[test]
fn dimension_sums() {
    for n in 1..=6 {
        let sq: BigInt = partitions_of(n).iter().map(|l| l.hook_dim().pow(2)).sum();
        assert_eq!(sq, factorial(n));
        let lin: BigInt = partitions_of(n).iter().map(Partition::hook_dim).sum();
        assert_eq!(lin, BigInt::from(permgroup::symmetric(n).involution_count()), "S{n}");
    }
}

#[test]
fn conjugation_twists_by_sign() {
    for n in 1..=6 {
        for lambda in partitions_of(n) {
            for ty in partitions_of(n) {
                let ty = CycleType::from_partition(&ty);
                let a = frobenius_character(&lambda.conjugate(), &ty).unwrap();
                let b = frobenius_character(&lambda, &ty).unwrap() * ty.sign();
                assert_eq!(a, b);
            }
        }
    }
}

#[test]
fn tables_verify() {
    for n in 0..=7 {
        let table = sn_table(n).unwrap();
        assert!(table.verify().all_passed(), "S{n}:\n{}", table.verify());
        assert_eq!(table.num_rows(), partitions_of(n).len());
    }
    let s5 = sn_table(5).unwrap();
    assert_eq!(s5.degrees().iter().map(|d| d * d).sum::<u64>(), 120);
    assert!(matches!(sn_table(9), Err(SymError::BoundExceeded(9))));
}

#[test]
fn layout_matches_enumerated_group() {
    for n in 1..=6 {
        let layout = sn_layout(n);
        let g = permgroup::symmetric(n);
        let mut ours: Vec<(u64, u64)> = layout.classes.iter().map(|c| (c.size, c.element_order)).collect();
        let mut theirs: Vec<(u64, u64)> = g.classes().iter().map(|c| (c.size as u64, c.element_order)).collect();
        ours.sort_unstable();
        theirs.sort_unstable();
        assert_eq!(ours, theirs);
        assert_eq!(layout.check(), Ok(()));
        let table = sn_table_on(&g).unwrap();
        assert!(table.verify().all_passed());
    }
}

fn matches_builtin(n: usize, name: &str, matching: &[(&str, &str)]) {
    let g = permgroup::symmetric(n);
    let ours = sn_table_on(&g).unwrap();
    let theirs = builtin_table_on(name, &g).unwrap();
    for (lambda, paper) in matching {
        let a = ours.row(ours.row_index(lambda).unwrap());
        let b = theirs.row(theirs.row_index(paper).unwrap());
        assert_eq!(a, b, "{lambda} vs {paper}");
    }
    assert!(sn_table(n).unwrap().is_equivalent(&theirs));
}

#[test]
fn s3_matches_builtin() {
    matches_builtin(3, "S3", &[("3", "C+"), ("2,1", "C^2"), ("1,1,1", "C-")]);
}

#[test]
fn s4_matches_builtin() {
    matches_builtin(
        4,
        "S4",
        &[("4", "C+"), ("3,1", "C^3-"), ("2,2", "C^2"), ("2,1,1", "C^3+"), ("1,1,1,1", "C-")],
    );
}

#[test]
fn restriction_follows_corner_removal() {
    for n in 2..=5 {
        let big_group = std::sync::Arc::new(permgroup::symmetric(n));
        let gens: Vec<_> = permgroup::symmetric(n - 1).generators().iter().map(|g| g.extend(n)).collect();
        let view = permgroup::SubgroupView::new(big_group.clone(), gens).unwrap();
        let upper = sn_table_on(&big_group).unwrap();
        let lower = sn_table_on(view.subgroup()).unwrap();
        for (i, lambda) in upper.row_names().iter().enumerate() {
            let res = crate::chartab::restrict(&view, &upper.row(i)).unwrap();
            let mut expect = ClassFunction::zero(view.subgroup().layout());
            for mu in p(lambda).removable() {
                expect = expect.add(&lower.row(lower.row_index(&mu.to_string()).unwrap())).unwrap();
            }
            assert_eq!(res, expect, "{lambda}");
        }
    }
}

#[test]
fn schur_examples() {
    let (a, b) = (rat(3), Rational::new(2, 7).unwrap());
    assert_eq!(schur_eval(&p("1"), &[a.clone(), b.clone()]).unwrap(), a + b);
    let pts = [rat(1), rat(2), rat(3)];
    let v = schur_eval(&p("2,1"), &pts).unwrap();
    assert_eq!(v, ssyt_value(&p("2,1"), &pts));
    assert_eq!(v, rat(60));
    assert!(matches!(schur_eval(&p("1"), &[rat(1), rat(1)]), Err(SymError::RepeatedPoints(0, 1))));
    assert!(matches!(schur_eval(&p("1,1,1"), &[rat(1), rat(2)]), Err(SymError::TooManyParts { .. })));
}

#[test]
fn schur_over_cyclotomics() {
    let pts = [Cyclotomic::one(), crate::exact::zeta(3, 1), crate::exact::zeta(3, 2)];
    // S_(1) is the sum of the points; the cube roots of unity sum to zero
    assert!(schur_eval(&p("1"), &pts).unwrap().is_zero());
    assert_eq!(schur_eval(&p("1,1,1"), &pts).unwrap(), Cyclotomic::one());
}

#[test]
fn all_ones_and_gl_dimensions() {
    assert_eq!(schur_all_ones(&p("1"), 2).unwrap(), big(2));
    assert_eq!(schur_all_ones(&p("1,1"), 3).unwrap(), big(3));
    for n in 0..6 {
        assert_eq!(gl_dim(&[n, 0], 2).unwrap(), big(n + 1));
    }
    assert_eq!(gl_dim(&[1, 1, 1], 3).unwrap(), big(1));
    assert_eq!(gl_dim(&[0, -1], 2).unwrap(), big(2));
    assert!(matches!(gl_dim(&[0, 1], 2), Err(SymError::NotMonotone(_))));
    assert!(matches!(gl_dim(&[-1], 2), Err(SymError::NotMonotone(_))));
}

#[test]
fn geometric_degenerates_at_one() {
    assert!(matches!(schur_geometric(&p("1"), 2, &rat(1)), Err(SymError::DegenerateSpecialization)));
    assert!(matches!(schur_geometric(&p("1"), 2, &rat(0)), Err(SymError::DegenerateSpecialization)));
}

fn rational_strategy() -> impl Strategy<Value = Rational> {
    (-20i64..20, 1i64..8).prop_map(|(a, b)| Rational::new(a, b).unwrap())
}

fn partition_strategy(max_n: usize) -> impl Strategy<Value = Partition> {
    (0..=max_n).prop_flat_map(|n| {
        let all = partitions_of(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn distinct(points: &[Rational]) -> bool {
    points.iter().enumerate().all(|(i, x)| points[..i].iter().all(|y| y != x))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn alternant_ratio_matches_tableaux(lambda in partition_strategy(5), pts in prop::collection::vec(rational_strategy(), 1..=4)) {
        prop_assume!(distinct(&pts) && lambda.len() <= pts.len());
        prop_assert_eq!(schur_eval(&lambda, &pts).unwrap(), ssyt_value(&lambda, &pts));
    }

    #[test]
    fn power_sums_expand_in_schur_polynomials(n in 1usize..=5, pts in prop::collection::vec(rational_strategy(), 1..=4), k in 0usize..7) {
        prop_assume!(distinct(&pts));
        let types = partitions_of(n);
        let ty = CycleType::from_partition(&types[k % types.len()]);
        let mut lhs = rat(1);
        for (i, &m) in ty.multiplicities().iter().enumerate() {
            let h = pts.iter().fold(rat(0), |acc, x| acc + x.pow(i as i32 + 1).unwrap());
            lhs = lhs * h.pow(m as i32).unwrap();
        }
        let mut rhs = rat(0);
        for lambda in partitions_of(n).into_iter().filter(|l| l.len() <= pts.len()) {
            let chi = Rational::from(frobenius_character(&lambda, &ty).unwrap());
            rhs = rhs + chi * schur_eval(&lambda, &pts).unwrap();
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn geometric_matches_alternant(lambda in partition_strategy(4), n in 1usize..=4, z in rational_strategy()) {
        prop_assume!(lambda.len() <= n);
        let pts: Vec<Rational> = (0..n).map(|i| z.pow(i as i32).unwrap()).collect();
        prop_assume!(distinct(&pts));
        prop_assert_eq!(schur_geometric(&lambda, n, &z).unwrap(), schur_eval(&lambda, &pts).unwrap());
    }

    #[test]
    fn all_ones_matches_tableau_count(lambda in partition_strategy(5), n in 1usize..=4) {
        prop_assume!(lambda.len() <= n);
        prop_assert_eq!(schur_all_ones(&lambda, n).unwrap(), BigInt::from(ssyt_weights(&lambda, n).len()));
    }

    #[test]
    fn gl_dim_is_shift_invariant(mut lam in prop::collection::vec(-4i64..6, 1..=4), shift in -3i64..3) {
        lam.sort_unstable_by(|a, b| b.cmp(a));
        let n = lam.len();
        let shifted: Vec<i64> = lam.iter().map(|x| x + shift).collect();
        prop_assert_eq!(gl_dim(&lam, n).unwrap(), gl_dim(&shifted, n).unwrap());
    }
}
