use std::sync::Arc;

use super::*;
use crate::exact::{zeta, Cyclotomic};
use crate::permgroup::{self, PermGroup, Permutation, SubgroupView};

fn int(n: i64) -> Cyclotomic {
    Cyclotomic::from_integer(n)
}

fn perm(n: usize, cycles: &[&[usize]]) -> Permutation {
    Permutation::from_cycles(n, cycles).unwrap()
}

/// Number of fixed points of each class representative.
fn fixed_point_character(g: &PermGroup) -> ClassFunction {
    let values: Vec<i64> = g
        .classes()
        .iter()
        .map(|c| c.representative.images().iter().enumerate().filter(|(i, &x)| *i == x).count() as i64)
        .collect();
    ClassFunction::from_ints(g.layout(), &values).unwrap()
}

#[test]
fn s3_inner_products() {
    let t = builtin_table("S3").unwrap();
    let c2 = t.row(2);
    assert_eq!(c2.inner_product(&c2).unwrap(), int(1));
    assert_eq!(t.row(0).inner_product(&t.row(1)).unwrap(), int(0));
    let triv = ClassFunction::trivial(t.layout().clone());
    assert_eq!(triv.inner_product(&triv).unwrap(), int(1));
}

#[test]
fn hermitian_symmetry() {
    let t = builtin_table("A4").unwrap();
    let f = t.row(1).add(&t.row(3)).unwrap().scale(&zeta(3, 1));
    let g = t.row(2).add(&t.row(0)).unwrap();
    assert_eq!(f.inner_product(&g).unwrap(), g.inner_product(&f).unwrap().conjugate());
}

#[test]
fn builtin_tables_verify() {
    for name in BUILTIN_TABLES {
        let t = builtin_table(name).unwrap();
        let report = t.verify();
        assert!(report.all_passed(), "{name}:\n{report}");
    }
}

#[test]
fn s3_column_at_a_transposition() {
    let t = builtin_table("S3").unwrap();
    let sum: Cyclotomic = t.rows().iter().map(|r| &r.values[1] * &r.values[1].conjugate()).sum();
    assert_eq!(sum, int(2));
    assert_eq!(t.layout().centralizer_order(1), 2);
}

#[test]
fn a_perturbed_entry_is_flagged() {
    let t = builtin_table("S4").unwrap();
    let bad = t.with_entry(2, 3, int(1));
    let report = bad.verify();
    assert!(!report.check("column orthogonality").unwrap().passed);
    assert!(!report.check("row orthonormality").unwrap().passed);
    assert!(report.check("sum of squares").unwrap().passed);
}

#[test]
fn decompositions() {
    let t = builtin_table("S3").unwrap();
    let regular = ClassFunction::regular(t.layout().clone());
    let d = t.decompose(&regular).unwrap();
    assert_eq!(d.integers().unwrap(), vec![1, 1, 2]);
    assert!(d.is_character());
    assert_eq!(t.decompose(&t.row(2)).unwrap().integers().unwrap(), vec![0, 0, 1]);

    let s3 = permgroup::symmetric(3);
    let on_s3 = builtin_table_on("S3", &s3).unwrap();
    let perm_char = fixed_point_character(&s3);
    assert_eq!(on_s3.decompose(&perm_char).unwrap().integers().unwrap(), vec![1, 0, 1]);

    let virtual_char = t.row(0).sub(&t.row(2)).unwrap();
    let d = t.decompose(&virtual_char).unwrap();
    assert!(d.reconstructs && !d.is_character());
}

#[test]
fn tensor_products() {
    let s3 = builtin_table("S3").unwrap();
    assert_eq!(s3.tensor_multiplicities(2, 2).unwrap(), vec![1, 1, 1]);
    let s4 = builtin_table("S4").unwrap();
    assert_eq!(s4.tensor_multiplicities(2, 3).unwrap(), vec![0, 0, 0, 1, 1]);
    let a5 = builtin_table("A5").unwrap();
    assert_eq!(a5.tensor_multiplicities(4, 4).unwrap(), vec![1, 1, 1, 2, 2]);
}

#[test]
fn duals() {
    let s4 = builtin_table("S4").unwrap();
    for i in 0..5 {
        assert_eq!(s4.row(i).dual(), s4.row(i));
    }
    let a4 = builtin_table("A4").unwrap();
    assert_eq!(a4.row(1).dual(), a4.row(2));
    assert_eq!(a4.dual_permutation().unwrap(), vec![0, 2, 1, 3]);
    let triv = ClassFunction::trivial(a4.layout().clone());
    assert_eq!(triv.dual(), triv);
}

#[test]
fn induction_examples() {
    let s3 = Arc::new(permgroup::symmetric(3));
    let t3 = builtin_table_on("S3", &s3).unwrap();
    let z2 = SubgroupView::new(s3.clone(), vec![perm(3, &[&[0, 1]])]).unwrap();
    let triv = ClassFunction::trivial(z2.subgroup().layout());
    let ind = induce(&z2, &triv).unwrap();
    assert_eq!(ind, t3.row(0).add(&t3.row(2)).unwrap());

    let z3 = SubgroupView::new(s3.clone(), vec![perm(3, &[&[0, 1, 2]])]).unwrap();
    let tz3 = abelian_dual_table(z3.subgroup()).unwrap();
    let eps = tz3.row(1);
    assert_eq!(induce(&z3, &eps).unwrap(), t3.row(2));

    let s4 = Arc::new(permgroup::symmetric(4));
    let t4 = builtin_table_on("S4", &s4).unwrap();
    let s3in4 = SubgroupView::new(s4.clone(), vec![perm(4, &[&[0, 1]]), perm(4, &[&[0, 1, 2]])]).unwrap();
    let t3in4 = builtin_table_on("S3", s3in4.subgroup()).unwrap();
    let ind = induce(&s3in4, &t3in4.row(2)).unwrap();
    let expect = t4.row(2).add(&t4.row(3)).unwrap().add(&t4.row(4)).unwrap();
    assert_eq!(ind, expect);
    assert_eq!(ind.degree(), &int(8));
}

#[test]
fn restriction() {
    let s3 = Arc::new(permgroup::symmetric(3));
    let t3 = builtin_table_on("S3", &s3).unwrap();
    let z2 = SubgroupView::new(s3, vec![perm(3, &[&[0, 1]])]).unwrap();
    assert_eq!(restrict(&z2, &t3.row(2)).unwrap().values(), &[int(2), int(0)]);
    let triv = ClassFunction::trivial(z2.parent().layout());
    assert_eq!(restrict(&z2, &triv).unwrap(), ClassFunction::trivial(z2.subgroup().layout()));
}

#[test]
fn frobenius_reciprocity_on_a4_in_a5() {
    let a5 = Arc::new(permgroup::alternating(5));
    let t5 = builtin_table_on("A5", &a5).unwrap();
    let a4 = SubgroupView::new(a5, vec![perm(5, &[&[0, 1, 2]]), perm(5, &[&[1, 2, 3]])]).unwrap();
    let t4 = builtin_table_on("A4", a4.subgroup()).unwrap();
    for i in 0..t4.num_rows() {
        for j in 0..t5.num_rows() {
            let lhs = induce(&a4, &t4.row(i)).unwrap().inner_product(&t5.row(j)).unwrap();
            let rhs = t4.row(i).inner_product(&restrict(&a4, &t5.row(j)).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn frobenius_schur_indicators() {
    let q8 = builtin_table("Q8").unwrap();
    assert_eq!(q8.row(4).frobenius_schur().unwrap(), int(-1));
    let s4 = builtin_table("S4").unwrap();
    for i in 0..5 {
        assert_eq!(s4.row(i).frobenius_schur().unwrap(), int(1));
    }
    let z3 = abelian_dual_table(&permgroup::cyclic(3)).unwrap();
    assert_eq!(z3.row(1).frobenius_schur().unwrap(), int(0));
    assert_eq!(z3.row(2).frobenius_schur().unwrap(), int(0));
    let not_irreducible = s4.row(0).add(&s4.row(1)).unwrap();
    assert!(matches!(not_irreducible.frobenius_schur(), Err(ChartabError::NotUnitNorm(_))));
}

#[test]
fn indicator_sums_count_involutions() {
    for (name, group) in [
        ("S3", permgroup::symmetric(3)),
        ("S4", permgroup::symmetric(4)),
        ("A5", permgroup::alternating(5)),
        ("Q8", permgroup::quaternion()),
    ] {
        let t = builtin_table(name).unwrap();
        let sum: Cyclotomic = (0..t.num_rows())
            .map(|i| t.row(i).frobenius_schur().unwrap().scale(&t.rows()[i].degree.into()))
            .sum();
        assert_eq!(sum, int(group.involution_count() as i64), "{name}");
    }
}

#[test]
fn virtual_irreducibility() {
    let t = builtin_table("S3").unwrap();
    assert!(t.row(2).is_irreducible_virtual());
    assert!(!t.row(0).add(&t.row(1)).unwrap().is_irreducible_virtual());
    assert!(!t.row(0).neg().is_irreducible_virtual());
}

#[test]
fn abelian_duals() {
    let z4 = abelian_dual_table(&permgroup::cyclic(4)).unwrap();
    assert_eq!(z4.num_rows(), 4);
    assert!(z4.verify().all_passed());
    assert!(z4.rows().iter().flat_map(|r| &r.values).all(|v| v.minimal_order() <= 4));
    let v4 = abelian_dual_table(&permgroup::named_group("Z_2xZ_2").unwrap()).unwrap();
    assert!(v4.rows().iter().flat_map(|r| &r.values).all(Cyclotomic::is_rational));
    assert!(v4.verify().all_passed());
    let z6 = abelian_dual_table(&permgroup::cyclic(6)).unwrap();
    assert!(z6.verify().all_passed());
    assert!(matches!(abelian_dual_table(&permgroup::symmetric(3)), Err(ChartabError::NotAbelian(_))));
}

#[test]
fn cyclic_characters_are_powers() {
    // χ_k(g^m) = ζ_n^{km} for the generator g
    let z5 = permgroup::cyclic(5);
    let t = abelian_dual_table(&z5).unwrap();
    let g = &z5.generators()[0];
    for k in 0..5 {
        for m in 0..5i64 {
            let class = z5.class_index_of(&g.pow(m)).unwrap();
            assert_eq!(t.rows()[k].values[class], zeta(5, k as i64 * m));
        }
    }
}

#[test]
fn semidirect_examples() {
    let d4 = dihedral_semidirect(4).unwrap();
    assert_eq!(d4.group.order(), 8);
    let mut degrees = d4.table.degrees();
    degrees.sort_unstable();
    assert_eq!(degrees, vec![1, 1, 1, 1, 2]);
    assert!(d4.table.verify().all_passed());

    let h = heisenberg_semidirect(3).unwrap();
    let mut degrees = h.table.degrees();
    degrees.sort_unstable();
    assert_eq!(degrees, [vec![1; 9], vec![3, 3]].concat());
    assert!(h.table.verify().all_passed());

    let s3 = dihedral_semidirect(3).unwrap();
    assert!(s3.table.verify().all_passed());
    assert!(s3.table.is_equivalent(&builtin_table("S3").unwrap()));
    assert!(!s3.table.is_equivalent(&builtin_table("Q8").unwrap()));
}

#[test]
fn table_json_roundtrip() {
    let t = builtin_table("A5").unwrap();
    let s = serde_json::to_string(&t).unwrap();
    let back: CharacterTable = serde_json::from_str(&s).unwrap();
    assert_eq!(back, t);
    assert!(back.verify().all_passed());
}

#[test]
fn rendering() {
    let t = builtin_table("S3").unwrap();
    let expect = "S3   Id  (12)  (123)\n#     1     3      2\nC+    1     1      1\nC-    1    -1      1\nC^2   2     0     -1\n";
    assert_eq!(t.render(false), expect);
}
