use std::collections::HashMap;

use super::classes::{all_elements, classes_over, mat_inv, mat_mul};
use super::*;
use crate::exact::Cyclotomic;

const QS: [u64; 3] = [3, 5, 7];

#[test]
fn rejects_bad_q() {
    assert_eq!(gl2_classes(2), Err(Gl2Error::NotOddPrime(2)));
    assert_eq!(gl2_classes(9), Err(Gl2Error::NotOddPrime(9)));
    assert_eq!(gl2_classes(37), Err(Gl2Error::TooLarge(37)));
    assert!(gl2_classes(31).is_ok());
}

#[test]
fn field_choices() {
    let f = FiniteField::new(7).unwrap();
    assert_eq!(f.eps(), 3);
    assert_eq!(f.primitive_root(), 3);
    let f = FiniteField::new(5).unwrap();
    assert_eq!(f.eps(), 2);
    assert_eq!(f.primitive_root(), 2);
    for q in [3, 5, 7, 11, 13] {
        let f = FiniteField::new(q).unwrap();
        let mut seen = std::collections::HashSet::new();
        for a in 0..q {
            for b in 0..q {
                if (a, b) != (0, 0) {
                    assert!(seen.insert(f.log2((a, b))));
                }
            }
        }
    }
}

#[test]
fn class_counts_and_sizes() {
    assert_eq!(gl2_classes(3).unwrap().len(), 8);
    assert_eq!(gl2_order(3), 48);
    assert_eq!(gl2_classes(5).unwrap().len(), 24);
    assert_eq!(gl2_order(5), 480);
    for q in QS {
        let cs = gl2_classes(q).unwrap();
        assert_eq!(cs.len() as u64, q * q - 1);
        let count = |fam| cs.iter().filter(|c| c.family == fam).count() as u64;
        assert_eq!(count(Gl2Family::Scalar), q - 1);
        assert_eq!(count(Gl2Family::Parabolic), q - 1);
        assert_eq!(count(Gl2Family::Hyperbolic), (q - 1) * (q - 2) / 2);
        assert_eq!(count(Gl2Family::Elliptic), q * (q - 1) / 2);
        assert_eq!(cs.iter().map(|c| c.size).sum::<u64>(), gl2_order(q));
    }
}

// Orbit sizes under conjugation, found by brute force over the group.
#[test]
fn class_sizes_match_brute_force() {
    for q in [3, 5] {
        let f = FiniteField::new(q).unwrap();
        let elems = all_elements(&f);
        assert_eq!(elems.len() as u64, gl2_order(q));
        let mut tally: HashMap<(Gl2Family, Vec<u64>), u64> = HashMap::new();
        for m in &elems {
            *tally.entry(classify(&f, m)).or_default() += 1;
        }
        for c in classes_over(&f) {
            assert_eq!(tally[&(c.family, c.params.clone())], c.size, "{}", c.label());
            assert_eq!(classify(&f, &c.representative), (c.family, c.params.clone()));
            let orbit: std::collections::HashSet<_> = elems
                .iter()
                .map(|a| mat_mul(&f, &mat_mul(&f, a, &c.representative), &mat_inv(&f, a)))
                .collect();
            assert_eq!(orbit.len() as u64, c.size);
        }
    }
}

#[test]
fn degrees_q3() {
    let t = gl2_table(3).unwrap();
    let mut d = t.table().degrees();
    d.sort();
    assert_eq!(d, vec![1, 1, 2, 2, 2, 3, 3, 4]);
    assert_eq!(d.iter().map(|x| x * x).sum::<u64>(), 48);
}

#[test]
fn verify_small_q() {
    for q in QS {
        let r = gl2_verify(q).unwrap();
        assert!(r.all_passed(), "q = {q}: {r:?}");
    }
}

#[test]
fn row_counts_per_series() {
    for q in QS {
        let t = gl2_table(q).unwrap();
        let count = |s| t.characters().iter().filter(|c| c.series == s).count() as u64;
        assert_eq!(count(Gl2Series::OneDimensional), q - 1);
        assert_eq!(count(Gl2Series::Principal), (q - 1) * (q - 2) / 2);
        assert_eq!(count(Gl2Series::CuspidalW), q - 1);
        assert_eq!(count(Gl2Series::Complementary), q * (q - 1) / 2);
        for c in t.characters() {
            let expect = match c.series {
                Gl2Series::OneDimensional => 1,
                Gl2Series::Principal => q + 1,
                Gl2Series::CuspidalW => q,
                Gl2Series::Complementary => q - 1,
            };
            assert_eq!(c.degree, expect);
        }
    }
}

#[test]
fn principal_at_hyperbolic() {
    let t = gl2_table(5).unwrap();
    let row = t.table().row_index("V(1,2)").unwrap();
    for (i, c) in t.classes().iter().enumerate() {
        if c.family == Gl2Family::Hyperbolic {
            let (x, y) = (c.params[0], c.params[1]);
            let expect = &t.xi(1, x) * &t.xi(2, y) + &t.xi(1, y) * &t.xi(2, x);
            assert_eq!(t.table().rows()[row].values[i], expect);
        }
    }
}

#[test]
fn principal_is_symmetric() {
    let t = gl2_table(7).unwrap();
    assert_eq!(t.principal(1, 4), t.principal(4, 1));
    assert_eq!(t.principal(2, 3).values(), t.table().row(t.table().row_index("V(2,3)").unwrap()).values());
}

#[test]
fn complementary_frobenius_pairs_agree() {
    for q in QS {
        let t = gl2_table(q).unwrap();
        let n2 = q * q - 1;
        for k in (0..n2).filter(|k| k % (q + 1) != 0) {
            assert_eq!(t.complementary(k), t.complementary(k * q % n2));
        }
    }
}

#[test]
fn one_dimensional_at_scalars() {
    for q in QS {
        let t = gl2_table(q).unwrap();
        for j in 0..q - 1 {
            let f = t.one_dimensional(j);
            for (i, c) in t.classes().iter().enumerate() {
                if c.family == Gl2Family::Scalar {
                    let x = c.params[0];
                    assert_eq!(f.values()[i], t.xi(j, x * x % q));
                }
            }
        }
    }
}

#[test]
fn induced_principal_matches_formula() {
    let t = gl2_table(5).unwrap();
    for (j1, j2) in [(0, 1), (1, 3), (2, 2), (0, 0)] {
        assert_eq!(borel_induced(&t, j1, j2), t.principal(j1, j2));
    }
    let v = borel_induced(&t, 1, 1);
    assert_eq!(v.norm_squared(), Cyclotomic::from(2));
    let split = v.sub(&t.one_dimensional(1)).unwrap();
    assert_eq!(split, t.cuspidal_w(1));
}

#[test]
fn torus_induced_values() {
    let q = 5;
    let t = gl2_table(q).unwrap();
    for k in [1, 2, 7] {
        let ind = torus_induced(&t, k);
        for (i, c) in t.classes().iter().enumerate() {
            let v = &ind.values()[i];
            let p = &c.params;
            let expect = match c.family {
                Gl2Family::Scalar => t.nu(k, (p[0], 0)) * Cyclotomic::from((q * (q - 1)) as i64),
                Gl2Family::Parabolic | Gl2Family::Hyperbolic => Cyclotomic::zero(),
                Gl2Family::Elliptic => {
                    t.nu(k, (p[0], p[1])) + t.nu(k, t.field().frobenius((p[0], p[1])))
                }
            };
            assert_eq!(v, &expect, "{}", c.label());
        }
    }
}

#[test]
fn complementary_virtual_norm() {
    for q in QS {
        let t = gl2_table(q).unwrap();
        for c in t.characters().iter().filter(|c| c.series == Gl2Series::Complementary) {
            let k = c.params[0];
            let chi = t.complementary_virtual(k);
            assert_eq!(chi.norm_squared(), Cyclotomic::one(), "q = {q}, k = {k}");
            assert_eq!(chi.degree(), &Cyclotomic::from((q - 1) as i64));
            assert!(chi.is_irreducible_virtual());
            assert_eq!(chi, t.complementary(k));
        }
    }
}

#[test]
fn power_maps_and_inverses() {
    let t = gl2_table(5).unwrap();
    let l = t.layout();
    let id = l.identity_class();
    assert_eq!(l.classes[id].label, "scalar(1)");
    let inv = l.inverse.as_ref().unwrap();
    for (i, c) in l.classes.iter().enumerate() {
        assert_eq!(l.classes[inv[i]].element_order, c.element_order);
        assert_eq!(inv[inv[i]], i);
    }
    for r in 0..t.table().num_rows() {
        let chi = t.table().row(r);
        assert!(chi.frobenius_schur().is_ok());
    }
}

#[test]
fn descriptors_serialize() {
    let t = gl2_table(3).unwrap();
    let json = serde_json::to_value(&t.layout().classes[t.layout().len() - 1]).unwrap();
    assert_eq!(json["descriptor"]["family"], "elliptic");
    assert_eq!(json["descriptor"]["params"], serde_json::json!([2, 1]));
}
