use super::{PermGroup, PermGroupError, Permutation};

fn build(name: String, degree: usize, gens: Vec<Permutation>) -> PermGroup {
    PermGroup::from_generators(degree, gens)
        .expect("built-in generators are valid")
        .with_name(name)
}

fn cycle(degree: usize, points: &[usize]) -> Permutation {
    Permutation::from_cycles(degree, &[points]).expect("valid cycle")
}

/// `S_n` generated by `(0 1)` and `(0 1 … n-1)`.
pub fn symmetric(n: usize) -> PermGroup {
    let degree = n.max(1);
    let gens = if n >= 2 {
        vec![cycle(n, &[0, 1]), cycle(n, &(0..n).collect::<Vec<_>>())]
    } else {
        vec![]
    };
    build(format!("S{n}"), degree, gens)
}

/// `A_n` generated by `(0 1 2)` and an even long cycle.
pub fn alternating(n: usize) -> PermGroup {
    let degree = n.max(1);
    let gens = if n < 3 {
        vec![]
    } else if n % 2 == 1 {
        vec![cycle(n, &(0..n).collect::<Vec<_>>()), cycle(n, &[0, 1, 2])]
    } else {
        vec![cycle(n, &[0, 1, 2]), cycle(n, &(1..n).collect::<Vec<_>>())]
    };
    build(format!("A{n}"), degree, gens)
}

pub fn cyclic(n: usize) -> PermGroup {
    let degree = n.max(1);
    let gens = if n >= 2 { vec![cycle(n, &(0..n).collect::<Vec<_>>())] } else { vec![] };
    build(format!("Z_{n}"), degree, gens)
}

/// Symmetries of the regular `n`-gon acting on its vertices (`2n` elements).
/// `D_1` is `Z_2` and `D_2` is `Z_2 × Z_2`.
pub fn dihedral(n: usize) -> PermGroup {
    match n {
        0 | 1 => build(format!("D_{n}"), 2, vec![cycle(2, &[0, 1])]),
        2 => build("D_2".into(), 4, vec![cycle(4, &[0, 1]), cycle(4, &[2, 3])]),
        _ => {
            let r = Permutation::new((0..n).map(|x| (x + 1) % n).collect()).expect("rotation");
            let s = Permutation::new((0..n).map(|x| (n - x) % n).collect()).expect("reflection");
            build(format!("D_{n}"), n, vec![r, s])
        }
    }
}

/// `Q_8` in its regular representation. Points `0..8` stand for
/// `1, -1, i, -i, j, -j, k, -k`; the generators are left multiplication by
/// `i` and by `j`.
pub fn quaternion() -> PermGroup {
    let left_i = Permutation::new(vec![2, 3, 1, 0, 6, 7, 5, 4]).expect("left i");
    let left_j = Permutation::new(vec![4, 5, 7, 6, 1, 0, 2, 3]).expect("left j");
    build("Q8".into(), 8, vec![left_i, left_j])
}

/// Direct product acting on the disjoint union of the factors' points.
pub fn direct_product(factors: &[PermGroup]) -> PermGroup {
    let degree: usize = factors.iter().map(PermGroup::degree).sum();
    let mut gens = Vec::new();
    let mut offset = 0;
    for f in factors {
        for g in f.generators() {
            let images = (0..degree)
                .map(|x| {
                    if x >= offset && x < offset + f.degree() {
                        g.apply(x - offset) + offset
                    } else {
                        x
                    }
                })
                .collect();
            gens.push(Permutation::new(images).expect("shifted generator"));
        }
        offset += f.degree();
    }
    let name = factors.iter().map(PermGroup::name).collect::<Vec<_>>().join("x");
    build(name, degree.max(1), gens)
}

/// Resolves names such as `S4`, `A5`, `Q8`, `Z_6`, `D_4` and products
/// like `Z_2xZ_2`.
pub fn named_group(name: &str) -> Result<PermGroup, PermGroupError> {
    let trimmed = name.trim();
    if trimmed.contains('x') {
        let factors = trimmed
            .split('x')
            .map(named_group)
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(direct_product(&factors));
    }
    let unknown = || PermGroupError::UnknownGroup(name.to_string());
    if trimmed == "Q8" || trimmed == "Q_8" {
        return Ok(quaternion());
    }
    let mut chars = trimmed.chars();
    let family = chars.next().ok_or_else(unknown)?;
    let rest = chars.as_str().trim_start_matches('_');
    let n: usize = rest.parse().map_err(|_| unknown())?;
    match family {
        'S' if n <= 8 => Ok(symmetric(n)),
        'A' if n <= 8 => Ok(alternating(n)),
        'Z' | 'C' if n >= 1 => Ok(cyclic(n)),
        'D' if n >= 1 => Ok(dihedral(n)),
        _ => Err(unknown()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        let cases = [
            ("S3", 6),
            ("S_5", 120),
            ("A4", 12),
            ("A5", 60),
            ("Q8", 8),
            ("Z_6", 6),
            ("D_4", 8),
            ("D_1", 2),
            ("D_2", 4),
            ("Z_2xZ_2", 4),
            ("S1", 1),
            ("Z_1", 1),
        ];
        for (name, order) in cases {
            assert_eq!(named_group(name).unwrap().order(), order, "{name}");
        }
        assert!(named_group("Foo").is_err());
    }

    #[test]
    fn a5_generators() {
        let a5 = alternating(5);
        assert_eq!(a5.generators()[0].to_string(), "(12345)");
        assert_eq!(a5.generators()[1].to_string(), "(123)");
    }

    #[test]
    fn quaternion_relations() {
        let q = quaternion();
        let i = &q.generators()[0];
        let j = &q.generators()[1];
        let minus_one = i.compose(i);
        assert_eq!(j.compose(j), minus_one);
        assert_eq!(i.compose(j).compose(&i.compose(j)), minus_one);
        assert_eq!(minus_one.order(), 2);
        assert_eq!(q.num_classes(), 5);
    }

    #[test]
    fn dihedral_is_nonabelian_from_three() {
        assert!(dihedral(2).is_abelian());
        assert!(!dihedral(3).is_abelian());
        assert_eq!(dihedral(6).num_classes(), 6);
        assert_eq!(dihedral(5).num_classes(), 4);
    }
}
