use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::chartab::{
    CharacterRow, CharacterTable, ClassDescriptor, ClassFunction, ClassInfo, ClassLayout, VerificationReport,
};
use crate::exact::{zeta, Cyclotomic, Rational};

use super::classes::{all_elements, classes_over, classify, mat_inv, mat_mul, mat_order, Gl2Class, Gl2Family};
use super::field::FiniteField;
use super::Gl2Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Gl2Series {
    OneDimensional,
    Principal,
    CuspidalW,
    Complementary,
}

impl fmt::Display for Gl2Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Gl2Series::OneDimensional => "one-dimensional",
            Gl2Series::Principal => "principal",
            Gl2Series::CuspidalW => "cuspidal-W",
            Gl2Series::Complementary => "complementary",
        })
    }
}

/// An irreducible character. Characters `ξ_j` of `F_q^×` are indexed by
/// `j` via `ξ_j(r^m) = ζ_{q−1}^{jm}` for the primitive root `r`, and
/// characters `ν_k` of `F_{q²}^×` by `k` likewise. Parameters are `[j]`,
/// `[j₁, j₂]` with `j₁ < j₂`, `[j]` and `[k]` with `k` the smaller of
/// `k, qk mod (q²−1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Gl2Character {
    pub series: Gl2Series,
    pub params: Vec<u64>,
    pub degree: u64,
}

impl Gl2Character {
    pub fn name(&self) -> String {
        let p: Vec<String> = self.params.iter().map(u64::to_string).collect();
        let head = match self.series {
            Gl2Series::OneDimensional => "C",
            Gl2Series::Principal => "V",
            Gl2Series::CuspidalW => "W",
            Gl2Series::Complementary => "Y",
        };
        format!("{head}({})", p.join(","))
    }
}

#[derive(Debug, Clone)]
pub struct Gl2Table {
    field: FiniteField,
    classes: Vec<Gl2Class>,
    characters: Vec<Gl2Character>,
    table: CharacterTable,
}

pub fn gl2_table(q: u64) -> Result<Gl2Table, Gl2Error> {
    let field = FiniteField::new(q)?;
    let classes = classes_over(&field);
    let index: HashMap<(Gl2Family, Vec<u64>), usize> =
        classes.iter().enumerate().map(|(i, c)| ((c.family, c.params.clone()), i)).collect();
    let class_of = |m| index[&classify(&field, &m)];
    let power2 = classes.iter().map(|c| class_of(mat_mul(&field, &c.representative, &c.representative))).collect();
    let inverse = classes.iter().map(|c| class_of(mat_inv(&field, &c.representative))).collect();
    let layout = Arc::new(ClassLayout {
        name: format!("GL2(F_{q})"),
        group_order: super::gl2_order(q),
        classes: classes
            .iter()
            .map(|c| ClassInfo {
                label: c.label(),
                size: c.size,
                element_order: mat_order(&field, &c.representative),
                rep: None,
                descriptor: Some(ClassDescriptor {
                    family: c.family.name().to_string(),
                    params: c.params.iter().map(|&p| p as i64).collect(),
                }),
            })
            .collect(),
        power2: Some(power2),
        inverse: Some(inverse),
    });

    let mut characters = Vec::new();
    for j in 0..q - 1 {
        characters.push(Gl2Character { series: Gl2Series::OneDimensional, params: vec![j], degree: 1 });
    }
    for j1 in 0..q - 1 {
        for j2 in j1 + 1..q - 1 {
            characters.push(Gl2Character { series: Gl2Series::Principal, params: vec![j1, j2], degree: q + 1 });
        }
    }
    for j in 0..q - 1 {
        characters.push(Gl2Character { series: Gl2Series::CuspidalW, params: vec![j], degree: q });
    }
    let n2 = q * q - 1;
    for k in 0..n2 {
        if k % (q + 1) != 0 && k < k * q % n2 {
            characters.push(Gl2Character { series: Gl2Series::Complementary, params: vec![k], degree: q - 1 });
        }
    }

    let mut t = Gl2Table {
        field,
        classes,
        characters,
        table: CharacterTable::new(layout.clone(), vec![])?,
    };
    let rows = t
        .characters
        .iter()
        .map(|c| {
            let f = match c.series {
                Gl2Series::OneDimensional => t.one_dimensional(c.params[0]),
                Gl2Series::Principal => t.principal(c.params[0], c.params[1]),
                Gl2Series::CuspidalW => t.cuspidal_w(c.params[0]),
                Gl2Series::Complementary => t.complementary(c.params[0]),
            };
            CharacterRow { name: c.name(), degree: c.degree, values: f.into_values() }
        })
        .collect();
    t.table = CharacterTable::new(layout, rows)?;
    Ok(t)
}

/// Orthonormality of rows and columns, the sum of squared degrees and the
/// row count for the table of `GL₂(F_q)`.
pub fn gl2_verify(q: u64) -> Result<VerificationReport, Gl2Error> {
    Ok(gl2_table(q)?.table.verify())
}

impl Gl2Table {
    pub fn q(&self) -> u64 {
        self.field.q()
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn classes(&self) -> &[Gl2Class] {
        &self.classes
    }

    pub fn characters(&self) -> &[Gl2Character] {
        &self.characters
    }

    pub fn table(&self) -> &CharacterTable {
        &self.table
    }

    pub fn into_table(self) -> CharacterTable {
        self.table
    }

    pub fn layout(&self) -> &Arc<ClassLayout> {
        self.table.layout()
    }

    fn n2(&self) -> u64 {
        self.q() * self.q() - 1
    }

    /// `ξ_j(x)`.
    pub fn xi(&self, j: u64, x: u64) -> Cyclotomic {
        let m = (j * self.field.log(x)) % (self.q() - 1);
        zeta(self.n2() as usize, (m * (self.q() + 1)) as i64)
    }

    /// `ν_k(z)` for `z = a + b√ε`.
    pub fn nu(&self, k: u64, z: (u64, u64)) -> Cyclotomic {
        zeta(self.n2() as usize, ((k * self.field.log2(z)) % self.n2()) as i64)
    }

    /// The `j` with `ξ_j = ν_k` on `F_q^× ⊂ F_{q²}^×`.
    pub fn nu_restriction(&self, k: u64) -> u64 {
        (0..self.q() - 1)
            .find(|&j| (1..self.q()).all(|x| self.xi(j, x) == self.nu(k, (x, 0))))
            .expect("restriction of a character is a character")
    }

    fn det(&self, c: &Gl2Class) -> u64 {
        let f = &self.field;
        let p = &c.params;
        match c.family {
            Gl2Family::Scalar | Gl2Family::Parabolic => f.mul(p[0], p[0]),
            Gl2Family::Hyperbolic => f.mul(p[0], p[1]),
            Gl2Family::Elliptic => f.sub(f.mul(p[0], p[0]), f.mul(f.eps(), f.mul(p[1], p[1]))),
        }
    }

    fn function(&self, f: impl Fn(&Gl2Class) -> Cyclotomic) -> ClassFunction {
        ClassFunction::new(self.layout().clone(), self.classes.iter().map(f).collect()).expect("one value per class")
    }

    /// `g ↦ ξ_j(det g)`.
    pub fn one_dimensional(&self, j: u64) -> ClassFunction {
        self.function(|c| self.xi(j, self.det(c)))
    }

    /// The character of `Ind_B^G C_{λ₁,λ₂}`, irreducible when `j₁ ≠ j₂`.
    pub fn principal(&self, j1: u64, j2: u64) -> ClassFunction {
        let q = self.q();
        self.function(|c| {
            let p = &c.params;
            match c.family {
                Gl2Family::Scalar => (&self.xi(j1, p[0]) * &self.xi(j2, p[0])) * Cyclotomic::from(q as i64 + 1),
                Gl2Family::Parabolic => &self.xi(j1, p[0]) * &self.xi(j2, p[0]),
                Gl2Family::Hyperbolic => {
                    &self.xi(j1, p[0]) * &self.xi(j2, p[1]) + &self.xi(j1, p[1]) * &self.xi(j2, p[0])
                }
                Gl2Family::Elliptic => Cyclotomic::zero(),
            }
        })
    }

    /// `W_μ = V_{μ,μ} − C_μ`.
    pub fn cuspidal_w(&self, j: u64) -> ClassFunction {
        let q = self.q() as i64;
        self.function(|c| {
            let v = self.xi(j, self.det(c));
            match c.family {
                Gl2Family::Scalar => v * Cyclotomic::from(q),
                Gl2Family::Parabolic => Cyclotomic::zero(),
                Gl2Family::Hyperbolic => v,
                Gl2Family::Elliptic => -v,
            }
        })
    }

    /// The degree `q−1` character attached to `ν_k` with `ν_k^q ≠ ν_k`.
    pub fn complementary(&self, k: u64) -> ClassFunction {
        let q = self.q() as i64;
        self.function(|c| {
            let p = &c.params;
            match c.family {
                Gl2Family::Scalar => self.nu(k, (p[0], 0)) * Cyclotomic::from(q - 1),
                Gl2Family::Parabolic => -self.nu(k, (p[0], 0)),
                Gl2Family::Hyperbolic => Cyclotomic::zero(),
                Gl2Family::Elliptic => {
                    let z = (p[0], p[1]);
                    -(self.nu(k, z) + self.nu(k, self.field.frobenius(z)))
                }
            }
        })
    }

    /// `W_ε ⊗ V_{α,ε} − V_{α,ε} − Ind_K^G ν_k` with `α = ν_k|_{F_q^×}`, the
    /// induced characters computed by summing over the whole group.
    pub fn complementary_virtual(&self, k: u64) -> ClassFunction {
        let alpha = self.nu_restriction(k);
        let v = borel_induced(self, alpha, 0);
        let w = self.cuspidal_w(0);
        let tensor = w.mul(&v).expect("same layout");
        tensor.sub(&v).and_then(|x| x.sub(&torus_induced(self, k))).expect("same layout")
    }
}

/// `(1/|H|) Σ_{a ∈ G} φ(a g a⁻¹)` at each class representative `g`, where
/// `φ` returns an exponent of `ζ_{q²−1}` or `None` off `H`.
fn induce_by_sum(t: &Gl2Table, h_order: u64, phi: impl Fn(&[u64; 4]) -> Option<u64>) -> ClassFunction {
    let f = &t.field;
    let n2 = t.n2();
    let elems = all_elements(f);
    let inverses: Vec<_> = elems.iter().map(|a| mat_inv(f, a)).collect();
    let scale = Rational::new(1, h_order).expect("nonzero order");
    t.function(|c| {
        let mut hist = vec![0i64; n2 as usize];
        for (a, ai) in elems.iter().zip(&inverses) {
            let conj = mat_mul(f, &mat_mul(f, a, &c.representative), ai);
            if let Some(e) = phi(&conj) {
                hist[e as usize] += 1;
            }
        }
        let terms: Vec<(i64, Rational)> = hist
            .iter()
            .enumerate()
            .filter(|(_, &m)| m != 0)
            .map(|(e, &m)| (e as i64, Rational::from(m)))
            .collect();
        Cyclotomic::from_power_sum(n2 as usize, &terms).scale(&scale)
    })
}

/// The character of `Ind_B^G C_{ξ_{j₁}, ξ_{j₂}}` for the upper-triangular
/// Borel subgroup `B`, computed from the definition.
pub fn borel_induced(t: &Gl2Table, j1: u64, j2: u64) -> ClassFunction {
    let q = t.q();
    let f = &t.field;
    induce_by_sum(t, (q - 1) * (q - 1) * q, |m| {
        (m[2] == 0).then(|| ((j1 * f.log(m[0]) + j2 * f.log(m[3])) % (q - 1)) * (q + 1))
    })
}

/// The character of `Ind_K^G ν_k` for the elliptic torus
/// `K = {[[x, εy], [y, x]]} ≅ F_{q²}^×`, computed from the definition.
pub fn torus_induced(t: &Gl2Table, k: u64) -> ClassFunction {
    let f = &t.field;
    let n2 = t.n2();
    induce_by_sum(t, n2, |m| {
        (m[0] == m[3] && m[1] == f.mul(f.eps(), m[2])).then(|| (k * f.log2((m[0], m[2]))) % n2)
    })
}
