use std::fmt;

use serde::Serialize;

use super::field::FiniteField;
use super::Gl2Error;

/// `[[a, b], [c, d]]` stored row-major with entries mod `q`.
pub type Mat2 = [u64; 4];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Gl2Family {
    Scalar,
    Parabolic,
    Hyperbolic,
    Elliptic,
}

impl Gl2Family {
    pub fn name(self) -> &'static str {
        match self {
            Gl2Family::Scalar => "scalar",
            Gl2Family::Parabolic => "parabolic",
            Gl2Family::Hyperbolic => "hyperbolic",
            Gl2Family::Elliptic => "elliptic",
        }
    }
}

impl fmt::Display for Gl2Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A conjugacy class. Parameters are `[x]` for scalar and parabolic
/// classes, `[x, y]` with `x < y` for the eigenvalue pair of a hyperbolic
/// class, and `[x, y]` with `1 ≤ y ≤ (q−1)/2` for the eigenvalues
/// `x ± y√ε` of an elliptic class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Gl2Class {
    pub family: Gl2Family,
    pub params: Vec<u64>,
    pub size: u64,
    pub representative: Mat2,
}

impl Gl2Class {
    pub fn label(&self) -> String {
        let p: Vec<String> = self.params.iter().map(u64::to_string).collect();
        format!("{}({})", self.family, p.join(","))
    }
}

pub fn gl2_order(q: u64) -> u64 {
    (q * q - 1) * (q * q - q)
}

pub fn gl2_classes(q: u64) -> Result<Vec<Gl2Class>, Gl2Error> {
    let f = FiniteField::new(q)?;
    Ok(classes_over(&f))
}

pub(crate) fn classes_over(f: &FiniteField) -> Vec<Gl2Class> {
    let q = f.q();
    let eps = f.eps();
    let mut out = Vec::new();
    for x in 1..q {
        out.push(Gl2Class { family: Gl2Family::Scalar, params: vec![x], size: 1, representative: [x, 0, 0, x] });
    }
    for x in 1..q {
        out.push(Gl2Class {
            family: Gl2Family::Parabolic,
            params: vec![x],
            size: q * q - 1,
            representative: [x, 1, 0, x],
        });
    }
    for x in 1..q {
        for y in x + 1..q {
            out.push(Gl2Class {
                family: Gl2Family::Hyperbolic,
                params: vec![x, y],
                size: q * q + q,
                representative: [x, 0, 0, y],
            });
        }
    }
    for x in 0..q {
        for y in 1..=(q - 1) / 2 {
            out.push(Gl2Class {
                family: Gl2Family::Elliptic,
                params: vec![x, y],
                size: q * q - q,
                representative: [x, eps * y % q, y, x],
            });
        }
    }
    out
}

/// Family and parameters of the class containing an invertible `m`, read
/// off from its trace, determinant and whether it is scalar.
pub fn classify(f: &FiniteField, m: &Mat2) -> (Gl2Family, Vec<u64>) {
    let q = f.q();
    let [a, b, c, d] = *m;
    let t = f.add(a, d);
    let det = f.sub(f.mul(a, d), f.mul(b, c));
    let disc = f.sub(f.mul(t, t), f.mul(4, det));
    let half = f.inv(2);
    let x = f.mul(t, half);
    if disc == 0 {
        if b == 0 && c == 0 {
            (Gl2Family::Scalar, vec![x])
        } else {
            (Gl2Family::Parabolic, vec![x])
        }
    } else if f.is_square(disc) {
        let s = f.mul(f.sqrt(disc).expect("square"), half);
        let (u, v) = (f.add(x, s), f.sub(x, s));
        (Gl2Family::Hyperbolic, vec![u.min(v), u.max(v)])
    } else {
        let y2 = f.mul(disc, f.inv(f.mul(4, f.eps())));
        let y = f.sqrt(y2).expect("disc/(4ε) is a square");
        (Gl2Family::Elliptic, vec![x, y.min(q - y)])
    }
}

pub(crate) fn mat_mul(f: &FiniteField, m: &Mat2, n: &Mat2) -> Mat2 {
    let q = f.q();
    [
        (m[0] * n[0] + m[1] * n[2]) % q,
        (m[0] * n[1] + m[1] * n[3]) % q,
        (m[2] * n[0] + m[3] * n[2]) % q,
        (m[2] * n[1] + m[3] * n[3]) % q,
    ]
}

pub(crate) fn mat_inv(f: &FiniteField, m: &Mat2) -> Mat2 {
    let q = f.q();
    let det = f.sub(f.mul(m[0], m[3]), f.mul(m[1], m[2]));
    let di = f.inv(det);
    [f.mul(m[3], di), f.mul((q - m[1]) % q, di), f.mul((q - m[2]) % q, di), f.mul(m[0], di)]
}

pub(crate) fn mat_order(f: &FiniteField, m: &Mat2) -> u64 {
    let id = [1, 0, 0, 1];
    let mut p = *m;
    let mut k = 1;
    while p != id {
        p = mat_mul(f, &p, m);
        k += 1;
    }
    k
}

/// Every invertible 2×2 matrix over `F_q`.
pub(crate) fn all_elements(f: &FiniteField) -> Vec<Mat2> {
    let q = f.q();
    let mut out = Vec::with_capacity(gl2_order(q) as usize);
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    if (a * d + q * q - b * c % q) % q != 0 {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}
