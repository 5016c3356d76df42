use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{divisors, euler_phi, ExactError, Rational};

/// Reduction data for `Q(ζ_n)`: row `k` of `powers` holds the coordinates of
/// `ζ^k` in the basis `1, ζ, …, ζ^{φ(n)-1}`.
#[derive(Debug)]
struct FieldData {
    phi: usize,
    powers: Vec<Vec<i64>>,
}

fn field_cache() -> &'static RwLock<HashMap<usize, Arc<FieldData>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<FieldData>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn field_data(n: usize) -> Arc<FieldData> {
    if let Some(d) = field_cache().read().expect("cyclotomic cache poisoned").get(&n) {
        return d.clone();
    }
    let poly = cyclotomic_polynomial(n);
    let phi = poly.len() - 1;
    let mut powers = Vec::with_capacity(n);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..n {
        powers.push(cur.clone());
        // multiply by x and fold x^phi back using the monic relation
        let top = cur[phi - 1];
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for (i, c) in cur.iter_mut().enumerate() {
                *c -= top * poly[i];
            }
        }
    }
    let data = Arc::new(FieldData { phi, powers });
    field_cache()
        .write()
        .expect("cyclotomic cache poisoned")
        .insert(n, data.clone());
    data
}

/// Coefficients (constant term first) of the `n`-th cyclotomic polynomial,
/// obtained by dividing `x^n - 1` by `Φ_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    assert!(n >= 1, "cyclotomic order must be positive");
    static CACHE: OnceLock<RwLock<HashMap<usize, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(p) = cache.read().expect("poly cache poisoned").get(&n) {
        return p.clone();
    }
    let mut num = vec![0i64; n + 1];
    num[0] = -1;
    num[n] = 1;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        num = divide_monic(&num, &cyclotomic_polynomial(d));
    }
    cache.write().expect("poly cache poisoned").insert(n, num.clone());
    num
}

/// Exact quotient of `num` by the monic polynomial `den`.
fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![0i64; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dn];
        quot[k] = c;
        if c != 0 {
            for (i, d) in den.iter().enumerate() {
                rem[k + i] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// An element of the cyclotomic field `Q(ζ_n)`, stored as integer coordinates
/// over a common positive denominator in the power basis
/// `1, ζ_n, …, ζ_n^{φ(n)-1}`.
#[derive(Clone)]
pub struct Cyclotomic {
    order: usize,
    num: Vec<BigInt>,
    den: BigInt,
}

/// `ζ_n^k` reduced modulo `Φ_n`.
pub fn zeta(n: usize, k: i64) -> Cyclotomic {
    assert!(n >= 1, "root of unity order must be positive");
    let idx = k.rem_euclid(n as i64) as usize;
    let data = field_data(n);
    let num = data.powers[idx].iter().map(|&c| BigInt::from(c)).collect();
    Cyclotomic { order: n, num, den: BigInt::one() }
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic { order: 1, num: vec![BigInt::zero()], den: BigInt::one() }
    }

    pub fn one() -> Self {
        Cyclotomic::from_integer(1)
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Cyclotomic { order: 1, num: vec![n.into()], den: BigInt::one() }
    }

    pub fn from_rational(r: &Rational) -> Self {
        Cyclotomic { order: 1, num: vec![r.numer().clone()], den: r.denom().clone() }
    }

    /// Builds an element from rational coordinates in the power basis of
    /// order `n`.
    pub fn from_coeffs(n: usize, coeffs: &[Rational]) -> Result<Self, ExactError> {
        if n == 0 {
            return Err(ExactError::Parse("cyclotomic order must be positive".into()));
        }
        let phi = euler_phi(n);
        if coeffs.len() != phi {
            return Err(ExactError::Parse(format!(
                "order {n} needs {phi} coefficients, got {}",
                coeffs.len()
            )));
        }
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Ok(Cyclotomic { order: n, num, den }.normalized())
    }

    /// Sum of `c_k ζ_n^k` for an arbitrary exponent list.
    pub fn from_power_sum(n: usize, terms: &[(i64, Rational)]) -> Self {
        terms
            .iter()
            .map(|(k, c)| zeta(n, *k).scale(c))
            .fold(Cyclotomic::zero(), |acc, x| acc + x)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|c| Rational::new(c.clone(), self.den.clone()).expect("positive denominator"))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational()
            .then(|| Rational::new(self.num[0].clone(), self.den.clone()).expect("positive denominator"))
    }

    /// The value as an integer, if it is a rational integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().and_then(|r| r.to_integer())
    }

    fn normalized(mut self) -> Self {
        if self.is_zero() {
            self.den = BigInt::one();
            return self;
        }
        let g = self.num.iter().fold(self.den.clone(), |acc, c| acc.gcd(c));
        if !g.is_one() {
            for c in &mut self.num {
                *c = &*c / &g;
            }
            self.den = &self.den / &g;
        }
        self
    }

    /// Reduces a coefficient vector indexed by exponents `0..n` (the group
    /// ring of `Z/n`) into the power basis.
    fn from_exponent_vector(n: usize, exps: Vec<BigInt>, den: BigInt) -> Self {
        let data = field_data(n);
        let mut num = vec![BigInt::zero(); data.phi];
        for (k, c) in exps.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < data.phi {
                num[k] += c;
                continue;
            }
            for (slot, &p) in num.iter_mut().zip(&data.powers[k]) {
                if p != 0 {
                    *slot += &c * p;
                }
            }
        }
        Cyclotomic { order: n, num, den }.normalized()
    }

    /// Embeds into `Q(ζ_m)`; `m` must be a multiple of the current order.
    pub fn embed(&self, m: usize) -> Self {
        assert!(m % self.order == 0, "cannot embed order {} into {m}", self.order);
        if m == self.order {
            return self.clone();
        }
        let step = m / self.order;
        let mut exps = vec![BigInt::zero(); m];
        for (j, c) in self.num.iter().enumerate() {
            exps[j * step] = c.clone();
        }
        Cyclotomic::from_exponent_vector(m, exps, self.den.clone())
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        if self.order == other.order {
            return (self.clone(), other.clone());
        }
        let m = self.order.lcm(&other.order);
        (self.embed(m), other.embed(m))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let num = self.num.iter().map(|c| c * r.numer()).collect();
        Cyclotomic { order: self.order, num, den: &self.den * r.denom() }.normalized()
    }

    /// The Galois automorphism `ζ ↦ ζ^t`; `t` must be coprime to the order.
    pub fn galois(&self, t: i64) -> Self {
        let n = self.order;
        let t = t.rem_euclid(n as i64) as usize;
        assert!(t.gcd(&n) == 1 || n == 1, "Galois exponent {t} not a unit mod {n}");
        if n <= 2 || t == 1 {
            return self.clone();
        }
        let mut exps = vec![BigInt::zero(); n];
        for (j, c) in self.num.iter().enumerate() {
            exps[(j * t) % n] += c;
        }
        Cyclotomic::from_exponent_vector(n, exps, self.den.clone())
    }

    /// Complex conjugation, `ζ ↦ ζ^{-1}`.
    pub fn conjugate(&self) -> Self {
        self.galois(-1)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Cyclotomic::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        result
    }

    /// Multiplicative inverse via the norm: `a⁻¹ = ∏_{σ≠1} σ(a) / N(a)`.
    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(Cyclotomic::from_rational(&r.recip()?));
        }
        let n = self.order;
        let mut conj_product = Cyclotomic::one();
        for t in 2..n {
            if t.gcd(&n) == 1 {
                conj_product = &conj_product * &self.galois(t as i64);
            }
        }
        let norm = (&conj_product * self)
            .to_rational()
            .expect("field norm is rational");
        Ok(conj_product.scale(&norm.recip()?))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ExactError> {
        Ok(self * &other.inv()?)
    }

    /// Smallest `d | n` with the value in `Q(ζ_d)`: the value must be fixed
    /// by every `ζ ↦ ζ^t` with `t ≡ 1 (mod d)`.
    pub fn minimal_order(&self) -> usize {
        let n = self.order;
        if self.is_rational() {
            return 1;
        }
        for d in divisors(n) {
            let fixed = (1..n)
                .filter(|t| t.gcd(&n) == 1 && t % d == 1 % d)
                .all(|t| self.galois(t as i64) == *self);
            if fixed {
                return d;
            }
        }
        n
    }

    /// The same value expressed at its minimal order.
    pub fn reduce_order(&self) -> Self {
        let d = self.minimal_order();
        if d == self.order {
            return self.clone();
        }
        if d == 1 {
            return Cyclotomic::from_rational(&self.to_rational().expect("rational value"));
        }
        // Solve E·c = a where column j of E is ζ_d^j embedded at order n.
        let phi_d = euler_phi(d);
        let columns: Vec<Cyclotomic> = (0..phi_d).map(|j| zeta(d, j as i64).embed(self.order)).collect();
        let target = self.coeffs();
        let rows = target.len();
        let mut aug: Vec<Vec<Rational>> = (0..rows)
            .map(|i| {
                let mut row: Vec<Rational> = columns
                    .iter()
                    .map(|c| Rational::from(c.num[i].clone()))
                    .collect();
                row.push(target[i].clone());
                row
            })
            .collect();
        let coords = solve_square_embedding(&mut aug, phi_d);
        Cyclotomic::from_coeffs(d, &coords).expect("coordinate count matches")
    }

    /// Numeric value `(re, im)` in `C`; a test oracle only.
    pub fn to_complex(&self) -> (f64, f64) {
        let den = Rational::from(self.den.clone()).to_f64();
        let n = self.order as f64;
        self.num.iter().enumerate().fold((0.0, 0.0), |(re, im), (k, c)| {
            let c = Rational::from(c.clone()).to_f64() / den;
            let angle = 2.0 * PI * k as f64 / n;
            (re + c * angle.cos(), im + c * angle.sin())
        })
    }

    /// Exponent-indexed coordinates (length = order) of a short
    /// representation; used for printing.
    fn display_terms(&self) -> (usize, Vec<Rational>) {
        let v = self.reduce_order();
        let m = v.order;
        let mut exps: Vec<Rational> = (0..m)
            .map(|k| {
                if k < v.num.len() {
                    Rational::new(v.num[k].clone(), v.den.clone()).expect("positive denominator")
                } else {
                    Rational::zero()
                }
            })
            .collect();
        if let Some(p) = prime_power_base(m) {
            // for each coset t + j·m/p the p powers sum to zero
            let stride = m / p;
            for t in 0..stride {
                let members: Vec<usize> = (0..p).map(|j| t + j * stride).collect();
                let mut counts: Vec<(Rational, usize)> = Vec::new();
                for &k in &members {
                    match counts.iter_mut().find(|(v, _)| *v == exps[k]) {
                        Some(entry) => entry.1 += 1,
                        None => counts.push((exps[k].clone(), 1)),
                    }
                }
                let best = counts
                    .iter()
                    .max_by(|a, b| {
                        a.1.cmp(&b.1)
                            .then_with(|| b.0.is_zero().cmp(&a.0.is_zero()).reverse())
                            .then_with(|| b.0.abs().cmp(&a.0.abs()))
                    })
                    .map(|(v, _)| v.clone())
                    .unwrap_or_else(Rational::zero);
                if !best.is_zero() {
                    for &k in &members {
                        exps[k] = &exps[k] - &best;
                    }
                }
            }
        }
        (m, exps)
    }
}

fn prime_power_base(m: usize) -> Option<usize> {
    if m < 2 {
        return None;
    }
    let p = (2..=m).find(|p| m % p == 0)?;
    let mut r = m;
    while r % p == 0 {
        r /= p;
    }
    (r == 1).then_some(p)
}

/// Gaussian elimination on an overdetermined but consistent system with
/// `unknowns` columns plus an augmented column.
fn solve_square_embedding(aug: &mut [Vec<Rational>], unknowns: usize) -> Vec<Rational> {
    let rows = aug.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..unknowns {
        let Some(p) = (r..rows).find(|&i| !aug[i][c].is_zero()) else { continue };
        aug.swap(r, p);
        let inv = aug[r][c].recip().expect("nonzero pivot");
        for x in aug[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = aug[r].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut out = vec![Rational::zero(); unknowns];
    for (i, &c) in pivots.iter().enumerate() {
        out[c] = aug[i][unknowns].clone();
    }
    out
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.den == other.den && self.num == other.num;
        }
        let (a, b) = self.common(other);
        a.den == b.den && a.num == b.num
    }
}

impl Eq for Cyclotomic {}

impl Default for Cyclotomic {
    fn default() -> Self {
        Cyclotomic::zero()
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Cyclotomic::from_rational(&r)
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_integer(n)
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let (a, b) = self.common(rhs);
        let num = a
            .num
            .iter()
            .zip(&b.num)
            .map(|(x, y)| x * &b.den + y * &a.den)
            .collect();
        Cyclotomic { order: a.order, num, den: &a.den * &b.den }.normalized()
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        if self.is_zero() || rhs.is_zero() {
            return Cyclotomic::zero();
        }
        if let Some(r) = self.to_rational() {
            return rhs.scale(&r);
        }
        if let Some(r) = rhs.to_rational() {
            return self.scale(&r);
        }
        let (a, b) = self.common(rhs);
        let n = a.order;
        let mut exps = vec![BigInt::zero(); n];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if !y.is_zero() {
                    exps[(i + j) % n] += x * y;
                }
            }
        }
        Cyclotomic::from_exponent_vector(n, exps, &a.den * &b.den)
    }
}

macro_rules! owned_ops {
    ($tr:ident, $method:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &'a Cyclotomic) -> Cyclotomic {
                (&self).$method(rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for Cyclotomic {
    /// Prints the value at its minimal order, e.g. `-z5^2-z5^3` or `1/2+z4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{r}");
        }
        let (m, exps) = self.display_terms();
        if m == 1 {
            return write!(f, "{}", exps[0]);
        }
        let mut out = String::new();
        for (k, c) in exps.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if negative {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let power = match k {
                0 => String::new(),
                1 => format!("z{m}"),
                _ => format!("z{m}^{k}"),
            };
            if k == 0 {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&power);
            } else {
                out.push_str(&format!("{mag}*{power}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct CyclotomicRepr {
    order: usize,
    coeffs: Vec<Rational>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        CyclotomicRepr { order: self.order, coeffs: self.coeffs() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = CyclotomicRepr::deserialize(deserializer)?;
        Cyclotomic::from_coeffs(repr.order, &repr.coeffs).map_err(D::Error::custom)
    }
}
