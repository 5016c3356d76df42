//! Exact rationals and cyclotomic numbers.

mod cyclotomic;
mod rational;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use thiserror::Error;

pub use cyclotomic::{cyclotomic_polynomial, zeta, Cyclotomic};
pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Euler's totient.
pub fn euler_phi(n: usize) -> usize {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n % d == 0).collect()
}

pub fn lcm(a: usize, b: usize) -> usize {
    a.lcm(&b)
}

/// A commutative field with exact arithmetic.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(n: i64) -> Self;
    fn try_inv(&self) -> Result<Self, ExactError>;
}

impl Field for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn from_i64(n: i64) -> Self {
        Rational::from(n)
    }
    fn try_inv(&self) -> Result<Self, ExactError> {
        self.recip()
    }
}

impl Field for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::zero()
    }
    fn one() -> Self {
        Cyclotomic::one()
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn from_i64(n: i64) -> Self {
        Cyclotomic::from_integer(n)
    }
    fn try_inv(&self) -> Result<Self, ExactError> {
        self.inv()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn totients() {
        let expect = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, &e) in expect.iter().enumerate() {
            assert_eq!(euler_phi(i + 1), e);
        }
        assert_eq!(euler_phi(48), 16);
    }

    #[test]
    fn roots_of_unity_have_the_right_order() {
        for n in 2..=30usize {
            for k in 1..n as i64 {
                assert_eq!(zeta(n, k).pow(n as u32), Cyclotomic::one(), "zeta({n},{k})");
            }
        }
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-6i64..=6, 1i64..=4).prop_map(|(p, q)| Rational::new(p, q).unwrap())
    }

    fn element() -> impl Strategy<Value = Cyclotomic> {
        (
            prop::sample::select(vec![1usize, 3, 4, 5, 6, 8, 12, 15]),
            prop::collection::vec((0i64..24, small_rational()), 0..5),
        )
            .prop_map(|(n, terms)| Cyclotomic::from_power_sum(n, &terms))
    }

    fn numeric_power_sum(n: usize, terms: &[(i64, Rational)]) -> (f64, f64) {
        terms.iter().fold((0.0, 0.0), |(re, im), (k, c)| {
            let a = 2.0 * std::f64::consts::PI * (*k as f64) / n as f64;
            (re + c.to_f64() * a.cos(), im + c.to_f64() * a.sin())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms(a in element(), b in element(), c in element()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), Cyclotomic::one());
            }
        }

        #[test]
        fn conjugation_is_an_involutive_automorphism(a in element(), b in element()) {
            prop_assert_eq!(a.conjugate().conjugate(), a.clone());
            prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
        }

        #[test]
        fn reduction_matches_numeric_value(
            n in prop::sample::select(vec![3usize, 5, 7, 8, 9, 12, 16, 20, 24]),
            terms in prop::collection::vec((-40i64..40, small_rational()), 0..8),
        ) {
            let exact = Cyclotomic::from_power_sum(n, &terms);
            let (re, im) = exact.to_complex();
            let (nre, nim) = numeric_power_sum(n, &terms);
            prop_assert!((re - nre).abs() < 1e-10 && (im - nim).abs() < 1e-10);
        }

        #[test]
        fn minimal_order_preserves_value(a in element()) {
            let r = a.reduce_order();
            prop_assert_eq!(&r, &a);
            prop_assert_eq!(a.order() % r.order(), 0);
        }
    }
}
