use std::sync::Arc;

use crate::exact::{Cyclotomic, Rational};

use super::{ChartabError, ClassLayout};

/// A function on a group that is constant on conjugacy classes, stored as
/// one value per class of its layout.
#[derive(Debug, Clone)]
pub struct ClassFunction {
    layout: Arc<ClassLayout>,
    values: Vec<Cyclotomic>,
}

/// Whether two layouts describe the same classes. Names and labels are
/// presentation only and do not take part.
pub fn same_group(a: &Arc<ClassLayout>, b: &Arc<ClassLayout>) -> bool {
    if Arc::ptr_eq(a, b) {
        return true;
    }
    a.group_order == b.group_order
        && a.classes.len() == b.classes.len()
        && a.classes.iter().zip(&b.classes).all(|(x, y)| {
            x.size == y.size && x.element_order == y.element_order && x.rep == y.rep && x.descriptor == y.descriptor
        })
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        same_group(&self.layout, &other.layout) && self.values == other.values
    }
}

impl ClassFunction {
    pub fn new(layout: Arc<ClassLayout>, values: Vec<Cyclotomic>) -> Result<Self, ChartabError> {
        if values.len() != layout.len() {
            return Err(ChartabError::LengthMismatch { expected: layout.len(), found: values.len() });
        }
        Ok(ClassFunction { layout, values })
    }

    pub fn from_ints(layout: Arc<ClassLayout>, values: &[i64]) -> Result<Self, ChartabError> {
        Self::new(layout, values.iter().map(|&v| Cyclotomic::from_integer(v)).collect())
    }

    pub fn zero(layout: Arc<ClassLayout>) -> Self {
        let values = vec![Cyclotomic::zero(); layout.len()];
        ClassFunction { layout, values }
    }

    pub fn trivial(layout: Arc<ClassLayout>) -> Self {
        let values = vec![Cyclotomic::one(); layout.len()];
        ClassFunction { layout, values }
    }

    /// `|G|` at the identity and zero elsewhere.
    pub fn regular(layout: Arc<ClassLayout>) -> Self {
        let id = layout.identity_class();
        let values = (0..layout.len())
            .map(|c| if c == id { Cyclotomic::from_integer(layout.group_order) } else { Cyclotomic::zero() })
            .collect();
        ClassFunction { layout, values }
    }

    pub fn layout(&self) -> &Arc<ClassLayout> {
        &self.layout
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Cyclotomic> {
        self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    /// Value at the identity class.
    pub fn degree(&self) -> &Cyclotomic {
        &self.values[self.layout.identity_class()]
    }

    fn check_same(&self, other: &Self) -> Result<(), ChartabError> {
        if same_group(&self.layout, &other.layout) {
            Ok(())
        } else {
            Err(ChartabError::GroupMismatch(self.layout.name.clone(), other.layout.name.clone()))
        }
    }

    fn zip_with(
        &self,
        other: &Self,
        f: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic,
    ) -> Result<Self, ChartabError> {
        self.check_same(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect();
        Ok(ClassFunction { layout: self.layout.clone(), values })
    }

    pub fn add(&self, other: &Self) -> Result<Self, ChartabError> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ChartabError> {
        self.zip_with(other, |a, b| a - b)
    }

    /// Pointwise product, the character of the tensor product.
    pub fn mul(&self, other: &Self) -> Result<Self, ChartabError> {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        ClassFunction { layout: self.layout.clone(), values: self.values.iter().map(|v| v * c).collect() }
    }

    pub fn neg(&self) -> Self {
        ClassFunction { layout: self.layout.clone(), values: self.values.iter().map(|v| -v).collect() }
    }

    /// The Hermitian product `(1/|G|) Σ_g f₁(g)·conj(f₂(g))`.
    pub fn inner_product(&self, other: &Self) -> Result<Cyclotomic, ChartabError> {
        self.check_same(other)?;
        Ok(inner_with_conjugates(&self.layout, &self.values, &conjugates(&other.values)))
    }

    pub fn norm_squared(&self) -> Cyclotomic {
        inner_with_conjugates(&self.layout, &self.values, &conjugates(&self.values))
    }

    /// Character of the dual representation: complex conjugation.
    pub fn dual(&self) -> Self {
        ClassFunction { layout: self.layout.clone(), values: conjugates(&self.values) }
    }

    /// `(1/|G|) Σ_g χ(g²)`, defined for characters of norm one.
    pub fn frobenius_schur(&self) -> Result<Cyclotomic, ChartabError> {
        let p2 = self.layout.power2.as_ref().ok_or(ChartabError::MissingPowerMap)?;
        if self.norm_squared() != Cyclotomic::one() {
            return Err(ChartabError::NotUnitNorm(self.norm_squared().to_string()));
        }
        let sum: Cyclotomic = self
            .layout
            .classes
            .iter()
            .zip(p2)
            .map(|(c, &sq)| self.values[sq].scale(&Rational::from(c.size)))
            .sum();
        Ok(sum.scale(&Rational::new(1, self.layout.group_order).expect("nonzero order")))
    }

    /// True iff `(f, f) = 1` and `f(1)` is a positive integer, the test for a
    /// virtual character to be irreducible.
    pub fn is_irreducible_virtual(&self) -> bool {
        let positive_degree = self
            .degree()
            .to_rational()
            .is_some_and(|d| d.is_integer() && d > 0);
        positive_degree && self.norm_squared() == Cyclotomic::one()
    }
}

pub(crate) fn conjugates(values: &[Cyclotomic]) -> Vec<Cyclotomic> {
    values.iter().map(Cyclotomic::conjugate).collect()
}

/// Inner product against values that are already conjugated.
pub(crate) fn inner_with_conjugates(layout: &ClassLayout, f: &[Cyclotomic], conj_g: &[Cyclotomic]) -> Cyclotomic {
    let sum: Cyclotomic = layout
        .classes
        .iter()
        .zip(f.iter().zip(conj_g))
        .filter(|(_, (a, b))| !a.is_zero() && !b.is_zero())
        .map(|(c, (a, b))| (a * b).scale(&Rational::from(c.size)))
        .sum();
    sum.scale(&Rational::new(1, layout.group_order).expect("nonzero order"))
}
