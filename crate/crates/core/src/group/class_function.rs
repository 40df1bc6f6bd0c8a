//! Class functions: complex functions on a group constant on conjugacy
//! classes, stored as one value per class.

use std::sync::Arc;

use num_complex::Complex64;

use super::{FiniteGroup, GroupError};

/// A complex class function, one value per conjugacy class.
#[derive(Debug, Clone)]
pub struct ClassFunction {
    group: Arc<FiniteGroup>,
    values: Vec<Complex64>,
}

impl ClassFunction {
    /// Build from per-class values.
    pub fn from_class_values(
        group: Arc<FiniteGroup>,
        values: Vec<Complex64>,
    ) -> Result<Self, GroupError> {
        let k = group.classes().count();
        if values.len() != k {
            return Err(GroupError::ValueCountMismatch(values.len(), k));
        }
        Ok(ClassFunction { group, values })
    }

    /// Character of the regular representation: |G| at the identity, 0
    /// elsewhere.
    pub fn regular(group: Arc<FiniteGroup>) -> Self {
        let k = group.classes().count();
        let mut values = vec![Complex64::new(0.0, 0.0); k];
        values[0] = Complex64::new(group.order() as f64, 0.0);
        ClassFunction { group, values }
    }

    /// The trivial character, constantly 1.
    pub fn trivial(group: Arc<FiniteGroup>) -> Self {
        let k = group.classes().count();
        ClassFunction {
            group,
            values: vec![Complex64::new(1.0, 0.0); k],
        }
    }

    /// Scaled indicator f_C: |G|/|C| on class C, 0 elsewhere.
    pub fn class_indicator(group: Arc<FiniteGroup>, class: usize) -> Result<Self, GroupError> {
        let k = group.classes().count();
        if class >= k {
            return Err(GroupError::ClassOutOfRange(class, k));
        }
        let mut values = vec![Complex64::new(0.0, 0.0); k];
        values[class] = Complex64::new(group.order() as f64 / group.classes().size(class) as f64, 0.0);
        Ok(ClassFunction { group, values })
    }

    /// A seeded pseudo-random class function with values in the unit square.
    pub fn random(group: Arc<FiniteGroup>, seed: u64) -> Self {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let k = group.classes().count();
        let values = (0..k)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        ClassFunction { group, values }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Per-class values, indexed by class id.
    pub fn class_values(&self) -> &[Complex64] {
        &self.values
    }

    /// Value at a group element.
    pub fn eval(&self, element: usize) -> Complex64 {
        self.values[self.group.classes().class_of(element)]
    }

    /// Value at the identity.
    pub fn at_identity(&self) -> Complex64 {
        self.values[0]
    }

    /// Integer per-class values if every value rounds to an integer within
    /// `tol` (used to pick the exact evaluation path).
    pub fn integer_values(&self, tol: f64) -> Option<Vec<i64>> {
        let mut out = Vec::with_capacity(self.values.len());
        for v in &self.values {
            let r = v.re.round();
            if (v.re - r).abs() > tol || v.im.abs() > tol {
                return None;
            }
            out.push(r as i64);
        }
        Some(out)
    }

    /// The inner product (1/|G|) sum_g a(g) b(g^-1), computed classwise.
    pub fn inner_product(&self, other: &ClassFunction) -> Result<Complex64, GroupError> {
        if !self.group.same_group(&other.group) {
            return Err(GroupError::GroupMismatch);
        }
        let classes = self.group.classes();
        let mut sum = Complex64::new(0.0, 0.0);
        for c in 0..classes.count() {
            let c_inv = classes.inverse_class(c);
            sum += classes.size(c) as f64 * self.values[c] * other.values[c_inv];
        }
        Ok(sum / self.group.order() as f64)
    }
}

/// Free-function alias for [`ClassFunction::inner_product`].
pub fn inner_product(a: &ClassFunction, b: &ClassFunction) -> Result<Complex64, GroupError> {
    a.inner_product(b)
}
