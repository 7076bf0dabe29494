//! Sparse linear combinations over basis keys.
//!
//! Vectors are keyed by a basis index, tensors by tuples of indices. Zero
//! coefficients are never stored, so two combinations are equal exactly when
//! their term maps are.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

/// Element of a graded space, as coefficients on a homogeneous basis.
pub type GradedVector = LinComb<usize>;
/// Element of `V ⊗ W`.
pub type Tensor2 = LinComb<(usize, usize)>;
/// Element of `U ⊗ V ⊗ W`.
pub type Tensor3 = LinComb<(usize, usize, usize)>;

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(key: K, coeff: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(key, &coeff);
        out
    }

    /// Sums the given terms, merging repeated keys.
    pub fn from_terms<I: IntoIterator<Item = (K, Scalar)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, &c);
        }
        out
    }

    pub fn add_term(&mut self, key: K, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(existing) => {
                let sum = &*existing + coeff;
                if sum.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(key, coeff.clone());
            }
        }
    }

    /// `self += coeff * other`
    pub fn add_scaled(&mut self, other: &Self, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), &(c * coeff));
        }
    }

    pub fn scaled(&self, coeff: &Scalar) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, key: &K) -> Option<&Scalar> {
        self.terms.get(key)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Re-keys every term; colliding keys are summed.
    pub fn map_keys<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> L) -> LinComb<L> {
        LinComb::from_terms(self.terms.iter().map(|(k, c)| (f(k), c.clone())))
    }

    /// Scales each term by a key-dependent factor.
    pub fn map_coeffs(&self, mut f: impl FnMut(&K, &Scalar) -> Scalar) -> Self {
        LinComb::from_terms(self.terms.iter().map(|(k, c)| (k.clone(), f(k, c))))
    }
}

impl GradedVector {
    /// `self ⊗ e_k`
    pub fn tensor_right(&self, k: usize) -> Tensor2 {
        self.map_keys(|&i| (i, k))
    }

    /// `e_k ⊗ self`
    pub fn tensor_left(&self, k: usize) -> Tensor2 {
        self.map_keys(|&i| (k, i))
    }
}

impl<'a, K: Ord + Clone> Add<&'a LinComb<K>> for &'a LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: &'a LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c);
        }
        out
    }
}

impl<'a, K: Ord + Clone> Sub<&'a LinComb<K>> for &'a LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: &'a LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), &-c);
        }
        out
    }
}

impl<K: Ord + Clone> Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        self.map_coeffs(|_, c| -c)
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        LinComb::from_terms(iter)
    }
}
