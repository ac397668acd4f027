//! Dense tensors over `R^n` and the alternation projector.
//!
//! An order-`m` tensor has `n^m` components indexed by placements in
//! lexicographic rank order.
//!
//! Conventions relating tensors to multivectors:
//!
//! * `alt(t)[J] = (1/m!) Σ_p parity(p) t[J∘p]`;
//! * `embed(e_I) = Σ_p parity(p) e_{I∘p}`, i.e. `m! alt(e_{i1} ⊗ .. ⊗ e_{im})`;
//! * consequently `embed(u ∧ v) = ((p+q)!/(p! q!)) alt(embed u ⊗ embed v)`.

use rayon::prelude::*;

use crate::error::{dim_err, domain_err, Result};
use crate::index::{enum_permutations, enum_placements, Permutation, Placement, Sign};
use crate::multivector::Multivector;
use crate::scalar::{inverse_factorial, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor<T> {
    dim: usize,
    order: usize,
    components: Vec<T>,
}

fn component_count(dim: usize, order: usize) -> Result<usize> {
    u32::try_from(order)
        .ok()
        .and_then(|o| dim.checked_pow(o))
        .ok_or_else(|| crate::Error::Domain(format!("{dim}^{order} components overflow")))
}

impl<T: Scalar> Tensor<T> {
    pub fn new(dim: usize, order: usize, components: Vec<T>) -> Result<Self> {
        let count = component_count(dim, order)?;
        if components.len() != count {
            return dim_err(format!(
                "{} components for an order-{order} tensor over {dim} (need {count})",
                components.len()
            ));
        }
        Ok(Tensor { dim, order, components })
    }

    pub fn zero(dim: usize, order: usize) -> Result<Self> {
        let count = component_count(dim, order)?;
        Ok(Tensor { dim, order, components: vec![T::zero(); count] })
    }

    pub fn vector(coords: Vec<T>) -> Self {
        Tensor { dim: coords.len(), order: 1, components: coords }
    }

    /// The basis tensor `e_{w1} ⊗ .. ⊗ e_{wm}`.
    pub fn basis(p: &Placement) -> Self {
        let mut t = Tensor::zero(p.dim(), p.len()).expect("placement fits");
        t.components[p.rank()] = T::one();
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn components(&self) -> &[T] {
        &self.components
    }

    pub fn get(&self, p: &Placement) -> &T {
        assert!(p.dim() == self.dim && p.len() == self.order, "placement shape mismatch");
        &self.components[p.rank()]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(T::is_zero)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        if (self.dim, self.order) != (other.dim, other.order) {
            return dim_err(format!(
                "tensors of shape {}^{} and {}^{}",
                self.dim, self.order, other.dim, other.order
            ));
        }
        let components = self.components.iter().zip(&other.components).map(|(a, b)| f(a, b)).collect();
        Ok(Tensor { dim: self.dim, order: self.order, components })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.clone() - b.clone())
    }

    pub fn scale(&self, s: &T) -> Self {
        let components = self.components.iter().map(|c| c.clone() * s.clone()).collect();
        Tensor { dim: self.dim, order: self.order, components }
    }

    /// `(s ⊗ t)[J K] = s[J] t[K]`.
    pub fn tensor_product(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return dim_err(format!("ambient dimensions {} and {}", self.dim, other.dim));
        }
        let order = self.order + other.order;
        component_count(self.dim, order)?;
        let mut components = Vec::with_capacity(self.components.len() * other.components.len());
        for a in &self.components {
            components.extend(other.components.iter().map(|b| a.clone() * b.clone()));
        }
        Ok(Tensor { dim: self.dim, order, components })
    }

    fn placements(&self) -> Vec<Placement> {
        enum_placements(self.dim, self.order).expect("valid shape").collect()
    }

    /// Projection onto the alternating tensors.
    pub fn alt(&self) -> Self {
        let perms: Vec<(Permutation, Sign)> = enum_permutations(self.order)
            .map(|p| {
                let s = p.parity();
                (p, s)
            })
            .collect();
        let norm = inverse_factorial::<T>(self.order);
        let components = self
            .placements()
            .par_iter()
            .map(|j| {
                let sum = perms.iter().fold(T::zero(), |acc, (p, s)| {
                    acc + s.apply(self.components[j.permuted(p).rank()].clone())
                });
                sum * norm.clone()
            })
            .collect();
        Tensor { dim: self.dim, order: self.order, components }
    }

    /// Zero on placements with a repeated letter and odd under every
    /// adjacent transposition.
    pub fn is_alternating(&self) -> bool {
        self.placements().iter().all(|j| {
            let c = &self.components[j.rank()];
            if j.has_repeats() {
                return c.is_zero();
            }
            (1..self.order).all(|k| {
                let swapped = &self.components[j.swapped(k - 1, k).rank()];
                *swapped == -c.clone()
            })
        })
    }

    /// Identifies a multivector with an alternating tensor.
    pub fn embed_multivector(v: &Multivector<T>) -> Result<Self> {
        let mut t = Tensor::<T>::zero(v.dim(), v.grade())?;
        let perms: Vec<Permutation> = enum_permutations(v.grade()).collect();
        for (index, coeff) in v.terms() {
            let base = index.to_placement();
            for p in &perms {
                let slot = base.permuted(p).rank();
                t.components[slot] = t.components[slot].clone() + p.parity().apply(coeff.clone());
            }
        }
        Ok(t)
    }

    /// Reads the components at strictly increasing placements. Inverse of
    /// [`Tensor::embed_multivector`] on alternating tensors.
    pub fn project_multivector(&self) -> Result<Multivector<T>> {
        if !self.is_alternating() {
            return domain_err("tensor is not alternating");
        }
        let terms = self
            .placements()
            .into_iter()
            .filter_map(|p| p.as_combination())
            .map(|c| {
                let coeff = self.components[c.to_placement().rank()].clone();
                (c, coeff)
            });
        Multivector::from_terms(self.dim, self.order, terms)
    }
}
