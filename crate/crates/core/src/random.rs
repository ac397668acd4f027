//! Seeded generators for exact test inputs.
//!
//! All randomness comes from SplitMix64 (Steele, Lea and Flood's 64-bit
//! mixing generator, as packaged by `rand_xoshiro`), so a seed fully
//! determines every generated value on every platform.

use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::forms::{PolyForm, Polynomial};
use crate::index::{enum_combinations, Combination};
use crate::matrix::Matrix;
use crate::multivector::{GradedElement, Multivector};
use crate::scalar::{int, rational};
use crate::tensor::Tensor;
use crate::Rational;

pub struct Sampler {
    rng: SplitMix64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: SplitMix64::seed_from_u64(seed) }
    }

    /// Uniform integer in `lo..=hi`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn usize_in(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    /// Small rational with numerator in `-9..=9` and denominator in `1..=4`.
    pub fn small_rational(&mut self) -> Rational {
        let num = self.int_in(-9, 9);
        let den = self.int_in(1, 4);
        rational(num, den)
    }

    pub fn int_matrix(&mut self, rows: usize, cols: usize, bound: i64) -> Matrix<Rational> {
        let entries = (0..rows * cols).map(|_| int(self.int_in(-bound, bound))).collect();
        Matrix::new(rows, cols, entries).expect("sized")
    }

    pub fn rational_matrix(&mut self, rows: usize, cols: usize) -> Matrix<Rational> {
        let entries = (0..rows * cols).map(|_| self.small_rational()).collect();
        Matrix::new(rows, cols, entries).expect("sized")
    }

    pub fn coords(&mut self, len: usize) -> Vec<Rational> {
        (0..len).map(|_| self.small_rational()).collect()
    }

    /// Random grade-`m` element; each basis coefficient is nonzero with
    /// probability about two thirds.
    pub fn multivector(&mut self, dim: usize, grade: usize) -> Multivector<Rational> {
        let basis: Vec<Combination> = enum_combinations(dim, grade).expect("grade <= dim").collect();
        let mut terms = Vec::new();
        for c in basis {
            if self.chance(2.0 / 3.0) {
                terms.push((c, self.small_rational()));
            }
        }
        Multivector::from_terms(dim, grade, terms).expect("valid terms")
    }

    pub fn graded(&mut self, dim: usize) -> GradedElement<Rational> {
        let mut parts = Vec::new();
        for m in 0..=dim {
            if self.chance(0.6) {
                parts.push(self.multivector(dim, m));
            }
        }
        GradedElement::from_parts(dim, parts).expect("same dimension")
    }

    pub fn tensor(&mut self, dim: usize, order: usize) -> Tensor<Rational> {
        let count = dim.pow(order as u32);
        Tensor::new(dim, order, self.coords(count)).expect("sized")
    }

    pub fn point(&mut self, nvars: usize) -> Vec<Rational> {
        self.coords(nvars)
    }

    /// Up to `max_terms` monomials of total degree at most `max_degree`.
    pub fn polynomial(&mut self, nvars: usize, max_degree: u32, max_terms: usize) -> Polynomial<Rational> {
        let count = self.usize_in(0, max_terms);
        let terms: Vec<_> = (0..count)
            .map(|_| {
                let mut budget = self.usize_in(0, max_degree as usize) as u32;
                let mut exps = vec![0u32; nvars];
                while budget > 0 && nvars > 0 {
                    let i = self.usize_in(0, nvars - 1);
                    exps[i] += 1;
                    budget -= 1;
                }
                (exps, self.small_rational())
            })
            .collect();
        Polynomial::from_terms(nvars, terms).expect("sized exponents")
    }

    pub fn form(&mut self, nvars: usize, grade: usize, max_degree: u32) -> PolyForm<Rational> {
        let basis: Vec<Combination> = enum_combinations(nvars, grade).expect("grade <= nvars").collect();
        let mut terms = Vec::new();
        for c in basis {
            if self.chance(0.6) {
                terms.push((c, self.polynomial(nvars, max_degree, 3)));
            }
        }
        PolyForm::from_terms(nvars, grade, terms).expect("valid terms")
    }
}
