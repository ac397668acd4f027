//! Differential forms with polynomial coefficients on `R^n`.
//!
//! A form of grade `m` is `Σ_I f_I dx_I` with `f_I` exact polynomials in
//! `x1..xn`. The exterior derivative is the coordinate formula
//! `d(f dx_I) = Σ_i (∂f/∂x_i) dx_i ∧ dx_I`. On polynomials the partial
//! derivative is the exact limit of the increment quotient, see
//! [`Polynomial::divided_difference`].

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::error::{dim_err, domain_err, Result};
use crate::index::{binomial, Combination};
use crate::multivector::Multivector;
use crate::scalar::Scalar;

/// Exponent vector of a monomial, ordered by total degree and then
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<T> {
    nvars: usize,
    terms: BTreeMap<Monomial, T>,
}

fn accumulate<K: Ord, T: Scalar>(terms: &mut BTreeMap<K, T>, key: K, value: T) {
    if value.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(key) {
        Entry::Vacant(e) => {
            e.insert(value);
        }
        Entry::Occupied(mut e) => {
            let sum = e.get().clone() + value;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

impl<T: Scalar> Polynomial<T> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: T) -> Self {
        let mut p = Polynomial::zero(nvars);
        accumulate(&mut p.terms, Monomial::one(nvars), c);
        p
    }

    /// The coordinate function `x_i`, 1-based.
    pub fn var(nvars: usize, i: usize) -> Result<Self> {
        if i == 0 || i > nvars {
            return domain_err(format!("variable x{i} outside x1..x{nvars}"));
        }
        let mut exps = vec![0; nvars];
        exps[i - 1] = 1;
        Polynomial::from_terms(nvars, [(exps, T::one())])
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, T)>) -> Result<Self> {
        let mut p = Polynomial::zero(nvars);
        for (exps, c) in terms {
            if exps.len() != nvars {
                return dim_err(format!("exponent word of length {} for {nvars} variables", exps.len()));
            }
            accumulate(&mut p.terms, Monomial(exps), c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, T> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return dim_err(format!("polynomials in {} and {} variables", self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            accumulate(&mut out.terms, k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-T::one()))
    }

    pub fn scale(&self, s: &T) -> Self {
        let mut out = Polynomial::zero(self.nvars);
        for (k, c) in &self.terms {
            accumulate(&mut out.terms, k.clone(), c.clone() * s.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Polynomial::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                accumulate(&mut out.terms, a.times(b), x.clone() * y.clone());
            }
        }
        Ok(out)
    }

    /// Formal partial derivative in `x_i`, 1-based.
    pub fn partial(&self, i: usize) -> Result<Self> {
        if i == 0 || i > self.nvars {
            return domain_err(format!("variable x{i} outside x1..x{}", self.nvars));
        }
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i - 1];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i - 1] -= 1;
            accumulate(&mut out.terms, Monomial(exps), c.clone() * T::from_int(i64::from(e)));
        }
        Ok(out)
    }

    /// Exact value at `x`.
    pub fn eval(&self, x: &[T]) -> Result<T> {
        if x.len() != self.nvars {
            return dim_err(format!("point of length {} for {} variables", x.len(), self.nvars));
        }
        // powers[i][e] = x_i^e
        let mut powers: Vec<Vec<T>> = vec![vec![T::one()]; self.nvars];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().cloned().expect("nonempty") * x[i].clone();
                    powers[i].push(next);
                }
            }
        }
        Ok(self.terms.iter().fold(T::zero(), |acc, (m, c)| {
            let term = m
                .0
                .iter()
                .enumerate()
                .fold(c.clone(), |t, (i, &e)| t * powers[i][e as usize].clone());
            acc + term
        }))
    }

    /// The increment quotient along `x_i` at `x` as a polynomial in the
    /// step: the univariate `D(h)` with `h D(h) = f(x + h e_i) - f(x)`.
    /// Its value at `h = 0` is `∂f/∂x_i (x)`.
    pub fn divided_difference(&self, i: usize, x: &[T]) -> Result<Polynomial<T>> {
        if i == 0 || i > self.nvars {
            return domain_err(format!("variable x{i} outside x1..x{}", self.nvars));
        }
        if x.len() != self.nvars {
            return dim_err(format!("point of length {} for {} variables", x.len(), self.nvars));
        }
        // Restrict to the line through x: g(y) = Σ_k slice[k] y^k.
        let mut slice: BTreeMap<u32, T> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            for (j, &e) in m.0.iter().enumerate() {
                if j != i - 1 {
                    coeff = coeff * pow(&x[j], e);
                }
            }
            accumulate(&mut slice, m.0[i - 1], coeff);
        }
        // g(x_i + h) = Σ_k c_k Σ_l C(k, l) x_i^(k-l) h^l; drop l = 0, shift down.
        let xi = &x[i - 1];
        let mut out = Polynomial::zero(1);
        for (&k, c) in &slice {
            for l in 1..=k {
                let binom = T::from_usize(binomial(k as usize, l as usize));
                let coeff = c.clone() * binom * pow(xi, k - l);
                accumulate(&mut out.terms, Monomial(vec![l - 1]), coeff);
            }
        }
        Ok(out)
    }
}

fn pow<T: Scalar>(x: &T, e: u32) -> T {
    (0..e).fold(T::one(), |acc, _| acc * x.clone())
}

/// A homogeneous differential form `Σ_I f_I dx_I` of fixed grade.
///
/// As with [`Multivector`], zero forms compare equal regardless of grade.
#[derive(Clone, Debug)]
pub struct PolyForm<T> {
    nvars: usize,
    grade: usize,
    terms: BTreeMap<Combination, Polynomial<T>>,
}

impl<T: Scalar> PartialEq for PolyForm<T> {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars
            && self.terms == other.terms
            && (self.grade == other.grade || self.terms.is_empty())
    }
}

impl<T: Scalar> PolyForm<T> {
    pub fn zero(nvars: usize, grade: usize) -> Self {
        PolyForm { nvars, grade, terms: BTreeMap::new() }
    }

    /// The 0-form `f`.
    pub fn function(f: Polynomial<T>) -> Self {
        PolyForm::monomial(f, Combination::empty(0)).expect("grade 0")
    }

    /// `dx_i`, 1-based.
    pub fn dx(nvars: usize, i: usize) -> Result<Self> {
        let c = Combination::new(nvars, vec![i])?;
        PolyForm::monomial(Polynomial::constant(nvars, T::one()), c)
    }

    /// `f dx_I`. The empty combination may be given over any ambient size.
    pub fn monomial(f: Polynomial<T>, index: Combination) -> Result<Self> {
        let index = if index.is_empty() { Combination::empty(f.nvars()) } else { index };
        PolyForm::from_terms(f.nvars(), index.len(), [(index, f)])
    }

    pub fn from_terms(
        nvars: usize,
        grade: usize,
        terms: impl IntoIterator<Item = (Combination, Polynomial<T>)>,
    ) -> Result<Self> {
        let mut out = PolyForm::zero(nvars, grade);
        for (k, f) in terms {
            if k.dim() != nvars || k.len() != grade || f.nvars() != nvars {
                return dim_err(format!(
                    "term dx_({k}) over {} letters with a polynomial in {} variables \
                     in a grade-{grade} form over {nvars}",
                    k.dim(),
                    f.nvars()
                ));
            }
            out.insert(k, f);
        }
        Ok(out)
    }

    fn insert(&mut self, k: Combination, f: Polynomial<T>) {
        if f.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&k) {
            Some(g) => g.add(&f).expect("same variables"),
            None => f,
        };
        if !sum.is_zero() {
            self.terms.insert(k, sum);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn terms(&self) -> &BTreeMap<Combination, Polynomial<T>> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, index: &Combination) -> Polynomial<T> {
        self.terms.get(index).cloned().unwrap_or_else(|| Polynomial::zero(self.nvars))
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return dim_err(format!("forms in {} and {} variables", self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        if self.grade != other.grade && !self.is_zero() && !other.is_zero() {
            return dim_err(format!("grades {} and {}", self.grade, other.grade));
        }
        let (mut out, rest) = if self.is_zero() { (other.clone(), self) } else { (self.clone(), other) };
        for (k, f) in &rest.terms {
            out.insert(k.clone(), f.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-T::one()))
    }

    pub fn scale(&self, s: &T) -> Self {
        let mut out = PolyForm::zero(self.nvars, self.grade);
        for (k, f) in &self.terms {
            out.insert(k.clone(), f.scale(s));
        }
        out
    }

    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = PolyForm::zero(self.nvars, self.grade + other.grade);
        if out.grade > self.nvars {
            return Ok(out);
        }
        for (i, f) in &self.terms {
            for (j, g) in &other.terms {
                if !i.is_disjoint(j) {
                    continue;
                }
                let (sign, k) = i.merge(j)?;
                let prod = f.mul(g)?;
                out.insert(k, if sign == crate::Sign::Plus { prod } else { prod.scale(&-T::one()) });
            }
        }
        Ok(out)
    }

    /// Exterior derivative; raises the grade by one.
    pub fn exterior_derivative(&self) -> Self {
        let mut out = PolyForm::zero(self.nvars, self.grade + 1);
        if out.grade > self.nvars {
            return out;
        }
        for (index, f) in &self.terms {
            for i in (1..=self.nvars).filter(|i| !index.contains(*i)) {
                let df = f.partial(i).expect("variable in range");
                if df.is_zero() {
                    continue;
                }
                let single = Combination::new(self.nvars, vec![i]).expect("letter in range");
                let (sign, k) = single.merge(index).expect("disjoint");
                out.insert(k, if sign == crate::Sign::Plus { df } else { df.scale(&-T::one()) });
            }
        }
        out
    }

    /// Pointwise value, a multivector of the same grade.
    pub fn evaluate(&self, x: &[T]) -> Result<Multivector<T>> {
        if x.len() != self.nvars {
            return dim_err(format!("point of length {} for {} variables", x.len(), self.nvars));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (k, f) in &self.terms {
            terms.push((k.clone(), f.eval(x)?));
        }
        Multivector::from_terms(self.nvars, self.grade, terms)
    }
}
