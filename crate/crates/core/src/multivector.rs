//! The Grassmann algebra `Λ L = ⊕_m Λ^m L` over `L = R^n`.
//!
//! Basis multivectors `e_I` are keyed by [`Combination`]s. The wedge of
//! basis elements is `e_I ∧ e_J = split_sign(I, J) e_{I ∪ J}` for disjoint
//! `I`, `J` and zero otherwise; no factorials are divided out, so integral
//! coordinates stay integral.

use std::collections::BTreeMap;

use crate::error::{dim_err, domain_err, Result};
use crate::index::{enum_combinations, Combination};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// A homogeneous element of `Λ^m L`, stored sparsely without zeros.
///
/// Zero multivectors compare equal regardless of their nominal grade: they
/// are all the zero of the algebra.
#[derive(Clone, Debug)]
pub struct Multivector<T> {
    dim: usize,
    grade: usize,
    terms: BTreeMap<Combination, T>,
}

impl<T: Scalar> PartialEq for Multivector<T> {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.terms == other.terms
            && (self.grade == other.grade || self.terms.is_empty())
    }
}

fn accumulate<T: Scalar>(terms: &mut BTreeMap<Combination, T>, key: Combination, value: T) {
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

impl<T: Scalar> Multivector<T> {
    pub fn zero(dim: usize, grade: usize) -> Self {
        Multivector { dim, grade, terms: BTreeMap::new() }
    }

    pub fn scalar(dim: usize, s: T) -> Self {
        let mut v = Multivector::zero(dim, 0);
        accumulate(&mut v.terms, Combination::empty(dim), s);
        v
    }

    pub fn basis(index: Combination) -> Self {
        Multivector::monomial(T::one(), index)
    }

    pub fn monomial(coeff: T, index: Combination) -> Self {
        let mut v = Multivector::zero(index.dim(), index.len());
        accumulate(&mut v.terms, index, coeff);
        v
    }

    /// Sums the given terms; repeated keys accumulate and zeros are dropped.
    pub fn from_terms(
        dim: usize,
        grade: usize,
        terms: impl IntoIterator<Item = (Combination, T)>,
    ) -> Result<Self> {
        let mut v = Multivector::zero(dim, grade);
        for (k, c) in terms {
            if k.dim() != dim || k.len() != grade {
                return dim_err(format!(
                    "index ({k}) over {} letters in a grade-{grade} multivector over {dim}",
                    k.dim()
                ));
            }
            accumulate(&mut v.terms, k, c);
        }
        Ok(v)
    }

    /// Grade-1 element with the given coordinates.
    pub fn vector(coords: Vec<T>) -> Self {
        Multivector::from_coords(coords.len(), 1, coords).expect("length matches dimension")
    }

    /// Coordinates listed in combination rank order.
    pub fn from_coords(dim: usize, grade: usize, coords: Vec<T>) -> Result<Self> {
        let basis: Vec<_> = enum_combinations(dim, grade)?.collect();
        if basis.len() != coords.len() {
            return dim_err(format!(
                "{} coordinates for a space of dimension {}",
                coords.len(),
                basis.len()
            ));
        }
        Multivector::from_terms(dim, grade, basis.into_iter().zip(coords))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn terms(&self) -> &BTreeMap<Combination, T> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, index: &Combination) -> T {
        self.terms.get(index).cloned().unwrap_or_else(T::zero)
    }

    /// Dense coordinates in combination rank order. Empty above grade `n`.
    pub fn coords(&self) -> Vec<T> {
        match enum_combinations(self.dim, self.grade) {
            Ok(basis) => basis.map(|c| self.coeff(&c)).collect(),
            Err(_) => Vec::new(),
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return dim_err(format!("ambient dimensions {} and {}", self.dim, other.dim));
        }
        if self.grade != other.grade && !self.is_zero() && !other.is_zero() {
            return dim_err(format!("grades {} and {}", self.grade, other.grade));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = if self.is_zero() { other.clone() } else { self.clone() };
        let rest = if self.is_zero() { &self.terms } else { &other.terms };
        for (k, c) in rest {
            accumulate(&mut out.terms, k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-T::one())
    }

    pub fn scale(&self, s: &T) -> Self {
        let mut out = Multivector::zero(self.dim, self.grade);
        for (k, c) in &self.terms {
            accumulate(&mut out.terms, k.clone(), c.clone() * s.clone());
        }
        out
    }

    /// Exterior product. The result has grade `p + q`; it is zero when
    /// `p + q > n`.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return dim_err(format!("ambient dimensions {} and {}", self.dim, other.dim));
        }
        let mut out = Multivector::zero(self.dim, self.grade + other.grade);
        if out.grade > self.dim {
            return Ok(out);
        }
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                if !i.is_disjoint(j) {
                    continue;
                }
                let (sign, k) = i.merge(j)?;
                accumulate(&mut out.terms, k, sign.apply(a.clone() * b.clone()));
            }
        }
        Ok(out)
    }

    /// `Some((c, I))` iff the element is the single term `c e_I`.
    pub fn is_simple_monomial(&self) -> Option<(T, Combination)> {
        if self.terms.len() != 1 {
            return None;
        }
        self.terms.iter().next().map(|(k, c)| (c.clone(), k.clone()))
    }

    pub fn into_graded(self) -> GradedElement<T> {
        GradedElement::from(self)
    }
}

/// An element of the full algebra, a sum of homogeneous parts.
#[derive(Clone, Debug)]
pub struct GradedElement<T> {
    dim: usize,
    parts: BTreeMap<usize, Multivector<T>>,
}

impl<T: Scalar> PartialEq for GradedElement<T> {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.parts == other.parts
    }
}

impl<T: Scalar> From<Multivector<T>> for GradedElement<T> {
    fn from(v: Multivector<T>) -> Self {
        let mut g = GradedElement::zero(v.dim);
        if !v.is_zero() {
            g.parts.insert(v.grade, v);
        }
        g
    }
}

impl<T: Scalar> GradedElement<T> {
    pub fn zero(dim: usize) -> Self {
        GradedElement { dim, parts: BTreeMap::new() }
    }

    pub fn one(dim: usize) -> Self {
        Multivector::scalar(dim, T::one()).into()
    }

    pub fn from_parts(dim: usize, parts: impl IntoIterator<Item = Multivector<T>>) -> Result<Self> {
        let mut g = GradedElement::zero(dim);
        for p in parts {
            g = g.add(&p.into())?;
        }
        Ok(g)
    }

    /// Builds an element from arbitrary terms; each key's length is its grade.
    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (Combination, T)>) -> Result<Self> {
        let mut g = GradedElement::zero(dim);
        for (k, c) in terms {
            if k.dim() != dim {
                return dim_err(format!("index ({k}) over {} letters in dimension {dim}", k.dim()));
            }
            let part = g.parts.entry(k.len()).or_insert_with(|| Multivector::zero(dim, k.len()));
            accumulate(&mut part.terms, k, c);
        }
        g.parts.retain(|_, p| !p.is_zero());
        Ok(g)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn grades(&self) -> impl Iterator<Item = usize> + '_ {
        self.parts.keys().copied()
    }

    pub fn parts(&self) -> impl Iterator<Item = &Multivector<T>> {
        self.parts.values()
    }

    /// The grade-`m` component (zero when absent).
    pub fn part(&self, m: usize) -> Multivector<T> {
        self.parts.get(&m).cloned().unwrap_or_else(|| Multivector::zero(self.dim, m))
    }

    /// All terms sorted by grade and then combination rank.
    pub fn terms(&self) -> impl Iterator<Item = (&Combination, &T)> {
        self.parts.values().flat_map(|p| p.terms.iter())
    }

    /// `Some(v)` when the element lives in a single grade (or is zero).
    pub fn homogeneous(&self) -> Option<Multivector<T>> {
        match self.parts.len() {
            0 => Some(Multivector::zero(self.dim, 0)),
            1 => self.parts.values().next().cloned(),
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return dim_err(format!("ambient dimensions {} and {}", self.dim, other.dim));
        }
        let mut out = self.clone();
        for (m, p) in &other.parts {
            let sum = out.part(*m).add(p)?;
            if sum.is_zero() {
                out.parts.remove(m);
            } else {
                out.parts.insert(*m, sum);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &T) -> Self {
        let parts = self
            .parts
            .iter()
            .map(|(m, p)| (*m, p.scale(s)))
            .filter(|(_, p)| !p.is_zero())
            .collect();
        GradedElement { dim: self.dim, parts }
    }

    pub fn wedge(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return dim_err(format!("ambient dimensions {} and {}", self.dim, other.dim));
        }
        let mut out = GradedElement::zero(self.dim);
        for a in self.parts.values() {
            for b in other.parts.values() {
                out = out.add(&a.wedge(b)?.into())?;
            }
        }
        Ok(out)
    }

    /// Dense coordinates on the `2^n` basis ordered by grade, then rank.
    pub fn coords(&self) -> Vec<T> {
        (0..=self.dim).flat_map(|m| self.part(m).coords()).collect()
    }

    pub fn from_coords(dim: usize, coords: Vec<T>) -> Result<Self> {
        let basis: Vec<_> = full_basis(dim).collect();
        if basis.len() != coords.len() {
            return dim_err(format!("{} coordinates for dimension 2^{dim}", coords.len()));
        }
        GradedElement::from_terms(dim, basis.into_iter().zip(coords))
    }
}

/// Every combination over `{1..n}`, by grade then rank.
pub fn full_basis(dim: usize) -> impl Iterator<Item = Combination> {
    (0..=dim).flat_map(move |m| enum_combinations(dim, m).expect("m <= n"))
}

/// Marks an element of the dual algebra `Λ L*`, written in the dual basis
/// `e*_I`. The coordinates are stored exactly like the primal ones.
#[derive(Clone, Debug, PartialEq)]
pub struct Dual<V>(pub V);

impl<V> Dual<V> {
    pub fn inner(&self) -> &V {
        &self.0
    }

    pub fn into_inner(self) -> V {
        self.0
    }
}

/// Dual-basis pairing `Λ^m L* x Λ^m L -> R`.
pub fn pair<T: Scalar>(w: &Dual<Multivector<T>>, v: &Multivector<T>) -> Result<T> {
    let w = &w.0;
    w.check_same(v)?;
    let (small, large) = if w.len() <= v.len() { (w, v) } else { (v, w) };
    Ok(small.terms.iter().fold(T::zero(), |acc, (k, c)| match large.terms.get(k) {
        Some(d) => acc + c.clone() * d.clone(),
        None => acc,
    }))
}

/// Pairing of full graded elements, summed grade by grade.
pub fn pair_chains<T: Scalar>(w: &Dual<GradedElement<T>>, v: &GradedElement<T>) -> Result<T> {
    if w.0.dim != v.dim {
        return dim_err(format!("ambient dimensions {} and {}", w.0.dim, v.dim));
    }
    let mut total = T::zero();
    for (m, wm) in &w.0.parts {
        if let Some(vm) = v.parts.get(m) {
            total = total + pair(&Dual(wm.clone()), vm)?;
        }
    }
    Ok(total)
}

/// Interior product of a dual vector into a grade-`m` multivector.
///
/// On basis elements, `e*_k ⌟ e_I` is `(-1)^pos e_{I∖k}` where `pos` is the
/// 0-based position of `k` in `I`, and zero when `k ∉ I`.
pub fn contract<T: Scalar>(x: &Dual<Multivector<T>>, v: &Multivector<T>) -> Result<Multivector<T>> {
    let x = &x.0;
    if x.dim != v.dim {
        return dim_err(format!("ambient dimensions {} and {}", x.dim, v.dim));
    }
    if x.grade != 1 && !x.is_zero() {
        return domain_err(format!("contraction by a grade-{} dual element", x.grade));
    }
    if v.grade == 0 {
        return domain_err("cannot contract a scalar");
    }
    let mut out = Multivector::zero(v.dim, v.grade - 1);
    for (k, a) in &x.terms {
        let letter = k.word()[0];
        for (i, b) in &v.terms {
            if let Some(pos) = i.position(letter) {
                let term = a.clone() * b.clone();
                let term = if pos % 2 == 0 { term } else { -term };
                accumulate(&mut out.terms, i.without(letter), term);
            }
        }
    }
    Ok(out)
}

/// Left wedge multiplication `w ↦ u ∧ w` on the whole algebra.
#[derive(Clone, Debug)]
pub struct Clutch<T> {
    left: GradedElement<T>,
}

pub fn clutch<T: Scalar>(u: GradedElement<T>) -> Clutch<T> {
    Clutch { left: u }
}

impl<T: Scalar> Clutch<T> {
    pub fn factor(&self) -> &GradedElement<T> {
        &self.left
    }

    pub fn apply(&self, w: &GradedElement<T>) -> Result<GradedElement<T>> {
        self.left.wedge(w)
    }

    /// `self ∘ other`, which is left multiplication by `u ∧ v`.
    pub fn compose(&self, other: &Clutch<T>) -> Result<Clutch<T>> {
        Ok(Clutch { left: self.left.wedge(&other.left)? })
    }

    /// The `2^n x 2^n` matrix of the operator on the basis of
    /// [`full_basis`]; column `j` holds the image of the `j`-th basis element.
    pub fn matrix(&self) -> Matrix<T> {
        let basis: Vec<_> = full_basis(self.left.dim).collect();
        let size = basis.len();
        let mut m = Matrix::zeros(size, size);
        for (j, b) in basis.iter().enumerate() {
            let image = self
                .apply(&Multivector::basis(b.clone()).into())
                .expect("same ambient dimension");
            for (i, c) in image.coords().into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::Rational;

    type V = Multivector<Rational>;

    fn e(n: usize, w: &[usize]) -> V {
        V::basis(Combination::new(n, w.to_vec()).unwrap())
    }

    fn c(n: usize, w: &[usize]) -> Combination {
        Combination::new(n, w.to_vec()).unwrap()
    }

    #[test]
    fn wedge_examples() {
        assert_eq!(e(2, &[1]).wedge(&e(2, &[2])).unwrap(), e(2, &[1, 2]));
        assert_eq!(e(2, &[2]).wedge(&e(2, &[1])).unwrap(), e(2, &[1, 2]).neg());
        let u = e(3, &[1]).add(&e(3, &[2]).scale(&int(2))).unwrap();
        let expected = e(3, &[1, 3]).add(&e(3, &[2, 3]).scale(&int(2))).unwrap();
        assert_eq!(u.wedge(&e(3, &[3])).unwrap(), expected);
        let sq = e(4, &[1, 2]).wedge(&e(4, &[1, 2])).unwrap();
        assert!(sq.is_zero());
        assert_eq!(sq.grade(), 4);
        let over = e(3, &[1, 2]).wedge(&e(3, &[2, 3])).unwrap();
        assert!(over.is_zero() && over.grade() == 4);
        assert!(e(3, &[1]).wedge(&e(4, &[1])).is_err());
    }

    #[test]
    fn clutch_examples() {
        let w = GradedElement::from_parts(3, [e(3, &[2]), e(3, &[2, 3])]).unwrap();
        let out = clutch(e(3, &[1]).into()).apply(&w).unwrap();
        let expected = GradedElement::from_parts(3, [e(3, &[1, 2]), e(3, &[1, 2, 3])]).unwrap();
        assert_eq!(out, expected);
        assert_eq!(clutch(GradedElement::one(3)).apply(&w).unwrap(), w);
        assert_eq!(clutch(GradedElement::<Rational>::one(3)).matrix(), Matrix::identity(8));
    }

    #[test]
    fn pairing_examples() {
        let d = |w: &[usize]| Dual(e(3, w));
        assert_eq!(pair(&d(&[1, 3]), &e(3, &[1, 3])).unwrap(), int(1));
        assert_eq!(pair(&d(&[1, 3]), &e(3, &[1, 2])).unwrap(), int(0));
        let w = e(3, &[1, 2]).scale(&int(2)).add(&e(3, &[2, 3])).unwrap();
        let v = e(3, &[1, 2]).scale(&int(3)).sub(&e(3, &[2, 3])).unwrap();
        // 2*3 + 1*(-1)
        assert_eq!(pair(&Dual(w), &v).unwrap(), int(5));
        assert!(pair(&d(&[1]), &e(3, &[1, 2])).is_err());
        assert!(pair(&Dual(e(4, &[1])), &e(3, &[1])).is_err());
    }

    #[test]
    fn pair_chains_examples() {
        let v = GradedElement::from_parts(3, [e(3, &[1]), e(3, &[1, 2]).scale(&int(4))]).unwrap();
        assert_eq!(pair_chains(&Dual(GradedElement::zero(3)), &v).unwrap(), int(0));
        let w = Dual(GradedElement::from(e(3, &[1, 2]).scale(&int(2))));
        assert_eq!(pair_chains(&w, &v).unwrap(), int(8));
        let w = Dual(GradedElement::from_parts(3, [e(3, &[1]), e(3, &[1, 2]), e(3, &[])]).unwrap());
        assert_eq!(pair_chains(&w, &v).unwrap(), int(5));
    }

    #[test]
    fn contraction_examples() {
        let d = |k: usize| Dual(e(2, &[k]));
        assert_eq!(contract(&d(1), &e(2, &[1, 2])).unwrap(), e(2, &[2]));
        assert_eq!(contract(&d(2), &e(2, &[1, 2])).unwrap(), e(2, &[1]).neg());
        assert!(contract(&Dual(e(3, &[3])), &e(3, &[1, 2])).unwrap().is_zero());
        assert!(contract(&d(1), &V::scalar(2, int(1))).is_err());
        assert!(contract(&Dual(e(2, &[1, 2])), &e(2, &[1, 2])).is_err());
    }

    #[test]
    fn monomial_detection() {
        let v = V::monomial(int(5), c(4, &[2, 4]));
        assert_eq!(v.is_simple_monomial(), Some((int(5), c(4, &[2, 4]))));
        assert_eq!(e(4, &[1, 2]).add(&e(4, &[3, 4])).unwrap().is_simple_monomial(), None);
        assert_eq!(V::zero(4, 2).is_simple_monomial(), None);
    }

    #[test]
    fn basis_wedge_table() {
        for a in full_basis(4) {
            for b in full_basis(4) {
                let w = V::basis(a.clone()).wedge(&V::basis(b.clone())).unwrap();
                let expected = match a.merge(&b) {
                    Ok((sign, k)) => V::monomial(sign.to_scalar(), k),
                    Err(_) => V::zero(4, a.len() + b.len()),
                };
                assert_eq!(w, expected, "e_({a}) ^ e_({b})");
            }
        }
    }

    #[test]
    fn construction_invariants() {
        let v = V::from_terms(3, 1, [(c(3, &[1]), int(2)), (c(3, &[1]), int(-2))]).unwrap();
        assert!(v.is_zero());
        assert!(V::from_terms(3, 2, [(c(3, &[1]), int(1))]).is_err());
        assert_eq!(V::zero(3, 1), V::zero(3, 2));
        assert_ne!(V::zero(3, 1), V::zero(4, 1));
        let coords = vec![int(1), int(0), int(-3)];
        assert_eq!(V::from_coords(3, 2, coords.clone()).unwrap().coords(), coords);
        let g = GradedElement::from_coords(2, vec![int(1), int(2), int(0), int(4)]).unwrap();
        assert_eq!(g.part(1), e(2, &[1]).scale(&int(2)));
        assert_eq!(g.coords(), vec![int(1), int(2), int(0), int(4)]);
    }
}
