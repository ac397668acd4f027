//! The exterior power of a linear map.
//!
//! For `A: R^c -> R^r`, `Λ^m A` is the `C(r, m) x C(c, m)` matrix whose
//! entry at `(rank I, rank J)` is the minor of `A` on rows `I` and columns
//! `J`. It satisfies `Λ^m(AB) = Λ^m(A) Λ^m(B)` and `Λ^m(I) = I`.

use rayon::prelude::*;

use crate::determinant::minor;
use crate::error::{dim_err, domain_err, Result};
use crate::index::{enum_combinations, Combination};
use crate::matrix::Matrix;
use crate::multivector::Multivector;
use crate::scalar::Scalar;

fn check_grade<T: Scalar>(a: &Matrix<T>, m: usize) -> Result<()> {
    if m > a.rows().min(a.cols()) {
        return domain_err(format!(
            "grade {m} exceeds min({}, {}) for the compound matrix",
            a.rows(),
            a.cols()
        ));
    }
    Ok(())
}

/// The `m`-th compound matrix. Entries are computed in parallel; the result
/// does not depend on scheduling.
pub fn exterior_power_map<T: Scalar>(a: &Matrix<T>, m: usize) -> Result<Matrix<T>> {
    check_grade(a, m)?;
    let rows: Vec<Combination> = enum_combinations(a.rows(), m)?.collect();
    let cols: Vec<Combination> = enum_combinations(a.cols(), m)?.collect();
    let entries = rows
        .par_iter()
        .flat_map_iter(|i| cols.iter().map(move |j| (i, j)))
        .map(|(i, j)| minor(a, i, j))
        .collect::<Result<Vec<T>>>()?;
    Matrix::new(rows.len(), cols.len(), entries)
}

/// The induced map `Λ^m L_c -> Λ^m L_r` applied to `v`.
pub fn apply_map<T: Scalar>(a: &Matrix<T>, v: &Multivector<T>) -> Result<Multivector<T>> {
    if v.dim() != a.cols() {
        return dim_err(format!(
            "multivector over {} letters for a map with {} columns",
            v.dim(),
            a.cols()
        ));
    }
    let m = v.grade();
    check_grade(a, m)?;
    let rows: Vec<Combination> = enum_combinations(a.rows(), m)?.collect();
    let mut terms = Vec::new();
    for (j, coeff) in v.terms() {
        for i in &rows {
            let mi = minor(a, i, j)?;
            if !mi.is_zero() {
                terms.push((i.clone(), mi * coeff.clone()));
            }
        }
    }
    Multivector::from_terms(a.rows(), m, terms)
}
