//! Determinant engines.
//!
//! [`det_leibniz`] is the defining signed sum over injections and is the
//! ground truth. [`det_subsets`] is a memoized column-subset expansion
//! (`O(2^n n)`) that backs [`minor`], and therefore the compound matrices
//! and [`det_laplace`]. [`cauchy_binet`] expands the determinant of a
//! product over column combinations. The engines share no code path beyond
//! the index enumerations, so their agreement is a meaningful check.

use crate::error::{dim_err, domain_err, Result};
use crate::index::{enum_combinations, enum_injections, Combination, Sign};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Largest size [`det_subsets`] accepts; its table has `2^n` entries.
pub const SUBSET_LIMIT: usize = 24;

fn require_square<T: Scalar>(a: &Matrix<T>) -> Result<usize> {
    if !a.is_square() {
        return domain_err(format!("{}x{} matrix is not square", a.rows(), a.cols()));
    }
    Ok(a.rows())
}

/// `Σ_b parity(b) Π_i a[i, b(i)]` over all bijections `b` of `{1..n}`.
/// The 0x0 determinant is 1.
pub fn det_leibniz<T: Scalar>(a: &Matrix<T>) -> Result<T> {
    let n = require_square(a)?;
    let mut total = T::zero();
    for b in enum_injections(n, n)? {
        let mut term = T::one();
        for (i, &j) in b.word().iter().enumerate() {
            let e = a.get(i, j - 1);
            if e.is_zero() {
                term = T::zero();
                break;
            }
            term = term * e.clone();
        }
        if !term.is_zero() {
            total = total + b.parity().apply(term);
        }
    }
    Ok(total)
}

/// Determinant by expansion along successive rows, memoized over the set
/// of columns already used.
pub fn det_subsets<T: Scalar>(a: &Matrix<T>) -> Result<T> {
    let n = require_square(a)?;
    if n > SUBSET_LIMIT {
        return domain_err(format!("size {n} exceeds subset-expansion limit {SUBSET_LIMIT}"));
    }
    // table[S] = det of rows 0..|S| against the columns in S.
    let mut table: Vec<T> = vec![T::zero(); 1 << n];
    table[0] = T::one();
    for mask in 0usize..(1 << n) {
        let k = mask.count_ones() as usize;
        if k == n || table[mask].is_zero() {
            continue;
        }
        let base = table[mask].clone();
        for j in (0..n).filter(|j| mask & (1 << j) == 0) {
            let e = a.get(k, j);
            if e.is_zero() {
                continue;
            }
            let greater = (mask >> (j + 1)).count_ones();
            let term = Sign::from_count(greater as u64).apply(base.clone() * e.clone());
            let slot = mask | (1 << j);
            table[slot] = table[slot].clone() + term;
        }
    }
    Ok(table.pop().expect("table is nonempty"))
}

/// Determinant of the submatrix on `rows` and `cols` (both increasing).
pub fn minor<T: Scalar>(a: &Matrix<T>, rows: &Combination, cols: &Combination) -> Result<T> {
    if rows.len() != cols.len() {
        return domain_err(format!(
            "minor needs as many rows as columns, got {} and {}",
            rows.len(),
            cols.len()
        ));
    }
    det_subsets(&a.submatrix(rows, cols)?)
}

/// Generalized Laplace expansion along the rows in `rowset`:
/// `Σ_J (-1)^(Σ rowset + Σ J) minor(A, rowset, J) minor(A, rowset', J')`.
pub fn det_laplace<T: Scalar>(a: &Matrix<T>, rowset: &Combination) -> Result<T> {
    let n = require_square(a)?;
    if rowset.dim() != n {
        return dim_err(format!("row set over {} letters for size {n}", rowset.dim()));
    }
    if rowset.is_empty() {
        return domain_err("Laplace expansion needs at least one row");
    }
    let rows_c = rowset.complement();
    let mut total = T::zero();
    for cols in enum_combinations(n, rowset.len())? {
        let head = minor(a, rowset, &cols)?;
        if head.is_zero() {
            continue;
        }
        let tail = minor(a, &rows_c, &cols.complement())?;
        let sign = Sign::from_count((rowset.letter_sum() + cols.letter_sum()) as u64);
        total = total + sign.apply(head * tail);
    }
    Ok(total)
}

/// `Σ_K minor(A, all, K) minor(B, K, all)` over `r`-subsets `K` of the
/// inner dimension, for `A` of shape `r x k` and `B` of shape `k x r`.
pub fn cauchy_binet<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Result<T> {
    let (r, k) = (a.rows(), a.cols());
    if b.rows() != k || b.cols() != r {
        return dim_err(format!(
            "Cauchy-Binet needs r x k and k x r, got {}x{} and {}x{}",
            r,
            k,
            b.rows(),
            b.cols()
        ));
    }
    if r > k {
        return Ok(T::zero());
    }
    let all = Combination::full(r);
    let mut total = T::zero();
    for inner in enum_combinations(k, r)? {
        let left = minor(a, &all, &inner)?;
        if left.is_zero() {
            continue;
        }
        total = total + left * minor(b, &inner, &all)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rational};
    use crate::Rational;

    type M = Matrix<Rational>;

    fn comb(n: usize, w: &[usize]) -> Combination {
        Combination::new(n, w.to_vec()).unwrap()
    }

    #[test]
    fn leibniz_examples() {
        let a = M::new(1, 1, vec![rational(7, 2)]).unwrap();
        assert_eq!(det_leibniz(&a).unwrap(), rational(7, 2));
        assert_eq!(det_leibniz(&M::from_ints(&[[1, 2], [3, 4]])).unwrap(), int(-2));
        assert_eq!(det_leibniz(&M::zeros(0, 0)).unwrap(), int(1));
        assert_eq!(det_subsets(&M::zeros(0, 0)).unwrap(), int(1));
        assert!(matches!(det_leibniz(&M::zeros(2, 3)), Err(crate::Error::Domain(_))));
    }

    #[test]
    fn three_by_three_rule_of_sarrus() {
        let a = M::from_ints(&[[2, -1, 3], [0, 4, 5], [1, 1, -2]]);
        // Sarrus: aei + bfg + cdh - ceg - bdi - afh
        let sarrus = 2 * 4 * -2 + (-1) * 5 + 3 * 0 * 1 - 3 * 4 - (-1) * 0 * -2 - 2 * 5;
        assert_eq!(det_leibniz(&a).unwrap(), int(sarrus));
        assert_eq!(det_subsets(&a).unwrap(), int(sarrus));
    }

    #[test]
    fn minor_examples() {
        let a = M::from_ints(&[[1, 2, 3], [4, 5, 6]]);
        assert_eq!(minor(&a, &comb(2, &[2]), &comb(3, &[3])).unwrap(), int(6));
        let i4 = M::identity(4);
        assert_eq!(minor(&i4, &comb(4, &[1, 3]), &comb(4, &[1, 3])).unwrap(), int(1));
        assert_eq!(minor(&i4, &comb(4, &[1, 3]), &comb(4, &[1, 2])).unwrap(), int(0));
        assert!(matches!(
            minor(&i4, &comb(4, &[1]), &comb(4, &[1, 2])),
            Err(crate::Error::Domain(_))
        ));
        assert_eq!(minor(&i4, &comb(4, &[]), &comb(4, &[])).unwrap(), int(1));
    }

    #[test]
    fn minor_of_4x5_matches_direct_formula() {
        let a = M::from_ints(&[
            [3, -1, 2, 0, 5],
            [1, 4, -2, 7, -3],
            [0, 2, 6, -1, 1],
            [-5, 3, 1, 2, 8],
        ]);
        // rows (2,4), cols (1,5): a21*a45 - a25*a41
        let direct = 1 * 8 - (-3) * (-5);
        assert_eq!(minor(&a, &comb(4, &[2, 4]), &comb(5, &[1, 5])).unwrap(), int(direct));
    }

    #[test]
    fn laplace_examples() {
        let a = M::from_ints(&[[1, 2], [3, 4]]);
        assert_eq!(det_laplace(&a, &comb(2, &[1])).unwrap(), int(-2));
        assert_eq!(det_laplace(&a, &comb(2, &[2])).unwrap(), int(-2));
        assert_eq!(det_laplace(&a, &comb(2, &[1, 2])).unwrap(), int(-2));
        assert!(det_laplace(&a, &comb(2, &[])).is_err());
        assert!(det_laplace(&a, &comb(3, &[1])).is_err());
    }

    #[test]
    fn cauchy_binet_examples() {
        assert_eq!(cauchy_binet(&M::identity(3), &M::identity(3)).unwrap(), int(1));
        let a = M::from_ints(&[[1, 2, 3], [4, 5, 6]]);
        let b = M::from_ints(&[[1, 0], [0, 1], [1, 1]]);
        let ab = a.matmul(&b).unwrap();
        let direct = ab.get(0, 0) * ab.get(1, 1) - ab.get(0, 1) * ab.get(1, 0);
        assert_eq!(direct, int(-6));
        assert_eq!(cauchy_binet(&a, &b).unwrap(), direct);
        // r > k
        assert_eq!(cauchy_binet(&b, &a).unwrap(), int(0));
        assert!(cauchy_binet(&a, &a).is_err());
    }

    #[test]
    fn float_instantiation() {
        let a = Matrix::<f64>::from_ints(&[[2, 1], [1, 3]]);
        assert!((det_subsets(&a).unwrap() - 5.0).abs() < 1e-12);
        assert!((det_leibniz(&a).unwrap() - 5.0).abs() < 1e-12);
    }
}
