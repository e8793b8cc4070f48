//! Semi-magic matrices: square matrices whose row sums and column sums all
//! agree. The common value is the line sum; it is multiplicative under the
//! matrix product, which makes these matrices an associative algebra.

use num_rational::BigRational;

use crate::error::{DihedralError, Result};
use crate::matrix::{Mat, Scalar};

/// Default absolute tolerance for float-domain line-sum checks; exact
/// domains (integer, rational) ignore it.
pub const DEFAULT_EPS: f64 = 1e-9;

/// Validates the equal-line-sum predicate and returns the line sum.
pub fn line_sum<T: Scalar>(mat: &Mat<T>, eps: f64) -> Result<T> {
    let n = mat.size();
    if n == 0 {
        return Err(DihedralError::Parameter("empty matrix".to_string()));
    }
    let r = mat.row_sum(0);
    for i in 1..n {
        let s = mat.row_sum(i);
        if !s.close_to(&r, eps) {
            return Err(DihedralError::NotSemiMagic(format!(
                "row {i} sums to {s:?}, row 0 to {r:?}"
            )));
        }
    }
    for j in 0..n {
        let s = mat.col_sum(j);
        if !s.close_to(&r, eps) {
            return Err(DihedralError::NotSemiMagic(format!(
                "column {j} sums to {s:?}, rows to {r:?}"
            )));
        }
    }
    Ok(r)
}

/// A matrix that passed the semi-magic predicate at construction, with its
/// line sum cached. Immutable afterwards.
#[derive(Debug, Clone, PartialEq)]
pub struct SemiMagicMatrix<T: Scalar> {
    mat: Mat<T>,
    line_sum: T,
    eps: f64,
}

impl<T: Scalar> SemiMagicMatrix<T> {
    pub fn new(mat: Mat<T>) -> Result<Self> {
        Self::with_eps(mat, DEFAULT_EPS)
    }

    pub fn with_eps(mat: Mat<T>, eps: f64) -> Result<Self> {
        let r = line_sum(&mat, eps)?;
        Ok(SemiMagicMatrix {
            mat,
            line_sum: r,
            eps,
        })
    }

    pub fn n(&self) -> usize {
        self.mat.size()
    }

    pub fn line_sum(&self) -> &T {
        &self.line_sum
    }

    pub fn mat(&self) -> &Mat<T> {
        &self.mat
    }

    pub fn into_mat(self) -> Mat<T> {
        self.mat
    }

    /// Matrix product; the line sum of the result is the product of the
    /// line sums.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(DihedralError::MismatchedN(self.n(), other.n()));
        }
        let prod = self.mat.matmul(&other.mat);
        let r = line_sum(&prod, self.eps)?;
        debug_assert!(r.close_to(&self.line_sum.mul(&other.line_sum), self.eps.max(1e-6)));
        Ok(SemiMagicMatrix {
            mat: prod,
            line_sum: r,
            eps: self.eps,
        })
    }
}

impl SemiMagicMatrix<i64> {
    pub fn to_rational(&self) -> SemiMagicMatrix<BigRational> {
        SemiMagicMatrix {
            mat: self.mat.map(|v| BigRational::from_integer((*v).into())),
            line_sum: BigRational::from_integer(self.line_sum.into()),
            eps: self.eps,
        }
    }
}

/// The all-ones matrix J, line sum n.
pub fn big_j(n: usize) -> Result<SemiMagicMatrix<i64>> {
    if n < 3 {
        return Err(DihedralError::Parameter(format!(
            "J is defined here for n >= 3, got {n}"
        )));
    }
    SemiMagicMatrix::new(Mat::from_fn(n, |_, _| 1))
}

/// Checkerboard of ones starting with 1 in the upper-left corner: entry
/// (i, j) is 1 iff i + j is even. Requires even n.
pub fn j1(n: usize) -> Result<SemiMagicMatrix<i64>> {
    check_even(n)?;
    SemiMagicMatrix::new(Mat::from_fn(n, |i, j| ((i + j) % 2 == 0) as i64))
}

/// The complementary checkerboard J - J1: entry (i, j) is 1 iff i + j is odd.
pub fn j2(n: usize) -> Result<SemiMagicMatrix<i64>> {
    check_even(n)?;
    SemiMagicMatrix::new(Mat::from_fn(n, |i, j| ((i + j) % 2 == 1) as i64))
}

fn check_even(n: usize) -> Result<()> {
    if n < 3 {
        return Err(DihedralError::Parameter(format!(
            "checkerboard matrices need n >= 3, got {n}"
        )));
    }
    if n % 2 != 0 {
        return Err(DihedralError::Parameter(format!(
            "checkerboard matrices J1/J2 need even n, got {n}"
        )));
    }
    Ok(())
}

/// Dimension of the span of the 2n permutation matrices: 2n-1 for odd n,
/// 2n-2 for even n.
pub fn mm_dimension(n: usize) -> Result<usize> {
    if n < 3 {
        return Err(DihedralError::Parameter(format!(
            "dimension is defined for n >= 3, got {n}"
        )));
    }
    Ok(if n % 2 == 1 { 2 * n - 1 } else { 2 * n - 2 })
}
