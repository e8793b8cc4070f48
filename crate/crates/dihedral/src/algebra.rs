//! The group algebra of the dihedral group over exact rationals, the
//! intertwining map onto semi-magic matrices, the one-dimensional character
//! idempotents, and the exact kernel/rank data of the intertwiner.
//!
//! Coefficient vectors use the fixed basis order e, R, ..., R^{n-1},
//! C, CR, ..., CR^{n-1}.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{DihedralError, Result};
use crate::group::{all_elements, DihedralElement, LinearCharacter, LinearKind};
use crate::magic::SemiMagicMatrix;
use crate::matrix::Mat;
use crate::permrep::{perm_matrix, to_permutation};

/// Element of the rational group algebra: 2n exact coefficients in the
/// fixed basis order.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupAlgebraElement {
    n: usize,
    coeffs: Vec<BigRational>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(DihedralError::Parameter(format!(
                "group algebra needs n >= 3, got {n}"
            )));
        }
        Ok(GroupAlgebraElement {
            n,
            coeffs: vec![BigRational::zero(); 2 * n],
        })
    }

    /// The basis vector of a single group element.
    pub fn basis(g: &DihedralElement) -> Self {
        let mut out = Self::zero(g.n()).expect("element has valid n");
        out.coeffs[g.index()] = BigRational::one();
        out
    }

    pub fn from_coeffs(n: usize, coeffs: Vec<BigRational>) -> Result<Self> {
        if n < 3 || coeffs.len() != 2 * n {
            return Err(DihedralError::Parameter(format!(
                "coefficient vector must have length {}, got {}",
                2 * n,
                coeffs.len()
            )));
        }
        Ok(GroupAlgebraElement { n, coeffs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, g: &DihedralElement) -> &BigRational {
        &self.coeffs[g.index()]
    }

    pub fn coeff_sum(&self) -> BigRational {
        self.coeffs.iter().sum()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(DihedralError::MismatchedN(self.n, other.n));
        }
        Ok(GroupAlgebraElement {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(DihedralError::MismatchedN(self.n, other.n));
        }
        Ok(GroupAlgebraElement {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        GroupAlgebraElement {
            n: self.n,
            coeffs: self.coeffs.iter().map(|a| a * s).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Bilinear extension of the group product.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(DihedralError::MismatchedN(self.n, other.n));
        }
        let els = all_elements(self.n)?;
        let mut out = Self::zero(self.n)?;
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let g = els[i].mul(&els[j]).expect("same n");
                out.coeffs[g.index()] += a * b;
            }
        }
        Ok(out)
    }
}

/// The intertwiner: sends Σ x_g e_g to Σ x_g P_g. Coefficient sums become
/// line sums, so the image is always semi-magic.
pub fn phi_rho(a: &GroupAlgebraElement) -> SemiMagicMatrix<BigRational> {
    let n = a.n();
    let els = all_elements(n).expect("valid n");
    let mut m = Mat::<BigRational>::zeros(n);
    for (i, x) in a.coeffs().iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let action = to_permutation(&els[i]);
        for col in 0..n {
            let row = action.apply(col);
            let cur = m.get(row, col) + x;
            m.set(row, col, cur);
        }
    }
    SemiMagicMatrix::new(m).expect("sums of permutation matrices are semi-magic")
}

/// The primitive idempotent of a one-dimensional character:
/// (1/2n) Σ_g χ(g^{-1}) e_g.
pub fn character_idempotent(n: usize, kind: LinearKind) -> Result<GroupAlgebraElement> {
    let chi = LinearCharacter::new(n, kind)?;
    let els = all_elements(n)?;
    let order = BigRational::from_integer((2 * n as i64).into());
    let coeffs = els
        .iter()
        .map(|g| BigRational::from_integer(chi.eval(&g.inv()).into()) / &order)
        .collect();
    GroupAlgebraElement::from_coeffs(n, coeffs)
}

/// Basis of the kernel of the intertwiner, one idempotent per vanishing
/// character: det always, joined for n = 2m by sgn (m even) or det*sgn
/// (m odd).
#[derive(Debug, Clone, PartialEq)]
pub struct KernelBasis {
    pub vectors: Vec<GroupAlgebraElement>,
    pub expected_dim: usize,
}

pub fn kernel_basis(n: usize) -> Result<KernelBasis> {
    let mut vectors = vec![character_idempotent(n, LinearKind::Det)?];
    if n % 2 == 0 {
        let m = n / 2;
        let second = if m % 2 == 0 {
            LinearKind::Sgn
        } else {
            LinearKind::DetSgn
        };
        vectors.push(character_idempotent(n, second)?);
    }
    let expected_dim = vectors.len();
    Ok(KernelBasis {
        vectors,
        expected_dim,
    })
}

/// Rank of a set of rational row vectors by exact Gaussian elimination.
pub fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut pivots: Vec<(usize, Vec<BigRational>)> = Vec::new();
    for row in rows {
        let mut row = row.clone();
        for (lead, pivot) in &pivots {
            if !row[*lead].is_zero() {
                let factor = row[*lead].clone();
                for (a, b) in row.iter_mut().zip(pivot.iter()) {
                    *a -= &factor * b;
                }
            }
        }
        if let Some(lead) = row.iter().position(|v| !v.is_zero()) {
            let inv = row[lead].clone();
            for a in row.iter_mut() {
                *a /= &inv;
            }
            pivots.push((lead, row));
        }
    }
    pivots.len()
}

/// Exact rank of the intertwiner on the 2n basis matrices: 2n-1 for odd n,
/// 2n-2 for even n.
pub fn phi_rank(n: usize) -> Result<usize> {
    let els = all_elements(n)?;
    let rows: Vec<Vec<BigRational>> = els
        .iter()
        .map(|g| {
            let p = perm_matrix(g);
            let mut row = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    row.push(BigRational::from_integer((p.entry(i, j) as i64).into()));
                }
            }
            row
        })
        .collect();
    Ok(rational_rank(&rows))
}
