//! The complete orthogonal idempotents of the matrix algebra spanned by the
//! dihedral permutation matrices, the circulant idempotents they refine, the
//! invariant-subspace eigenbases, and the quaternionic bases carried by each
//! two-dimensional isotypic component.

use num_complex::Complex64;

use crate::characters::{char_value, two_dim_count, IrreducibleLabel};
use crate::error::{DihedralError, Result};
use crate::group::{all_elements, DihedralElement};
use crate::magic::SemiMagicMatrix;
use crate::matrix::{symmetric_eigenvalues, Mat};
use crate::permrep::perm_matrix;
use crate::trig::{cos_table, sin_table};

fn check_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(DihedralError::Parameter(format!(
            "spectral data needs n >= 3, got {n}"
        )));
    }
    Ok(())
}

fn check_two_dim_index(n: usize, j: usize) -> Result<()> {
    check_n(n)?;
    let max = two_dim_count(n);
    if j < 1 || j > max {
        return Err(DihedralError::Parameter(format!(
            "two-dimensional index j = {j} out of range 1..={max} for n = {n}"
        )));
    }
    Ok(())
}

/// Valid indices of the two-dimensional types: 1..=(n-1)/2 for odd n,
/// 1..=m-1 for n = 2m.
pub fn two_dim_range(n: usize) -> std::ops::RangeInclusive<usize> {
    1..=two_dim_count(n)
}

/// The circulant idempotent of the rotation character R -> ω^j: entry
/// (i, k) is ω^{j(k-i)} / n.
pub fn circulant_idempotent(n: usize, j: usize) -> Result<Mat<Complex64>> {
    check_n(n)?;
    if j >= n {
        return Err(DihedralError::Parameter(format!(
            "rotation character index j = {j} out of range 0..{n}"
        )));
    }
    let cos = cos_table(n);
    let sin = sin_table(n);
    Ok(Mat::from_fn(n, |i, k| {
        let d = (k + n - i) % n;
        let t = (d * j) % n;
        Complex64::new(cos[t] / n as f64, sin[t] / n as f64)
    }))
}

/// Isotypic projection applied to the identity:
/// (d/2n) Σ_g χ(g^{-1}) P_g as a complex matrix.
pub fn project_isotypic(n: usize, label: &IrreducibleLabel) -> Result<Mat<Complex64>> {
    check_n(n)?;
    if let IrreducibleLabel::Pi2(j) = label {
        check_two_dim_index(n, *j)?;
    }
    let d = label.dimension() as f64;
    let order = (2 * n) as f64;
    let mut out = Mat::<Complex64>::zeros(n);
    for g in all_elements(n)? {
        let weight = char_value(n, label, &g.inv());
        if weight == 0.0 {
            continue;
        }
        let action = crate::permrep::to_permutation(&g);
        let scale = Complex64::new(d * weight / order, 0.0);
        for col in 0..n {
            let row = action.apply(col);
            let cur = *out.get(row, col) + scale;
            out.set(row, col, cur);
        }
    }
    Ok(out)
}

/// The two-dimensional idempotent (2/n) Σ_k cos(2kjπ/n) P_{R^k}: the
/// symmetric circulant with entry (a, b) = (2/n) cos(2(a-b)jπ/n).
pub fn pi2_idempotent(n: usize, j: usize) -> Result<Mat<Complex64>> {
    check_two_dim_index(n, j)?;
    let cos = cos_table(n);
    let scale = 2.0 / n as f64;
    Ok(Mat::from_fn(n, |a, b| {
        let d = (a + n - b) % n;
        Complex64::new(scale * cos[(d * j) % n], 0.0)
    }))
}

/// Its antisymmetric partner: entry (a, b) = (2/n) sin(2(b-a)jπ/n), the
/// displayed circulant with +sin entries above the diagonal. It satisfies
/// U U' = U' U = U' and (U')^2 = -U.
pub fn u_prime(n: usize, j: usize) -> Result<Mat<Complex64>> {
    check_two_dim_index(n, j)?;
    let sin = sin_table(n);
    let scale = 2.0 / n as f64;
    Ok(Mat::from_fn(n, |a, b| {
        let d = (b + n - a) % n;
        Complex64::new(scale * sin[(d * j) % n], 0.0)
    }))
}

/// One member of the complete orthogonal idempotent set.
pub type IdempotentMember = (IrreducibleLabel, SemiMagicMatrix<Complex64>);

/// The complete orthogonal idempotents of the algebra: J/n for the trivial
/// type, the alternating ±1/n checkerboard for the extra linear type when n
/// is even, and one symmetric cosine circulant per two-dimensional type.
#[derive(Debug, Clone)]
pub struct IdempotentSet {
    pub n: usize,
    pub members: Vec<IdempotentMember>,
    pub eps: f64,
}

impl IdempotentSet {
    pub fn member(&self, label: &IrreducibleLabel) -> Option<&SemiMagicMatrix<Complex64>> {
        self.members
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, m)| m)
    }

    /// Sum of all members; complete sets sum to the identity.
    pub fn sum(&self) -> Mat<Complex64> {
        let mut acc = Mat::<Complex64>::zeros(self.n);
        for (_, m) in &self.members {
            acc = acc.add(m.mat());
        }
        acc
    }
}

/// The linear character whose idempotent survives in the algebra for even
/// n = 2m: sgn for odd m, det*sgn for even m.
pub fn surviving_linear_label(n: usize) -> Result<IrreducibleLabel> {
    check_n(n)?;
    if n % 2 == 1 {
        return Err(DihedralError::Parameter(format!(
            "the extra linear idempotent exists only for even n, got {n}"
        )));
    }
    Ok(if (n / 2) % 2 == 1 {
        IrreducibleLabel::Sgn
    } else {
        IrreducibleLabel::DetSgn
    })
}

pub fn idempotent_set(n: usize) -> Result<IdempotentSet> {
    idempotent_set_with_eps(n, crate::magic::DEFAULT_EPS)
}

pub fn idempotent_set_with_eps(n: usize, eps: f64) -> Result<IdempotentSet> {
    check_n(n)?;
    let mut members: Vec<IdempotentMember> = Vec::new();

    let triv = Mat::from_fn(n, |_, _| Complex64::new(1.0 / n as f64, 0.0));
    members.push((
        IrreducibleLabel::Trivial,
        SemiMagicMatrix::with_eps(triv, eps)?,
    ));

    if n % 2 == 0 {
        let alt = Mat::from_fn(n, |i, j| {
            let sign = if (i + j) % 2 == 0 { 1.0 } else { -1.0 };
            Complex64::new(sign / n as f64, 0.0)
        });
        members.push((
            surviving_linear_label(n)?,
            SemiMagicMatrix::with_eps(alt, eps)?,
        ));
    }

    for j in 1..=two_dim_count(n) {
        members.push((
            IrreducibleLabel::Pi2(j),
            SemiMagicMatrix::with_eps(pi2_idempotent(n, j)?, eps)?,
        ));
    }

    Ok(IdempotentSet { n, members, eps })
}

/// Orthonormal basis data for one two-dimensional invariant subspace.
#[derive(Debug, Clone)]
pub struct Eigenbasis {
    pub n: usize,
    pub j: usize,
    /// Cosine vector √(2/n)(1, c_j, c_2j, ...); fixed by the reflection RC.
    pub u: Vec<Complex64>,
    /// Sine vector √(2/n)(0, s_j, s_2j, ...); negated by RC.
    pub v: Vec<Complex64>,
    /// Rotation eigenvector (1, ω^j, ω^2j, ...)/√n with R-eigenvalue ω^{-j}.
    pub w_plus: Vec<Complex64>,
    /// Its conjugate, the eigenvector for ω^{+j}.
    pub w_minus: Vec<Complex64>,
}

pub fn eigenbasis(n: usize, j: usize) -> Result<Eigenbasis> {
    check_two_dim_index(n, j)?;
    let cos = cos_table(n);
    let sin = sin_table(n);
    let norm2 = (2.0 / n as f64).sqrt();
    let norm1 = 1.0 / (n as f64).sqrt();
    let u = (0..n)
        .map(|k| Complex64::new(norm2 * cos[(k * j) % n], 0.0))
        .collect();
    let v = (0..n)
        .map(|k| Complex64::new(norm2 * sin[(k * j) % n], 0.0))
        .collect();
    let w_plus: Vec<Complex64> = (0..n)
        .map(|k| {
            let t = (k * j) % n;
            Complex64::new(norm1 * cos[t], norm1 * sin[t])
        })
        .collect();
    let w_minus = w_plus.iter().map(|z| z.conj()).collect();
    Ok(Eigenbasis {
        n,
        j,
        u,
        v,
        w_plus,
        w_minus,
    })
}

/// Quaternionic basis of the two-dimensional component: q1 = U, q2 = iP_C U,
/// q3 = U', q4 = iP_C U'. The defining relations are
/// q2² = q3² = q4² = -q1 and q2 q3 q4 = -q1.
#[derive(Debug, Clone)]
pub struct QuaternionBasis {
    pub n: usize,
    pub j: usize,
    pub q1: Mat<Complex64>,
    pub q2: Mat<Complex64>,
    pub q3: Mat<Complex64>,
    pub q4: Mat<Complex64>,
}

pub fn quaternion_basis(n: usize, j: usize) -> Result<QuaternionBasis> {
    check_two_dim_index(n, j)?;
    let i = Complex64::new(0.0, 1.0);
    let c = perm_matrix(&DihedralElement::reflection(n, 0)?).to_complex();
    let q1 = pi2_idempotent(n, j)?;
    let q3 = u_prime(n, j)?;
    let q2 = c.matmul(&q1).scale(&i);
    let q4 = c.matmul(&q3).scale(&i);
    Ok(QuaternionBasis {
        n,
        j,
        q1,
        q2,
        q3,
        q4,
    })
}

/// Dimensions of the simple two-sided ideals: 1 for each surviving linear
/// type and 4 for each two-dimensional type. They sum to the dimension of
/// the whole algebra.
pub fn ideal_dimensions(n: usize) -> Result<Vec<(IrreducibleLabel, usize)>> {
    check_n(n)?;
    let mut out = vec![(IrreducibleLabel::Trivial, 1)];
    if n % 2 == 0 {
        out.push((surviving_linear_label(n)?, 1));
    }
    for j in 1..=two_dim_count(n) {
        out.push((IrreducibleLabel::Pi2(j), 4));
    }
    Ok(out)
}

/// Rank of a Hermitian projector: the number of singular values above 1/2.
/// The imaginary part must already be negligible.
pub fn projector_rank(m: &Mat<Complex64>, eps: f64) -> Result<usize> {
    if m.max_imag_abs() > eps {
        return Err(DihedralError::Parameter(
            "projector rank expects a real symmetric matrix".to_string(),
        ));
    }
    let eig = symmetric_eigenvalues(&m.real_part());
    Ok(eig.iter().filter(|v| v.abs() > 0.5).count())
}
