//! Permutation and permutation-matrix realizations of the dihedral group:
//! R acts on vertex labels as the n-cycle i -> i+1 and C as the reversal
//! i -> n+1-i. Labels are 0-based internally; 1-based forms are offered at
//! the boundary.

use num_complex::Complex64;
use num_rational::BigRational;

use crate::error::{DihedralError, Result};
use crate::group::DihedralElement;
use crate::matrix::{Mat, Scalar};

/// A permutation of {0, ..., n-1}; `image[i]` is the image of i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || seen[v] {
                return Err(DihedralError::Parameter(format!(
                    "image {image:?} is not a bijection on 0..{n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// The image array in the 1-based vertex labelling.
    pub fn one_based_image(&self) -> Vec<usize> {
        self.image.iter().map(|&v| v + 1).collect()
    }

    /// (self ∘ other)(i) = self(other(i)).
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(DihedralError::MismatchedN(self.n(), other.n()));
        }
        Ok(Permutation {
            image: (0..self.n()).map(|i| self.image[other.image[i]]).collect(),
        })
    }

    pub fn fixed_points(&self) -> usize {
        self.image
            .iter()
            .enumerate()
            .filter(|(i, &v)| *i == v)
            .count()
    }

    /// Sign of the permutation via its cycle decomposition.
    pub fn sign(&self) -> i64 {
        let n = self.n();
        let mut visited = vec![false; n];
        let mut transpositions = 0usize;
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut len = 0usize;
            let mut cur = start;
            while !visited[cur] {
                visited[cur] = true;
                cur = self.image[cur];
                len += 1;
            }
            transpositions += len - 1;
        }
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// 0/1 matrix with exactly one 1 per row and per column, stored densely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationMatrix {
    n: usize,
    entries: Vec<u8>,
}

impl PermutationMatrix {
    /// Validates the doubly-stochastic 0/1 invariant.
    pub fn new(n: usize, entries: Vec<u8>) -> Result<Self> {
        if entries.len() != n * n || entries.iter().any(|&e| e > 1) {
            return Err(DihedralError::Parameter(
                "permutation matrix must be an n*n 0/1 array".to_string(),
            ));
        }
        for i in 0..n {
            let row: u32 = (0..n).map(|j| entries[i * n + j] as u32).sum();
            let col: u32 = (0..n).map(|j| entries[j * n + i] as u32).sum();
            if row != 1 || col != 1 {
                return Err(DihedralError::Parameter(
                    "permutation matrix needs exactly one 1 per row and column".to_string(),
                ));
            }
        }
        Ok(PermutationMatrix { n, entries })
    }

    /// Matrix of σ: if σ(i) = j then the (j, i) entry is 1.
    pub fn from_permutation(p: &Permutation) -> Self {
        let n = p.n();
        let mut entries = vec![0u8; n * n];
        for i in 0..n {
            entries[p.apply(i) * n + i] = 1;
        }
        PermutationMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.n + j]
    }

    /// Recovers σ from the matrix.
    pub fn permutation(&self) -> Permutation {
        let mut image = vec![0usize; self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                if self.entries[i * self.n + j] == 1 {
                    image[j] = i;
                }
            }
        }
        Permutation { image }
    }

    pub fn matmul(&self, other: &PermutationMatrix) -> Result<PermutationMatrix> {
        let p = self.permutation().compose(&other.permutation())?;
        Ok(PermutationMatrix::from_permutation(&p))
    }

    pub fn trace(&self) -> usize {
        (0..self.n)
            .map(|i| self.entries[i * self.n + i] as usize)
            .sum()
    }

    pub fn determinant(&self) -> i64 {
        self.permutation().sign()
    }

    pub fn to_mat<T: Scalar>(&self) -> Mat<T> {
        Mat::from_fn(self.n, |i, j| {
            if self.entry(i, j) == 1 {
                T::one()
            } else {
                T::zero()
            }
        })
    }

    pub fn to_int(&self) -> Mat<i64> {
        self.to_mat()
    }

    pub fn to_rational(&self) -> Mat<BigRational> {
        self.to_mat()
    }

    pub fn to_complex(&self) -> Mat<Complex64> {
        self.to_mat()
    }
}

/// The vertex action of a canonical word: apply R^k first, then C if present.
pub fn to_permutation(g: &DihedralElement) -> Permutation {
    let n = g.n();
    let k = g.rot();
    let image = (0..n)
        .map(|i| {
            let rotated = (i + k) % n;
            if g.is_reflected() {
                n - 1 - rotated
            } else {
                rotated
            }
        })
        .collect();
    Permutation { image }
}

pub fn perm_matrix(g: &DihedralElement) -> PermutationMatrix {
    PermutationMatrix::from_permutation(&to_permutation(g))
}

/// Entry (i, j) depends only on (i - j) mod n.
pub fn is_circulant<T: Scalar>(m: &Mat<T>, eps: f64) -> bool {
    m.is_circulant(eps)
}

/// Entry (i, j) depends only on (i + j) mod n.
pub fn is_anticirculant<T: Scalar>(m: &Mat<T>, eps: f64) -> bool {
    m.is_anticirculant(eps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::all_elements;

    fn rot(n: usize, k: i64) -> DihedralElement {
        DihedralElement::rotation(n, k).unwrap()
    }
    fn refl(n: usize, k: i64) -> DihedralElement {
        DihedralElement::reflection(n, k).unwrap()
    }

    #[test]
    fn rotation_cycle_image() {
        let p = to_permutation(&rot(4, 1));
        assert_eq!(p.one_based_image(), vec![2, 3, 4, 1]);
    }

    #[test]
    fn reflection_reverses_labels() {
        let p = to_permutation(&refl(4, 0));
        assert_eq!(p.one_based_image(), vec![4, 3, 2, 1]);
    }

    #[test]
    fn word_action_composes_rotation_then_reflection() {
        // CR^2 at n=5: apply R^2, then C
        let by_hand = to_permutation(&refl(5, 0))
            .compose(&to_permutation(&rot(5, 2)))
            .unwrap();
        assert_eq!(to_permutation(&refl(5, 2)), by_hand);
    }

    #[test]
    fn matrix_of_r_at_n4() {
        let m = perm_matrix(&rot(4, 1));
        let want = [[0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]];
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(m.entry(i, j), want[i][j]);
            }
        }
    }

    #[test]
    fn matrix_of_c_is_counteridentity() {
        let m = perm_matrix(&refl(4, 0));
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(m.entry(i, j), (i + j == 3) as u8);
            }
        }
    }

    #[test]
    fn identity_matrix_at_n3() {
        let m = perm_matrix(&DihedralElement::identity(3).unwrap());
        assert_eq!(m.to_int(), Mat::identity(3));
    }

    #[test]
    fn matrices_are_a_homomorphism() {
        for n in 3..=8 {
            let els = all_elements(n).unwrap();
            for a in &els {
                for b in &els {
                    let prod = perm_matrix(a).matmul(&perm_matrix(b)).unwrap();
                    assert_eq!(prod, perm_matrix(&a.mul(b).unwrap()));
                }
            }
        }
    }

    #[test]
    fn rotations_circulant_reflections_anticirculant() {
        for n in 3..=8 {
            for g in all_elements(n).unwrap() {
                let m = perm_matrix(&g).to_int();
                if g.is_reflected() {
                    assert!(is_anticirculant(&m, 0.0), "{g} should be anticirculant");
                } else {
                    assert!(is_circulant(&m, 0.0), "{g} should be circulant");
                }
            }
        }
    }

    #[test]
    fn all_ones_is_both() {
        let j = Mat::from_fn(4, |_, _| 1i64);
        assert!(is_circulant(&j, 0.0));
        assert!(is_anticirculant(&j, 0.0));
    }

    #[test]
    fn left_multiplication_by_c_swaps_rotations_and_reflections() {
        for n in [4usize, 5, 6] {
            let c = refl(n, 0);
            for g in all_elements(n).unwrap() {
                let swapped = c.mul(&g).unwrap();
                assert_eq!(swapped.is_reflected(), !g.is_reflected());
                let lhs = perm_matrix(&c).matmul(&perm_matrix(&g)).unwrap();
                assert_eq!(lhs, perm_matrix(&swapped));
            }
        }
    }

    #[test]
    fn trace_counts_fixed_points() {
        for n in 3..=8 {
            for g in all_elements(n).unwrap() {
                let p = to_permutation(&g);
                assert_eq!(perm_matrix(&g).trace(), p.fixed_points());
            }
        }
    }

    #[test]
    fn determinant_matches_sgn_character() {
        use crate::group::{LinearCharacter, LinearKind};
        for n in 3..=8 {
            let sgn = LinearCharacter::new(n, LinearKind::Sgn).unwrap();
            for g in all_elements(n).unwrap() {
                assert_eq!(perm_matrix(&g).determinant(), sgn.eval(&g), "n={n} g={g}");
            }
        }
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::new(vec![0, 0, 2]).is_err());
        assert!(PermutationMatrix::new(2, vec![1, 1, 0, 1]).is_err());
    }
}
