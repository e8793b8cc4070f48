//! Dihedral groups realized as permutation matrices, and the matrix algebra
//! they span.
//!
//! The crate covers four connected computations for the dihedral group of
//! order 2n acting on the vertices of an n-gon:
//!
//! - [`group`] and [`permrep`]: exact group arithmetic in the canonical word
//!   form `C^c R^k`, the vertex permutation action, the permutation-matrix
//!   realization, and circulant/anticirculant structure predicates;
//! - [`characters`]: the full character table for both parities of n and the
//!   decomposition of the permutation character;
//! - [`algebra`] and [`magic`]: the rational group algebra, the intertwining
//!   map onto semi-magic matrices, its exact kernel and rank, line-sum
//!   arithmetic, and the checkerboard matrices J, J1, J2;
//! - [`counting`]: closed formulas, generating-function series, and
//!   brute-force oracles for the number of semi-magic squares with a fixed
//!   line sum, plus polynomial reciprocity checks;
//! - [`spectral`]: the complete orthogonal idempotents of the algebra, the
//!   invariant-subspace eigenbases, and the quaternionic bases carried by
//!   the two-dimensional components.
//!
//! Everything that can be exact is exact (big integers and rationals);
//! trigonometric data uses complex doubles with explicit tolerances.

pub mod algebra;
pub mod characters;
pub mod counting;
pub mod error;
pub mod export;
pub mod group;
pub mod magic;
pub mod matrix;
pub mod permrep;
pub mod spectral;
mod trig;
pub mod verify;

pub use error::{DihedralError, Result};

/// Float tolerance taken from the `DIHEDRAL_EPS` environment variable, or
/// the library default when unset or unparsable.
pub fn tolerance_from_env() -> f64 {
    std::env::var("DIHEDRAL_EPS")
        .ok()
        .and_then(|v| v.parse::<f64>().ok())
        .filter(|e| e.is_finite() && *e > 0.0)
        .unwrap_or(magic::DEFAULT_EPS)
}
