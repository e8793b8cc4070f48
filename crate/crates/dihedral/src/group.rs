//! The dihedral group of order 2n in its word realization: every element is
//! a canonical word `C^c R^k` with `c` in {0,1} and `0 <= k < n`, multiplied
//! through the relations `R^n = C^2 = e` and `C R C = R^{-1}`.

use std::fmt;

use crate::error::{DihedralError, Result};

/// Canonical word `C^c R^k` in the dihedral group of order `2n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralElement {
    n: usize,
    reflected: bool,
    rot: usize,
}

fn check_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(DihedralError::Parameter(format!(
            "group parameter n must be at least 3, got {n}"
        )));
    }
    Ok(())
}

fn reduce(n: usize, k: i64) -> usize {
    k.rem_euclid(n as i64) as usize
}

impl DihedralElement {
    /// General constructor; `rot` may be negative and is reduced mod n.
    pub fn new(n: usize, reflected: bool, rot: i64) -> Result<Self> {
        check_n(n)?;
        Ok(DihedralElement {
            n,
            reflected,
            rot: reduce(n, rot),
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, false, 0)
    }

    /// The rotation `R^k`.
    pub fn rotation(n: usize, k: i64) -> Result<Self> {
        Self::new(n, false, k)
    }

    /// The reflection `C R^k`.
    pub fn reflection(n: usize, k: i64) -> Result<Self> {
        Self::new(n, true, k)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_reflected(&self) -> bool {
        self.reflected
    }

    pub fn rot(&self) -> usize {
        self.rot
    }

    pub fn is_identity(&self) -> bool {
        !self.reflected && self.rot == 0
    }

    /// Group product of canonical words:
    /// `C^a R^j * C^b R^k = C^(a xor b) R^((-1)^b j + k)`.
    pub fn mul(&self, other: &DihedralElement) -> Result<DihedralElement> {
        if self.n != other.n {
            return Err(DihedralError::MismatchedN(self.n, other.n));
        }
        let j = self.rot as i64;
        let k = other.rot as i64;
        let signed = if other.reflected { -j } else { j };
        Ok(DihedralElement {
            n: self.n,
            reflected: self.reflected ^ other.reflected,
            rot: reduce(self.n, signed + k),
        })
    }

    pub fn inv(&self) -> DihedralElement {
        if self.reflected {
            // reflections are involutions
            *self
        } else {
            DihedralElement {
                n: self.n,
                reflected: false,
                rot: reduce(self.n, -(self.rot as i64)),
            }
        }
    }

    /// Smallest t >= 1 with self^t = e, found by repeated multiplication.
    pub fn order(&self) -> usize {
        let mut acc = *self;
        let mut t = 1;
        while !acc.is_identity() {
            acc = acc.mul(self).expect("same n");
            t += 1;
        }
        t
    }

    /// g x g^{-1}.
    pub fn conjugate(&self, x: &DihedralElement) -> Result<DihedralElement> {
        self.mul(x)?.mul(&self.inv())
    }

    /// Position in the fixed basis order e, R, ..., R^{n-1}, C, CR, ..., CR^{n-1}.
    pub fn index(&self) -> usize {
        if self.reflected {
            self.n + self.rot
        } else {
            self.rot
        }
    }

    /// Inverse of [`DihedralElement::index`].
    pub fn from_index(n: usize, idx: usize) -> Result<Self> {
        check_n(n)?;
        if idx >= 2 * n {
            return Err(DihedralError::Parameter(format!(
                "element index {idx} out of range for group of order {}",
                2 * n
            )));
        }
        Ok(DihedralElement {
            n,
            reflected: idx >= n,
            rot: idx % n,
        })
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.reflected, self.rot) {
            (false, 0) => write!(f, "e"),
            (false, 1) => write!(f, "R"),
            (false, k) => write!(f, "R^{k}"),
            (true, 0) => write!(f, "C"),
            (true, 1) => write!(f, "CR"),
            (true, k) => write!(f, "CR^{k}"),
        }
    }
}

/// All 2n elements in the fixed basis order (rotations then reflections).
pub fn all_elements(n: usize) -> Result<Vec<DihedralElement>> {
    check_n(n)?;
    Ok((0..2 * n)
        .map(|idx| DihedralElement::from_index(n, idx).expect("in range"))
        .collect())
}

/// Names of the one-dimensional characters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LinearKind {
    Trivial,
    Det,
    Sgn,
    DetSgn,
}

impl LinearKind {
    pub fn name(&self) -> &'static str {
        match self {
            LinearKind::Trivial => "triv",
            LinearKind::Det => "det",
            LinearKind::Sgn => "sgn",
            LinearKind::DetSgn => "det*sgn",
        }
    }
}

/// A multiplicative character with values in {-1, +1}.
///
/// `det` is -1 exactly on reflections; `sgn` is the permutation sign of the
/// vertex action, which on the generator C equals (-1)^floor(n/2) and on R
/// equals (-1)^(n-1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinearCharacter {
    n: usize,
    kind: LinearKind,
}

impl LinearCharacter {
    pub fn new(n: usize, kind: LinearKind) -> Result<Self> {
        check_n(n)?;
        Ok(LinearCharacter { n, kind })
    }

    pub fn kind(&self) -> LinearKind {
        self.kind
    }

    pub fn name(&self) -> &'static str {
        self.kind.name()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Character value at `g`; always +1 or -1.
    pub fn eval(&self, g: &DihedralElement) -> i64 {
        debug_assert_eq!(g.n(), self.n);
        let c = g.is_reflected() as usize;
        let k = g.rot();
        let det = if c == 1 { -1 } else { 1 };
        let sgn_exp = k * (self.n - 1) + c * (self.n / 2);
        let sgn = if sgn_exp % 2 == 1 { -1 } else { 1 };
        match self.kind {
            LinearKind::Trivial => 1,
            LinearKind::Det => det,
            LinearKind::Sgn => sgn,
            LinearKind::DetSgn => det * sgn,
        }
    }
}

/// A conjugacy class with a distinguished representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub rep: DihedralElement,
    pub members: Vec<DihedralElement>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// Short name used in table headers: e, R^m, R^±k, C, CR.
    pub fn label(&self) -> String {
        let n = self.rep.n();
        if self.rep.is_identity() {
            "e".to_string()
        } else if !self.rep.is_reflected() {
            let k = self.rep.rot();
            if n % 2 == 0 && k == n / 2 {
                format!("R^{k}")
            } else if k == 1 {
                "R^±1".to_string()
            } else {
                format!("R^±{k}")
            }
        } else if self.rep.rot() == 0 {
            "C".to_string()
        } else {
            "CR".to_string()
        }
    }
}

/// Conjugacy classes, commutator subgroup, and one-dimensional characters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClassData {
    pub n: usize,
    pub classes: Vec<ConjugacyClass>,
    /// [G, G] is the rotation subgroup generated by R^d with d in {1, 2}.
    pub commutator_rotation_step: usize,
    pub linear_characters: Vec<LinearCharacter>,
}

impl ConjugacyClassData {
    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.size()).collect()
    }

    /// The elements of [G, G] = <R^d>.
    pub fn commutator_subgroup(&self) -> Vec<DihedralElement> {
        let d = self.commutator_rotation_step;
        (0..self.n)
            .step_by(d)
            .map(|k| DihedralElement::rotation(self.n, k as i64).expect("valid n"))
            .collect()
    }
}

/// Conjugacy-class decomposition of the dihedral group of order 2n.
///
/// Class order is deterministic: e, the central rotation R^m when n = 2m,
/// the paired classes {R^k, R^-k} by increasing k, then the class of C and
/// (for even n) the class of CR.
pub fn class_data(n: usize) -> Result<ConjugacyClassData> {
    check_n(n)?;
    let rot = |k: usize| DihedralElement::rotation(n, k as i64).expect("valid n");
    let refl = |k: usize| DihedralElement::reflection(n, k as i64).expect("valid n");

    let mut classes = Vec::new();
    classes.push(ConjugacyClass {
        rep: rot(0),
        members: vec![rot(0)],
    });
    let even = n % 2 == 0;
    if even {
        let m = n / 2;
        classes.push(ConjugacyClass {
            rep: rot(m),
            members: vec![rot(m)],
        });
    }
    let paired_max = if even { n / 2 - 1 } else { (n - 1) / 2 };
    for k in 1..=paired_max {
        classes.push(ConjugacyClass {
            rep: rot(k),
            members: vec![rot(k), rot(n - k)],
        });
    }
    if even {
        classes.push(ConjugacyClass {
            rep: refl(0),
            members: (0..n).step_by(2).map(refl).collect(),
        });
        classes.push(ConjugacyClass {
            rep: refl(1),
            members: (1..n).step_by(2).map(refl).collect(),
        });
    } else {
        classes.push(ConjugacyClass {
            rep: refl(0),
            members: (0..n).map(refl).collect(),
        });
    }

    let kinds: &[LinearKind] = if even {
        &[
            LinearKind::Trivial,
            LinearKind::Det,
            LinearKind::Sgn,
            LinearKind::DetSgn,
        ]
    } else {
        &[LinearKind::Trivial, LinearKind::Det]
    };
    let linear_characters = kinds
        .iter()
        .map(|&k| LinearCharacter::new(n, k).expect("valid n"))
        .collect();

    Ok(ConjugacyClassData {
        n,
        classes,
        commutator_rotation_step: if even { 2 } else { 1 },
        linear_characters,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize) -> DihedralElement {
        DihedralElement::identity(n).unwrap()
    }
    fn r(n: usize, k: i64) -> DihedralElement {
        DihedralElement::rotation(n, k).unwrap()
    }
    fn c(n: usize, k: i64) -> DihedralElement {
        DihedralElement::reflection(n, k).unwrap()
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(e(5).mul(&r(5, 1)).unwrap(), r(5, 1));
        assert_eq!(c(5, 0).mul(&c(5, 0)).unwrap(), e(5));
        // C R C = R^{-1}
        let crc = c(5, 0).mul(&r(5, 1)).unwrap().mul(&c(5, 0)).unwrap();
        assert_eq!(crc, r(5, 4));
    }

    #[test]
    fn mismatched_n_is_an_error() {
        assert_eq!(
            r(5, 1).mul(&r(6, 1)).unwrap_err(),
            DihedralError::MismatchedN(5, 6)
        );
    }

    #[test]
    fn n_below_three_rejected() {
        assert!(DihedralElement::identity(2).is_err());
        assert!(class_data(2).is_err());
    }

    #[test]
    fn inverses() {
        assert_eq!(r(5, 1).inv(), r(5, 4));
        assert_eq!(c(5, 2).inv(), c(5, 2));
        assert_eq!(r(6, 2).inv(), r(6, 4));
        for n in [5usize, 6] {
            for g in all_elements(n).unwrap() {
                assert!(g.mul(&g.inv()).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn orders() {
        assert_eq!(r(5, 1).order(), 5);
        assert_eq!(c(6, 3).order(), 2);
        assert_eq!(r(6, 2).order(), 3);
    }

    #[test]
    fn negative_rotation_reduced() {
        assert_eq!(r(5, -1), r(5, 4));
        assert_eq!(c(7, -3), c(7, 4));
    }

    #[test]
    fn associativity_exhaustive_small_n() {
        for n in 3..=8 {
            let els = all_elements(n).unwrap();
            for a in &els {
                for b in &els {
                    let ab = a.mul(b).unwrap();
                    for x in &els {
                        let left = ab.mul(x).unwrap();
                        let right = a.mul(&b.mul(x).unwrap()).unwrap();
                        assert_eq!(left, right);
                    }
                }
            }
        }
    }

    #[test]
    fn rotations_form_cyclic_subgroup() {
        let els = all_elements(7).unwrap();
        let rots: Vec<_> = els.iter().filter(|g| !g.is_reflected()).collect();
        assert_eq!(rots.len(), 7);
        for g in &rots {
            assert_eq!(**g, r(7, 1).mul(&r(7, g.rot() as i64 - 1)).unwrap());
        }
    }

    #[test]
    fn reflection_conjugation_inverts_rotations() {
        for n in 3..=8 {
            for k in 0..n {
                let s = c(n, k as i64);
                for t in 0..n {
                    let rr = r(n, t as i64);
                    let srs = s.mul(&rr).unwrap().mul(&s).unwrap();
                    assert_eq!(srs, rr.inv());
                }
            }
        }
    }

    #[test]
    fn class_data_odd_example() {
        let d = class_data(5).unwrap();
        assert_eq!(d.class_sizes(), vec![1, 2, 2, 5]);
        assert_eq!(d.commutator_rotation_step, 1);
        assert_eq!(d.commutator_subgroup().len(), 5);
        assert_eq!(d.linear_characters.len(), 2);
    }

    #[test]
    fn class_data_even_example() {
        let d = class_data(6).unwrap();
        assert_eq!(d.class_sizes(), vec![1, 1, 2, 2, 3, 3]);
        assert_eq!(d.commutator_rotation_step, 2);
        assert_eq!(d.commutator_subgroup().len(), 3);
        assert_eq!(d.linear_characters.len(), 4);
    }

    #[test]
    fn class_count_formula() {
        for n in 3..=12 {
            let d = class_data(n).unwrap();
            let expected = if n % 2 == 1 { (n + 3) / 2 } else { n / 2 + 3 };
            assert_eq!(d.classes.len(), expected);
            assert_eq!(d.class_sizes().iter().sum::<usize>(), 2 * n);
        }
    }

    #[test]
    fn reflection_classes_split_for_n4() {
        let d = class_data(4).unwrap();
        let c_class = &d.classes[d.classes.len() - 2];
        let cr_class = &d.classes[d.classes.len() - 1];
        assert_eq!(c_class.size(), 2);
        assert_eq!(cr_class.size(), 2);
        assert!(c_class
            .members
            .iter()
            .all(|g| !cr_class.members.contains(g)));
    }

    #[test]
    fn classes_match_brute_force_conjugation() {
        for n in 3..=8 {
            let d = class_data(n).unwrap();
            let els = all_elements(n).unwrap();
            // union is the whole group, classes disjoint
            let mut seen: Vec<DihedralElement> = Vec::new();
            for cl in &d.classes {
                for g in &cl.members {
                    assert!(!seen.contains(g));
                    seen.push(*g);
                }
            }
            assert_eq!(seen.len(), 2 * n);
            // each stored class is exactly the conjugation orbit of its rep
            for cl in &d.classes {
                let mut orbit: Vec<DihedralElement> = els
                    .iter()
                    .map(|g| g.conjugate(&cl.rep).unwrap())
                    .collect();
                orbit.sort();
                orbit.dedup();
                let mut members = cl.members.clone();
                members.sort();
                assert_eq!(orbit, members, "n={n} class of {}", cl.rep);
            }
        }
    }

    #[test]
    fn linear_characters_are_multiplicative() {
        for n in [5usize, 6, 7, 8] {
            let d = class_data(n).unwrap();
            let els = all_elements(n).unwrap();
            for chi in &d.linear_characters {
                for a in &els {
                    for b in &els {
                        let ab = a.mul(b).unwrap();
                        assert_eq!(chi.eval(&ab), chi.eval(a) * chi.eval(b));
                    }
                }
            }
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(e(5).to_string(), "e");
        assert_eq!(r(5, 1).to_string(), "R");
        assert_eq!(r(5, 3).to_string(), "R^3");
        assert_eq!(c(5, 0).to_string(), "C");
        assert_eq!(c(5, 1).to_string(), "CR");
        assert_eq!(c(5, 4).to_string(), "CR^4");
    }

    #[test]
    fn index_round_trip() {
        for n in [3usize, 6] {
            for idx in 0..2 * n {
                let g = DihedralElement::from_index(n, idx).unwrap();
                assert_eq!(g.index(), idx);
            }
        }
    }
}
