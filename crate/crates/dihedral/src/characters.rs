//! Irreducible characters of the dihedral group of order 2n and the full
//! character table, including the permutation character of the vertex action.
//!
//! The one-dimensional characters are triv and det for odd n, joined by sgn
//! and det*sgn for even n. The two-dimensional characters pi2(j) take the
//! value 2cos(2jkπ/n) on the rotation R^k and 0 on reflections.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;

use crate::error::{DihedralError, Result};
use crate::group::{class_data, ConjugacyClass, DihedralElement, LinearCharacter, LinearKind};
use crate::permrep::to_permutation;
use crate::trig::cos_table;

/// Label of an irreducible representation class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IrreducibleLabel {
    Trivial,
    Det,
    Sgn,
    DetSgn,
    Pi2(usize),
}

impl IrreducibleLabel {
    pub fn dimension(&self) -> usize {
        match self {
            IrreducibleLabel::Pi2(_) => 2,
            _ => 1,
        }
    }

    pub fn linear_kind(&self) -> Option<LinearKind> {
        match self {
            IrreducibleLabel::Trivial => Some(LinearKind::Trivial),
            IrreducibleLabel::Det => Some(LinearKind::Det),
            IrreducibleLabel::Sgn => Some(LinearKind::Sgn),
            IrreducibleLabel::DetSgn => Some(LinearKind::DetSgn),
            IrreducibleLabel::Pi2(_) => None,
        }
    }
}

impl fmt::Display for IrreducibleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrreducibleLabel::Trivial => write!(f, "triv"),
            IrreducibleLabel::Det => write!(f, "det"),
            IrreducibleLabel::Sgn => write!(f, "sgn"),
            IrreducibleLabel::DetSgn => write!(f, "det*sgn"),
            IrreducibleLabel::Pi2(j) => write!(f, "pi2({j})"),
        }
    }
}

/// Number of two-dimensional irreducible classes: (n-1)/2 for odd n and
/// m-1 for n = 2m.
pub fn two_dim_count(n: usize) -> usize {
    if n % 2 == 1 {
        (n - 1) / 2
    } else {
        n / 2 - 1
    }
}

/// The complete list of irreducible labels, in table order.
pub fn irreducibles(n: usize) -> Result<Vec<IrreducibleLabel>> {
    if n < 3 {
        return Err(DihedralError::Parameter(format!(
            "character table needs n >= 3, got {n}"
        )));
    }
    let mut labels = vec![IrreducibleLabel::Trivial, IrreducibleLabel::Det];
    if n % 2 == 0 {
        labels.push(IrreducibleLabel::Sgn);
        labels.push(IrreducibleLabel::DetSgn);
    }
    for j in 1..=two_dim_count(n) {
        labels.push(IrreducibleLabel::Pi2(j));
    }
    Ok(labels)
}

/// Character value of an irreducible at a group element.
pub fn char_value(n: usize, label: &IrreducibleLabel, g: &DihedralElement) -> f64 {
    match label {
        IrreducibleLabel::Pi2(j) => {
            if g.is_reflected() {
                0.0
            } else {
                2.0 * cos_table(n)[(j * g.rot()) % n]
            }
        }
        other => {
            let kind = other.linear_kind().expect("linear label");
            LinearCharacter::new(n, kind).expect("valid n").eval(g) as f64
        }
    }
}

/// Row identifier inside a [`CharacterTable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RowLabel {
    Irr(IrreducibleLabel),
    Rho,
}

impl fmt::Display for RowLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowLabel::Irr(l) => write!(f, "{l}"),
            RowLabel::Rho => write!(f, "rho"),
        }
    }
}

/// Character table: one column per conjugacy class, one row per irreducible,
/// plus the permutation-character row rho appended last.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    n: usize,
    classes: Vec<ConjugacyClass>,
    rows: Vec<(RowLabel, Vec<Complex64>)>,
}

impl CharacterTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_reps(&self) -> Vec<DihedralElement> {
        self.classes.iter().map(|c| c.rep).collect()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.size()).collect()
    }

    pub fn class_labels(&self) -> Vec<String> {
        self.classes.iter().map(|c| c.label()).collect()
    }

    pub fn rows(&self) -> &[(RowLabel, Vec<Complex64>)] {
        &self.rows
    }

    pub fn row(&self, label: &RowLabel) -> Result<&[Complex64]> {
        self.rows
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, v)| v.as_slice())
            .ok_or_else(|| DihedralError::UnknownRow(label.to_string()))
    }

    pub fn irreducible_labels(&self) -> Vec<IrreducibleLabel> {
        self.rows
            .iter()
            .filter_map(|(l, _)| match l {
                RowLabel::Irr(i) => Some(*i),
                RowLabel::Rho => None,
            })
            .collect()
    }

    /// Class-weighted Hermitian inner product
    /// (1/2n) Σ_classes size · a · conj(b).
    pub fn inner_product(&self, a: &RowLabel, b: &RowLabel) -> Result<Complex64> {
        let ra = self.row(a)?;
        let rb = self.row(b)?;
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, class) in self.classes.iter().enumerate() {
            acc += ra[k] * rb[k].conj() * class.size() as f64;
        }
        Ok(acc / (2 * self.n) as f64)
    }
}

/// Builds the character table of the dihedral group of order 2n.
pub fn character_table(n: usize) -> Result<CharacterTable> {
    let data = class_data(n)?;
    let labels = irreducibles(n)?;
    let mut rows: Vec<(RowLabel, Vec<Complex64>)> = Vec::with_capacity(labels.len() + 1);
    for label in &labels {
        let values = data
            .classes
            .iter()
            .map(|c| Complex64::new(char_value(n, label, &c.rep), 0.0))
            .collect();
        rows.push((RowLabel::Irr(*label), values));
    }
    // permutation character: fixed-point count of each class representative
    let rho = data
        .classes
        .iter()
        .map(|c| Complex64::new(to_permutation(&c.rep).fixed_points() as f64, 0.0))
        .collect();
    rows.push((RowLabel::Rho, rho));
    Ok(CharacterTable {
        n,
        classes: data.classes,
        rows,
    })
}

/// Multiplicity of each irreducible in the permutation representation,
/// computed from character inner products and rounded to integers with a
/// 1e-6 guard.
pub fn decompose_rho(n: usize) -> Result<BTreeMap<IrreducibleLabel, usize>> {
    let table = character_table(n)?;
    let mut out = BTreeMap::new();
    for label in table.irreducible_labels() {
        let ip = table.inner_product(&RowLabel::Rho, &RowLabel::Irr(label))?;
        let rounded = ip.re.round();
        if (ip.re - rounded).abs() > 1e-6 || ip.im.abs() > 1e-6 || rounded < 0.0 {
            return Err(DihedralError::Parameter(format!(
                "multiplicity of {label} is not a non-negative integer: {ip}"
            )));
        }
        out.insert(label, rounded as usize);
    }
    Ok(out)
}

/// Σ_{k=0}^{n-1} cos(2jkπ/n): zero unless n divides j, in which case n.
pub fn root_of_unity_sum(n: usize, j: i64) -> Result<f64> {
    if n < 2 {
        return Err(DihedralError::Parameter(format!(
            "root-of-unity sum needs n >= 2, got {n}"
        )));
    }
    use std::f64::consts::PI;
    Ok((0..n)
        .map(|k| (2.0 * PI * (j * k as i64) as f64 / n as f64).cos())
        .sum())
}
