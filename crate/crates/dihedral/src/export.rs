//! Text, CSV, and JSON renderings of tables, count series, and matrices.
//!
//! Conventions: exact rationals render as `p/q` strings (plain integers when
//! the denominator is 1), complex floats as `a+bi` in text and CSV and as
//! `[re, im]` pairs in JSON, and big integers as decimal strings in JSON so
//! nothing is truncated. Field orders and float formatting are fixed, so
//! identical inputs produce byte-identical output.

use num_complex::Complex64;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::characters::CharacterTable;
use crate::counting::CountSeries;
use crate::matrix::Mat;
use crate::verify::VerifyReport;

/// Digits after the decimal point for float display.
#[derive(Debug, Clone, Copy)]
pub struct RenderOpts {
    pub precision: usize,
}

impl Default for RenderOpts {
    fn default() -> Self {
        RenderOpts { precision: 6 }
    }
}

/// Rounds to the display precision; collapses negative zero.
fn clean(x: f64, precision: usize) -> f64 {
    let scale = 10f64.powi(precision as i32);
    let rounded = (x * scale).round() / scale;
    if rounded == 0.0 {
        0.0
    } else {
        rounded
    }
}

pub fn fmt_f64(x: f64, opts: RenderOpts) -> String {
    format!("{:.*}", opts.precision, clean(x, opts.precision))
}

pub fn fmt_complex(z: Complex64, opts: RenderOpts) -> String {
    format!(
        "{:.p$}{:+.p$}i",
        clean(z.re, opts.precision),
        clean(z.im, opts.precision),
        p = opts.precision
    )
}

pub fn fmt_rational(q: &BigRational) -> String {
    q.to_string()
}

// ---------------------------------------------------------------- character table

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassJson {
    pub label: String,
    pub rep: String,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRowJson {
    pub label: String,
    pub values: Vec<[f64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableJson {
    pub n: usize,
    pub classes: Vec<ClassJson>,
    pub rows: Vec<TableRowJson>,
}

pub fn table_json_data(t: &CharacterTable) -> TableJson {
    TableJson {
        n: t.n(),
        classes: t
            .classes()
            .iter()
            .map(|c| ClassJson {
                label: c.label(),
                rep: c.rep.to_string(),
                size: c.size(),
            })
            .collect(),
        rows: t
            .rows()
            .iter()
            .map(|(label, values)| TableRowJson {
                label: label.to_string(),
                values: values.iter().map(|z| [z.re, z.im]).collect(),
            })
            .collect(),
    }
}

pub fn table_json(t: &CharacterTable) -> String {
    serde_json::to_string_pretty(&table_json_data(t)).expect("serializable")
}

pub fn table_text(t: &CharacterTable, opts: RenderOpts) -> String {
    let labels = t.class_labels();
    let mut cols: Vec<Vec<String>> = Vec::new();
    let mut head = vec!["class".to_string(), "size".to_string()];
    for (label, _) in t.rows() {
        head.push(label.to_string());
    }
    cols.push(head);
    for (k, class_label) in labels.iter().enumerate() {
        let mut col = vec![class_label.clone(), t.class_sizes()[k].to_string()];
        for (_, values) in t.rows() {
            col.push(fmt_f64(values[k].re, opts));
        }
        cols.push(col);
    }
    let widths: Vec<usize> = cols
        .iter()
        .map(|col| col.iter().map(|s| s.len()).max().unwrap_or(0))
        .collect();
    let mut out = format!(
        "Character table of the dihedral group of order {} (n = {})\n",
        2 * t.n(),
        t.n()
    );
    let rows = cols[0].len();
    for r in 0..rows {
        let line: Vec<String> = cols
            .iter()
            .zip(&widths)
            .map(|(col, w)| format!("{:>w$}", col[r], w = w))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn table_csv(t: &CharacterTable, opts: RenderOpts) -> String {
    let mut out = String::from("label");
    for class_label in t.class_labels() {
        out.push(',');
        out.push_str(&class_label);
    }
    out.push('\n');
    out.push_str("size");
    for s in t.class_sizes() {
        out.push(',');
        out.push_str(&s.to_string());
    }
    out.push('\n');
    for (label, values) in t.rows() {
        out.push_str(&label.to_string());
        for z in values {
            out.push(',');
            out.push_str(&fmt_f64(z.re, opts));
        }
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------- count series

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub n: usize,
    pub r_max: u64,
    pub values: Vec<String>,
    pub hstar: Vec<String>,
}

pub fn series_json_data(s: &CountSeries) -> SeriesJson {
    SeriesJson {
        n: s.n,
        r_max: (s.values.len() as u64).saturating_sub(1),
        values: s.values.iter().map(|v| v.to_string()).collect(),
        hstar: s.hstar.iter().map(|v| v.to_string()).collect(),
    }
}

pub fn series_json(s: &CountSeries) -> String {
    serde_json::to_string_pretty(&series_json_data(s)).expect("serializable")
}

pub fn series_text(s: &CountSeries, heading: &str) -> String {
    let mut out = format!("{heading}\n");
    let width = s
        .values
        .iter()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    out.push_str(&format!("{:>4}  {:>width$}\n", "r", "H(r)", width = width));
    for (r, v) in s.values.iter().enumerate() {
        out.push_str(&format!("{r:>4}  {v:>width$}\n", width = width));
    }
    let hstar: Vec<String> = s.hstar.iter().map(|v| v.to_string()).collect();
    out.push_str(&format!("h* = [{}]\n", hstar.join(", ")));
    out
}

pub fn series_csv(s: &CountSeries) -> String {
    let mut out = String::from("r,H\n");
    for (r, v) in s.values.iter().enumerate() {
        out.push_str(&format!("{r},{v}\n"));
    }
    out
}

// ---------------------------------------------------------------- matrices

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RationalMatrixJson {
    pub n: usize,
    pub entries: Vec<Vec<String>>,
}

pub fn rational_matrix_json_data(m: &Mat<BigRational>) -> RationalMatrixJson {
    RationalMatrixJson {
        n: m.size(),
        entries: (0..m.size())
            .map(|i| (0..m.size()).map(|j| fmt_rational(m.get(i, j))).collect())
            .collect(),
    }
}

pub fn rational_matrix_json(m: &Mat<BigRational>) -> String {
    serde_json::to_string_pretty(&rational_matrix_json_data(m)).expect("serializable")
}

pub fn rational_matrix_csv(m: &Mat<BigRational>) -> String {
    let mut out = String::new();
    for i in 0..m.size() {
        let row: Vec<String> = (0..m.size()).map(|j| fmt_rational(m.get(i, j))).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn rational_matrix_text(m: &Mat<BigRational>) -> String {
    let cells: Vec<Vec<String>> = (0..m.size())
        .map(|i| (0..m.size()).map(|j| fmt_rational(m.get(i, j))).collect())
        .collect();
    let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplexMatrixJson {
    pub label: String,
    pub n: usize,
    pub entries: Vec<Vec<[f64; 2]>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixSetJson {
    pub n: usize,
    pub members: Vec<ComplexMatrixJson>,
}

pub fn complex_matrix_json_data(label: &str, m: &Mat<Complex64>) -> ComplexMatrixJson {
    ComplexMatrixJson {
        label: label.to_string(),
        n: m.size(),
        entries: (0..m.size())
            .map(|i| {
                (0..m.size())
                    .map(|j| {
                        let z = m.get(i, j);
                        [z.re, z.im]
                    })
                    .collect()
            })
            .collect(),
    }
}

pub fn matrix_set_json(n: usize, members: &[(String, Mat<Complex64>)]) -> String {
    let data = MatrixSetJson {
        n,
        members: members
            .iter()
            .map(|(label, m)| complex_matrix_json_data(label, m))
            .collect(),
    };
    serde_json::to_string_pretty(&data).expect("serializable")
}

pub fn complex_matrix_text(m: &Mat<Complex64>, opts: RenderOpts) -> String {
    let cells: Vec<Vec<String>> = (0..m.size())
        .map(|i| {
            (0..m.size())
                .map(|j| fmt_complex(*m.get(i, j), opts))
                .collect()
        })
        .collect();
    let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    out
}

pub fn matrix_set_text(members: &[(String, Mat<Complex64>)], opts: RenderOpts) -> String {
    let mut out = String::new();
    for (label, m) in members {
        out.push_str(label);
        out.push_str(":\n");
        out.push_str(&complex_matrix_text(m, opts));
        out.push('\n');
    }
    out
}

pub fn matrix_set_csv(members: &[(String, Mat<Complex64>)], opts: RenderOpts) -> String {
    let mut out = String::new();
    for (label, m) in members {
        out.push_str(&format!("# {label}\n"));
        for i in 0..m.size() {
            let row: Vec<String> = (0..m.size())
                .map(|j| fmt_complex(*m.get(i, j), opts))
                .collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
    }
    out
}

// ---------------------------------------------------------------- verify report

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckJson {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyJson {
    pub n: usize,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<CheckJson>,
}

pub fn verify_json_data(r: &VerifyReport) -> VerifyJson {
    VerifyJson {
        n: r.n,
        total: r.checks.len(),
        passed: r.passed_count(),
        failed: r.failed_count(),
        checks: r
            .checks
            .iter()
            .map(|c| CheckJson {
                name: c.name.clone(),
                passed: c.passed,
                detail: c.detail.clone(),
            })
            .collect(),
    }
}

pub fn verify_json(r: &VerifyReport) -> String {
    serde_json::to_string_pretty(&verify_json_data(r)).expect("serializable")
}

pub fn verify_text(r: &VerifyReport) -> String {
    let mut out = format!(
        "verify n = {}: {} checks, {} passed, {} failed\n",
        r.n,
        r.checks.len(),
        r.passed_count(),
        r.failed_count()
    );
    let width = r.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    for c in &r.checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "  {status}  {:<width$}  {}\n",
            c.name,
            c.detail,
            width = width
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::character_table;
    use crate::counting::series;

    #[test]
    fn complex_formatting() {
        let opts = RenderOpts { precision: 3 };
        assert_eq!(
            fmt_complex(Complex64::new(0.5, -0.25), opts),
            "0.500-0.250i"
        );
        assert_eq!(
            fmt_complex(Complex64::new(-1e-12, 1e-12), opts),
            "0.000+0.000i"
        );
    }

    #[test]
    fn rational_formatting() {
        assert_eq!(fmt_rational(&BigRational::new(3.into(), 6.into())), "1/2");
        assert_eq!(fmt_rational(&BigRational::new(4.into(), 2.into())), "2");
        assert_eq!(
            fmt_rational(&BigRational::new((-1).into(), 3.into())),
            "-1/3"
        );
    }

    #[test]
    fn table_json_round_trips() {
        let t = character_table(5).unwrap();
        let data = table_json_data(&t);
        let emitted = table_json(&t);
        let parsed: TableJson = serde_json::from_str(&emitted).unwrap();
        assert_eq!(parsed, data);
    }

    #[test]
    fn series_json_round_trips() {
        let s = series(4, 6).unwrap();
        let data = series_json_data(&s);
        let parsed: SeriesJson = serde_json::from_str(&series_json(&s)).unwrap();
        assert_eq!(parsed, data);
        assert_eq!(parsed.r_max, 6);
    }

    #[test]
    fn rational_matrix_round_trips() {
        use crate::algebra::{character_idempotent, phi_rho};
        use crate::group::LinearKind;
        let m = phi_rho(&character_idempotent(4, LinearKind::Trivial).unwrap());
        let data = rational_matrix_json_data(m.mat());
        let parsed: RationalMatrixJson =
            serde_json::from_str(&rational_matrix_json(m.mat())).unwrap();
        assert_eq!(parsed, data);
        assert!(parsed.entries[0][0] == "1/4");
    }

    #[test]
    fn complex_matrix_set_round_trips() {
        use crate::spectral::{quaternion_basis, u_prime};
        let q = quaternion_basis(5, 2).unwrap();
        let members = vec![
            ("q1".to_string(), q.q1),
            ("q2".to_string(), q.q2),
            ("uprime".to_string(), u_prime(5, 1).unwrap()),
        ];
        let emitted = matrix_set_json(5, &members);
        let parsed: MatrixSetJson = serde_json::from_str(&emitted).unwrap();
        let data = MatrixSetJson {
            n: 5,
            members: members
                .iter()
                .map(|(l, m)| complex_matrix_json_data(l, m))
                .collect(),
        };
        assert_eq!(parsed, data);
    }

    #[test]
    fn deterministic_output() {
        let t = character_table(6).unwrap();
        let opts = RenderOpts::default();
        assert_eq!(table_text(&t, opts), table_text(&t, opts));
        assert_eq!(table_json(&t), table_json(&t));
    }
}
