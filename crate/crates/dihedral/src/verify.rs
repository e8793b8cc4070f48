//! Cross-checking suite: runs every structural identity the crate promises
//! for a given n and reports named pass/fail results. The CLI `verify`
//! subcommand renders the report and sets its exit status from it.

use num_bigint::BigInt;
use num_complex::Complex64;

use crate::algebra::{kernel_basis, phi_rank, phi_rho};
use crate::characters::{character_table, decompose_rho, IrreducibleLabel, RowLabel};
use crate::counting::{
    binomial, check_ehrhart_properties, count_closed, count_convolution, count_pie,
    count_sum_formula, oracle_canonical, oracle_count, series,
};
use crate::error::Result;
use crate::group::{all_elements, class_data, DihedralElement, LinearCharacter, LinearKind};
use crate::magic::{big_j, j1, j2, mm_dimension};
use crate::matrix::Mat;
use crate::permrep::{is_anticirculant, is_circulant, perm_matrix, to_permutation};
use crate::spectral::{
    circulant_idempotent, eigenbasis, idempotent_set_with_eps, project_isotypic, projector_rank,
    quaternion_basis, two_dim_range, u_prime,
};

/// One named pass/fail result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

/// Result of running the whole suite for one n.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub n: usize,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn failed_count(&self) -> usize {
        self.checks.len() - self.passed_count()
    }

    pub fn all_passed(&self) -> bool {
        self.failed_count() == 0
    }

    fn push(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check::new(name, passed, detail));
    }
}

/// Options for [`run_all`].
#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Cap on oracle enumeration size; oracle checks shrink r to stay below it.
    pub max_tuples: u64,
    /// Float tolerance for the spectral checks.
    pub eps: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_tuples: crate::counting::DEFAULT_TUPLE_BUDGET,
            eps: crate::magic::DEFAULT_EPS,
        }
    }
}

/// Runs the group, character, kernel/rank, counting, idempotent, eigenbasis,
/// and quaternion suites for the given n.
pub fn run_all(n: usize, opts: VerifyOptions) -> Result<VerifyReport> {
    let mut report = VerifyReport {
        n,
        checks: Vec::new(),
    };
    group_suite(n, &mut report)?;
    character_suite(n, &mut report)?;
    kernel_rank_suite(n, &mut report)?;
    counting_suite(n, opts.max_tuples, &mut report)?;
    j_identity_suite(n, &mut report)?;
    idempotent_suite(n, opts.eps, &mut report)?;
    eigenbasis_suite(n, opts.eps, &mut report)?;
    quaternion_suite(n, opts.eps, &mut report)?;
    Ok(report)
}

fn group_suite(n: usize, report: &mut VerifyReport) -> Result<()> {
    let els = all_elements(n)?;

    let mut assoc_ok = true;
    if n <= 12 {
        'outer: for a in &els {
            for b in &els {
                let ab = a.mul(b)?;
                for c in &els {
                    if ab.mul(c)? != a.mul(&b.mul(c)?)? {
                        assoc_ok = false;
                        break 'outer;
                    }
                }
            }
        }
        report.push(
            "group_associativity",
            assoc_ok,
            format!("exhaustive over {} triples", els.len().pow(3)),
        );
    } else {
        // deterministic sample for large n
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (state >> 33) as usize % els.len()
        };
        for _ in 0..2000 {
            let (a, b, c) = (els[next()], els[next()], els[next()]);
            if a.mul(&b)?.mul(&c)? != a.mul(&b.mul(&c)?)? {
                assoc_ok = false;
                break;
            }
        }
        report.push("group_associativity", assoc_ok, "2000 sampled triples");
    }

    let data = class_data(n)?;
    let sizes_ok = data.class_sizes().iter().sum::<usize>() == 2 * n;
    let count_ok = data.classes.len() == if n % 2 == 1 { (n + 3) / 2 } else { n / 2 + 3 };
    report.push(
        "conjugacy_class_partition",
        sizes_ok && count_ok,
        format!(
            "{} classes with sizes {:?}",
            data.classes.len(),
            data.class_sizes()
        ),
    );

    let mut stable = true;
    'class_loop: for cl in &data.classes {
        for g in &els {
            for x in &cl.members {
                if !cl.members.contains(&g.conjugate(x)?) {
                    stable = false;
                    break 'class_loop;
                }
            }
        }
    }
    report.push(
        "conjugation_stability",
        stable,
        "every class closed under conjugation",
    );

    let mut homo = true;
    'homo_loop: for a in &els {
        for b in &els {
            let lhs = perm_matrix(a).matmul(&perm_matrix(b))?;
            if lhs != perm_matrix(&a.mul(b)?) {
                homo = false;
                break 'homo_loop;
            }
        }
    }
    report.push(
        "permutation_matrix_homomorphism",
        homo,
        "P_a P_b = P_ab over all pairs",
    );

    let mut structure = true;
    for g in &els {
        let m = perm_matrix(g).to_int();
        let ok = if g.is_reflected() {
            is_anticirculant(&m, 0.0)
        } else {
            is_circulant(&m, 0.0)
        };
        if !ok {
            structure = false;
        }
    }
    report.push(
        "circulant_structure",
        structure,
        "rotations circulant, reflections anticirculant",
    );

    let sgn = LinearCharacter::new(n, LinearKind::Sgn)?;
    let det_ok = els
        .iter()
        .all(|g| perm_matrix(g).determinant() == sgn.eval(g));
    report.push(
        "sgn_matches_matrix_determinant",
        det_ok,
        "sgn(g) = det(P_g) for all g",
    );
    Ok(())
}

fn character_suite(n: usize, report: &mut VerifyReport) -> Result<()> {
    let table = character_table(n)?;
    let labels = table.irreducible_labels();

    let mut ortho = true;
    for a in &labels {
        for b in &labels {
            let ip = table.inner_product(&RowLabel::Irr(*a), &RowLabel::Irr(*b))?;
            let want = if a == b { 1.0 } else { 0.0 };
            if (ip.re - want).abs() > 1e-9 || ip.im.abs() > 1e-9 {
                ortho = false;
            }
        }
    }
    report.push(
        "character_row_orthonormality",
        ortho,
        "within 1e-9 over all row pairs",
    );

    let dim_sq: usize = labels.iter().map(|l| l.dimension() * l.dimension()).sum();
    report.push(
        "dimension_squares_sum",
        dim_sq == 2 * n,
        format!(
            "sum of squared dimensions = {dim_sq}, group order = {}",
            2 * n
        ),
    );

    let rho = table.row(&RowLabel::Rho)?.to_vec();
    let fixed_ok = table
        .class_reps()
        .iter()
        .zip(&rho)
        .all(|(rep, v)| v.re == to_permutation(rep).fixed_points() as f64 && v.im == 0.0);
    report.push(
        "rho_row_counts_fixed_points",
        fixed_ok,
        "character of the vertex action",
    );

    let decomposition = decompose_rho(n)?;
    let want_linear = if n % 2 == 1 {
        vec![IrreducibleLabel::Trivial]
    } else if (n / 2) % 2 == 1 {
        vec![IrreducibleLabel::Trivial, IrreducibleLabel::Sgn]
    } else {
        vec![IrreducibleLabel::Trivial, IrreducibleLabel::DetSgn]
    };
    let mut decomp_ok = true;
    for (label, mult) in &decomposition {
        let want = match label {
            IrreducibleLabel::Pi2(_) => 1,
            l if want_linear.contains(l) => 1,
            _ => 0,
        };
        if *mult != want {
            decomp_ok = false;
        }
    }
    let total: usize = decomposition.iter().map(|(l, m)| l.dimension() * m).sum();
    report.push(
        "rho_decomposition",
        decomp_ok && total == n,
        format!("multiplicities {decomposition:?}"),
    );
    Ok(())
}

fn kernel_rank_suite(n: usize, report: &mut VerifyReport) -> Result<()> {
    let rank = phi_rank(n)?;
    let dim = mm_dimension(n)?;
    report.push(
        "intertwiner_rank",
        rank == dim,
        format!("exact rank {rank}, closed-form dimension {dim}"),
    );

    let kernel = kernel_basis(n)?;
    let annihilated = kernel
        .vectors
        .iter()
        .all(|v| phi_rho(v).mat().approx_eq(&Mat::zeros(n), 0.0));
    report.push(
        "kernel_vectors_annihilated",
        annihilated,
        format!(
            "{} kernel idempotents map to the zero matrix",
            kernel.vectors.len()
        ),
    );
    report.push(
        "rank_nullity",
        rank + kernel.expected_dim == 2 * n,
        format!("{rank} + {} = {}", kernel.expected_dim, 2 * n),
    );
    Ok(())
}

fn counting_suite(n: usize, max_tuples: u64, report: &mut VerifyReport) -> Result<()> {
    let formula_rmax = 10u64;
    let mut formulas_ok = true;
    for r in 0..=formula_rmax {
        let closed = count_closed(n, r)?;
        let alt = if n % 2 == 1 {
            count_sum_formula(n, r)? == closed && count_pie(n, r)? == closed
        } else {
            count_convolution(n, r)? == closed
        };
        if !alt {
            formulas_ok = false;
        }
    }
    report.push(
        "counting_formula_concordance",
        formulas_ok,
        format!("closed vs alternative formulas for r = 0..{formula_rmax}"),
    );

    let s = series(n, formula_rmax)?;
    let series_ok = s
        .values
        .iter()
        .enumerate()
        .all(|(r, v)| *v == count_closed(n, r as u64).unwrap());
    report.push(
        "series_expansion_matches_formula",
        series_ok,
        "power-series route agrees with binomial route",
    );

    // largest r whose tuple count fits the budget, capped at 6
    let mut oracle_rmax: Option<u64> = None;
    for r in (0..=6u64).rev() {
        if binomial(r + 2 * n as u64 - 1, 2 * n as u64 - 1) <= BigInt::from(max_tuples) {
            oracle_rmax = Some(r);
            break;
        }
    }
    match oracle_rmax {
        Some(rmax) => {
            let mut oracle_ok = true;
            for r in 0..=rmax {
                let closed = count_closed(n, r)?;
                if oracle_count(n, r, max_tuples)? != closed
                    || oracle_canonical(n, r, max_tuples)? != closed
                {
                    oracle_ok = false;
                }
            }
            report.push(
                "counting_oracles",
                oracle_ok,
                format!("brute-force enumeration agrees for r = 0..{rmax}"),
            );
        }
        None => {
            report.push(
                "counting_oracles",
                true,
                "skipped: even r = 0 exceeds the tuple budget",
            );
        }
    }

    let ehrhart = check_ehrhart_properties(n)?;
    for check in ehrhart.checks {
        report.push(
            &format!("ehrhart_{}", check.name),
            check.passed,
            check.detail,
        );
    }
    Ok(())
}

fn j_identity_suite(n: usize, report: &mut VerifyReport) -> Result<()> {
    let j = big_j(n)?;
    let jj = j.multiply(&j)?;
    report.push(
        "j_squared",
        jj.mat() == &j.mat().scale(&(n as i64)),
        "J^2 = nJ",
    );

    if n % 2 == 0 {
        let m = (n / 2) as i64;
        let a = j1(n)?;
        let b = j2(n)?;
        let sum_ok = a.mat().add(b.mat()) == *j.mat();
        let sq1 = a.multiply(&a)?.mat() == &a.mat().scale(&m);
        let sq2 = b.multiply(&b)?.mat() == &a.mat().scale(&m);
        let cross = a.multiply(&b)?.mat() == &b.mat().scale(&m)
            && b.multiply(&a)?.mat() == &b.mat().scale(&m);
        let c = perm_matrix(&DihedralElement::reflection(n, 0)?).to_int();
        let swap = c.matmul(a.mat()) == *b.mat() && c.matmul(b.mat()) == *a.mat();
        report.push(
            "checkerboard_identities",
            sum_ok && sq1 && sq2 && cross && swap,
            "J = J1+J2, J1^2 = mJ1, J2^2 = mJ1, J1J2 = J2J1 = mJ2, P_C swaps J1 and J2",
        );
    }
    Ok(())
}

fn idempotent_suite(n: usize, eps: f64, report: &mut VerifyReport) -> Result<()> {
    // a tolerance too tight to admit the float matrices is itself a finding
    let set = match idempotent_set_with_eps(n, eps) {
        Ok(set) => set,
        Err(e) => {
            report.push(
                "idempotent_construction",
                false,
                format!("cannot build the idempotent set at eps = {eps}: {e}"),
            );
            return Ok(());
        }
    };
    let want_count = if n % 2 == 1 { (n + 1) / 2 } else { n / 2 + 1 };
    report.push(
        "idempotent_count",
        set.members.len() == want_count,
        format!("{} members, expected {want_count}", set.members.len()),
    );

    let mut idem = true;
    let mut orth = true;
    for (la, a) in &set.members {
        if !a.mat().matmul(a.mat()).approx_eq(a.mat(), eps) {
            idem = false;
        }
        for (lb, b) in &set.members {
            if la != lb && !a.mat().matmul(b.mat()).is_zero_within(eps) {
                orth = false;
            }
        }
    }
    report.push("idempotency", idem, "U^2 = U for every member");
    report.push("idempotent_orthogonality", orth, "U_a U_b = 0 for a != b");
    report.push(
        "idempotent_completeness",
        set.sum().approx_eq(&Mat::identity(n), eps),
        "members sum to the identity",
    );

    let mut shape = true;
    let mut sums = true;
    for (label, m) in &set.members {
        if !m.mat().is_circulant(0.0) || m.mat() != &m.mat().transpose() {
            shape = false;
        }
        let want = if *label == IrreducibleLabel::Trivial {
            1.0
        } else {
            0.0
        };
        let ls = m.line_sum();
        if (ls.re - want).abs() > 1e-12 || ls.im.abs() > 1e-12 {
            sums = false;
        }
    }
    report.push("idempotents_symmetric_circulant", shape, "by construction");
    report.push(
        "idempotent_line_sums",
        sums,
        "1 for the trivial type, 0 otherwise, within 1e-12",
    );

    let mut two_routes = true;
    for (label, m) in &set.members {
        let projected = project_isotypic(n, label)?;
        if !m.mat().approx_eq(&projected, eps) {
            two_routes = false;
        }
    }
    report.push(
        "idempotents_match_isotypic_projection",
        two_routes,
        "closed circulant form vs projection formula",
    );

    let mut refine = true;
    for j in two_dim_range(n) {
        let sum = circulant_idempotent(n, j)?.add(&circulant_idempotent(n, n - j)?);
        let member = set.member(&IrreducibleLabel::Pi2(j)).expect("present");
        if !member.mat().approx_eq(&sum, 1e-12) {
            refine = false;
        }
    }
    report.push(
        "pi2_refines_circulant_idempotents",
        refine,
        "U_pi2(j) = U_chi_j + U_chi_(n-j) within 1e-12",
    );

    let mut central = true;
    for g in all_elements(n)? {
        let p = perm_matrix(&g).to_complex();
        for (_, m) in &set.members {
            if !p.matmul(m.mat()).approx_eq(&m.mat().matmul(&p), eps) {
                central = false;
            }
        }
    }
    report.push(
        "idempotents_central",
        central,
        "every member commutes with every P_g",
    );

    let mut ranks = true;
    for (label, m) in &set.members {
        if projector_rank(m.mat(), eps)? != label.dimension() {
            ranks = false;
        }
    }
    report.push(
        "projector_ranks",
        ranks,
        "singular values cluster at {0, 1} with the right multiplicity",
    );
    Ok(())
}

fn eigenbasis_suite(n: usize, eps: f64, report: &mut VerifyReport) -> Result<()> {
    let rc = DihedralElement::rotation(n, 1)?.mul(&DihedralElement::reflection(n, 0)?)?;
    let rc_mat = perm_matrix(&rc).to_complex();
    let mut ok = true;
    let mut detail = String::from("all two-dimensional indices");
    for j in two_dim_range(n) {
        let b = eigenbasis(n, j)?;
        let norm = |v: &[Complex64]| v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let dot: Complex64 = b.u.iter().zip(&b.v).map(|(a, c)| a * c.conj()).sum();
        let u_img = rc_mat.mat_vec(&b.u);
        let v_img = rc_mat.mat_vec(&b.v);
        let proj = crate::spectral::pi2_idempotent(n, j)?;
        let pu = proj.mat_vec(&b.u);
        let pv = proj.mat_vec(&b.v);
        let fine = (norm(&b.u) - 1.0).abs() <= eps
            && (norm(&b.v) - 1.0).abs() <= eps
            && dot.norm() <= eps
            && u_img.iter().zip(&b.u).all(|(x, y)| (x - y).norm() <= eps)
            && v_img.iter().zip(&b.v).all(|(x, y)| (x + y).norm() <= eps)
            && pu.iter().zip(&b.u).all(|(x, y)| (x - y).norm() <= eps)
            && pv.iter().zip(&b.v).all(|(x, y)| (x - y).norm() <= eps);
        if !fine {
            ok = false;
            detail = format!("fails at j = {j}");
        }
    }
    report.push("eigenbasis_orthonormal_and_equivariant", ok, detail);
    Ok(())
}

fn quaternion_suite(n: usize, eps: f64, report: &mut VerifyReport) -> Result<()> {
    let mut ok = true;
    let mut detail = String::from("all two-dimensional indices");
    for j in two_dim_range(n) {
        let q = quaternion_basis(n, j)?;
        let minus_q1 = q.q1.scale(&Complex64::new(-1.0, 0.0));
        let sq = [&q.q2, &q.q3, &q.q4]
            .iter()
            .all(|m| m.matmul(m).approx_eq(&minus_q1, eps));
        let triple = q.q2.matmul(&q.q3).matmul(&q.q4).approx_eq(&minus_q1, eps);
        let unit = [&q.q2, &q.q3, &q.q4]
            .iter()
            .all(|m| q.q1.matmul(m).approx_eq(m, eps) && m.matmul(&q.q1).approx_eq(m, eps));
        let upr = u_prime(n, j)?;
        let upr_sq = upr.matmul(&upr).add(&q.q1).is_zero_within(eps);
        if !(sq && triple && unit && upr_sq) {
            ok = false;
            detail = format!("fails at j = {j}");
        }
    }
    report.push("quaternion_relations", ok, detail);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_for_small_n() {
        for n in [3usize, 4, 5, 6] {
            let report = run_all(n, VerifyOptions::default()).unwrap();
            for check in &report.checks {
                assert!(
                    check.passed,
                    "n={n}: {} failed: {}",
                    check.name, check.detail
                );
            }
            assert!(report.all_passed());
            assert_eq!(report.failed_count(), 0);
            assert!(!report.checks.is_empty());
        }
    }

    #[test]
    fn even_n_reports_checkerboard_identities() {
        let report = run_all(4, VerifyOptions::default()).unwrap();
        assert!(report
            .checks
            .iter()
            .any(|c| c.name == "checkerboard_identities" && c.passed));
        let odd = run_all(5, VerifyOptions::default()).unwrap();
        assert!(!odd
            .checks
            .iter()
            .any(|c| c.name == "checkerboard_identities"));
    }

    #[test]
    fn tiny_budget_skips_oracles_gracefully() {
        let report = run_all(
            5,
            VerifyOptions {
                max_tuples: 0,
                eps: 1e-9,
            },
        )
        .unwrap();
        let oracle = report
            .checks
            .iter()
            .find(|c| c.name == "counting_oracles")
            .unwrap();
        assert!(oracle.passed);
        assert!(oracle.detail.contains("skipped"));
    }
}
