//! Acceptance suite: one test per advertised guarantee, each printing a
//! single PASS line (run with `cargo test --test acceptance -- --nocapture`
//! to see them). Tolerances are pinned in the constants below.

use std::time::Instant;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

use dihedral::algebra::{kernel_basis, phi_rank, phi_rho};
use dihedral::characters::{character_table, decompose_rho, IrreducibleLabel, RowLabel};
use dihedral::counting::{
    check_ehrhart_properties, count_closed, count_convolution, count_pie, count_sum_formula,
    oracle_canonical, oracle_count, series, DEFAULT_TUPLE_BUDGET,
};
use dihedral::group::DihedralElement;
use dihedral::magic::{big_j, j1, j2, mm_dimension};
use dihedral::matrix::Mat;
use dihedral::permrep::perm_matrix;
use dihedral::spectral::{
    eigenbasis, idempotent_set, pi2_idempotent, quaternion_basis, two_dim_range,
};

const EPS: f64 = 1e-9;
const TIGHT: f64 = 1e-12;

fn pass(id: u32, name: &str, detail: &str) {
    println!("acceptance {id:02} {name}: PASS ({detail})");
}

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

#[test]
fn acceptance_01_counting_equivalence() {
    let start = Instant::now();
    let mut checked = 0usize;
    for (ns, rmax) in [(vec![3usize, 5, 7], 8u64), (vec![4, 6], 6u64)] {
        for n in ns {
            for r in 0..=rmax {
                let closed = count_closed(n, r).unwrap();
                let by_image = oracle_count(n, r, DEFAULT_TUPLE_BUDGET).unwrap();
                let by_canonical = oracle_canonical(n, r, DEFAULT_TUPLE_BUDGET).unwrap();
                assert_eq!(closed, by_image, "image oracle mismatch at n={n} r={r}");
                assert_eq!(
                    closed, by_canonical,
                    "canonical oracle mismatch at n={n} r={r}"
                );
                checked += 1;
            }
        }
    }
    // frozen spot values, originally produced by the oracle itself
    assert_eq!(count_closed(3, 1).unwrap(), big(6));
    assert_eq!(count_closed(3, 2).unwrap(), big(21));
    assert_eq!(count_closed(3, 3).unwrap(), big(55));
    assert_eq!(count_closed(4, 1).unwrap(), big(8));
    assert_eq!(count_closed(4, 2).unwrap(), big(34));
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 60,
        "oracle comparison took {elapsed:?}, budget is 60 s"
    );
    pass(
        1,
        "counting-equivalence",
        &format!("{checked} (n, r) pairs in {elapsed:.2?}"),
    );
}

#[test]
fn acceptance_02_formula_concordance() {
    for n in [3usize, 5, 7, 9] {
        for r in 0..=20 {
            let closed = count_closed(n, r).unwrap();
            assert_eq!(count_sum_formula(n, r).unwrap(), closed, "sum n={n} r={r}");
            assert_eq!(count_pie(n, r).unwrap(), closed, "pie n={n} r={r}");
        }
    }
    for n in [4usize, 6, 8] {
        for r in 0..=20 {
            assert_eq!(
                count_convolution(n, r).unwrap(),
                count_closed(n, r).unwrap(),
                "conv n={n} r={r}"
            );
        }
    }
    pass(2, "formula-concordance", "r = 0..20, exact equality");
}

#[test]
fn acceptance_03_hstar_vectors() {
    assert_eq!(series(3, 0).unwrap().hstar, vec![big(1), big(1), big(1)]);
    assert_eq!(series(4, 0).unwrap().hstar, vec![big(1), big(2), big(1)]);
    for n in [5usize, 7, 9] {
        assert_eq!(series(n, 0).unwrap().hstar, vec![big(1); n], "odd n={n}");
    }
    for n in [6usize, 8] {
        let m = n / 2;
        let mut want: Vec<BigInt> = (1..=m as i64).map(big).collect();
        want.extend((1..m as i64).rev().map(big));
        assert_eq!(series(n, 0).unwrap().hstar, want, "even n={n}");
    }
    pass(3, "hstar-vectors", "odd all-ones, even symmetric unimodal");
}

#[test]
fn acceptance_04_ehrhart_properties() {
    for n in 3..=8 {
        let report = check_ehrhart_properties(n).unwrap();
        for check in &report.checks {
            assert!(
                check.passed,
                "n={n}: {} failed: {}",
                check.name, check.detail
            );
        }
    }
    pass(
        4,
        "ehrhart-properties",
        "degree, reciprocity, zeros, h* shape for n = 3..8",
    );
}

#[test]
fn acceptance_05_kernel_and_rank() {
    for n in 3..=10 {
        let rank = phi_rank(n).unwrap();
        let want = if n % 2 == 1 { 2 * n - 1 } else { 2 * n - 2 };
        assert_eq!(rank, want, "rank at n={n}");
        assert_eq!(rank, mm_dimension(n).unwrap());
        let kernel = kernel_basis(n).unwrap();
        assert_eq!(kernel.expected_dim, 2 * n - rank);
        for v in &kernel.vectors {
            let image = phi_rho(v);
            assert!(
                image.mat().approx_eq(&Mat::<BigRational>::zeros(n), 0.0),
                "kernel vector not exactly annihilated at n={n}"
            );
            assert!(image.line_sum().is_zero());
        }
    }
    pass(
        5,
        "kernel-and-rank",
        "exact ranks and kernels for n = 3..10",
    );
}

#[test]
fn acceptance_06_character_tables() {
    for n in 3..=12 {
        let t = character_table(n).unwrap();
        let labels = t.irreducible_labels();
        for a in &labels {
            for b in &labels {
                let ip = t
                    .inner_product(&RowLabel::Irr(*a), &RowLabel::Irr(*b))
                    .unwrap();
                let want = if a == b { 1.0 } else { 0.0 };
                assert!(
                    (ip.re - want).abs() < EPS && ip.im.abs() < EPS,
                    "orthonormality n={n} <{a},{b}> = {ip}"
                );
            }
        }
        let dim_sq: usize = labels.iter().map(|l| l.dimension() * l.dimension()).sum();
        assert_eq!(dim_sq, 2 * n, "dimension accounting at n={n}");

        let decomposition = decompose_rho(n).unwrap();
        for (label, mult) in &decomposition {
            let want = match label {
                IrreducibleLabel::Trivial => 1,
                IrreducibleLabel::Pi2(_) => 1,
                IrreducibleLabel::Det => 0,
                IrreducibleLabel::Sgn => usize::from(n % 2 == 0 && (n / 2) % 2 == 1),
                IrreducibleLabel::DetSgn => usize::from(n % 2 == 0 && (n / 2) % 2 == 0),
            };
            assert_eq!(*mult, want, "multiplicity of {label} at n={n}");
        }
    }
    pass(
        6,
        "character-tables",
        "orthonormal rows and integral decomposition for n = 3..12",
    );
}

#[test]
fn acceptance_07_idempotent_suite() {
    for n in 3..=12 {
        let set = idempotent_set(n).unwrap();
        let want_count = if n % 2 == 1 { (n + 1) / 2 } else { n / 2 + 1 };
        assert_eq!(set.members.len(), want_count, "member count at n={n}");

        for (la, a) in &set.members {
            let sq = a.mat().matmul(a.mat());
            assert!(
                sq.approx_eq(a.mat(), EPS),
                "idempotency n={n} {la}: {}",
                sq.max_abs_diff(a.mat())
            );
            for (lb, b) in &set.members {
                if la != lb {
                    assert!(
                        a.mat().matmul(b.mat()).is_zero_within(EPS),
                        "orthogonality n={n} {la}·{lb}"
                    );
                }
            }
            assert!(a.mat().is_circulant(0.0), "circulant n={n} {la}");
            assert_eq!(a.mat(), &a.mat().transpose(), "symmetric n={n} {la}");
            let want = if *la == IrreducibleLabel::Trivial {
                1.0
            } else {
                0.0
            };
            let ls = a.line_sum();
            assert!(
                (ls.re - want).abs() < TIGHT && ls.im.abs() < TIGHT,
                "line sum n={n} {la} = {ls}"
            );
        }
        assert!(
            set.sum().approx_eq(&Mat::identity(n), EPS),
            "completeness at n={n}"
        );
    }
    pass(
        7,
        "idempotent-suite",
        "complete orthogonal idempotents for n = 3..12",
    );
}

#[test]
fn acceptance_08_quaternion_relations() {
    for (n, j) in [(3usize, 1usize), (4, 1), (5, 1), (5, 2)] {
        let q = quaternion_basis(n, j).unwrap();
        let minus_q1 = q.q1.scale(&Complex64::new(-1.0, 0.0));
        for (name, m) in [("q2", &q.q2), ("q3", &q.q3), ("q4", &q.q4)] {
            assert!(
                m.matmul(m).approx_eq(&minus_q1, EPS),
                "{name}^2 = -q1 at n={n} j={j}"
            );
        }
        assert!(
            q.q2.matmul(&q.q3).matmul(&q.q4).approx_eq(&minus_q1, EPS),
            "q2 q3 q4 = -q1 at n={n} j={j}"
        );
    }

    // frozen display matrices for n = 3 and n = 4, j = 1
    let t = 1.0 / 3.0;
    let s = 3f64.sqrt() / 3.0;
    let q3_expect = quaternion_expect(
        &[
            &[(2.0 * t, 0.0), (-t, 0.0), (-t, 0.0)],
            &[(-t, 0.0), (2.0 * t, 0.0), (-t, 0.0)],
            &[(-t, 0.0), (-t, 0.0), (2.0 * t, 0.0)],
        ],
        &[
            &[(0.0, -t), (0.0, -t), (0.0, 2.0 * t)],
            &[(0.0, -t), (0.0, 2.0 * t), (0.0, -t)],
            &[(0.0, 2.0 * t), (0.0, -t), (0.0, -t)],
        ],
        &[
            &[(0.0, 0.0), (s, 0.0), (-s, 0.0)],
            &[(-s, 0.0), (0.0, 0.0), (s, 0.0)],
            &[(s, 0.0), (-s, 0.0), (0.0, 0.0)],
        ],
        &[
            &[(0.0, s), (0.0, -s), (0.0, 0.0)],
            &[(0.0, -s), (0.0, 0.0), (0.0, s)],
            &[(0.0, 0.0), (0.0, s), (0.0, -s)],
        ],
    );
    let q = quaternion_basis(3, 1).unwrap();
    for ((name, got), want) in [("q1", &q.q1), ("q2", &q.q2), ("q3", &q.q3), ("q4", &q.q4)]
        .into_iter()
        .zip(&q3_expect)
    {
        assert!(
            got.approx_eq(want, TIGHT),
            "n=3 {name} differs from the display by {}",
            got.max_abs_diff(want)
        );
    }

    let h = 0.5;
    let q4_expect = quaternion_expect(
        &[
            &[(h, 0.0), (0.0, 0.0), (-h, 0.0), (0.0, 0.0)],
            &[(0.0, 0.0), (h, 0.0), (0.0, 0.0), (-h, 0.0)],
            &[(-h, 0.0), (0.0, 0.0), (h, 0.0), (0.0, 0.0)],
            &[(0.0, 0.0), (-h, 0.0), (0.0, 0.0), (h, 0.0)],
        ],
        &[
            &[(0.0, 0.0), (0.0, -h), (0.0, 0.0), (0.0, h)],
            &[(0.0, -h), (0.0, 0.0), (0.0, h), (0.0, 0.0)],
            &[(0.0, 0.0), (0.0, h), (0.0, 0.0), (0.0, -h)],
            &[(0.0, h), (0.0, 0.0), (0.0, -h), (0.0, 0.0)],
        ],
        &[
            &[(0.0, 0.0), (h, 0.0), (0.0, 0.0), (-h, 0.0)],
            &[(-h, 0.0), (0.0, 0.0), (h, 0.0), (0.0, 0.0)],
            &[(0.0, 0.0), (-h, 0.0), (0.0, 0.0), (h, 0.0)],
            &[(h, 0.0), (0.0, 0.0), (-h, 0.0), (0.0, 0.0)],
        ],
        &[
            &[(0.0, h), (0.0, 0.0), (0.0, -h), (0.0, 0.0)],
            &[(0.0, 0.0), (0.0, -h), (0.0, 0.0), (0.0, h)],
            &[(0.0, -h), (0.0, 0.0), (0.0, h), (0.0, 0.0)],
            &[(0.0, 0.0), (0.0, h), (0.0, 0.0), (0.0, -h)],
        ],
    );
    let q = quaternion_basis(4, 1).unwrap();
    for ((name, got), want) in [("q1", &q.q1), ("q2", &q.q2), ("q3", &q.q3), ("q4", &q.q4)]
        .into_iter()
        .zip(&q4_expect)
    {
        assert!(
            got.approx_eq(want, TIGHT),
            "n=4 {name} differs from the display by {}",
            got.max_abs_diff(want)
        );
    }
    pass(
        8,
        "quaternion-relations",
        "defining relations and frozen n = 3, 4 matrices",
    );
}

fn quaternion_expect(
    q1: &[&[(f64, f64)]],
    q2: &[&[(f64, f64)]],
    q3: &[&[(f64, f64)]],
    q4: &[&[(f64, f64)]],
) -> Vec<Mat<Complex64>> {
    [q1, q2, q3, q4]
        .into_iter()
        .map(|rows| {
            Mat::from_rows(
                rows.iter()
                    .map(|r| r.iter().map(|&(re, im)| Complex64::new(re, im)).collect())
                    .collect(),
            )
        })
        .collect()
}

#[test]
fn acceptance_09_eigenbasis() {
    for n in 3..=10 {
        let rc = DihedralElement::rotation(n, 1)
            .unwrap()
            .mul(&DihedralElement::reflection(n, 0).unwrap())
            .unwrap();
        let rc_mat = perm_matrix(&rc).to_complex();
        for j in two_dim_range(n) {
            let b = eigenbasis(n, j).unwrap();
            let norm = |v: &[Complex64]| v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            assert!((norm(&b.u) - 1.0).abs() < EPS, "|u| at n={n} j={j}");
            assert!((norm(&b.v) - 1.0).abs() < EPS, "|v| at n={n} j={j}");
            let dot: Complex64 = b.u.iter().zip(&b.v).map(|(a, c)| a * c.conj()).sum();
            assert!(dot.norm() < EPS, "<u,v> at n={n} j={j}");

            for (got, want) in rc_mat.mat_vec(&b.u).iter().zip(&b.u) {
                assert!((got - want).norm() < EPS, "RC u = u at n={n} j={j}");
            }
            for (got, want) in rc_mat.mat_vec(&b.v).iter().zip(&b.v) {
                assert!((got + want).norm() < EPS, "RC v = -v at n={n} j={j}");
            }

            let u_mat = pi2_idempotent(n, j).unwrap();
            for (got, want) in u_mat.mat_vec(&b.u).iter().zip(&b.u) {
                assert!((got - want).norm() < EPS, "U u = u at n={n} j={j}");
            }
            for (got, want) in u_mat.mat_vec(&b.v).iter().zip(&b.v) {
                assert!((got - want).norm() < EPS, "U v = v at n={n} j={j}");
            }
        }
    }
    pass(
        9,
        "eigenbasis",
        "orthonormal equivariant bases for n = 3..10",
    );
}

#[test]
fn acceptance_10_j_algebra_identities() {
    for n in 3..=10 {
        let j = big_j(n).unwrap();
        assert_eq!(
            j.multiply(&j).unwrap().mat(),
            &j.mat().scale(&(n as i64)),
            "J^2 = nJ at n={n}"
        );
    }
    for n in [4usize, 6, 8, 10] {
        let m = (n / 2) as i64;
        let j = big_j(n).unwrap();
        let a = j1(n).unwrap();
        let b = j2(n).unwrap();
        assert_eq!(a.mat().add(b.mat()), *j.mat(), "J1 + J2 = J at n={n}");
        assert_eq!(
            a.multiply(&a).unwrap().mat(),
            &a.mat().scale(&m),
            "J1^2 = mJ1 at n={n}"
        );
        assert_eq!(
            b.multiply(&b).unwrap().mat(),
            &a.mat().scale(&m),
            "J2^2 = mJ1 at n={n}"
        );
        assert_eq!(
            a.multiply(&b).unwrap().mat(),
            &b.mat().scale(&m),
            "J1 J2 = mJ2 at n={n}"
        );
        assert_eq!(
            b.multiply(&a).unwrap().mat(),
            &b.mat().scale(&m),
            "J2 J1 = mJ2 at n={n}"
        );
        let c = perm_matrix(&DihedralElement::reflection(n, 0).unwrap()).to_int();
        assert_eq!(c.matmul(a.mat()), *b.mat(), "P_C J1 = J2 at n={n}");
        assert_eq!(c.matmul(b.mat()), *a.mat(), "P_C J2 = J1 at n={n}");
    }
    pass(
        10,
        "j-algebra-identities",
        "exact integer checkerboard identities for n = 4, 6, 8, 10",
    );
}
