//! Enumeration of the semi-magic squares spanned by the dihedral permutation
//! matrices with a fixed line sum: the closed binomial formulas, the
//! generating-function series with its reduced numerator, the alternative
//! sum / inclusion-exclusion / convolution formulas, polynomial reciprocity
//! checks, and two independent brute-force oracles.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{DihedralError, Result};
use crate::group::all_elements;
use crate::permrep::to_permutation;
use crate::verify::Check;

/// Default cap on the number of tuples an oracle enumeration may visit.
pub const DEFAULT_TUPLE_BUDGET: u64 = 10_000_000;

/// C(a, b) with the convention that it vanishes for a < b.
pub fn binomial(a: u64, b: u64) -> BigInt {
    if b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut res = BigInt::one();
    for i in 0..b {
        res = res * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    res
}

fn check_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(DihedralError::Parameter(format!(
            "counting needs n >= 3, got {n}"
        )));
    }
    Ok(())
}

fn require_odd(n: usize) -> Result<()> {
    check_n(n)?;
    if n % 2 == 0 {
        return Err(DihedralError::Parameter(format!(
            "this formula applies to odd n only, got {n}"
        )));
    }
    Ok(())
}

fn require_even(n: usize) -> Result<()> {
    check_n(n)?;
    if n % 2 == 1 {
        return Err(DihedralError::Parameter(format!(
            "this formula applies to even n only, got {n}"
        )));
    }
    Ok(())
}

/// Closed binomial formula for the number of semi-magic squares with line
/// sum r: C(r+2n-1, 2n-1) - C(r+n-1, 2n-1) for odd n, and with n = 2m
/// C(r+4m-1, 2n-1) - 2 C(r+3m-1, 2n-1) + C(r+2m-1, 2n-1).
pub fn count_closed(n: usize, r: u64) -> Result<BigInt> {
    check_n(n)?;
    let nn = n as u64;
    let d = 2 * nn - 1;
    if n % 2 == 1 {
        Ok(binomial(r + 2 * nn - 1, d) - binomial(r + nn - 1, d))
    } else {
        let m = nn / 2;
        Ok(
            binomial(r + 4 * m - 1, d) - 2 * binomial(r + 3 * m - 1, d)
                + binomial(r + 2 * m - 1, d),
        )
    }
}

/// Exact integer counts H(0..r_max) together with the reduced numerator
/// coefficients of the generating function.
#[derive(Debug, Clone, PartialEq)]
pub struct CountSeries {
    pub n: usize,
    pub values: Vec<BigInt>,
    pub hstar: Vec<BigInt>,
}

/// Divides a polynomial by (1 - x), returning the quotient; the remainder
/// is the value at x = 1 and must vanish.
fn div_one_minus_x(p: &[BigInt]) -> (Vec<BigInt>, BigInt) {
    let mut quotient = Vec::with_capacity(p.len().saturating_sub(1));
    let mut acc = BigInt::zero();
    for (i, c) in p.iter().enumerate() {
        acc += c;
        if i + 1 < p.len() {
            quotient.push(acc.clone());
        }
    }
    (quotient, acc)
}

/// Numerator polynomial of the generating function before reduction:
/// 1 - x^n for odd n, (1 - x^m)^2 for n = 2m.
fn raw_numerator(n: usize) -> Vec<BigInt> {
    if n % 2 == 1 {
        let mut p = vec![BigInt::zero(); n + 1];
        p[0] = BigInt::one();
        p[n] = -BigInt::one();
        p
    } else {
        let m = n / 2;
        let mut p = vec![BigInt::zero(); 2 * m + 1];
        p[0] = BigInt::one();
        p[m] = BigInt::from(-2);
        p[2 * m] = BigInt::one();
        p
    }
}

/// Expands the generating function numerator / (1-x)^{2n} as a formal power
/// series up to x^{r_max}, entirely in integer arithmetic, and reduces the
/// numerator to its h* form by exact division.
pub fn series(n: usize, r_max: u64) -> Result<CountSeries> {
    check_n(n)?;
    let numer = raw_numerator(n);

    // power-series expansion: each division by (1 - x) is a running prefix sum
    let len = (r_max + 1) as usize;
    let mut values = vec![BigInt::zero(); len];
    for (i, c) in numer.iter().enumerate().take(len) {
        values[i] = c.clone();
    }
    for _ in 0..2 * n {
        let mut acc = BigInt::zero();
        for v in values.iter_mut() {
            acc += &*v;
            *v = acc.clone();
        }
    }

    // reduced numerator: cancel (1 - x) once for odd n, twice for even n
    let reductions = if n % 2 == 1 { 1 } else { 2 };
    let mut hstar = numer;
    for _ in 0..reductions {
        let (q, rem) = div_one_minus_x(&hstar);
        debug_assert!(rem.is_zero(), "numerator must be divisible by 1 - x");
        hstar = q;
    }

    Ok(CountSeries { n, values, hstar })
}

/// Alternative sum formula for odd n: Σ_{i=0}^{n-1} C(r+2n-2-i, 2n-2).
pub fn count_sum_formula(n: usize, r: u64) -> Result<BigInt> {
    require_odd(n)?;
    let nn = n as u64;
    let mut acc = BigInt::zero();
    for i in 0..nn {
        acc += binomial(r + 2 * nn - 2 - i, 2 * nn - 2);
    }
    Ok(acc)
}

/// Inclusion-exclusion formula for odd n:
/// Σ_{i=1}^{n} (-1)^{i+1} C(n, i) C(r+2n-1-i, 2n-1-i).
pub fn count_pie(n: usize, r: u64) -> Result<BigInt> {
    require_odd(n)?;
    let nn = n as u64;
    let mut acc = BigInt::zero();
    for i in 1..=nn {
        let term = binomial(nn, i) * binomial(r + 2 * nn - 1 - i, 2 * nn - 1 - i);
        if i % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// Discrete-convolution formula for n = 2m: Σ h(r1) h(r-r1) where h is the
/// odd-shape count at parameter m.
pub fn count_convolution(n: usize, r: u64) -> Result<BigInt> {
    require_even(n)?;
    let m = n as u64 / 2;
    let h = |s: u64| binomial(s + 2 * m - 1, 2 * m - 1) - binomial(s + m - 1, 2 * m - 1);
    let mut acc = BigInt::zero();
    for r1 in 0..=r {
        acc += h(r1) * h(r - r1);
    }
    Ok(acc)
}

fn budget_check(n: usize, r: u64, max_tuples: u64) -> Result<()> {
    let tuples = binomial(r + 2 * n as u64 - 1, 2 * n as u64 - 1);
    if tuples > BigInt::from(max_tuples) {
        return Err(DihedralError::BudgetExceeded {
            needed: tuples,
            budget: max_tuples,
        });
    }
    Ok(())
}

/// Visits every 2n-tuple of non-negative integers with the given sum, in
/// lexicographic order.
fn for_each_composition(total: u64, parts: usize, f: &mut impl FnMut(&[u64])) {
    fn rec(buf: &mut Vec<u64>, idx: usize, remaining: u64, f: &mut impl FnMut(&[u64])) {
        if idx + 1 == buf.len() {
            buf[idx] = remaining;
            f(buf);
            return;
        }
        for v in 0..=remaining {
            buf[idx] = v;
            rec(buf, idx + 1, remaining - v, f);
        }
    }
    let mut buf = vec![0u64; parts];
    rec(&mut buf, 0, total, f);
}

/// Brute-force oracle: enumerate every coefficient tuple with sum r, apply
/// the permutation map, and count distinct matrices. Deduplication key is
/// the full row-major integer matrix.
pub fn oracle_count(n: usize, r: u64, max_tuples: u64) -> Result<BigInt> {
    check_n(n)?;
    budget_check(n, r, max_tuples)?;
    let images: Vec<Vec<usize>> = all_elements(n)?
        .iter()
        .map(|g| to_permutation(g).image().to_vec())
        .collect();
    // entries are bounded by r, and the budget keeps r far below u16::MAX
    let mut seen: HashSet<Vec<u16>> = HashSet::new();
    for_each_composition(r, 2 * n, &mut |tuple| {
        let mut m = vec![0u16; n * n];
        for (x, img) in tuple.iter().zip(&images) {
            if *x == 0 {
                continue;
            }
            for (col, &row) in img.iter().enumerate() {
                m[row * n + col] += *x as u16;
            }
        }
        seen.insert(m);
    });
    Ok(BigInt::from(seen.len()))
}

/// Counts canonical coefficient tuples directly: for odd n a zero among the
/// n reflection coordinates; for n = 2m a zero among the odd-indexed
/// reflections and a zero among the even-indexed reflections.
pub fn oracle_canonical(n: usize, r: u64, max_tuples: u64) -> Result<BigInt> {
    check_n(n)?;
    budget_check(n, r, max_tuples)?;
    let even = n % 2 == 0;
    let mut count = BigInt::zero();
    for_each_composition(r, 2 * n, &mut |tuple| {
        let refl = &tuple[n..];
        let ok = if even {
            let odd_zero = refl.iter().skip(1).step_by(2).any(|&x| x == 0);
            let even_zero = refl.iter().step_by(2).any(|&x| x == 0);
            odd_zero && even_zero
        } else {
            refl.contains(&0)
        };
        if ok {
            count += 1;
        }
    });
    Ok(count)
}

/// Polynomial with exact rational coefficients, used to treat the counting
/// formula as a polynomial in r.
#[derive(Debug, Clone, PartialEq)]
struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    fn zero() -> Self {
        RatPoly { coeffs: vec![] }
    }

    fn constant(c: BigRational) -> Self {
        RatPoly { coeffs: vec![c] }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![BigRational::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        RatPoly { coeffs }.trimmed()
    }

    fn scale(&self, s: &BigRational) -> Self {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
        .trimmed()
    }

    fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly { coeffs }.trimmed()
    }

    fn eval_int(&self, x: i64) -> BigRational {
        let xr = BigRational::from_integer(x.into());
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &xr + c;
        }
        acc
    }
}

/// C(r + shift, d) expanded as a polynomial in r.
fn binomial_poly(shift: i64, d: usize) -> RatPoly {
    let mut p = RatPoly::constant(BigRational::one());
    for i in 0..d {
        let linear = RatPoly {
            coeffs: vec![
                BigRational::from_integer((shift - i as i64).into()),
                BigRational::one(),
            ],
        };
        p = p.mul(&linear);
    }
    let mut factorial = BigRational::one();
    for i in 1..=d {
        factorial *= BigRational::from_integer((i as i64).into());
    }
    p.scale(&factorial.recip())
}

/// The counting formula as an exact rational polynomial in r.
fn count_polynomial(n: usize) -> RatPoly {
    let d = 2 * n - 1;
    if n % 2 == 1 {
        let a = binomial_poly((2 * n - 1) as i64, d);
        let b = binomial_poly((n - 1) as i64, d);
        a.add(&b.scale(&BigRational::from_integer((-1).into())))
    } else {
        let m = (n / 2) as i64;
        let a = binomial_poly(4 * m - 1, d);
        let b = binomial_poly(3 * m - 1, d);
        let c = binomial_poly(2 * m - 1, d);
        a.add(&b.scale(&BigRational::from_integer((-2).into())))
            .add(&c)
    }
}

/// Report on the polynomial behaviour of the counting function.
#[derive(Debug, Clone)]
pub struct EhrhartReport {
    pub n: usize,
    pub checks: Vec<Check>,
}

impl EhrhartReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Verifies, over exact rationals: the polynomial degree (2n-2 for odd n,
/// 2n-3 for even), the reciprocity identity H(-r) = (-1)^{n-1} H(r-n), the
/// vanishing of H at -1..-(n-1), agreement with the closed formula at small
/// r, and symmetry/positivity/unimodality of the h* coefficients.
pub fn check_ehrhart_properties(n: usize) -> Result<EhrhartReport> {
    check_n(n)?;
    let poly = count_polynomial(n);
    let mut checks = Vec::new();

    let expected_degree = if n % 2 == 1 { 2 * n - 2 } else { 2 * n - 3 };
    let degree = poly.degree();
    checks.push(Check::new(
        "polynomial_degree",
        degree == Some(expected_degree),
        format!("degree {degree:?}, expected {expected_degree}"),
    ));

    let sign: i64 = if n % 2 == 1 { 1 } else { -1 };
    let mut reciprocity_ok = true;
    let mut detail = String::new();
    for r in 0..=(2 * n as i64) {
        let lhs = poly.eval_int(-r);
        let rhs = poly.eval_int(r - n as i64) * BigRational::from_integer(sign.into());
        if lhs != rhs {
            reciprocity_ok = false;
            detail = format!("fails at r = {r}: {lhs} vs {rhs}");
            break;
        }
    }
    checks.push(Check::new(
        "reciprocity",
        reciprocity_ok,
        if reciprocity_ok {
            format!("H(-r) = ({sign:+})·H(r-{n}) for r = 0..{}", 2 * n)
        } else {
            detail
        },
    ));

    let zeros_ok = (1..n as i64).all(|t| poly.eval_int(-t).is_zero());
    checks.push(Check::new(
        "interior_zeros",
        zeros_ok,
        format!("H(-1) = ... = H(-{}) = 0", n - 1),
    ));

    let mut agree = true;
    for r in 0..=6u64 {
        let via_poly = poly.eval_int(r as i64);
        let via_formula = BigRational::from_integer(count_closed(n, r)?);
        if via_poly != via_formula {
            agree = false;
            break;
        }
    }
    checks.push(Check::new(
        "polynomial_matches_closed_form",
        agree,
        "evaluation at r = 0..6".to_string(),
    ));

    let hstar = series(n, 0)?.hstar;
    let positive = hstar.iter().all(|c| c.is_positive());
    checks.push(Check::new("hstar_positive", positive, format!("{hstar:?}")));
    let symmetric = hstar.iter().eq(hstar.iter().rev());
    checks.push(Check::new(
        "hstar_symmetric",
        symmetric,
        "coefficients read the same reversed".to_string(),
    ));
    let peak = hstar
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1))
        .map(|(i, _)| i)
        .unwrap_or(0);
    let unimodal = hstar[..=peak].windows(2).all(|w| w[0] <= w[1])
        && hstar[peak..].windows(2).all(|w| w[0] >= w[1]);
    checks.push(Check::new(
        "hstar_unimodal",
        unimodal,
        "rises then falls".to_string(),
    ));

    Ok(EhrhartReport { n, checks })
}
