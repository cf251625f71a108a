//! Beta kernels and the binomial identity suites behind the tail formulas.
//!
//! The area distribution of a periodic region is governed by the regularized
//! incomplete Beta function. Two independent evaluation routes are kept
//! deliberately separate and compared in tests:
//!
//! - an exact route for integer parameters, through factorials and the
//!   binomial finite sum (big-rational arithmetic, zero tolerance);
//! - a numeric route for real parameters, by adaptive quadrature of the
//!   defining integral with substitutions that remove the endpoint
//!   singularities.
//!
//! The module also hosts exhaustive verifiers for the three alternating-sum
//! binomial identities the closed forms rest on. Verifiers report
//! counterexamples instead of panicking so the CLI can print a table.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::{binomial, display_rational, factorial};
use crate::quadrature::{integrate, QuadTolerance};
use crate::{Integer, Rational};

/// Relative tolerance requested from the quadrature route.
///
/// The defining integral is evaluated to this relative error; the agreement
/// tests against the exact route then assert 1e-10, leaving two orders of
/// headroom for the comparison itself.
pub const BETA_QUAD_REL_TOL: f64 = 1e-12;

/// Errors from the numeric Beta kernels.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SpecialFnError {
    /// Parameters outside `a > 0`, `b > 0`, `t` in `[0, 1]`.
    #[error("domain error: {0}")]
    DomainError(String),
}

/// Gamma at a positive integer, via the factorial route: `Gamma(n) = (n-1)!`.
pub fn gamma_integer(n: u64) -> Integer {
    assert!(n >= 1, "gamma_integer needs n >= 1");
    factorial(n - 1)
}

/// Complete Beta at positive integers: `B(n, m) = (n-1)! (m-1)! / (n+m-1)!`.
pub fn beta_exact(n: u64, m: u64) -> Rational {
    assert!(n >= 1 && m >= 1, "beta_exact needs positive integers");
    Rational::new(
        factorial(n - 1) * factorial(m - 1),
        factorial(n + m - 1),
    )
}

/// Incomplete Beta at integer parameters, exact.
///
/// Uses the finite-sum identity relating the integral to a binomial tail:
/// `B(t; a, b) = B(a, b) * sum_{k=a}^{a+b-1} C(a+b-1, k) t^k (1-t)^{a+b-1-k}`.
pub fn incomplete_beta_exact(t: &Rational, a: u64, b: u64) -> Rational {
    beta_exact(a, b) * regularized_incomplete_beta_exact(t, a, b)
}

/// Regularized incomplete Beta at integer parameters, exact.
///
/// `I(t; a, b)` equals the probability that a Binomial(a+b-1, t) variable is
/// at least `a`; the sum below is that tail, evaluated in exact rationals.
pub fn regularized_incomplete_beta_exact(t: &Rational, a: u64, b: u64) -> Rational {
    assert!(a >= 1 && b >= 1, "integer route needs positive integers");
    assert!(
        !t.is_negative() && *t <= Rational::one(),
        "t must lie in [0, 1]"
    );
    let n = a + b - 1;
    let one_minus_t = Rational::one() - t;
    if one_minus_t.is_zero() {
        // At t = 1 every term except k = n carries a positive power of
        // (1 - t); the survivor is C(n, n) * 1 * 1.
        return Rational::one();
    }
    let mut sum = Rational::zero();
    // t^k (1-t)^{n-k}, built incrementally from k = a upward.
    let mut t_pow = pow_rational(t, a);
    let mut omt_pow = pow_rational(&one_minus_t, n - a);
    for k in a..=n {
        sum += Rational::from_integer(binomial(n as i64, k as i64)) * &t_pow * &omt_pow;
        if k < n {
            t_pow *= t;
            omt_pow /= &one_minus_t;
        }
    }
    sum
}

fn pow_rational(x: &Rational, k: u64) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..k {
        acc *= x;
    }
    acc
}

/// Incomplete Beta `B(t; a, b)` for real parameters, by adaptive quadrature.
///
/// Endpoint singularities (`a < 1` at 0, `b < 1` at 1) are removed by the
/// substitutions `u = v^{1/a}` and `1 - u = w^{1/b}`, so the integrand handed
/// to the quadrature engine is bounded. Relative error [`BETA_QUAD_REL_TOL`].
pub fn incomplete_beta(t: f64, a: f64, b: f64) -> Result<f64, SpecialFnError> {
    check_beta_args(t, a, b)?;
    if t == 0.0 {
        return Ok(0.0);
    }
    // Split at 1/2: the lower piece sees only the u -> 0 endpoint, the upper
    // piece only u -> 1 (reflected so its singular endpoint also sits at 0).
    let lower_end = t.min(0.5);
    let mut total = lower_piece(lower_end, a, b);
    if t > 0.5 {
        // int_{1/2}^{t} u^{a-1}(1-u)^{b-1} du, reflected via w = 1 - u.
        total += lower_piece_from(1.0 - t, 0.5, b, a);
    }
    Ok(total)
}

/// Regularized incomplete Beta by the quadrature route: `B(t;a,b) / B(1;a,b)`.
pub fn regularized_incomplete_beta(t: f64, a: f64, b: f64) -> Result<f64, SpecialFnError> {
    let numerator = incomplete_beta(t, a, b)?;
    let denominator = incomplete_beta(1.0, a, b)?;
    Ok(numerator / denominator)
}

fn check_beta_args(t: f64, a: f64, b: f64) -> Result<(), SpecialFnError> {
    if !(a > 0.0) || !(b > 0.0) {
        return Err(SpecialFnError::DomainError(format!(
            "Beta parameters must be positive, got a = {a}, b = {b}"
        )));
    }
    if !(0.0..=1.0).contains(&t) {
        return Err(SpecialFnError::DomainError(format!(
            "t must lie in [0, 1], got {t}"
        )));
    }
    Ok(())
}

/// `int_0^{end} u^{a-1} (1-u)^{b-1} du` with `end <= 1/2`.
fn lower_piece(end: f64, a: f64, b: f64) -> f64 {
    lower_piece_from(0.0, end, a, b)
}

/// `int_{start}^{end} u^{a-1} (1-u)^{b-1} du` with `end <= 1/2`, so the
/// `(1-u)` factor is bounded away from its singularity.
fn lower_piece_from(start: f64, end: f64, a: f64, b: f64) -> f64 {
    if end <= start {
        return 0.0;
    }
    let tol = QuadTolerance::relative(BETA_QUAD_REL_TOL);
    if a >= 1.0 {
        integrate(
            |u: f64| u.powf(a - 1.0) * (1.0 - u).powf(b - 1.0),
            start,
            end,
            tol,
        )
        .value
    } else {
        // u = v^{1/a}: u^{a-1} du = (1/a) dv, flattening the u -> 0 blowup.
        integrate(
            |v: f64| (1.0 - v.powf(1.0 / a)).powf(b - 1.0) / a,
            start.powf(a),
            end.powf(a),
            tol,
        )
        .value
    }
}

/// Outcome of one exhaustive identity sweep.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    /// Which identity family was checked.
    pub identity: &'static str,
    /// Number of parameter combinations evaluated.
    pub cases_checked: u64,
    /// Human-readable descriptions of failing cases (empty on full pass).
    pub failures: Vec<String>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the two alternating binomial sums used to collapse the cylinder
/// counting recurrences, over `1 <= A <= a_max`, `0 <= B <= b_max`:
///
/// - `sum_{k=0}^{B} (-1)^k C(A+B, A+k) = C(A+B-1, B)`
/// - `sum_{k=0}^{B} k (-1)^{k+1} C(A+B, A+k) = C(A+B-2, B-1)`
///
/// Exact integer arithmetic; out-of-range binomials are zero, which is what
/// makes the `B = 0` edge of the second identity come out as 0.
pub fn verify_combi1(a_max: u32, b_max: u32) -> VerificationReport {
    let mut report = VerificationReport {
        identity: "alternating binomial sums",
        cases_checked: 0,
        failures: Vec::new(),
    };
    for a in 1..=i64::from(a_max) {
        for b in 0..=i64::from(b_max) {
            report.cases_checked += 1;
            let mut first = BigInt::zero();
            let mut second = BigInt::zero();
            for k in 0..=b {
                let term = binomial(a + b, a + k);
                if k % 2 == 0 {
                    first += &term;
                    second -= k * term;
                } else {
                    first -= &term;
                    second += k * term;
                }
            }
            let first_rhs = binomial(a + b - 1, b);
            let second_rhs = binomial(a + b - 2, b - 1);
            if first != first_rhs {
                report.failures.push(format!(
                    "first sum at A={a}, B={b}: got {first}, expected {first_rhs}"
                ));
            }
            if second != second_rhs {
                report.failures.push(format!(
                    "second sum at A={a}, B={b}: got {second}, expected {second_rhs}"
                ));
            }
        }
    }
    report
}

/// Checks the inclusion-exclusion kernel of the tail distribution:
/// `sum_{k=0}^{q+1} C(n+q+1, n+k) C(k, q+1-l) (-1)^{l+k+q+1} = C(n+l-1, l)`
/// for all `1 <= n <= n_max`, `1 <= q <= q_max`, `0 <= l <= q`.
pub fn verify_combi2(n_max: u32, q_max: u32) -> VerificationReport {
    let mut report = VerificationReport {
        identity: "tail inclusion-exclusion kernel",
        cases_checked: 0,
        failures: Vec::new(),
    };
    for n in 1..=i64::from(n_max) {
        for q in 1..=i64::from(q_max) {
            for l in 0..=q {
                report.cases_checked += 1;
                let mut sum = BigInt::zero();
                for k in 0..=q + 1 {
                    let term = binomial(n + q + 1, n + k) * binomial(k, q + 1 - l);
                    if (l + k + q + 1) % 2 == 0 {
                        sum += term;
                    } else {
                        sum -= term;
                    }
                }
                let rhs = binomial(n + l - 1, l);
                if sum != rhs {
                    report.failures.push(format!(
                        "kernel at n={n}, q={q}, l={l}: got {sum}, expected {rhs}"
                    ));
                }
            }
        }
    }
    report
}

/// Checks the closed form of the incomplete Beta polynomial expansion:
/// `B(1-x; n, q) = (1-x)^n B(n, q) sum_{l=0}^{q-1} C(n+l-1, l) x^l`,
/// exactly in big rationals, for all `n <= n_max`, `q <= q_max` and every
/// grid point `x` in `[0, 1)`.
pub fn verify_combi4(n_max: u32, q_max: u32, grid: &[Rational]) -> VerificationReport {
    let mut report = VerificationReport {
        identity: "incomplete Beta polynomial expansion",
        cases_checked: 0,
        failures: Vec::new(),
    };
    for x in grid {
        if x.is_negative() || *x >= Rational::one() {
            report
                .failures
                .push(format!("grid point {} outside [0, 1)", display_rational(x)));
            continue;
        }
        let one_minus_x = Rational::one() - x;
        for n in 1..=u64::from(n_max) {
            for q in 1..=u64::from(q_max) {
                report.cases_checked += 1;
                let lhs = incomplete_beta_exact(&one_minus_x, n, q);
                let mut sum = Rational::zero();
                let mut x_pow = Rational::one();
                for l in 0..q {
                    sum += Rational::from_integer(binomial(
                        (n + l) as i64 - 1,
                        l as i64,
                    )) * &x_pow;
                    x_pow *= x;
                }
                let rhs = pow_rational(&one_minus_x, n) * beta_exact(n, q) * sum;
                if lhs != rhs {
                    report.failures.push(format!(
                        "expansion at n={n}, q={q}, x={}: got {}, expected {}",
                        display_rational(x),
                        display_rational(&lhs),
                        display_rational(&rhs)
                    ));
                }
            }
        }
    }
    report
}

/// Convenience: `k` evenly spaced rationals `0, 1/k, ..., (k-1)/k` in `[0, 1)`.
pub fn uniform_grid(k: u32) -> Vec<Rational> {
    (0..k)
        .map(|i| Rational::new(BigInt::from(i), BigInt::from(k)))
        .collect()
}

/// f64 view of an exact rational, for tolerance checks against the numeric route.
pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64()
        .unwrap_or_else(|| crate::exact::rational_to_f64(r))
}
