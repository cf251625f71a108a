//! Oracles for the planar area integrals behind the tail formulas.
//!
//! All four families integrate over a region of the (s, t) quarter disc
//! `s > 0, t > 0, s^2 + t^2 < 1`:
//!
//! * `jp`: the full quarter disc against
//!   `s^(2n-1) t^(2q+1) (t^2/(s^2+t^2))^(p-1)`, the area-weight moment of
//!   one cylinder against the remaining q cylinders and the n-dimensional
//!   rest of the period box.
//! * `ix`: the sub-region where the cylinder takes at least an x-fraction
//!   of the area, `t^2 >= x (s^2 + t^2)`, against
//!   `s^(2n-1) t^(2q-1) (s^2+t^2)`.
//! * `iprime`: the same region with the leftover fraction factor
//!   `(1 - x (s^2+t^2)/t^2)^(q-1)` that rescales the other q - 1 cylinders
//!   into what remains after the first one.
//! * `corr`: the conditional version for two cylinders; the joint tail at
//!   level x2 with `1 - x2 = (1 - x)(1 - x1)`, divided by `1 - x` and by the
//!   single-cylinder value at x1, reported as a ratio against
//!   `(1 - x)^(n+q-2)`.
//!
//! Each family carries two independent quadrature routes (the iterated
//! cartesian integral and a polar-coordinate form where the radius
//! integrates in closed form) that must agree before a value is reported,
//! plus a stratified Monte Carlo route for the sampling plan.

use std::cell::Cell;
use std::f64::consts::FRAC_PI_2;

use num_traits::{pow, One, Signed};

use super::{
    stratified_planar_mc, EvaluationPlan, ExactValue, McEstimate, NumericEvaluation,
    OracleComparison, OracleError,
};
use crate::exact::{display_rational, factorial, ratio, rational_to_f64, rising_product};
use crate::quadrature::{integrate, QuadTolerance};
use crate::rng::SplitMix64;
use crate::special::{beta_exact, incomplete_beta_exact};
use crate::Rational;

/// One planar integral: a region over the quarter disc and the two
/// quadrature routes through it.
struct PlanarRegion {
    name: &'static str,
    s_max: f64,
    t_lower: Box<dyn Fn(f64) -> f64>,
    t_upper: Box<dyn Fn(f64) -> f64>,
    integrand: Box<dyn Fn(f64, f64) -> f64>,
    /// Lower angle of the polar form; the upper is always pi/2.
    theta_lo: f64,
    theta_integrand: Box<dyn Fn(f64) -> f64>,
    /// Closed-form radial integral, `1/(2(n+q+1))` for every family here.
    radial_factor: f64,
}

/// Moment of the first cylinder's area fraction, compared against
/// `(n-1)! / ((q+p)(q+p+1)...(q+p+n-1)) / (4(n+q+1))`.
pub fn j_p_integral(
    n: u32,
    q: u32,
    p: &Rational,
    plan: &EvaluationPlan,
) -> Result<OracleComparison, OracleError> {
    check_positive("n", n)?;
    check_positive("q", q)?;
    if p.is_negative() {
        return Err(OracleError::SamplingPlanInvalid(format!(
            "moment exponent p must be nonnegative, got {}",
            display_rational(p)
        )));
    }
    plan.check()?;

    let closed = Rational::from_integer(factorial(u64::from(n - 1)))
        / rising_product(&(p + ratio(i64::from(q), 1)), n)
        / ratio(i64::from(4 * (n + q + 1)), 1);
    let region = j_region(n, q, rational_to_f64(p));
    let numeric = evaluate(&region, plan);
    Ok(OracleComparison::build("jp", numeric, ExactValue::Rational(closed)))
}

/// Tail integral for the first cylinder's area fraction exceeding x,
/// compared against `B(1-x; n, q) / (4(n+q+1))`.
pub fn i_x_integral(
    n: u32,
    q: u32,
    x: &Rational,
    plan: &EvaluationPlan,
) -> Result<OracleComparison, OracleError> {
    check_positive("n", n)?;
    check_positive("q", q)?;
    check_unit_interval("x", x)?;
    plan.check()?;

    let closed = incomplete_beta_exact(&(Rational::one() - x), u64::from(n), u64::from(q))
        / ratio(i64::from(4 * (n + q + 1)), 1);
    let region = i_region(n, q, rational_to_f64(x));
    let numeric = evaluate(&region, plan);
    Ok(OracleComparison::build("ix", numeric, ExactValue::Rational(closed)))
}

/// Tail integral with the leftover-fraction factor, compared against
/// `(1-x)^(n+q-1) B(n, q) / (4(n+q+1))`.
pub fn i_prime_integral(
    n: u32,
    q: u32,
    x: &Rational,
    plan: &EvaluationPlan,
) -> Result<OracleComparison, OracleError> {
    check_positive("n", n)?;
    check_positive("q", q)?;
    check_unit_interval("x", x)?;
    plan.check()?;

    let closed = pow(Rational::one() - x, (n + q - 1) as usize)
        * beta_exact(u64::from(n), u64::from(q))
        / ratio(i64::from(4 * (n + q + 1)), 1);
    let region = i_prime_region(n, q, rational_to_f64(x));
    let numeric = evaluate(&region, plan);
    Ok(OracleComparison::build(
        "iprime",
        numeric,
        ExactValue::Rational(closed),
    ))
}

/// Conditional tail ratio for two cylinders, compared against
/// `(1-x)^(n+q-2)`.
///
/// Conditioning the second cylinder to exceed x1 among what the first one
/// (exceeding x) leaves behind shifts the joint threshold to x2 with
/// `1 - x2 = (1 - x)(1 - x1)`. The numeric side evaluates the leftover-
/// factor integral at x2, divides by `1 - x`, and normalizes by the same
/// integral at x1; the result must not depend on x1. Under a Monte Carlo
/// plan each of the two integrals receives the full sample count from its
/// own substream, and the ratio's standard error combines the two relative
/// errors in quadrature.
pub fn correlation_integral(
    n: u32,
    q: u32,
    x: &Rational,
    x1: &Rational,
    plan: &EvaluationPlan,
) -> Result<OracleComparison, OracleError> {
    check_positive("n", n)?;
    if q < 2 {
        return Err(OracleError::SamplingPlanInvalid(format!(
            "the correlation ratio needs at least two cylinders (q >= 2), got q = {q}"
        )));
    }
    check_unit_interval("x", x)?;
    check_unit_interval("x1", x1)?;
    plan.check()?;

    let one = Rational::one();
    let x2 = x + x1 * (&one - x);
    debug_assert_eq!(&one - &x2, (&one - x) * (&one - x1));

    let numerator = i_prime_region(n, q, rational_to_f64(&x2));
    let denominator = i_prime_region(n, q, rational_to_f64(x1));
    let tail = 1.0 - rational_to_f64(x);

    let numeric = match *plan {
        EvaluationPlan::MonteCarlo { samples, seed } => {
            let seed_a = SplitMix64::substream(seed, 1).next_u64();
            let seed_b = SplitMix64::substream(seed, 2).next_u64();
            let a = mc_over(&numerator, samples, seed_a);
            let b = mc_over(&denominator, samples, seed_b);
            let value = a.value / (tail * b.value);
            let relative = ((a.std_error / a.value).powi(2)
                + (b.std_error / b.value).powi(2))
            .sqrt();
            NumericEvaluation::MonteCarlo(McEstimate {
                value,
                std_error: value.abs() * relative,
                samples: a.samples + b.samples,
                seed,
            })
        }
        EvaluationPlan::Quadrature { rel_tol } => {
            let (a, a_err, a_evals) = quadrature_over(&numerator, rel_tol);
            let (b, b_err, b_evals) = quadrature_over(&denominator, rel_tol);
            let value = a / (tail * b);
            NumericEvaluation::Quadrature {
                value,
                rel_tol,
                abs_error: value.abs() * (a_err / a.abs() + b_err / b.abs()),
                evaluations: a_evals + b_evals,
            }
        }
    };

    let closed = pow(&one - x, (n + q - 2) as usize);
    Ok(OracleComparison::build(
        "corr",
        numeric,
        ExactValue::Rational(closed),
    ))
}

fn check_positive(name: &str, value: u32) -> Result<(), OracleError> {
    if value == 0 {
        return Err(OracleError::SamplingPlanInvalid(format!(
            "{name} must be at least 1"
        )));
    }
    Ok(())
}

fn check_unit_interval(name: &str, value: &Rational) -> Result<(), OracleError> {
    if value.is_negative() || *value >= Rational::one() {
        return Err(OracleError::SamplingPlanInvalid(format!(
            "{name} must lie in [0, 1), got {}",
            display_rational(value)
        )));
    }
    Ok(())
}

fn j_region(n: u32, q: u32, p_f: f64) -> PlanarRegion {
    let s_pow = (2 * n - 1) as i32;
    let t_pow = (2 * q + 1) as i32;
    let angle_pow = 2.0 * (q as f64 + p_f) - 1.0;
    PlanarRegion {
        name: "jp",
        s_max: 1.0,
        t_lower: Box::new(|_| 0.0),
        t_upper: Box::new(|s| (1.0 - s * s).max(0.0).sqrt()),
        integrand: Box::new(move |s, t| {
            let rr = s * s + t * t;
            s.powi(s_pow) * t.powi(t_pow) * (t * t / rr).powf(p_f - 1.0)
        }),
        theta_lo: 0.0,
        theta_integrand: Box::new(move |theta: f64| {
            theta.cos().powi(s_pow) * theta.sin().powf(angle_pow)
        }),
        radial_factor: 0.5 / (n + q + 1) as f64,
    }
}

fn i_region(n: u32, q: u32, x_f: f64) -> PlanarRegion {
    let s_pow = (2 * n - 1) as i32;
    let t_pow = (2 * q - 1) as i32;
    let slope = (x_f / (1.0 - x_f)).sqrt();
    PlanarRegion {
        name: "ix",
        s_max: (1.0 - x_f).sqrt(),
        t_lower: Box::new(move |s| slope * s),
        t_upper: Box::new(|s| (1.0 - s * s).max(0.0).sqrt()),
        integrand: Box::new(move |s, t| s.powi(s_pow) * t.powi(t_pow) * (s * s + t * t)),
        theta_lo: x_f.sqrt().asin(),
        theta_integrand: Box::new(move |theta: f64| {
            theta.cos().powi(s_pow) * theta.sin().powi(t_pow)
        }),
        radial_factor: 0.5 / (n + q + 1) as f64,
    }
}

fn i_prime_region(n: u32, q: u32, x_f: f64) -> PlanarRegion {
    let s_pow = (2 * n - 1) as i32;
    let t_pow = (2 * q - 1) as i32;
    let leftover_pow = (q - 1) as i32;
    let slope = (x_f / (1.0 - x_f)).sqrt();
    PlanarRegion {
        name: "iprime",
        s_max: (1.0 - x_f).sqrt(),
        t_lower: Box::new(move |s| slope * s),
        t_upper: Box::new(|s| (1.0 - s * s).max(0.0).sqrt()),
        integrand: Box::new(move |s, t| {
            let rr = s * s + t * t;
            let leftover = 1.0 - x_f * rr / (t * t);
            s.powi(s_pow) * t.powi(t_pow) * rr * leftover.powi(leftover_pow)
        }),
        theta_lo: x_f.sqrt().asin(),
        theta_integrand: Box::new(move |theta: f64| {
            let sin = theta.sin();
            let leftover = 1.0 - x_f / (sin * sin);
            theta.cos().powi(s_pow) * sin.powi(t_pow) * leftover.powi(leftover_pow)
        }),
        radial_factor: 0.5 / (n + q + 1) as f64,
    }
}

fn evaluate(region: &PlanarRegion, plan: &EvaluationPlan) -> NumericEvaluation {
    match *plan {
        EvaluationPlan::MonteCarlo { samples, seed } => {
            NumericEvaluation::MonteCarlo(mc_over(region, samples, seed))
        }
        EvaluationPlan::Quadrature { rel_tol } => {
            let (value, abs_error, evaluations) = quadrature_over(region, rel_tol);
            NumericEvaluation::Quadrature {
                value,
                rel_tol,
                abs_error,
                evaluations,
            }
        }
    }
}

fn mc_over(region: &PlanarRegion, samples: u64, seed: u64) -> McEstimate {
    stratified_planar_mc(
        seed,
        samples,
        region.s_max,
        &region.t_lower,
        &region.t_upper,
        &region.integrand,
    )
}

/// Iterated cartesian quadrature, cross-checked against the polar route.
///
/// Returns (value, error estimate, integrand evaluations). The two routes
/// share no code beyond the interval integrator, so their agreement guards
/// against a mistyped region or integrand; a disagreement is a defect and
/// panics rather than returning a number that would quietly pass or fail
/// the comparison.
fn quadrature_over(region: &PlanarRegion, rel_tol: f64) -> (f64, f64, u64) {
    let inner_tol = QuadTolerance::with_budget(rel_tol / 10.0, 256);
    let inner_evals = Cell::new(0u64);
    let outer = integrate(
        |s: f64| {
            let lo = (region.t_lower)(s);
            let hi = (region.t_upper)(s);
            if hi <= lo {
                return 0.0;
            }
            let inner = integrate(|t: f64| (region.integrand)(s, t), lo, hi, inner_tol);
            inner_evals.set(inner_evals.get() + inner.evaluations);
            inner.value
        },
        0.0,
        region.s_max,
        QuadTolerance::relative(rel_tol),
    );

    let polar = integrate(
        |theta: f64| (region.theta_integrand)(theta),
        region.theta_lo,
        FRAC_PI_2,
        QuadTolerance::relative(rel_tol),
    );
    let polar_value = region.radial_factor * polar.value;
    let scale = outer.value.abs().max(polar_value.abs());
    assert!(
        (outer.value - polar_value).abs() <= 10.0 * rel_tol * scale,
        "cartesian and polar quadrature disagree for {}: {} vs {}",
        region.name,
        outer.value,
        polar_value,
    );

    let abs_error = outer.abs_error + outer.value.abs() * rel_tol / 10.0;
    (
        outer.value,
        abs_error,
        outer.evaluations + inner_evals.get() + polar.evaluations,
    )
}
