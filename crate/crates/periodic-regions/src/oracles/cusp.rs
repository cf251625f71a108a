//! Oracle for the thin-part volume integral.
//!
//! The volume of the locus where a surface develops q short parallel
//! cylinders concentrates, cylinder by cylinder, in a cone integral over
//! torus parameters: angle `theta` on the circle, waist `w in (0, eps)` with
//! measure `w dw dtheta`, modulus `h in (w/eps^2, 1/w)`, and a second height
//! `h1 in (0, h)` weighted by `(h1/h)^p`, against the simplex factor
//! `(h - h1)^(q-2)/(q-2)!` and the cube factor `w^q` from the remaining
//! cylinders. For q = 1 the simplex collapses: `h1 = h` is pinned and the
//! simplex factor is 1 by convention. The cone value times `2(q + 1)` is the
//! volume slice, with closed form
//!
//! ```text
//!   2 * pi * eps^2 / ((p+1)(p+2)...(p+q-1))
//! ```
//!
//! (empty product for q = 1). Monte Carlo samples the cone with importance
//! sampling: `w` proportional to the `w dw` measure, `h` from the power-law
//! density `q h^(q-1)` on its interval, `h1` uniform; every weight in that
//! chain is computed honestly, so the estimator retraces the integral rather
//! than the simplification that leads to the closed form. Quadrature
//! evaluates the same iterated integral with the v = h1/h factor split off
//! (it does not depend on w or h), a numeric inner h-integral per outer
//! node, and an adaptive outer w-integral.

use std::cell::Cell;

use num_traits::{One, Signed, ToPrimitive};

use super::{
    EvaluationPlan, ExactValue, McEstimate, NumericEvaluation, OracleComparison, OracleError,
    RunningMoments,
};
use crate::exact::{factorial, rational_to_f64, rising_product};
use crate::quadrature::{integrate, QuadTolerance};
use crate::ratios::PiPower;
use crate::rng::SplitMix64;
use crate::Rational;

const TAU: f64 = 2.0 * std::f64::consts::PI;

/// Evaluates the thin-part volume numerically and compares it to
/// `2 pi eps^2 / ((p+1)...(p+q-1))`.
pub fn cusp_integral(
    q: u32,
    p: &Rational,
    eps: f64,
    plan: &EvaluationPlan,
) -> Result<OracleComparison, OracleError> {
    if q == 0 {
        return Err(OracleError::SamplingPlanInvalid(
            "the cusp integral needs at least one cylinder (q >= 1)".into(),
        ));
    }
    if p.is_negative() {
        return Err(OracleError::SamplingPlanInvalid(format!(
            "moment exponent p must be nonnegative, got {}",
            crate::exact::display_rational(p)
        )));
    }
    if !(eps.is_finite() && eps > 0.0) {
        return Err(OracleError::SamplingPlanInvalid(format!(
            "cutoff eps must be positive and finite, got {eps}"
        )));
    }
    plan.check()?;

    let closed_form = ExactValue::PiPower {
        form: PiPower::new(
            Rational::from_integer(2.into()) / rising_product(&(p + Rational::one()), q - 1),
            1,
            2,
        ),
        at_eps: eps,
    };

    let numeric = match *plan {
        EvaluationPlan::MonteCarlo { samples, seed } => {
            NumericEvaluation::MonteCarlo(sample_cone(q, p, eps, samples, seed))
        }
        EvaluationPlan::Quadrature { rel_tol } => integrate_cone(q, p, eps, rel_tol),
    };
    Ok(OracleComparison::build("cusp", numeric, closed_form))
}

/// Monte Carlo over the cone, scaled by the cone-to-slice factor `2(q+1)`.
fn sample_cone(q: u32, p: &Rational, eps: f64, samples: u64, seed: u64) -> McEstimate {
    let p_f = rational_to_f64(p);
    let q_i = q as i32;
    let simplex_norm = factorial(u64::from(q.saturating_sub(2)))
        .to_f64()
        .expect("small factorial");
    let slice_factor = 2.0 * (q as f64 + 1.0);

    let mut rng = SplitMix64::new(seed);
    let mut moments = RunningMoments::default();
    for _ in 0..samples {
        // w with density 2w/eps^2 on (0, eps): importance-matched to the
        // w dw measure.
        let w = eps * rng.next_f64_open().sqrt();
        let weight_w = eps * eps / (2.0 * w);
        let lo = w / (eps * eps);
        let hi = 1.0 / w;

        let cone_sample = if q == 1 {
            // h uniform on the interval; h1 is pinned to h and the simplex
            // factor is 1, so the integrand only carries w^(q+1).
            let weight_h = hi - lo;
            TAU * weight_w * weight_h * w.powi(q_i + 1)
        } else {
            // h from density q h^(q-1) / d on the interval.
            let d = hi.powi(q_i) - lo.powi(q_i);
            let h = (lo.powi(q_i) + rng.next_f64() * d).powf(1.0 / q as f64);
            let weight_h = d / (q as f64 * h.powi(q_i - 1));
            // h1 = v h uniform on (0, h): weight h.
            let v = rng.next_f64();
            let h1 = v * h;
            let integrand =
                w.powi(q_i + 1) * v.powf(p_f) * (h - h1).powi(q_i - 2) / simplex_norm;
            TAU * weight_w * weight_h * h * integrand
        };
        moments.push(slice_factor * cone_sample);
    }
    McEstimate {
        value: moments.mean(),
        std_error: moments.variance_of_mean().sqrt(),
        samples,
        seed,
    }
}

/// Nested adaptive quadrature of the same iterated integral.
fn integrate_cone(q: u32, p: &Rational, eps: f64, rel_tol: f64) -> NumericEvaluation {
    let p_f = rational_to_f64(p);
    let q_i = q as i32;
    let inner_tol = QuadTolerance::with_budget(rel_tol / 10.0, 512);
    let inner_evals = Cell::new(0u64);

    let outer = if q == 1 {
        // The h1 layer is pinned and the h-integrand is the constant 1, so
        // the h-integral is the interval length.
        integrate(
            |w: f64| w.powi(q_i + 1) * (1.0 / w - w / (eps * eps)),
            0.0,
            eps,
            QuadTolerance::relative(rel_tol),
        )
    } else {
        integrate(
            |w: f64| {
                let h_part = integrate(
                    |h: f64| h.powi(q_i - 1),
                    w / (eps * eps),
                    1.0 / w,
                    inner_tol,
                );
                inner_evals.set(inner_evals.get() + h_part.evaluations);
                w.powi(q_i + 1) * h_part.value
            },
            0.0,
            eps,
            QuadTolerance::relative(rel_tol),
        )
    };

    // The h1 = v h layer does not depend on w or h; integrate it once.
    let (v_value, v_evals) = if q == 1 {
        (1.0, 0)
    } else {
        let simplex_norm = factorial(u64::from(q - 2)).to_f64().expect("small");
        let v_part = integrate(
            |v: f64| v.powf(p_f) * (1.0 - v).powi(q_i - 2) / simplex_norm,
            0.0,
            1.0,
            QuadTolerance::relative(rel_tol / 10.0),
        );
        (v_part.value, v_part.evaluations)
    };

    let slice_factor = 2.0 * (q as f64 + 1.0);
    let scale = slice_factor * TAU * v_value;
    NumericEvaluation::Quadrature {
        value: scale * outer.value,
        rel_tol,
        abs_error: scale.abs() * outer.abs_error,
        evaluations: outer.evaluations + inner_evals.get() + v_evals,
    }
}
