//! Independent numeric evaluation of the proof integrals.
//!
//! Every closed-form integral value used by the ratio formulas is re-derived
//! here by brute force: Monte Carlo sampling of the original integral and
//! deterministic adaptive quadrature of the iterated form (plus a
//! polar-coordinate second path for the planar families). Each oracle
//! returns an [`OracleComparison`] holding the numeric estimate, the exact
//! closed form, and a pass flag at the requested tolerance. The comparisons
//! fail loudly rather than averaging away a discrepancy, because the closed
//! forms are exact and any stable mismatch means a real defect.

mod cusp;
mod planar;

pub use cusp::cusp_integral;
pub use planar::{correlation_integral, i_prime_integral, i_x_integral, j_p_integral};

use serde::Serialize;

use crate::exact::{display_rational, rational_to_f64};
use crate::ratios::PiPower;
use crate::rng::SplitMix64;
use crate::Rational;

/// How to evaluate an integral numerically.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EvaluationPlan {
    /// Sample `samples` points deterministically from `seed`; pass at three
    /// standard errors.
    MonteCarlo { samples: u64, seed: u64 },
    /// Deterministic adaptive quadrature; pass at this relative error.
    Quadrature { rel_tol: f64 },
}

impl EvaluationPlan {
    pub(crate) fn check(&self) -> Result<(), OracleError> {
        match *self {
            EvaluationPlan::MonteCarlo { samples, .. } => {
                if samples < 100 {
                    return Err(OracleError::SamplingPlanInvalid(format!(
                        "need at least 100 samples for a standard error, got {samples}"
                    )));
                }
            }
            EvaluationPlan::Quadrature { rel_tol } => {
                if !(rel_tol.is_finite() && rel_tol > 0.0) {
                    return Err(OracleError::SamplingPlanInvalid(format!(
                        "relative tolerance must be positive and finite, got {rel_tol}"
                    )));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("invalid sampling plan: {0}")]
    SamplingPlanInvalid(String),
}

/// A Monte Carlo estimate with its statistical error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct McEstimate {
    pub value: f64,
    pub std_error: f64,
    pub samples: u64,
    pub seed: u64,
}

/// The numeric side of a comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum NumericEvaluation {
    MonteCarlo(McEstimate),
    Quadrature {
        value: f64,
        /// Requested relative tolerance.
        rel_tol: f64,
        /// Error estimate reported by the adaptive integrator.
        abs_error: f64,
        evaluations: u64,
    },
}

impl NumericEvaluation {
    pub fn value(&self) -> f64 {
        match *self {
            NumericEvaluation::MonteCarlo(est) => est.value,
            NumericEvaluation::Quadrature { value, .. } => value,
        }
    }
}

/// The exact side of a comparison: a rational number, or a rational multiple
/// of a power of pi (and of the cutoff for the cusp integral).
#[derive(Debug, Clone, PartialEq)]
pub enum ExactValue {
    Rational(Rational),
    /// Pi/eps-bearing closed form; `at_eps` fixes the cutoff used for the
    /// numeric value (1 when the form carries no eps power).
    PiPower { form: PiPower, at_eps: f64 },
}

impl ExactValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            ExactValue::Rational(r) => rational_to_f64(r),
            ExactValue::PiPower { form, at_eps } => form.to_f64(*at_eps),
        }
    }

    pub fn display(&self) -> String {
        match self {
            ExactValue::Rational(r) => display_rational(r),
            ExactValue::PiPower { form, .. } => form.to_string(),
        }
    }
}

impl Serialize for ExactValue {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("ExactValue", 2)?;
        s.serialize_field("exact", &self.display())?;
        s.serialize_field("value", &self.to_f64())?;
        s.end()
    }
}

/// Outcome of one oracle run: numeric estimate versus exact closed form.
///
/// The run passes when `|numeric - closed_form|` is at most
/// `max(3 * std_error, rel_tol * |closed_form|)`, with `std_error = 0` for
/// quadrature and a tiny relative floor for Monte Carlo (an estimate can hit
/// the closed form exactly, and a zero tolerance would be meaningless).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleComparison {
    /// Which integral family was evaluated.
    pub family: String,
    pub numeric: NumericEvaluation,
    pub closed_form: ExactValue,
    /// Distance in standard errors; Monte Carlo only.
    pub z_score: Option<f64>,
    pub relative_error: f64,
    pub pass: bool,
}

/// Relative floor applied to the Monte Carlo pass rule.
const MC_REL_FLOOR: f64 = 1e-12;

impl OracleComparison {
    pub(crate) fn build(
        family: &str,
        numeric: NumericEvaluation,
        closed_form: ExactValue,
    ) -> Self {
        let reference = closed_form.to_f64();
        let difference = (numeric.value() - reference).abs();
        let relative_error = difference / reference.abs();
        let (z_score, tolerance) = match numeric {
            NumericEvaluation::MonteCarlo(est) => {
                let z = if est.std_error > 0.0 {
                    difference / est.std_error
                } else if difference == 0.0 {
                    0.0
                } else {
                    f64::INFINITY
                };
                (
                    Some(z),
                    (3.0 * est.std_error).max(MC_REL_FLOOR * reference.abs()),
                )
            }
            NumericEvaluation::Quadrature { rel_tol, .. } => {
                (None, rel_tol * reference.abs())
            }
        };
        OracleComparison {
            family: family.to_string(),
            numeric,
            closed_form,
            z_score,
            relative_error,
            pass: difference <= tolerance,
        }
    }
}

/// Accumulates a mean and standard error from a stream of sample values.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct RunningMoments {
    count: u64,
    sum: f64,
    sum_squares: f64,
}

impl RunningMoments {
    pub(crate) fn push(&mut self, sample: f64) {
        self.count += 1;
        self.sum += sample;
        self.sum_squares += sample * sample;
    }

    pub(crate) fn mean(&self) -> f64 {
        self.sum / self.count as f64
    }

    /// Variance of the mean (not of the samples).
    pub(crate) fn variance_of_mean(&self) -> f64 {
        let n = self.count as f64;
        let mean = self.mean();
        let sample_var = (self.sum_squares - n * mean * mean) / (n - 1.0);
        (sample_var / n).max(0.0)
    }
}

/// Stratified Monte Carlo for a planar region `s in (0, s_max)`,
/// `t in (t_lower(s), t_upper(s))`.
///
/// The s-axis splits into equal strata, each sampled from its own
/// deterministic substream of the seed and combined in stratum order, so the
/// result is one number per (seed, samples) regardless of scheduling. The
/// estimate for a stratum is `width * (t range) * f(s, t)` averaged over its
/// samples; stratum variances add up into the variance of the total.
pub(crate) fn stratified_planar_mc(
    seed: u64,
    samples: u64,
    s_max: f64,
    t_lower: impl Fn(f64) -> f64,
    t_upper: impl Fn(f64) -> f64,
    integrand: impl Fn(f64, f64) -> f64,
) -> McEstimate {
    const STRATA: u64 = 64;
    let strata = STRATA.min(samples / 2).max(1);
    let width = s_max / strata as f64;
    let base = samples / strata;
    let remainder = samples % strata;

    let mut value = 0.0;
    let mut variance = 0.0;
    let mut total = 0u64;
    for k in 0..strata {
        let quota = base + u64::from(k < remainder);
        let mut rng = SplitMix64::substream(seed, k);
        let left = width * k as f64;
        let mut moments = RunningMoments::default();
        for _ in 0..quota {
            let s = left + width * rng.next_f64_open();
            let lo = t_lower(s);
            let hi = t_upper(s);
            let range = hi - lo;
            let sample = if range > 0.0 {
                let t = lo + range * rng.next_f64_open();
                width * range * integrand(s, t)
            } else {
                0.0
            };
            moments.push(sample);
        }
        total += quota;
        value += moments.mean();
        variance += moments.variance_of_mean();
    }
    McEstimate {
        value,
        std_error: variance.sqrt(),
        samples: total,
        seed,
    }
}
