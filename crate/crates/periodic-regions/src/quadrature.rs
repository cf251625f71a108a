//! Adaptive Gauss-Kronrod quadrature.
//!
//! A 7-point Gauss rule nested in a 15-point Kronrod rule gives both an
//! integral estimate and an error estimate per interval; the adaptive driver
//! repeatedly bisects the interval with the largest estimated error until the
//! requested tolerance is met. The error rescaling follows the classic
//! QUADPACK recipe, which is conservative near roundoff level and robust for
//! integrands with mild endpoint singularities (the rule never evaluates the
//! endpoints themselves).
//!
//! The engine is generic over the floating scalar so the same tables serve
//! f32 and f64; all tabulated abscissae and weights are stored at f64
//! precision and narrowed on use.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_traits::{Float, FromPrimitive};

/// Floating scalar usable by the quadrature engine.
///
/// Implemented for `f32` and `f64`. The bound set is the smallest that allows
/// narrowing the coefficient tables and reporting errors as `f64`.
pub trait Real: Float + FromPrimitive + std::fmt::Debug {
    /// Narrow an f64 table entry into this scalar.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite table constant")
    }
    /// Widen for error bookkeeping.
    fn widen(self) -> f64 {
        self.to_f64().expect("finite scalar")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Kronrod abscissae for the 15-point rule on [-1, 1], positive half,
/// descending; even indices are Kronrod-only points, odd indices are the
/// embedded Gauss points, and the last entry is the center.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

/// Kronrod weights matching `XGK`.
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];

/// Gauss weights for the embedded 7-point rule; `WG[i]` pairs with
/// `XGK[2i + 1]` and the last entry with the center point.
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// Result of one quadrature run.
#[derive(Debug, Clone, Copy)]
pub struct QuadResult<F> {
    /// Integral estimate.
    pub value: F,
    /// Estimated absolute error.
    pub abs_error: f64,
    /// Number of integrand evaluations performed.
    pub evaluations: u64,
    /// Whether the tolerance was met before the interval budget ran out.
    pub converged: bool,
}

/// Tolerance and budget for an adaptive run.
#[derive(Debug, Clone, Copy)]
pub struct QuadTolerance {
    /// Stop when `abs_error <= max(abs_tol, rel_tol * |value|)`.
    pub rel_tol: f64,
    /// Absolute floor for the stopping rule; keep tiny so the relative
    /// criterion drives convergence even for integrals of small magnitude.
    pub abs_tol: f64,
    /// Maximum number of stored intervals before giving up.
    pub max_intervals: usize,
}

impl QuadTolerance {
    /// Relative-error driven tolerance with a generous interval budget.
    pub fn relative(rel_tol: f64) -> Self {
        QuadTolerance {
            rel_tol,
            abs_tol: 1e-300,
            max_intervals: 4096,
        }
    }

    /// Same stopping rule with a caller-chosen interval budget (used for
    /// inner integrals of iterated 2D quadrature, where each outer node pays
    /// for a full inner run).
    pub fn with_budget(rel_tol: f64, max_intervals: usize) -> Self {
        QuadTolerance {
            rel_tol,
            abs_tol: 1e-300,
            max_intervals,
        }
    }
}

struct Interval<F> {
    a: F,
    b: F,
    value: F,
    error: f64,
}

impl<F> PartialEq for Interval<F> {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl<F> Eq for Interval<F> {}
impl<F> PartialOrd for Interval<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<F> Ord for Interval<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .partial_cmp(&other.error)
            .unwrap_or(Ordering::Equal)
    }
}

/// Integrates `f` over `[a, b]` adaptively; `a <= b` expected.
///
/// The integrand is never evaluated at `a` or `b`, so integrable endpoint
/// behavior (for example a logarithm) is handled by refinement alone.
pub fn integrate<F: Real>(
    mut f: impl FnMut(F) -> F,
    a: F,
    b: F,
    tol: QuadTolerance,
) -> QuadResult<F> {
    if a == b {
        return QuadResult {
            value: F::zero(),
            abs_error: 0.0,
            evaluations: 0,
            converged: true,
        };
    }
    debug_assert!(a < b, "integrate expects an ordered interval");

    let mut evaluations = 0u64;
    let first = kronrod15(&mut f, a, b, &mut evaluations);
    let mut heap = BinaryHeap::new();
    let mut total_value = first.value;
    let mut total_error = first.error;
    heap.push(first);

    loop {
        let target = tol.abs_tol.max(tol.rel_tol * total_value.widen().abs());
        if total_error <= target {
            return QuadResult {
                value: total_value,
                abs_error: total_error,
                evaluations,
                converged: true,
            };
        }
        if heap.len() >= tol.max_intervals {
            return QuadResult {
                value: total_value,
                abs_error: total_error,
                evaluations,
                converged: false,
            };
        }
        let worst = heap.pop().expect("heap holds at least one interval");
        let mid = worst.a + (worst.b - worst.a) / F::of(2.0);
        if mid <= worst.a || mid >= worst.b {
            // Interval is at floating-point resolution; accept its estimate.
            let stuck = worst;
            total_error -= stuck.error;
            // Re-add with zero error so it stops being selected.
            heap.push(Interval { error: 0.0, ..stuck });
            continue;
        }
        let left = kronrod15(&mut f, worst.a, mid, &mut evaluations);
        let right = kronrod15(&mut f, mid, worst.b, &mut evaluations);
        total_value = total_value - worst.value + left.value + right.value;
        total_error = total_error - worst.error + left.error + right.error;
        heap.push(left);
        heap.push(right);
    }
}

/// One 15-point Kronrod evaluation on `[a, b]` with QUADPACK error rescaling.
fn kronrod15<F: Real>(
    f: &mut impl FnMut(F) -> F,
    a: F,
    b: F,
    evaluations: &mut u64,
) -> Interval<F> {
    let half = (b - a) / F::of(2.0);
    let center = a + half;
    let half_abs = half.abs().widen();

    let f_center = f(center);
    *evaluations += 15;

    let mut result_gauss = f_center * F::of(WG[3]);
    let mut result_kronrod = f_center * F::of(WGK[7]);
    let mut result_abs = f_center.abs() * F::of(WGK[7]);

    let mut samples = [(F::zero(), F::zero()); 7];
    for j in 0..7 {
        let offset = half * F::of(XGK[j]);
        let above = f(center + offset);
        let below = f(center - offset);
        samples[j] = (above, below);
        let pair = above + below;
        result_kronrod = result_kronrod + pair * F::of(WGK[j]);
        result_abs = result_abs + (above.abs() + below.abs()) * F::of(WGK[j]);
        if j % 2 == 1 {
            result_gauss = result_gauss + pair * F::of(WG[j / 2]);
        }
    }

    let mean = result_kronrod / F::of(2.0);
    let mut result_asc = (f_center - mean).abs() * F::of(WGK[7]);
    for j in 0..7 {
        let (above, below) = samples[j];
        result_asc =
            result_asc + ((above - mean).abs() + (below - mean).abs()) * F::of(WGK[j]);
    }

    let value = result_kronrod * half;
    let raw_error = ((result_kronrod - result_gauss) * half).widen().abs();
    let error = rescale_error(
        raw_error,
        result_abs.widen() * half_abs,
        result_asc.widen() * half_abs,
    );

    Interval { a, b, value, error }
}

/// QUADPACK-style error rescaling: sharpen the raw Gauss/Kronrod difference
/// against the integrand's variation, then floor at roundoff level.
fn rescale_error(mut err: f64, result_abs: f64, result_asc: f64) -> f64 {
    err = err.abs();
    if result_asc != 0.0 && err != 0.0 {
        let scale = (200.0 * err / result_asc).powf(1.5);
        err = if scale < 1.0 {
            result_asc * scale
        } else {
            result_asc
        };
    }
    let min_positive = f64::MIN_POSITIVE / (50.0 * f64::EPSILON);
    if result_abs > min_positive {
        err = err.max(50.0 * f64::EPSILON * result_abs);
    }
    err
}
