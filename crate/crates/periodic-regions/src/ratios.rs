//! Exact ratio formulas for cylinder counting asymptotics.
//!
//! Counting closed geodesics (or cylinders, or cylinders weighted by a power
//! `p` of their area) in a fixed topological configuration leads to Siegel-
//! Veech constants of the shape
//!
//! ```text
//!   c = (combinatorial rational) * M * (volume ratio)
//! ```
//!
//! where `M` is a counting multiplicity and the volume ratio compares a
//! degenerate stratum with the ambient one. Neither factor is computable at
//! desk scale, so they stay opaque symbols here, while every combinatorial
//! rational and every ratio BETWEEN such constants (where the symbols cancel)
//! is evaluated exactly. All functions are pure; everything is big-rational.
//!
//! Conventions: `n` is the dimension of the degenerate stratum, `q` the number
//! of cylinders, `d = n + q + 1` the ambient dimension, `x` an area fraction
//! in `[0, 1)`, and `p >= 0` a rational area exponent.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::{binomial, display_rational, factorial, rising_product};
use crate::poly::Poly;
use crate::Rational;

/// A Siegel-Veech constant kept partly symbolic.
///
/// `rational_coefficient` is exact; `m_factor` and `volume_ratio` name the two
/// opaque factors. The volume normalization denominator is written
/// inconsistently across presentations of these constants (the ambient stratum
/// volume versus the component volume), so the whole ratio stays a single
/// uninterpreted symbol rather than committing to one reading.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicSvConstant {
    /// Name of the counting multiplicity factor.
    pub m_factor: String,
    /// Name of the volume-ratio factor.
    pub volume_ratio: String,
    /// Exact combinatorial coefficient; always positive.
    pub rational_coefficient: Rational,
}

impl fmt::Display for SymbolicSvConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) * {} * {}",
            display_rational(&self.rational_coefficient),
            self.m_factor,
            self.volume_ratio
        )
    }
}

/// Which closed-form family a [`RatioReport`] value came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum FormulaId {
    SvcAreaP,
    MeanAreaP,
    AreaPConfRatio,
    FirstCylTail,
    RegionTail,
    RegionTailAsymptote,
    CorrelationRatio,
}

/// Exact value of one ratio formula: a rational number, or a polynomial in
/// the area fraction `x` when reported symbolically.
#[derive(Debug, Clone, PartialEq)]
pub enum RatioValue {
    Rational(Rational),
    Polynomial(Poly),
}

/// One evaluated formula, tagged by family.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioReport {
    pub formula_id: FormulaId,
    pub value: RatioValue,
}

fn assert_unit_interval(x: &Rational) {
    assert!(
        !x.is_negative() && *x < Rational::one(),
        "area fraction must lie in [0, 1), got {}",
        display_rational(x)
    );
}

fn assert_nonnegative(p: &Rational) {
    assert!(
        !p.is_negative(),
        "area exponent must be >= 0, got {}",
        display_rational(p)
    );
}

/// Siegel-Veech constant for counting cylinders weighted by `area^p`, as a
/// symbolic constant with exact coefficient
/// `(n-1)! * q / ((p+1)(p+2)...(p+q+n-1))`.
///
/// For integer `p` the denominator telescopes into a factorial quotient; for
/// rational `p` it stays an exact product of `q+n-1` shifted factors. The
/// structural relation "cylinder count = q * configuration count" is visible
/// as the bare `q` in the numerator.
pub fn svc_area_p(n: u32, q: u32, p: &Rational) -> SymbolicSvConstant {
    assert!(n >= 1 && q >= 1, "svc_area_p needs n, q >= 1");
    assert_nonnegative(p);
    let numerator = Rational::from_integer(factorial(u64::from(n) - 1) * BigInt::from(q));
    let denominator = rising_product(&(p + Rational::one()), q + n - 1);
    SymbolicSvConstant {
        m_factor: "M".into(),
        volume_ratio: "Vol(H1(alpha')) / Vol(K)".into(),
        rational_coefficient: numerator / denominator,
    }
}

/// Asymptotic mean `area^p` of the cylinder cut out by a counted geodesic in
/// an ambient stratum of dimension `d`:
/// `(d-2)! / ((p+1)(p+2)...(p+d-2))`.
///
/// For integer `p` this equals `1 / C(p+d-2, p)` exactly.
pub fn mean_area_p(d: u32, p: &Rational) -> Rational {
    assert!(d >= 3, "mean_area_p needs d >= 3");
    assert_nonnegative(p);
    Rational::from_integer(factorial(u64::from(d) - 2))
        / rising_product(&(p + Rational::one()), d - 2)
}

/// Asymptotic mean `(total area of the q cylinders)^p` in configuration
/// counting: `q(q+1)...(q+n-1) / ((p+q)(p+q+1)...(p+q+n-1))`.
pub fn area_p_conf_ratio(n: u32, q: u32, p: &Rational) -> Rational {
    assert!(n >= 1 && q >= 1, "area_p_conf_ratio needs n, q >= 1");
    assert_nonnegative(p);
    let q_rat = Rational::from_integer(BigInt::from(q));
    rising_product(&q_rat, n) / rising_product(&(p + q_rat), n)
}

/// Tail probability that the FIRST cylinder of the configuration carries area
/// fraction at least `x`: `(1-x)^{d-2}` in ambient dimension `d`.
pub fn first_cyl_tail(d: u32, x: &Rational) -> Rational {
    assert!(d >= 3, "first_cyl_tail needs d >= 3");
    assert_unit_interval(x);
    pow(&(Rational::one() - x), d - 2)
}

/// Tail probability that the TOTAL area of the q cylinders is at least `x`:
/// the regularized incomplete Beta `I(1-x; n, q)`, expanded as the exact
/// polynomial `(1-x)^n * sum_{k=0}^{q-1} C(n-1+k, k) x^k`.
pub fn region_tail(n: u32, q: u32, x: &Rational) -> Rational {
    assert_unit_interval(x);
    region_tail_poly(n, q).eval(x)
}

/// The polynomial behind [`region_tail`], exact in `x`.
///
/// Exposed so distribution grids and derivative checks can work
/// coefficient-wise. The polynomial extends continuously to `x = 1` with
/// value 0, which is how CSV grids may include the right endpoint.
pub fn region_tail_poly(n: u32, q: u32) -> Poly {
    assert!(n >= 1 && q >= 1, "region_tail needs n, q >= 1");
    let mut sum = Poly::constant(Rational::zero());
    for k in 0..q {
        let coeff = Rational::from_integer(binomial(i64::from(n) + i64::from(k) - 1, k.into()));
        let mut coeffs = vec![Rational::zero(); k as usize + 1];
        coeffs[k as usize] = coeff;
        sum = sum.add(&Poly::new(coeffs));
    }
    Poly::one_minus_x().pow(n).mul(&sum)
}

/// Leading coefficient of `region_tail` as `x -> 1`:
/// `region_tail(n, q, x) ~ C(n+q-1, n) * (1-x)^n`.
pub fn region_tail_asymptote(n: u32, q: u32) -> Rational {
    assert!(n >= 1 && q >= 1, "region_tail_asymptote needs n, q >= 1");
    Rational::from_integer(binomial(i64::from(n + q) - 1, i64::from(n)))
}

/// Conditional tail for a second counted geodesic given the first one used up
/// area fraction `x`: `(1-x)^{d-3}`. The conditioning fraction of the first
/// geodesic drops out entirely, so it does not appear in the signature.
pub fn correlation_ratio(d: u32, x: &Rational) -> Rational {
    assert!(
        d >= 4,
        "correlation_ratio needs ambient dimension >= 4 (two cylinders)"
    );
    assert_unit_interval(x);
    pow(&(Rational::one() - x), d - 3)
}

/// One multiplicative factor of a disconnected-stratum volume.
#[derive(Debug, Clone, PartialEq)]
pub enum VolumeFactor {
    /// An opaque component volume, kept by name.
    Symbol(String),
    /// A known numeric volume, folded into the rational coefficient.
    Number(Rational),
}

/// Volume of a disconnected stratum as a symbolic product over components:
/// `(1/2^{k-1}) * (prod (n_i - 1)!) / (n-1)! * prod Vol_i` with
/// `n = sum n_i` over the `k` components.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolicVolumeProduct {
    pub rational_coefficient: Rational,
    pub symbols: Vec<String>,
}

impl fmt::Display for SymbolicVolumeProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", display_rational(&self.rational_coefficient))?;
        for s in &self.symbols {
            write!(f, " * {s}")?;
        }
        Ok(())
    }
}

/// Combines per-component volumes into the volume of the disconnected whole.
///
/// `component_dims` lists the component dimensions `n_i >= 1`; `component_vols`
/// the matching volume factors. Numeric factors are folded into the rational
/// coefficient, symbols are kept in order.
pub fn boundary_volume_product(
    component_dims: &[u32],
    component_vols: &[VolumeFactor],
) -> SymbolicVolumeProduct {
    let k = component_dims.len();
    assert!(k >= 1, "need at least one component");
    assert_eq!(k, component_vols.len(), "one volume per component");
    assert!(
        component_dims.iter().all(|&n| n >= 1),
        "component dimensions must be >= 1"
    );
    let n_total: u64 = component_dims.iter().map(|&n| u64::from(n)).sum();
    let mut coefficient = Rational::new(
        BigInt::one(),
        BigInt::from(2u32).pow(k as u32 - 1) * factorial(n_total - 1),
    );
    for &n_i in component_dims {
        coefficient *= Rational::from_integer(factorial(u64::from(n_i) - 1));
    }
    let mut symbols = Vec::new();
    for vol in component_vols {
        match vol {
            VolumeFactor::Symbol(name) => symbols.push(name.clone()),
            VolumeFactor::Number(value) => coefficient *= value,
        }
    }
    SymbolicVolumeProduct {
        rational_coefficient: coefficient,
        symbols,
    }
}

/// An exact multiple of a power of pi (optionally carrying a power of the
/// cutoff `eps`), so that pi-bearing constants can be combined and compared
/// without floating point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiPower {
    pub rational: Rational,
    pub pi_exp: i32,
    pub eps_exp: i32,
}

impl PiPower {
    pub fn new(rational: Rational, pi_exp: i32, eps_exp: i32) -> Self {
        PiPower {
            rational,
            pi_exp,
            eps_exp,
        }
    }

    /// Exact product.
    pub fn mul(&self, other: &PiPower) -> PiPower {
        PiPower {
            rational: &self.rational * &other.rational,
            pi_exp: self.pi_exp + other.pi_exp,
            eps_exp: self.eps_exp + other.eps_exp,
        }
    }

    /// Exact quotient.
    pub fn div(&self, other: &PiPower) -> PiPower {
        assert!(!other.rational.is_zero(), "division by zero PiPower");
        PiPower {
            rational: &self.rational / &other.rational,
            pi_exp: self.pi_exp - other.pi_exp,
            eps_exp: self.eps_exp - other.eps_exp,
        }
    }

    /// Numeric value at a given cutoff (irrelevant when `eps_exp` is 0).
    pub fn to_f64(&self, eps: f64) -> f64 {
        let rational = self.rational.to_f64().unwrap_or(f64::NAN);
        rational * std::f64::consts::PI.powi(self.pi_exp) * eps.powi(self.eps_exp)
    }
}

impl fmt::Display for PiPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut numerator: Vec<String> = Vec::new();
        let mut denominator: Vec<String> = Vec::new();
        let numer = self.rational.numer();
        let denom = self.rational.denom();
        if !numer.is_one() || (self.pi_exp <= 0 && self.eps_exp <= 0) {
            numerator.push(numer.to_string());
        }
        if !denom.is_one() {
            denominator.push(denom.to_string());
        }
        let power = |base: &str, e: i32| {
            if e.abs() == 1 {
                base.to_string()
            } else {
                format!("{base}^{}", e.abs())
            }
        };
        if self.pi_exp > 0 {
            numerator.push(power("pi", self.pi_exp));
        } else if self.pi_exp < 0 {
            denominator.push(power("pi", self.pi_exp));
        }
        if self.eps_exp > 0 {
            numerator.push(power("eps", self.eps_exp));
        } else if self.eps_exp < 0 {
            denominator.push(power("eps", self.eps_exp));
        }
        if numerator.is_empty() {
            numerator.push("1".into());
        }
        let num = numerator.join("*");
        match denominator.len() {
            0 => write!(f, "{num}"),
            1 => write!(f, "{num}/{}", denominator[0]),
            _ => write!(f, "{num}/({})", denominator.join("*")),
        }
    }
}

/// The Siegel-Veech constant of the flat torus with the computation that
/// produces it: counting primitive lattice vectors, one cylinder each, gives
/// density `6/pi^2 = 1/zeta(2)` of all lattice vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusConstant {
    /// `6/pi^2`.
    pub value: PiPower,
    /// Volume `2*pi*eps^2` of the thin part where the torus has a cylinder of
    /// waist shorter than `eps`.
    pub cusp_volume: PiPower,
    /// Normalized volume `pi^2/3` of the moduli space of unit-area tori.
    pub moduli_volume: PiPower,
}

impl TorusConstant {
    /// Recomputes the constant from the two volumes:
    /// `cusp_volume / (pi * eps^2 * moduli_volume)`, exactly.
    pub fn from_derivation(&self) -> PiPower {
        let quadratic_growth = PiPower::new(Rational::one(), 1, 2);
        self.cusp_volume
            .div(&quadratic_growth)
            .div(&self.moduli_volume)
    }
}

/// Returns `6/pi^2` with its structured derivation.
pub fn torus_constant() -> TorusConstant {
    TorusConstant {
        value: PiPower::new(Rational::from_integer(6.into()), -2, 0),
        cusp_volume: PiPower::new(Rational::from_integer(2.into()), 1, 2),
        moduli_volume: PiPower::new(Rational::new(BigInt::one(), BigInt::from(3)), 2, 0),
    }
}

fn pow(x: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..k {
        acc *= x;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn svc_coefficient_special_cases() {
        // p = 0: (n-1)! q / (n+q-1)!.
        for n in 1..=5u32 {
            for q in 1..=5u32 {
                let c = svc_area_p(n, q, &ratio(0, 1)).rational_coefficient;
                let expected = Rational::new(
                    factorial(u64::from(n) - 1) * BigInt::from(q),
                    factorial(u64::from(n + q) - 1),
                );
                assert_eq!(c, expected, "n={n} q={q}");
            }
        }
        // p = 1: (n-1)! q / (n+q)!.
        let c = svc_area_p(3, 2, &ratio(1, 1)).rational_coefficient;
        assert_eq!(c, Rational::new(BigInt::from(2 * 2), factorial(5)));
        // n=2, q=1, p=0: 1/2.
        assert_eq!(
            svc_area_p(2, 1, &ratio(0, 1)).rational_coefficient,
            ratio(1, 2)
        );
        // Fractional p: n=1, q=2, p=1/2 gives 2/((3/2)(5/2)) = 8/15.
        assert_eq!(
            svc_area_p(1, 2, &ratio(1, 2)).rational_coefficient,
            ratio(8, 15)
        );
    }

    #[test]
    fn svc_cylinder_equals_q_times_configuration() {
        // The cylinder-count coefficient is q times the configuration-count
        // coefficient (same formula with the q factor removed).
        for n in 1..=4 {
            for q in 1..=4 {
                for p in [ratio(0, 1), ratio(1, 2), ratio(1, 1), ratio(2, 1)] {
                    let cyl = svc_area_p(n, q, &p).rational_coefficient;
                    let conf = &cyl / Rational::from_integer(q.into());
                    assert_eq!(cyl, conf * Rational::from_integer(q.into()));
                }
            }
        }
    }

    #[test]
    fn mean_area_examples() {
        assert_eq!(mean_area_p(4, &ratio(1, 1)), ratio(1, 3));
        assert_eq!(mean_area_p(7, &ratio(0, 1)), ratio(1, 1));
        assert_eq!(mean_area_p(5, &ratio(2, 1)), ratio(1, 10));
    }

    #[test]
    fn mean_area_integer_p_is_inverse_binomial() {
        for d in 3..=40u32 {
            for p in 0..=6i64 {
                let direct = mean_area_p(d, &ratio(p, 1));
                let via_binomial = Rational::new(
                    BigInt::one(),
                    binomial(p + i64::from(d) - 2, p),
                );
                assert_eq!(direct, via_binomial, "d={d} p={p}");
            }
        }
    }

    #[test]
    fn mean_area_vorobets_row() {
        for d in 3..=40u32 {
            assert_eq!(mean_area_p(d, &ratio(1, 1)), ratio(1, i64::from(d) - 1));
        }
    }

    #[test]
    fn conf_ratio_relations() {
        for n in 1..=6u32 {
            for q in 1..=6u32 {
                assert_eq!(area_p_conf_ratio(n, q, &ratio(0, 1)), ratio(1, 1));
                assert_eq!(
                    area_p_conf_ratio(n, q, &ratio(1, 1)),
                    ratio(i64::from(q), i64::from(q + n))
                );
            }
        }
        // q = 1 reduces to the single-cylinder mean with d = n + 2.
        for n in 1..=6u32 {
            for p in [ratio(0, 1), ratio(1, 2), ratio(1, 1), ratio(5, 2)] {
                assert_eq!(area_p_conf_ratio(n, 1, &p), mean_area_p(n + 2, &p));
            }
        }
    }

    #[test]
    fn tail_formulas_agree() {
        let x = ratio(1, 2);
        assert_eq!(first_cyl_tail(4, &x), ratio(1, 4));
        assert_eq!(first_cyl_tail(4, &ratio(0, 1)), ratio(1, 1));
        // region_tail with one cylinder is the first-cylinder tail.
        for n in 1..=8u32 {
            for x in [ratio(0, 1), ratio(1, 4), ratio(2, 3)] {
                assert_eq!(region_tail(n, 1, &x), first_cyl_tail(n + 2, &x));
            }
        }
        // Worked value: n=2, q=2, x=1/2.
        assert_eq!(region_tail(2, 2, &ratio(1, 2)), ratio(1, 2));
    }

    #[test]
    fn region_tail_is_regularized_incomplete_beta() {
        use crate::special::regularized_incomplete_beta_exact;
        for n in 1..=6u64 {
            for q in 1..=6u64 {
                for x in [ratio(0, 1), ratio(1, 4), ratio(1, 2), ratio(3, 4)] {
                    let tail = region_tail(n as u32, q as u32, &x);
                    let beta = regularized_incomplete_beta_exact(
                        &(Rational::one() - &x),
                        n,
                        q,
                    );
                    assert_eq!(tail, beta, "n={n} q={q}");
                }
            }
        }
    }

    #[test]
    fn region_tail_derivative_is_negative_density() {
        use crate::special::beta_exact;
        for n in 1..=10u32 {
            for q in 1..=10u32 {
                let derivative = region_tail_poly(n, q).derivative();
                // Expected: -(x^{q-1} (1-x)^{n-1}) / B(n, q), as a polynomial.
                let mut xq = vec![Rational::zero(); q as usize];
                xq[q as usize - 1] = -beta_exact(n.into(), q.into()).recip();
                let expected = Poly::new(xq).mul(&Poly::one_minus_x().pow(n - 1));
                assert_eq!(derivative, expected, "n={n} q={q}");
                // Strictly negative on a rational grid inside (0, 1).
                for i in 1..8 {
                    let x = ratio(i, 8);
                    assert!(derivative.eval(&x).is_negative(), "n={n} q={q} x={i}/8");
                }
            }
        }
    }

    #[test]
    fn region_tail_asymptote_matches_limit() {
        for n in 1..=8u32 {
            for q in 1..=8u32 {
                // region_tail / (1-x)^n is a polynomial; its value at x = 1
                // is the asymptote coefficient.
                let mut sum = Rational::zero();
                for k in 0..q {
                    sum += Rational::from_integer(binomial(
                        i64::from(n + k) - 1,
                        i64::from(k),
                    ));
                }
                assert_eq!(sum, region_tail_asymptote(n, q), "n={n} q={q}");
            }
        }
        assert_eq!(region_tail_asymptote(2, 2), ratio(3, 1));
        assert_eq!(region_tail_asymptote(1, 3), ratio(3, 1));
        assert_eq!(region_tail_asymptote(5, 1), ratio(1, 1));
    }

    #[test]
    fn correlation_chain() {
        for d in 4..=12u32 {
            for x in [ratio(0, 1), ratio(1, 4), ratio(1, 2), ratio(7, 8)] {
                let corr = correlation_ratio(d, &x);
                assert_eq!(corr, first_cyl_tail(d, &x) / (Rational::one() - &x));
                assert_eq!(corr, first_cyl_tail(d - 1, &x));
            }
        }
        assert_eq!(correlation_ratio(5, &ratio(1, 2)), ratio(1, 4));
    }

    #[test]
    fn volume_product_examples() {
        let one = boundary_volume_product(&[3], &[VolumeFactor::Symbol("Vol1".into())]);
        assert_eq!(one.rational_coefficient, ratio(1, 1));
        assert_eq!(one.symbols, vec!["Vol1".to_string()]);

        let two = boundary_volume_product(
            &[2, 2],
            &[
                VolumeFactor::Symbol("Vol1".into()),
                VolumeFactor::Symbol("Vol2".into()),
            ],
        );
        assert_eq!(two.rational_coefficient, ratio(1, 12));

        let pair = boundary_volume_product(
            &[1, 1],
            &[
                VolumeFactor::Symbol("Vol1".into()),
                VolumeFactor::Symbol("Vol2".into()),
            ],
        );
        assert_eq!(pair.rational_coefficient, ratio(1, 2));

        // Numeric factors fold into the coefficient.
        let folded = boundary_volume_product(
            &[2, 2],
            &[
                VolumeFactor::Number(ratio(3, 1)),
                VolumeFactor::Symbol("Vol2".into()),
            ],
        );
        assert_eq!(folded.rational_coefficient, ratio(1, 4));
        assert_eq!(folded.symbols, vec!["Vol2".to_string()]);
    }

    #[test]
    fn torus_constant_value_and_derivation() {
        let tc = torus_constant();
        assert_eq!(tc.value, PiPower::new(ratio(6, 1), -2, 0));
        assert_eq!(tc.from_derivation(), tc.value);
        let numeric = tc.value.to_f64(1.0);
        assert!((numeric - 0.607927).abs() < 1e-6);
        assert_eq!(tc.value.to_string(), "6/pi^2");
        assert_eq!(tc.cusp_volume.to_string(), "2*pi*eps^2");
        assert_eq!(tc.moduli_volume.to_string(), "pi^2/3");
    }

    #[test]
    fn torus_constant_is_inverse_zeta_two_to_twelve_digits() {
        // zeta(2) by partial sums with a rigorous integral bracket:
        // sum_{k<=N} + 1/(N+1) < zeta(2) < sum_{k<=N} + 1/N.
        let n = 1_000_000u64;
        let mut partial = 0.0f64;
        for k in (1..=n).rev() {
            let kf = k as f64;
            partial += 1.0 / (kf * kf);
        }
        let lower = partial + 1.0 / (n as f64 + 1.0);
        let upper = partial + 1.0 / n as f64;
        let zeta2 = 0.5 * (lower + upper);
        assert!(upper - lower < 2e-12, "bracket width {}", upper - lower);
        let inverse = 1.0 / zeta2;
        assert!(
            (torus_constant().value.to_f64(1.0) - inverse).abs() < 1e-12,
            "6/pi^2 vs 1/zeta(2)"
        );
    }

    #[test]
    fn pi_power_display_forms() {
        assert_eq!(PiPower::new(ratio(1, 2), 0, 0).to_string(), "1/2");
        assert_eq!(PiPower::new(ratio(1, 1), 1, 0).to_string(), "pi");
        assert_eq!(PiPower::new(ratio(2, 1), -1, -2).to_string(), "2/(pi*eps^2)");
        assert_eq!(PiPower::new(ratio(1, 1), 0, 0).to_string(), "1");
    }
}
