//! Dense polynomials with exact rational coefficients.
//!
//! The tail-distribution formulas are polynomials in the area fraction `x`.
//! Carrying them symbolically lets tests check identities coefficient by
//! coefficient (zero tolerance) and lets the CLI evaluate distribution grids
//! without floating-point drift.

use num_traits::{One, Zero};

use crate::Rational;

/// Polynomial in one variable, dense ascending coefficients.
///
/// The zero polynomial is represented by an empty coefficient list; all
/// constructors trim trailing zeros so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// The constant polynomial `c`.
    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::new(vec![Rational::zero(), Rational::one()])
    }

    /// Ascending coefficients (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rational::from_integer(k.into()))
            .collect();
        Poly::new(coeffs)
    }

    /// Sum of two polynomials.
    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Poly::new(coeffs)
    }

    /// Product of two polynomials (schoolbook; degrees here stay tiny).
    pub fn mul(&self, other: &Poly) -> Poly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Poly::new(Vec::new());
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs)
    }

    /// Scales every coefficient by `c`.
    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `self^k` by repeated multiplication; `k = 0` gives 1.
    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::constant(Rational::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// The binomial `1 - x`, the base of every tail polynomial here.
    pub fn one_minus_x() -> Poly {
        Poly::new(vec![Rational::one(), -Rational::one()])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn eval_and_derivative() {
        // p(x) = 1 - 2x + 3x^2
        let p = Poly::new(vec![ratio(1, 1), ratio(-2, 1), ratio(3, 1)]);
        assert_eq!(p.eval(&ratio(1, 2)), ratio(3, 4));
        let dp = p.derivative();
        assert_eq!(dp, Poly::new(vec![ratio(-2, 1), ratio(6, 1)]));
        assert_eq!(dp.eval(&ratio(0, 1)), ratio(-2, 1));
    }

    #[test]
    fn pow_of_one_minus_x() {
        let p = Poly::one_minus_x().pow(3);
        // (1-x)^3 = 1 - 3x + 3x^2 - x^3
        assert_eq!(
            p,
            Poly::new(vec![ratio(1, 1), ratio(-3, 1), ratio(3, 1), ratio(-1, 1)])
        );
        assert_eq!(Poly::one_minus_x().pow(0), Poly::constant(ratio(1, 1)));
    }

    #[test]
    fn zero_polynomial_is_trimmed() {
        let z = Poly::new(vec![ratio(0, 1), ratio(0, 1)]);
        assert_eq!(z.degree(), None);
        assert_eq!(z.eval(&ratio(5, 1)), ratio(0, 1));
        let p = Poly::x().mul(&z);
        assert_eq!(p.degree(), None);
    }

    #[test]
    fn product_distributes_over_evaluation() {
        let p = Poly::new(vec![ratio(2, 1), ratio(1, 1)]);
        let q = Poly::one_minus_x().pow(2);
        let x = ratio(3, 7);
        assert_eq!(p.mul(&q).eval(&x), p.eval(&x) * q.eval(&x));
    }
}
