//! Primitive lattice vector counting on the square torus.
//!
//! Closed geodesics on the standard torus R^2/Z^2 correspond to primitive
//! integer vectors (p, q) with gcd(p, q) = 1, counted with both orientations.
//! Their density among all integer vectors in a growing disc tends to
//! 1/zeta(2) = 6/pi^2, which is the torus row of the constants in
//! [`crate::ratios`]. This module does the count exactly so that rate of
//! convergence can be inspected numerically.

use serde::Serialize;

/// Exact count of primitive vectors in a closed disc, with the density of the
/// count relative to the disc area.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LatticeCount {
    /// Disc radius (vectors with p^2 + q^2 <= radius^2 are counted).
    pub radius: u32,
    /// Number of primitive vectors in the disc, all four quadrants, axis
    /// vectors included.
    pub count: u64,
    /// `count / (pi * radius^2)`.
    pub density: f64,
}

/// Counts primitive integer vectors (p, q) != (0, 0) with p^2 + q^2 <= L^2.
///
/// The boundary circle is included; for integer L the comparison
/// p^2 + q^2 <= L^2 is exact in u64, so no floating point rounding can leak
/// vectors across the boundary. Runs one sieve per column: column x marks the
/// multiples of each prime factor of x, so a row entry survives exactly when
/// gcd(x, y) = 1. Time is O(L^2 log log L), memory O(L).
pub fn count_primitive(radius: u32) -> LatticeCount {
    assert!(radius >= 1, "radius must be >= 1");
    let l = u64::from(radius);
    let l_sq = l * l;

    // Vectors on the axes: (±k, 0) and (0, ±k) are primitive only for k = 1,
    // since gcd(k, 0) = k.
    let mut count: u64 = 4;

    // Count the open quadrant x >= 1, y >= 1 and multiply by 4 at the end.
    let mut coprime = vec![true; radius as usize + 1];
    let mut quadrant: u64 = 0;
    for x in 1..=l {
        let x_sq = x * x;
        if x_sq + 1 > l_sq {
            break;
        }
        // Height of the column: largest y with x^2 + y^2 <= L^2.
        let mut y_max = integer_sqrt(l_sq - x_sq);
        if y_max > l {
            y_max = l;
        }
        if x == 1 {
            quadrant += y_max;
            continue;
        }
        for flag in coprime.iter_mut().take(y_max as usize + 1).skip(1) {
            *flag = true;
        }
        let mut remaining = x;
        let mut factor = 2u64;
        while factor * factor <= remaining {
            if remaining % factor == 0 {
                let mut multiple = factor;
                while multiple <= y_max {
                    coprime[multiple as usize] = false;
                    multiple += factor;
                }
                while remaining % factor == 0 {
                    remaining /= factor;
                }
            }
            factor += 1;
        }
        if remaining > 1 {
            let mut multiple = remaining;
            while multiple <= y_max {
                coprime[multiple as usize] = false;
                multiple += remaining;
            }
        }
        quadrant += coprime[1..=y_max as usize].iter().filter(|&&c| c).count() as u64;
    }
    count += 4 * quadrant;

    let area = std::f64::consts::PI * (radius as f64) * (radius as f64);
    LatticeCount {
        radius,
        count,
        density: count as f64 / area,
    }
}

/// Counts at each radius in the slice, for convergence tables.
pub fn convergence_table(radii: &[u32]) -> Vec<LatticeCount> {
    radii.iter().map(|&r| count_primitive(r)).collect()
}

/// Floor of sqrt(n), exact for all u64.
fn integer_sqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut guess = (n as f64).sqrt() as u64;
    // The float estimate is off by at most one in either direction for inputs
    // this size; nudge it onto the exact floor.
    while guess.checked_mul(guess).map_or(true, |sq| sq > n) {
        guess -= 1;
    }
    while (guess + 1).checked_mul(guess + 1).map_or(false, |sq| sq <= n) {
        guess += 1;
    }
    guess
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;

    /// O(L^2) gcd-per-point reference count.
    fn brute_force(radius: u32) -> u64 {
        let l = i64::from(radius);
        let l_sq = l * l;
        let mut count = 0u64;
        for p in -l..=l {
            for q in -l..=l {
                if (p, q) == (0, 0) || p * p + q * q > l_sq {
                    continue;
                }
                if p.gcd(&q) == 1 {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn sieve_matches_gcd_count_through_radius_fifty() {
        for radius in 1..=50 {
            assert_eq!(
                count_primitive(radius).count,
                brute_force(radius),
                "radius {radius}"
            );
        }
    }

    #[test]
    fn small_radii_by_hand() {
        // L = 1: the four unit vectors.
        assert_eq!(count_primitive(1).count, 4);
        // L = 2: unit vectors plus (±1, ±1).
        assert_eq!(count_primitive(2).count, 8);
    }

    #[test]
    fn count_is_divisible_by_four() {
        // (p, q) -> (-q, p) is a free 4-cycle on primitive vectors.
        for radius in [1, 2, 3, 5, 10, 77, 200] {
            assert_eq!(count_primitive(radius).count % 4, 0, "radius {radius}");
        }
    }

    #[test]
    fn density_approaches_six_over_pi_squared() {
        let limit = 6.0 / (std::f64::consts::PI * std::f64::consts::PI);
        let at_100 = count_primitive(100).density;
        let at_1000 = count_primitive(1000).density;
        assert!((at_100 - limit).abs() < 2e-2);
        assert!((at_1000 - limit).abs() < 2e-3);
        assert!((at_1000 - limit).abs() < (at_100 - limit).abs());
    }

    #[test]
    fn density_at_radius_one_is_four_over_pi() {
        let lc = count_primitive(1);
        assert!((lc.density - 4.0 / std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn integer_sqrt_exact() {
        for n in 0..2000u64 {
            let root = integer_sqrt(n);
            assert!(root * root <= n && (root + 1) * (root + 1) > n, "n={n}");
        }
        assert_eq!(integer_sqrt(u64::MAX), (1u64 << 32) - 1);
    }

    #[test]
    fn table_rows_match_single_counts() {
        let table = convergence_table(&[3, 7, 20]);
        assert_eq!(table.len(), 3);
        for row in &table {
            assert_eq!(row.count, count_primitive(row.radius).count);
        }
    }
}
