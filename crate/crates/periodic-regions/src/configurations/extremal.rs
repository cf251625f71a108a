//! Cylinder-count bounds per stratum and the exhaustive extremal search over
//! partitions of 2g - 2.

use num_bigint::BigInt;

use crate::strata::Stratum;
use crate::Rational;

/// Upper bound for the number of cylinders in any configuration inside the
/// stratum: the integer part of the total curvature weight, where a simple
/// zero weighs 1/2 and every higher zero weighs 1.
///
/// The bound is sharp for strata all of whose orders are even (an explicit
/// all-type-I chain reaches it) but not in general: it over-counts some
/// all-odd strata, where no chain of blocks can realize the value.
pub fn q_max(stratum: &Stratum) -> u32 {
    let ones = stratum.orders().iter().filter(|&&d| d == 1).count() as u32;
    let higher = stratum.num_zeros() - ones;
    // floor(higher + ones/2) with exact integers.
    higher + ones / 2
}

/// All integer partitions of `total` into parts >= 1, each part list
/// descending, in deterministic (reverse lexicographic) order.
pub fn partitions_of(total: u32) -> Vec<Vec<u32>> {
    fn extend(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        let cap = remaining.min(max_part);
        for part in (1..=cap).rev() {
            prefix.push(part);
            extend(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if total > 0 {
        extend(total, total, &mut Vec::new(), &mut out);
    }
    out
}

/// Result of maximizing `q_max(alpha) / (2g - 2 + m)` over all partitions
/// `alpha` of 2g - 2 into m parts.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtremalSearch {
    /// The maximizing partition, descending.
    pub best_partition: Vec<u32>,
    /// The exact maximal value.
    pub value: Rational,
    /// How many partitions were compared.
    pub candidates: usize,
    /// Whether a second partition attains the same value.
    pub unique: bool,
}

/// Exhaustively maximizes the mean-cylinder-count ratio over the partitions
/// of 2g - 2. The maximum is 1/3 for every genus, attained exactly by the
/// all-twos partition.
pub fn extremal_mean_area(genus: u32) -> ExtremalSearch {
    assert!(genus >= 2, "extremal search needs genus >= 2");
    let total = 2 * genus - 2;
    let mut best: Option<(Vec<u32>, Rational)> = None;
    let mut unique = true;
    let mut candidates = 0;
    for partition in partitions_of(total) {
        candidates += 1;
        let stratum = Stratum::new(partition.clone())
            .expect("partition parts are positive and sum to 2g - 2");
        let value = Rational::new(
            BigInt::from(q_max(&stratum)),
            BigInt::from(total + partition.len() as u32),
        );
        match &best {
            None => best = Some((partition, value)),
            Some((_, incumbent)) => {
                if value > *incumbent {
                    best = Some((partition, value));
                    unique = true;
                } else if value == *incumbent {
                    unique = false;
                }
            }
        }
    }
    let (best_partition, value) = best.expect("2g - 2 >= 2 has partitions");
    ExtremalSearch {
        best_partition,
        value,
        candidates,
        unique,
    }
}
