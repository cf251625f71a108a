//! Feasibility of configurations whose complementary pieces are all as
//! simple as possible: tori with boundary, cylinders, and at most one
//! genus-two piece.

use serde::Serialize;

use super::model::{Block, Configuration, FigureEight, PairOfHoles};
use crate::strata::{ComponentLabel, Stratum, StratumError};

/// Whether a component admits a configuration with only simple pieces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FeasibilityVerdict {
    /// Tori and cylinders suffice.
    Feasible,
    /// Tori and cylinders plus exactly one genus-two piece suffice (and the
    /// genus-two piece is unavoidable).
    FeasibleWithOneGenusTwoPiece,
    /// No such configuration exists in this component.
    Infeasible,
}

/// Verdict plus, when one exists, an explicit configuration realizing it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FeasibilityReport {
    pub verdict: FeasibilityVerdict,
    pub witness: Option<Configuration>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FeasibilityError {
    #[error(transparent)]
    Stratum(#[from] StratumError),
    /// The requested component does not occur in this stratum.
    #[error("stratum {stratum} has no {label} component")]
    LabelNotInStratum { stratum: String, label: ComponentLabel },
}

/// Decides whether the component `label` of the stratum admits a
/// configuration whose complementary pieces are only tori and cylinders
/// (plus one genus-two piece where unavoidable), and constructs a witness.
///
/// Hyperelliptic components never admit one: they allow at most two
/// homologous saddle connections, too few to cut the surface into such
/// simple pieces at genus 5 and beyond. Even-spin components of even genus
/// need exactly one genus-two piece; everything else works with tori and
/// cylinders alone.
pub fn simple_complement_feasibility(
    stratum: &Stratum,
    label: ComponentLabel,
) -> Result<FeasibilityReport, FeasibilityError> {
    let genus = stratum.genus();
    if genus < 5 {
        return Err(FeasibilityError::Stratum(StratumError::UnsupportedGenus {
            genus,
            min_genus: 5,
            operation: "simple-complement feasibility",
        }));
    }
    let components = stratum.classify_components()?;
    if !components.contains(&label) {
        return Err(FeasibilityError::LabelNotInStratum {
            stratum: stratum.to_string(),
            label,
        });
    }

    let report = match label {
        ComponentLabel::Hyperelliptic => FeasibilityReport {
            verdict: FeasibilityVerdict::Infeasible,
            witness: None,
        },
        ComponentLabel::NonHyperelliptic => FeasibilityReport {
            verdict: FeasibilityVerdict::Feasible,
            witness: Some(witness_with_odd_orders(stratum)),
        },
        ComponentLabel::OddSpin => FeasibilityReport {
            verdict: FeasibilityVerdict::Feasible,
            witness: Some(witness_all_cylinders(stratum)),
        },
        ComponentLabel::EvenSpin => {
            if genus % 2 == 1 {
                FeasibilityReport {
                    verdict: FeasibilityVerdict::Feasible,
                    witness: Some(witness_no_cylinders(stratum)),
                }
            } else {
                FeasibilityReport {
                    verdict: FeasibilityVerdict::FeasibleWithOneGenusTwoPiece,
                    witness: Some(witness_one_genus_two(stratum)),
                }
            }
        }
        ComponentLabel::Connected => unreachable!(
            "classification at genus >= 4 never reports a Connected label"
        ),
    };
    Ok(report)
}

/// `count` tori each carrying the boundary point at a regular point.
fn plain_tori(count: u32) -> Vec<FigureEight> {
    vec![FigureEight::plain_torus(); count as usize]
}

/// All orders even: one type I block of `d/2` tori per zero. Every gap is a
/// cylinder, every piece a torus, and the spin parity comes out odd.
fn witness_all_cylinders(stratum: &Stratum) -> Configuration {
    debug_assert!(stratum.all_orders_even());
    Configuration::new(
        stratum
            .orders()
            .iter()
            .map(|&d| Block::type_i(plain_tori(d / 2)))
            .collect(),
    )
}

/// All orders even, genus odd: one type III block of `d/2 - 1` tori per
/// zero, all gaps filled with pair-of-holes tori. No cylinders remain and
/// the spin parity is that of `g - 1`, which is even here.
fn witness_no_cylinders(stratum: &Stratum) -> Configuration {
    debug_assert!(stratum.all_orders_even());
    Configuration::new(
        stratum
            .orders()
            .iter()
            .map(|&d| {
                Block::type_iii(
                    PairOfHoles::plain_torus(),
                    plain_tori(d / 2 - 1),
                    PairOfHoles::plain_torus(),
                )
            })
            .collect(),
    )
}

/// All orders even, genus even: the no-cylinder chain with one pair-of-holes
/// surface upgraded to genus two, flipping the parity rule from `g - 1` to
/// `g`. If some zero has order 2 it moves into the interior of the genus-two
/// surface; otherwise the surface absorbs hole order 2 next to the largest
/// zero.
fn witness_one_genus_two(stratum: &Stratum) -> Configuration {
    debug_assert!(stratum.all_orders_even());
    let orders = stratum.orders();
    if let Some(position) = orders.iter().position(|&d| d == 2) {
        // Blocks for all other zeros; the order-2 zero lives inside the
        // genus-two surface sitting in the last gap.
        let remaining: Vec<u32> = orders
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != position)
            .map(|(_, &d)| d)
            .collect();
        let mut blocks: Vec<Block> = remaining
            .iter()
            .map(|&d| {
                Block::type_iii(
                    PairOfHoles::plain_torus(),
                    plain_tori(d / 2 - 1),
                    PairOfHoles::plain_torus(),
                )
            })
            .collect();
        let genus_two = PairOfHoles::new(0, 2, vec![2]);
        let last = blocks.len() - 1;
        blocks[last].pair_of_holes[1] = genus_two.clone();
        blocks[0].pair_of_holes[0] = genus_two;
        Configuration::new(blocks)
    } else {
        // Orders are all >= 4. The genus-two surface sits left of the block
        // of the largest zero with hole orders 2 and 0; that block drops one
        // torus to compensate for the extra boundary order.
        let genus_two_left = PairOfHoles::new(2, 2, vec![]);
        let genus_two_right = PairOfHoles::new(0, 2, vec![]);
        let mut blocks: Vec<Block> = orders
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                if i == 0 {
                    Block::type_iii(
                        genus_two_left.clone(),
                        plain_tori(d / 2 - 2),
                        PairOfHoles::plain_torus(),
                    )
                } else {
                    Block::type_iii(
                        PairOfHoles::plain_torus(),
                        plain_tori(d / 2 - 1),
                        PairOfHoles::plain_torus(),
                    )
                }
            })
            .collect();
        // The surface left of block 0 is the genus-two one; the block on the
        // other side of that gap must present the matching record.
        let last = blocks.len() - 1;
        blocks[last].pair_of_holes[1] = genus_two_right;
        Configuration::new(blocks)
    }
}

/// Some order odd: odd zeros pair up as type II blocks around a shared
/// pair-of-holes torus, even zeros become type I blocks.
fn witness_with_odd_orders(stratum: &Stratum) -> Configuration {
    let odd: Vec<u32> = stratum.orders().iter().copied().filter(|d| d % 2 == 1).collect();
    let even: Vec<u32> = stratum.orders().iter().copied().filter(|d| d % 2 == 0).collect();
    debug_assert!(odd.len() % 2 == 0, "odd orders pair up in any stratum");
    let mut blocks = Vec::new();
    for pair in odd.chunks(2) {
        // Cylinder, then the first zero's pieces, the shared torus, the
        // second zero's pieces, and the next cylinder.
        blocks.push(Block::type_ii(
            plain_tori((pair[0] - 1) / 2),
            PairOfHoles::plain_torus(),
            true,
        ));
        blocks.push(Block::type_ii(
            plain_tori((pair[1] - 1) / 2),
            PairOfHoles::plain_torus(),
            false,
        ));
    }
    for &d in &even {
        blocks.push(Block::type_i(plain_tori(d / 2)));
    }
    Configuration::new(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configurations::analysis::spin_parity;
    use crate::configurations::SpinParity;

    fn stratum(orders: &[u32]) -> Stratum {
        Stratum::new(orders.to_vec()).unwrap()
    }

    fn check_witness(s: &Stratum, report: &FeasibilityReport) {
        let witness = report.witness.as_ref().expect("feasible verdicts carry a witness");
        let analysis = witness.analyze().expect("witness validates");
        assert_eq!(&analysis.alpha, s, "witness lives in the right stratum");
        let genus_two_pieces = analysis
            .alpha_prime
            .components()
            .iter()
            .filter(|c| c.genus() == 2)
            .count();
        let higher = analysis
            .alpha_prime
            .components()
            .iter()
            .filter(|c| c.genus() > 2)
            .count();
        assert_eq!(higher, 0, "no piece beyond genus two");
        match report.verdict {
            FeasibilityVerdict::Feasible => assert_eq!(genus_two_pieces, 0),
            FeasibilityVerdict::FeasibleWithOneGenusTwoPiece => {
                assert_eq!(genus_two_pieces, 1)
            }
            FeasibilityVerdict::Infeasible => unreachable!(),
        }
    }

    #[test]
    fn hyperelliptic_components_are_infeasible() {
        for orders in [vec![8], vec![10], vec![4, 4], vec![5, 5]] {
            let s = stratum(&orders);
            let report =
                simple_complement_feasibility(&s, ComponentLabel::Hyperelliptic).unwrap();
            assert_eq!(report.verdict, FeasibilityVerdict::Infeasible);
            assert!(report.witness.is_none());
        }
    }

    #[test]
    fn odd_spin_witnesses_are_all_cylinder_chains() {
        for orders in [vec![8], vec![4, 4], vec![2, 2, 2, 2], vec![6, 2], vec![4, 2, 2]] {
            let s = stratum(&orders);
            let report = simple_complement_feasibility(&s, ComponentLabel::OddSpin).unwrap();
            assert_eq!(report.verdict, FeasibilityVerdict::Feasible);
            check_witness(&s, &report);
            let witness = report.witness.unwrap();
            assert_eq!(spin_parity(&witness), SpinParity::Odd);
            let analysis = witness.analyze().unwrap();
            assert_eq!(analysis.q, s.num_zeros(), "one cylinder per zero");
        }
    }

    #[test]
    fn even_spin_odd_genus_witnesses_avoid_genus_two() {
        // Genus 5 and 7 all-even strata.
        for orders in [vec![8], vec![4, 4], vec![2, 2, 2, 2], vec![12], vec![6, 6]] {
            let s = stratum(&orders);
            if s.genus() % 2 == 0 {
                continue;
            }
            let report = simple_complement_feasibility(&s, ComponentLabel::EvenSpin).unwrap();
            assert_eq!(report.verdict, FeasibilityVerdict::Feasible);
            check_witness(&s, &report);
            let witness = report.witness.unwrap();
            assert_eq!(spin_parity(&witness), SpinParity::Even);
            assert_eq!(witness.analyze().unwrap().q, 0);
        }
    }

    #[test]
    fn even_spin_even_genus_needs_one_genus_two_piece() {
        // Genus 6 all-even strata, with and without an order-2 zero.
        for orders in [vec![10], vec![6, 4], vec![4, 4, 2], vec![2, 2, 2, 2, 2]] {
            let s = stratum(&orders);
            assert_eq!(s.genus() % 2, 0);
            let report = simple_complement_feasibility(&s, ComponentLabel::EvenSpin).unwrap();
            assert_eq!(
                report.verdict,
                FeasibilityVerdict::FeasibleWithOneGenusTwoPiece
            );
            check_witness(&s, &report);
            let witness = report.witness.unwrap();
            assert_eq!(spin_parity(&witness), SpinParity::Even);
        }
    }

    #[test]
    fn odd_orders_pair_into_type_ii_witnesses() {
        for orders in [
            vec![5, 3],
            vec![7, 1],
            vec![3, 3, 1, 1],
            vec![5, 2, 1],
            vec![4, 3, 2, 1],
            vec![9, 1],
        ] {
            let s = stratum(&orders);
            let report =
                simple_complement_feasibility(&s, ComponentLabel::NonHyperelliptic).unwrap();
            assert_eq!(report.verdict, FeasibilityVerdict::Feasible);
            check_witness(&s, &report);
        }
    }

    #[test]
    fn rejected_inputs() {
        // Genus too small.
        let err = simple_complement_feasibility(&stratum(&[2, 2]), ComponentLabel::OddSpin)
            .unwrap_err();
        assert!(matches!(
            err,
            FeasibilityError::Stratum(StratumError::UnsupportedGenus { genus: 3, .. })
        ));

        // Label absent from the stratum: no spin components with odd orders.
        let err = simple_complement_feasibility(&stratum(&[5, 3]), ComponentLabel::OddSpin)
            .unwrap_err();
        assert!(matches!(err, FeasibilityError::LabelNotInStratum { .. }));

        // Hyperelliptic only exists for the two special shapes.
        let err =
            simple_complement_feasibility(&stratum(&[6, 2]), ComponentLabel::Hyperelliptic)
                .unwrap_err();
        assert!(matches!(err, FeasibilityError::LabelNotInStratum { .. }));

        // Connected is never a genus >= 5 label.
        let err = simple_complement_feasibility(&stratum(&[8]), ComponentLabel::Connected)
            .unwrap_err();
        assert!(matches!(err, FeasibilityError::LabelNotInStratum { .. }));
    }

    #[test]
    fn single_zero_even_genus_uses_hole_order_two() {
        // H(10), genus 6, even spin: single type III block, one genus-two
        // surface with hole orders 2 and 0, g - 3 tori.
        let s = stratum(&[10]);
        let report = simple_complement_feasibility(&s, ComponentLabel::EvenSpin).unwrap();
        let witness = report.witness.unwrap();
        assert_eq!(witness.len(), 1);
        let analysis = witness.analyze().unwrap();
        assert_eq!(analysis.alpha, s);
        assert_eq!(analysis.q, 0);
        assert_eq!(
            analysis
                .alpha_prime
                .components()
                .iter()
                .filter(|c| c.genus() == 1)
                .count(),
            3
        );
    }

    #[test]
    fn witnesses_serialize_and_round_trip() {
        let s = stratum(&[3, 3, 2]);
        let report =
            simple_complement_feasibility(&s, ComponentLabel::NonHyperelliptic).unwrap();
        let witness = report.witness.unwrap();
        let json = witness.to_json();
        let back = Configuration::from_json(&json).unwrap();
        assert_eq!(witness, back);
        assert_eq!(back.analyze().unwrap().alpha, s);
    }
}
