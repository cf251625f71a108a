//! The cylinder-count bound and its parity gap.
//!
//! The counting bound `floor(sum chi(d_i))` (chi(1) = 1/2, chi(d) = 1
//! otherwise) is attained by an explicit all-cylinder configuration on every
//! stratum whose orders are all even. On all-odd strata the bound can
//! overshoot: a cylinder-only block makes its newborn zero from figure-eight
//! pieces of even base order (an interior-free piece satisfies
//! `a = 2g - 2`), so newborn orders of all-cylinder chains are always even.
//! H(3,3) is the smallest stratum where that parity argument bites.

use periodic_regions::configurations::{partitions_of, q_max, Block, Configuration, FigureEight};
use periodic_regions::strata::parse_stratum;
use periodic_regions::Stratum;

/// One type-I block per order `d`, holding `d/2` plain tori: every gap is a
/// cylinder and the newborn orders reproduce the partition.
fn all_cylinder_chain(orders: &[u32]) -> Configuration {
    let blocks = orders
        .iter()
        .map(|&d| {
            assert!(d % 2 == 0);
            Block::type_i(vec![FigureEight::plain_torus(); (d / 2) as usize])
        })
        .collect();
    Configuration::new(blocks)
}

#[test]
fn all_even_strata_attain_the_counting_bound() {
    for genus in 2..=8u32 {
        for partition in partitions_of(2 * genus - 2) {
            if partition.iter().any(|d| d % 2 != 0) {
                continue;
            }
            let stratum = Stratum::new(partition.clone()).unwrap();
            let analysis = all_cylinder_chain(&partition).analyze().unwrap();
            assert_eq!(analysis.alpha, stratum, "partition {partition:?}");
            assert_eq!(
                analysis.q,
                q_max(&stratum),
                "all-even partition {partition:?} should attain the bound"
            );
            assert_eq!(analysis.q, partition.len() as u32);
        }
    }
}

#[test]
fn h33_sits_strictly_below_the_counting_bound() {
    let stratum = parse_stratum("H(3,3)").unwrap();
    assert_eq!(q_max(&stratum), 2, "the counting formula itself gives 2");

    // One cylinder is realizable: two type II blocks, each a plain torus
    // next to a shared plain two-holed torus, newborn orders 1+2 = 3 each.
    let shared = periodic_regions::configurations::PairOfHoles::plain_torus();
    let pair = Configuration::new(vec![
        Block::type_ii(vec![FigureEight::plain_torus()], shared.clone(), true),
        Block::type_ii(vec![FigureEight::plain_torus()], shared, false),
    ]);
    let analysis = pair.analyze().unwrap();
    assert_eq!(analysis.alpha, stratum);
    assert_eq!(analysis.q, 1);

    // Two cylinders are not: that would need two blocks, both gaps
    // cylinders, so both blocks are type I with newborn order 3 and no
    // interior points (H(3,3) has no zeros to spare). Newborn order 3 from
    // terms a_i + 2 >= 2 forces a single figure eight with a = 1, and an
    // interior-free figure eight needs a = 2g - 2, which is never odd.
    for piece_genus in 1..=4 {
        let candidate = Configuration::new(vec![
            Block::type_i(vec![FigureEight::new(1, piece_genus, vec![])]),
            Block::type_i(vec![FigureEight::new(1, piece_genus, vec![])]),
        ]);
        assert!(
            candidate.analyze().is_err(),
            "interior-free order-1 figure eight must violate the angle count"
        );
    }

    // Giving the figure eight the interior point it needs changes the
    // ambient stratum: the config is valid but no longer lives over H(3,3).
    let patched = Configuration::new(vec![
        Block::type_i(vec![FigureEight::new(1, 2, vec![1])]),
        Block::type_i(vec![FigureEight::new(1, 2, vec![1])]),
    ]);
    let patched = patched.analyze().unwrap();
    assert_eq!(patched.q, 2);
    assert_ne!(patched.alpha, stratum);
    assert_eq!(patched.alpha, parse_stratum("3,3,1,1").unwrap());
}
