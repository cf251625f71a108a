//! Validation and invariants of a configuration: cylinder count, newborn
//! zeros, ambient and boundary strata, and the exact mean cylinder area.

use num_bigint::BigInt;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::model::{Block, BlockKind, ConfigError, Configuration, GapKind, PairOfHoles};
use crate::exact::display_rational;
use crate::strata::{BoundaryComponent, BoundaryStratum, Stratum};
use crate::Rational;

/// A complementary piece with its full boundary data, after the records of
/// shared surfaces have been reconciled.
#[derive(Debug, Clone)]
pub(crate) enum Piece {
    /// Figure-eight piece of block `block`, with one boundary point.
    FigureEight {
        block: usize,
        base_order: u32,
        genus: u32,
        interior: Vec<u32>,
    },
    /// Pair-of-holes surface in gap `gap`, with its two boundary orders as
    /// seen from the blocks left and right of the gap.
    HolePair {
        gap: usize,
        left_order: u32,
        right_order: u32,
        genus: u32,
        interior: Vec<u32>,
    },
}

impl Piece {
    fn genus(&self) -> u32 {
        match self {
            Piece::FigureEight { genus, .. } | Piece::HolePair { genus, .. } => *genus,
        }
    }

    fn interior(&self) -> &[u32] {
        match self {
            Piece::FigureEight { interior, .. } | Piece::HolePair { interior, .. } => interior,
        }
    }

    /// All orders on the piece including boundary points (0 allowed there).
    fn all_orders(&self) -> Vec<u32> {
        match self {
            Piece::FigureEight {
                base_order,
                interior,
                ..
            } => {
                let mut orders = vec![*base_order];
                orders.extend_from_slice(interior);
                orders
            }
            Piece::HolePair {
                left_order,
                right_order,
                interior,
                ..
            } => {
                let mut orders = vec![*left_order, *right_order];
                orders.extend_from_slice(interior);
                orders
            }
        }
    }

    pub(crate) fn is_hole_pair(&self) -> bool {
        matches!(self, Piece::HolePair { .. })
    }
}

/// Fully validated view of a configuration.
pub(crate) struct Layout {
    pub(crate) gaps: Vec<GapKind>,
    pub(crate) pieces: Vec<Piece>,
    pub(crate) q: u32,
}

pub(crate) fn validate(config: &Configuration) -> Result<Layout, ConfigError> {
    let blocks = &config.blocks;
    if blocks.is_empty() {
        return Err(ConfigError::Empty);
    }
    for (index, block) in blocks.iter().enumerate() {
        block.check_shape(index)?;
    }

    // Cylinder halves: type I contributes two, type II one, type III zero.
    // The sum over blocks is even exactly when the type II count is even;
    // otherwise the cylinder count q would be a half-integer.
    let type_ii_count = blocks
        .iter()
        .filter(|b| b.kind == BlockKind::TypeII)
        .count();
    if type_ii_count % 2 != 0 {
        return Err(ConfigError::NonIntegerCylinders { type_ii_count });
    }

    // Adjacent blocks must agree on every gap.
    let b = blocks.len();
    let mut gaps = Vec::with_capacity(b);
    for i in 0..b {
        let left = blocks[i].right_gap();
        let right = blocks[(i + 1) % b].left_gap();
        if left != right {
            return Err(ConfigError::GapKindMismatch { gap: i, left, right });
        }
        gaps.push(left);
    }
    let q = gaps.iter().filter(|&&g| g == GapKind::Cylinder).count() as u32;

    // Reconcile the two views of every shared pair-of-holes surface and
    // collect the pieces. Pieces are listed per block: first the block's
    // figure-eights, then the surface in the gap to its right (if any).
    let mut pieces = Vec::new();
    for (i, block) in blocks.iter().enumerate() {
        for fe in &block.figure_eights {
            pieces.push(Piece::FigureEight {
                block: i,
                base_order: fe.base_order,
                genus: fe.genus,
                interior: fe.interior.clone(),
            });
        }
        if gaps[i] == GapKind::PairOfHoles {
            let left_view = block
                .right_holes()
                .expect("gap kind came from this entry");
            let right_view = blocks[(i + 1) % b]
                .left_holes()
                .expect("gap kind came from this entry");
            check_shared_views(i, left_view, right_view, b)?;
            pieces.push(Piece::HolePair {
                gap: i,
                left_order: left_view.base_order,
                right_order: right_view.base_order,
                genus: left_view.genus,
                interior: left_view.interior.clone(),
            });
        }
    }

    // Order accounting per piece: cone orders sum to 2g - 2, counting each
    // boundary point with the order of its side.
    for piece in &pieces {
        let actual: u32 = piece.all_orders().iter().sum();
        let expected = 2 * piece.genus() - 2;
        if actual != expected {
            let (block, name) = match piece {
                Piece::FigureEight { block, .. } => (*block, "figure-eight piece"),
                Piece::HolePair { gap, .. } => (*gap, "pair-of-holes surface"),
            };
            return Err(ConfigError::GaussBonnetViolated {
                block,
                piece: name.into(),
                actual,
                expected,
            });
        }
    }

    // Degenerating needs at least one pair-of-holes surface or one cylinder.
    // A nonempty chain always has one of the two (a chain with no hole pairs
    // has only cylinder gaps), so this check is defensive.
    if q == 0 && pieces.iter().all(|p| !p.is_hole_pair()) {
        return Err(ConfigError::ObstructionViolated);
    }

    Ok(Layout { gaps, pieces, q })
}

fn check_shared_views(
    gap: usize,
    left_view: &PairOfHoles,
    right_view: &PairOfHoles,
    block_count: usize,
) -> Result<(), ConfigError> {
    // In a single-block chain both views come from the same block and the one
    // surface carries both holes; only genus and interior are shared state,
    // and the two base orders are genuinely the two holes.
    let _ = block_count;
    if left_view.genus != right_view.genus {
        return Err(ConfigError::SharedSurfaceMismatch {
            gap,
            reason: format!(
                "genus {} vs {}",
                left_view.genus, right_view.genus
            ),
        });
    }
    let mut left_interior = left_view.interior.clone();
    let mut right_interior = right_view.interior.clone();
    left_interior.sort_unstable();
    right_interior.sort_unstable();
    if left_interior != right_interior {
        return Err(ConfigError::SharedSurfaceMismatch {
            gap,
            reason: "interior cone points differ".into(),
        });
    }
    Ok(())
}

/// Everything the analysis derives from a valid configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfigurationAnalysis {
    /// Order of the newborn zero of each block, in stored block order.
    pub newborn_orders: Vec<u32>,
    /// Number of cylinders among the gaps.
    pub q: u32,
    /// The ambient stratum the configuration degenerates from: newborn
    /// orders together with all interior cone points.
    pub alpha: Stratum,
    /// The degenerate boundary stratum, one component per complementary
    /// piece, boundary points retained as marked points.
    pub alpha_prime: BoundaryStratum,
    /// Dimension of `alpha_prime`.
    pub n: u32,
    /// Mean total area of the q cylinders, `q / (2g + m - 2)`, exact.
    pub mean_area_conf: Rational,
}

impl Serialize for ConfigurationAnalysis {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ConfigurationAnalysis", 6)?;
        s.serialize_field("newborn_orders", &self.newborn_orders)?;
        s.serialize_field("q", &self.q)?;
        s.serialize_field("alpha", &self.alpha)?;
        s.serialize_field("alpha_prime", &self.alpha_prime)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("mean_area_conf", &display_rational(&self.mean_area_conf))?;
        s.end()
    }
}

impl Configuration {
    /// Validates the configuration and derives its invariants.
    ///
    /// The dimension `n` of the boundary stratum is computed twice, from the
    /// pieces and as `dim alpha - q - 1`; the two must agree for every valid
    /// configuration, and a mismatch aborts rather than returning one of the
    /// two candidates.
    pub fn analyze(&self) -> Result<ConfigurationAnalysis, ConfigError> {
        let layout = validate(self)?;
        let newborn_orders: Vec<u32> =
            self.blocks.iter().map(Block::newborn_order).collect();

        let mut alpha_orders = newborn_orders.clone();
        for piece in &layout.pieces {
            alpha_orders.extend_from_slice(piece.interior());
        }
        let alpha = Stratum::new(alpha_orders)
            .expect("piece accounting forces valid ambient orders");

        let components: Vec<BoundaryComponent> = layout
            .pieces
            .iter()
            .map(|piece| {
                BoundaryComponent::new(piece.genus(), piece.all_orders())
                    .expect("piece accounting was checked")
            })
            .collect();
        let alpha_prime =
            BoundaryStratum::new(components).expect("at least one piece exists");

        let n = alpha_prime.dim_complex();
        let from_ambient = alpha.dim_complex() as i64 - i64::from(layout.q) - 1;
        assert!(
            i64::from(n) == from_ambient,
            "boundary dimension mismatch: pieces give {n}, ambient gives {from_ambient}"
        );

        let mean_area_conf = Rational::new(
            BigInt::from(layout.q),
            BigInt::from(alpha.dim_complex() - 1),
        );

        Ok(ConfigurationAnalysis {
            newborn_orders,
            q: layout.q,
            alpha,
            alpha_prime,
            n,
            mean_area_conf,
        })
    }
}

/// Index of the gap holding the first cylinder, after rotating to the
/// canonical block order. This is the deterministic "first cylinder" used
/// whenever a single named cylinder is singled out; `None` when the
/// configuration has no cylinders at all.
pub fn first_cylinder_index(config: &Configuration) -> Option<usize> {
    let layout = validate(config).ok()?;
    let b = config.blocks.len();
    let offset = config.canonical_offset();
    (0..b).find(|i| layout.gaps[(offset + i) % b] == GapKind::Cylinder)
}

/// True when the chain is short enough for a hyperelliptic component, which
/// admits at most two closed homologous saddle connections (= blocks).
pub fn hyperelliptic_admissibility_guard(config: &Configuration) -> bool {
    config.blocks.len() <= 2
}

/// Spin parity of the surfaces containing a configuration, where a rule
/// applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SpinParity {
    Even,
    Odd,
    /// No rule covers this block pattern.
    Unknown,
}

impl std::fmt::Display for SpinParity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SpinParity::Even => "even",
            SpinParity::Odd => "odd",
            SpinParity::Unknown => "unknown",
        })
    }
}

fn parity_of(value: u32) -> SpinParity {
    if value % 2 == 0 {
        SpinParity::Even
    } else {
        SpinParity::Odd
    }
}

/// Applies the block-pattern spin rules.
///
/// All blocks type I with every piece a torus gives odd parity. All blocks
/// type III with every piece a torus gives the parity of `g - 1`; the same
/// pattern with exactly one genus-two pair-of-holes piece (all other pieces
/// tori) gives the parity of `g`. Here `g` is the ambient genus. Any other
/// pattern, or an invalid configuration, reports `Unknown`.
pub fn spin_parity(config: &Configuration) -> SpinParity {
    let layout = match validate(config) {
        Ok(layout) => layout,
        Err(_) => return SpinParity::Unknown,
    };
    let ambient_genus =
        layout.pieces.iter().map(Piece::genus).sum::<u32>() + 1;
    let all_kind =
        |kind: BlockKind| config.blocks.iter().all(|b| b.kind == kind);
    let tori = |pieces: &[Piece]| pieces.iter().all(|p| p.genus() == 1);

    if all_kind(BlockKind::TypeI) && tori(&layout.pieces) {
        return SpinParity::Odd;
    }
    if all_kind(BlockKind::TypeIII) {
        if tori(&layout.pieces) {
            return parity_of(ambient_genus - 1);
        }
        let genus_two_hole_pairs = layout
            .pieces
            .iter()
            .filter(|p| p.is_hole_pair() && p.genus() == 2)
            .count();
        let rest_tori = layout
            .pieces
            .iter()
            .filter(|p| !(p.is_hole_pair() && p.genus() == 2))
            .all(|p| p.genus() == 1);
        if genus_two_hole_pairs == 1 && rest_tori {
            return parity_of(ambient_genus);
        }
    }
    SpinParity::Unknown
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configurations::model::FigureEight;
    use crate::exact::ratio;

    fn torus_block() -> Block {
        Block::type_i(vec![FigureEight::plain_torus()])
    }

    fn all_type_i_tori(blocks: usize) -> Configuration {
        Configuration::new((0..blocks).map(|_| torus_block()).collect())
    }

    /// Two type II blocks around a shared plain torus: the smallest chain
    /// with a pair-of-holes surface.
    fn type_ii_pair() -> Configuration {
        Configuration::new(vec![
            Block::type_ii(vec![], PairOfHoles::plain_torus(), true),
            Block::type_ii(vec![], PairOfHoles::plain_torus(), false),
        ])
    }

    #[test]
    fn chain_of_tori_doubles_dimension_bookkeeping() {
        // Three type I torus blocks: ambient H(2,2,2) of dimension 10 with
        // q = 3 cylinders, so the boundary has dimension 6. Each torus keeps
        // its boundary point as a marked point: dimension 2 each, times 3.
        let config = all_type_i_tori(3);
        let analysis = config.analyze().unwrap();
        assert_eq!(analysis.q, 3);
        assert_eq!(analysis.alpha, Stratum::new(vec![2, 2, 2]).unwrap());
        assert_eq!(analysis.n, 6);
        assert_eq!(analysis.alpha.dim_complex(), 10);
        assert_eq!(analysis.newborn_orders, vec![2, 2, 2]);
        assert_eq!(analysis.alpha_prime.components().len(), 3);
        for component in analysis.alpha_prime.components() {
            assert_eq!(component.genus(), 1);
            assert_eq!(component.orders(), &[0]);
            assert_eq!(component.dim_complex(), 2);
        }
    }

    #[test]
    fn type_ii_pair_gives_two_simple_zeros() {
        let analysis = type_ii_pair().analyze().unwrap();
        assert_eq!(analysis.q, 1);
        assert_eq!(analysis.newborn_orders, vec![1, 1]);
        assert_eq!(analysis.alpha, Stratum::new(vec![1, 1]).unwrap());
        // One torus with two marked points: n = 2 + 2 - 1 = 3 = dim - q - 1.
        assert_eq!(analysis.n, 3);
        assert_eq!(analysis.alpha_prime.components().len(), 1);
        assert_eq!(analysis.alpha_prime.components()[0].orders(), &[0, 0]);
    }

    #[test]
    fn single_torus_block_mean_area() {
        let analysis = all_type_i_tori(1).analyze().unwrap();
        assert_eq!(analysis.q, 1);
        assert_eq!(analysis.alpha, Stratum::new(vec![2]).unwrap());
        assert_eq!(analysis.mean_area_conf, ratio(1, 3));
        assert_eq!(analysis.n, 2);
    }

    #[test]
    fn single_type_iii_block_shares_one_surface_with_itself() {
        // One type III block whose two entries describe the same surface:
        // a torus with both holes at order 0 and two extra interior points.
        let surface = PairOfHoles::new(0, 2, vec![1, 1]);
        let config = Configuration::new(vec![Block::type_iii(
            surface.clone(),
            vec![],
            surface,
        )]);
        let analysis = config.analyze().unwrap();
        assert_eq!(analysis.q, 0);
        assert_eq!(analysis.newborn_orders, vec![2]);
        assert_eq!(analysis.alpha, Stratum::new(vec![2, 1, 1]).unwrap());
        assert_eq!(analysis.alpha_prime.components().len(), 1);
        // Genus 2 with 4 points: n = 2*2 + 4 - 1 = 7 = dim H(2,1,1) - 0 - 1.
        assert_eq!(analysis.n, 7);
        assert_eq!(analysis.mean_area_conf, ratio(0, 1));
    }

    #[test]
    fn odd_type_ii_count_is_rejected() {
        let config = Configuration::new(vec![Block::type_ii(
            vec![],
            PairOfHoles::plain_torus(),
            true,
        )]);
        assert_eq!(
            config.analyze().unwrap_err(),
            ConfigError::NonIntegerCylinders { type_ii_count: 1 }
        );
    }

    #[test]
    fn mismatched_gap_kinds_are_rejected() {
        // Type I (cylinder on the right) next to type III (holes on the left).
        let surface = PairOfHoles::new(0, 1, vec![]);
        let config = Configuration::new(vec![
            torus_block(),
            Block::type_iii(surface.clone(), vec![], surface),
        ]);
        assert!(matches!(
            config.analyze().unwrap_err(),
            ConfigError::GapKindMismatch { .. }
        ));
    }

    #[test]
    fn disagreeing_shared_surface_is_rejected() {
        let config = Configuration::new(vec![
            Block::type_ii(vec![], PairOfHoles::new(0, 1, vec![]), true),
            Block::type_ii(vec![], PairOfHoles::new(0, 2, vec![1, 1]), false),
        ]);
        assert!(matches!(
            config.analyze().unwrap_err(),
            ConfigError::SharedSurfaceMismatch { .. }
        ));
    }

    #[test]
    fn order_accounting_is_enforced_per_piece() {
        // Genus 2 figure-eight with a = 0 and no interior: orders sum to 0,
        // expected 2.
        let config = Configuration::new(vec![Block::type_i(vec![FigureEight::new(
            0,
            2,
            vec![],
        )])]);
        assert!(matches!(
            config.analyze().unwrap_err(),
            ConfigError::GaussBonnetViolated { expected: 2, actual: 0, .. }
        ));

        // Shared surface where the two hole orders overshoot.
        let config = Configuration::new(vec![
            Block::type_ii(vec![], PairOfHoles::new(1, 1, vec![]), true),
            Block::type_ii(vec![], PairOfHoles::new(0, 1, vec![]), false),
        ]);
        assert!(matches!(
            config.analyze().unwrap_err(),
            ConfigError::GaussBonnetViolated { expected: 0, actual: 1, .. }
        ));
    }

    #[test]
    fn empty_configuration_is_rejected() {
        assert_eq!(
            Configuration::new(vec![]).analyze().unwrap_err(),
            ConfigError::Empty
        );
    }

    #[test]
    fn first_cylinder_and_guard() {
        let config = all_type_i_tori(2);
        assert_eq!(first_cylinder_index(&config), Some(0));
        assert!(hyperelliptic_admissibility_guard(&config));
        assert!(!hyperelliptic_admissibility_guard(&all_type_i_tori(3)));

        let surface = PairOfHoles::new(0, 2, vec![1, 1]);
        let no_cylinder =
            Configuration::new(vec![Block::type_iii(surface.clone(), vec![], surface)]);
        assert_eq!(first_cylinder_index(&no_cylinder), None);
        assert!(hyperelliptic_admissibility_guard(&no_cylinder));
    }

    #[test]
    fn spin_rules() {
        // All type I tori: odd, regardless of length.
        for blocks in 1..=5 {
            assert_eq!(spin_parity(&all_type_i_tori(blocks)), SpinParity::Odd);
        }

        // All type III tori, m blocks: ambient genus m + 1, parity of g - 1.
        for m in 1..=5 {
            let torus = PairOfHoles::plain_torus();
            let config = Configuration::new(
                (0..m)
                    .map(|_| Block::type_iii(torus.clone(), vec![], torus.clone()))
                    .collect(),
            );
            let expected = if m % 2 == 0 { SpinParity::Even } else { SpinParity::Odd };
            assert_eq!(spin_parity(&config), expected, "m={m}");
            let analysis = config.analyze().unwrap();
            assert_eq!(analysis.alpha.genus(), m as u32 + 1);
        }

        // All type III with one genus-two surface: parity of g.
        let genus_two = PairOfHoles::new(0, 2, vec![2]);
        let torus = PairOfHoles::plain_torus();
        let config = Configuration::new(vec![
            Block::type_iii(genus_two.clone(), vec![], torus.clone()),
            Block::type_iii(torus, vec![], genus_two),
        ]);
        let analysis = config.analyze().unwrap();
        assert_eq!(analysis.alpha.genus(), 4);
        assert_eq!(spin_parity(&config), SpinParity::Even);

        // Mixed kinds: no rule.
        assert_eq!(spin_parity(&type_ii_pair()), SpinParity::Unknown);
        // Type I with a genus-two piece: no rule.
        let config = Configuration::new(vec![Block::type_i(vec![FigureEight::new(
            2,
            2,
            vec![],
        )])]);
        assert_eq!(spin_parity(&config), SpinParity::Unknown);
        // Invalid input: no rule.
        assert_eq!(spin_parity(&Configuration::new(vec![])), SpinParity::Unknown);
    }

    #[test]
    fn analysis_serializes_with_exact_mean() {
        let analysis = all_type_i_tori(1).analyze().unwrap();
        let json = serde_json::to_string(&analysis).unwrap();
        assert!(json.contains("\"mean_area_conf\":\"1/3\""), "{json}");
        assert!(json.contains("\"q\":1"), "{json}");
        assert!(json.contains("\"alpha\""), "{json}");
    }
}
