//! Block and configuration data model, validation, and JSON form.

use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

/// A complementary surface whose boundary is a single saddle connection
/// starting and ending at one boundary point (a figure-eight point).
///
/// `base_order` is the order `a >= 0` of that boundary point seen from
/// inside the piece; 0 means the surgery happened at a regular point.
/// `interior` lists the orders (each >= 1) of the cone points in the open
/// interior of the piece.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FigureEight {
    #[serde(rename = "a")]
    pub base_order: u32,
    pub genus: u32,
    #[serde(default)]
    pub interior: Vec<u32>,
}

impl FigureEight {
    pub fn new(base_order: u32, genus: u32, interior: Vec<u32>) -> Self {
        FigureEight {
            base_order,
            genus,
            interior,
        }
    }

    /// A torus carrying only the boundary point, at a regular point.
    pub fn plain_torus() -> Self {
        FigureEight::new(0, 1, Vec::new())
    }
}

/// One side of a complementary surface whose boundary is a pair of holes.
///
/// The surface lives in the gap between two adjacent blocks and each of the
/// two boundary points belongs to one of them, so a block only records the
/// order `b >= 0` of the hole on its own side. The two records of a shared
/// surface must agree on `genus` and `interior`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PairOfHoles {
    #[serde(rename = "b")]
    pub base_order: u32,
    pub genus: u32,
    #[serde(default)]
    pub interior: Vec<u32>,
}

impl PairOfHoles {
    pub fn new(base_order: u32, genus: u32, interior: Vec<u32>) -> Self {
        PairOfHoles {
            base_order,
            genus,
            interior,
        }
    }

    /// A torus with both hole orders 0 and empty interior (this side's view).
    pub fn plain_torus() -> Self {
        PairOfHoles::new(0, 1, Vec::new())
    }
}

/// Block type, named by the kinds of the two neighboring gaps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum BlockKind {
    /// Cylinder on both sides.
    #[serde(rename = "I")]
    TypeI,
    /// Cylinder on one side, pair-of-holes surface on the other.
    #[serde(rename = "II")]
    TypeII,
    /// Pair-of-holes surface on both sides.
    #[serde(rename = "III")]
    TypeIII,
}

impl fmt::Display for BlockKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BlockKind::TypeI => "I",
            BlockKind::TypeII => "II",
            BlockKind::TypeIII => "III",
        })
    }
}

/// What occupies the gap between two adjacent blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GapKind {
    Cylinder,
    PairOfHoles,
}

impl fmt::Display for GapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GapKind::Cylinder => "cylinder",
            GapKind::PairOfHoles => "pair of holes",
        })
    }
}

fn default_true() -> bool {
    true
}

fn is_true(b: &bool) -> bool {
    *b
}

/// One block of the cyclic chain: the figure-eight pieces glued into the
/// newborn zero, plus this block's view of the neighboring pair-of-holes
/// surfaces as dictated by the kind.
///
/// `pair_of_holes` holds 0, 1, or 2 entries. For type III, entry 0 describes
/// the gap on the left (towards the previous block) and entry 1 the gap on
/// the right. For type II the single entry describes whichever side is not
/// the cylinder; `cylinder_first` says the cylinder is on the left. The flag
/// defaults to true and is ignored for the other kinds, so documents written
/// against the plain schema parse unchanged.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Block {
    pub kind: BlockKind,
    #[serde(default)]
    pub figure_eights: Vec<FigureEight>,
    #[serde(default)]
    pub pair_of_holes: Vec<PairOfHoles>,
    #[serde(default = "default_true", skip_serializing_if = "is_true")]
    pub cylinder_first: bool,
}

impl Block {
    /// A type I block from its figure-eight pieces.
    pub fn type_i(figure_eights: Vec<FigureEight>) -> Self {
        Block {
            kind: BlockKind::TypeI,
            figure_eights,
            pair_of_holes: Vec::new(),
            cylinder_first: true,
        }
    }

    /// A type II block. `cylinder_first` places the cylinder on the left
    /// (towards the previous block); the pair-of-holes entry then describes
    /// the right gap, and vice versa.
    pub fn type_ii(
        figure_eights: Vec<FigureEight>,
        hole_side: PairOfHoles,
        cylinder_first: bool,
    ) -> Self {
        Block {
            kind: BlockKind::TypeII,
            figure_eights,
            pair_of_holes: vec![hole_side],
            cylinder_first,
        }
    }

    /// A type III block; `left` faces the previous block, `right` the next.
    pub fn type_iii(left: PairOfHoles, figure_eights: Vec<FigureEight>, right: PairOfHoles) -> Self {
        Block {
            kind: BlockKind::TypeIII,
            figure_eights,
            pair_of_holes: vec![left, right],
            cylinder_first: true,
        }
    }

    /// Order of the zero born when the block's pieces are glued back in:
    /// every figure-eight piece contributes `a_i + 2`, and every adjacent
    /// hole contributes `b + 1`.
    pub fn newborn_order(&self) -> u32 {
        let eights: u32 = self.figure_eights.iter().map(|fe| fe.base_order + 2).sum();
        let holes: u32 = self.pair_of_holes.iter().map(|p| p.base_order + 1).sum();
        eights + holes
    }

    /// Gap kind on the side towards the previous block.
    pub fn left_gap(&self) -> GapKind {
        match self.kind {
            BlockKind::TypeI => GapKind::Cylinder,
            BlockKind::TypeIII => GapKind::PairOfHoles,
            BlockKind::TypeII => {
                if self.cylinder_first {
                    GapKind::Cylinder
                } else {
                    GapKind::PairOfHoles
                }
            }
        }
    }

    /// Gap kind on the side towards the next block.
    pub fn right_gap(&self) -> GapKind {
        match self.kind {
            BlockKind::TypeI => GapKind::Cylinder,
            BlockKind::TypeIII => GapKind::PairOfHoles,
            BlockKind::TypeII => {
                if self.cylinder_first {
                    GapKind::PairOfHoles
                } else {
                    GapKind::Cylinder
                }
            }
        }
    }

    /// This block's record of the pair-of-holes surface in its left gap.
    pub fn left_holes(&self) -> Option<&PairOfHoles> {
        match self.kind {
            BlockKind::TypeIII => self.pair_of_holes.first(),
            BlockKind::TypeII if !self.cylinder_first => self.pair_of_holes.first(),
            _ => None,
        }
    }

    /// This block's record of the pair-of-holes surface in its right gap.
    pub fn right_holes(&self) -> Option<&PairOfHoles> {
        match self.kind {
            BlockKind::TypeIII => self.pair_of_holes.get(1),
            BlockKind::TypeII if self.cylinder_first => self.pair_of_holes.first(),
            _ => None,
        }
    }

    /// Kind-specific shape check (entry counts only; geometry is validated
    /// at the configuration level).
    pub(crate) fn check_shape(&self, index: usize) -> Result<(), ConfigError> {
        let holes = self.pair_of_holes.len();
        let shape_error = |reason: String| ConfigError::BlockShape { index, reason };
        match self.kind {
            BlockKind::TypeI => {
                if self.figure_eights.is_empty() {
                    return Err(shape_error(
                        "type I needs at least one figure-eight piece".into(),
                    ));
                }
                if holes != 0 {
                    return Err(shape_error(format!(
                        "type I carries no pair-of-holes entries, found {holes}"
                    )));
                }
            }
            BlockKind::TypeII => {
                if holes != 1 {
                    return Err(shape_error(format!(
                        "type II carries exactly one pair-of-holes entry, found {holes}"
                    )));
                }
            }
            BlockKind::TypeIII => {
                if holes != 2 {
                    return Err(shape_error(format!(
                        "type III carries exactly two pair-of-holes entries, found {holes}"
                    )));
                }
            }
        }
        for fe in &self.figure_eights {
            if fe.genus == 0 {
                return Err(shape_error("figure-eight pieces have genus >= 1".into()));
            }
            if fe.interior.contains(&0) {
                return Err(shape_error(
                    "interior cone points have order >= 1".into(),
                ));
            }
        }
        for p in &self.pair_of_holes {
            if p.genus == 0 {
                return Err(shape_error("pair-of-holes pieces have genus >= 1".into()));
            }
            if p.interior.contains(&0) {
                return Err(shape_error(
                    "interior cone points have order >= 1".into(),
                ));
            }
        }
        Ok(())
    }
}

/// Validation and analysis failures for configurations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("configuration has no blocks")]
    Empty,
    #[error("block {index}: {reason}")]
    BlockShape { index: usize, reason: String },
    /// Odd number of type II blocks: each contributes half a cylinder, so
    /// the cylinder count would not be an integer.
    #[error("{type_ii_count} type II blocks: cylinder halves do not pair up")]
    NonIntegerCylinders { type_ii_count: usize },
    /// Adjacent blocks disagree about what sits between them.
    #[error("gap {gap}: block on the left ends in a {left}, block on the right expects a {right}")]
    GapKindMismatch {
        gap: usize,
        left: GapKind,
        right: GapKind,
    },
    /// The two blocks adjacent to a shared pair-of-holes surface describe
    /// different surfaces.
    #[error("gap {gap}: shared pair-of-holes surface described inconsistently ({reason})")]
    SharedSurfaceMismatch { gap: usize, reason: String },
    /// A complementary piece violates `sum of orders = 2g - 2`.
    #[error("block {block}: {piece} violates order accounting: orders sum to {actual}, expected 2g - 2 = {expected}")]
    GaussBonnetViolated {
        block: usize,
        piece: String,
        actual: u32,
        expected: u32,
    },
    /// No pair-of-holes surface and no cylinder. Unreachable for nonempty
    /// chains (a chain with no pair-of-holes gaps has cylinder gaps), kept
    /// as a named failure so the accounting rule is visible in the API.
    #[error("configuration has neither a cylinder nor a pair-of-holes surface")]
    ObstructionViolated,
}

/// A cyclic chain of blocks.
///
/// Two configurations are equal when one is a rotation of the other; equality
/// and hashing go through the lexicographically minimal rotation. The stored
/// block order is preserved for display and indexing, and gap `i` always
/// means the gap between stored block `i` and block `i + 1` (mod the length).
#[derive(Debug, Clone, Eq, Serialize, Deserialize)]
pub struct Configuration {
    pub blocks: Vec<Block>,
}

impl Configuration {
    pub fn new(blocks: Vec<Block>) -> Self {
        Configuration { blocks }
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Rotation offset of the lexicographically minimal rotation.
    pub fn canonical_offset(&self) -> usize {
        let b = self.blocks.len();
        let mut best = 0;
        for candidate in 1..b {
            for step in 0..b {
                let lhs = &self.blocks[(candidate + step) % b];
                let rhs = &self.blocks[(best + step) % b];
                match lhs.cmp(rhs) {
                    std::cmp::Ordering::Less => {
                        best = candidate;
                        break;
                    }
                    std::cmp::Ordering::Greater => break,
                    std::cmp::Ordering::Equal => continue,
                }
            }
        }
        best
    }

    /// The blocks starting from the canonical rotation.
    pub fn canonical_blocks(&self) -> Vec<&Block> {
        let b = self.blocks.len();
        let offset = self.canonical_offset();
        (0..b).map(|i| &self.blocks[(offset + i) % b]).collect()
    }

    /// Parses the JSON document form.
    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("configuration serializes")
    }
}

impl PartialEq for Configuration {
    fn eq(&self, other: &Self) -> bool {
        self.blocks.len() == other.blocks.len()
            && self.canonical_blocks() == other.canonical_blocks()
    }
}

impl Hash for Configuration {
    fn hash<H: Hasher>(&self, state: &mut H) {
        for block in self.canonical_blocks() {
            block.hash(state);
        }
    }
}
