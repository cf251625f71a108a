//! Configurations of homologous saddle connections.
//!
//! When a family of parallel saddle connections degenerates, the surface is
//! cut along them into complementary pieces: cylinders, surfaces whose
//! boundary is a single saddle connection through a figure-eight point, and
//! surfaces whose boundary is a pair of holes. Walking around the cyclic
//! order of the saddle connections groups those pieces into blocks of three
//! types, distinguished by which neighbors of the block are cylinders:
//!
//! * type I sits between two cylinders,
//! * type II touches a cylinder on one side and a pair-of-holes surface on
//!   the other,
//! * type III sits between two pair-of-holes surfaces.
//!
//! A [`Configuration`] records that cyclic block structure together with the
//! genus and interior cone points of every complementary piece. From it the
//! analysis derives the orders of the newborn zeros, the number of cylinders
//! `q`, the ambient stratum, the degenerate boundary stratum with its
//! dimension `n`, and the exact mean total cylinder area `q / (2g + m - 2)`.
//!
//! The module also carries the combinatorial searches built on top of this
//! model: the upper bound `q_max` for the cylinder count in a stratum, the
//! exhaustive extremal search over partitions showing the mean area never
//! exceeds 1/3, spin-parity rules for specific block patterns, and the
//! construction of explicit witness configurations whose complementary pieces
//! are as simple as possible (tori, cylinders, and at most one genus-two
//! piece).

mod analysis;
mod extremal;
mod feasibility;
mod generator;
mod model;

pub use analysis::{
    first_cylinder_index, hyperelliptic_admissibility_guard, spin_parity, ConfigurationAnalysis,
    SpinParity,
};
pub use extremal::{extremal_mean_area, partitions_of, q_max, ExtremalSearch};
pub use feasibility::{
    simple_complement_feasibility, FeasibilityError, FeasibilityReport, FeasibilityVerdict,
};
pub use generator::sample_valid;
pub use model::{
    Block, BlockKind, ConfigError, Configuration, FigureEight, GapKind, PairOfHoles,
};
