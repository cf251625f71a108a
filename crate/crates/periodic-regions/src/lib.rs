//! Combinatorics and asymptotics of periodic regions on translation surfaces.
//!
//! A translation surface of genus `g` with cone points of orders `(d_1, ..., d_m)`
//! lives in the stratum `H(d_1, ..., d_m)`, a complex orbifold of dimension
//! `2g + m - 1`. Families of parallel closed geodesics sweep out cylinders, and a
//! maximal family of homologous saddle connections together with its cylinders
//! forms a periodic region. This crate models those objects and the exact
//! constants that govern their counting asymptotics:
//!
//! - [`strata`]: strata, their dimensions, and the classification of connected
//!   components (hyperelliptic / spin) for genus at least 4.
//! - [`configurations`]: cyclic chains of type I/II/III blocks describing how a
//!   periodic region degenerates, the stratum of the degenerate surface, cylinder
//!   counts `q`, extremal mean-area searches, spin parity rules, and constructive
//!   feasibility witnesses.
//! - [`ratios`]: exact rational evaluation of the cylinder-counting ratio
//!   formulas (mean areas, tail distributions, correlation ratios), with opaque
//!   symbols for the factors that depend on unknown stratum volumes.
//! - [`special`]: Beta and incomplete Beta kernels, exact at integers and by
//!   adaptive quadrature otherwise, plus exhaustive verifiers for the binomial
//!   identities the ratio formulas rest on.
//! - [`oracles`]: independent Monte Carlo and quadrature evaluation of the
//!   moduli-space integrals behind every closed form, compared at explicit
//!   tolerances.
//! - [`torus`]: primitive lattice-point counting on the flat torus and the
//!   empirical 6/pi^2 density limit.
//!
//! Everything combinatorial is computed in exact big-rational arithmetic;
//! floating point appears only in the numeric oracles and at output boundaries.

pub mod configurations;
pub mod exact;
pub mod oracles;
pub mod poly;
pub mod quadrature;
pub mod ratios;
pub mod rng;
pub mod special;
pub mod strata;
pub mod torus;

/// Exact rational scalar used by every combinatorial formula in this crate.
pub type Rational = num_rational::BigRational;

/// Exact integer scalar backing [`Rational`].
pub type Integer = num_bigint::BigInt;

pub use configurations::{Block, Configuration, ConfigurationAnalysis, FeasibilityVerdict};
pub use strata::{BoundaryStratum, ComponentLabel, Stratum};
