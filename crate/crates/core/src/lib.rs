//! Exact enumeration of semiperfect colorings of symmetric patterns.
//!
//! A coloring whose tiles correspond one-to-one with the elements of a
//! symmetry group `G` is a partition of `G`. Colorings whose color group `H`
//! has index 2 are built from coset data of subgroups `J ≤ H`, classified as
//! perfect or semiperfect by closed-form criteria, and cross-checked against
//! brute-force oracles.
//!
//! Layout:
//! - [`group`]: Cayley-table groups, subgroups, cosets, normalizers, lattices
//! - [`lowindex`]: subgroup counts of finitely presented groups
//! - [`partition`]: partitions, constructors, classifiers, oracles
//! - [`enumerate`]: censuses, counting formulas, automorphism transfer
//! - [`geometry`]: isometries, symmetry diagrams, tiles, SVG output
//! - [`verify`]: the criteria-versus-oracle suite runner

pub mod enumerate;
pub mod error;
pub mod geometry;
pub mod group;
pub mod lowindex;
pub mod partition;
pub mod scalar;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use group::builders::{cyclic, dihedral, p4m_quotient};
pub use group::{Elem, FiniteGroup, GroupDescriptor, Subgroup};
pub use partition::{ColoringSpec, GroupPartition, Verdict};

/// Exact rational scalar used by the symmetry-diagram layer.
pub type Rational = num_rational::Rational64;
/// Isometry with exact rational coordinates.
pub type ExactIsometry = geometry::PlanarIsometry<Rational>;
/// Isometry with floating-point coordinates, used for drawing.
pub type RenderIsometry = geometry::PlanarIsometry<f64>;
