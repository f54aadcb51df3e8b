//! Construction and verification kernel for convex uniform polyhedra.
//!
//! Builds the Archimedean solids by slicing seed Platonic solids with
//! halfspace cuts (vertex, edge and skew truncation), all positioned inside
//! a common regular tetrahedron, and provides the decision procedures
//! (uniformity, k-face embedding, dihedral-angle queries) needed to check
//! the embedding characterization mechanically.

pub mod catalog;
pub mod error;
pub mod geom;
pub mod seeds;
pub mod truncation;
pub mod verify;

pub use error::GeomError;
pub use geom::{
    canonicalize, clip, dihedral_between, midsphere_radius, Plane, Polyhedron, Tolerance, Vec3,
};
pub use truncation::{DerivedLengths, SnubChirality, SnubSpec, TruncationParams, VeMode};
pub use verify::VerifyReport;
