//! Value types and robust primitives for convex polyhedra.

mod clip;
mod plane;
mod polyhedron;
mod tolerance;
mod vec3;

pub use clip::{canonicalize, clip};
pub use plane::Plane;
pub use polyhedron::{dihedral_between, midsphere_radius, Polyhedron};
pub(crate) use polyhedron::order_cycle;
pub use tolerance::Tolerance;
pub use vec3::Vec3;
