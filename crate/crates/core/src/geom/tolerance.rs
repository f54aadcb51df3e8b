//! Explicit tolerances threaded through every operation.
//!
//! Coordinates are O(1) throughout, so these are absolute distances.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    /// Vertex-merge distance.
    pub weld: f64,
    /// Plane-incidence slack.
    pub coplanar: f64,
    /// Regularity / angle slack for verification queries.
    pub verify: f64,
}

impl Tolerance {
    pub fn new(weld: f64, coplanar: f64, verify: f64) -> Self {
        assert!(
            0.0 < weld && weld <= coplanar && coplanar <= verify && verify < 1.0,
            "tolerances must satisfy 0 < weld <= coplanar <= verify < 1"
        );
        Tolerance {
            weld,
            coplanar,
            verify,
        }
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            weld: 1e-9,
            coplanar: 1e-8,
            verify: 1e-7,
        }
    }
}
