//! Oriented planes / halfspaces.

use super::vec3::Vec3;

/// A plane `{ x : x . normal = offset }` with unit outward normal.
///
/// The associated halfspace is `{ x : x . normal <= offset }`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Plane {
    pub normal: Vec3,
    pub offset: f64,
}

impl Plane {
    /// Builds a plane from an (unnormalized) normal and a point on the plane.
    pub fn from_normal_point(normal: Vec3, point: Vec3) -> Plane {
        let n = normal.normalize();
        Plane {
            normal: n,
            offset: n.dot(point),
        }
    }

    /// Plane through three points, normal along `(b-a) x (c-a)`.
    pub fn from_points(a: Vec3, b: Vec3, c: Vec3) -> Plane {
        Plane::from_normal_point((b - a).cross(c - a), a)
    }

    /// Signed distance; positive outside the halfspace.
    pub fn signed_distance(&self, p: Vec3) -> f64 {
        self.normal.dot(p) - self.offset
    }

    pub fn flipped(&self) -> Plane {
        Plane {
            normal: -self.normal,
            offset: -self.offset,
        }
    }

    /// An orthonormal in-plane basis `(u, v)` with `u x v = normal`.
    pub fn basis(&self) -> (Vec3, Vec3) {
        let n = self.normal;
        let helper = if n.x.abs() < 0.9 {
            Vec3::new(1.0, 0.0, 0.0)
        } else {
            Vec3::new(0.0, 1.0, 0.0)
        };
        let u = n.cross(helper).normalize();
        let v = n.cross(u);
        (u, v)
    }
}
