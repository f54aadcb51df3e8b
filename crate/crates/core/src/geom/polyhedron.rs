//! Canonical convex polyhedra and their metric queries.

use crate::error::{GeomError, Result};

use super::plane::Plane;
use super::tolerance::Tolerance;
use super::vec3::Vec3;

/// A canonical convex solid: vertices, faces as cyclic vertex-index
/// sequences (counterclockwise viewed from outside), and one outward
/// supporting plane per face.
#[derive(Debug, Clone)]
pub struct Polyhedron {
    vertices: Vec<Vec3>,
    faces: Vec<Vec<usize>>,
    face_planes: Vec<Plane>,
}

impl Polyhedron {
    /// Builds a polyhedron from vertices and face index cycles.
    ///
    /// Face planes are fitted from the vertices, faces are re-oriented
    /// outward, and all convexity invariants are checked.
    pub fn new(vertices: Vec<Vec3>, faces: Vec<Vec<usize>>, tol: Tolerance) -> Result<Self> {
        let mut faces = faces;
        for face in &faces {
            if face.len() < 3 {
                return Err(GeomError::InvalidInput(format!(
                    "face with {} vertices",
                    face.len()
                )));
            }
            for &i in face {
                if i >= vertices.len() {
                    return Err(GeomError::InvalidInput(format!(
                        "face index {} out of range ({} vertices)",
                        i,
                        vertices.len()
                    )));
                }
            }
        }
        let interior = centroid_of(&vertices);
        let mut planes = Vec::with_capacity(faces.len());
        for face in &mut faces {
            let mut plane = fit_plane(&vertices, face)?;
            let fc = face_centroid_of(&vertices, face);
            if plane.normal.dot(fc - interior) < 0.0 {
                face.reverse();
                plane = plane.flipped();
            }
            planes.push(plane);
        }
        let p = Polyhedron {
            vertices,
            faces,
            face_planes: planes,
        };
        p.validate(tol)?;
        Ok(p)
    }

    /// Builds the convex solid spanned by `points` by enumerating
    /// supporting planes through point triples. Intended for small seed
    /// point sets; every input point must be a vertex of the hull.
    pub fn from_points(points: &[Vec3], tol: Tolerance) -> Result<Self> {
        let n = points.len();
        if n < 4 {
            return Err(GeomError::InvalidInput("need at least 4 points".into()));
        }
        let eps = tol.coplanar;
        let mut planes: Vec<Plane> = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let nv = (points[j] - points[i]).cross(points[k] - points[i]);
                    if nv.norm() < 1e-12 {
                        continue;
                    }
                    let mut plane = Plane::from_normal_point(nv, points[i]);
                    let mut above = false;
                    let mut below = false;
                    for &p in points {
                        let d = plane.signed_distance(p);
                        if d > eps {
                            above = true;
                        } else if d < -eps {
                            below = true;
                        }
                        if above && below {
                            break;
                        }
                    }
                    if above && below {
                        continue;
                    }
                    if above {
                        plane = plane.flipped();
                    }
                    let known = planes.iter().any(|q| {
                        q.normal.dot(plane.normal) > 1.0 - eps
                            && (q.offset - plane.offset).abs() < eps
                    });
                    if !known {
                        planes.push(plane);
                    }
                }
            }
        }
        let mut faces = Vec::with_capacity(planes.len());
        for plane in &planes {
            let mut on: Vec<usize> = (0..n)
                .filter(|&i| plane.signed_distance(points[i]).abs() <= eps)
                .collect();
            if on.len() < 3 {
                return Err(GeomError::InvalidInput(
                    "supporting plane with fewer than 3 incident points".into(),
                ));
            }
            order_cycle(points, &mut on, plane);
            faces.push(on);
        }
        Polyhedron::new(points.to_vec(), faces, tol)
    }

    pub fn vertices(&self) -> &[Vec3] {
        &self.vertices
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn face_planes(&self) -> &[Plane] {
        &self.face_planes
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Undirected edges as ordered index pairs, each listed once.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for face in &self.faces {
            for w in 0..face.len() {
                let a = face[w];
                let b = face[(w + 1) % face.len()];
                if a < b {
                    edges.push((a, b));
                }
            }
        }
        edges.sort_unstable();
        edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn edge_lengths(&self) -> Vec<f64> {
        self.edges()
            .iter()
            .map(|&(a, b)| self.vertices[a].dist(self.vertices[b]))
            .collect()
    }

    /// Mean of the vertex positions.
    pub fn centroid(&self) -> Vec3 {
        centroid_of(&self.vertices)
    }

    pub fn face_centroid(&self, face: usize) -> Vec3 {
        face_centroid_of(&self.vertices, &self.faces[face])
    }

    /// Volume via the divergence theorem over the face fan triangulation.
    pub fn volume(&self) -> f64 {
        let mut v6 = 0.0;
        for face in &self.faces {
            let a = self.vertices[face[0]];
            for w in 1..face.len() - 1 {
                let b = self.vertices[face[w]];
                let c = self.vertices[face[w + 1]];
                v6 += a.dot(b.cross(c));
            }
        }
        v6 / 6.0
    }

    /// Uniformly scales about the origin.
    pub fn scaled(&self, s: f64) -> Polyhedron {
        let mut p = self.clone();
        for v in &mut p.vertices {
            *v = *v * s;
        }
        for plane in &mut p.face_planes {
            plane.offset *= s;
        }
        p
    }

    pub fn translated(&self, t: Vec3) -> Polyhedron {
        let mut p = self.clone();
        for v in &mut p.vertices {
            *v = *v + t;
        }
        for plane in &mut p.face_planes {
            plane.offset += plane.normal.dot(t);
        }
        p
    }

    /// Applies a linear map (row-major 3x3) to every vertex and rebuilds
    /// the face planes. The map must preserve convexity (e.g. a rotation).
    pub fn transformed(&self, m: &[[f64; 3]; 3], tol: Tolerance) -> Result<Polyhedron> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| {
                Vec3::new(
                    m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                    m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                    m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z,
                )
            })
            .collect();
        Polyhedron::new(vertices, self.faces.clone(), tol)
    }

    /// Checks every structural invariant of a canonical convex solid.
    pub fn validate(&self, tol: Tolerance) -> Result<()> {
        for v in &self.vertices {
            if !v.is_finite() {
                return Err(GeomError::InvalidInput("non-finite vertex".into()));
            }
        }
        for i in 0..self.vertices.len() {
            for j in (i + 1)..self.vertices.len() {
                if self.vertices[i].dist(self.vertices[j]) < tol.weld {
                    return Err(GeomError::NonConvexInput(format!(
                        "vertices {i} and {j} closer than the weld tolerance"
                    )));
                }
            }
        }
        for (face, plane) in self.faces.iter().zip(&self.face_planes) {
            if (plane.normal.norm() - 1.0).abs() > tol.coplanar {
                return Err(GeomError::NonConvexInput("non-unit face normal".into()));
            }
            for &i in face {
                if plane.signed_distance(self.vertices[i]).abs() > tol.coplanar {
                    return Err(GeomError::NonConvexInput(
                        "face vertex off its supporting plane".into(),
                    ));
                }
            }
        }
        for plane in &self.face_planes {
            for &v in &self.vertices {
                if plane.signed_distance(v) > tol.coplanar {
                    return Err(GeomError::NonConvexInput(
                        "vertex outside a face halfspace".into(),
                    ));
                }
            }
        }
        for i in 0..self.face_planes.len() {
            for j in (i + 1)..self.face_planes.len() {
                let a = self.face_planes[i];
                let b = self.face_planes[j];
                if a.normal.dot(b.normal) > 1.0 - tol.coplanar
                    && (a.offset - b.offset).abs() < tol.coplanar
                {
                    return Err(GeomError::NonConvexInput(format!(
                        "faces {i} and {j} are coplanar with the same normal"
                    )));
                }
            }
        }
        // Each directed edge must appear exactly once, i.e. each undirected
        // edge is shared by exactly 2 faces with opposite orientations.
        let mut directed = std::collections::HashMap::new();
        for face in &self.faces {
            for w in 0..face.len() {
                let a = face[w];
                let b = face[(w + 1) % face.len()];
                if a == b {
                    return Err(GeomError::NonConvexInput("degenerate edge".into()));
                }
                if directed.insert((a, b), ()).is_some() {
                    return Err(GeomError::NonConvexInput(format!(
                        "directed edge ({a},{b}) appears twice"
                    )));
                }
            }
        }
        for &(a, b) in directed.keys() {
            if !directed.contains_key(&(b, a)) {
                return Err(GeomError::NonConvexInput(format!(
                    "edge ({a},{b}) is not shared by exactly 2 faces"
                )));
            }
        }
        let v = self.vertices.len() as i64;
        let e = (directed.len() / 2) as i64;
        let f = self.faces.len() as i64;
        if v - e + f != 2 {
            return Err(GeomError::NonConvexInput(format!(
                "Euler's formula violated: V={v} E={e} F={f}"
            )));
        }
        Ok(())
    }
}

/// Common distance from the centroid to the edge midpoints.
pub fn midsphere_radius(p: &Polyhedron, tol: Tolerance) -> Result<f64> {
    let c = p.centroid();
    let dists: Vec<f64> = p
        .edges()
        .iter()
        .map(|&(a, b)| ((p.vertices()[a] + p.vertices()[b]) * 0.5).dist(c))
        .collect();
    let min = dists.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = dists.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if max - min > tol.verify {
        return Err(GeomError::NotMidscribed { spread: max - min });
    }
    Ok(dists.iter().sum::<f64>() / dists.len() as f64)
}

/// Interior dihedral angle between faces with outward unit normals `n1`, `n2`.
///
/// Under this convention adjacent tetrahedron faces measure `arccos(1/3)`
/// and adjacent octahedron faces measure `arccos(-1/3)`.
pub fn dihedral_between(n1: Vec3, n2: Vec3) -> f64 {
    std::f64::consts::PI - n1.dot(n2).clamp(-1.0, 1.0).acos()
}

pub(crate) fn centroid_of(vertices: &[Vec3]) -> Vec3 {
    let mut c = Vec3::ZERO;
    for &v in vertices {
        c = c + v;
    }
    c / vertices.len() as f64
}

pub(crate) fn face_centroid_of(vertices: &[Vec3], face: &[usize]) -> Vec3 {
    let mut c = Vec3::ZERO;
    for &i in face {
        c = c + vertices[i];
    }
    c / face.len() as f64
}

/// Fits a face plane: Newell normal, offset through the vertex centroid.
pub(crate) fn fit_plane(vertices: &[Vec3], face: &[usize]) -> Result<Plane> {
    let mut n = Vec3::ZERO;
    for w in 0..face.len() {
        let a = vertices[face[w]];
        let b = vertices[face[(w + 1) % face.len()]];
        n = n + a.cross(b);
    }
    if n.norm() < 1e-14 {
        return Err(GeomError::InvalidInput("degenerate face plane".into()));
    }
    Ok(Plane::from_normal_point(
        n,
        face_centroid_of(vertices, face),
    ))
}

/// Orders indices of coplanar points into a convex cycle, counterclockwise
/// as seen from the tip of the plane normal.
pub(crate) fn order_cycle(points: &[Vec3], idx: &mut [usize], plane: &Plane) {
    let c = {
        let mut c = Vec3::ZERO;
        for &i in idx.iter() {
            c = c + points[i];
        }
        c / idx.len() as f64
    };
    let (u, v) = plane.basis();
    idx.sort_by(|&a, &b| {
        let pa = points[a] - c;
        let pb = points[b] - c;
        let ta = pa.dot(v).atan2(pa.dot(u));
        let tb = pb.dot(v).atan2(pb.dot(u));
        ta.partial_cmp(&tb).unwrap()
    });
}
