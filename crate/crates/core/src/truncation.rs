//! The four cut families: vertex truncation, edge truncation, simultaneous
//! vertex+edge truncation, and skew truncation, plus their parameter
//! solvers.
//!
//! All depths are fractions of the seed's edge length, so the operations
//! are scale-free and the published unit-edge parameter values apply
//! directly at any scale.

use std::collections::HashMap;

use crate::error::{GeomError, Result};
use crate::geom::{clip, Plane, Polyhedron, Tolerance, Vec3};
use crate::verify;

const SQRT3: f64 = 1.7320508075688772935274463415058724;

/// Vertex and edge cut depths, in units of the seed edge length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationParams {
    /// Vertex depth, fraction of edge length, in (0, 1).
    pub r1: f64,
    /// Edge depth, in-face perpendicular distance per unit edge, in [0, 1/2).
    pub r2: f64,
}

impl TruncationParams {
    pub fn new(r1: f64, r2: f64) -> Result<Self> {
        if !(0.0 < r1 && r1 < 1.0) {
            return Err(GeomError::DepthOutOfRange {
                value: r1,
                reason: "r1 must lie in (0, 1)".into(),
            });
        }
        if !(0.0..0.5).contains(&r2) {
            return Err(GeomError::DepthOutOfRange {
                value: r2,
                reason: "r2 must lie in [0, 1/2)".into(),
            });
        }
        Ok(TruncationParams { r1, r2 })
    }
}

/// Edge lengths produced by simultaneous truncation of a unit-edge seed:
/// hexagon top, hexagon slant, and edge-cut rectangle side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedLengths {
    pub l1: f64,
    pub l2: f64,
    pub l3: f64,
}

/// Evaluates the three closed forms for the cut edge lengths; `theta` is
/// the dihedral angle of the seed solid.
pub fn derived_lengths(params: TruncationParams, theta: f64) -> DerivedLengths {
    let TruncationParams { r1, r2 } = params;
    DerivedLengths {
        l1: r1 - 4.0 / SQRT3 * r2,
        l2: 1.0 - 2.0 * r1 + 2.0 / SQRT3 * r2,
        l3: r2 * 2.0_f64.sqrt() * (1.0 - theta.cos()).sqrt(),
    }
}

/// Which constraint pair the simultaneous-truncation solver enforces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VeMode {
    /// `l1 = 0`, `l2 = l3`: the seed face shrinks to a triangle
    /// (rhombi-solids eO, eI).
    Expand,
    /// `l1 = l2`, `l1 = l3`: regular hexagons (omnitruncated tCO, tID).
    Omnitruncate,
}

/// Solves the 2x2 linear system for the truncation depths that make the
/// cut faces regular, for a seed with dihedral angle `theta`.
pub fn solve_ve_params(theta: f64, mode: VeMode) -> Result<TruncationParams> {
    let c = 2.0_f64.sqrt() * (1.0 - theta.cos()).sqrt();
    // rows: a*r1 + b*r2 = rhs
    let (m, rhs) = match mode {
        VeMode::Omnitruncate => (
            [[3.0, -2.0 * SQRT3], [1.0, -(4.0 / SQRT3 + c)]],
            [1.0, 0.0],
        ),
        VeMode::Expand => (
            [[1.0, -4.0 / SQRT3], [2.0, -(2.0 / SQRT3 - c)]],
            [0.0, 1.0],
        ),
    };
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if det.abs() < 1e-12 {
        return Err(GeomError::SingularSystem { theta });
    }
    let r1 = (rhs[0] * m[1][1] - m[0][1] * rhs[1]) / det;
    let r2 = (m[0][0] * rhs[1] - rhs[0] * m[1][0]) / det;
    TruncationParams::new(r1, r2)
}

/// Handedness of a snub construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SnubChirality {
    Left,
    Right,
}

/// Parameters of a skew truncation: the interior angle of the polygon cut
/// at each vertex, the edge-division ratio (root of the snub cubic), and
/// the handedness.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SnubSpec {
    pub alpha_deg: f64,
    pub ratio: f64,
    pub chirality: SnubChirality,
}

impl SnubSpec {
    /// Builds the spec by solving the cubic for `alpha_deg`.
    pub fn for_angle(alpha_deg: f64, chirality: SnubChirality) -> Result<Self> {
        Ok(SnubSpec {
            alpha_deg,
            ratio: snub_ratio(alpha_deg)?,
            chirality,
        })
    }

    /// Residual of the defining cubic at the stored ratio.
    pub fn cubic_residual(&self) -> f64 {
        snub_cubic(self.ratio, self.alpha_deg)
    }
}

fn snub_cubic(r: f64, alpha_deg: f64) -> f64 {
    let cos_a = alpha_deg.to_radians().cos();
    r * r * r - r * r - r - 1.0 + 2.0 * cos_a
}

/// The unique real root in (1, 3) of `r^3 - r^2 - r - 1 + 2 cos(alpha) = 0`,
/// found by bracketed bisection followed by Newton polishing.
pub fn snub_ratio(alpha_deg: f64) -> Result<f64> {
    let f = |r: f64| snub_cubic(r, alpha_deg);
    let (mut lo, mut hi) = (1.0, 3.0);
    if f(lo) * f(hi) > 0.0 {
        return Err(GeomError::NoRootInBracket { alpha_deg });
    }
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if f(lo) * f(mid) <= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let mut r = 0.5 * (lo + hi);
    for _ in 0..5 {
        let df = 3.0 * r * r - 2.0 * r - 1.0;
        r -= f(r) / df;
    }
    debug_assert!(f(r).abs() < 1e-14);
    Ok(r)
}

fn mean_edge_length(p: &Polyhedron) -> f64 {
    let ls = p.edge_lengths();
    ls.iter().sum::<f64>() / ls.len() as f64
}

/// The cutting plane for truncating vertex `v_idx` at `alpha` of the edge
/// length: perpendicular to the vertex position vector, through the point
/// at fraction `alpha` along an incident edge.
pub fn vertex_truncation_plane(p: &Polyhedron, v_idx: usize, alpha: f64) -> Plane {
    let v = p.vertices()[v_idx];
    let neighbor = p
        .edges()
        .iter()
        .find_map(|&(a, b)| {
            if a == v_idx {
                Some(b)
            } else if b == v_idx {
                Some(a)
            } else {
                None
            }
        })
        .expect("isolated vertex");
    let cut = v.lerp(p.vertices()[neighbor], alpha);
    Plane::from_normal_point(v, cut)
}

/// Truncates every vertex of `p` at depth `alpha` (fraction of edge
/// length). Requires the vertices on an origin-centered circumsphere.
pub fn vertex_truncate(p: &Polyhedron, alpha: f64, tol: Tolerance) -> Result<Polyhedron> {
    if !(0.0 < alpha && alpha < 1.0) {
        return Err(GeomError::DepthOutOfRange {
            value: alpha,
            reason: "vertex truncation depth must lie in (0, 1)".into(),
        });
    }
    let r0 = p.vertices()[0].norm();
    for v in p.vertices() {
        if (v.norm() - r0).abs() > tol.verify {
            return Err(GeomError::InvalidInput(
                "vertices not on an origin-centered circumsphere".into(),
            ));
        }
    }
    let planes: Vec<Plane> = (0..p.vertex_count())
        .map(|i| vertex_truncation_plane(p, i, alpha))
        .collect();
    let mut out = p.clone();
    for h in &planes {
        out = clip(&out, h, tol)?;
    }
    Ok(out)
}

fn adjacency(p: &Polyhedron) -> HashMap<(usize, usize), Vec<usize>> {
    let mut adj: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (fi, face) in p.faces().iter().enumerate() {
        for w in 0..face.len() {
            let a = face[w];
            let b = face[(w + 1) % face.len()];
            let key = (a.min(b), a.max(b));
            adj.entry(key).or_default().push(fi);
        }
    }
    adj
}

fn in_face_perpendicular(p: &Polyhedron, face: usize, a: usize, b: usize) -> Vec3 {
    let edge = (p.vertices()[b] - p.vertices()[a]).normalize();
    let n = p.face_planes()[face].normal;
    let mut t = n.cross(edge);
    let into = p.face_centroid(face) - (p.vertices()[a] + p.vertices()[b]) * 0.5;
    if t.dot(into) < 0.0 {
        t = -t;
    }
    t
}

fn point_in_face(p: &Polyhedron, face: usize, q: Vec3, slack: f64) -> bool {
    let cyc = &p.faces()[face];
    let n = p.face_planes()[face].normal;
    for w in 0..cyc.len() {
        let a = p.vertices()[cyc[w]];
        let b = p.vertices()[cyc[(w + 1) % cyc.len()]];
        if (b - a).cross(q - a).dot(n) < -slack {
            return false;
        }
    }
    true
}

/// Cutting plane for edge truncation at absolute in-face perpendicular
/// depth `beta`: the plane through the two lines parallel to the edge at
/// distance `beta` inside each adjacent face. By symmetry it is parallel
/// to the midsphere tangent plane at the edge midpoint.
pub fn edge_cut_plane(
    p: &Polyhedron,
    edge: (usize, usize),
    beta: f64,
    tol: Tolerance,
) -> Result<Plane> {
    if beta < 0.0 {
        return Err(GeomError::DepthOutOfRange {
            value: beta,
            reason: "edge depth must be non-negative".into(),
        });
    }
    let (a, b) = edge;
    let key = (a.min(b), a.max(b));
    let adj = adjacency(p);
    let faces = adj
        .get(&key)
        .filter(|f| f.len() == 2)
        .ok_or_else(|| GeomError::InvalidInput(format!("({a},{b}) is not an edge")))?;
    let (f1, f2) = (faces[0], faces[1]);
    let t1 = in_face_perpendicular(p, f1, a, b);
    let t2 = in_face_perpendicular(p, f2, a, b);
    let va = p.vertices()[a];
    let mid = (va + p.vertices()[b]) * 0.5;
    // the in-face line is widest at the edge midpoint; it must still
    // intersect the face there
    if beta > 0.0
        && (!point_in_face(p, f1, mid + t1 * beta, tol.coplanar)
            || !point_in_face(p, f2, mid + t2 * beta, tol.coplanar))
    {
        return Err(GeomError::DepthOutOfRange {
            value: beta,
            reason: "in-face cut line leaves the face".into(),
        });
    }
    let p1 = va + t1 * beta;
    let p2 = va + t2 * beta;
    let edge_dir = (p.vertices()[b] - va).normalize();
    let normal = if beta == 0.0 {
        // plane through the edge, tangent to the midsphere
        (t1 + t2) * -1.0
    } else {
        (p2 - p1).cross(edge_dir)
    };
    let mut plane = Plane::from_normal_point(normal, p1);
    if plane.normal.dot(mid - p.centroid()) < 0.0 {
        plane = plane.flipped();
    }
    Ok(plane)
}

/// Simultaneous vertex truncation at depth `r1` and edge truncation at
/// depth `r2` (both fractions of the seed edge length). All cutting planes
/// are taken from the original solid and applied sequentially.
pub fn vertex_edge_truncate(
    p: &Polyhedron,
    params: TruncationParams,
    tol: Tolerance,
) -> Result<Polyhedron> {
    let el = mean_edge_length(p);
    let mut planes: Vec<Plane> = (0..p.vertex_count())
        .map(|i| vertex_truncation_plane(p, i, params.r1))
        .collect();
    for &(a, b) in &p.edges() {
        planes.push(edge_cut_plane(p, (a, b), params.r2 * el, tol)?);
    }
    let mut out = p.clone();
    for h in &planes {
        out = clip(&out, h, tol)?;
    }
    Ok(out)
}

/// Simultaneous truncation with solved parameters, gated on the output
/// actually having regular faces.
pub fn vertex_edge_truncate_solved(
    p: &Polyhedron,
    theta: f64,
    mode: VeMode,
    tol: Tolerance,
) -> Result<Polyhedron> {
    let params = solve_ve_params(theta, mode)?;
    let out = vertex_edge_truncate(p, params, tol)?;
    let (edge_dev, angle_dev) = verify::face_regularity(&out);
    if edge_dev > tol.verify || angle_dev > tol.verify {
        return Err(GeomError::InconsistentParams {
            deviation: edge_dev.max(angle_dev),
        });
    }
    Ok(out)
}

/// Skew truncation: subdivides each directed face edge at ratio
/// `ratio : 1`, intersects the cevians to the opposite vertices into a
/// rotated triangle per face, and clips by one plane per original vertex
/// and one per ordered adjacent-face pair. The rotated triangles survive
/// as faces, preserving the seed's face planes.
pub fn skew_truncate(p: &Polyhedron, spec: SnubSpec, tol: Tolerance) -> Result<Polyhedron> {
    for face in p.faces() {
        if face.len() != 3 {
            return Err(GeomError::InvalidInput(
                "skew truncation needs a deltahedral seed (octahedron or icosahedron)".into(),
            ));
        }
    }
    let frac = spec.ratio / (1.0 + spec.ratio); // longer part first
    let mut rotated: Vec<[Vec3; 3]> = Vec::with_capacity(p.face_count());
    for (fi, face) in p.faces().iter().enumerate() {
        let idx: [usize; 3] = match spec.chirality {
            SnubChirality::Left => [face[0], face[1], face[2]],
            SnubChirality::Right => [face[0], face[2], face[1]],
        };
        let v = [p.vertices()[idx[0]], p.vertices()[idx[1]], p.vertices()[idx[2]]];
        // division point on each directed edge, cevian to the opposite vertex
        let mut cevians: Vec<(Vec3, Vec3)> = Vec::with_capacity(3);
        for e in 0..3 {
            let start = v[e];
            let end = v[(e + 1) % 3];
            let opp = v[(e + 2) % 3];
            let x = start.lerp(end, frac);
            cevians.push((x, opp - x));
        }
        let plane = p.face_planes()[fi];
        let mut tri = [Vec3::ZERO; 3];
        for e in 0..3 {
            tri[e] = intersect_lines_in_plane(cevians[e], cevians[(e + 1) % 3], &plane)?;
        }
        rotated.push(tri);
    }
    let all_tri_points: Vec<Vec3> = rotated.iter().flatten().copied().collect();

    let mut planes: Vec<Plane> = Vec::new();
    // one plane per original vertex, through the nearest rotated-triangle
    // vertex of each incident face
    for (vi, &v) in p.vertices().iter().enumerate() {
        let mut ring: Vec<Vec3> = Vec::new();
        for (fi, face) in p.faces().iter().enumerate() {
            if face.contains(&vi) {
                let near = rotated[fi]
                    .iter()
                    .min_by(|a, b| a.dist(v).partial_cmp(&b.dist(v)).unwrap())
                    .copied()
                    .unwrap();
                ring.push(near);
            }
        }
        let c = ring.iter().fold(Vec3::ZERO, |s, &q| s + q) / ring.len() as f64;
        let mut normal = Vec3::ZERO;
        // Newell fit over the ring ordered around the vertex direction
        let axis = Plane::from_normal_point(v, c);
        let mut idx: Vec<usize> = (0..ring.len()).collect();
        crate::geom::order_cycle(&ring, &mut idx, &axis);
        for w in 0..idx.len() {
            let a = ring[idx[w]] - c;
            let b = ring[idx[(w + 1) % idx.len()]] - c;
            normal = normal + a.cross(b);
        }
        let mut plane = Plane::from_normal_point(normal, c);
        if plane.normal.dot(v - p.centroid()) < 0.0 {
            plane = plane.flipped();
        }
        planes.push(plane);
    }
    // one plane per ordered adjacent-face pair: through an edge of one
    // rotated triangle and a vertex of the neighboring one, selected as
    // the unique supporting plane of the full rotated-vertex set
    let adj = adjacency(p);
    for faces in adj.values() {
        if faces.len() != 2 {
            return Err(GeomError::InvalidInput("open edge in seed".into()));
        }
        for &(f1, f2) in &[(faces[0], faces[1]), (faces[1], faces[0])] {
            let plane = bridging_plane(&rotated[f1], &rotated[f2], &all_tri_points, tol)
                .ok_or_else(|| {
                    GeomError::NonUniformResult(
                        "no supporting bridge plane between adjacent rotated triangles".into(),
                    )
                })?;
            planes.push(plane);
        }
    }

    let mut out = p.clone();
    for h in &planes {
        out = clip(&out, h, tol)?;
    }
    if !verify::is_uniform(&out, tol) {
        return Err(GeomError::NonUniformResult(
            "skew truncation output failed the uniformity check".into(),
        ));
    }
    Ok(out)
}

/// Among the nine (edge of `tri1`, vertex of `tri2`) candidate planes,
/// returns the one supporting the whole rotated-vertex cloud, oriented
/// outward. Exactly one candidate qualifies for a correct division ratio.
fn bridging_plane(
    tri1: &[Vec3; 3],
    tri2: &[Vec3; 3],
    cloud: &[Vec3],
    tol: Tolerance,
) -> Option<Plane> {
    let centroid = cloud.iter().fold(Vec3::ZERO, |s, &q| s + q) / cloud.len() as f64;
    let mut found: Option<Plane> = None;
    for e in 0..3 {
        let (a, b) = (tri1[e], tri1[(e + 1) % 3]);
        for &c in tri2.iter() {
            let n = (b - a).cross(c - a);
            if n.norm() < 1e-12 {
                continue;
            }
            let mut plane = Plane::from_normal_point(n, a);
            if plane.signed_distance(centroid) > 0.0 {
                plane = plane.flipped();
            }
            let supporting = cloud
                .iter()
                .all(|&q| plane.signed_distance(q) <= tol.coplanar);
            if supporting {
                match &found {
                    Some(prev) if (prev.normal - plane.normal).norm() > 1e-9 => return None,
                    _ => found = Some(plane),
                }
            }
        }
    }
    found
}

fn intersect_lines_in_plane(
    l1: (Vec3, Vec3),
    l2: (Vec3, Vec3),
    plane: &Plane,
) -> Result<Vec3> {
    let (u, v) = plane.basis();
    let proj = |q: Vec3| (q.dot(u), q.dot(v));
    let (p1, d1) = (proj(l1.0), proj(l1.1));
    let (p2, d2) = (proj(l2.0), proj(l2.1));
    let det = d1.0 * (-d2.1) - (-d2.0) * d1.1;
    if det.abs() < 1e-14 {
        return Err(GeomError::InvalidInput("parallel cevians".into()));
    }
    let rx = p2.0 - p1.0;
    let ry = p2.1 - p1.1;
    let t = (rx * (-d2.1) - (-d2.0) * ry) / det;
    Ok(l1.0 + l1.1 * t)
}
