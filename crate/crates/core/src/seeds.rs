//! Canonical coordinate constructions of the seed solids.
//!
//! The tetrahedron is built at unit edge length; the octahedron and
//! icosahedron are placed inside that same tetrahedron so that four of
//! their face planes coincide with its faces by construction. The cube,
//! dodecahedron, prisms and antiprisms (needed for the converse argument)
//! are built at unit edge length centered at the origin.

use crate::error::{GeomError, Result};
use crate::geom::{Polyhedron, Tolerance, Vec3};

/// Golden ratio.
pub const PHI: f64 = 1.618033988749894848204586834365638118;

/// Scale factor putting the `(+-1, +-1, +-1)` even-parity tetrahedron at
/// unit edge length.
const T_SCALE: f64 = 0.35355339059327376220042218105242452; // 1/(2 sqrt 2)

fn tol() -> Tolerance {
    Tolerance::default()
}

/// Seed solid names for the converse half of the theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeedName {
    T,
    C,
    O,
    D,
    I,
    Prism(u32),
    Antiprism(u32),
}

impl SeedName {
    pub fn build(self) -> Result<Polyhedron> {
        match self {
            SeedName::T => Ok(tetrahedron()),
            SeedName::C => Ok(cube()),
            SeedName::O => Ok(octahedron_in_t()),
            SeedName::D => Ok(dodecahedron()),
            SeedName::I => Ok(icosahedron_in_t()),
            SeedName::Prism(n) => prism(n),
            SeedName::Antiprism(n) => antiprism(n),
        }
    }
}

/// Unit-edge regular tetrahedron with vertices at the even-parity corners
/// of a cube, circumscribing sphere centered at the origin.
pub fn tetrahedron() -> Polyhedron {
    let pts = [
        Vec3::new(1.0, 1.0, 1.0),
        Vec3::new(1.0, -1.0, -1.0),
        Vec3::new(-1.0, 1.0, -1.0),
        Vec3::new(-1.0, -1.0, 1.0),
    ]
    .map(|v| v * T_SCALE);
    Polyhedron::from_points(&pts, tol()).expect("tetrahedron construction")
}

/// Octahedron at the edge midpoints of `tetrahedron()`; exactly 4 of its 8
/// face planes coincide with the tetrahedron's.
pub fn octahedron_in_t() -> Polyhedron {
    let pts = [
        Vec3::new(1.0, 0.0, 0.0),
        Vec3::new(-1.0, 0.0, 0.0),
        Vec3::new(0.0, 1.0, 0.0),
        Vec3::new(0.0, -1.0, 0.0),
        Vec3::new(0.0, 0.0, 1.0),
        Vec3::new(0.0, 0.0, -1.0),
    ]
    .map(|v| v * T_SCALE);
    Polyhedron::from_points(&pts, tol()).expect("octahedron construction")
}

/// Handedness of the golden-ratio icosahedron construction. Both forms
/// sit inside the same tetrahedron and pass the same checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IcosaChirality {
    Left,
    Right,
}

/// Icosahedron with its 12 vertices on the 12 edges of
/// `octahedron_in_t()`, each edge divided in ratio phi:1; 8 of its 20 face
/// planes lie in the octahedron's, of which 4 coincide with the
/// tetrahedron's.
pub fn icosahedron_in_t() -> Polyhedron {
    icosahedron_in_t_with(IcosaChirality::Left)
}

pub fn icosahedron_in_t_with(chirality: IcosaChirality) -> Polyhedron {
    let s = T_SCALE / (1.0 + PHI);
    let mut pts = Vec::with_capacity(12);
    for &(a, b) in &[(1.0, PHI), (1.0, -PHI), (-1.0, PHI), (-1.0, -PHI)] {
        pts.push(Vec3::new(0.0, a, b));
        pts.push(Vec3::new(b, 0.0, a));
        pts.push(Vec3::new(a, b, 0.0));
    }
    let pts: Vec<Vec3> = pts
        .into_iter()
        .map(|v| {
            let v = v * s;
            match chirality {
                IcosaChirality::Left => v,
                // reflection through x=y maps the tetrahedron onto itself
                IcosaChirality::Right => Vec3::new(v.y, v.x, v.z),
            }
        })
        .collect();
    Polyhedron::from_points(&pts, tol()).expect("icosahedron construction")
}

/// Unit-edge cube centered at the origin.
pub fn cube() -> Polyhedron {
    let mut pts = Vec::with_capacity(8);
    for &x in &[-0.5, 0.5] {
        for &y in &[-0.5, 0.5] {
            for &z in &[-0.5, 0.5] {
                pts.push(Vec3::new(x, y, z));
            }
        }
    }
    Polyhedron::from_points(&pts, tol()).expect("cube construction")
}

/// Unit-edge regular dodecahedron centered at the origin.
pub fn dodecahedron() -> Polyhedron {
    let s = PHI / 2.0; // raw coordinates have edge length 2/phi
    let inv = 1.0 / PHI;
    let mut pts = Vec::with_capacity(20);
    for &x in &[-1.0, 1.0] {
        for &y in &[-1.0, 1.0] {
            for &z in &[-1.0, 1.0] {
                pts.push(Vec3::new(x, y, z));
            }
        }
    }
    for &a in &[-1.0, 1.0] {
        for &b in &[-1.0, 1.0] {
            pts.push(Vec3::new(0.0, a * inv, b * PHI));
            pts.push(Vec3::new(a * inv, b * PHI, 0.0));
            pts.push(Vec3::new(b * PHI, 0.0, a * inv));
        }
    }
    let pts: Vec<Vec3> = pts.into_iter().map(|v| v * s).collect();
    Polyhedron::from_points(&pts, tol()).expect("dodecahedron construction")
}

/// Unit-edge n-gonal prism: two regular n-gons joined by n unit squares.
pub fn prism(n: u32) -> Result<Polyhedron> {
    if n < 3 {
        return Err(GeomError::InvalidInput("prism needs n >= 3".into()));
    }
    let n = n as usize;
    let r = 0.5 / (std::f64::consts::PI / n as f64).sin();
    let mut pts = Vec::with_capacity(2 * n);
    for i in 0..n {
        let a = 2.0 * std::f64::consts::PI * i as f64 / n as f64;
        pts.push(Vec3::new(r * a.cos(), r * a.sin(), 0.5));
    }
    for i in 0..n {
        let a = 2.0 * std::f64::consts::PI * i as f64 / n as f64;
        pts.push(Vec3::new(r * a.cos(), r * a.sin(), -0.5));
    }
    let mut faces = vec![(0..n).collect::<Vec<_>>(), (n..2 * n).collect()];
    for i in 0..n {
        let j = (i + 1) % n;
        faces.push(vec![i, j, n + j, n + i]);
    }
    Polyhedron::new(pts, faces, tol())
}

/// Unit-edge n-gonal antiprism: two regular n-gons rotated by pi/n joined
/// by 2n equilateral triangles (the gap height solved so the side
/// triangles are exactly equilateral).
pub fn antiprism(n: u32) -> Result<Polyhedron> {
    if n < 3 {
        return Err(GeomError::InvalidInput("antiprism needs n >= 3".into()));
    }
    let n = n as usize;
    let half = std::f64::consts::PI / n as f64;
    let r = 0.5 / half.sin();
    let h2 = 1.0 - 2.0 * r * r * (1.0 - half.cos());
    debug_assert!(h2 > 0.0);
    let h = h2.sqrt();
    let mut pts = Vec::with_capacity(2 * n);
    for i in 0..n {
        let a = 2.0 * half * i as f64;
        pts.push(Vec3::new(r * a.cos(), r * a.sin(), h / 2.0));
    }
    for i in 0..n {
        let a = 2.0 * half * i as f64 + half;
        pts.push(Vec3::new(r * a.cos(), r * a.sin(), -h / 2.0));
    }
    let mut faces = vec![(0..n).collect::<Vec<_>>(), (n..2 * n).collect()];
    for i in 0..n {
        let j = (i + 1) % n;
        faces.push(vec![i, n + i, j]);
        faces.push(vec![n + i, n + j, j]);
    }
    Polyhedron::new(pts, faces, tol())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{dihedral_between, Tolerance};

    #[test]
    fn tetrahedron_counts_and_edges() {
        let t = tetrahedron();
        assert_eq!(t.vertex_count(), 4);
        assert_eq!(t.face_count(), 4);
        for l in t.edge_lengths() {
            assert!((l - 1.0).abs() < 1e-12);
        }
        // circumscribing sphere centered at the origin
        let r0 = t.vertices()[0].norm();
        for v in t.vertices() {
            assert!((v.norm() - r0).abs() < 1e-12);
        }
    }

    #[test]
    fn tetrahedron_dihedrals() {
        let t = tetrahedron();
        let expect = (1.0_f64 / 3.0).acos();
        for i in 0..4 {
            for j in (i + 1)..4 {
                let a = dihedral_between(t.face_planes()[i].normal, t.face_planes()[j].normal);
                assert!((a - expect).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn octahedron_counts_and_dihedral() {
        let o = octahedron_in_t();
        assert_eq!(o.vertex_count(), 6);
        assert_eq!(o.face_count(), 8);
        assert_eq!(o.edge_count(), 12);
        for l in o.edge_lengths() {
            assert!((l - 0.5).abs() < 1e-12);
        }
        // adjacent faces meet at arccos(-1/3)
        let n1 = Vec3::new(1.0, 1.0, 1.0).normalize();
        let n2 = Vec3::new(1.0, 1.0, -1.0).normalize();
        assert!((dihedral_between(n1, n2) - (-1.0_f64 / 3.0).acos()).abs() < 1e-12);
    }

    #[test]
    fn octahedron_shares_four_planes_with_t() {
        let t = tetrahedron();
        let o = octahedron_in_t();
        let mut shared = 0;
        for pt in t.face_planes() {
            for po in o.face_planes() {
                if (pt.normal - po.normal).norm() < 1e-12 && (pt.offset - po.offset).abs() < 1e-12
                {
                    shared += 1;
                }
            }
        }
        assert_eq!(shared, 4);
    }

    #[test]
    fn icosahedron_edges_equal_and_inside_t() {
        for ch in [IcosaChirality::Left, IcosaChirality::Right] {
            let i = icosahedron_in_t_with(ch);
            assert_eq!(i.vertex_count(), 12);
            assert_eq!(i.face_count(), 20);
            assert_eq!(i.edge_count(), 30);
            let ls = i.edge_lengths();
            let mean: f64 = ls.iter().sum::<f64>() / ls.len() as f64;
            for l in ls {
                assert!((l - mean).abs() < 1e-12);
            }
            // vertices satisfy all of T's halfspaces (those on the four
            // coincident faces sit exactly on the boundary)
            let t = tetrahedron();
            for v in i.vertices() {
                for p in t.face_planes() {
                    assert!(p.signed_distance(*v) < 1e-12, "vertex outside T");
                }
            }
        }
    }

    #[test]
    fn icosahedron_vertices_on_octahedron_edges_in_golden_ratio() {
        let o = octahedron_in_t();
        let i = icosahedron_in_t();
        let edges = o.edges();
        for v in i.vertices() {
            let mut found = false;
            for &(a, b) in &edges {
                let (pa, pb) = (o.vertices()[a], o.vertices()[b]);
                let t1 = (*v - pa).norm() / (pb - pa).norm();
                let on_line = (*v - pa).cross(pb - pa).norm() < 1e-12;
                if on_line && (0.0..=1.0).contains(&t1) {
                    let ratio = t1.max(1.0 - t1) / t1.min(1.0 - t1);
                    assert!((ratio - PHI).abs() < 1e-9);
                    found = true;
                    break;
                }
            }
            assert!(found, "icosahedron vertex not on an octahedron edge");
        }
    }

    #[test]
    fn icosahedron_dihedral() {
        let i = icosahedron_in_t();
        // edge-adjacent faces meet at arccos(-sqrt5/3)
        let expect = (-(5.0_f64).sqrt() / 3.0).acos();
        let mut adj: std::collections::HashMap<(usize, usize), Vec<usize>> =
            std::collections::HashMap::new();
        for (fi, face) in i.faces().iter().enumerate() {
            for w in 0..face.len() {
                let a = face[w];
                let b = face[(w + 1) % face.len()];
                adj.entry((a.min(b), a.max(b))).or_default().push(fi);
            }
        }
        for fs in adj.values() {
            let d = dihedral_between(
                i.face_planes()[fs[0]].normal,
                i.face_planes()[fs[1]].normal,
            );
            assert!((d - expect).abs() < 1e-12);
        }
    }

    #[test]
    fn prism_4_is_unit_cube() {
        let p = prism(4).unwrap();
        assert_eq!(p.face_count(), 6);
        assert_eq!(p.vertex_count(), 8);
        for l in p.edge_lengths() {
            assert!((l - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn antiprism_3_is_octahedron() {
        let a = antiprism(3).unwrap();
        assert_eq!(a.face_count(), 8);
        assert_eq!(a.vertex_count(), 6);
        for l in a.edge_lengths() {
            assert!((l - 1.0).abs() < 1e-12);
        }
        let r = crate::geom::midsphere_radius(&a, Tolerance::default()).unwrap();
        assert!((r - 0.5).abs() < 1e-12);
    }

    #[test]
    fn dodecahedron_counts() {
        let d = dodecahedron();
        assert_eq!(d.vertex_count(), 20);
        assert_eq!(d.face_count(), 12);
        assert_eq!(d.edge_count(), 30);
        for l in d.edge_lengths() {
            assert!((l - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn seeds_reject_small_n() {
        assert!(prism(2).is_err());
        assert!(antiprism(2).is_err());
    }
}
