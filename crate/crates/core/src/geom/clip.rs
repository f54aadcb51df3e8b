//! Halfspace clipping and re-canonicalization of convex solids.

use crate::error::{GeomError, Result};

use super::plane::Plane;
use super::polyhedron::{centroid_of, face_centroid_of, fit_plane, order_cycle, Polyhedron};
use super::tolerance::Tolerance;
use super::vec3::Vec3;

/// Intersects `p` with the halfspace `{ x : x . h.normal <= h.offset }`.
///
/// Each face polygon is clipped against the halfspace and the cut
/// cross-section is collected and ordered into the new face, so mutually
/// intersecting cut planes (truncation past the edge midpoint) need no
/// special casing. Returns `p` unchanged when the halfspace contains it,
/// including the degenerate case of a plane touching only a vertex or edge.
pub fn clip(p: &Polyhedron, h: &Plane, tol: Tolerance) -> Result<Polyhedron> {
    let eps = tol.coplanar;
    let dist: Vec<f64> = p
        .vertices()
        .iter()
        .map(|&v| h.signed_distance(v))
        .collect();
    let any_outside = dist.iter().any(|&d| d > eps);
    let any_inside = dist.iter().any(|&d| d < -eps);
    if !any_outside {
        return Ok(p.clone());
    }
    if !any_inside {
        if dist.iter().any(|&d| d.abs() <= eps) {
            return Err(GeomError::DegenerateResult);
        }
        return Err(GeomError::EmptyResult);
    }

    let mut points: Vec<Vec3> = Vec::new();
    let mut faces: Vec<Vec<usize>> = Vec::new();
    let mut on_plane: Vec<Vec3> = Vec::new();

    for face in p.faces() {
        let mut out: Vec<Vec3> = Vec::new();
        let n = face.len();
        for w in 0..n {
            let a = face[w];
            let b = face[(w + 1) % n];
            let (va, vb) = (p.vertices()[a], p.vertices()[b]);
            let (da, db) = (dist[a], dist[b]);
            let a_in = da <= eps;
            let b_in = db <= eps;
            if a_in {
                out.push(va);
            }
            if a_in != b_in {
                // a genuine crossing; endpoints near the plane were
                // classified as inside, so da != db here
                let t = da / (da - db);
                out.push(va.lerp(vb, t));
            }
        }
        if out.len() >= 3 {
            let start = points.len();
            points.extend_from_slice(&out);
            faces.push((start..points.len()).collect());
        }
        for &q in &out {
            if h.signed_distance(q).abs() <= eps {
                on_plane.push(q);
            }
        }
    }
    if faces.is_empty() {
        return Err(GeomError::EmptyResult);
    }

    // cross-section polygon in the cutting plane
    let mut cut: Vec<Vec3> = Vec::new();
    for q in on_plane {
        if !cut.iter().any(|&c| c.dist(q) < tol.weld) {
            cut.push(q);
        }
    }
    if cut.len() >= 3 {
        let start = points.len();
        let mut idx: Vec<usize> = (start..start + cut.len()).collect();
        points.extend_from_slice(&cut);
        order_cycle(&points, &mut idx, h);
        faces.push(idx);
    }

    canonicalize(&points, &faces, tol)
}

/// Rebuilds a canonical polyhedron from raw clipped geometry.
///
/// Welds near-duplicate vertices, merges coplanar faces, strips collinear
/// face vertices, orients all faces outward and re-fits every face plane
/// from its welded vertices.
pub fn canonicalize(
    points: &[Vec3],
    raw_faces: &[Vec<usize>],
    tol: Tolerance,
) -> Result<Polyhedron> {
    // weld vertices
    let mut reps: Vec<Vec3> = Vec::new();
    let mut remap: Vec<usize> = Vec::with_capacity(points.len());
    for &q in points {
        match reps.iter().position(|&r| r.dist(q) < tol.weld) {
            Some(i) => remap.push(i),
            None => {
                reps.push(q);
                remap.push(reps.len() - 1);
            }
        }
    }

    // remap faces, dropping repeats and degenerate cycles
    let mut faces: Vec<Vec<usize>> = Vec::new();
    for raw in raw_faces {
        let mut cyc: Vec<usize> = Vec::with_capacity(raw.len());
        for &i in raw {
            let m = remap[i];
            if cyc.last() != Some(&m) {
                cyc.push(m);
            }
        }
        while cyc.len() > 1 && cyc.first() == cyc.last() {
            cyc.pop();
        }
        let mut seen = std::collections::HashSet::new();
        cyc.retain(|&i| seen.insert(i));
        if cyc.len() >= 3 {
            faces.push(cyc);
        }
    }
    if faces.is_empty() {
        return Err(GeomError::NonConvexInput("no faces survive welding".into()));
    }

    // fit planes and merge coplanar faces (same outward normal)
    let interior = centroid_of(&reps);
    let mut planes: Vec<Plane> = Vec::with_capacity(faces.len());
    for face in &mut faces {
        let mut plane =
            fit_plane(&reps, face).map_err(|_| GeomError::NonConvexInput("flat face".into()))?;
        if plane.normal.dot(face_centroid_of(&reps, face) - interior) < 0.0 {
            face.reverse();
            plane = plane.flipped();
        }
        planes.push(plane);
    }
    let mut merged: Vec<(Plane, Vec<usize>)> = Vec::new();
    for (face, plane) in faces.iter().zip(&planes) {
        match merged.iter_mut().find(|(q, _)| {
            q.normal.dot(plane.normal) > 1.0 - tol.coplanar
                && (q.offset - plane.offset).abs() < tol.coplanar
        }) {
            Some((_, members)) => {
                for &i in face {
                    if !members.contains(&i) {
                        members.push(i);
                    }
                }
            }
            None => merged.push((*plane, face.clone())),
        }
    }
    let mut faces: Vec<Vec<usize>> = Vec::with_capacity(merged.len());
    for (plane, mut members) in merged {
        order_cycle(&reps, &mut members, &plane);
        faces.push(members);
    }

    // a point collinear in every face that contains it is not a vertex
    loop {
        let mut collinear_in_all = vec![true; reps.len()];
        let mut appears = vec![false; reps.len()];
        for face in &faces {
            let n = face.len();
            for w in 0..n {
                let prev = reps[face[(w + n - 1) % n]];
                let cur = reps[face[w]];
                let next = reps[face[(w + 1) % n]];
                appears[face[w]] = true;
                let chord = next - prev;
                let dev = (cur - prev).cross(chord).norm() / chord.norm().max(tol.weld);
                if dev > tol.coplanar {
                    collinear_in_all[face[w]] = false;
                }
            }
        }
        let drop: Vec<usize> = (0..reps.len())
            .filter(|&i| appears[i] && collinear_in_all[i])
            .collect();
        if drop.is_empty() {
            break;
        }
        for face in &mut faces {
            face.retain(|i| !drop.contains(i));
        }
        faces.retain(|f| f.len() >= 3);
        if faces.is_empty() {
            return Err(GeomError::NonConvexInput(
                "all faces degenerate after collinear removal".into(),
            ));
        }
    }

    // compact unused vertices
    let mut used = vec![false; reps.len()];
    for face in &faces {
        for &i in face {
            used[i] = true;
        }
    }
    let mut compact: Vec<usize> = vec![usize::MAX; reps.len()];
    let mut vertices: Vec<Vec3> = Vec::new();
    for (i, &u) in used.iter().enumerate() {
        if u {
            compact[i] = vertices.len();
            vertices.push(reps[i]);
        }
    }
    for face in &mut faces {
        for i in face.iter_mut() {
            *i = compact[*i];
        }
    }

    Polyhedron::new(vertices, faces, tol)
}
