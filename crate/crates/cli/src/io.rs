//! Mesh serialization: Wavefront OBJ export and a JSON interchange format.
//!
//! JSON schema: `{"name": text, "vertices": [[x,y,z]...], "faces": [[i...]...]}`
//! with 0-based indices. OBJ uses 1-based `f` lines, counterclockwise
//! outward. Coordinates are printed with the shortest representation that
//! round-trips f64 exactly.

use std::fmt;

use polytet::{Polyhedron, Tolerance, Vec3};
use serde::{Deserialize, Serialize};

#[derive(Debug)]
pub enum IoError {
    Json(serde_json::Error),
    Malformed(String),
    Geometry(polytet::GeomError),
}

impl fmt::Display for IoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IoError::Json(e) => write!(f, "malformed JSON at line {}, column {}: {e}", e.line(), e.column()),
            IoError::Malformed(m) => write!(f, "malformed solid file: {m}"),
            IoError::Geometry(e) => write!(f, "invalid geometry: {e}"),
        }
    }
}

impl std::error::Error for IoError {}

#[derive(Serialize, Deserialize)]
struct SolidFile {
    name: String,
    vertices: Vec<[f64; 3]>,
    faces: Vec<Vec<usize>>,
}

pub fn export_obj(p: &Polyhedron, name: &str) -> String {
    let mut out = String::new();
    out.push_str(&format!("o {name}\n"));
    for v in p.vertices() {
        out.push_str(&format!("v {} {} {}\n", v.x, v.y, v.z));
    }
    for face in p.faces() {
        out.push('f');
        for &i in face {
            out.push_str(&format!(" {}", i + 1));
        }
        out.push('\n');
    }
    out
}

pub fn export_json(p: &Polyhedron, name: &str) -> String {
    let file = SolidFile {
        name: name.to_string(),
        vertices: p.vertices().iter().map(|v| [v.x, v.y, v.z]).collect(),
        faces: p.faces().to_vec(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("serialization cannot fail");
    s.push('\n');
    s
}

pub fn import_json(text: &str) -> Result<(String, Polyhedron), IoError> {
    let file: SolidFile = serde_json::from_str(text).map_err(IoError::Json)?;
    for (fi, face) in file.faces.iter().enumerate() {
        if face.len() < 3 {
            return Err(IoError::Malformed(format!(
                "face {fi} has fewer than 3 vertices"
            )));
        }
        for &i in face {
            if i >= file.vertices.len() {
                return Err(IoError::Malformed(format!(
                    "face {fi} references vertex index {i}, but only {} vertices exist",
                    file.vertices.len()
                )));
            }
        }
    }
    let vertices: Vec<Vec3> = file
        .vertices
        .iter()
        .map(|&[x, y, z]| Vec3::new(x, y, z))
        .collect();
    let p = Polyhedron::new(vertices, file.faces, Tolerance::default())
        .map_err(IoError::Geometry)?;
    Ok((file.name, p))
}
