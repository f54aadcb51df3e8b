//! Named recipes binding Conway-style names to construction pipelines,
//! with combinatorial signatures for regression.
//!
//! All embeddable solids are emitted in the coordinates of the unit-edge
//! tetrahedron, so cross-solid comparisons (shared normals, containment)
//! need no re-registration.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{GeomError, Result};
use crate::geom::{Polyhedron, Tolerance};
use crate::seeds::{self, PHI};
use crate::truncation::{
    skew_truncate, vertex_edge_truncate, vertex_truncate, solve_ve_params, SnubChirality,
    SnubSpec, VeMode,
};

/// Closed list of buildable solids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[allow(clippy::upper_case_acronyms)]
pub enum SolidName {
    T,
    C,
    O,
    D,
    I,
    TT,
    TC,
    TO,
    TD,
    TI,
    CO,
    ID,
    EO,
    EI,
    TCO,
    TID,
    SC,
    SD,
    Prism(u32),
    Antiprism(u32),
}

impl SolidName {
    /// The 18 fixed-name entries (everything except the two families).
    pub const FIXED: [SolidName; 18] = [
        SolidName::T,
        SolidName::C,
        SolidName::O,
        SolidName::D,
        SolidName::I,
        SolidName::TT,
        SolidName::TC,
        SolidName::TO,
        SolidName::TD,
        SolidName::TI,
        SolidName::CO,
        SolidName::ID,
        SolidName::EO,
        SolidName::EI,
        SolidName::TCO,
        SolidName::TID,
        SolidName::SC,
        SolidName::SD,
    ];

    /// The 15 solids with a 4-face embedding in the tetrahedron.
    pub const EMBEDDABLE: [SolidName; 15] = [
        SolidName::O,
        SolidName::I,
        SolidName::TT,
        SolidName::TC,
        SolidName::TO,
        SolidName::TD,
        SolidName::TI,
        SolidName::CO,
        SolidName::ID,
        SolidName::EO,
        SolidName::EI,
        SolidName::TCO,
        SolidName::TID,
        SolidName::SC,
        SolidName::SD,
    ];
}

impl fmt::Display for SolidName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolidName::T => write!(f, "T"),
            SolidName::C => write!(f, "C"),
            SolidName::O => write!(f, "O"),
            SolidName::D => write!(f, "D"),
            SolidName::I => write!(f, "I"),
            SolidName::TT => write!(f, "tT"),
            SolidName::TC => write!(f, "tC"),
            SolidName::TO => write!(f, "tO"),
            SolidName::TD => write!(f, "tD"),
            SolidName::TI => write!(f, "tI"),
            SolidName::CO => write!(f, "CO"),
            SolidName::ID => write!(f, "ID"),
            SolidName::EO => write!(f, "eO"),
            SolidName::EI => write!(f, "eI"),
            SolidName::TCO => write!(f, "tCO"),
            SolidName::TID => write!(f, "tID"),
            SolidName::SC => write!(f, "sC"),
            SolidName::SD => write!(f, "sD"),
            SolidName::Prism(n) => write!(f, "P{n}"),
            SolidName::Antiprism(n) => write!(f, "A{n}"),
        }
    }
}

impl FromStr for SolidName {
    type Err = GeomError;

    fn from_str(s: &str) -> Result<Self> {
        let fixed = match s {
            "T" => Some(SolidName::T),
            "C" => Some(SolidName::C),
            "O" => Some(SolidName::O),
            "D" => Some(SolidName::D),
            "I" => Some(SolidName::I),
            "tT" => Some(SolidName::TT),
            "tC" => Some(SolidName::TC),
            "tO" => Some(SolidName::TO),
            "tD" => Some(SolidName::TD),
            "tI" => Some(SolidName::TI),
            "CO" => Some(SolidName::CO),
            "ID" => Some(SolidName::ID),
            "eO" => Some(SolidName::EO),
            "eI" => Some(SolidName::EI),
            "tCO" => Some(SolidName::TCO),
            "tID" => Some(SolidName::TID),
            "sC" => Some(SolidName::SC),
            "sD" => Some(SolidName::SD),
            _ => None,
        };
        if let Some(name) = fixed {
            return Ok(name);
        }
        if let Some(rest) = s.strip_prefix('P') {
            if let Ok(n) = rest.parse::<u32>() {
                if n >= 3 {
                    return Ok(SolidName::Prism(n));
                }
            }
        }
        if let Some(rest) = s.strip_prefix('A') {
            if let Ok(n) = rest.parse::<u32>() {
                if n >= 3 {
                    return Ok(SolidName::Antiprism(n));
                }
            }
        }
        Err(GeomError::InvalidInput(format!("unknown solid name '{s}'")))
    }
}

/// Dihedral angle of the octahedron, arccos(-1/3).
pub fn theta_octahedron() -> f64 {
    (-1.0_f64 / 3.0).acos()
}

/// Dihedral angle of the icosahedron, arccos(-sqrt(5)/3).
pub fn theta_icosahedron() -> f64 {
    (-(5.0_f64).sqrt() / 3.0).acos()
}

/// Vertex truncation depth that turns the octahedron into the truncated
/// cube: (2+sqrt2)/(3+2 sqrt2) = 2 - sqrt2.
pub fn tc_depth() -> f64 {
    let s2 = 2.0_f64.sqrt();
    (2.0 + s2) / (3.0 + 2.0 * s2)
}

/// Vertex truncation depth that turns the icosahedron into the truncated
/// dodecahedron: (2+phi)/(3+2 phi).
pub fn td_depth() -> f64 {
    (2.0 + PHI) / (3.0 + 2.0 * PHI)
}

/// Builds the named solid. Embeddable solids come out inside the
/// unit-edge tetrahedron.
pub fn build(name: SolidName) -> Result<Polyhedron> {
    build_with(name, Tolerance::default())
}

pub fn build_with(name: SolidName, tol: Tolerance) -> Result<Polyhedron> {
    let o = seeds::octahedron_in_t;
    let i = seeds::icosahedron_in_t;
    match name {
        SolidName::T => Ok(seeds::tetrahedron()),
        SolidName::C => Ok(seeds::cube()),
        SolidName::O => Ok(o()),
        SolidName::D => Ok(seeds::dodecahedron()),
        SolidName::I => Ok(i()),
        SolidName::Prism(n) => seeds::prism(n),
        SolidName::Antiprism(n) => seeds::antiprism(n),
        SolidName::TT => vertex_truncate(&seeds::tetrahedron(), 1.0 / 3.0, tol),
        SolidName::TO => vertex_truncate(&o(), 1.0 / 3.0, tol),
        SolidName::TI => vertex_truncate(&i(), 1.0 / 3.0, tol),
        SolidName::CO => vertex_truncate(&o(), 0.5, tol),
        SolidName::ID => vertex_truncate(&i(), 0.5, tol),
        SolidName::TC => vertex_truncate(&o(), tc_depth(), tol),
        SolidName::TD => vertex_truncate(&i(), td_depth(), tol),
        SolidName::EO => {
            vertex_edge_truncate(&o(), solve_ve_params(theta_octahedron(), VeMode::Expand)?, tol)
        }
        SolidName::TCO => vertex_edge_truncate(
            &o(),
            solve_ve_params(theta_octahedron(), VeMode::Omnitruncate)?,
            tol,
        ),
        SolidName::EI => vertex_edge_truncate(
            &i(),
            solve_ve_params(theta_icosahedron(), VeMode::Expand)?,
            tol,
        ),
        SolidName::TID => vertex_edge_truncate(
            &i(),
            solve_ve_params(theta_icosahedron(), VeMode::Omnitruncate)?,
            tol,
        ),
        SolidName::SC => skew_truncate(&o(), SnubSpec::for_angle(90.0, SnubChirality::Left)?, tol),
        SolidName::SD => skew_truncate(&i(), SnubSpec::for_angle(108.0, SnubChirality::Left)?, tol),
    }
}

/// Combinatorial fingerprint: counts plus the face census (polygon size
/// to number of faces).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    pub v: usize,
    pub e: usize,
    pub f: usize,
    pub face_census: BTreeMap<usize, usize>,
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V={} E={} F={} census{{", self.v, self.e, self.f)?;
        let mut first = true;
        for (size, count) in &self.face_census {
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{size}:{count}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

pub fn signature(p: &Polyhedron) -> Signature {
    let mut face_census = BTreeMap::new();
    for face in p.faces() {
        *face_census.entry(face.len()).or_insert(0) += 1;
    }
    Signature {
        v: p.vertex_count(),
        e: p.edge_count(),
        f: p.face_count(),
        face_census,
    }
}

fn sig(v: usize, e: usize, f: usize, census: &[(usize, usize)]) -> Signature {
    Signature {
        v,
        e,
        f,
        face_census: census.iter().copied().collect(),
    }
}

/// Frozen regression fixtures, originally derived by an independent
/// combinatorial enumeration of each construction.
pub fn expected_signature(name: SolidName) -> Signature {
    match name {
        SolidName::T => sig(4, 6, 4, &[(3, 4)]),
        SolidName::C => sig(8, 12, 6, &[(4, 6)]),
        SolidName::O => sig(6, 12, 8, &[(3, 8)]),
        SolidName::D => sig(20, 30, 12, &[(5, 12)]),
        SolidName::I => sig(12, 30, 20, &[(3, 20)]),
        SolidName::TT => sig(12, 18, 8, &[(3, 4), (6, 4)]),
        SolidName::TC => sig(24, 36, 14, &[(3, 8), (8, 6)]),
        SolidName::TO => sig(24, 36, 14, &[(4, 6), (6, 8)]),
        SolidName::TD => sig(60, 90, 32, &[(3, 20), (10, 12)]),
        SolidName::TI => sig(60, 90, 32, &[(5, 12), (6, 20)]),
        SolidName::CO => sig(12, 24, 14, &[(3, 8), (4, 6)]),
        SolidName::ID => sig(30, 60, 32, &[(3, 20), (5, 12)]),
        SolidName::EO => sig(24, 48, 26, &[(3, 8), (4, 18)]),
        SolidName::EI => sig(60, 120, 62, &[(3, 20), (4, 30), (5, 12)]),
        SolidName::TCO => sig(48, 72, 26, &[(4, 12), (6, 8), (8, 6)]),
        SolidName::TID => sig(120, 180, 62, &[(4, 30), (6, 20), (10, 12)]),
        SolidName::SC => sig(24, 60, 38, &[(3, 32), (4, 6)]),
        SolidName::SD => sig(60, 150, 92, &[(3, 80), (5, 12)]),
        SolidName::Prism(n) => {
            let n = n as usize;
            if n == 4 {
                sig(8, 12, 6, &[(4, 6)])
            } else {
                sig(2 * n, 3 * n, n + 2, &[(4, n), (n, 2)])
            }
        }
        SolidName::Antiprism(n) => {
            let n = n as usize;
            if n == 3 {
                sig(6, 12, 8, &[(3, 8)])
            } else {
                sig(2 * n, 4 * n, 2 * n + 2, &[(3, 2 * n), (n, 2)])
            }
        }
    }
}
