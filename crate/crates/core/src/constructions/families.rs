//! Line sets cut out of the octad design by orthogonality conditions.

use super::octads::{generate_octads, Octad};
use super::vectors::{c, c1, c2, dot, e1_minus_e2, e1_minus_e3, octad_vector, IntVector24};
use crate::error::{Error, Result};
use crate::linalg::rat;
use crate::lineset::{Coordinates, LineSet};

const TABLE_OCTADS: &str = include_str!("../../data/taylor90_octads.txt");

/// Indices (1-based, into the 90-set) of a basis of its span.
pub const TAYLOR_BASIS_J: [usize; 20] =
    [6, 7, 13, 19, 21, 24, 27, 34, 43, 45, 48, 52, 57, 61, 66, 70, 74, 80, 82, 89];

/// Octads through point 1 with their vectors `octad_vector(E)`. Pairwise
/// products are ±16 and norms 80, so the lines have angle 1/5.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OctadFamily {
    pub octads: Vec<Octad>,
    pub vectors: Vec<IntVector24>,
}

impl OctadFamily {
    pub fn from_octads(octads: Vec<Octad>) -> Self {
        let vectors = octads.iter().map(|&o| octad_vector(o)).collect();
        Self { octads, vectors }
    }

    pub fn len(&self) -> usize {
        self.octads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.octads.is_empty()
    }

    pub fn lineset(&self) -> LineSet {
        let coords = Coordinates {
            norm: 80,
            vectors: self.vectors.iter().map(|v| v.to_vec()).collect(),
        };
        LineSet::from_coordinates(coords, rat(1, 5)).expect("square by construction")
    }
}

/// Keeps the members orthogonal to every constraint.
pub fn filter_orthogonal(family: &OctadFamily, constraints: &[IntVector24]) -> Result<OctadFamily> {
    let keep: Vec<usize> = (0..family.len())
        .filter(|&i| constraints.iter().all(|c| dot(&family.vectors[i], c) == 0))
        .collect();
    if keep.is_empty() {
        return Err(Error::EmptyResult);
    }
    Ok(OctadFamily {
        octads: keep.iter().map(|&i| family.octads[i]).collect(),
        vectors: keep.iter().map(|&i| family.vectors[i]).collect(),
    })
}

/// All 253 octads through point 1.
pub fn octads_through_one() -> OctadFamily {
    let octads = generate_octads().octads().iter().copied().filter(|o| o.contains(1)).collect();
    OctadFamily::from_octads(octads)
}

/// The reference list of the 90 octads, lexicographic.
pub fn table_octads() -> Vec<Octad> {
    TABLE_OCTADS
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let pts: Vec<u8> = l.split_whitespace().map(|t| t.parse().expect("table entry")).collect();
            Octad::from_points(&pts).expect("table octad")
        })
        .collect()
}

pub fn taylor_family() -> Result<OctadFamily> {
    let family = filter_orthogonal(&octads_through_one(), &[e1_minus_e2(), c(), c1(), c2()])?;
    if family.len() != 90 {
        return Err(Error::ConstructionMismatch(format!("{} survivors, expected 90", family.len())));
    }
    let table = table_octads();
    if let Some(k) = (0..90).find(|&k| family.octads[k] != table[k]) {
        return Err(Error::ConstructionMismatch(format!(
            "survivor {} is {:?}, reference has {:?}",
            k + 1,
            family.octads[k].points(),
            table[k].points()
        )));
    }
    Ok(family)
}

/// 90 lines in R^20 at angle 1/5.
pub fn taylor_90() -> Result<LineSet> {
    Ok(taylor_family()?.lineset())
}

/// The basis `J`, 0-based.
pub fn taylor_basis() -> Vec<usize> {
    TAYLOR_BASIS_J.iter().map(|j| j - 1).collect()
}

/// Indices (0-based, into the 90-set) kept by the 72-line restriction.
pub fn asche_indices(taylor: &OctadFamily) -> Vec<usize> {
    (0..taylor.len()).filter(|&i| !taylor.octads[i].contains(3)).collect()
}

pub fn asche_family() -> Result<OctadFamily> {
    let taylor = taylor_family()?;
    let keep = asche_indices(&taylor);
    if keep.len() != 72 || taylor.len() - keep.len() != 18 {
        return Err(Error::ConstructionMismatch(format!("{} kept, expected 72", keep.len())));
    }
    let family = OctadFamily {
        octads: keep.iter().map(|&i| taylor.octads[i]).collect(),
        vectors: keep.iter().map(|&i| taylor.vectors[i]).collect(),
    };
    if family.vectors.iter().any(|v| dot(v, &e1_minus_e3()) != 0) {
        return Err(Error::ConstructionMismatch("kept vector not orthogonal to e1 - e3".into()));
    }
    Ok(family)
}

/// 72 lines in R^19 at angle 1/5.
pub fn asche_72() -> Result<LineSet> {
    Ok(asche_family()?.lineset())
}
