//! Interchange format:
//!
//! ```json
//! {"n": 3, "angle": "1/2", "signs": [[0,1,-1],[1,0,1],[-1,1,0]]}
//! ```
//!
//! Non-equiangular data may instead carry `"gram": [["1","1/3"], ...]`.
//! An optional `"coordinates": {"norm": 80, "vectors": [[...], ...]}` keeps
//! integer ambient vectors when the construction has them.

use std::fmt::Write;

use serde::Deserialize;

use super::{Coordinates, LineSet, SignMatrix};
use crate::error::{Error, Result};
use crate::linalg::{parse_rational, RatMatrix};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LineSetFile {
    n: usize,
    angle: String,
    #[serde(default)]
    signs: Option<Vec<Vec<i8>>>,
    #[serde(default)]
    gram: Option<Vec<Vec<String>>>,
    #[serde(default)]
    coordinates: Option<Coordinates>,
}

pub fn from_json(text: &str) -> Result<LineSet> {
    let file: LineSetFile = serde_json::from_str(text)?;
    let angle = parse_rational(&file.angle)?;
    let ls = match (file.signs, file.gram) {
        (Some(rows), None) => {
            if rows.len() != file.n {
                return Err(Error::Format(format!("n = {} but {} sign rows", file.n, rows.len())));
            }
            LineSet::from_sign_matrix(&SignMatrix::from_rows(&rows)?, angle)
        }
        (None, Some(rows)) => {
            if rows.len() != file.n {
                return Err(Error::Format(format!("n = {} but {} gram rows", file.n, rows.len())));
            }
            let parsed = rows
                .iter()
                .map(|row| row.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            let gram = RatMatrix::from_rows(parsed)?;
            if gram.cols() != file.n && file.n > 0 {
                return Err(Error::Format("gram is not square".into()));
            }
            LineSet::from_gram(gram, angle)?
        }
        (Some(_), Some(_)) => return Err(Error::Format("both \"signs\" and \"gram\" given".into())),
        (None, None) => return Err(Error::Format("missing \"signs\" or \"gram\"".into())),
    };
    if let Some(c) = &file.coordinates {
        check_coordinates(&ls, c)?;
    }
    Ok(ls.with_coordinates(file.coordinates))
}

fn check_coordinates(ls: &LineSet, c: &Coordinates) -> Result<()> {
    if c.vectors.len() != ls.n() {
        return Err(Error::Format("coordinate count differs from n".into()));
    }
    if c.norm <= 0 {
        return Err(Error::Format("coordinate norm must be positive".into()));
    }
    let dim = c.vectors.first().map_or(0, Vec::len);
    if c.vectors.iter().any(|v| v.len() != dim) {
        return Err(Error::Format("coordinate vectors differ in length".into()));
    }
    for i in 0..ls.n() {
        for j in 0..ls.n() {
            let dot = c.vectors[i]
                .iter()
                .zip(&c.vectors[j])
                .try_fold(0i64, |acc, (a, b)| a.checked_mul(*b).and_then(|p| acc.checked_add(p)))
                .ok_or_else(|| Error::Format("coordinate overflow".into()))?;
            let value = crate::linalg::rat(dot, c.norm);
            if &value != ls.gram().get(i, j) {
                return Err(Error::Format(format!("coordinates disagree with gram at ({i}, {j})")));
            }
        }
    }
    Ok(())
}

/// Serializes with one matrix row per line. Equiangular sets are written as
/// signs, anything else as an explicit `"gram"`.
pub fn to_json(ls: &LineSet) -> String {
    let mut out = String::new();
    let n = ls.n();
    let _ = write!(out, "{{\n  \"n\": {n},\n  \"angle\": \"{}\",\n", ls.angle());
    match ls.sign_matrix() {
        Some(s) => {
            out.push_str("  \"signs\": [");
            for i in 0..n {
                let row: Vec<String> = s.row(i).iter().map(ToString::to_string).collect();
                let sep = if i + 1 < n { "," } else { "" };
                let _ = write!(out, "\n    [{}]{sep}", row.join(","));
            }
        }
        None => {
            out.push_str("  \"gram\": [");
            for i in 0..n {
                let row: Vec<String> =
                    ls.gram().row(i).iter().map(|x| format!("\"{x}\"")).collect();
                let sep = if i + 1 < n { "," } else { "" };
                let _ = write!(out, "\n    [{}]{sep}", row.join(","));
            }
        }
    }
    out.push_str(if n > 0 { "\n  ]" } else { "]" });
    if let Some(c) = ls.coordinates() {
        let _ = write!(out, ",\n  \"coordinates\": {{\n    \"norm\": {},\n    \"vectors\": [", c.norm);
        for (i, v) in c.vectors.iter().enumerate() {
            let row: Vec<String> = v.iter().map(ToString::to_string).collect();
            let sep = if i + 1 < c.vectors.len() { "," } else { "" };
            let _ = write!(out, "\n      [{}]{sep}", row.join(","));
        }
        out.push_str(if c.vectors.is_empty() { "]\n  }" } else { "\n    ]\n  }" });
    }
    out.push_str("\n}\n");
    out
}
