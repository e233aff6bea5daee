//! Line-delimited JSON records for dessins, quotients and shadows.
//!
//! ```text
//! {"degree": 6, "x": "(1,4,5,2)(3,6)", "y": [6,1,2,5,4,3]}
//! {"degree": 3, "x": "(1,2)", "y": "(2,3)", "c": "()"}
//! {"m": 1, "f": "y x y x^2 y^2 x^-3 y^-4"}
//! ```
//!
//! Permutations are given either in cycle notation or as a 1-indexed image
//! array (a JSON array or a bracketed string). A dessin record may carry the
//! third entry `z`, which is checked against `x` and `y`. Blank lines and
//! lines starting with `#` are skipped.

use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::dessin::Dessin;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::quotient::FiniteQuotient;
use crate::shadow::RawShadow;
use crate::word::FreeWord;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PermValue {
    Text(String),
    Images(Vec<usize>),
}

impl PermValue {
    pub fn to_permutation(&self, degree: Option<usize>) -> Result<Permutation> {
        let p = match self {
            PermValue::Text(s) => Permutation::parse(s, degree)?,
            PermValue::Images(v) => Permutation::from_one_indexed(v)?,
        };
        if let Some(d) = degree {
            if p.degree() != d {
                return Err(Error::DegreeMismatch {
                    left: d,
                    right: p.degree(),
                });
            }
        }
        Ok(p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DessinRecord {
    pub degree: Option<usize>,
    pub x: PermValue,
    pub y: PermValue,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<PermValue>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientRecord {
    pub degree: Option<usize>,
    pub x: PermValue,
    pub y: PermValue,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<PermValue>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShadowRecord {
    pub m: i64,
    pub f: String,
}

/// Resolves the degree of a record: explicit, or the common degree of the
/// entries that determine one.
fn parse_pair(
    degree: Option<usize>,
    x: &PermValue,
    y: &PermValue,
) -> Result<(Permutation, Permutation)> {
    if degree.is_some() {
        return Ok((x.to_permutation(degree)?, y.to_permutation(degree)?));
    }
    let (px, py) = (x.to_permutation(None)?, y.to_permutation(None)?);
    let d = px.degree().max(py.degree());
    Ok((x.to_permutation(Some(d))?, y.to_permutation(Some(d))?))
}

impl DessinRecord {
    pub fn to_dessin(&self) -> Result<Dessin> {
        let (x, y) = parse_pair(self.degree, &self.x, &self.y)?;
        match &self.z {
            Some(z) => Dessin::from_triple(&x, &y, &z.to_permutation(Some(x.degree()))?),
            None => Dessin::from_pair(&x, &y),
        }
    }

    pub fn from_dessin(d: &Dessin) -> Self {
        let (x, y, z) = d.triple();
        DessinRecord {
            degree: Some(d.degree()),
            x: PermValue::Text(x.to_string()),
            y: PermValue::Text(y.to_string()),
            z: Some(PermValue::Text(z.to_string())),
        }
    }
}

impl QuotientRecord {
    pub fn to_quotient(&self) -> Result<FiniteQuotient> {
        let (x, y) = parse_pair(self.degree, &self.x, &self.y)?;
        let c = self
            .c
            .as_ref()
            .map(|c| c.to_permutation(Some(x.degree())))
            .transpose()?;
        FiniteQuotient::new(x, y, c)
    }

    pub fn from_quotient(q: &FiniteQuotient) -> Self {
        QuotientRecord {
            degree: Some(q.degree()),
            x: PermValue::Text(q.img_x().to_string()),
            y: PermValue::Text(q.img_y().to_string()),
            c: q.img_c().map(|c| PermValue::Text(c.to_string())),
        }
    }
}

impl ShadowRecord {
    pub fn to_shadow(&self) -> Result<RawShadow> {
        Ok(RawShadow::new(self.m, self.f.parse::<FreeWord>()?))
    }

    pub fn from_shadow(s: &RawShadow) -> Self {
        ShadowRecord {
            m: s.m,
            f: s.f.to_string(),
        }
    }
}

/// Parses every record of a line-delimited file. A file holding a single
/// JSON array of records is accepted too.
pub fn parse_records<T: DeserializeOwned>(text: &str) -> Result<Vec<T>> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        if let Ok(all) = serde_json::from_str::<Vec<T>>(trimmed) {
            return Ok(all);
        }
    }
    let mut out = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let rec =
            serde_json::from_str(line).map_err(|e| Error::Parse(format!("line {}: {e}", k + 1)))?;
        out.push(rec);
    }
    Ok(out)
}

pub fn read_records<T: DeserializeOwned>(path: &Path) -> Result<Vec<T>> {
    parse_records(&fs::read_to_string(path)?)
}

pub fn read_dessins(path: &Path) -> Result<Vec<Dessin>> {
    read_records::<DessinRecord>(path)?
        .iter()
        .map(DessinRecord::to_dessin)
        .collect()
}

pub fn read_shadows(path: &Path) -> Result<Vec<RawShadow>> {
    read_records::<ShadowRecord>(path)?
        .iter()
        .map(ShadowRecord::to_shadow)
        .collect()
}

/// The first record of a quotient file.
pub fn read_quotient(path: &Path) -> Result<FiniteQuotient> {
    let recs = read_records::<QuotientRecord>(path)?;
    let first = recs
        .first()
        .ok_or_else(|| Error::Parse(format!("no quotient record in {}", path.display())))?;
    first.to_quotient()
}

pub fn to_json_line<T: Serialize>(rec: &T) -> String {
    serde_json::to_string(rec).expect("records serialize")
}
