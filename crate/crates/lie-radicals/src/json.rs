//! The algebra interchange format and the semidirect-product input file.
//!
//! ```json
//! {
//!   "name": "heisenberg3",
//!   "dim": 3,
//!   "basis": ["x", "y", "z"],
//!   "brackets": [ { "i": 0, "j": 1, "coeffs": { "2": "1" } } ]
//! }
//! ```
//!
//! Bracket entries require `i < j`; omitted pairs are zero. Coefficients
//! use the scalar text form (`p/q`, `p/q+r/s*i`, `p/q-r/s*i`, bare `i`).

use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
}

impl AlgebraFile {
    pub fn to_algebra(&self) -> Result<LieAlgebra> {
        let mut table = Vec::new();
        for entry in &self.brackets {
            if entry.i >= entry.j {
                return Err(Error::InvalidData(format!(
                    "bracket entry [{},{}] must have i < j",
                    entry.i, entry.j
                )));
            }
            let mut v = vec![Scalar::zero(); self.dim];
            for (k, text) in &entry.coeffs {
                let idx: usize = k
                    .parse()
                    .map_err(|_| Error::InvalidData(format!("bad coordinate key {k:?}")))?;
                if idx >= self.dim {
                    return Err(Error::InvalidData(format!(
                        "coordinate {idx} out of range for dimension {}",
                        self.dim
                    )));
                }
                v[idx] = text.parse()?;
            }
            table.push((entry.i, entry.j, v));
        }
        LieAlgebra::new(self.name.clone(), self.dim, self.basis.clone(), table)
    }

    pub fn from_algebra(l: &LieAlgebra) -> AlgebraFile {
        let mut brackets = Vec::new();
        for i in 0..l.dim() {
            for j in (i + 1)..l.dim() {
                let coords = l.structure_constant(i, j);
                let mut coeffs = BTreeMap::new();
                for (k, c) in coords.iter().enumerate() {
                    if !c.is_zero() {
                        coeffs.insert(k.to_string(), c.to_string());
                    }
                }
                if !coeffs.is_empty() {
                    brackets.push(BracketEntry { i, j, coeffs });
                }
            }
        }
        AlgebraFile {
            name: l.name.clone(),
            dim: l.dim(),
            basis: l.labels().to_vec(),
            brackets,
        }
    }
}

pub fn parse_algebra(text: &str) -> Result<LieAlgebra> {
    let file: AlgebraFile = serde_json::from_str(text)
        .map_err(|e| Error::InvalidData(format!("json parse error: {e}")))?;
    file.to_algebra()
}

pub fn emit_algebra(l: &LieAlgebra) -> String {
    serde_json::to_string_pretty(&AlgebraFile::from_algebra(l)).expect("algebra serializes")
}

/// Input for `product semidirect`: the acting algebra, the acted algebra
/// and one matrix per acting basis vector, row-major scalar text.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct SemidirectFile {
    pub name: Option<String>,
    pub l1: AlgebraFile,
    pub l0: AlgebraFile,
    pub phi: Vec<Vec<Vec<String>>>,
}

impl SemidirectFile {
    pub fn to_algebra(&self) -> Result<LieAlgebra> {
        let l1 = self.l1.to_algebra()?;
        let l0 = self.l0.to_algebra()?;
        let phi: Result<Vec<Matrix>> = self.phi.iter().map(|m| Matrix::from_text_rows(m)).collect();
        let name = self
            .name
            .clone()
            .unwrap_or_else(|| format!("{}|x{}", l1.name, l0.name));
        crate::products::semidirect_product(name, &l1, &l0, &phi?)
    }
}

pub fn parse_semidirect(text: &str) -> Result<SemidirectFile> {
    serde_json::from_str(text).map_err(|e| Error::InvalidData(format!("json parse error: {e}")))
}
