//! JSON file formats for diagonals and circuits.
//!
//! Diagonal document:
//!
//! ```json
//! { "n": 2, "units": "pi", "thetas": [0.0, 0.5, 1.0, -0.25] }
//! ```
//!
//! With `"units": "pi"` every entry is a multiple of pi and is scaled once on
//! load; `"rad"` (the default) stores radians. Circuit documents are the serde
//! form of [`Circuit`]: `n`, `global_phase` and a `gates` list tagged by `kind`.

use std::f64::consts::PI;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::circuit::Circuit;
use crate::diagonal::DiagonalUnitary;
use crate::error::Result;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Units {
    #[default]
    Rad,
    Pi,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagonalFile {
    pub n: usize,
    #[serde(default)]
    pub units: Units,
    pub thetas: Vec<f64>,
}

impl DiagonalFile {
    pub fn into_diagonal(self) -> Result<DiagonalUnitary> {
        let thetas = match self.units {
            Units::Rad => self.thetas,
            Units::Pi => self.thetas.into_iter().map(|t| t * PI).collect(),
        };
        DiagonalUnitary::from_thetas(self.n, thetas)
    }
}

impl From<&DiagonalUnitary> for DiagonalFile {
    fn from(u: &DiagonalUnitary) -> Self {
        Self {
            n: u.n(),
            units: Units::Rad,
            thetas: u.thetas().to_vec(),
        }
    }
}

pub fn parse_diagonal(text: &str) -> Result<DiagonalUnitary> {
    serde_json::from_str::<DiagonalFile>(text)?.into_diagonal()
}

pub fn diagonal_to_string(u: &DiagonalUnitary) -> Result<String> {
    Ok(serde_json::to_string_pretty(&DiagonalFile::from(u))?)
}

pub fn load_diagonal(path: impl AsRef<Path>) -> Result<DiagonalUnitary> {
    parse_diagonal(&std::fs::read_to_string(path)?)
}

pub fn save_diagonal(path: impl AsRef<Path>, u: &DiagonalUnitary) -> Result<()> {
    Ok(std::fs::write(path, diagonal_to_string(u)? + "\n")?)
}

pub fn parse_circuit(text: &str) -> Result<Circuit> {
    let c: Circuit = serde_json::from_str(text)?;
    c.validate()?;
    Ok(c)
}

pub fn circuit_to_string(c: &Circuit) -> Result<String> {
    Ok(serde_json::to_string_pretty(c)?)
}

pub fn load_circuit(path: impl AsRef<Path>) -> Result<Circuit> {
    parse_circuit(&std::fs::read_to_string(path)?)
}

pub fn save_circuit(path: impl AsRef<Path>, c: &Circuit) -> Result<()> {
    Ok(std::fs::write(path, circuit_to_string(c)? + "\n")?)
}
