use std::path::Path;

use qubit_plt::{ComplexMatrix4, DensityMatrix, Tolerances};
use serde_json::Value;

use crate::Failure;

/// A density matrix read from a JSON file with 4×4 `re` and `im` arrays.
pub struct StateFile {
    pub label: Option<String>,
    pub rho: DensityMatrix<f64>,
}

fn matrix(doc: &Value, key: &str) -> Result<[[f64; 4]; 4], String> {
    let rows = doc
        .get(key)
        .ok_or_else(|| format!("missing field {key:?}"))?
        .as_array()
        .filter(|rows| rows.len() == 4)
        .ok_or_else(|| format!("field {key:?} must be an array of 4 rows"))?;
    let mut out = [[0.0; 4]; 4];
    for (i, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .filter(|r| r.len() == 4)
            .ok_or_else(|| format!("{key}[{i}] must be an array of 4 numbers"))?;
        for (j, x) in row.iter().enumerate() {
            out[i][j] = x
                .as_f64()
                .ok_or_else(|| format!("{key}[{i}][{j}] is not a number"))?;
        }
    }
    Ok(out)
}

pub fn parse(text: &str, cfg: &Tolerances<f64>) -> Result<StateFile, Failure> {
    let doc: Value =
        serde_json::from_str(text).map_err(|e| Failure::invalid(format!("malformed state file: {e}")))?;
    let re = matrix(&doc, "re").map_err(Failure::invalid)?;
    let im = matrix(&doc, "im").map_err(Failure::invalid)?;
    let label = match doc.get("label") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(_) => return Err(Failure::invalid("field \"label\" must be a string")),
    };
    let m = ComplexMatrix4::from_parts(re, im).map_err(|e| Failure::invalid(format!("invalid state: {e}")))?;
    let rho = DensityMatrix::with_tolerances(m, cfg).map_err(|e| Failure::invalid(format!("invalid state: {e}")))?;
    Ok(StateFile { label, rho })
}

pub fn load(path: &Path, cfg: &Tolerances<f64>) -> Result<StateFile, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    parse(&text, cfg)
}
