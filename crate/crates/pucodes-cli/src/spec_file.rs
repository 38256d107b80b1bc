//! Generator spec files: a JSON document naming the set size, stage count,
//! unitary matrices (catalog names or inline scalar grids), the delay plan
//! and the default set selection. Unknown fields are rejected.

use std::path::Path;

use serde::Deserialize;

use pucodes::catalog;
use pucodes::generator::{Axis, DelayPlan, GeneratorSpec};
use pucodes::polymatrix::PolyMatrix;
use pucodes::zpoly::DelayVector;
use pucodes::{Scalar, ScalarKind};

use crate::scalar_text::parse_kind;
use crate::CliError;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecDoc {
    m: usize,
    k: usize,
    #[serde(default)]
    kind: Option<String>,
    unitaries: Vec<UnitaryField>,
    delays: DelaysField,
    #[serde(default)]
    set_index: Option<usize>,
    #[serde(default)]
    orientation: Option<String>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum UnitaryField {
    Name(String),
    Inline(InlineMatrix),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct InlineMatrix {
    matrix: Vec<Vec<Scalar>>,
}

#[derive(Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
enum DelaysField {
    Standard { pi: Vec<usize> },
    Explicit(Vec<Vec<u64>>),
}

/// A loaded spec file: the validated generator plus the file's set
/// selection defaults.
#[derive(Debug)]
pub struct LoadedSpec {
    pub generator: GeneratorSpec,
    pub set_index: usize,
    pub orientation: Axis,
}

pub fn load(path: &Path) -> Result<LoadedSpec, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    let doc: SpecDoc = serde_json::from_str(&text)
        .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    build(doc).map_err(|e| e.with_path(path))
}

fn build(doc: SpecDoc) -> Result<LoadedSpec, CliError> {
    if doc.unitaries.len() != doc.k + 1 {
        return Err(CliError::usage(format!(
            "expected k+1 = {} unitaries, got {}",
            doc.k + 1,
            doc.unitaries.len()
        )));
    }
    let mut matrices = Vec::with_capacity(doc.unitaries.len());
    for (i, field) in doc.unitaries.iter().enumerate() {
        let matrix = match field {
            UnitaryField::Name(name) => catalog::lookup(name, Some(doc.m))
                .map_err(|e| CliError::usage(format!("unitary {i}: {e}")))?
                .into_matrix(),
            UnitaryField::Inline(inline) => PolyMatrix::from_scalars(&inline.matrix)
                .map_err(|e| CliError::usage(format!("unitary {i}: {e}")))?,
        };
        if matrix.size() != doc.m {
            return Err(CliError::usage(format!(
                "unitary {i} has size {}, spec says m={}",
                matrix.size(),
                doc.m
            )));
        }
        matrices.push(matrix);
    }

    let target_kind = match &doc.kind {
        Some(text) => parse_kind(text)?,
        None => {
            let first = matrices[0].kind();
            if matrices.iter().any(|u| u.kind() != first) {
                return Err(CliError::usage(
                    "unitaries have mixed scalar kinds; set the spec's \"kind\" field \
                     to pick a common one",
                ));
            }
            first
        }
    };
    let matrices = matrices
        .into_iter()
        .enumerate()
        .map(|(i, u)| {
            convert_matrix(&u, target_kind)
                .ok_or_else(|| CliError::usage(format!("unitary {i} not representable in kind {target_kind}")))
        })
        .collect::<Result<Vec<_>, _>>()?;

    let plan = match doc.delays {
        DelaysField::Standard { pi } => DelayPlan::Standard { pi },
        DelaysField::Explicit(stages) => {
            DelayPlan::Explicit(stages.into_iter().map(DelayVector::new).collect())
        }
    };
    let generator = GeneratorSpec::new(matrices, plan)
        .map_err(|e| CliError::usage(format!("invalid generator: {e}")))?;
    if generator.stage_count() != doc.k {
        return Err(CliError::usage(format!(
            "delay plan describes {} stages, spec says k={}",
            generator.stage_count(),
            doc.k
        )));
    }

    let set_index = doc.set_index.unwrap_or(0);
    if set_index >= doc.m {
        return Err(CliError::usage(format!(
            "set_index {set_index} out of range for m={}",
            doc.m
        )));
    }
    let orientation = match doc.orientation.as_deref() {
        None | Some("row") => Axis::Row,
        Some("column") => Axis::Column,
        Some(other) => {
            return Err(CliError::usage(format!(
                "orientation must be \"row\" or \"column\", got {other:?}"
            )))
        }
    };
    Ok(LoadedSpec {
        generator,
        set_index,
        orientation,
    })
}

fn convert_matrix(matrix: &PolyMatrix, kind: ScalarKind) -> Option<PolyMatrix> {
    let grid = matrix.to_scalar_grid()?;
    let converted: Option<Vec<Vec<Scalar>>> = grid
        .iter()
        .map(|row| row.iter().map(|v| v.convert(kind).ok()).collect())
        .collect();
    PolyMatrix::from_scalars(&converted?).ok()
}
