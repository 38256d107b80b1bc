//! The four subcommands: generate, verify, correlate, catalog.

use std::path::{Path, PathBuf};

use serde::Serialize;

use pucodes::catalog;
use pucodes::correlation::{ccc_check, complementarity_check, VerificationReport};
use pucodes::correlator::{build_matched_filter, correlate_stream, op_count};
use pucodes::generator::{
    build_generating_matrix, extract_set, rmg_element, Axis, GeneratorSpec, SequenceSet,
};
use pucodes::{Scalar, ScalarKind};

use crate::seq_file;
use crate::spec_file;
use crate::CliError;

/// Which construction path `generate` runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratePath {
    /// Polynomial-matrix product (works for any delay plan).
    Pu,
    /// Closed-form radix-M evaluation (standard plans only).
    Rmg,
}

pub fn generate(
    spec_path: &Path,
    out: &Path,
    all_sets: bool,
    transpose: bool,
    path_choice: GeneratePath,
) -> Result<(), CliError> {
    let loaded = spec_file::load(spec_path)?;
    let spec = &loaded.generator;
    let axis = if transpose {
        flip(loaded.orientation)
    } else {
        loaded.orientation
    };
    let indices: Vec<usize> = if all_sets {
        (0..spec.m()).collect()
    } else {
        vec![loaded.set_index]
    };
    let digest = spec.digest();
    for &r in &indices {
        let set = match path_choice {
            GeneratePath::Pu => pu_set(spec, r, axis)?,
            GeneratePath::Rmg => rmg_set(spec, r, axis)?,
        };
        let target = if all_sets { indexed_path(out, r) } else { out.to_path_buf() };
        seq_file::write_set(&target, &set)?;
        println!(
            "set {r} ({}): m={} k={} L={} C={} kind={} -> {} (digest {})",
            axis_name(axis),
            spec.m(),
            spec.stage_count(),
            spec.length(),
            spec.constant(),
            spec.kind(),
            target.display(),
            &digest[..12],
        );
    }
    Ok(())
}

fn flip(axis: Axis) -> Axis {
    match axis {
        Axis::Row => Axis::Column,
        Axis::Column => Axis::Row,
    }
}

fn axis_name(axis: Axis) -> &'static str {
    match axis {
        Axis::Row => "row",
        Axis::Column => "column",
    }
}

fn indexed_path(out: &Path, r: usize) -> PathBuf {
    match out.extension() {
        Some(ext) => out.with_extension(format!("set{r}.{}", ext.to_string_lossy())),
        None => out.with_extension(format!("set{r}")),
    }
}

fn pu_set(spec: &GeneratorSpec, r: usize, axis: Axis) -> Result<SequenceSet, CliError> {
    let matrix = build_generating_matrix(spec);
    let set = extract_set(&matrix, r, axis).map_err(CliError::from_core)?;
    // pad to the full delay budget so both construction paths emit
    // identical files even when top coefficients cancel
    let length = spec.length();
    let sequences: Vec<Vec<Scalar>> = set
        .sequences()
        .iter()
        .map(|seq| {
            let mut s = seq.clone();
            s.resize(length, Scalar::zero(spec.kind()));
            s
        })
        .collect();
    Ok(SequenceSet::new(sequences)
        .map_err(CliError::from_core)?
        .with_provenance(r, spec.digest()))
}

fn rmg_set(spec: &GeneratorSpec, r: usize, axis: Axis) -> Result<SequenceSet, CliError> {
    let length = spec.length() as u64;
    let mut sequences = Vec::with_capacity(spec.m());
    for s in 0..spec.m() {
        let mut seq = Vec::with_capacity(length as usize);
        for n in 0..length {
            let value = match axis {
                Axis::Row => rmg_element(spec, r, s, n),
                Axis::Column => rmg_element(spec, s, r, n),
            }
            .map_err(CliError::from_core)?;
            seq.push(value);
        }
        sequences.push(seq);
    }
    Ok(SequenceSet::new(sequences)
        .map_err(CliError::from_core)?
        .with_provenance(r, spec.digest()))
}

#[derive(Serialize)]
struct CheckJson {
    passed: bool,
    constant: Option<Scalar>,
    constant_text: Option<String>,
    worst_violation: f64,
    worst_shift: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    worst_pair: Option<(usize, usize)>,
}

impl CheckJson {
    fn from_report(report: &VerificationReport) -> Self {
        CheckJson {
            passed: report.passed,
            constant: report.constant.clone(),
            constant_text: report.constant.as_ref().map(Scalar::to_string),
            worst_violation: report.worst_violation,
            worst_shift: report.worst_shift,
            worst_pair: report.worst_pair,
        }
    }
}

#[derive(Serialize)]
struct SetJson {
    path: String,
    m: usize,
    length: usize,
    kind: String,
    #[serde(flatten)]
    check: CheckJson,
}

#[derive(Serialize)]
struct VerifyJson {
    report_version: u32,
    tolerance: f64,
    passed: bool,
    sets: Vec<SetJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ccc: Option<CheckJson>,
}

pub fn verify(files: &[PathBuf], ccc: bool, tol: f64, json: bool) -> Result<(), CliError> {
    if files.is_empty() {
        return Err(CliError::usage("verify needs at least one sequence file"));
    }
    if ccc && files.len() < 2 {
        return Err(CliError::usage("--ccc needs at least two sequence files"));
    }
    let sets: Vec<(String, SequenceSet)> = files
        .iter()
        .map(|p| Ok((p.display().to_string(), seq_file::read_set(p)?)))
        .collect::<Result<_, CliError>>()?;

    let mut all_passed = true;
    let mut set_reports = Vec::new();
    for (path, set) in &sets {
        let report = complementarity_check(set, tol).map_err(CliError::from_core)?;
        all_passed &= report.passed;
        set_reports.push(SetJson {
            path: path.clone(),
            m: set.size(),
            length: set.len(),
            kind: set.kind().to_string(),
            check: CheckJson::from_report(&report),
        });
    }
    let ccc_report = if ccc {
        let bare: Vec<SequenceSet> = sets.iter().map(|(_, s)| s.clone()).collect();
        let report = ccc_check(&bare, tol).map_err(CliError::from_core)?;
        all_passed &= report.passed;
        Some(CheckJson::from_report(&report))
    } else {
        None
    };

    let doc = VerifyJson {
        report_version: 1,
        tolerance: tol,
        passed: all_passed,
        sets: set_reports,
        ccc: ccc_report,
    };
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&doc).map_err(CliError::from_io_like)?
        );
    } else {
        for set in &doc.sets {
            let verdict = if set.check.passed { "PASS" } else { "FAIL" };
            print!(
                "{verdict} {} (m={}, L={}, kind={})",
                set.path, set.m, set.length, set.kind
            );
            if let Some(c) = &set.check.constant_text {
                print!(": C = {c}");
            }
            if !set.check.passed {
                print!(
                    "; worst violation {:.3e} at shift {}",
                    set.check.worst_violation, set.check.worst_shift
                );
            }
            println!();
        }
        if let Some(ccc) = &doc.ccc {
            if ccc.passed {
                println!("PASS mutual orthogonality across {} sets", doc.sets.len());
            } else {
                println!(
                    "FAIL mutual orthogonality: worst violation {:.3e} at shift {} (pair {:?})",
                    ccc.worst_violation, ccc.worst_shift, ccc.worst_pair
                );
            }
        }
    }
    if all_passed {
        Ok(())
    } else {
        Err(CliError::failure("verification failed"))
    }
}

pub fn correlate(
    spec_path: &Path,
    port: usize,
    input: &Path,
    out: &Path,
    normalize: bool,
) -> Result<(), CliError> {
    let loaded = spec_file::load(spec_path)?;
    let spec = &loaded.generator;
    let input_set = seq_file::read_set(input)?;
    if input_set.size() != 1 {
        return Err(CliError::usage(format!(
            "input must hold exactly one sample row, found {}",
            input_set.size()
        )));
    }
    let samples: Vec<Scalar> = input_set.sequence(0)
        .iter()
        .map(|v| {
            v.convert(spec.kind()).map_err(|_| {
                CliError::usage(format!(
                    "kind mismatch: sample {v} not representable in generator kind {}",
                    spec.kind()
                ))
            })
        })
        .collect::<Result<_, _>>()?;

    let filter = build_matched_filter(spec);
    let outputs = correlate_stream(&filter, port, &samples).map_err(CliError::from_core)?;
    let (kind, outputs) = if normalize {
        (ScalarKind::Complex, filter.normalize(&outputs))
    } else {
        (spec.kind(), outputs)
    };
    std::fs::write(out, seq_file::columns_to_csv(kind, &outputs))
        .map_err(|e| CliError::usage(format!("cannot write {}: {e}", out.display())))?;

    let counts = op_count(&filter);
    println!(
        "wrote {} rows x {} columns to {}",
        samples.len() + filter.total_delay() as usize,
        spec.m(),
        out.display()
    );
    println!(
        "op count: cascade {} mults/sample vs direct {} ({}x); stages {}; L {}; output delay {}",
        counts.cascade_per_sample,
        counts.direct_per_sample,
        format_ratio(counts.speedup()),
        counts.stages,
        counts.length,
        filter.total_delay(),
    );
    Ok(())
}

fn format_ratio(x: f64) -> String {
    if x >= 10.0 {
        format!("{x:.0}")
    } else {
        format!("{x:.1}")
    }
}

pub fn catalog_cmd(name: Option<&str>, size: Option<usize>) -> Result<(), CliError> {
    let Some(name) = name else {
        println!("available unitary matrices:");
        println!("  dft                (any size; pass --size M; exact order-M cyclotomic)");
        println!("  hadamard           (sizes 2^k; pass --size M; entries +-1)");
        println!("  qam3-paper         (3x3 Gaussian-integer matrix, C = 16)");
        println!("  eisenstein3-paper  (3x3 Eisenstein-integer matrix, C = 12)");
        return Ok(());
    };
    let entry = catalog::lookup(name, size).map_err(CliError::from_core)?;
    println!(
        "{}: size {} kind {} C = {}",
        entry.name(),
        entry.size(),
        entry.kind(),
        entry.constant()
    );
    let grid = entry
        .matrix()
        .to_scalar_grid()
        .expect("catalog entries are constant");
    for row in grid {
        let cells: Vec<String> = row.iter().map(Scalar::to_string).collect();
        println!("  [{}]", cells.join(", "));
    }
    Ok(())
}
