//! Deterministic output formats: the timeseries CSV, the CATS1 snapshot
//! format, and the JSON run manifest.
//!
//! All numbers are written in shortest round-trip decimal form, so
//! identical runs produce byte-identical files and a read-back restores
//! every value bit-exactly. No timestamps appear in any data file.

use crate::grid::{Field, GridError};
use crate::solver::{SimConfig, State, Trajectory};
use serde::Serialize;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum OutputError {
    #[error("i/o failure on {path}: {source}")]
    IoFailure {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path} is not a valid snapshot: {reason}")]
    BadSnapshot { path: PathBuf, reason: String },
    #[error(transparent)]
    Grid(#[from] GridError),
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> OutputError + '_ {
    move |source| OutputError::IoFailure {
        path: path.to_path_buf(),
        source,
    }
}

/// Exact header of the timeseries CSV.
pub const TIMESERIES_HEADER: &str =
    "t,dist_u,dist_v,dist_w,dist_z,energy,mass_u,mass_v,mass_w,sup_v,sup_w";

fn push_opt(line: &mut String, value: Option<f64>) {
    if let Some(v) = value {
        write!(line, ",{v}").unwrap();
    } else {
        line.push(',');
    }
}

/// Writes one CSV row per sample. Distances and energy columns are empty
/// when the run did not record them.
pub fn write_timeseries(traj: &Trajectory, path: &Path) -> Result<(), OutputError> {
    let mut text = String::with_capacity(64 * (traj.samples.len() + 1));
    text.push_str(TIMESERIES_HEADER);
    text.push('\n');
    for s in &traj.samples {
        let mut line = String::new();
        write!(line, "{}", s.t).unwrap();
        for k in 0..4 {
            push_opt(&mut line, s.dist.map(|d| d[k]));
        }
        push_opt(&mut line, s.energy);
        for k in 0..3 {
            write!(line, ",{}", s.mass[k]).unwrap();
        }
        write!(line, ",{},{}", s.sup_v, s.sup_w).unwrap();
        text.push_str(&line);
        text.push('\n');
    }
    std::fs::write(path, text).map_err(io_err(path))
}

/// Writes one field of a state in the CATS1 format: a header line
/// `CATS1 <ndim> <dims...> <h> <t> <field_name>`, then node values
/// row-major (last axis fastest), one grid row per line.
pub fn write_snapshot(state: &State, field_name: &str, path: &Path) -> Result<(), OutputError> {
    let field = match field_name {
        "u" => &state.u,
        "v" => &state.v,
        "w" => &state.w,
        "z" => &state.z,
        other => {
            return Err(OutputError::BadSnapshot {
                path: path.to_path_buf(),
                reason: format!("unknown field name `{other}`"),
            })
        }
    };
    let grid = field.grid();
    let mut text = String::new();
    write!(text, "CATS1 {}", grid.ndim()).unwrap();
    for a in 0..grid.ndim() {
        write!(text, " {}", grid.dims()[a]).unwrap();
    }
    writeln!(text, " {} {} {}", grid.spacing(), state.t, field_name).unwrap();
    let row_len = grid.dims()[grid.ndim() - 1];
    for row in field.values().chunks(row_len) {
        let mut line = String::new();
        for (k, v) in row.iter().enumerate() {
            if k > 0 {
                line.push(' ');
            }
            write!(line, "{v}").unwrap();
        }
        text.push_str(&line);
        text.push('\n');
    }
    std::fs::write(path, text).map_err(io_err(path))
}

/// Reads a CATS1 snapshot back: the field, its time, and its name.
///
/// The format does not store the grid origin; the restored grid is
/// centered on the coordinate origin. Values, dims, spacing, time and the
/// field name round-trip bit-exactly.
pub fn read_snapshot(path: &Path) -> Result<(Field, f64, String), OutputError> {
    let bad = |reason: &str| OutputError::BadSnapshot {
        path: path.to_path_buf(),
        reason: reason.to_string(),
    };
    let text = std::fs::read_to_string(path).map_err(io_err(path))?;
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| bad("empty file"))?;
    let mut tok = header.split_whitespace();
    if tok.next() != Some("CATS1") {
        return Err(bad("missing CATS1 magic"));
    }
    let ndim: usize = tok
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| bad("bad ndim"))?;
    if !(1..=3).contains(&ndim) {
        return Err(bad("ndim out of range"));
    }
    let mut dims = [1usize; 3];
    for a in 0..ndim {
        dims[a] = tok
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| bad("bad dims"))?;
    }
    let h: f64 = tok
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| bad("bad spacing"))?;
    let t: f64 = tok
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| bad("bad time"))?;
    let name = tok.next().ok_or_else(|| bad("missing field name"))?.to_string();
    if tok.next().is_some() {
        return Err(bad("trailing header tokens"));
    }

    let nodes = dims[0];
    if dims[..ndim].iter().any(|d| *d != nodes) {
        return Err(bad("anisotropic dims are not supported"));
    }
    let half = (nodes - 1) as f64 * h / 2.0;
    let grid = crate::grid::build_grid(ndim, nodes, -half, half)?;

    let mut values = Vec::with_capacity(grid.node_count());
    for line in lines {
        for tok in line.split_whitespace() {
            values.push(
                tok.parse::<f64>()
                    .map_err(|_| bad(&format!("bad value `{tok}`")))?,
            );
        }
    }
    let field = Field::new(grid, values)?;
    Ok((field, t, name))
}

/// Kind tag for a manifest output entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputKind {
    Timeseries,
    Snapshot,
    Report,
}

#[derive(Debug, Clone, Serialize)]
pub struct ManifestEntry {
    pub path: String,
    pub kind: OutputKind,
}

/// Run metadata written after all data files: the resolved configuration
/// (including the step size actually used first), the tool version, and
/// the list of files produced.
#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub tool_version: String,
    pub config: SimConfig,
    /// Step size of the first step (the automatic bound when `dt` was 0).
    pub initial_dt: f64,
    pub outputs: Vec<ManifestEntry>,
}

impl RunManifest {
    pub fn new(config: SimConfig, initial_dt: f64) -> Self {
        RunManifest {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            initial_dt,
            outputs: Vec::new(),
        }
    }

    pub fn record(&mut self, path: &Path, kind: OutputKind) {
        self.outputs.push(ManifestEntry {
            path: path.display().to_string(),
            kind,
        });
    }

    /// Serializes the manifest as pretty JSON. Call after every listed
    /// output exists.
    pub fn write(&self, path: &Path) -> Result<(), OutputError> {
        let mut file = std::fs::File::create(path).map_err(io_err(path))?;
        let text = serde_json::to_string_pretty(self).expect("manifest serializes");
        file.write_all(text.as_bytes()).map_err(io_err(path))?;
        file.write_all(b"\n").map_err(io_err(path))?;
        Ok(())
    }
}
