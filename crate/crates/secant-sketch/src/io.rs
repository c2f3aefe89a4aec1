//! Point-set file formats.
//!
//! Binary layout, all little-endian:
//!
//! | offset | size | content |
//! |--------|------|---------|
//! | 0 | 8 | magic `SECSKPT1` |
//! | 8 | 8 | dimension `N` (u64) |
//! | 16 | 8 | point count `n` (u64) |
//! | 24 | `8·N·n` | coordinates (f64), row-major |
//!
//! CSV files hold one point per row with no header; lines starting with `#`
//! are skipped. JSON files hold either `{"dim": N, "data": [...]}` or an
//! array of rows.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use secant_sketch_core::PointSet;
use serde::Deserialize;

use crate::error::{Error, Result};

pub const MAGIC: &[u8; 8] = b"SECSKPT1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Binary,
    Csv,
    Json,
}

impl Format {
    /// Guess from the file extension (`.bin`, `.csv`, `.json`).
    pub fn from_path(path: &Path) -> Option<Self> {
        match path.extension()?.to_str()?.to_ascii_lowercase().as_str() {
            "bin" | "pts" => Some(Self::Binary),
            "csv" | "txt" => Some(Self::Csv),
            "json" => Some(Self::Json),
            _ => None,
        }
    }
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "bin" | "binary" => Ok(Self::Binary),
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            other => Err(format!("unknown point format `{other}` (bin, csv, json)")),
        }
    }
}

pub fn write_binary<W: Write>(mut w: W, points: &PointSet) -> Result<()> {
    w.write_all(MAGIC)?;
    w.write_all(&(points.dim() as u64).to_le_bytes())?;
    w.write_all(&(points.len() as u64).to_le_bytes())?;
    for v in points.as_slice() {
        w.write_all(&v.to_le_bytes())?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_binary<R: Read>(mut r: R) -> Result<PointSet> {
    let mut head = [0u8; 24];
    r.read_exact(&mut head).map_err(|_| Error::Format("truncated header".into()))?;
    if &head[..8] != MAGIC {
        return Err(Error::Format("bad magic".into()));
    }
    let dim = u64::from_le_bytes(head[8..16].try_into().unwrap());
    let count = u64::from_le_bytes(head[16..24].try_into().unwrap());
    let len = dim
        .checked_mul(count)
        .and_then(|v| usize::try_from(v).ok())
        .ok_or_else(|| Error::Format("size overflows".into()))?;
    let mut bytes = Vec::new();
    r.read_to_end(&mut bytes)?;
    if bytes.len() != len * 8 {
        return Err(Error::Format(format!("expected {} payload bytes, found {}", len * 8, bytes.len())));
    }
    let data = bytes.chunks_exact(8).map(|c| f64::from_le_bytes(c.try_into().unwrap())).collect();
    if dim == 0 {
        return Err(Error::Format("zero dimension".into()));
    }
    Ok(PointSet::new(dim as usize, data)?)
}

pub fn write_csv<W: Write>(w: W, points: &PointSet) -> Result<()> {
    let mut out = csv::WriterBuilder::new().has_headers(false).from_writer(w);
    for p in points.iter() {
        // `{:?}` keeps the shortest round-tripping representation
        out.write_record(p.iter().map(|v| format!("{v:?}")))?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(r: R) -> Result<PointSet> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(r);
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec?;
        let row = rec
            .iter()
            .map(|f| f.parse::<f64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Format(format!("row {}: {e}", i + 1)))?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Format("no rows".into()));
    }
    Ok(PointSet::from_rows(&rows)?)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum JsonPoints {
    Flat(PointSet),
    Rows(Vec<Vec<f64>>),
}

pub fn read_json<R: Read>(r: R) -> Result<PointSet> {
    match serde_json::from_reader(r)? {
        JsonPoints::Flat(p) => Ok(PointSet::new(p.dim(), p.into_vec())?),
        JsonPoints::Rows(rows) if !rows.is_empty() => Ok(PointSet::from_rows(&rows)?),
        JsonPoints::Rows(_) => Err(Error::Format("no rows".into())),
    }
}

fn open(path: &Path) -> Result<BufReader<File>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|source| Error::Io { path: path.to_path_buf(), source })
}

/// Reads a point set, choosing the format from the extension unless given.
pub fn load_points(path: &Path, format: Option<Format>) -> Result<PointSet> {
    let format = format
        .or_else(|| Format::from_path(path))
        .ok_or_else(|| Error::Format(format!("cannot tell the format of {}", path.display())))?;
    let r = open(path)?;
    match format {
        Format::Binary => read_binary(r),
        Format::Csv => read_csv(r),
        Format::Json => read_json(r),
    }
}

pub fn write_points<W: Write>(w: W, points: &PointSet, format: Format) -> Result<()> {
    match format {
        Format::Binary => write_binary(w, points),
        Format::Csv => write_csv(w, points),
        Format::Json => {
            let mut w = w;
            serde_json::to_writer(&mut w, points)?;
            w.write_all(b"\n")?;
            Ok(())
        }
    }
}

pub fn save_points(path: &Path, points: &PointSet, format: Option<Format>) -> Result<()> {
    let format = format
        .or_else(|| Format::from_path(path))
        .ok_or_else(|| Error::Format(format!("cannot tell the format of {}", path.display())))?;
    let f = File::create(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    let mut w = BufWriter::new(f);
    write_points(&mut w, points, format)?;
    w.flush()?;
    Ok(())
}

/// Parses inline JSON, or reads it from a file when the argument is a path.
pub fn json_arg<T: serde::de::DeserializeOwned>(arg: &str) -> Result<T> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(serde_json::from_str(arg)?);
    }
    Ok(serde_json::from_reader(open(Path::new(arg))?)?)
}
