//! `x,value` CSV files, one row per sample.
//!
//! Values are written with 17 significant digits, enough for every `f64` to
//! parse back to the same bits. Readers rebuild the grid from the first and
//! last abscissa and reject rows more than `1e-9` steps off it.

use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::numerics::{Grid, SampledSignal};

pub const CSV_HEADER: [&str; 2] = ["x", "value"];

/// Relative tolerance on the spacing, in units of the step.
pub const SPACING_TOLERANCE: f64 = 1e-9;

fn parse_error(row: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        row,
        message: message.into(),
    }
}

fn csv_error(e: csv::Error) -> Error {
    let row = e.position().map(|p| p.line() as usize).unwrap_or(0);
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io(io),
        other => parse_error(row, format!("{other:?}")),
    }
}

pub fn write_csv<W: Write>(f: &SampledSignal, out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().from_writer(out);
    w.write_record(CSV_HEADER).map_err(csv_error)?;
    for (x, v) in f.iter() {
        w.write_record([format!("{x:.16e}"), format!("{v:.16e}")])
            .map_err(csv_error)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> Result<SampledSignal> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(input);
    let mut records = r.records();
    let header = match records.next() {
        None => return Err(parse_error(1, "empty file")),
        Some(h) => h.map_err(csv_error)?,
    };
    if header.len() != 2 || header[0] != *CSV_HEADER[0] || header[1] != *CSV_HEADER[1] {
        return Err(parse_error(
            1,
            format!(
                "expected header `x,value`, got `{}`",
                header.iter().collect::<Vec<_>>().join(",")
            ),
        ));
    }
    let mut xs = Vec::new();
    let mut vs = Vec::new();
    for (i, rec) in records.enumerate() {
        let row = i + 2;
        let rec = rec.map_err(csv_error)?;
        if rec.len() != 2 {
            return Err(parse_error(
                row,
                format!("expected 2 fields, found {}", rec.len()),
            ));
        }
        let parse = |s: &str, what: &str| -> Result<f64> {
            let v: f64 = s
                .parse()
                .map_err(|_| parse_error(row, format!("{what} `{s}` is not a number")))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(parse_error(row, format!("{what} `{s}` is not finite")))
            }
        };
        xs.push(parse(&rec[0], "x")?);
        vs.push(parse(&rec[1], "value")?);
    }
    if xs.len() < 2 {
        return Err(parse_error(
            xs.len() + 2,
            format!("need at least 2 samples, found {}", xs.len()),
        ));
    }
    let n = xs.len();
    let step = (xs[n - 1] - xs[0]) / (n - 1) as f64;
    if step <= 0.0 {
        return Err(parse_error(n + 1, "abscissas must increase"));
    }
    for (i, &x) in xs.iter().enumerate() {
        // allow a few ulps of the abscissa itself on top of the spacing tolerance
        let tol = SPACING_TOLERANCE * step + 4.0 * f64::EPSILON * x.abs();
        if (x - (xs[0] + i as f64 * step)).abs() > tol {
            return Err(parse_error(
                i + 2,
                format!("non-uniform grid: x = {x} is off the spacing {step}"),
            ));
        }
    }
    let grid = Grid::new(xs[0], step, n)?;
    SampledSignal::new(grid, vs)
}

pub fn write_signal_csv(f: &SampledSignal, path: impl AsRef<Path>) -> Result<()> {
    let file = File::create(path)?;
    write_csv(f, std::io::BufWriter::new(file))
}

pub fn read_signal_csv(path: impl AsRef<Path>) -> Result<SampledSignal> {
    read_csv(std::io::BufReader::new(File::open(path)?))
}
