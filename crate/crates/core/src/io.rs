//! CSV and JSON formats.
//!
//! * datasets: two columns `x,y`, optional header line;
//! * samples: one numeric column, optional header line;
//! * curves: `x,value,defined` with an empty `value` where undefined;
//! * reports: JSON via serde.
//!
//! Numbers are written with 17 significant digits so binary64 values
//! survive a round trip.

use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use crate::applications::OrderedSample;
use crate::estimators::{CurveSample, Dataset};
use crate::{Error, Result};

pub fn fmt_num(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else if v.is_nan() {
        "nan".into()
    } else if v > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Diagnostics {
    pub n: usize,
    pub duplicate_x: usize,
    pub comonotone: bool,
    /// Input rows were not sorted by `x`.
    pub resorted: bool,
}

fn read_text(path: &Path) -> Result<String> {
    let mut file = File::open(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => Error::FileNotFound(path.to_path_buf()),
        _ => Error::Io(e),
    })?;
    let mut text = String::new();
    file.read_to_string(&mut text)?;
    Ok(text)
}

/// Numeric rows of a CSV text with `columns` fields each. A first line that
/// does not parse as numbers is taken as a header.
fn numeric_rows(text: &str, columns: usize) -> Result<Vec<Vec<f64>>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| Error::Parse {
            line: e.position().map_or(i + 1, |p| p.line() as usize),
            message: e.to_string(),
        })?;
        let line = record.position().map_or(i + 1, |p| p.line() as usize);
        if record.iter().all(str::is_empty) {
            continue;
        }
        let parsed: std::result::Result<Vec<f64>, _> = record.iter().map(str::parse::<f64>).collect();
        match parsed {
            Ok(_) if record.len() != columns => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected {columns} column(s), found {}", record.len()),
                })
            }
            Ok(v) if v.iter().all(|x| x.is_finite()) => rows.push(v),
            Ok(_) => {
                return Err(Error::Parse { line, message: "non-finite value".into() });
            }
            Err(_) if rows.is_empty() && line == 1 => continue,
            Err(_) => {
                let bad = record.iter().find(|c| c.parse::<f64>().is_err()).unwrap_or("");
                return Err(Error::Parse { line, message: format!("not a number: '{bad}'") });
            }
        }
    }
    if rows.is_empty() {
        return Err(Error::Parse { line: 1, message: "no data rows".into() });
    }
    Ok(rows)
}

pub fn parse_dataset_str(text: &str) -> Result<(Dataset, Diagnostics)> {
    let rows = numeric_rows(text, 2)?;
    let xs: Vec<f64> = rows.iter().map(|r| r[0]).collect();
    let ys: Vec<f64> = rows.iter().map(|r| r[1]).collect();
    let resorted = !xs.windows(2).all(|w| w[0] <= w[1]);
    let data = Dataset::new(xs, ys)?;
    let diag = Diagnostics {
        n: data.len(),
        duplicate_x: data.duplicate_x_count(),
        comonotone: data.comonotone(),
        resorted,
    };
    Ok((data, diag))
}

/// Reads an `x,y` file, sorting rows jointly by `x`.
pub fn parse_dataset_csv(path: &Path) -> Result<(Dataset, Diagnostics)> {
    parse_dataset_str(&read_text(path)?)
}

pub fn parse_sample_str(text: &str) -> Result<OrderedSample> {
    let rows = numeric_rows(text, 1)?;
    OrderedSample::new(rows.into_iter().map(|r| r[0]).collect())
}

pub fn parse_sample_csv(path: &Path) -> Result<OrderedSample> {
    parse_sample_str(&read_text(path)?)
}

pub fn write_dataset_csv<W: Write>(data: &Dataset, mut out: W) -> Result<()> {
    writeln!(out, "x,y")?;
    for (x, y) in data.xs().iter().zip(data.ys()) {
        writeln!(out, "{},{}", fmt_num(*x), fmt_num(*y))?;
    }
    Ok(())
}

/// Writes `x,value,defined[,extra...]`; `extra` columns must match the grid
/// length.
pub fn write_curve_csv<W: Write>(curve: &CurveSample, extra: &[(&str, &[f64])], mut out: W) -> Result<()> {
    write!(out, "x,value,defined")?;
    for (name, col) in extra {
        if col.len() != curve.len() {
            return Err(Error::invalid(format!("column '{name}' has the wrong length")));
        }
        write!(out, ",{name}")?;
    }
    writeln!(out)?;
    for (i, (x, v)) in curve.grid.iter().zip(&curve.values).enumerate() {
        let value = v.map(fmt_num).unwrap_or_default();
        write!(out, "{},{},{}", fmt_num(*x), value, v.is_some())?;
        for (_, col) in extra {
            write!(out, ",{}", fmt_num(col[i]))?;
        }
        writeln!(out)?;
    }
    Ok(())
}

/// Reads the first three columns of a curve file written by
/// [`write_curve_csv`].
pub fn parse_curve_str(text: &str) -> Result<CurveSample> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut grid = Vec::new();
    let mut values = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| Error::Parse { line: 0, message: e.to_string() })?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        let field = |i: usize| record.get(i).ok_or(Error::Parse { line, message: "missing column".into() });
        let x: f64 = field(0)?
            .parse()
            .map_err(|_| Error::Parse { line, message: format!("bad abscissa '{}'", field(0).unwrap_or("")) })?;
        let defined = match field(2)? {
            "true" | "1" => true,
            "false" | "0" => false,
            other => return Err(Error::Parse { line, message: format!("bad defined flag '{other}'") }),
        };
        let value = if defined {
            Some(field(1)?.parse().map_err(|_| Error::Parse { line, message: "bad value".into() })?)
        } else {
            None
        };
        grid.push(x);
        values.push(value);
    }
    if grid.is_empty() {
        return Err(Error::Parse { line: 1, message: "no data rows".into() });
    }
    CurveSample::new(grid, values)
}

pub fn parse_curve_csv(path: &Path) -> Result<CurveSample> {
    parse_curve_str(&read_text(path)?)
}

pub fn write_json<W: Write, T: serde::Serialize>(value: &T, mut out: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}
