//! CSV and JSON encodings of point sets.
//!
//! CSV: header `f1,f2,f3` (plus any extra named columns), one point per row,
//! values with 10 significant digits. JSON: an array of coordinate arrays.

use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::geometry::point::Point;

/// Formats `x` with `digits` significant digits using a '.' separator.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 {
            "0".to_string()
        } else {
            x.to_string()
        };
    }
    let magnitude = x.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn io_err(e: impl std::fmt::Display) -> Error {
    Error::Io(e.to_string())
}

/// Writes points, optionally with one extra value column per point.
pub fn write_csv<W: Write, const D: usize>(
    writer: W,
    points: &[Point<f64, D>],
    extra: Option<(&str, &[f64])>,
) -> Result<()> {
    if let Some((_, values)) = extra {
        if values.len() != points.len() {
            return Err(Error::InvalidParameter(format!(
                "extra column has {} values for {} points",
                values.len(),
                points.len()
            )));
        }
    }
    let mut w = csv::Writer::from_writer(writer);
    let mut header: Vec<String> = (1..=D).map(|k| format!("f{k}")).collect();
    if let Some((name, _)) = extra {
        header.push(name.to_string());
    }
    w.write_record(&header).map_err(io_err)?;
    for (i, p) in points.iter().enumerate() {
        let mut row: Vec<String> = p
            .coords()
            .iter()
            .map(|&c| format_significant(c, 10))
            .collect();
        if let Some((_, values)) = extra {
            row.push(format_significant(values[i], 10));
        }
        w.write_record(&row).map_err(io_err)?;
    }
    w.flush().map_err(io_err)
}

/// Reads the first `D` columns of a CSV written by [`write_csv`].
pub fn read_csv<R: Read, const D: usize>(reader: R) -> Result<Vec<Point<f64, D>>> {
    let mut r = csv::Reader::from_reader(reader);
    let mut out = Vec::new();
    for record in r.records() {
        let record = record.map_err(|e| Error::Parse(e.to_string()))?;
        if record.len() < D {
            return Err(Error::DimensionMismatch {
                expected: D,
                found: record.len(),
            });
        }
        let mut coords = [0.0; D];
        for (k, c) in coords.iter_mut().enumerate() {
            *c = record[k]
                .trim()
                .parse()
                .map_err(|e: std::num::ParseFloatError| Error::Parse(e.to_string()))?;
        }
        out.push(Point::new(coords));
    }
    Ok(out)
}

pub fn to_json<const D: usize>(points: &[Point<f64, D>]) -> Result<String> {
    let rows: Vec<Vec<f64>> = points.iter().map(|p| p.coords().to_vec()).collect();
    serde_json::to_string(&rows).map_err(io_err)
}

pub fn from_json<const D: usize>(s: &str) -> Result<Vec<Point<f64, D>>> {
    let rows: Vec<Vec<f64>> = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    rows.into_iter()
        .map(|row| {
            let coords: [f64; D] =
                row.as_slice()
                    .try_into()
                    .map_err(|_| Error::DimensionMismatch {
                        expected: D,
                        found: row.len(),
                    })?;
            Ok(Point::new(coords))
        })
        .collect()
}
