//! Plain CSV emission and parsing: comma separator, '.' decimal point,
//! floats printed with Rust's shortest round-trip formatting so parsing
//! recovers the exact values.

use std::io::{BufRead, Write};
use std::path::Path;

use crate::error::{Error, Result};

pub fn write_matrix_csv(path: &Path, labels: &[String], matrix: &[Vec<f64>]) -> Result<()> {
    let file = std::fs::File::create(path)?;
    let mut w = std::io::BufWriter::new(file);
    writeln!(w, ",{}", labels.join(","))?;
    for (label, row) in labels.iter().zip(matrix) {
        let cells: Vec<String> = row.iter().map(|v| format!("{v}")).collect();
        writeln!(w, "{label},{}", cells.join(","))?;
    }
    Ok(())
}

pub fn read_matrix_csv(path: &Path) -> Result<(Vec<String>, Vec<Vec<f64>>)> {
    let file = std::fs::File::open(path)?;
    let mut lines = std::io::BufReader::new(file).lines();
    let header = lines.next().ok_or_else(|| Error::invalid("empty CSV"))??;
    let labels: Vec<String> = header.split(',').skip(1).map(str::to_string).collect();
    let mut matrix = Vec::new();
    for (i, line) in lines.enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let mut cells = line.split(',');
        cells.next(); // row label
        let row: Vec<f64> = cells
            .map(|c| {
                c.parse().map_err(|_| Error::Parse {
                    line: i + 2,
                    message: format!("bad float '{c}'"),
                })
            })
            .collect::<Result<_>>()?;
        matrix.push(row);
    }
    Ok((labels, matrix))
}

/// Rows of mixed-width numeric data under a named header.
pub fn write_table_csv(path: &Path, header: &[String], rows: &[Vec<f64>]) -> Result<()> {
    let file = std::fs::File::create(path)?;
    let mut w = std::io::BufWriter::new(file);
    writeln!(w, "{}", header.join(","))?;
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| format!("{v}")).collect();
        writeln!(w, "{}", cells.join(","))?;
    }
    Ok(())
}

pub fn read_table_csv(path: &Path) -> Result<(Vec<String>, Vec<Vec<f64>>)> {
    let file = std::fs::File::open(path)?;
    let mut lines = std::io::BufReader::new(file).lines();
    let header = lines.next().ok_or_else(|| Error::invalid("empty CSV"))??;
    let names: Vec<String> = header.split(',').map(str::to_string).collect();
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let row: Vec<f64> = line
            .split(',')
            .map(|c| {
                c.parse().map_err(|_| Error::Parse {
                    line: i + 2,
                    message: format!("bad float '{c}'"),
                })
            })
            .collect::<Result<_>>()?;
        rows.push(row);
    }
    Ok((names, rows))
}
