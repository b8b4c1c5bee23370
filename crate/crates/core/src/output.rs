//! Sequence output formats: OEIS b-files, CSV, and plain value-per-line.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::arith::Natural;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    /// `"<index> <value>\n"` per term, consecutive indices, no header.
    Bfile,
    /// Header `n,value`, then one row per term.
    Csv,
    #[default]
    Plain,
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bfile" => Ok(OutputFormat::Bfile),
            "csv" => Ok(OutputFormat::Csv),
            "plain" => Ok(OutputFormat::Plain),
            other => Err(Error::precondition(format!("unknown format `{other}`"))),
        }
    }
}

/// Renders `values`, the first of which has index `offset`.
pub fn render(values: &[Natural], offset: i64, format: OutputFormat) -> String {
    let mut out = String::new();
    if format == OutputFormat::Csv {
        out.push_str("n,value\n");
    }
    for (i, v) in values.iter().enumerate() {
        let idx = offset + i as i64;
        let _ = match format {
            OutputFormat::Bfile => writeln!(out, "{idx} {v}"),
            OutputFormat::Csv => writeln!(out, "{idx},{v}"),
            OutputFormat::Plain => writeln!(out, "{v}"),
        };
    }
    out
}

/// Parses a b-file back into its starting index and values. Lines starting
/// with `#` are skipped, as OEIS b-files may carry comments.
pub fn parse_bfile(text: &str) -> Result<(i64, Vec<Natural>)> {
    let mut offset = None;
    let mut values = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.starts_with('#') {
            continue;
        }
        let bad = || Error::precondition(format!("b-file line {}: `{line}`", lineno + 1));
        let (idx, val) = line.split_once(' ').ok_or_else(bad)?;
        let idx: i64 = idx.parse().map_err(|_| bad())?;
        let val: Natural = val.parse().map_err(|_| bad())?;
        let start = *offset.get_or_insert(idx);
        if idx != start + values.len() as i64 {
            return Err(Error::precondition(format!(
                "b-file line {}: index {idx} is not consecutive",
                lineno + 1
            )));
        }
        values.push(val);
    }
    Ok((offset.unwrap_or(0), values))
}
