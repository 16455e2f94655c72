//! Plain-text incidence format for point-line geometries.
//!
//! ```text
//! # optional comments
//! p 15 l 15
//! 0 1 2
//! 0 3 4
//! ...
//! ```
//!
//! The header gives the number of points and lines; each following
//! non-comment line lists the points of one line.

use std::fmt::Write as _;

use gqtvc_core::geometry::PartialLinearSpace;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IncidenceError {
    #[error("missing `p <points> l <lines>` header")]
    MissingHeader,
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("header announces {expected} lines, found {found}")]
    LineCount { expected: usize, found: usize },
}

pub fn export(pls: &PartialLinearSpace) -> String {
    let mut out = String::new();
    writeln!(out, "p {} l {}", pls.num_points, pls.lines.len()).unwrap();
    for line in &pls.lines {
        let pts: Vec<String> = line.iter().map(u32::to_string).collect();
        writeln!(out, "{}", pts.join(" ")).unwrap();
    }
    out
}

pub fn parse(text: &str) -> Result<PartialLinearSpace, IncidenceError> {
    let mut rows =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = rows.next().ok_or(IncidenceError::MissingHeader)?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (points, lines) = match fields.as_slice() {
        ["p", np, "l", nl] => {
            let bad = |_| IncidenceError::Syntax { line: hline, msg: "header counts must be integers".into() };
            (np.parse::<usize>().map_err(bad)?, nl.parse::<usize>().map_err(bad)?)
        }
        _ => return Err(IncidenceError::MissingHeader),
    };
    let mut parsed = Vec::with_capacity(lines);
    for (no, row) in rows {
        let pts = row
            .split_whitespace()
            .map(|tok| {
                let p: u32 = tok
                    .parse()
                    .map_err(|_| IncidenceError::Syntax { line: no, msg: format!("`{tok}` is not a point index") })?;
                if p as usize >= points {
                    return Err(IncidenceError::Syntax { line: no, msg: format!("point {p} out of range") });
                }
                Ok(p)
            })
            .collect::<Result<Vec<u32>, _>>()?;
        parsed.push(pts);
    }
    if parsed.len() != lines {
        return Err(IncidenceError::LineCount { expected: lines, found: parsed.len() });
    }
    Ok(PartialLinearSpace::new(points, parsed))
}
