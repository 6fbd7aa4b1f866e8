//! Sample-series CSV formats.
//!
//! Normal series: header `total_disp_mm,gamma1_mm`; torsion series: header
//! `total_angle_deg,theta1_deg`. One sample per line, `#` starts a comment.

use std::path::Path;

use gelcal::calibration::{DisplacementSample, TorsionSample};

use crate::exit::{CliError, CliResult};
use crate::units;

pub const NORMAL_HEADER: &str = "total_disp_mm,gamma1_mm";
pub const TORSION_HEADER: &str = "total_angle_deg,theta1_deg";

/// Parses two comma-separated floats, reporting the 1-based line and field
/// of the first offending token.
fn parse_pair(path: &Path, line_no: usize, line: &str) -> CliResult<(f64, f64)> {
    let fields: Vec<&str> = line.split(',').map(str::trim).collect();
    if fields.len() != 2 {
        return Err(CliError::input(format!(
            "{}:{}: expected 2 comma-separated fields, found {}",
            path.display(),
            line_no,
            fields.len()
        )));
    }
    let mut values = [0.0; 2];
    for (i, field) in fields.iter().enumerate() {
        values[i] = field.parse::<f64>().map_err(|_| {
            CliError::input(format!(
                "{}:{}: field {} is not a number: {field:?}",
                path.display(),
                line_no,
                i + 1
            ))
        })?;
    }
    Ok((values[0], values[1]))
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn read_normal_series(path: &Path) -> CliResult<Vec<DisplacementSample>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    let mut lines = data_lines(&text);
    match lines.next() {
        Some((_, header)) if header == NORMAL_HEADER => {}
        Some((line_no, header)) => {
            return Err(CliError::input(format!(
                "{}:{}: expected header {NORMAL_HEADER:?}, found {header:?}",
                path.display(),
                line_no
            )))
        }
        // A file with no content at all is an empty series, not a parse
        // error; the data-volume check downstream reports it.
        None => return Ok(Vec::new()),
    }
    let mut samples = Vec::new();
    for (line_no, line) in lines {
        let (total_mm, gamma1_mm) = parse_pair(path, line_no, line)?;
        samples.push(DisplacementSample {
            total_displacement: units::mm_to_m(total_mm),
            gamma1: units::mm_to_m(gamma1_mm),
        });
    }
    Ok(samples)
}

pub fn read_torsion_series(path: &Path) -> CliResult<Vec<TorsionSample>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    let mut lines = data_lines(&text);
    match lines.next() {
        Some((_, header)) if header == TORSION_HEADER => {}
        Some((line_no, header)) => {
            return Err(CliError::input(format!(
                "{}:{}: expected header {TORSION_HEADER:?}, found {header:?}",
                path.display(),
                line_no
            )))
        }
        None => return Ok(Vec::new()),
    }
    let mut samples = Vec::new();
    for (line_no, line) in lines {
        let (total_deg, theta1_deg) = parse_pair(path, line_no, line)?;
        samples.push(TorsionSample {
            total_angle: units::deg_to_rad(total_deg),
            theta1: units::deg_to_rad(theta1_deg),
        });
    }
    Ok(samples)
}

pub fn write_normal_series(samples: &[DisplacementSample], comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str(&format!("# {c}\n"));
    }
    out.push_str(NORMAL_HEADER);
    out.push('\n');
    for s in samples {
        out.push_str(&format!(
            "{:.12e},{:.12e}\n",
            units::m_to_mm(s.total_displacement),
            units::m_to_mm(s.gamma1)
        ));
    }
    out
}

pub fn write_torsion_series(samples: &[TorsionSample], comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str(&format!("# {c}\n"));
    }
    out.push_str(TORSION_HEADER);
    out.push('\n');
    for s in samples {
        out.push_str(&format!(
            "{:.12e},{:.12e}\n",
            units::rad_to_deg(s.total_angle),
            units::rad_to_deg(s.theta1)
        ));
    }
    out
}
