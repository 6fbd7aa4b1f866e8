//! Grid-field file format: a text header followed by one line per node.
//!
//! ```text
//! # optional comments
//! nx,ny,pitch_mm,origin_x_mm,origin_y_mm
//! ix,iy,vx,vy,vz
//! ```
//!
//! Chosen for diff-ability over a binary layout. Displacement fields carry
//! mm, traction fields kPa; the reader is agnostic and callers convert.

use std::path::Path;

use gelcal::halfspace::SurfaceGrid;

use crate::exit::{CliError, CliResult};
use crate::units;

/// A parsed grid field, values still in file units.
#[derive(Debug)]
pub struct RawGridField {
    pub grid: SurfaceGrid,
    pub values: Vec<[f64; 3]>,
}

pub fn read_grid_field(path: &Path) -> CliResult<RawGridField> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| {
        CliError::input(format!("{}: empty grid-field file", path.display()))
    })?;
    let fields: Vec<&str> = header.split(',').map(str::trim).collect();
    if fields.len() != 5 {
        return Err(CliError::input(format!(
            "{}:{}: header needs nx,ny,pitch_mm,origin_x_mm,origin_y_mm",
            path.display(),
            header_line
        )));
    }
    let nx: usize = fields[0].parse().map_err(|_| {
        CliError::input(format!("{}:{}: bad nx {:?}", path.display(), header_line, fields[0]))
    })?;
    let ny: usize = fields[1].parse().map_err(|_| {
        CliError::input(format!("{}:{}: bad ny {:?}", path.display(), header_line, fields[1]))
    })?;
    let mut floats = [0.0; 3];
    for (k, f) in fields[2..].iter().enumerate() {
        floats[k] = f.parse().map_err(|_| {
            CliError::input(format!(
                "{}:{}: header field {} is not a number: {f:?}",
                path.display(),
                header_line,
                k + 3
            ))
        })?;
    }
    let grid = SurfaceGrid::new(
        nx,
        ny,
        units::mm_to_m(floats[0]),
        [units::mm_to_m(floats[1]), units::mm_to_m(floats[2])],
    )
    .map_err(CliError::from)?;

    let mut values = vec![None::<[f64; 3]>; grid.node_count()];
    let mut count = 0usize;
    for (line_no, line) in lines {
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != 5 {
            return Err(CliError::input(format!(
                "{}:{}: expected ix,iy,vx,vy,vz",
                path.display(),
                line_no
            )));
        }
        let ix: usize = fields[0].parse().map_err(|_| {
            CliError::input(format!("{}:{}: bad ix {:?}", path.display(), line_no, fields[0]))
        })?;
        let iy: usize = fields[1].parse().map_err(|_| {
            CliError::input(format!("{}:{}: bad iy {:?}", path.display(), line_no, fields[1]))
        })?;
        if ix >= nx || iy >= ny {
            return Err(CliError::input(format!(
                "{}:{}: node ({ix},{iy}) outside {nx}x{ny} grid",
                path.display(),
                line_no
            )));
        }
        let mut v = [0.0; 3];
        for (k, f) in fields[2..].iter().enumerate() {
            v[k] = f.parse().map_err(|_| {
                CliError::input(format!(
                    "{}:{}: field {} is not a number: {f:?}",
                    path.display(),
                    line_no,
                    k + 3
                ))
            })?;
        }
        let slot = &mut values[grid.index(ix, iy)];
        if slot.is_some() {
            return Err(CliError::input(format!(
                "{}:{}: duplicate node ({ix},{iy})",
                path.display(),
                line_no
            )));
        }
        *slot = Some(v);
        count += 1;
    }
    if count != grid.node_count() {
        return Err(CliError::input(format!(
            "{}: grid dimension mismatch: header promises {} nodes, file has {count}",
            path.display(),
            grid.node_count()
        )));
    }
    Ok(RawGridField {
        grid,
        values: values.into_iter().map(Option::unwrap).collect(),
    })
}

pub fn write_grid_field(
    grid: &SurfaceGrid,
    values: &[[f64; 3]],
    unit_comment: &str,
) -> String {
    let mut out = String::new();
    out.push_str(&format!("# gelcal grid field; values in {unit_comment}\n"));
    out.push_str(&format!(
        "{},{},{:.12e},{:.12e},{:.12e}\n",
        grid.nx,
        grid.ny,
        units::m_to_mm(grid.pitch),
        units::m_to_mm(grid.origin[0]),
        units::m_to_mm(grid.origin[1])
    ));
    for iy in 0..grid.ny {
        for ix in 0..grid.nx {
            let v = values[grid.index(ix, iy)];
            out.push_str(&format!(
                "{ix},{iy},{:.12e},{:.12e},{:.12e}\n",
                v[0], v[1], v[2]
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn round_trip() {
        let grid = SurfaceGrid::new(3, 2, 0.5e-3, [-1.0e-3, 0.0]).unwrap();
        let values: Vec<[f64; 3]> = (0..6).map(|i| [i as f64, -(i as f64), 0.5]).collect();
        let text = write_grid_field(&grid, &values, "test units");
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(text.as_bytes()).unwrap();
        let raw = read_grid_field(f.path()).unwrap();
        assert_eq!(raw.grid.nx, 3);
        assert_eq!(raw.grid.ny, 2);
        assert!((raw.grid.pitch - 0.5e-3).abs() < 1e-18);
        assert_eq!(raw.values, values);
    }

    #[test]
    fn missing_nodes_rejected() {
        let text = "3,2,0.5,0,0\n0,0,1,2,3\n";
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(text.as_bytes()).unwrap();
        let err = read_grid_field(f.path()).unwrap_err();
        assert!(err.message.contains("mismatch"), "{}", err.message);
    }

    #[test]
    fn duplicate_node_rejected() {
        let text = "1,1,0.5,0,0\n0,0,1,2,3\n0,0,4,5,6\n";
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(text.as_bytes()).unwrap();
        assert!(read_grid_field(f.path()).is_err());
    }
}
