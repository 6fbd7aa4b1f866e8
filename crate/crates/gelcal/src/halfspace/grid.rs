//! Surface discretisation and per-node vector fields.

use crate::error::{Error, Result};

/// Regular grid of square surface patches. Node (ix, iy) sits at
/// `origin + (ix, iy) * pitch` and owns the pitch x pitch patch centred there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceGrid {
    pub nx: usize,
    pub ny: usize,
    /// Patch side length, metres.
    pub pitch: f64,
    /// Position of node (0, 0), metres.
    pub origin: [f64; 2],
}

impl SurfaceGrid {
    pub fn new(nx: usize, ny: usize, pitch: f64, origin: [f64; 2]) -> Result<Self> {
        if nx == 0 || ny == 0 {
            return Err(Error::InvalidGeometry(
                "grid needs at least one node per axis".into(),
            ));
        }
        if !pitch.is_finite() || pitch <= 0.0 {
            return Err(Error::InvalidGeometry(format!(
                "pitch must be positive and finite, got {pitch}"
            )));
        }
        if !origin[0].is_finite() || !origin[1].is_finite() {
            return Err(Error::InvalidGeometry("origin must be finite".into()));
        }
        Ok(Self {
            nx,
            ny,
            pitch,
            origin,
        })
    }

    /// Grid centred on the coordinate origin.
    pub fn centered(nx: usize, ny: usize, pitch: f64) -> Result<Self> {
        let ox = -0.5 * pitch * (nx as f64 - 1.0);
        let oy = -0.5 * pitch * (ny as f64 - 1.0);
        Self::new(nx, ny, pitch, [ox, oy])
    }

    pub fn node_count(&self) -> usize {
        self.nx * self.ny
    }

    pub fn index(&self, ix: usize, iy: usize) -> usize {
        debug_assert!(ix < self.nx && iy < self.ny);
        iy * self.nx + ix
    }

    pub fn position(&self, ix: usize, iy: usize) -> [f64; 2] {
        [
            self.origin[0] + ix as f64 * self.pitch,
            self.origin[1] + iy as f64 * self.pitch,
        ]
    }

    pub fn patch_area(&self) -> f64 {
        self.pitch * self.pitch
    }
}

macro_rules! vector_field {
    ($name:ident, $doc:literal) => {
        #[doc = $doc]
        #[derive(Debug, Clone, PartialEq)]
        pub struct $name {
            pub grid: SurfaceGrid,
            /// One (x, y, z) triple per node, row-major with ix fastest.
            pub values: Vec<[f64; 3]>,
        }

        impl $name {
            pub fn zeros(grid: SurfaceGrid) -> Self {
                Self {
                    values: vec![[0.0; 3]; grid.node_count()],
                    grid,
                }
            }

            pub fn from_values(grid: SurfaceGrid, values: Vec<[f64; 3]>) -> Result<Self> {
                if values.len() != grid.node_count() {
                    return Err(Error::DimensionMismatch {
                        expected: format!("{} nodes", grid.node_count()),
                        got: format!("{} values", values.len()),
                    });
                }
                if values.iter().flatten().any(|v| !v.is_finite()) {
                    return Err(Error::Domain("field contains non-finite entries".into()));
                }
                Ok(Self { grid, values })
            }

            pub fn at(&self, ix: usize, iy: usize) -> [f64; 3] {
                self.values[self.grid.index(ix, iy)]
            }

            pub fn set(&mut self, ix: usize, iy: usize, value: [f64; 3]) {
                let i = self.grid.index(ix, iy);
                self.values[i] = value;
            }
        }
    };
}

vector_field!(
    DisplacementField,
    "Surface displacements (metres) sampled at the grid nodes."
);
vector_field!(
    TractionField,
    "Piecewise-constant patch tractions (pascals) at the grid nodes."
);
