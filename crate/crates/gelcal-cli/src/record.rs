//! Persisted calibration records.

use serde::{Deserialize, Serialize};

use gelcal::calibration::CalibrationResult;

use crate::units;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct IndenterRecord {
    pub e2_mpa: f64,
    pub nu2: f64,
    pub r2_mm: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ElastomerGeometryRecord {
    pub r1_mm: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ConfigEcho {
    pub beta: f64,
    pub range_mm: [f64; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ResultsRecord {
    pub h1: f64,
    pub h2_per_sqrt_mm: f64,
    pub h3: f64,
    pub e1_mpa: f64,
    pub nu1: f64,
    pub rms_residual_normal_mm: f64,
    pub rms_residual_torsion_deg: f64,
    pub n_normal: usize,
    pub n_torsion: usize,
    pub e1_stddev_mpa: f64,
    pub nu1_stddev: f64,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct FileDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Provenance {
    pub normal_csv: FileDigest,
    pub torsion_csv: FileDigest,
}

/// One calibration run, written as pretty JSON. `timestamp_utc` is excluded
/// from any idempotency comparison.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CalibrationRecord {
    pub schema_version: u32,
    pub timestamp_utc: String,
    pub indenter: IndenterRecord,
    pub elastomer_geometry: ElastomerGeometryRecord,
    pub config: ConfigEcho,
    pub results: ResultsRecord,
    pub provenance: Provenance,
}

impl ResultsRecord {
    pub fn from_result(r: &CalibrationResult) -> Self {
        Self {
            h1: r.h1,
            h2_per_sqrt_mm: units::h2_si_to_per_sqrt_mm(r.h2),
            h3: r.h3,
            e1_mpa: units::pa_to_mpa(r.e1),
            nu1: r.nu1,
            rms_residual_normal_mm: units::m_to_mm(r.rms_residual_normal),
            rms_residual_torsion_deg: units::rad_to_deg(r.rms_residual_torsion),
            n_normal: r.n_normal,
            n_torsion: r.n_torsion,
            e1_stddev_mpa: units::pa_to_mpa(r.e1_stddev),
            nu1_stddev: r.nu1_stddev,
            warnings: r.warnings.clone(),
        }
    }
}

pub fn now_utc_rfc3339() -> String {
    time::OffsetDateTime::now_utc()
        .format(&time::format_description::well_known::Rfc3339)
        .unwrap_or_else(|_| "1970-01-01T00:00:00Z".into())
}
