//! `gelcal calibrate`: fit a recorded dataset and persist the result.

use std::path::PathBuf;

use clap::Args;
use gelcal::calibration::{calibrate, CalibrationConfig, CalibrationDataset};
use gelcal::material::Material;

use crate::config::{self, FileConfig};
use crate::exit::CliResult;
use crate::io::{self, csv};
use crate::record::{
    CalibrationRecord, ConfigEcho, ElastomerGeometryRecord, FileDigest, IndenterRecord,
    Provenance, ResultsRecord, SCHEMA_VERSION,
};
use crate::units;

#[derive(Debug, Args)]
pub struct CalibrateArgs {
    /// Normal-contact series CSV (total_disp_mm,gamma1_mm).
    #[arg(long)]
    pub normal: PathBuf,
    /// Torsion series CSV (total_angle_deg,theta1_deg).
    #[arg(long)]
    pub torsion: PathBuf,
    /// Indenter Young's modulus, MPa.
    #[arg(long = "indenter-e2-mpa")]
    pub indenter_e2_mpa: f64,
    /// Indenter Poisson's ratio.
    #[arg(long = "indenter-nu2")]
    pub indenter_nu2: f64,
    /// Indenter radius, mm.
    #[arg(long = "indenter-r2-mm")]
    pub indenter_r2_mm: Option<f64>,
    /// Elastomer effective radius, mm.
    #[arg(long = "elastomer-r1-mm")]
    pub elastomer_r1_mm: Option<f64>,
    /// Indentation ratio held during torsion.
    #[arg(long)]
    pub beta: Option<f64>,
    /// Accepted gamma1 window, mm, as lo:hi.
    #[arg(long = "range-mm", value_parser = config::parse_range)]
    pub range_mm: Option<(f64, f64)>,
    /// Output record path (JSON).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(args: &CalibrateArgs, file_config: &FileConfig) -> CliResult<()> {
    let indenter = Material::from_mpa(args.indenter_e2_mpa, args.indenter_nu2)?;
    let r2_mm = config::resolve(args.indenter_r2_mm, file_config.indenter_r2_mm, 5.0);
    let r1_mm = config::resolve(args.elastomer_r1_mm, file_config.elastomer_r1_mm, 150.0);
    let beta = config::resolve(args.beta, file_config.beta, 0.2);
    let range_mm = config::resolve(
        args.range_mm,
        file_config.range_mm.map(|r| (r[0], r[1])),
        (0.2, 0.8),
    );

    let normal_samples = csv::read_normal_series(&args.normal)?;
    let torsion_samples = csv::read_torsion_series(&args.torsion)?;
    let dataset = CalibrationDataset::new(normal_samples, torsion_samples, 0);

    let cal_config = CalibrationConfig {
        min_gamma1: units::mm_to_m(range_mm.0),
        max_gamma1: units::mm_to_m(range_mm.1),
        beta,
        ..CalibrationConfig::default()
    };
    let result = calibrate(&dataset, indenter, &cal_config)?;

    println!("E1  = {:.4} MPa", units::pa_to_mpa(result.e1));
    println!("nu1 = {:.4}", result.nu1);
    println!(
        "H1  = {:.4}   H2 = {:.4} /sqrt(mm)   H3 = {:.4}",
        result.h1,
        units::h2_si_to_per_sqrt_mm(result.h2),
        result.h3
    );
    println!(
        "rms residual: normal {:.5} mm, torsion {:.4} deg ({} / {} samples)",
        units::m_to_mm(result.rms_residual_normal),
        units::rad_to_deg(result.rms_residual_torsion),
        result.n_normal,
        result.n_torsion
    );
    println!(
        "confidence (bootstrap 1-sigma): E1 {:.4} MPa, nu1 {:.4}",
        units::pa_to_mpa(result.e1_stddev),
        result.nu1_stddev
    );
    for w in &result.warnings {
        eprintln!("warning: {w}");
    }

    if let Some(out) = &args.out {
        let record = CalibrationRecord {
            schema_version: SCHEMA_VERSION,
            timestamp_utc: crate::record::now_utc_rfc3339(),
            indenter: IndenterRecord {
                e2_mpa: args.indenter_e2_mpa,
                nu2: args.indenter_nu2,
                r2_mm,
            },
            elastomer_geometry: ElastomerGeometryRecord { r1_mm },
            config: ConfigEcho {
                beta,
                range_mm: [range_mm.0, range_mm.1],
                lambda: file_config.lambda,
            },
            results: ResultsRecord::from_result(&result),
            provenance: Provenance {
                normal_csv: FileDigest {
                    path: args.normal.display().to_string(),
                    sha256: io::file_sha256(&args.normal)?,
                },
                torsion_csv: FileDigest {
                    path: args.torsion.display().to_string(),
                    sha256: io::file_sha256(&args.torsion)?,
                },
            },
        };
        let json = serde_json::to_string_pretty(&record)
            .map_err(|e| crate::exit::CliError::input(e.to_string()))?;
        std::fs::write(out, json + "\n")?;
        println!("record written to {}", out.display());
    }
    Ok(())
}
