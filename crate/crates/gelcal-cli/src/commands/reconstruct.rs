//! `gelcal reconstruct`: distributed traction from a measured surface
//! displacement field, using calibrated elastomer parameters.

use std::path::PathBuf;

use clap::Args;
use gelcal::halfspace::{
    assemble_compliance_with_budget, integrate_force, reconstruct_traction, DisplacementField,
    DEFAULT_DIM_BUDGET,
};
use gelcal::material::Material;

use crate::exit::{CliError, CliResult};
use crate::io::gridfield;
use crate::record::CalibrationRecord;
use crate::units;

#[derive(Debug, Args)]
pub struct ReconstructArgs {
    /// Displacement grid-field file (values in mm).
    #[arg(long)]
    pub field: PathBuf,
    /// Calibration record supplying (E1, nu1).
    #[arg(long, conflicts_with_all = ["e1_mpa", "nu1"])]
    pub record: Option<PathBuf>,
    /// Elastomer modulus, MPa (alternative to --record).
    #[arg(long = "e1-mpa", requires = "nu1")]
    pub e1_mpa: Option<f64>,
    /// Elastomer Poisson ratio (alternative to --record).
    #[arg(long, requires = "e1_mpa")]
    pub nu1: Option<f64>,
    /// Tikhonov parameter; defaults to 1e-3 of the operator norm.
    #[arg(long)]
    pub lambda: Option<f64>,
    /// Cap on the dense system dimension 3 nx ny.
    #[arg(long = "max-dim", default_value_t = DEFAULT_DIM_BUDGET)]
    pub max_dim: usize,
    /// Output traction grid-field file (values in kPa).
    #[arg(long)]
    pub out: PathBuf,
}

pub fn run(args: &ReconstructArgs) -> CliResult<()> {
    let material = match (&args.record, args.e1_mpa, args.nu1) {
        (Some(record_path), None, None) => {
            let text = std::fs::read_to_string(record_path)
                .map_err(|e| CliError::input(format!("{}: {e}", record_path.display())))?;
            let record: CalibrationRecord = serde_json::from_str(&text)
                .map_err(|e| CliError::input(format!("{}: {e}", record_path.display())))?;
            Material::from_mpa(record.results.e1_mpa, record.results.nu1)?
        }
        (None, Some(e1_mpa), Some(nu1)) => Material::from_mpa(e1_mpa, nu1)?,
        _ => {
            return Err(CliError::input(
                "provide either --record or both --e1-mpa and --nu1",
            ))
        }
    };

    let raw = gridfield::read_grid_field(&args.field)?;
    let values_si: Vec<[f64; 3]> = raw
        .values
        .iter()
        .map(|v| [units::mm_to_m(v[0]), units::mm_to_m(v[1]), units::mm_to_m(v[2])])
        .collect();
    let u = DisplacementField::from_values(raw.grid, values_si)?;

    let op = assemble_compliance_with_budget(&raw.grid, material, args.max_dim)?;
    let lambda = args.lambda.unwrap_or_else(|| op.default_lambda());
    let traction = reconstruct_traction(&op, &u, lambda)?;
    let force = integrate_force(&traction);

    let kpa_values: Vec<[f64; 3]> = traction
        .values
        .iter()
        .map(|v| [units::pa_to_kpa(v[0]), units::pa_to_kpa(v[1]), units::pa_to_kpa(v[2])])
        .collect();
    std::fs::write(
        &args.out,
        gridfield::write_grid_field(&raw.grid, &kpa_values, "kPa"),
    )?;

    let magnitude = (force[0] * force[0] + force[1] * force[1] + force[2] * force[2]).sqrt();
    println!(
        "integrated force: [{:.6e}, {:.6e}, {:.6e}] N",
        force[0], force[1], force[2]
    );
    println!("|F| = {magnitude:.6e} N (lambda = {lambda:.4e})");
    println!("traction field written to {}", args.out.display());
    Ok(())
}
