//! `gelcal sweep`: calibration-error table over an indenter grid.

use std::path::PathBuf;

use clap::Args;
use gelcal::material::{ContactGeometry, Material};
use gelcal::synth::{run_sweep, NoiseModel, NormalModel, SweepConfig};

use crate::commands::parse_model;
use crate::config::{self, FileConfig};
use crate::exit::{CliError, CliResult};
use crate::units;

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Output table path (tab-separated).
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Indenter case as e2_mpa:nu2; repeat for several. Defaults to the
    /// six-case grid 1:0.4 2:0.4 3:0.4 4:0.4 2:0.45 2:0.35.
    #[arg(long = "case", value_parser = config::parse_case)]
    pub cases: Vec<(f64, f64)>,
    #[arg(long = "e1-mpa", default_value_t = 1.0)]
    pub e1_mpa: f64,
    #[arg(long, default_value_t = 0.48)]
    pub nu1: f64,
    #[arg(long = "indenter-r2-mm")]
    pub indenter_r2_mm: Option<f64>,
    #[arg(long = "elastomer-r1-mm")]
    pub elastomer_r1_mm: Option<f64>,
    #[arg(long)]
    pub beta: Option<f64>,
    #[arg(long = "noise-disp-mm", default_value_t = 0.0)]
    pub noise_disp_mm: f64,
    #[arg(long = "noise-angle-deg", default_value_t = 0.0)]
    pub noise_angle_deg: f64,
    #[arg(long, default_value_t = 1)]
    pub repeats: usize,
    #[arg(long, value_parser = parse_model, default_value = "yoffe-exact")]
    pub model: NormalModel,
}

pub fn run(args: &SweepArgs, file_config: &FileConfig) -> CliResult<()> {
    let seed = config::resolve(args.seed, file_config.seed, 0);
    let r2_mm = config::resolve(args.indenter_r2_mm, file_config.indenter_r2_mm, 5.0);
    let r1_mm = config::resolve(args.elastomer_r1_mm, file_config.elastomer_r1_mm, 150.0);
    let beta = config::resolve(args.beta, file_config.beta, 0.2);

    let cases = if args.cases.is_empty() {
        vec![
            (1.0, 0.4),
            (2.0, 0.4),
            (3.0, 0.4),
            (4.0, 0.4),
            (2.0, 0.45),
            (2.0, 0.35),
        ]
    } else {
        args.cases.clone()
    };
    let indenter_grid = cases
        .iter()
        .map(|&(e2, nu2)| Material::from_mpa(e2, nu2).map_err(CliError::from))
        .collect::<CliResult<Vec<_>>>()?;

    let mut sweep_config = SweepConfig::standard(seed)?;
    sweep_config.soft = Material::from_mpa(args.e1_mpa, args.nu1)?;
    sweep_config.indenter_grid = indenter_grid;
    sweep_config.geometry = ContactGeometry::from_mm(r1_mm, r2_mm)?;
    sweep_config.beta = beta;
    sweep_config.calibration.beta = beta;
    sweep_config.noise = NoiseModel::new(
        units::mm_to_m(args.noise_disp_mm),
        units::deg_to_rad(args.noise_angle_deg),
    )?;
    sweep_config.normal_model = args.model;
    sweep_config.repeats = args.repeats;

    let report = run_sweep(&sweep_config)?;

    let mut table = String::new();
    table.push_str(&format!("# {}\n", report.oracle_note));
    table.push_str(&format!(
        "# ground truth: E1 = {} MPa, nu1 = {}; seed = {seed}; repeats = {}\n",
        units::pa_to_mpa(report.truth_e1),
        report.truth_nu1,
        args.repeats
    ));
    table.push_str("e2_mpa\tnu2\th1_rel_err\th3_rel_err\te1_rel_err\tnu1_rel_err\tstatus\n");
    for row in &report.rows {
        let e2 = units::pa_to_mpa(row.indenter.young_modulus());
        let nu2 = row.indenter.poisson_ratio();
        match &row.outcome {
            Ok(o) => table.push_str(&format!(
                "{e2:.4}\t{nu2:.4}\t{:.6e}\t{:.6e}\t{:.6e}\t{:.6e}\tok\n",
                o.h1_rel_err, o.h3_rel_err, o.e1_rel_err, o.nu1_rel_err
            )),
            Err(msg) => table.push_str(&format!(
                "{e2:.4}\t{nu2:.4}\t-\t-\t-\t-\tfailed: {msg}\n"
            )),
        }
    }
    if let Some(best) = report.argmin_e1_error() {
        let e2 = units::pa_to_mpa(report.rows[best].indenter.young_modulus());
        let nu2 = report.rows[best].indenter.poisson_ratio();
        table.push_str(&format!(
            "# smallest E1 error at case {e2:.4}:{nu2:.4} (row {best})\n"
        ));
    }
    std::fs::write(&args.out, &table)?;
    print!("{table}");
    Ok(())
}
