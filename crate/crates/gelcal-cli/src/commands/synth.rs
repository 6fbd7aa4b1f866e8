//! `gelcal synth`: generate bench-style sample series from a known ground
//! truth. Byte-identical output under a fixed seed.

use std::path::PathBuf;

use clap::Args;
use gelcal::contact::derive_coefficients;
use gelcal::material::{ContactGeometry, Material};
use gelcal::synth::{
    generate_normal_series, generate_torsion_series, split_seed, NoiseModel, NormalModel,
};
use serde::Serialize;

use crate::commands::{model_name, parse_model};
use crate::config::{self, FileConfig};
use crate::exit::{CliError, CliResult};
use crate::io::{self, csv};
use crate::units;

#[derive(Debug, Args)]
pub struct SynthArgs {
    /// Output directory for normal.csv, torsion.csv, and manifest.json.
    #[arg(long = "out-dir")]
    pub out_dir: PathBuf,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Ground-truth elastomer modulus, MPa.
    #[arg(long = "e1-mpa", default_value_t = 1.0)]
    pub e1_mpa: f64,
    /// Ground-truth elastomer Poisson ratio.
    #[arg(long, default_value_t = 0.48)]
    pub nu1: f64,
    #[arg(long = "indenter-e2-mpa", default_value_t = 2.0)]
    pub indenter_e2_mpa: f64,
    #[arg(long = "indenter-nu2", default_value_t = 0.4)]
    pub indenter_nu2: f64,
    #[arg(long = "indenter-r2-mm")]
    pub indenter_r2_mm: Option<f64>,
    #[arg(long = "elastomer-r1-mm")]
    pub elastomer_r1_mm: Option<f64>,
    #[arg(long)]
    pub beta: Option<f64>,
    /// Displacement-reading noise, mm (1-sigma).
    #[arg(long = "noise-disp-mm", default_value_t = 0.0)]
    pub noise_disp_mm: f64,
    /// Angle-reading noise, degrees (1-sigma).
    #[arg(long = "noise-angle-deg", default_value_t = 0.0)]
    pub noise_angle_deg: f64,
    /// Commanded gamma1 span, mm, as lo:hi.
    #[arg(long = "gamma1-mm", value_parser = config::parse_range, default_value = "0.05:1.0")]
    pub gamma1_mm: (f64, f64),
    #[arg(long = "gamma1-points", default_value_t = 20)]
    pub gamma1_points: usize,
    /// Commanded theta1 span, rad, as lo:hi.
    #[arg(long = "theta1-rad", value_parser = config::parse_range, default_value = "0.02:0.30")]
    pub theta1_rad: (f64, f64),
    #[arg(long = "theta1-points", default_value_t = 12)]
    pub theta1_points: usize,
    /// Independent repeats pooled into the output series.
    #[arg(long, default_value_t = 1)]
    pub repeats: usize,
    /// Forward model: yoffe-exact, tatara-exact, or fit-form.
    #[arg(long, value_parser = parse_model, default_value = "yoffe-exact")]
    pub model: NormalModel,
}

#[derive(Serialize)]
struct Manifest {
    schema_version: u32,
    seed: u64,
    model: &'static str,
    ground_truth: GroundTruth,
    indenter: IndenterEcho,
    geometry: GeometryEcho,
    beta: f64,
    noise: NoiseEcho,
    gamma1_mm: [f64; 2],
    gamma1_points: usize,
    theta1_rad: [f64; 2],
    theta1_points: usize,
    repeats: usize,
    files: ManifestFiles,
}

#[derive(Serialize)]
struct GroundTruth {
    e1_mpa: f64,
    nu1: f64,
}

#[derive(Serialize)]
struct IndenterEcho {
    e2_mpa: f64,
    nu2: f64,
}

#[derive(Serialize)]
struct GeometryEcho {
    r1_mm: f64,
    r2_mm: f64,
}

#[derive(Serialize)]
struct NoiseEcho {
    sigma_disp_mm: f64,
    sigma_angle_deg: f64,
}

#[derive(Serialize)]
struct ManifestFiles {
    normal_csv: DigestEcho,
    torsion_csv: DigestEcho,
}

#[derive(Serialize)]
struct DigestEcho {
    path: String,
    sha256: String,
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}

pub fn run(args: &SynthArgs, file_config: &FileConfig) -> CliResult<()> {
    if args.gamma1_points == 0 || args.theta1_points == 0 || args.repeats == 0 {
        return Err(CliError::input(
            "gamma1-points, theta1-points, and repeats must be positive",
        ));
    }
    let seed = config::resolve(args.seed, file_config.seed, 0);
    let r2_mm = config::resolve(args.indenter_r2_mm, file_config.indenter_r2_mm, 5.0);
    let r1_mm = config::resolve(args.elastomer_r1_mm, file_config.elastomer_r1_mm, 150.0);
    let beta = config::resolve(args.beta, file_config.beta, 0.2);

    let soft = Material::from_mpa(args.e1_mpa, args.nu1)?;
    let indenter = Material::from_mpa(args.indenter_e2_mpa, args.indenter_nu2)?;
    let geometry = ContactGeometry::from_mm(r1_mm, r2_mm)?;
    let coeffs = derive_coefficients(soft, indenter, geometry, beta)?;
    let noise = NoiseModel::new(
        units::mm_to_m(args.noise_disp_mm),
        units::deg_to_rad(args.noise_angle_deg),
    )?;

    let gamma1_grid: Vec<f64> = linspace(args.gamma1_mm.0, args.gamma1_mm.1, args.gamma1_points)
        .into_iter()
        .map(units::mm_to_m)
        .collect();
    let theta1_grid = linspace(args.theta1_rad.0, args.theta1_rad.1, args.theta1_points);

    let mut normal = Vec::new();
    let mut torsion = Vec::new();
    for rep in 0..args.repeats {
        let rep_seed = split_seed(seed, rep as u64);
        normal.extend(generate_normal_series(
            &coeffs,
            &gamma1_grid,
            noise,
            rep_seed,
            args.model,
        )?);
        torsion.extend(generate_torsion_series(
            &coeffs,
            beta,
            &theta1_grid,
            noise,
            split_seed(rep_seed, 1),
        )?);
    }

    std::fs::create_dir_all(&args.out_dir)?;
    let comments = vec![format!(
        "synthetic series: model {}, seed {}, E1 {} MPa, nu1 {}, indenter {} MPa / {}",
        model_name(args.model),
        seed,
        args.e1_mpa,
        args.nu1,
        args.indenter_e2_mpa,
        args.indenter_nu2
    )];
    let normal_path = args.out_dir.join("normal.csv");
    let torsion_path = args.out_dir.join("torsion.csv");
    std::fs::write(&normal_path, csv::write_normal_series(&normal, &comments))?;
    std::fs::write(&torsion_path, csv::write_torsion_series(&torsion, &comments))?;

    let manifest = Manifest {
        schema_version: 1,
        seed,
        model: model_name(args.model),
        ground_truth: GroundTruth {
            e1_mpa: args.e1_mpa,
            nu1: args.nu1,
        },
        indenter: IndenterEcho {
            e2_mpa: args.indenter_e2_mpa,
            nu2: args.indenter_nu2,
        },
        geometry: GeometryEcho { r1_mm, r2_mm },
        beta,
        noise: NoiseEcho {
            sigma_disp_mm: args.noise_disp_mm,
            sigma_angle_deg: args.noise_angle_deg,
        },
        gamma1_mm: [args.gamma1_mm.0, args.gamma1_mm.1],
        gamma1_points: args.gamma1_points,
        theta1_rad: [args.theta1_rad.0, args.theta1_rad.1],
        theta1_points: args.theta1_points,
        repeats: args.repeats,
        files: ManifestFiles {
            normal_csv: DigestEcho {
                path: "normal.csv".into(),
                sha256: io::file_sha256(&normal_path)?,
            },
            torsion_csv: DigestEcho {
                path: "torsion.csv".into(),
                sha256: io::file_sha256(&torsion_path)?,
            },
        },
    };
    let json =
        serde_json::to_string_pretty(&manifest).map_err(|e| CliError::input(e.to_string()))?;
    std::fs::write(args.out_dir.join("manifest.json"), json + "\n")?;

    println!(
        "wrote {} normal and {} torsion samples to {}",
        normal.len(),
        torsion.len(),
        args.out_dir.display()
    );
    Ok(())
}
