//! Optional defaults file, pointed at by the `GELCAL_CONFIG` environment
//! variable. Explicit flags always win over file values, which win over the
//! built-in defaults.

use serde::Deserialize;

use crate::exit::{CliError, CliResult};

pub const CONFIG_ENV_VAR: &str = "GELCAL_CONFIG";

/// Recognised default fields. Unknown fields are rejected by name.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub beta: Option<f64>,
    pub range_mm: Option<[f64; 2]>,
    pub lambda: Option<f64>,
    pub elastomer_r1_mm: Option<f64>,
    pub indenter_r2_mm: Option<f64>,
    pub seed: Option<u64>,
}

impl FileConfig {
    /// Loads the config file named by the environment variable, if any.
    pub fn from_env() -> CliResult<Self> {
        let Some(path) = std::env::var_os(CONFIG_ENV_VAR) else {
            return Ok(Self::default());
        };
        let path = std::path::PathBuf::from(path);
        let text = std::fs::read_to_string(&path)
            .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::input(format!("{}: {e}", path.display())))
    }
}

/// Flag value, then config-file value, then the built-in default.
pub fn resolve<T: Copy>(flag: Option<T>, file: Option<T>, default: T) -> T {
    flag.or(file).unwrap_or(default)
}

/// Parses `lo:hi` ranges used by `--range-mm` and the synth grids.
pub fn parse_range(s: &str) -> Result<(f64, f64), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("expected lo:hi, got {s:?}"))?;
    let lo: f64 = lo
        .trim()
        .parse()
        .map_err(|_| format!("bad lower bound {lo:?}"))?;
    let hi: f64 = hi
        .trim()
        .parse()
        .map_err(|_| format!("bad upper bound {hi:?}"))?;
    if !lo.is_finite() || !hi.is_finite() || lo >= hi {
        return Err(format!("range must satisfy lo < hi, got {lo}:{hi}"));
    }
    Ok((lo, hi))
}

/// Parses an `e2_mpa:nu2` sweep case.
pub fn parse_case(s: &str) -> Result<(f64, f64), String> {
    let (e2, nu2) = s
        .split_once(':')
        .ok_or_else(|| format!("expected e2_mpa:nu2, got {s:?}"))?;
    let e2: f64 = e2.trim().parse().map_err(|_| format!("bad E2 {e2:?}"))?;
    let nu2: f64 = nu2.trim().parse().map_err(|_| format!("bad nu2 {nu2:?}"))?;
    Ok((e2, nu2))
}
