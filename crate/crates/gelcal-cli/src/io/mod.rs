pub mod csv;
pub mod gridfield;

use std::path::Path;

use sha2::{Digest, Sha256};

use crate::exit::{CliError, CliResult};

/// SHA-256 digest of a file, hex-encoded; recorded as input provenance.
pub fn file_sha256(path: &Path) -> CliResult<String> {
    let bytes =
        std::fs::read(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    let mut hasher = Sha256::new();
    hasher.update(&bytes);
    Ok(hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect())
}
