use std::path::{Path, PathBuf};

use origami_core::construction::Bbox;
use origami_core::symmetry::DEFAULT_MAX_DEPTH;
use origami_core::Tolerance;
use serde::Deserialize;

use crate::CliError;

pub const CONFIG_ENV: &str = "ORIGAMI_SYM_CONFIG";
pub const DEFAULT_DEPTH: u32 = 2;

/// Contents of the file named by `ORIGAMI_SYM_CONFIG`. Every field is optional.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CliConfig {
    #[serde(default)]
    pub tolerance: Option<Tolerance>,
    pub depth: Option<u32>,
    pub cap: Option<usize>,
    /// `[x0, y0, x1, y1]`
    pub bbox: Option<[f64; 4]>,
    pub max_depth: Option<u32>,
    pub output: Option<PathBuf>,
}

impl CliConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("config {}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::Usage(format!("config {}: {e}", path.display())))
    }

    pub fn from_env() -> Result<Self, CliError> {
        match std::env::var_os(CONFIG_ENV) {
            Some(p) if !p.is_empty() => Self::load(Path::new(&p)),
            _ => Ok(Self::default()),
        }
    }
}

/// Tolerance overrides given on the command line.
#[derive(Debug, Clone, Copy, Default)]
pub struct ToleranceFlags {
    pub eps_angle: Option<f64>,
    pub eps_point: Option<f64>,
    pub eps_scalar: Option<f64>,
}

/// Values after layering flags over the config file over built-in defaults.
#[derive(Debug, Clone)]
pub struct Settings {
    pub tol: Tolerance,
    pub depth: u32,
    pub cap: Option<usize>,
    pub bbox: Option<Bbox>,
    pub max_depth: u32,
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub tol: ToleranceFlags,
    pub depth: Option<u32>,
    pub cap: Option<usize>,
    pub bbox: Option<[f64; 4]>,
    pub max_depth: Option<u32>,
    pub output: Option<PathBuf>,
}

pub fn resolve(config: &CliConfig, flags: &Overrides) -> Result<Settings, CliError> {
    let mut tol = config.tolerance.unwrap_or_default();
    if let Some(v) = flags.tol.eps_angle {
        tol.eps_angle = v;
    }
    if let Some(v) = flags.tol.eps_point {
        tol.eps_point = v;
    }
    if let Some(v) = flags.tol.eps_scalar {
        tol.eps_scalar = v;
    }
    tol.validate().map_err(|e| CliError::Usage(e.to_string()))?;

    let depth = flags.depth.or(config.depth).unwrap_or(DEFAULT_DEPTH);
    if depth == 0 {
        return Err(CliError::Usage("depth must be at least 1".into()));
    }
    let cap = flags.cap.or(config.cap);
    if cap == Some(0) {
        return Err(CliError::Usage("cap must be at least 1".into()));
    }
    let bbox = flags
        .bbox
        .or(config.bbox)
        .map(|[x0, y0, x1, y1]| Bbox::new(x0, y0, x1, y1))
        .transpose()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(Settings {
        tol,
        depth,
        cap,
        bbox,
        max_depth: flags
            .max_depth
            .or(config.max_depth)
            .unwrap_or(DEFAULT_MAX_DEPTH),
        output: flags.output.clone().or_else(|| config.output.clone()),
    })
}
