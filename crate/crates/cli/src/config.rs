use std::path::Path;

use ferrochi_core::Limits;
use serde::Deserialize;

use crate::error::{CliError, CliResult};

/// Bounds read from a TOML file; absent keys keep their defaults.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LimitsFile {
    pub dperm_max: Option<usize>,
    pub staircase_max: Option<usize>,
    pub bond_max_vertices: Option<usize>,
    pub hyperplane_max: Option<usize>,
    pub forest_max_edges: Option<usize>,
    pub lambda_series_max_order: Option<usize>,
}

impl LimitsFile {
    pub fn apply(&self, mut limits: Limits) -> Limits {
        let set = |slot: &mut usize, v: Option<usize>| {
            if let Some(v) = v {
                *slot = v;
            }
        };
        set(&mut limits.dperm_max, self.dperm_max);
        set(&mut limits.staircase_max, self.staircase_max);
        set(&mut limits.bond_max_vertices, self.bond_max_vertices);
        set(&mut limits.hyperplane_max, self.hyperplane_max);
        set(&mut limits.forest_max_edges, self.forest_max_edges);
        set(&mut limits.lambda_series_max_order, self.lambda_series_max_order);
        limits
    }
}

pub fn parse_limits(text: &str, path: &Path) -> CliResult<Limits> {
    let file: LimitsFile = toml::from_str(text).map_err(|source| CliError::Config {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(file.apply(Limits::default()))
}

pub fn load_limits(path: Option<&Path>) -> CliResult<Limits> {
    let Some(path) = path else {
        return Ok(Limits::default());
    };
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_limits(&text, path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_override() {
        let l = parse_limits("dperm_max = 8\nhyperplane_max = 10\n", Path::new("x.toml")).unwrap();
        assert_eq!(l.dperm_max, 8);
        assert_eq!(l.hyperplane_max, 10);
        assert_eq!(l.staircase_max, Limits::default().staircase_max);
    }

    #[test]
    fn unknown_key_is_rejected() {
        assert!(parse_limits("dperm = 8", Path::new("x.toml")).is_err());
        assert!(parse_limits("dperm_max = -1", Path::new("x.toml")).is_err());
    }
}
