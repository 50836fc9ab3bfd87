//! Pieces of the command-line front end that are worth testing without a process:
//! the `key = value` config file and the real-number syntax accepted by `eval`.

use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::registry::ReportFormat;

/// Environment variable naming a config file when `--config` is absent.
pub const CONFIG_ENV: &str = "ZETA_ATLAS_CONFIG";

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("{path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("line {line}: expected `key = value`, got {text:?}")]
    Syntax { line: usize, text: String },
    #[error("line {line}: unknown key {key:?}")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: bad value for {key}: {value:?}")]
    BadValue { line: usize, key: String, value: String },
}

/// Defaults read from a config file. Command-line flags win over every field.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Config {
    pub tol_scale: Option<f64>,
    pub budget_scale: Option<f64>,
    pub format: Option<ReportFormat>,
}

impl Config {
    /// Parses `key = value` lines; `#` starts a comment, blank lines are skipped.
    /// Keys accept `_` or `-` as separator.
    pub fn parse(text: &str) -> Result<Config, ConfigError> {
        let mut cfg = Config::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let (key, value) = body
                .split_once('=')
                .map(|(k, v)| (k.trim(), v.trim().trim_matches('"')))
                .filter(|(k, v)| !k.is_empty() && !v.is_empty())
                .ok_or_else(|| ConfigError::Syntax { line, text: raw.to_string() })?;
            let bad = || ConfigError::BadValue { line, key: key.to_string(), value: value.to_string() };
            let scale = || value.parse::<f64>().ok().filter(|v| v.is_finite() && *v > 0.0).ok_or_else(bad);
            match key.replace('-', "_").as_str() {
                "tol_scale" => cfg.tol_scale = Some(scale()?),
                "budget_scale" => cfg.budget_scale = Some(scale()?),
                "format" => cfg.format = Some(value.parse().map_err(|_| bad())?),
                _ => return Err(ConfigError::UnknownKey { line, key: key.to_string() }),
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Config, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Read { path: path.to_path_buf(), source })?;
        Config::parse(&text)
    }

    /// The explicit path if given, else `$ZETA_ATLAS_CONFIG`, else no config.
    pub fn resolve(explicit: Option<&Path>) -> Result<Config, ConfigError> {
        match explicit {
            Some(p) => Config::load(p),
            None => match std::env::var_os(CONFIG_ENV) {
                Some(p) if !p.is_empty() => Config::load(Path::new(&p)),
                _ => Ok(Config::default()),
            },
        }
    }
}

#[derive(Debug, Error, PartialEq)]
#[error("cannot read {0:?} as a number (use decimals, pi, e, and * or /)")]
pub struct RealParseError(pub String);

/// Reads `1.5`, `-pi/2`, `2*pi/3`, `1/3`, `e` and similar products and quotients.
pub fn parse_real(text: &str) -> Result<f64, RealParseError> {
    let err = || RealParseError(text.to_string());
    let s = text.trim();
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1.0, rest),
        None => (1.0, s.strip_prefix('+').unwrap_or(s)),
    };
    if body.is_empty() {
        return Err(err());
    }
    let mut acc = sign;
    let mut op = '*';
    let mut rest = body;
    loop {
        let end = rest.find(['*', '/']).unwrap_or(rest.len());
        let factor = match rest[..end].trim() {
            "pi" | "π" => std::f64::consts::PI,
            "e" => std::f64::consts::E,
            f => f.parse::<f64>().map_err(|_| err())?,
        };
        acc = if op == '*' { acc * factor } else { acc / factor };
        if end == rest.len() {
            break;
        }
        op = rest[end..].chars().next().unwrap_or('*');
        rest = &rest[end + 1..];
    }
    if acc.is_finite() {
        Ok(acc)
    } else {
        Err(err())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn config_lines() {
        let c = Config::parse("# defaults\ntol-scale = 2\nbudget_scale=0.5  # halve\n\nformat = \"md\"\n").unwrap();
        assert_eq!(c, Config { tol_scale: Some(2.0), budget_scale: Some(0.5), format: Some(ReportFormat::Markdown) });
    }

    #[test]
    fn config_errors() {
        assert!(matches!(Config::parse("tol_scale 2"), Err(ConfigError::Syntax { line: 1, .. })));
        assert!(matches!(Config::parse("\ncolour = red"), Err(ConfigError::UnknownKey { line: 2, .. })));
        assert!(matches!(Config::parse("tol_scale = -1"), Err(ConfigError::BadValue { .. })));
        assert!(matches!(Config::parse("format = yaml"), Err(ConfigError::BadValue { .. })));
    }

    #[test]
    fn reals() {
        assert_eq!(parse_real("0.25"), Ok(0.25));
        assert_eq!(parse_real("pi/2"), Ok(PI / 2.0));
        assert_eq!(parse_real("-2*pi/3"), Ok(-2.0 * PI / 3.0));
        assert_eq!(parse_real("1/3"), Ok(1.0 / 3.0));
        assert_eq!(parse_real("1e-3"), Ok(1e-3));
        assert!(parse_real("").is_err());
        assert!(parse_real("pi/").is_err());
        assert!(parse_real("1/0").is_err());
        assert!(parse_real("tau").is_err());
    }
}
