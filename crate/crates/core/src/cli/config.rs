//! Run settings: defaults, overridden by a `key=value` file, overridden by flags.

use std::path::{Path, PathBuf};

use cliflat::{parse_rational, LatticeParams, Rational};

use super::{Format, Usage};

/// Values supplied by flags. `None` means "not given".
#[derive(Debug, Default, Clone)]
pub struct Overrides {
    pub n: Option<String>,
    pub h: Option<String>,
    pub mu: Option<String>,
    pub b: Option<String>,
    pub degree: Option<String>,
    pub seed: Option<String>,
    pub format: Option<String>,
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliConfig {
    pub n: usize,
    pub h: Rational,
    pub mu: Rational,
    pub b: Rational,
    pub degree: u32,
    pub seed: u64,
    pub format: Option<Format>,
    pub output: Option<PathBuf>,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            n: 2,
            h: Rational::from_integer(1.into()),
            mu: Rational::from_integer(1.into()),
            b: Rational::from_integer(0.into()),
            degree: 4,
            seed: 0,
            format: None,
            output: None,
        }
    }
}

impl CliConfig {
    pub fn params(&self) -> Result<LatticeParams, Usage> {
        LatticeParams::new(self.n, self.h.clone(), self.mu.clone(), self.b.clone())
            .map_err(|e| Usage(format!("invalid lattice parameters: {e}")))
    }

    /// Defaults, then the config file (if any), then the flags.
    pub fn resolve(file: Option<&Path>, flags: &Overrides) -> Result<Self, Usage> {
        let mut cfg = CliConfig::default();
        if let Some(path) = file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Usage(format!("cannot read config {}: {e}", path.display())))?;
            for (i, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let (key, value) = line
                    .split_once('=')
                    .ok_or_else(|| Usage(format!("{}:{}: expected key=value", path.display(), i + 1)))?;
                cfg.set(key.trim(), value.trim())
                    .map_err(|Usage(m)| Usage(format!("{}:{}: {m}", path.display(), i + 1)))?;
            }
        }
        let pairs = [
            ("n", &flags.n),
            ("h", &flags.h),
            ("mu", &flags.mu),
            ("b", &flags.b),
            ("degree", &flags.degree),
            ("seed", &flags.seed),
            ("format", &flags.format),
        ];
        for (key, value) in pairs {
            if let Some(v) = value {
                cfg.set(key, v).map_err(|Usage(m)| Usage(format!("--{key}: {m}")))?;
            }
        }
        if let Some(out) = &flags.output {
            cfg.output = Some(out.clone());
        }
        Ok(cfg)
    }

    fn set(&mut self, key: &str, value: &str) -> Result<(), Usage> {
        match key {
            "n" => self.n = parse_count(value)? as usize,
            "h" => self.h = parse_exact(value)?,
            "mu" => self.mu = parse_exact(value)?,
            "b" => self.b = parse_exact(value)?,
            "degree" => self.degree = parse_count(value)? as u32,
            "seed" => self.seed = parse_count(value)?,
            "format" => self.format = Some(value.parse()?),
            "output" => self.output = Some(PathBuf::from(value)),
            other => return Err(Usage(format!("unknown key `{other}`"))),
        }
        Ok(())
    }
}

fn parse_exact(value: &str) -> Result<Rational, Usage> {
    parse_rational(value).map_err(|_| {
        Usage(format!(
            "`{value}` is not an exact rational (expected p or p/q in lowest terms)"
        ))
    })
}

/// A nonnegative decimal integer without sign or leading zeros.
pub fn parse_count(value: &str) -> Result<u64, Usage> {
    let canonical =
        value == "0" || (!value.is_empty() && !value.starts_with('0') && value.bytes().all(|c| c.is_ascii_digit()));
    if !canonical {
        return Err(Usage(format!("`{value}` is not a nonnegative integer")));
    }
    value.parse().map_err(|_| Usage(format!("`{value}` is out of range")))
}
