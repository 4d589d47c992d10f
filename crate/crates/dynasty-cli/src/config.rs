//! Scenario files: INI-style sections, one scenario per section.
//!
//! ```text
//! # comment (also ;)
//! [slow-growth]
//! A = 1.01
//! beta = 0.992
//! theta = 1.0
//! k0 = 150
//! n = 73            # fixed horizon; or n_from/n_to/stride; or neither
//! ```
//!
//! Unknown keys are hard errors so a typo cannot silently fall back to a
//! default.

use std::fmt;

use dynasty_core::ModelParams;

/// A named parameter set plus the horizon question being asked of it.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub name: String,
    pub params: ModelParams,
    pub horizon: HorizonSpec,
    pub eps: f64,
}

/// Exactly one of: a fixed horizon, a horizon sweep, or a search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HorizonSpec {
    Fixed(usize),
    Range {
        from: usize,
        to: usize,
        stride: usize,
    },
    Search,
}

pub const DEFAULT_PLATEAU_EPS: f64 = 0.5e-3;

#[derive(Debug)]
pub struct ConfigError {
    pub line: Option<usize>,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "config line {line}: {}", self.message),
            None => write!(f, "config: {}", self.message),
        }
    }
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ConfigError> {
    Err(ConfigError {
        line: Some(line),
        message: message.into(),
    })
}

const KEYS: [&str; 10] = [
    "A", "beta", "theta", "k0", "s", "n", "n_from", "n_to", "stride", "eps",
];

/// One `key = value` occurrence, with its line for error reporting.
struct Entry {
    line: usize,
    key: &'static str,
    value: String,
}

struct Section {
    name: String,
    line: usize,
    entries: Vec<Entry>,
}

impl Section {
    fn get(&self, key: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.key == key)
    }

    fn float(&self, key: &str) -> Result<Option<f64>, ConfigError> {
        let Some(entry) = self.get(key) else {
            return Ok(None);
        };
        let raw = entry.value.as_str();
        match raw.parse::<f64>() {
            Ok(v) if !v.is_nan() => Ok(Some(v)),
            _ => err(entry.line, format!("key `{key}`: `{raw}` is not a number")),
        }
    }

    fn required_float(&self, key: &str) -> Result<f64, ConfigError> {
        self.float(key)?.ok_or_else(|| ConfigError {
            line: Some(self.line),
            message: format!("scenario `{}`: missing key `{key}`", self.name),
        })
    }

    fn index(&self, key: &str) -> Result<Option<usize>, ConfigError> {
        let Some(entry) = self.get(key) else {
            return Ok(None);
        };
        let raw = entry.value.as_str();
        match raw.parse::<usize>() {
            Ok(v) => Ok(Some(v)),
            Err(_) => err(
                entry.line,
                format!("key `{key}`: `{raw}` is not a nonnegative integer"),
            ),
        }
    }
}

/// Parse a whole scenario file. An empty file is a valid, empty list.
pub fn parse_config(text: &str) -> Result<Vec<Scenario>, ConfigError> {
    let mut sections: Vec<Section> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with(';') {
            continue;
        }
        if let Some(inner) = trimmed.strip_prefix('[') {
            let Some(name) = inner.strip_suffix(']') else {
                return err(line, "unterminated section header");
            };
            let name = name.trim();
            if name.is_empty()
                || !name
                    .chars()
                    .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
            {
                return err(
                    line,
                    format!("section name `{name}` must be alphanumeric with `-`/`_`"),
                );
            }
            if sections.iter().any(|s| s.name == name) {
                return err(line, format!("duplicate scenario `{name}`"));
            }
            sections.push(Section {
                name: name.to_string(),
                line,
                entries: Vec::new(),
            });
            continue;
        }
        let Some((key, value)) = trimmed.split_once('=') else {
            return err(line, format!("expected `key = value`, got `{trimmed}`"));
        };
        let key = key.trim();
        let value = value.trim();
        let Some(&known) = KEYS.iter().find(|&&k| k == key) else {
            return err(line, format!("unknown key `{key}`"));
        };
        let Some(section) = sections.last_mut() else {
            return err(line, format!("key `{key}` appears before any [scenario]"));
        };
        if let Some(prev) = section.get(known) {
            return err(
                line,
                format!("key `{key}` already set on line {}", prev.line),
            );
        }
        if value.is_empty() {
            return err(line, format!("key `{key}` has an empty value"));
        }
        section.entries.push(Entry {
            line,
            key: known,
            value: value.to_string(),
        });
    }
    sections.iter().map(build_scenario).collect()
}

fn build_scenario(section: &Section) -> Result<Scenario, ConfigError> {
    let a = section.required_float("A")?;
    let beta = section.required_float("beta")?;
    let theta = section.required_float("theta")?;
    let k0 = section.required_float("k0")?;
    let mut params = ModelParams::new(a, beta, theta, k0).map_err(|e| ConfigError {
        line: Some(section.line),
        message: format!("scenario `{}`: {e}", section.name),
    })?;
    if let Some(s) = section.float("s")? {
        params = params.with_subsistence(s).map_err(|e| ConfigError {
            line: Some(section.line),
            message: format!("scenario `{}`: {e}", section.name),
        })?;
    }

    let n = section.index("n")?;
    let from = section.index("n_from")?;
    let to = section.index("n_to")?;
    let stride = section.index("stride")?;
    let horizon = match (n, from, to) {
        (Some(n), None, None) => {
            if let Some(e) = section.get("stride") {
                return err(e.line, "`stride` only makes sense with `n_from`/`n_to`");
            }
            HorizonSpec::Fixed(n)
        }
        (None, Some(from), Some(to)) => {
            if from > to {
                let e = section.get("n_from").unwrap();
                return err(e.line, format!("n_from = {from} exceeds n_to = {to}"));
            }
            let stride = stride.unwrap_or(1);
            if stride == 0 {
                let e = section.get("stride").unwrap();
                return err(e.line, "stride must be at least 1");
            }
            HorizonSpec::Range { from, to, stride }
        }
        (None, None, None) => {
            if let Some(e) = section.get("stride") {
                return err(e.line, "`stride` only makes sense with `n_from`/`n_to`");
            }
            HorizonSpec::Search
        }
        (Some(_), _, _) => {
            let e = section.get("n").unwrap();
            return err(e.line, "`n` and `n_from`/`n_to` are mutually exclusive");
        }
        (None, _, _) => {
            let e = section
                .get("n_from")
                .or_else(|| section.get("n_to"))
                .unwrap();
            return err(e.line, "`n_from` and `n_to` must be given together");
        }
    };

    let eps = match section.float("eps")? {
        Some(eps) if eps > 0.0 => eps,
        Some(_) => {
            let e = section.get("eps").unwrap();
            return err(e.line, "eps must be positive");
        }
        None => DEFAULT_PLATEAU_EPS,
    };

    Ok(Scenario {
        name: section.name.clone(),
        params,
        horizon,
        eps,
    })
}
