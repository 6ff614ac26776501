//! Line-oriented `key = value` scenario files.
//!
//! `#` starts a comment; blank lines are ignored. Every model coefficient
//! and the grid/horizon keys are required; `dt`, `record_every`, `target`
//! and `stop_tol` are optional with documented defaults. Unknown keys are
//! rejected so typos cannot silently fall back to defaults.

use crate::model::{EquilibriumKind, Params};
use crate::solver::{GridSpec, SimConfig};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConfigError {
    #[error("missing required key `{0}`")]
    MissingKey(&'static str),
    #[error("bad value for `{key}`: {reason} (got `{token}`)")]
    BadValue {
        key: String,
        token: String,
        reason: String,
    },
    #[error("unknown key `{0}`")]
    UnknownKey(String),
    #[error("line {0} is not `key = value`: `{1}`")]
    BadLine(usize, String),
}

const KNOWN_KEYS: [&str; 28] = [
    "d1", "d2", "d3", "d4", "chi1", "chi2", "xi", "mu1", "mu2", "mu3", "a1", "a2", "a3", "a4",
    "a5", "a6", "alpha", "beta", "gamma", "ndim", "nodes", "lo", "hi", "t_end", "dt",
    "record_every", "target", "stop_tol",
];

fn bad_value(key: &str, token: &str, reason: impl Into<String>) -> ConfigError {
    ConfigError::BadValue {
        key: key.to_string(),
        token: token.to_string(),
        reason: reason.into(),
    }
}

/// Names of the distance-tracking targets accepted by config files and the
/// command line.
pub fn parse_target(token: &str) -> Option<EquilibriumKind> {
    match token {
        "coexistence" => Some(EquilibriumKind::Coexistence),
        "trivial" => Some(EquilibriumKind::SecondaryOnly),
        "prey-vanishing" => Some(EquilibriumKind::PreyVanishing),
        "primary-vanishing" => Some(EquilibriumKind::PrimaryVanishing),
        _ => None,
    }
}

struct KeyValues {
    map: HashMap<String, String>,
}

impl KeyValues {
    fn take(&mut self, key: &'static str) -> Result<String, ConfigError> {
        self.map.remove(key).ok_or(ConfigError::MissingKey(key))
    }

    fn take_optional(&mut self, key: &'static str) -> Option<String> {
        self.map.remove(key)
    }

    fn take_f64(&mut self, key: &'static str) -> Result<f64, ConfigError> {
        let token = self.take(key)?;
        token
            .parse::<f64>()
            .map_err(|_| bad_value(key, &token, "not a number"))
    }

    fn take_positive(&mut self, key: &'static str) -> Result<f64, ConfigError> {
        let value = self.take_f64(key)?;
        if !(value > 0.0) || !value.is_finite() {
            return Err(bad_value(key, &value.to_string(), "must be strictly positive"));
        }
        Ok(value)
    }

    fn take_usize(&mut self, key: &'static str) -> Result<usize, ConfigError> {
        let token = self.take(key)?;
        token
            .parse::<usize>()
            .map_err(|_| bad_value(key, &token, "not a nonnegative integer"))
    }
}

/// Parses a scenario document into a full [`SimConfig`].
///
/// Defaults: `dt = 0` (automatic step bound), `record_every = 0.1`, no
/// target, no early-stop tolerance.
pub fn parse_config(text: &str) -> Result<SimConfig, ConfigError> {
    let mut map: HashMap<String, String> = HashMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| ConfigError::BadLine(lineno + 1, raw.to_string()))?;
        let key = key.trim();
        let value = value.trim();
        if !KNOWN_KEYS.contains(&key) {
            return Err(ConfigError::UnknownKey(key.to_string()));
        }
        if value.is_empty() {
            return Err(bad_value(key, value, "empty value"));
        }
        if map.insert(key.to_string(), value.to_string()).is_some() {
            return Err(bad_value(key, value, "duplicate key"));
        }
    }
    let mut kv = KeyValues { map };

    let params = Params {
        d1: kv.take_positive("d1")?,
        d2: kv.take_positive("d2")?,
        d3: kv.take_positive("d3")?,
        d4: kv.take_positive("d4")?,
        chi1: kv.take_positive("chi1")?,
        chi2: kv.take_positive("chi2")?,
        xi: kv.take_positive("xi")?,
        mu1: kv.take_positive("mu1")?,
        mu2: kv.take_positive("mu2")?,
        mu3: kv.take_positive("mu3")?,
        a1: kv.take_positive("a1")?,
        a2: kv.take_positive("a2")?,
        a3: kv.take_positive("a3")?,
        a4: kv.take_positive("a4")?,
        a5: kv.take_positive("a5")?,
        a6: kv.take_positive("a6")?,
        alpha: kv.take_positive("alpha")?,
        beta: kv.take_positive("beta")?,
        gamma: kv.take_positive("gamma")?,
    };

    let ndim = kv.take_usize("ndim")?;
    if !(1..=3).contains(&ndim) {
        return Err(bad_value("ndim", &ndim.to_string(), "must be 1, 2 or 3"));
    }
    let nodes = kv.take_usize("nodes")?;
    if nodes < 3 {
        return Err(bad_value("nodes", &nodes.to_string(), "need at least 3 nodes"));
    }
    let lo = kv.take_f64("lo")?;
    let hi = kv.take_f64("hi")?;
    if !(hi > lo) {
        return Err(bad_value("hi", &hi.to_string(), "hi must exceed lo"));
    }
    let t_end = kv.take_positive("t_end")?;

    let dt = match kv.take_optional("dt") {
        None => 0.0,
        Some(token) => {
            let v: f64 = token
                .parse()
                .map_err(|_| bad_value("dt", &token, "not a number"))?;
            if v < 0.0 || !v.is_finite() {
                return Err(bad_value("dt", &token, "must be 0 (auto) or positive"));
            }
            v
        }
    };
    let record_every = match kv.take_optional("record_every") {
        None => 0.1,
        Some(token) => {
            let v: f64 = token
                .parse()
                .map_err(|_| bad_value("record_every", &token, "not a number"))?;
            if !(v > 0.0) {
                return Err(bad_value("record_every", &token, "must be positive"));
            }
            v
        }
    };
    let target = match kv.take_optional("target") {
        None => None,
        Some(token) => Some(parse_target(&token).ok_or_else(|| {
            bad_value(
                "target",
                &token,
                "expected coexistence | trivial | prey-vanishing | primary-vanishing",
            )
        })?),
    };
    let stop_tol = match kv.take_optional("stop_tol") {
        None => None,
        Some(token) => {
            let v: f64 = token
                .parse()
                .map_err(|_| bad_value("stop_tol", &token, "not a number"))?;
            if !(v > 0.0) {
                return Err(bad_value("stop_tol", &token, "must be positive"));
            }
            Some(v)
        }
    };

    Ok(SimConfig {
        params,
        grid: GridSpec {
            ndim,
            nodes_per_axis: nodes,
            lo,
            hi,
        },
        t_end,
        dt,
        record_every,
        target,
        stop_tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = "\
d1 = 1\nd2 = 1\nd3 = 1\nd4 = 1\nchi1 = 1\nchi2 = 1\nxi = 1\n\
mu1 = 1\nmu2 = 1\nmu3 = 1\n\
a1 = 0.5\na2 = 0.5\na3 = 0.5\na4 = 0.5\na5 = 0.5\na6 = 0.5\n\
alpha = 1\nbeta = 1\ngamma = 2\n\
ndim = 2\nnodes = 102\nlo = -0.5\nhi = 0.5\nt_end = 30\n";

    #[test]
    fn shipped_coexistence_scenario_parses() {
        let text = std::fs::read_to_string(
            std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
                .join("../../configs/example5_1.cfg"),
        )
        .unwrap();
        let cfg = parse_config(&text).unwrap();
        assert_eq!(cfg.params.d1, 1.0);
        assert_eq!(cfg.params.gamma, 2.0);
        assert_eq!(cfg.params.a6, 0.5);
        assert_eq!(cfg.grid.ndim, 2);
        assert_eq!(cfg.grid.nodes_per_axis, 102);
        assert_eq!(cfg.grid.lo, -0.5);
        assert_eq!(cfg.grid.hi, 0.5);
        assert_eq!(cfg.t_end, 30.0);
        assert_eq!(cfg.dt, 0.0);
        assert_eq!(cfg.record_every, 0.1);
        assert_eq!(cfg.target, Some(EquilibriumKind::Coexistence));
        assert_eq!(cfg.stop_tol, None);
    }

    #[test]
    fn defaults_apply_when_optional_keys_are_absent() {
        let cfg = parse_config(MINIMAL).unwrap();
        assert_eq!(cfg.dt, 0.0);
        assert_eq!(cfg.record_every, 0.1);
        assert_eq!(cfg.target, None);
        assert_eq!(cfg.stop_tol, None);
    }

    #[test]
    fn missing_key_is_named() {
        let text = MINIMAL.replace("gamma = 2\n", "");
        assert_eq!(
            parse_config(&text).unwrap_err(),
            ConfigError::MissingKey("gamma")
        );
    }

    #[test]
    fn nonpositive_param_is_a_bad_value() {
        let text = MINIMAL.replace("gamma = 2", "gamma = -2");
        match parse_config(&text).unwrap_err() {
            ConfigError::BadValue { key, .. } => assert_eq!(key, "gamma"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn unknown_key_is_rejected() {
        let text = format!("{MINIMAL}quux = 1\n");
        assert_eq!(
            parse_config(&text).unwrap_err(),
            ConfigError::UnknownKey("quux".into())
        );
    }

    #[test]
    fn duplicate_key_is_rejected() {
        let text = format!("{MINIMAL}gamma = 3\n");
        assert!(matches!(
            parse_config(&text).unwrap_err(),
            ConfigError::BadValue { .. }
        ));
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = format!("# leading comment\n\n{MINIMAL}target = trivial # trailing\n");
        let cfg = parse_config(&text).unwrap();
        assert_eq!(cfg.target, Some(EquilibriumKind::SecondaryOnly));
    }

    #[test]
    fn malformed_line_is_reported_with_number() {
        let text = format!("{MINIMAL}this is not a pair\n");
        assert!(matches!(
            parse_config(&text).unwrap_err(),
            ConfigError::BadLine(25, _)
        ));
    }

    #[test]
    fn bad_target_token() {
        let text = format!("{MINIMAL}target = extinction\n");
        assert!(matches!(
            parse_config(&text).unwrap_err(),
            ConfigError::BadValue { .. }
        ));
    }
}
