//! JSON run configuration.
//!
//! ```json
//! {
//!   "params":  { "phi": 600, "psi": 10, "h": 10, "s": 100 },
//!   "spreads": { "d1": 100, "d2": 100, "d3": 1, "d4": 1 },
//!   "sweep":   [ { "d1": 100, "d2": 100, "d3": 1, "d4": 1 } ]
//! }
//! ```
//!
//! Every key is optional; missing parameters take the published example's values.

use std::path::Path;

use serde::Deserialize;

use super::CliError;
use crate::{CrispParams, FuzzySpreads};

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    #[serde(default)]
    pub params: ParamsSection,
    pub spreads: Option<FuzzySpreads>,
    pub sweep: Option<Vec<FuzzySpreads>>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsSection {
    pub phi: Option<f64>,
    pub psi: Option<f64>,
    pub h: Option<f64>,
    pub s: Option<f64>,
}

impl ParamsSection {
    pub fn overlay(self, top: ParamsSection) -> ParamsSection {
        ParamsSection {
            phi: top.phi.or(self.phi),
            psi: top.psi.or(self.psi),
            h: top.h.or(self.h),
            s: top.s.or(self.s),
        }
    }

    pub fn resolve(self) -> CrispParams {
        let d = CrispParams::published_example();
        CrispParams {
            phi: self.phi.unwrap_or(d.phi),
            psi: self.psi.unwrap_or(d.psi),
            h: self.h.unwrap_or(d.h),
            s: self.s.unwrap_or(d.s),
        }
    }
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Invalid(format!("config: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Invalid(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_config() {
        let c = ConfigFile::parse(
            r#"{"params":{"phi":500,"psi":5,"h":2,"s":50},
                "spreads":{"d1":1,"d2":2,"d3":0.5,"d4":0.5},
                "sweep":[{"d1":1,"d2":2,"d3":0.5,"d4":0.5}]}"#,
        )
        .unwrap();
        assert_eq!(
            c.params.resolve(),
            CrispParams {
                phi: 500.0,
                psi: 5.0,
                h: 2.0,
                s: 50.0
            }
        );
        assert_eq!(c.spreads, Some(FuzzySpreads::new(1.0, 2.0, 0.5, 0.5)));
        assert_eq!(c.sweep.unwrap().len(), 1);
    }

    #[test]
    fn partial_params_default_to_example() {
        let c = ConfigFile::parse(r#"{"params":{"h":0}}"#).unwrap();
        assert_eq!(
            c.params.resolve(),
            CrispParams {
                h: 0.0,
                ..CrispParams::published_example()
            }
        );
        assert_eq!(
            ConfigFile::parse("{}").unwrap().params.resolve(),
            CrispParams::published_example()
        );
    }

    #[test]
    fn rejects_unknown_keys_and_bad_json() {
        assert!(ConfigFile::parse(r#"{"parms":{}}"#).is_err());
        assert!(ConfigFile::parse(r#"{"spreads":{"d1":1}}"#).is_err());
        assert!(ConfigFile::parse("not json").is_err());
    }

    #[test]
    fn overlay_prefers_top() {
        let base = ParamsSection {
            phi: Some(1.0),
            h: Some(2.0),
            ..Default::default()
        };
        let top = ParamsSection {
            h: Some(3.0),
            ..Default::default()
        };
        let merged = base.overlay(top);
        assert_eq!((merged.phi, merged.h), (Some(1.0), Some(3.0)));
    }
}
