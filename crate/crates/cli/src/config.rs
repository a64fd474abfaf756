//! Sweep configuration, read from TOML.
//!
//! ```toml
//! [ex51]
//! k = [3, 5, 7, 9, 11]   # m defaults to k + 2
//!
//! [ex52]
//! k = [1, 3, 5, 7]
//!
//! [ex53]
//! chi = [6, 20]          # inclusive; every valid n is taken
//!
//! [ampleness]
//! enabled = false
//! coeff = 60
//! beta = 60
//! extended = 600
//! ```

use std::path::Path;

use hypfib_core::ruled_surface::{ex53_parameters, Family, SearchBox};
use serde::Deserialize;

use crate::args::CliError;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    #[serde(default)]
    pub ex51: Option<Ex51Config>,
    #[serde(default)]
    pub ex52: Option<Ex52Config>,
    #[serde(default)]
    pub ex53: Option<Ex53Config>,
    #[serde(default)]
    pub ampleness: AmplenessConfig,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Ex51Config {
    pub k: Vec<u32>,
    /// Fixed torsion order; `k + 2` when absent.
    #[serde(default)]
    pub m: Option<u32>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Ex52Config {
    pub k: Vec<u32>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Ex53Config {
    #[serde(default)]
    pub chi: Option<[u32; 2]>,
    /// Explicit `[n, chi]` pairs, taken in addition to the range.
    #[serde(default)]
    pub pairs: Vec<[u32; 2]>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct AmplenessConfig {
    pub enabled: bool,
    pub coeff: i64,
    pub beta: i64,
    pub extended: i64,
}

impl Default for AmplenessConfig {
    fn default() -> Self {
        let b = SearchBox::default();
        AmplenessConfig {
            enabled: false,
            coeff: b.coeff,
            beta: b.beta,
            extended: b.extended,
        }
    }
}

impl AmplenessConfig {
    pub fn search_box(&self) -> SearchBox {
        SearchBox {
            coeff: self.coeff,
            beta: self.beta,
            extended: self.extended,
        }
    }
}

impl SweepConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::new("io", format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::new("config", e.to_string().trim().to_string()))
    }

    /// Families in config order: ex51, ex52, ex53.
    pub fn families(&self) -> Vec<Family> {
        let mut out = Vec::new();
        if let Some(c) = &self.ex51 {
            out.extend(c.k.iter().map(|&k| Family::Ex51 { k, m: c.m.unwrap_or(k + 2) }));
        }
        if let Some(c) = &self.ex52 {
            out.extend(c.k.iter().map(|&k| Family::Ex52 { k }));
        }
        if let Some(c) = &self.ex53 {
            if let Some([lo, hi]) = c.chi {
                out.extend(ex53_parameters(lo, hi).into_iter().map(|(n, chi)| Family::Ex53 { n, chi }));
            }
            out.extend(c.pairs.iter().map(|&[n, chi]| Family::Ex53 { n, chi }));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_full_config() {
        let c = SweepConfig::parse(
            "[ex51]\nk = [3, 5]\n[ex52]\nk = [1]\n[ex53]\nchi = [6, 6]\npairs = [[4, 9]]\n[ampleness]\nenabled = true\ncoeff = 10\n",
        )
        .unwrap();
        assert_eq!(
            c.families(),
            vec![
                Family::Ex51 { k: 3, m: 5 },
                Family::Ex51 { k: 5, m: 7 },
                Family::Ex52 { k: 1 },
                Family::Ex53 { n: 1, chi: 6 },
                Family::Ex53 { n: 2, chi: 6 },
                Family::Ex53 { n: 4, chi: 9 },
            ]
        );
        assert!(c.ampleness.enabled);
        assert_eq!(c.ampleness.search_box(), SearchBox { coeff: 10, beta: 60, extended: 600 });
    }

    #[test]
    fn rejects_unknown_keys() {
        assert_eq!(SweepConfig::parse("[ex54]\nk = [1]\n").unwrap_err().kind, "config");
    }
}
