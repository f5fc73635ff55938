//! Scenario files: strict JSON with a versioned schema.

use std::path::{Path, PathBuf};

use certainty_core::relations::relation_info;
use serde::Deserialize;

use crate::error::{CliError, Result};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub schema_version: u32,
    pub id: String,
    pub seed: u64,
    #[serde(default = "unit_hbar")]
    pub hbar: f64,
    #[serde(default)]
    pub output_dir: Option<PathBuf>,
    pub model: ModelSpec,
    pub states: Vec<StateSpec>,
    pub relations: Vec<RelationSpec>,
}

fn unit_hbar() -> f64 {
    1.0
}

fn z_axis() -> [f64; 3] {
    [0.0, 0.0, 1.0]
}

#[derive(Clone, Copy, Debug, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum PolarizationSpec {
    Linear,
    Circular,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ModelSpec {
    Lattice {
        sites: usize,
        length: f64,
    },
    Rotor {
        m_max: usize,
    },
    /// `H = field·J` drives the time relations.
    Spin {
        j: f64,
        #[serde(default = "z_axis")]
        field: [f64; 3],
    },
    Rabi {
        rabi: f64,
        drive: f64,
        #[serde(default)]
        detuning: f64,
        polarization: PolarizationSpec,
    },
}

impl ModelSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            ModelSpec::Lattice { .. } => "lattice",
            ModelSpec::Rotor { .. } => "rotor",
            ModelSpec::Spin { .. } => "spin",
            ModelSpec::Rabi { .. } => "rabi",
        }
    }

    fn relations(&self) -> &'static [&'static str] {
        match self {
            ModelSpec::Lattice { .. } => &["kennard", "ratio_check", "uncertainty_xp"],
            ModelSpec::Rotor { .. } => &["judge", "uncertainty_angle"],
            ModelSpec::Spin { .. } => &["mandelshtam_tamm_closed", "mandelshtam_tamm_driven"],
            ModelSpec::Rabi { .. } => &["mandelshtam_tamm_driven"],
        }
    }

    fn states(&self) -> &'static [&'static str] {
        match self {
            ModelSpec::Lattice { .. } => &["gaussian", "bimodal", "plane_wave", "random"],
            ModelSpec::Rotor { .. } => &["eigenstate", "superposition", "von_mises", "random"],
            ModelSpec::Spin { .. } => &["coherent", "random"],
            ModelSpec::Rabi { .. } => &["ground", "excited", "random"],
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum StateSpec {
    Gaussian {
        #[serde(default)]
        x0: f64,
        #[serde(default)]
        p0: f64,
        sigma: f64,
    },
    /// One state per separation.
    Bimodal {
        #[serde(default)]
        x0: f64,
        sigma: f64,
        separations: Vec<f64>,
        weight: f64,
    },
    PlaneWave {
        mode: i64,
    },
    Eigenstate {
        m: i64,
    },
    /// Terms `[m, re, im]`.
    Superposition {
        terms: Vec<(i64, f64, f64)>,
    },
    VonMises {
        #[serde(default)]
        phi0: f64,
        kappa: f64,
    },
    Coherent {
        theta: f64,
        #[serde(default)]
        phi: f64,
    },
    Ground {},
    Excited {},
    /// Haar-random states; state `i` uses seed `seed + i`.
    Random {
        count: usize,
    },
}

impl StateSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            StateSpec::Gaussian { .. } => "gaussian",
            StateSpec::Bimodal { .. } => "bimodal",
            StateSpec::PlaneWave { .. } => "plane_wave",
            StateSpec::Eigenstate { .. } => "eigenstate",
            StateSpec::Superposition { .. } => "superposition",
            StateSpec::VonMises { .. } => "von_mises",
            StateSpec::Coherent { .. } => "coherent",
            StateSpec::Ground {} => "ground",
            StateSpec::Excited {} => "excited",
            StateSpec::Random { .. } => "random",
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationSpec {
    pub id: String,
    /// Tail probability of the interval uncertainties.
    #[serde(default)]
    pub q: Option<f64>,
    /// Substantial-change angle in radians.
    #[serde(default)]
    pub threshold: Option<f64>,
    /// Search horizon of the time relations.
    #[serde(default)]
    pub cap: Option<f64>,
    /// Integration step of the driven relation.
    #[serde(default)]
    pub dt: Option<f64>,
}

/// Source text kept around to anchor semantic errors to lines.
pub struct Source {
    pub path: String,
    pub text: String,
}

impl Source {
    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
            path: path.to_path_buf(),
            source,
        })?;
        Ok(Self {
            path: path.display().to_string(),
            text,
        })
    }

    /// Error anchored at the first occurrence of `needle` (line 1 if absent).
    pub fn error_at(&self, needle: &str, message: impl Into<String>) -> CliError {
        let (line, column) = self
            .text
            .lines()
            .enumerate()
            .find_map(|(i, l)| l.find(needle).map(|c| (i + 1, c + 1)))
            .unwrap_or((1, 1));
        CliError::Config {
            path: self.path.clone(),
            line,
            column,
            message: message.into(),
        }
    }

    pub fn parse(&self) -> Result<Scenario> {
        let scenario: Scenario = serde_json::from_str(&self.text).map_err(|e| CliError::Config {
            path: self.path.clone(),
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        self.validate(&scenario)?;
        Ok(scenario)
    }

    fn validate(&self, s: &Scenario) -> Result<()> {
        if s.schema_version != SCHEMA_VERSION {
            return Err(self.error_at(
                "\"schema_version\"",
                format!("unsupported schema_version {} (expected {SCHEMA_VERSION})", s.schema_version),
            ));
        }
        if !is_identifier(&s.id) {
            return Err(self.error_at("\"id\"", format!("scenario id {:?} must match [A-Za-z0-9_]+", s.id)));
        }
        if !(s.hbar > 0.0 && s.hbar.is_finite()) {
            return Err(self.error_at("\"hbar\"", "hbar must be positive and finite"));
        }
        if s.states.is_empty() {
            return Err(self.error_at("\"states\"", "at least one state is required"));
        }
        if s.relations.is_empty() {
            return Err(self.error_at("\"relations\"", "at least one relation is required"));
        }
        for st in &s.states {
            let kind = st.kind();
            if !s.model.states().contains(&kind) {
                return Err(self.error_at(
                    &format!("\"{kind}\""),
                    format!("state kind {kind} does not apply to a {} model", s.model.kind()),
                ));
            }
            if let StateSpec::Random { count: 0 } = st {
                return Err(self.error_at("\"count\"", "random ensemble needs count ≥ 1"));
            }
            if let StateSpec::Bimodal { separations, .. } = st {
                if separations.is_empty() {
                    return Err(self.error_at("\"separations\"", "bimodal family needs at least one separation"));
                }
            }
        }
        let mut seen = Vec::new();
        for r in &s.relations {
            let needle = format!("\"{}\"", r.id);
            if relation_info(&r.id).is_none() {
                return Err(self.error_at(&needle, format!("unknown relation id {:?}", r.id)));
            }
            if !s.model.relations().contains(&r.id.as_str()) {
                return Err(self.error_at(
                    &needle,
                    format!("relation {} does not apply to a {} model", r.id, s.model.kind()),
                ));
            }
            if seen.contains(&r.id) {
                return Err(self.error_at(&needle, format!("relation {} listed twice", r.id)));
            }
            seen.push(r.id.clone());
            let uses_q = matches!(r.id.as_str(), "uncertainty_xp" | "uncertainty_angle" | "ratio_check");
            let uses_cap = r.id.starts_with("mandelshtam_tamm");
            let uses_dt = r.id == "mandelshtam_tamm_driven";
            let uses_threshold = r.id == "mandelshtam_tamm_closed";
            let overrides = [
                ("q", r.q, uses_q),
                ("threshold", r.threshold, uses_threshold),
                ("cap", r.cap, uses_cap),
                ("dt", r.dt, uses_dt),
            ];
            for (name, value, used) in overrides {
                let Some(v) = value else { continue };
                let key = format!("\"{name}\"");
                if !used {
                    return Err(self.error_at(&key, format!("override {name} is not used by relation {}", r.id)));
                }
                let ok = match name {
                    "q" => v > 0.0 && v < 0.5,
                    "threshold" => v > 0.0 && v <= std::f64::consts::FRAC_PI_2,
                    _ => v > 0.0 && v.is_finite(),
                };
                if !ok {
                    return Err(self.error_at(&key, format!("override {name} = {v} out of range")));
                }
            }
        }
        Ok(())
    }
}

pub fn is_identifier(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}
