//! Scenario execution: model and state preparation, parallel evaluation,
//! artifact assembly.

use std::path::{Path, PathBuf};
use std::time::Instant;

use certainty_core::geometry::{orbit_trace, quantum_angle};
use certainty_core::hilbert::{std_dev, HermitianOperator};
use certainty_core::models::{make_lattice, make_rabi, make_rotor, make_spin, Polarization};
use certainty_core::random::{random_state, seeded_rng, task_seed};
use certainty_core::relations::{
    judge, kennard, mandelshtam_tamm_closed_with, mandelshtam_tamm_driven, ratio_check, uncertainty_angle, uncertainty_xp,
    RelationReport, Status, DEFAULT_CAP_FACTOR,
};
use certainty_core::spectral::default_tail;
use certainty_core::unitary::{propagate_driven, CertaintyConfig};
use certainty_core::{
    Complex64, CovarianceGate, DrivenHamiltonian, LatticeSystem, PlanckScale, RabiDrive, RotorSystem, SpinSystem,
    StateVector,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::config::{ModelSpec, PolarizationSpec, RelationSpec, Scenario, Source, StateSpec};
use crate::error::{CliError, Result};
use crate::output::{self, Artifacts};

/// Overrides the output directory when `--out` is absent.
pub const OUT_DIR_ENV: &str = "CERTAINTY_OUT_DIR";
pub const DEFAULT_OUT_ROOT: &str = "certainty-out";

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub workers: Option<usize>,
    pub out: Option<PathBuf>,
    pub seed: Option<u64>,
}

enum Model {
    Lattice {
        sys: LatticeSystem,
        gate: Option<CovarianceGate>,
    },
    Rotor {
        sys: RotorSystem,
        gate: Option<CovarianceGate>,
    },
    Spin {
        sys: SpinSystem,
        h: HermitianOperator<f64>,
    },
    Rabi {
        drive: RabiDrive,
    },
}

impl Model {
    fn dim(&self) -> usize {
        match self {
            Model::Lattice { sys, .. } => sys.sites(),
            Model::Rotor { sys, .. } => sys.dim(),
            Model::Spin { sys, .. } => sys.dim(),
            Model::Rabi { .. } => 2,
        }
    }

    fn scale(&self) -> PlanckScale {
        match self {
            Model::Lattice { sys, .. } => sys.scale(),
            Model::Rotor { sys, .. } => sys.scale(),
            Model::Spin { sys, .. } => sys.scale(),
            Model::Rabi { drive } => drive.scale,
        }
    }

    fn driven(&self) -> DrivenHamiltonian {
        match self {
            Model::Spin { h, .. } => DrivenHamiltonian::constant(h.clone()),
            Model::Rabi { drive } => drive.hamiltonian(),
            _ => unreachable!("validated: time relations only on spin and rabi models"),
        }
    }
}

pub struct PreparedState {
    pub label: String,
    /// Family parameter (packet separation), if any.
    pub parameter: Option<f64>,
    pub psi: StateVector,
}

pub struct Prepared {
    pub scenario: Scenario,
    model: Model,
    pub states: Vec<PreparedState>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseRecord {
    pub case: usize,
    pub state: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parameter: Option<f64>,
    #[serde(flatten)]
    pub report: RelationReport,
}

#[derive(Clone, Debug)]
pub struct SummaryRow {
    pub relation_id: String,
    pub cases: usize,
    pub pass: usize,
    pub fail: usize,
    pub inapplicable: usize,
    pub degenerate: usize,
    /// Over counted cases (pass or fail); `None` if there are none.
    pub min_slack: Option<f64>,
    pub worst_case: Option<usize>,
    pub min_ratio: Option<f64>,
    pub max_ratio: Option<f64>,
    pub wall_ms: f64,
}

pub struct Outcome {
    pub out_dir: PathBuf,
    pub summary: Vec<SummaryRow>,
}

impl Outcome {
    pub fn failures(&self) -> usize {
        self.summary.iter().map(|r| r.fail).sum()
    }
}

fn polarization(p: PolarizationSpec) -> Polarization {
    match p {
        PolarizationSpec::Linear => Polarization::Linear,
        PolarizationSpec::Circular => Polarization::Circular,
    }
}

/// Parses, validates and prepares everything a run needs; nothing is
/// written.
pub fn prepare(config: &Path, seed: Option<u64>) -> Result<Prepared> {
    let src = Source::read(config)?;
    let mut scenario = src.parse()?;
    if let Some(s) = seed {
        scenario.seed = s;
    }
    let scale = PlanckScale::new(scenario.hbar).map_err(|e| src.error_at("\"hbar\"", e.to_string()))?;
    let wants = |id: &str| scenario.relations.iter().any(|r| r.id == id);
    let model = match &scenario.model {
        ModelSpec::Lattice { sites, length } => {
            let sys = make_lattice(*sites, *length, scale).map_err(|e| src.error_at("\"sites\"", e.to_string()))?;
            let gate = if wants("uncertainty_xp") { Some(sys.covariance_gate()?) } else { None };
            Model::Lattice { sys, gate }
        }
        ModelSpec::Rotor { m_max } => {
            let sys = make_rotor(*m_max, scale).map_err(|e| src.error_at("\"m_max\"", e.to_string()))?;
            let gate = if wants("uncertainty_angle") { Some(sys.covariance_gate()?) } else { None };
            Model::Rotor { sys, gate }
        }
        ModelSpec::Spin { j, field } => {
            let sys = make_spin(*j, scale).map_err(|e| src.error_at("\"j\"", e.to_string()))?;
            let h = sys.along(*field).map_err(|e| src.error_at("\"field\"", e.to_string()))?;
            Model::Spin { sys, h }
        }
        ModelSpec::Rabi {
            rabi,
            drive,
            detuning,
            polarization: p,
        } => {
            let drive = make_rabi(*rabi, *drive, *detuning, polarization(*p), scale)
                .map_err(|e| src.error_at("\"rabi\"", e.to_string()))?;
            Model::Rabi { drive }
        }
    };
    let mut states = Vec::new();
    let mut random_index = 0usize;
    for (si, st) in scenario.states.iter().enumerate() {
        let kind = st.kind();
        let anchor = format!("\"{kind}\"");
        let bad = |e: certainty_core::Error| src.error_at(&anchor, format!("state {si} ({kind}): {e}"));
        let single = |psi: StateVector| PreparedState {
            label: format!("{kind}_{si}"),
            parameter: None,
            psi,
        };
        match (st, &model) {
            (StateSpec::Gaussian { x0, p0, sigma }, Model::Lattice { sys, .. }) => {
                states.push(single(sys.gaussian_packet(*x0, *p0, *sigma).map_err(bad)?));
            }
            (
                StateSpec::Bimodal {
                    x0,
                    sigma,
                    separations,
                    weight,
                },
                Model::Lattice { sys, .. },
            ) => {
                for (k, &d) in separations.iter().enumerate() {
                    states.push(PreparedState {
                        label: format!("{kind}_{si}_{k}"),
                        parameter: Some(d),
                        psi: sys.bimodal_packet(*x0, *sigma, d, *weight).map_err(bad)?,
                    });
                }
            }
            (StateSpec::PlaneWave { mode }, Model::Lattice { sys, .. }) => {
                states.push(single(sys.plane_wave(*mode).map_err(bad)?));
            }
            (StateSpec::Eigenstate { m }, Model::Rotor { sys, .. }) => {
                states.push(single(sys.eigenstate(*m).map_err(bad)?));
            }
            (StateSpec::Superposition { terms }, Model::Rotor { sys, .. }) => {
                let terms: Vec<(i64, Complex64)> =
                    terms.iter().map(|&(m, re, im)| (m, Complex64::new(re, im))).collect();
                states.push(single(sys.superposition(&terms).map_err(bad)?));
            }
            (StateSpec::VonMises { phi0, kappa }, Model::Rotor { sys, .. }) => {
                states.push(single(sys.von_mises_packet(*phi0, *kappa).map_err(bad)?));
            }
            (StateSpec::Coherent { theta, phi }, Model::Spin { sys, .. }) => {
                states.push(single(sys.coherent_state(*theta, *phi).map_err(bad)?));
            }
            (StateSpec::Ground {}, Model::Rabi { drive }) => states.push(single(drive.ground_state())),
            (StateSpec::Excited {}, Model::Rabi { drive }) => states.push(single(drive.excited_state())),
            (StateSpec::Random { count }, m) => {
                for k in 0..*count {
                    let mut rng = seeded_rng(task_seed(scenario.seed, random_index));
                    random_index += 1;
                    states.push(PreparedState {
                        label: format!("random_{si}_{k}"),
                        parameter: None,
                        psi: random_state(&mut rng, m.dim()).map_err(bad)?,
                    });
                }
            }
            _ => unreachable!("validated: state kind matches model"),
        }
    }
    Ok(Prepared { scenario, model, states })
}

fn default_cap(h0: &HermitianOperator<f64>, psi: &StateVector, hbar: f64) -> certainty_core::Result<f64> {
    let dh = std_dev(h0, psi)?;
    let norm = h0.matrix().max_abs();
    Ok(if dh > 1e-12 * norm.max(1.0) {
        DEFAULT_CAP_FACTOR * hbar / dh
    } else if norm > 0.0 {
        DEFAULT_CAP_FACTOR * hbar / norm
    } else {
        DEFAULT_CAP_FACTOR
    })
}

/// Driven-relation horizon and step for one starting state.
fn driven_grid(model: &Model, rel: &RelationSpec, psi: &StateVector) -> certainty_core::Result<(f64, f64)> {
    let cap = match rel.cap {
        Some(c) => c,
        None => default_cap(&model.driven().at(0.0)?, psi, model.scale().hbar())?,
    };
    Ok((cap, rel.dt.unwrap_or(cap * 1e-4)))
}

impl Prepared {
    pub fn case_count(&self) -> usize {
        self.states.len() * self.scenario.relations.len()
    }

    fn evaluate(&self, state: &PreparedState, rel: &RelationSpec) -> certainty_core::Result<RelationReport> {
        let psi = &state.psi;
        let q = rel.q.unwrap_or_else(default_tail);
        let scale = self.model.scale();
        match (&self.model, rel.id.as_str()) {
            (Model::Lattice { sys, .. }, "kennard") => kennard(psi, sys.x(), sys.p(), scale),
            (Model::Lattice { sys, gate: Some(g) }, "uncertainty_xp") => {
                uncertainty_xp(psi, sys.x_measure(), sys.p(), scale, g, q)
            }
            (Model::Lattice { sys, .. }, "ratio_check") => Ok(ratio_check(psi, sys.x_measure(), q)?.to_report()),
            (Model::Rotor { sys, gate: Some(g) }, "uncertainty_angle") => {
                uncertainty_angle(psi, sys.phi_measure(), sys.j(), scale, g, q)
            }
            (Model::Rotor { sys, .. }, "judge") => judge(psi, sys.phi_op(), sys.j(), sys.phi_measure(), scale),
            (Model::Spin { h, .. }, "mandelshtam_tamm_closed") => {
                let mut config = CertaintyConfig::default();
                if let Some(t) = rel.threshold {
                    config.threshold = t;
                }
                mandelshtam_tamm_closed_with(psi, h, scale, rel.cap, &config)
            }
            (m, "mandelshtam_tamm_driven") => {
                let (cap, dt) = driven_grid(m, rel, psi)?;
                mandelshtam_tamm_driven(&m.driven(), psi, scale, dt, cap)
            }
            _ => unreachable!("validated: relation matches model"),
        }
    }

    /// Evaluates every (state, relation) case; ordering is by case index.
    pub fn execute(&self, workers: Option<usize>) -> Result<(Vec<CaseRecord>, Vec<SummaryRow>)> {
        let nrel = self.scenario.relations.len();
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(w) = workers {
            builder = builder.num_threads(w.max(1));
        }
        let pool = builder.build().map_err(|e| CliError::Pool(e.to_string()))?;
        let results: Vec<(CaseRecord, f64)> = pool.install(|| {
            (0..self.case_count())
                .into_par_iter()
                .map(|case| {
                    let state = &self.states[case / nrel];
                    let rel = &self.scenario.relations[case % nrel];
                    let start = Instant::now();
                    let report = self
                        .evaluate(state, rel)
                        .map_err(|source| CliError::Evaluation { case, source })?;
                    Ok((
                        CaseRecord {
                            case,
                            state: state.label.clone(),
                            parameter: state.parameter,
                            report,
                        },
                        start.elapsed().as_secs_f64() * 1e3,
                    ))
                })
                .collect::<Result<Vec<_>>>()
        })?;
        let summary = self
            .scenario
            .relations
            .iter()
            .map(|rel| summarize(&rel.id, results.iter().filter(|(r, _)| r.report.relation_id == rel.id)))
            .collect();
        Ok((results.into_iter().map(|(r, _)| r).collect(), summary))
    }

    /// Plot data beyond the per-case table.
    pub fn curves(&self, records: &[CaseRecord]) -> Result<Vec<(String, String)>> {
        let mut out = Vec::new();
        let hbar = self.model.scale().hbar();
        match &self.model {
            Model::Lattice { .. } => {
                let find = |state: &str, id: &str| {
                    records
                        .iter()
                        .find(|r| r.state == state && r.report.relation_id == id)
                        .map(|r| &r.report)
                };
                let mut rows = Vec::new();
                for st in self.states.iter().filter(|s| s.parameter.is_some()) {
                    let (Some(k), Some(w)) = (find(&st.label, "kennard"), find(&st.label, "uncertainty_xp")) else {
                        continue;
                    };
                    let dx = k.number("std_dev_x").unwrap_or(f64::NAN);
                    let width = w.number("width").unwrap_or(f64::NAN);
                    rows.push(vec![
                        st.label.clone(),
                        output::num(st.parameter.unwrap_or(f64::NAN)),
                        output::num(k.lhs),
                        output::num(w.lhs),
                        output::num(dx),
                        output::num(width),
                        output::num(hbar / (2.0 * dx)),
                        output::num(hbar / width),
                        output::num(k.number("std_dev_p").unwrap_or(f64::NAN)),
                    ]);
                }
                if !rows.is_empty() {
                    let header = "state,separation,kennard_lhs,interval_lhs,std_dev_x,width,kennard_p_bound,interval_p_bound,std_dev_p";
                    out.push(("separation_sweep.csv".to_owned(), output::csv(header, &rows)));
                }
            }
            Model::Spin { h, .. } => {
                let vals = h.eigensystem()?.values();
                let span = vals[vals.len() - 1] - vals[0];
                if span > 0.0 {
                    // one full period of the angle for the extreme eigenvalues
                    let period = 2.0 * std::f64::consts::PI * hbar / span;
                    let params: Vec<f64> = (0..=200).map(|k| period * k as f64 / 200.0).collect();
                    let mut rows = Vec::new();
                    for st in &self.states {
                        for s in orbit_trace(h, &st.psi, self.model.scale(), &params)? {
                            rows.push(vec![st.label.clone(), output::num(s.t), output::num(s.angle)]);
                        }
                    }
                    out.push(("orbit_trace.csv".to_owned(), output::csv("state,s,angle", &rows)));
                }
            }
            Model::Rabi { .. } => {
                if let Some(rel) = self.scenario.relations.iter().find(|r| r.id == "mandelshtam_tamm_driven") {
                    let h = self.model.driven();
                    let mut rows = Vec::new();
                    for st in &self.states {
                        let (cap, dt) = driven_grid(&self.model, rel, &st.psi)?;
                        let traj = propagate_driven(&h, &st.psi, 0.0, cap, dt, self.model.scale())?;
                        let stride = (traj.times.len() / 400).max(1);
                        for (t, psi) in traj.times.iter().zip(&traj.states).step_by(stride) {
                            rows.push(vec![
                                st.label.clone(),
                                output::num(*t),
                                output::num(quantum_angle(&st.psi, psi)?),
                                output::num(psi.amplitudes()[0].norm_sqr()),
                            ]);
                        }
                    }
                    out.push(("driven_trace.csv".to_owned(), output::csv("state,t,angle,excited_population", &rows)));
                }
            }
            Model::Rotor { .. } => {}
        }
        Ok(out)
    }
}

fn summarize<'a>(id: &str, cases: impl Iterator<Item = &'a (CaseRecord, f64)>) -> SummaryRow {
    let mut row = SummaryRow {
        relation_id: id.to_owned(),
        cases: 0,
        pass: 0,
        fail: 0,
        inapplicable: 0,
        degenerate: 0,
        min_slack: None,
        worst_case: None,
        min_ratio: None,
        max_ratio: None,
        wall_ms: 0.0,
    };
    for (rec, ms) in cases {
        let r = &rec.report;
        row.cases += 1;
        row.wall_ms += ms;
        match r.status {
            Status::Pass => row.pass += 1,
            Status::Fail => row.fail += 1,
            Status::Inapplicable => row.inapplicable += 1,
            Status::Degenerate => row.degenerate += 1,
        }
        if matches!(r.status, Status::Pass | Status::Fail) {
            if row.min_slack.is_none_or(|s| r.slack < s) {
                row.min_slack = Some(r.slack);
                row.worst_case = Some(rec.case);
            }
            if r.rhs.is_finite() && r.rhs > 0.0 {
                let ratio = r.lhs / r.rhs;
                row.min_ratio = Some(row.min_ratio.map_or(ratio, |m| m.min(ratio)));
                row.max_ratio = Some(row.max_ratio.map_or(ratio, |m| m.max(ratio)));
            }
        }
    }
    row
}

/// Output directory: `--out`, then the environment, then the config, then
/// `certainty-out/<scenario id>`.
pub fn resolve_out_dir(cli: Option<&Path>, scenario: &Scenario) -> PathBuf {
    if let Some(p) = cli {
        return p.to_path_buf();
    }
    if let Some(p) = std::env::var_os(OUT_DIR_ENV).filter(|v| !v.is_empty()) {
        return PathBuf::from(p);
    }
    if let Some(p) = &scenario.output_dir {
        return p.clone();
    }
    Path::new(DEFAULT_OUT_ROOT).join(&scenario.id)
}

pub fn run(config: &Path, opts: &RunOptions) -> Result<Outcome> {
    let prepared = prepare(config, opts.seed)?;
    let (records, summary) = prepared.execute(opts.workers)?;
    let curves = prepared.curves(&records)?;
    let out_dir = resolve_out_dir(opts.out.as_deref(), &prepared.scenario);
    let artifacts = Artifacts::assemble(&prepared.scenario, &records, &summary, curves)?;
    artifacts.write(&out_dir)?;
    Ok(Outcome { out_dir, summary })
}
