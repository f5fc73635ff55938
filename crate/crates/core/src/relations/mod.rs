//! One evaluator per relation, each returning a [`RelationReport`].

pub mod constants;
mod interval;
pub mod report;
mod standard;
mod time;

pub use interval::{ratio_check, ratio_from_distribution, uncertainty_angle, uncertainty_xp, DoubleTriangle, RatioReport};
pub use report::{relative_tolerance, ContextValue, RelationReport, Status};
pub use standard::{
    cell_second_moments, commutator_gauge, judge, kennard, minimised_angle_moment, JUDGE_REFINE_TOLERANCE,
    JUDGE_SCAN_POINTS, KENNARD_GAUGE_MIN,
};
pub use time::{
    first_driven_crossing, mandelshtam_tamm_closed, mandelshtam_tamm_closed_with, mandelshtam_tamm_driven, DrivenCrossing, DEFAULT_CAP_FACTOR,
    GRID_HALVING_TOLERANCE,
};

/// Registry entry of a relation evaluator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RelationInfo {
    pub id: &'static str,
    pub equation: &'static str,
    pub statement: &'static str,
    pub premise: &'static str,
}

const REGISTRY: [RelationInfo; 7] = [
    RelationInfo {
        id: "judge",
        equation: "Eq. (14)",
        statement: "Δ′Φ·ΔJ ≥ (ħ/2)(1 − 3Δ′Φ²/π²)",
        premise: "angle spectrum in (−π, π]",
    },
    RelationInfo {
        id: "kennard",
        equation: "Eq. (2)",
        statement: "ΔX·ΔP ≥ ħ/2",
        premise: "commutator gauge ≥ 0.999",
    },
    RelationInfo {
        id: "mandelshtam_tamm_closed",
        equation: "Eq. (15)",
        statement: "|δt|·ΔH ≥ ħ",
        premise: "time-independent H, substantial change",
    },
    RelationInfo {
        id: "mandelshtam_tamm_driven",
        equation: "Eq. (16)",
        statement: "τ·avg ΔH(t) ≥ ħ",
        premise: "converged propagation, substantial change",
    },
    RelationInfo {
        id: "ratio_check",
        equation: "Eq. (12) ratio",
        statement: "2ΔX/δX ≥ √(1 − sin 1)",
        premise: "nonzero interval width",
    },
    RelationInfo {
        id: "uncertainty_angle",
        equation: "Eq. (13)",
        statement: "δΦ ≥ min(ħ/ΔJ, π)",
        premise: "rotation covariance at grid steps",
    },
    RelationInfo {
        id: "uncertainty_xp",
        equation: "Eq. (12)",
        statement: "δX·ΔP ≥ ħ",
        premise: "shift covariance at grid steps",
    },
];

/// All evaluators, sorted by id.
pub fn list_relations() -> &'static [RelationInfo] {
    &REGISTRY
}

pub fn relation_info(id: &str) -> Option<&'static RelationInfo> {
    REGISTRY.iter().find(|r| r.id == id)
}
