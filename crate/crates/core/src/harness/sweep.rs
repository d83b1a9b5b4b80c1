use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Result, TGraphError};
use crate::formulas::{
    predict_bipartite, predict_components_2gen, predict_components_cyclic,
    predict_components_dihedral, predict_edges_dihedral, predict_isolated_free,
    predict_structure_corollaries, threshold_general, Prediction,
};
use crate::Limits;

use super::claims::{ClaimInstance, ClaimValues, GroundTruth, Status};

/// Claims that can be swept, with their command-line names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimKind {
    /// Parity rule for two generators below the general threshold.
    TwoGenerator,
    /// Edge counts on bounds (2, n).
    DihedralEdges,
    /// Component characterization on bounds (2, n).
    DihedralComponents,
    /// Odd n, t = (n+1)/2: cycle structure and chromatic number.
    OddCycles,
    /// Even n, t = n/2 + 1: two isomorphic paths.
    EvenPaths,
    /// t = n: 2(n-1) components.
    NGraph,
    /// 2-chromatic regimes on bounds (2, n).
    TwoChromatic,
    /// 1-graph of bounds (2, n) is bipartite.
    Ladder,
    /// Odd t below the general threshold is bipartite.
    OddBipartite,
    /// Cyclic groups: k = t, or m once edgeless.
    Cyclic,
    /// Multiples of a divisor t of m form one component.
    Subgroup,
    /// No isolated vertices iff t <= ceil((m+n-2)/2). Not pinned: known false.
    IsolatedLemma,
}

impl ClaimKind {
    pub const ALL: [ClaimKind; 12] = [
        ClaimKind::TwoGenerator,
        ClaimKind::DihedralEdges,
        ClaimKind::DihedralComponents,
        ClaimKind::OddCycles,
        ClaimKind::EvenPaths,
        ClaimKind::NGraph,
        ClaimKind::TwoChromatic,
        ClaimKind::Ladder,
        ClaimKind::OddBipartite,
        ClaimKind::Cyclic,
        ClaimKind::Subgroup,
        ClaimKind::IsolatedLemma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClaimKind::TwoGenerator => "t2",
            ClaimKind::DihedralEdges => "t3",
            ClaimKind::DihedralComponents => "t5",
            ClaimKind::OddCycles => "t7",
            ClaimKind::EvenPaths => "paths",
            ClaimKind::NGraph => "ngraph",
            ClaimKind::TwoChromatic => "2chrom",
            ClaimKind::Ladder => "e2",
            ClaimKind::OddBipartite => "t6",
            ClaimKind::Cyclic => "cyclic",
            ClaimKind::Subgroup => "subgroup",
            ClaimKind::IsolatedLemma => "isolated-lemma",
        }
    }

    /// Pinned claims must match everywhere; a mismatch means this crate is
    /// wrong. Unpinned mismatches are findings about the claim.
    pub fn is_pinned(self) -> bool {
        !matches!(self, ClaimKind::IsolatedLemma)
    }
}

impl fmt::Display for ClaimKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClaimKind {
    type Err = TGraphError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let alias = match s.as_str() {
            "edges" => "t3",
            "isolated" => "isolated-lemma",
            other => other,
        };
        ClaimKind::ALL
            .into_iter()
            .find(|k| k.name() == alias)
            .ok_or_else(|| TGraphError::Parse {
                input: s.clone(),
                reason: format!(
                    "unknown claim; expected one of {}",
                    ClaimKind::ALL.map(ClaimKind::name).join(", ")
                ),
            })
    }
}

/// Sweep ranges. Unset fields fall back to per-claim defaults.
#[derive(Debug, Clone, Default)]
pub struct SweepConfig {
    /// Upper end for `n` (two-row families) or `max(m, n)` (grids).
    pub n_max: Option<u32>,
    /// Upper end for `m` where the claim ranges over it.
    pub m_max: Option<u32>,
    /// Worker threads; `None` uses the ambient rayon pool.
    pub workers: Option<usize>,
    pub limits: Limits,
}

impl SweepConfig {
    fn range(&self, default: u32) -> u32 {
        self.n_max.unwrap_or(default)
    }

    fn m_range(&self, default: u32) -> u32 {
        self.m_max.or(self.n_max).unwrap_or(default)
    }
}

/// A sweep's instances plus tallies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub claim: String,
    pub pinned: bool,
    pub instances: usize,
    #[serde(rename = "match")]
    pub matched: usize,
    pub mismatch: usize,
    pub not_applicable: usize,
    pub mismatches: Vec<ClaimInstance>,
}

impl SweepSummary {
    pub fn from_instances(claim: &str, pinned: bool, instances: &[ClaimInstance]) -> Self {
        let count = |s: Status| instances.iter().filter(|i| i.status == s).count();
        SweepSummary {
            claim: claim.to_string(),
            pinned,
            instances: instances.len(),
            matched: count(Status::Match),
            mismatch: count(Status::Mismatch),
            not_applicable: count(Status::NotApplicable),
            mismatches: instances
                .iter()
                .filter(|i| i.status == Status::Mismatch)
                .cloned()
                .collect(),
        }
    }

    /// False only for a pinned claim with mismatches.
    pub fn passes(&self) -> bool {
        !self.pinned || self.mismatch == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

// A parameter point and the predictions to check there.
struct Point {
    bounds: Vec<u32>,
    t: u32,
    predictions: Vec<Prediction>,
    subgroup: bool,
}

fn points(kind: ClaimKind, cfg: &SweepConfig) -> Result<Vec<Point>> {
    let mut out = Vec::new();
    let mut push = |bounds: Vec<u32>, t: u32, predictions: Vec<Prediction>| {
        out.push(Point {
            bounds,
            t,
            predictions,
            subgroup: false,
        })
    };
    match kind {
        ClaimKind::TwoGenerator => {
            let top = cfg.range(15);
            for m in 2..=cfg.m_range(top) {
                for n in 2..=top {
                    for t in 1..=threshold_general(m, n) {
                        push(vec![m, n], t, vec![predict_components_2gen(m, n, t)?]);
                    }
                }
            }
        }
        ClaimKind::DihedralEdges => {
            for n in 2..=cfg.range(50) {
                for t in 1..=n {
                    push(vec![2, n], t, vec![predict_edges_dihedral(n, t)?]);
                }
            }
        }
        ClaimKind::DihedralComponents => {
            for n in 2..=cfg.range(50) {
                for t in 1..=n {
                    push(vec![2, n], t, vec![predict_components_dihedral(n, t)?]);
                }
            }
        }
        ClaimKind::OddCycles => {
            for n in (5..=cfg.range(31)).step_by(2) {
                let t = n.div_ceil(2);
                let preds = predict_structure_corollaries(n, t)?
                    .into_iter()
                    .filter(|p| p.claim_id.starts_with("C-T7"))
                    .collect();
                push(vec![2, n], t, preds);
            }
        }
        ClaimKind::EvenPaths => {
            for n in (2..=cfg.range(50)).step_by(2) {
                let t = n / 2 + 1;
                let preds = predict_structure_corollaries(n, t)?
                    .into_iter()
                    .filter(|p| p.claim_id == "C-paths")
                    .collect();
                push(vec![2, n], t, preds);
            }
        }
        ClaimKind::NGraph => {
            for n in 2..=cfg.range(50) {
                let preds = predict_structure_corollaries(n, n)?
                    .into_iter()
                    .filter(|p| p.claim_id == "C-ngraph")
                    .collect();
                push(vec![2, n], n, preds);
            }
        }
        ClaimKind::TwoChromatic => {
            for n in 2..=cfg.range(30) {
                for t in 1..=n {
                    let preds = predict_structure_corollaries(n, t)?
                        .into_iter()
                        .filter(|p| p.claim_id == "C-2chrom")
                        .collect();
                    push(vec![2, n], t, preds);
                }
            }
        }
        ClaimKind::Ladder => {
            for n in 2..=cfg.range(50) {
                push(vec![2, n], 1, vec![predict_bipartite(2, n, 1)?]);
            }
        }
        ClaimKind::OddBipartite => {
            let top = cfg.range(12);
            for m in 2..=cfg.m_range(top) {
                for n in 2..=top {
                    for t in (1..=threshold_general(m, n)).step_by(2) {
                        push(vec![m, n], t, vec![predict_bipartite(m, n, t)?]);
                    }
                }
            }
        }
        ClaimKind::Cyclic => {
            for m in 2..=cfg.range(64) {
                for t in 1..=m + 1 {
                    push(vec![m], t, vec![predict_components_cyclic(m, t)?]);
                }
            }
        }
        ClaimKind::Subgroup => {
            for m in 2..=cfg.range(60) {
                for t in (1..=m).filter(|t| m % t == 0) {
                    out.push(Point {
                        bounds: vec![m],
                        t,
                        predictions: Vec::new(),
                        subgroup: true,
                    });
                }
            }
        }
        ClaimKind::IsolatedLemma => {
            let top = cfg.range(12);
            for m in 2..=cfg.m_range(top) {
                for n in 2..=top {
                    for t in 1..=m + n - 2 {
                        push(vec![m, n], t, vec![predict_isolated_free(m, n, t)?]);
                    }
                }
            }
        }
    }
    Ok(out)
}

// {0, t, 2t, ...} is exactly the component of 0 and induces a path on it.
fn check_subgroup(gt: &GroundTruth, m: u32, t: u32) -> Result<ClaimInstance> {
    let multiples: Vec<usize> = (0..m as usize).step_by(t as usize).collect();
    let component_of_zero = &gt.components[0].vertices;
    let induced = gt.graph.induced_subgraph(&multiples)?;
    let holds = *component_of_zero == multiples && induced.is_path_in_order(&multiples);
    let predicted = ClaimValues {
        subgroup_component: Some(true),
        ..Default::default()
    };
    let observed = ClaimValues {
        subgroup_component: Some(holds),
        ..Default::default()
    };
    Ok(ClaimInstance::compare(
        "subgroup",
        vec![m],
        t,
        predicted,
        observed,
    ))
}

fn evaluate(point: &Point, limits: &Limits) -> Result<Vec<ClaimInstance>> {
    let gt = GroundTruth::build(&point.bounds, point.t, limits)?;
    if point.subgroup {
        return Ok(vec![check_subgroup(&gt, point.bounds[0], point.t)?]);
    }
    Ok(point.predictions.iter().map(|p| gt.check(p)).collect())
}

/// Evaluates `kind` over its parameter range. The instance list is sorted by
/// parameters, so output does not depend on worker count.
pub fn verify_claim_sweep(
    kind: ClaimKind,
    cfg: &SweepConfig,
) -> Result<(Vec<ClaimInstance>, SweepSummary)> {
    let pts = points(kind, cfg)?;
    if let Some(largest) = pts
        .iter()
        .map(|p| p.bounds.iter().map(|&e| u64::from(e)).product::<u64>())
        .max()
    {
        if largest > cfg.limits.max_elements {
            return Err(TGraphError::size(
                "element count",
                largest,
                cfg.limits.max_elements,
            ));
        }
    }
    let run = || -> Result<Vec<ClaimInstance>> {
        let nested = pts
            .par_iter()
            .map(|p| evaluate(p, &cfg.limits))
            .collect::<Result<Vec<_>>>()?;
        Ok(nested.into_iter().flatten().collect())
    };
    let mut instances = match cfg.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .map_err(|e| TGraphError::InvalidArgument(format!("thread pool: {e}")))?
            .install(run)?,
        None => run()?,
    };
    instances.sort_by_key(ClaimInstance::sort_key);
    let summary = SweepSummary::from_instances(kind.name(), kind.is_pinned(), &instances);
    Ok((instances, summary))
}
