use std::fmt;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{box_symmetry_witness, components_isomorphic_with_cap};
use crate::error::{Result, TGraphError};
use crate::formulas::{threshold_dihedral, threshold_general};

use super::claims::GroundTruth;
use super::sweep::SweepConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConjectureStatus {
    /// Every instance checked agrees.
    Supported,
    /// At least one counterexample.
    Refuted,
    /// No counterexample, but some instance could not be decided.
    Undecided,
    /// No predicate to test; the scan only emits data.
    Exploratory,
}

impl fmt::Display for ConjectureStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConjectureStatus::Supported => "supported",
            ConjectureStatus::Refuted => "refuted",
            ConjectureStatus::Undecided => "undecided",
            ConjectureStatus::Exploratory => "exploratory",
        })
    }
}

/// One refuting instance, with everything needed to rebuild it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub bounds: Vec<u32>,
    pub t: u32,
    pub expected: String,
    pub observed: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub conjecture_id: u8,
    pub range: String,
    pub instances_checked: usize,
    pub counterexamples: Vec<Counterexample>,
    pub undecided: Vec<(Vec<u32>, u32)>,
    pub status: ConjectureStatus,
    /// Where the data file was written, once [`ConjectureReport::write_artifact`] ran.
    pub artifact: Option<String>,
    #[serde(skip)]
    pub csv: Option<String>,
}

impl ConjectureReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// Writes the CSV data (if any) to `path` and records the path.
    pub fn write_artifact(&mut self, path: &Path) -> Result<()> {
        if let Some(csv) = &self.csv {
            std::fs::write(path, csv)?;
            self.artifact = Some(path.display().to_string());
        }
        Ok(())
    }
}

enum Outcome {
    Holds,
    Fails { expected: String, observed: String },
    Undecided,
}

fn status_of(counterexamples: &[Counterexample], undecided: usize) -> ConjectureStatus {
    if !counterexamples.is_empty() {
        ConjectureStatus::Refuted
    } else if undecided > 0 {
        ConjectureStatus::Undecided
    } else {
        ConjectureStatus::Supported
    }
}

fn tally(
    id: u8,
    range: String,
    mut results: Vec<(Vec<u32>, u32, Outcome)>,
    exploratory: bool,
    csv: Option<String>,
) -> ConjectureReport {
    results.sort_by(|a, b| (&a.0, a.1).cmp(&(&b.0, b.1)));
    let mut counterexamples = Vec::new();
    let mut undecided = Vec::new();
    let checked = results.len();
    for (bounds, t, outcome) in results {
        match outcome {
            Outcome::Holds => {}
            Outcome::Fails { expected, observed } => counterexamples.push(Counterexample {
                bounds,
                t,
                expected,
                observed,
            }),
            Outcome::Undecided => undecided.push((bounds, t)),
        }
    }
    let status = if exploratory {
        ConjectureStatus::Exploratory
    } else {
        status_of(&counterexamples, undecided.len())
    };
    ConjectureReport {
        conjecture_id: id,
        range,
        instances_checked: checked,
        counterexamples,
        undecided,
        status,
        artifact: None,
        csv,
    }
}

fn run_points<F>(
    cfg: &SweepConfig,
    pts: Vec<(Vec<u32>, u32)>,
    f: F,
) -> Result<Vec<(Vec<u32>, u32, Outcome)>>
where
    F: Fn(&GroundTruth) -> Outcome + Sync,
{
    let run = || {
        pts.par_iter()
            .map(|(b, t)| {
                let gt = GroundTruth::build(b, *t, &cfg.limits)?;
                Ok((b.clone(), *t, f(&gt)))
            })
            .collect::<Result<Vec<_>>>()
    };
    match cfg.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .map_err(|e| TGraphError::InvalidArgument(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    }
}

// Even m, even t <= threshold: the two components are isomorphic.
fn conjecture_1(cfg: &SweepConfig) -> Result<ConjectureReport> {
    let m_max = cfg.m_max.unwrap_or(6);
    let n_max = cfg.n_max.unwrap_or(12);
    let mut pts = Vec::new();
    for m in (2..=m_max).step_by(2) {
        for n in 2..=n_max {
            for t in (2..=threshold_general(m, n)).step_by(2) {
                pts.push((vec![m, n], t));
            }
        }
    }
    let cap = cfg.limits.isomorphism_cap;
    let results = run_points(cfg, pts, |gt| {
        if gt.k() != 2 {
            return Outcome::Fails {
                expected: "two isomorphic components".into(),
                observed: format!("k={}", gt.k()),
            };
        }
        let (a, b) = (&gt.components[0], &gt.components[1]);
        if box_symmetry_witness(&gt.graph, &a.vertices, &b.vertices).is_some() {
            return Outcome::Holds;
        }
        match components_isomorphic_with_cap(&gt.graph, &a.vertices, &b.vertices, cap) {
            Ok(true) => Outcome::Holds,
            Ok(false) => Outcome::Fails {
                expected: "two isomorphic components".into(),
                observed: format!("non-isomorphic: {} vs {}", a.kind, b.kind),
            },
            Err(_) => Outcome::Undecided,
        }
    })?;
    let range = format!("m even in 2..={m_max}, n in 2..={n_max}, even t <= ceil((m+n-2)/2)");
    Ok(tally(1, range, results, false, None))
}

// Exploratory: component data above the threshold.
fn conjecture_2(cfg: &SweepConfig) -> Result<ConjectureReport> {
    let n_max = cfg.n_max.unwrap_or(12);
    let m_max = cfg.m_max.unwrap_or(n_max);
    let mut pts = Vec::new();
    for m in 2..=m_max {
        for n in 2..=n_max {
            for t in threshold_general(m, n) + 1..=m + n - 2 {
                pts.push((vec![m, n], t));
            }
        }
    }
    let mut rows: Vec<(u32, u32, u32, usize, usize, usize)> = pts
        .par_iter()
        .map(|(b, t)| {
            let gt = GroundTruth::build(b, *t, &cfg.limits)?;
            Ok((
                b[0],
                b[1],
                *t,
                gt.k(),
                gt.isolated_count(),
                gt.graph.edge_count(),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort();
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["m", "n", "t", "k", "isolated", "edges"])
        .map_err(|e| TGraphError::Io(e.to_string()))?;
    for r in &rows {
        w.serialize(r).map_err(|e| TGraphError::Io(e.to_string()))?;
    }
    let csv = String::from_utf8(w.into_inner().map_err(|e| TGraphError::Io(e.to_string()))?)
        .expect("csv output is utf-8");
    let results = pts
        .into_iter()
        .map(|(b, t)| (b, t, Outcome::Holds))
        .collect();
    let range = format!("m in 2..={m_max}, n in 2..={n_max}, ceil((m+n-2)/2) < t <= m+n-2");
    Ok(tally(2, range, results, true, Some(csv)))
}

// Bounds (2, n), even t <= ceil(n/2): chromatic number 3.
fn conjecture_3(cfg: &SweepConfig) -> Result<ConjectureReport> {
    let n_max = cfg.n_max.unwrap_or(20);
    let mut pts = Vec::new();
    for n in 2..=n_max {
        for t in (2..=threshold_dihedral(n)).step_by(2) {
            pts.push((vec![2, n], t));
        }
    }
    let results = run_points(cfg, pts, |gt| match gt.chi() {
        Some(3) => Outcome::Holds,
        Some(chi) => Outcome::Fails {
            expected: "chi=3".into(),
            observed: format!("chi={chi}"),
        },
        None => Outcome::Undecided,
    })?;
    let range = format!("bounds (2,n), n in 2..={n_max}, even t <= ceil(n/2)");
    Ok(tally(3, range, results, false, None))
}

// Three generators: does the two-generator parity rule carry over?
fn conjecture_4(cfg: &SweepConfig) -> Result<ConjectureReport> {
    let e_max = cfg.n_max.unwrap_or(4);
    let mut pts = Vec::new();
    for a in 2..=e_max {
        for b in 2..=e_max {
            for c in 2..=e_max {
                let threshold = (a + b + c - 3).div_ceil(2);
                for t in 1..=threshold {
                    pts.push((vec![a, b, c], t));
                }
            }
        }
    }
    let mut results = run_points(cfg, pts, |gt| {
        let want = if gt.graph.t() % 2 == 0 { 2 } else { 1 };
        if gt.k() == want {
            Outcome::Holds
        } else {
            Outcome::Fails {
                expected: format!("k={want}"),
                observed: format!("k={}", gt.k()),
            }
        }
    })?;
    results.sort_by(|a, b| (&a.0, a.1).cmp(&(&b.0, b.1)));
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["e1", "e2", "e3", "t", "k", "parity_rule"])
        .map_err(|e| TGraphError::Io(e.to_string()))?;
    for (b, t, o) in &results {
        let k = match o {
            Outcome::Fails { observed, .. } => observed.trim_start_matches("k=").to_string(),
            _ => (if t % 2 == 0 { 2 } else { 1 }).to_string(),
        };
        let verdict = if matches!(o, Outcome::Holds) {
            "holds"
        } else {
            "fails"
        };
        w.write_record([
            b[0].to_string(),
            b[1].to_string(),
            b[2].to_string(),
            t.to_string(),
            k,
            verdict.into(),
        ])
        .map_err(|e| TGraphError::Io(e.to_string()))?;
    }
    let csv = String::from_utf8(w.into_inner().map_err(|e| TGraphError::Io(e.to_string()))?)
        .expect("csv output is utf-8");
    let range = format!("bounds (e1,e2,e3) in 2..={e_max}, t <= ceil((e1+e2+e3-3)/2)");
    Ok(tally(4, range, results, true, Some(csv)))
}

/// Scans conjecture `id` (1 to 4). `n_max` and `m_max` override the default
/// ranges; for conjecture 4 `n_max` bounds each generator.
pub fn conjecture_scan(id: u8, cfg: &SweepConfig) -> Result<ConjectureReport> {
    match id {
        1 => conjecture_1(cfg),
        2 => conjecture_2(cfg),
        3 => conjecture_3(cfg),
        4 => conjecture_4(cfg),
        _ => Err(TGraphError::InvalidArgument(format!(
            "conjecture id must be 1, 2, 3 or 4, got {id}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjecture_3_small_instance() {
        let cfg = SweepConfig {
            n_max: Some(4),
            ..Default::default()
        };
        let r = conjecture_scan(3, &cfg).unwrap();
        // n=3,t=2 and n=4,t=2
        assert_eq!(r.instances_checked, 2);
        assert_eq!(r.status, ConjectureStatus::Supported);
    }

    #[test]
    fn conjecture_1_small() {
        let cfg = SweepConfig {
            n_max: Some(6),
            m_max: Some(4),
            ..Default::default()
        };
        let r = conjecture_scan(1, &cfg).unwrap();
        assert!(r.instances_checked > 0);
        assert!(r.undecided.is_empty());
    }

    #[test]
    fn exploratory_scans_emit_csv() {
        let cfg = SweepConfig {
            n_max: Some(3),
            ..Default::default()
        };
        let r = conjecture_scan(2, &cfg).unwrap();
        assert_eq!(r.status, ConjectureStatus::Exploratory);
        let csv = r.csv.unwrap();
        assert!(csv.starts_with("m,n,t,k,isolated,edges\n"));
        // t=2 on bounds (2,2) pairs up the diagonals
        assert!(csv.contains("2,2,2,2,0,2\n"));
        let r = conjecture_scan(4, &cfg).unwrap();
        assert_eq!(r.status, ConjectureStatus::Exploratory);
        assert!(r.csv.unwrap().starts_with("e1,e2,e3,t,k,parity_rule\n"));
    }

    #[test]
    fn bad_id() {
        assert!(conjecture_scan(5, &SweepConfig::default()).is_err());
    }
}
