use std::fmt;

use serde::Serialize;

use crate::analysis::checked_nullity;
use crate::analysis::{
    box_symmetry_witness, chromatic_number_with_cap, classify_components,
    components_isomorphic_with_cap, is_bipartite, laplacian_with_cap, ComponentClassification,
    ComponentKind,
};
use crate::error::{Result, TGraphError};
use crate::formulas::Prediction;
use crate::graph::{build_tgraph, TGraph};
use crate::presentation::GeneratorBounds;
use crate::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Status {
    #[serde(rename = "MATCH")]
    Match,
    #[serde(rename = "MISMATCH")]
    Mismatch,
    #[serde(rename = "NOT_APPLICABLE")]
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Match => "MATCH",
            Status::Mismatch => "MISMATCH",
            Status::NotApplicable => "NOT_APPLICABLE",
        })
    }
}

/// The comparable quantities of a claim. Only fields that the claim
/// predicts are filled, on both the predicted and the observed side.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ClaimValues {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edges: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bipartite: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub isolated_free: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structure: Option<Vec<ComponentKind>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub isomorphic: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subgroup_component: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<u32>,
}

impl ClaimValues {
    pub fn is_empty(&self) -> bool {
        *self == ClaimValues::default()
    }
}

impl From<&Prediction> for ClaimValues {
    fn from(p: &Prediction) -> Self {
        ClaimValues {
            k: p.predicted_k,
            edges: p.predicted_edge_count,
            chi: p.predicted_chi,
            bipartite: p.predicted_bipartite,
            isolated_free: p.predicted_isolated_free,
            structure: p.predicted_structure.clone(),
            isomorphic: p.predicted_isomorphic,
            subgroup_component: None,
            value: None,
        }
    }
}

/// Compact rendering used in CSV cells, e.g. `k=2 chi=3`.
impl fmt::Display for ClaimValues {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if let Some(v) = self.value {
            parts.push(v.to_string());
        }
        if let Some(k) = self.k {
            parts.push(format!("k={k}"));
        }
        if let Some(e) = self.edges {
            parts.push(format!("edges={e}"));
        }
        if let Some(c) = self.chi {
            parts.push(format!("chi={c}"));
        }
        if let Some(b) = self.bipartite {
            parts.push(format!("bipartite={b}"));
        }
        if let Some(b) = self.isolated_free {
            parts.push(format!("isolated_free={b}"));
        }
        if let Some(s) = &self.structure {
            parts.push(format!("shape={}", render_shapes(s)));
        }
        if let Some(b) = self.isomorphic {
            parts.push(format!("isomorphic={b}"));
        }
        if let Some(b) = self.subgroup_component {
            parts.push(format!("subgroup_component={b}"));
        }
        f.write_str(&parts.join(" "))
    }
}

/// `path(4)x2+isolated x4`
pub fn render_shapes(shapes: &[ComponentKind]) -> String {
    let mut groups: Vec<(ComponentKind, usize)> = Vec::new();
    for s in shapes {
        match groups.last_mut() {
            Some((kind, count)) if kind == s => *count += 1,
            _ => groups.push((*s, 1)),
        }
    }
    groups
        .iter()
        .map(|(kind, count)| {
            if *count == 1 {
                kind.to_string()
            } else {
                format!("{kind}x{count}")
            }
        })
        .collect::<Vec<_>>()
        .join("+")
}

/// A claim evaluated at one parameter point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimInstance {
    pub claim_id: String,
    pub bounds: Vec<u32>,
    pub t: u32,
    /// Extra coordinates, e.g. the table cell of a distance entry.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub predicted: ClaimValues,
    pub observed: ClaimValues,
    pub status: Status,
}

impl ClaimInstance {
    pub fn compare(
        claim_id: impl Into<String>,
        bounds: Vec<u32>,
        t: u32,
        predicted: ClaimValues,
        observed: ClaimValues,
    ) -> Self {
        let status = if predicted == observed {
            Status::Match
        } else {
            Status::Mismatch
        };
        ClaimInstance {
            claim_id: claim_id.into(),
            bounds,
            t,
            detail: None,
            predicted,
            observed,
            status,
        }
    }

    pub fn not_applicable(claim_id: impl Into<String>, bounds: Vec<u32>, t: u32) -> Self {
        ClaimInstance {
            claim_id: claim_id.into(),
            bounds,
            t,
            detail: None,
            predicted: ClaimValues::default(),
            observed: ClaimValues::default(),
            status: Status::NotApplicable,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    /// Ordering key for deterministic reports.
    pub fn sort_key(&self) -> (Vec<u32>, u32, String, Option<String>) {
        (
            self.bounds.clone(),
            self.t,
            self.claim_id.clone(),
            self.detail.clone(),
        )
    }
}

/// A built graph plus its brute-force facts, computed on demand. Building
/// one always runs the union-find vs. Laplacian nullity cross-check.
pub struct GroundTruth {
    pub graph: TGraph,
    pub components: Vec<ComponentClassification>,
    limits: Limits,
}

impl GroundTruth {
    pub fn build(bounds: &[u32], t: u32, limits: &Limits) -> Result<Self> {
        let b = GeneratorBounds::with_cap(bounds.to_vec(), limits.max_elements)?;
        let graph = build_tgraph(&b, t)?;
        let components = classify_components(&graph);
        let l = laplacian_with_cap(&graph, limits.spectral_cap)?;
        let (nullity, _) = checked_nullity(&l, components.len(), limits.exact_rank_cap);
        if nullity != components.len() {
            return Err(TGraphError::OracleDivergence {
                bounds: bounds.to_vec(),
                t,
                union_find: components.len(),
                nullity,
            });
        }
        Ok(GroundTruth {
            graph,
            components,
            limits: *limits,
        })
    }

    pub fn k(&self) -> usize {
        self.components.len()
    }

    pub fn isolated_count(&self) -> usize {
        self.components
            .iter()
            .filter(|c| c.kind == ComponentKind::Isolated)
            .count()
    }

    pub fn shapes(&self) -> Vec<ComponentKind> {
        let mut s: Vec<ComponentKind> = self.components.iter().map(|c| c.kind).collect();
        s.sort();
        s
    }

    /// Exact when every non-bipartite component fits the coloring cap;
    /// `None` otherwise.
    pub fn chi(&self) -> Option<usize> {
        match chromatic_number_with_cap(&self.graph, self.limits.chromatic_component_cap) {
            Ok(chi) => Some(chi),
            Err(_) if is_bipartite(&self.graph).is_bipartite() => {
                Some(if self.graph.edge_count() == 0 { 1 } else { 2 })
            }
            Err(_) => None,
        }
    }

    /// Are the non-isolated components pairwise isomorphic? `None` when the
    /// question could not be decided within the matcher cap.
    pub fn nontrivial_components_isomorphic(&self) -> Option<bool> {
        let blocks: Vec<&ComponentClassification> = self
            .components
            .iter()
            .filter(|c| c.kind != ComponentKind::Isolated)
            .collect();
        let Some(first) = blocks.first() else {
            return Some(true);
        };
        for other in &blocks[1..] {
            if box_symmetry_witness(&self.graph, &first.vertices, &other.vertices).is_some() {
                continue;
            }
            match components_isomorphic_with_cap(
                &self.graph,
                &first.vertices,
                &other.vertices,
                self.limits.isomorphism_cap,
            ) {
                Ok(true) => {}
                Ok(false) => return Some(false),
                Err(_) => return None,
            }
        }
        Some(true)
    }

    /// Fills exactly the fields present in `predicted`.
    pub fn observe(&self, predicted: &ClaimValues) -> ClaimValues {
        let mut o = ClaimValues::default();
        if predicted.k.is_some() {
            o.k = Some(self.k());
        }
        if predicted.edges.is_some() {
            o.edges = Some(self.graph.edge_count());
        }
        if predicted.chi.is_some() {
            o.chi = self.chi();
        }
        if predicted.bipartite.is_some() {
            o.bipartite = Some(is_bipartite(&self.graph).is_bipartite());
        }
        if predicted.isolated_free.is_some() {
            o.isolated_free = Some(self.isolated_count() == 0);
        }
        if predicted.structure.is_some() {
            o.structure = Some(self.shapes());
        }
        if predicted.isomorphic.is_some() {
            o.isomorphic = self.nontrivial_components_isomorphic();
        }
        o
    }

    /// Compares one prediction against this graph.
    pub fn check(&self, p: &Prediction) -> ClaimInstance {
        if !p.applicable {
            return ClaimInstance::not_applicable(&p.claim_id, p.bounds.clone(), p.t);
        }
        let predicted = ClaimValues::from(p);
        let observed = self.observe(&predicted);
        ClaimInstance::compare(&p.claim_id, p.bounds.clone(), p.t, predicted, observed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::{predict_components_dihedral, predict_isolated_free};

    #[test]
    fn match_and_mismatch() {
        let gt = GroundTruth::build(&[2, 6], 5, &Limits::default()).unwrap();
        let inst = gt.check(&predict_components_dihedral(6, 5).unwrap());
        assert_eq!(inst.status, Status::Match);
        assert_eq!(inst.observed.k, Some(6));

        let gt = GroundTruth::build(&[2, 4], 3, &Limits::default()).unwrap();
        let inst = gt.check(&predict_isolated_free(2, 4, 3).unwrap());
        assert_eq!(inst.status, Status::Mismatch);
        assert_eq!(inst.predicted.isolated_free, Some(false));
        assert_eq!(inst.observed.isolated_free, Some(true));
    }

    #[test]
    fn render() {
        let v = ClaimValues {
            k: Some(6),
            structure: Some(vec![
                ComponentKind::Isolated,
                ComponentKind::Isolated,
                ComponentKind::Path(2),
                ComponentKind::Path(2),
            ]),
            ..Default::default()
        };
        assert_eq!(v.to_string(), "k=6 shape=isolatedx2+path(2)x2");
    }
}
