use serde::Serialize;

use crate::error::{Result, TGraphError};
use crate::graph::TGraph;
use crate::Limits;

use super::coloring::{chromatic_number_with_cap, is_bipartite};
use super::laplacian::{laplacian_nullity_with, laplacian_with_cap, NullityMethod};
use super::structure::{classify_components, ComponentClassification, ComponentKind};

/// Everything the harness compares predictions against.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub bounds: Vec<u32>,
    pub t: u32,
    pub vertices: usize,
    pub edges: usize,
    /// Union-find component count.
    pub k: usize,
    pub nullity: usize,
    pub nullity_method: NullityMethod,
    pub isolated: usize,
    pub bipartite: bool,
    /// `None` when a non-bipartite component exceeds the exact coloring cap.
    pub chi: Option<usize>,
    pub components: Vec<ComponentClassification>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    /// Non-isolated components.
    pub fn nontrivial_components(&self) -> impl Iterator<Item = &ComponentClassification> {
        self.components
            .iter()
            .filter(|c| c.kind != ComponentKind::Isolated)
    }
}

pub fn analyze(g: &TGraph) -> Result<AnalysisReport> {
    analyze_with(g, &Limits::default())
}

/// Full analysis. Fails with [`TGraphError::OracleDivergence`] if the
/// union-find count and the Laplacian nullity disagree.
pub fn analyze_with(g: &TGraph, limits: &Limits) -> Result<AnalysisReport> {
    let components = classify_components(g);
    let k = components.len();
    let l = laplacian_with_cap(g, limits.spectral_cap)?;
    let (nullity, nullity_method) = laplacian_nullity_with(&l, limits.exact_rank_cap);
    if nullity != k {
        return Err(TGraphError::OracleDivergence {
            bounds: g.bounds().as_slice().to_vec(),
            t: g.t(),
            union_find: k,
            nullity,
        });
    }
    let bipartite = is_bipartite(g).is_bipartite();
    let chi = match chromatic_number_with_cap(g, limits.chromatic_component_cap) {
        Ok(chi) => Some(chi),
        Err(TGraphError::SizeLimit { .. }) if bipartite => Some(if g.order() == 0 {
            0
        } else if g.edge_count() == 0 {
            1
        } else {
            2
        }),
        Err(TGraphError::SizeLimit { .. }) => None,
        Err(e) => return Err(e),
    };
    if let Some(chi) = chi {
        debug_assert_eq!(bipartite, chi <= 2);
    }
    let isolated = components
        .iter()
        .filter(|c| c.kind == ComponentKind::Isolated)
        .count();
    Ok(AnalysisReport {
        bounds: g.bounds().as_slice().to_vec(),
        t: g.t(),
        vertices: g.order(),
        edges: g.edge_count(),
        k,
        nullity,
        nullity_method,
        isolated,
        bipartite,
        chi,
        components,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_tgraph;
    use crate::presentation::GeneratorBounds;

    fn report(b: &[u32], t: u32) -> AnalysisReport {
        analyze(&build_tgraph(&GeneratorBounds::new(b.to_vec()).unwrap(), t).unwrap()).unwrap()
    }

    #[test]
    fn dihedral_five_t3() {
        let r = report(&[2, 5], 3);
        assert_eq!((r.k, r.chi, r.bipartite), (1, Some(2), true));
        assert_eq!(r.components[0].kind, ComponentKind::Cycle(10));
    }

    #[test]
    fn dihedral_four_t4() {
        let r = report(&[2, 4], 4);
        assert_eq!((r.k, r.nullity, r.isolated), (6, 6, 4));
    }

    #[test]
    fn cyclic_nine_t3() {
        assert_eq!(report(&[9], 3).k, 3);
    }

    #[test]
    fn json_keys() {
        let json: serde_json::Value = serde_json::from_str(&report(&[2, 4], 3).to_json()).unwrap();
        for key in ["k", "nullity", "bipartite", "chi", "components", "isolated"] {
            assert!(json.get(key).is_some(), "{key}");
        }
        assert_eq!(
            json["components"][0],
            serde_json::json!({"kind": "path", "size": 4})
        );
    }

    #[test]
    fn bipartite_fallback_beyond_coloring_cap() {
        let g = build_tgraph(&GeneratorBounds::new(vec![2, 40]).unwrap(), 1).unwrap();
        let r = analyze(&g).unwrap();
        assert_eq!(r.chi, Some(2));
        let odd = build_tgraph(&GeneratorBounds::new(vec![12, 12]).unwrap(), 2).unwrap();
        let r = analyze(&odd).unwrap();
        assert_eq!(r.chi, None);
        assert!(!r.bipartite);
    }
}
